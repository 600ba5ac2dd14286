//! Boolean functions on `n ≤ 24` inputs, symmetric constructors, Walsh–Fourier
//! analysis and the Fourier bounds on the classical approximation ratio.
//!
//! Inputs are indexed by `x = Σ x_i · 2^(i-1)`, so `x_1` is the least significant
//! bit of the index. Every truth table in the crate uses this convention.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub const MAX_ARITY: usize = 24;

/// Truth table of an `n`-input Boolean function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ARITY {
        return Err(Error::ArityOutOfRange {
            n,
            min: 1,
            max: MAX_ARITY,
        });
    }
    Ok(())
}

fn word_count(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

/// Bit vector `(x_1, …, x_n)` of input index `x`.
pub fn input_bits(x: usize, n: usize) -> Vec<bool> {
    (0..n).map(|i| (x >> i) & 1 == 1).collect()
}

/// Index of the input `(x_1, …, x_n)`.
pub fn input_index(bits: &[bool]) -> usize {
    bits.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | (usize::from(b) << i))
}

impl BooleanFunction {
    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        check_arity(n)?;
        let mut words = vec![0u64; word_count(n)];
        for x in 0..1usize << n {
            if f(x) {
                words[x >> 6] |= 1 << (x & 63);
            }
        }
        Ok(Self { n, words })
    }

    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        check_arity(n)?;
        if bits.len() != 1 << n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, got {}",
                1usize << n,
                bits.len()
            )));
        }
        Self::from_fn(n, |x| bits[x])
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    /// Fast path for the small tables used by the exact classical solver.
    pub fn from_u128(n: usize, table: u128) -> Result<Self> {
        if n > 7 {
            return Err(Error::ArityOutOfRange { n, min: 1, max: 7 });
        }
        Self::from_fn(n, |x| (table >> x) & 1 == 1)
    }

    pub fn to_u128(&self) -> Option<u128> {
        if self.n > 7 {
            return None;
        }
        Some((0..self.len()).fold(0u128, |t, x| t | (u128::from(self.get(x)) << x)))
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of inputs, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self.get(input_index(x)))
    }

    /// Number of inputs on which the function is 1.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n, |x| !self.get(x)).expect("same arity")
    }

    /// Number of inputs on which `self` and `other` agree.
    pub fn agreements(&self, other: &Self) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok((0..self.len())
            .filter(|&x| self.get(x) == other.get(x))
            .count())
    }

    pub fn is_symmetric(&self) -> bool {
        SymmetricSpec::from_function(self).is_some()
    }

    /// Relabel inputs: the result maps `x` to `self(y)` where `y_{perm[i]} = x_i`.
    pub fn permute_inputs(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::OutOfRange(format!("{perm:?} is not a permutation")));
            }
        }
        Self::from_fn(self.n, |x| {
            let y = (0..self.n).fold(0usize, |y, i| y | (((x >> i) & 1) << perm[i]));
            self.get(y)
        })
    }

    /// Fix `x_{var+1} = bit`; remaining variables keep their relative order.
    pub fn restrict(&self, var: usize, bit: bool) -> Result<Self> {
        if var >= self.n {
            return Err(Error::VariableOutOfRange {
                index: var,
                n: self.n,
            });
        }
        if self.n == 1 {
            return Err(Error::ArityOutOfRange { n: 0, min: 1, max: MAX_ARITY });
        }
        let low = (1usize << var) - 1;
        let b = usize::from(bit) << var;
        Self::from_fn(self.n - 1, |y| {
            let x = (y & low) | b | ((y & !low) << 1);
            self.get(x)
        })
    }

    /// Walsh–Hadamard spectrum via the in-place fast transform, `O(n·2^n)`.
    pub fn walsh_spectrum(&self) -> FourierSpectrum {
        let mut w: Vec<i32> = (0..self.len())
            .map(|x| if self.get(x) { -1 } else { 1 })
            .collect();
        fwht(&mut w);
        FourierSpectrum { n: self.n, walsh: w }
    }

    /// The unique affine candidate through `f(0)` and `f(e_p)`, if it matches everywhere.
    pub fn affine_test(&self) -> Option<AffineWitness> {
        let constant = self.get(0);
        let mask = (0..self.n).fold(0u32, |m, p| {
            if self.get(1 << p) != constant {
                m | (1 << p)
            } else {
                m
            }
        });
        let w = AffineWitness {
            n: self.n,
            constant,
            mask,
        };
        (0..self.len())
            .all(|x| w.eval_index(x) == self.get(x))
            .then_some(w)
    }

    /// Hex string of the table read as an integer whose bit `x` is `f(x)`.
    pub fn to_hex(&self) -> String {
        let digits = self.len().div_ceil(4);
        (0..digits)
            .rev()
            .map(|d| {
                let nib = (0..4).fold(0u32, |acc, k| {
                    let x = 4 * d + k;
                    if x < self.len() && self.get(x) {
                        acc | (1 << k)
                    } else {
                        acc
                    }
                });
                char::from_digit(nib, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_arity(n)?;
        let hex = hex.trim().trim_start_matches("0x").trim_start_matches("0X");
        let len = 1usize << n;
        let digits = len.div_ceil(4);
        if hex.len() != digits {
            return Err(Error::InvalidTable(format!(
                "arity {n} needs {digits} hex digits, got {}",
                hex.len()
            )));
        }
        let mut bits = vec![false; 4 * digits];
        for (pos, c) in hex.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::InvalidTable(format!("bad hex digit {c:?}")))?;
            let d = digits - 1 - pos;
            for k in 0..4 {
                bits[4 * d + k] = (v >> k) & 1 == 1;
            }
        }
        if bits[len..].iter().any(|&b| b) {
            return Err(Error::InvalidTable("bits set beyond 2^n".into()));
        }
        Self::from_bits(n, &bits[..len])
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self.to_hex())
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub(crate) fn fwht(w: &mut [i32]) {
    let mut h = 1;
    while h < w.len() {
        for i in (0..w.len()).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (w[j], w[j + h]);
                w[j] = a + b;
                w[j + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Value of a symmetric function on each input weight `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricSpec {
    n: usize,
    by_weight: Vec<bool>,
}

impl SymmetricSpec {
    pub fn new(n: usize, by_weight: Vec<bool>) -> Result<Self> {
        check_arity(n)?;
        if by_weight.len() != n + 1 {
            return Err(Error::InvalidTable(format!(
                "symmetric spec of arity {n} needs {} weights, got {}",
                n + 1,
                by_weight.len()
            )));
        }
        Ok(Self { n, by_weight })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        Self::new(n, (0..=n).map(f).collect())
    }

    /// Returns the weight profile if `f` is symmetric.
    pub fn from_function(f: &BooleanFunction) -> Option<Self> {
        let n = f.arity();
        let mut by_weight: Vec<Option<bool>> = vec![None; n + 1];
        for x in 0..f.len() {
            let w = x.count_ones() as usize;
            match by_weight[w] {
                None => by_weight[w] = Some(f.get(x)),
                Some(v) if v != f.get(x) => return None,
                _ => {}
            }
        }
        Some(Self {
            n,
            by_weight: by_weight.into_iter().map(|v| v.unwrap()).collect(),
        })
    }

    /// Every symmetric function of arity `n`, ordered by the integer whose bit `w` is `f_w`.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        check_arity(n)?;
        Ok((0..1u64 << (n + 1))
            .map(|code| Self {
                n,
                by_weight: (0..=n).map(|w| (code >> w) & 1 == 1).collect(),
            })
            .collect())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn by_weight(&self) -> &[bool] {
        &self.by_weight
    }

    pub fn value(&self, weight: usize) -> bool {
        self.by_weight[weight]
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            by_weight: self.by_weight.iter().map(|b| !b).collect(),
        }
    }

    pub fn to_function(&self) -> BooleanFunction {
        make_symmetric(self)
    }
}

impl fmt::Display for SymmetricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.by_weight {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn make_symmetric(spec: &SymmetricSpec) -> BooleanFunction {
    BooleanFunction::from_fn(spec.n, |x| spec.by_weight[x.count_ones() as usize])
        .expect("spec arity already validated")
}

/// Second least significant bit of the input weight.
pub fn slsb_spec(n: usize) -> Result<SymmetricSpec> {
    SymmetricSpec::from_fn(n, |w| (w >> 1) & 1 == 1)
}

pub fn slsb(n: usize) -> Result<BooleanFunction> {
    slsb_spec(n).map(|s| make_symmetric(&s))
}

pub fn maj_spec(n: usize) -> Result<SymmetricSpec> {
    if n.is_multiple_of(2) {
        return Err(Error::ArityParity {
            what: "majority",
            parity: "odd",
            n,
        });
    }
    SymmetricSpec::from_fn(n, |w| 2 * w > n)
}

pub fn maj(n: usize) -> Result<BooleanFunction> {
    maj_spec(n).map(|s| make_symmetric(&s))
}

pub fn parity_spec(n: usize) -> Result<SymmetricSpec> {
    SymmetricSpec::from_fn(n, |w| w % 2 == 1)
}

pub fn parity(n: usize) -> Result<BooleanFunction> {
    parity_spec(n).map(|s| make_symmetric(&s))
}

/// `Σ x_{2i-1} x_{2i} mod 2`.
pub fn ip(n: usize) -> Result<BooleanFunction> {
    if n % 2 == 1 {
        return Err(Error::ArityParity {
            what: "inner product",
            parity: "even",
            n,
        });
    }
    BooleanFunction::from_fn(n, |x| {
        let pairs = x & (x >> 1) & 0x5555_5555;
        pairs.count_ones() % 2 == 1
    })
}

/// Walsh spectrum kept as exact integers `W(y) = Σ_x (-1)^{g(x) + x·y} = 2^n ĝ(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierSpectrum {
    n: usize,
    walsh: Vec<i32>,
}

impl FourierSpectrum {
    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn walsh(&self) -> &[i32] {
        &self.walsh
    }

    pub fn coeff<T: Real>(&self, y: usize) -> T {
        T::lit(self.walsh[y] as f64) / T::lit((1u64 << self.n) as f64)
    }

    pub fn coeffs<T: Real>(&self) -> Vec<T> {
        (0..self.walsh.len()).map(|y| self.coeff(y)).collect()
    }

    /// `max_y |W(y)|` as an exact integer.
    pub fn max_abs_walsh(&self) -> u32 {
        self.walsh.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
    }

    /// Lowest `y` attaining `max |W(y)|`.
    pub fn argmax(&self) -> usize {
        let m = self.max_abs_walsh();
        self.walsh
            .iter()
            .position(|w| w.unsigned_abs() == m)
            .unwrap_or(0)
    }

    /// `ĝ_max`.
    pub fn spectral_max<T: Real>(&self) -> T {
        T::lit(self.max_abs_walsh() as f64) / T::lit((1u64 << self.n) as f64)
    }

    pub fn parseval_sum<T: Real>(&self) -> T {
        let scale = T::lit((1u64 << self.n) as f64);
        self.walsh
            .iter()
            .map(|&w| {
                let c = T::lit(w as f64) / scale;
                c * c
            })
            .sum()
    }
}

pub fn walsh_spectrum(f: &BooleanFunction) -> FourierSpectrum {
    f.walsh_spectrum()
}

pub fn spectral_max<T: Real>(spec: &FourierSpectrum) -> T {
    spec.spectral_max()
}

/// `constant ⊕ (mask · x mod 2)`; bit `i` of `mask` selects `x_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineWitness {
    pub n: usize,
    pub constant: bool,
    pub mask: u32,
}

impl AffineWitness {
    #[inline]
    pub fn eval_index(&self, x: usize) -> bool {
        self.constant ^ ((self.mask as usize & x).count_ones() % 2 == 1)
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        self.eval_index(input_index(x))
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|i| (self.mask >> i) & 1 == 1)
    }

    pub fn to_function(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.n, |x| self.eval_index(x)).expect("valid arity")
    }
}

impl fmt::Display for AffineWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self.variables().map(|i| format!("x{}", i + 1)).collect();
        if self.constant || terms.is_empty() {
            terms.insert(0, if self.constant { "1".into() } else { "0".into() });
        }
        f.write_str(&terms.join(" + "))
    }
}

/// `min(1, ½[1 + ĝ_max · log₂(4/ĝ_max)])`.
pub fn classical_upper_bound<T: Real>(gmax: T) -> Result<T> {
    if !(gmax > T::zero() && gmax <= T::one()) {
        return Err(Error::OutOfRange(format!(
            "gmax must lie in (0, 1], got {gmax}"
        )));
    }
    let half = T::lit(0.5);
    let raw = half * (T::one() + gmax * (T::lit(4.0) / gmax).log2());
    Ok(raw.min(T::one()))
}

/// `½(1 + ĝ_max)`, achieved by the best affine approximation.
pub fn classical_lower_bound<T: Real>(gmax: T) -> T {
    T::lit(0.5) * (T::one() + gmax)
}
