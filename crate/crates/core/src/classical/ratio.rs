use std::collections::HashMap;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::program::{NormalFormProgram, Stage};
use crate::boolfun::{fwht, AffineWitness, BooleanFunction, SymmetricSpec};
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const MAX_EXACT_ARITY: usize = 7;

/// Exact approximation ratio with an achieving normal-form program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioResult {
    pub value: Ratio<u64>,
    pub witness: NormalFormProgram,
    pub agreements: u64,
}

impl RatioResult {
    pub fn as_real<T: Real>(&self) -> T {
        T::lit(*self.value.numer() as f64) / T::lit(*self.value.denom() as f64)
    }
}

/// Table of a function on an `m`-cube, bit `x` is its value on local input `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Cube {
    m: u8,
    t: u128,
}

impl Cube {
    fn get(self, x: usize) -> bool {
        (self.t >> x) & 1 == 1
    }

    fn restrict(self, j: usize, b: bool) -> Cube {
        let m = usize::from(self.m);
        let low = (1usize << j) - 1;
        let fixed = usize::from(b) << j;
        let t = (0..1usize << (m - 1)).fold(0u128, |t, y| {
            let x = (y & low) | fixed | ((y & !low) << 1);
            t | (u128::from(self.get(x)) << y)
        });
        Cube { m: self.m - 1, t }
    }

    /// Max agreements with an affine function and the lowest-index maximizer.
    fn best_affine(self) -> (u64, u32, bool) {
        let mut w: Vec<i32> = (0..1usize << self.m)
            .map(|x| if self.get(x) { -1 } else { 1 })
            .collect();
        fwht(&mut w);
        let (y, wy) = w
            .iter()
            .enumerate()
            .fold((0, 0i32), |best, (y, &v)| if v.abs() > best.1.abs() { (y, v) } else { best });
        let agree = ((1u64 << self.m) + u64::from(wy.unsigned_abs())) / 2;
        (agree, y as u32, wy < 0)
    }
}

#[derive(Clone, Copy)]
enum Choice {
    Affine { mask: u32, constant: bool },
    Split { j: usize, b: bool },
}

struct Solver {
    memo: HashMap<Cube, (u64, Choice)>,
}

impl Solver {
    fn best(&mut self, g: Cube) -> (u64, Choice) {
        if let Some(&hit) = self.memo.get(&g) {
            return hit;
        }
        let (agree, mask, constant) = g.best_affine();
        let mut best = (agree, Choice::Affine { mask, constant });
        let full = 1u64 << g.m;
        if agree < full {
            'outer: for j in 0..usize::from(g.m) {
                for b in [false, true] {
                    let (piece, ..) = g.restrict(j, b).best_affine();
                    if piece + full / 2 <= best.0 {
                        continue;
                    }
                    let (rest, _) = self.best(g.restrict(j, !b));
                    if piece + rest > best.0 {
                        best = (piece + rest, Choice::Split { j, b });
                        if best.0 == full {
                            break 'outer;
                        }
                    }
                }
            }
        }
        self.memo.insert(g, best);
        best
    }

    /// Walks the recorded choices, mapping local variable indices back to `vars`.
    fn witness(&mut self, n: usize, mut g: Cube) -> NormalFormProgram {
        let mut vars: Vec<usize> = (0..n).collect();
        let globalize = |vars: &[usize], local: u32, constant: bool| AffineWitness {
            n,
            constant,
            mask: vars
                .iter()
                .enumerate()
                .filter(|(i, _)| (local >> i) & 1 == 1)
                .fold(0u32, |m, (_, &v)| m | (1 << v)),
        };
        let mut stages = Vec::new();
        loop {
            match self.best(g).1 {
                Choice::Affine { mask, constant } => {
                    let tail = globalize(&vars, mask, constant);
                    return NormalFormProgram::new(n, stages, tail).expect("distinct stage variables");
                }
                Choice::Split { j, b } => {
                    let var = vars.remove(j);
                    let (_, mask, constant) = g.restrict(j, b).best_affine();
                    stages.push(Stage {
                        var,
                        bit: b,
                        affine: globalize(&vars, mask, constant),
                    });
                    g = g.restrict(j, !b);
                }
            }
        }
    }
}

fn to_cube(g: &BooleanFunction) -> Result<Cube> {
    let t = g.to_u128().ok_or(Error::ArityOutOfRange {
        n: g.arity(),
        min: 1,
        max: MAX_EXACT_ARITY,
    })?;
    Ok(Cube { m: g.arity() as u8, t })
}

/// Exact `R(g)`: best agreement of any member of `Ω_n` with `g`, for `n ≤ 7`.
pub fn approximation_ratio(g: &BooleanFunction) -> Result<RatioResult> {
    let cube = to_cube(g)?;
    let mut solver = Solver { memo: HashMap::new() };
    let (agreements, _) = solver.best(cube);
    let witness = solver.witness(g.arity(), cube);
    Ok(RatioResult {
        value: Ratio::new(agreements, 1 << g.arity()),
        witness,
        agreements,
    })
}

/// A normal-form program computing `f` exactly, if `f ∈ Ω_n`.
pub fn omega_membership(f: &BooleanFunction) -> Option<NormalFormProgram> {
    if f.arity() <= MAX_EXACT_ARITY {
        let r = approximation_ratio(f).expect("arity checked");
        return (r.agreements == f.len() as u64).then_some(r.witness);
    }
    let mut memo = HashMap::new();
    decide(f, &mut memo)?;
    let n = f.arity();
    let mut vars: Vec<usize> = (0..n).collect();
    let lift = |w: AffineWitness, vars: &[usize]| AffineWitness {
        n,
        constant: w.constant,
        mask: w.variables().fold(0u32, |m, i| m | (1 << vars[i])),
    };
    let mut g = f.clone();
    let mut stages = Vec::new();
    loop {
        match decide(&g, &mut memo).expect("member by construction") {
            None => {
                let tail = lift(g.affine_test().expect("affine"), &vars);
                return Some(NormalFormProgram::new(n, stages, tail).expect("distinct stage variables"));
            }
            Some((j, b)) => {
                let var = vars.remove(j);
                let piece = g.restrict(j, b).ok()?.affine_test()?;
                stages.push(Stage {
                    var,
                    bit: b,
                    affine: lift(piece, &vars),
                });
                g = g.restrict(j, !b).ok()?;
            }
        }
    }
}

/// `None`: not a member. `Some(None)`: affine. `Some(Some((j, b)))`: split on `x_j = b`.
type Verdict = Option<Option<(usize, bool)>>;

fn decide(f: &BooleanFunction, memo: &mut HashMap<BooleanFunction, Verdict>) -> Verdict {
    if f.affine_test().is_some() {
        return Some(None);
    }
    if let Some(&hit) = memo.get(f) {
        return hit;
    }
    let mut out = None;
    if f.arity() > 1 {
        'outer: for j in 0..f.arity() {
            for b in [false, true] {
                let piece = f.restrict(j, b).expect("j < n");
                if piece.affine_test().is_some()
                    && decide(&f.restrict(j, !b).expect("j < n"), memo).is_some()
                {
                    out = Some(Some((j, b)));
                    break 'outer;
                }
            }
        }
    }
    memo.insert(f.clone(), out);
    out
}

/// All symmetric functions of arity `n` with minimal `R`, and that minimum.
pub fn hardest_symmetric(n: usize) -> Result<Vec<(SymmetricSpec, Ratio<u64>)>> {
    if !(3..=MAX_EXACT_ARITY).contains(&n) {
        return Err(Error::ArityOutOfRange {
            n,
            min: 3,
            max: MAX_EXACT_ARITY,
        });
    }
    let specs = SymmetricSpec::all(n)?;
    let ratios: Vec<Ratio<u64>> = specs
        .par_iter()
        .map(|s| approximation_ratio(&s.to_function()).map(|r| r.value))
        .collect::<Result<_>>()?;
    let min = *ratios.iter().min().expect("nonempty");
    Ok(specs
        .into_iter()
        .zip(ratios)
        .filter(|(_, r)| *r == min)
        .collect())
}

/// Best exact agreement over `trials` sampled members of `Ω_{n+m}`, where the
/// last `m` inputs are uniform random bits. Each sampled structure gets its
/// pieces fitted to `g` with the best affine function on that piece.
pub fn randomized_ratio_estimate<T: Real>(
    g: &BooleanFunction,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<T> {
    let n = g.arity();
    let total = n + m;
    if total > 20 {
        return Err(Error::ArityOutOfRange { n: total, min: 1, max: 20 });
    }
    let size = 1usize << total;
    let target = |xr: usize| g.get(xr & ((1 << n) - 1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0u64;
    let mut vars: Vec<usize> = (0..total).collect();
    for _ in 0..trials.max(1) {
        let k = rng.random_range(0..=total);
        for i in 0..k {
            let pick = rng.random_range(i..total);
            vars.swap(i, pick);
        }
        let bits: Vec<bool> = (0..k).map(|_| rng.random()).collect();
        let mut piece = vec![k; size];
        for (xr, p) in piece.iter_mut().enumerate() {
            if let Some(i) = (0..k).find(|&i| ((xr >> vars[i]) & 1 == 1) == bits[i]) {
                *p = i;
            }
        }
        let mut agree = 0u64;
        for i in 0..=k {
            let mut w: Vec<i32> = (0..size)
                .map(|xr| match (piece[xr] == i, target(xr)) {
                    (false, _) => 0,
                    (true, false) => 1,
                    (true, true) => -1,
                })
                .collect();
            let count = piece.iter().filter(|&&p| p == i).count() as u64;
            fwht(&mut w);
            let max = w.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            agree += (count + u64::from(max)) / 2;
        }
        best = best.max(agree);
    }
    Ok(T::lit(best as f64) / T::lit(size as f64))
}
