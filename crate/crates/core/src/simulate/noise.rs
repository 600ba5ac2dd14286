use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolfun::{classical_upper_bound, BooleanFunction};
use crate::circuits::LimitedSpaceCircuit;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Shots per Monte Carlo work unit; each unit owns one RNG stream.
pub const MC_CHUNK: u64 = 4096;

/// Largest arity scanned by [`advantage_crossover`].
pub const CROSSOVER_CAP: usize = 200;

/// Every controlled gate fails independently with probability `epsilon`; a
/// shot with any failure outputs a uniformly random bit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NoiseModel<T> {
    pub epsilon: T,
}

impl<T: Real> NoiseModel<T> {
    pub fn new(epsilon: T) -> Result<Self> {
        if !(epsilon >= T::zero() && epsilon < T::one()) {
            return Err(Error::OutOfRange(format!(
                "gate failure probability must lie in [0, 1), got {epsilon}"
            )));
        }
        Ok(Self { epsilon })
    }

    /// Probability that none of `gates` gates fails.
    pub fn survival(&self, gates: usize) -> T {
        (T::one() - self.epsilon).powi(gates as i32)
    }
}

/// `½[1 + (1 − ε)^L]`.
pub fn noisy_asp_analytic<T: Real>(gates: usize, epsilon: T) -> Result<T> {
    let m = NoiseModel::new(epsilon)?;
    Ok(T::lit(0.5) * (T::one() + m.survival(gates)))
}

/// Standard deviation of a mean of `shots` Bernoulli(`p`) samples.
pub fn binomial_sigma<T: Real>(p: T, shots: u64) -> T {
    (p * (T::one() - p) / T::lit(shots as f64)).sqrt()
}

/// Monte Carlo ASP under [`NoiseModel`]: every shot draws a uniform input and
/// one failure coin per controlled gate. The result depends only on `seed`.
pub fn noisy_asp_mc<T: Real>(
    c: &LimitedSpaceCircuit<T>,
    f: &BooleanFunction,
    epsilon: T,
    shots: u64,
    seed: u64,
) -> Result<T> {
    NoiseModel::new(epsilon)?;
    if f.arity() != c.arity() {
        return Err(Error::ArityMismatch {
            expected: c.arity(),
            got: f.arity(),
        });
    }
    if shots == 0 {
        return Err(Error::OutOfRange("at least one shot is required".into()));
    }
    let n = c.arity();
    let gates = c.entangling_count();
    let eps = epsilon.as_f64();
    let p_one: Vec<f64> = (0..1usize << n).map(|x| c.unitary(x).p_one().as_f64()).collect();
    let chunks = shots.div_ceil(MC_CHUNK);
    let successes: u64 = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let todo = MC_CHUNK.min(shots - chunk * MC_CHUNK);
            let mut ok = 0u64;
            for _ in 0..todo {
                let x = rng.random_range(0..p_one.len());
                let mut failed = false;
                for _ in 0..gates {
                    failed |= rng.random_bool(eps);
                }
                let out = if failed {
                    rng.random_bool(0.5)
                } else {
                    rng.random_bool(p_one[x].clamp(0.0, 1.0))
                };
                ok += (out == f.get(x)) as u64;
            }
            ok
        })
        .sum();
    Ok(T::lit(successes as f64 / shots as f64))
}

/// `1 − 2^{−1/3}`.
pub fn noise_threshold<T: Real>() -> T {
    T::one() - T::lit(2.0).powf(T::lit(-1.0 / 3.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Inner product, `3n/2` gates, every `|ĝ| = 2^{−n/2}`.
    Ip,
    /// SLSB by the relative-phase construction, `2n − 1` gates.
    Slsb,
}

impl Family {
    pub fn gates(self, n: usize) -> usize {
        match self {
            Family::Ip => 3 * n / 2,
            Family::Slsb => 2 * n - 1,
        }
    }

    pub fn log2_gmax(self, n: usize) -> i32 {
        match self {
            Family::Slsb if n % 2 == 1 => (1 - n as i32) / 2,
            _ => -(n as i32) / 2,
        }
    }

    pub fn arities(self) -> impl Iterator<Item = usize> {
        let step = if self == Family::Ip { 2 } else { 1 };
        (2..=CROSSOVER_CAP).step_by(step)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ip" => Ok(Family::Ip),
            "slsb" => Ok(Family::Slsb),
            _ => Err(Error::OutOfRange(format!("unknown family '{s}'"))),
        }
    }
}

/// `(noisy quantum ASP, classical upper bound)` for one arity.
pub fn crossover_bound<T: Real>(epsilon: T, family: Family, n: usize) -> Result<(T, T)> {
    let g = T::lit(2.0).powi(family.log2_gmax(n));
    Ok((
        noisy_asp_analytic(family.gates(n), epsilon)?,
        classical_upper_bound(g)?,
    ))
}

/// Smallest arity at which the noisy circuit family beats the classical upper
/// bound, or `None` up to [`CROSSOVER_CAP`].
pub fn advantage_crossover<T: Real>(epsilon: T, family: Family) -> Result<Option<usize>> {
    let m = NoiseModel::new(epsilon)?;
    let log_keep = (T::one() - m.epsilon).ln();
    for n in family.arities() {
        let g = T::lit(2.0).powi(family.log2_gmax(n));
        if classical_upper_bound(g)? >= T::one() {
            continue;
        }
        // quantum > bound  ⇔  (1 − ε)^L > g·log₂(4/g)
        let lhs = log_keep * T::from_usize_lossy(family.gates(n));
        let rhs = g.ln() + (T::lit(4.0) / g).log2().ln();
        if lhs > rhs {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
