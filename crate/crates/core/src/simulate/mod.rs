//! Exact simulation of limited-space circuits, success probabilities, a toy
//! gate-failure noise model and the determinant certificate for phaseless
//! circuits.

mod certificate;
mod noise;

pub use certificate::{linearity_certificate, CertificateError, DeterminantCertificate, GatePhase};
pub use noise::{
    advantage_crossover, binomial_sigma, crossover_bound, noise_threshold, noisy_asp_analytic,
    noisy_asp_mc, Family, NoiseModel, CROSSOVER_CAP, MC_CHUNK,
};

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolfun::{input_bits, input_index, BooleanFunction};
use crate::circuits::LimitedSpaceCircuit;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::unitary::Unitary2;

pub const CLASSIFICATION_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// `V(x) = (iX)^{f(x)}` for every input.
    TrueImpl,
    /// `V(x)|0⟩ = e^{iθ(x)}|f(x)⟩` for every input.
    RelativePhase,
    Approximate,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::TrueImpl => "true implementation",
            Classification::RelativePhase => "relative-phase implementation",
            Classification::Approximate => "approximate",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InputResult<T> {
    pub x: usize,
    pub v: Unitary2<T>,
    pub f: bool,
    pub p_one: T,
}

impl<T: Real> InputResult<T> {
    pub fn success(&self) -> T {
        if self.f {
            self.p_one
        } else {
            T::one() - self.p_one
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationResult<T> {
    pub n: usize,
    pub per_input: Vec<InputResult<T>>,
    pub asp: T,
    pub classification: Classification,
}

#[derive(Serialize)]
struct CsvRow {
    input_bits: String,
    f: u8,
    target: f64,
    p_one: f64,
}

impl<T: Real> SimulationResult<T> {
    /// Columns `input_bits,f,target,p_one`; `input_bits` lists `x_1` first and
    /// `target` is the probability of reading `f(x)`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.per_input {
            let bits: String = input_bits(r.x, self.n)
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect();
            w.serialize(CsvRow {
                input_bits: bits,
                f: r.f as u8,
                target: r.success().as_f64(),
                p_one: r.p_one.as_f64(),
            })
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }

    pub fn min_success(&self) -> T {
        self.per_input
            .iter()
            .map(InputResult::success)
            .fold(T::one(), T::min)
    }
}

/// `V(x)` and the probability of measuring 1 after applying it to `|0⟩`.
pub fn evaluate<T: Real>(c: &LimitedSpaceCircuit<T>, x: &[bool]) -> Result<(Unitary2<T>, T)> {
    if x.len() != c.arity() {
        return Err(Error::ArityMismatch {
            expected: c.arity(),
            got: x.len(),
        });
    }
    let v = c.unitary(input_index(x));
    let p = v.p_one();
    Ok((v, p))
}

fn classify<T: Real>(rows: &[InputResult<T>]) -> Classification {
    let tol = T::tol(CLASSIFICATION_TOLERANCE);
    let ix = Unitary2::x().scale(Complex::new(T::zero(), T::one()));
    let id = Unitary2::identity();
    if rows
        .iter()
        .all(|r| r.v.dist(if r.f { &ix } else { &id }) <= tol)
    {
        return Classification::TrueImpl;
    }
    if rows
        .iter()
        .all(|r| r.v.m[r.f as usize][0].norm() >= T::one() - tol)
    {
        return Classification::RelativePhase;
    }
    Classification::Approximate
}

/// Exhaustive simulation against `f` over all `2^n` inputs.
pub fn asp<T: Real>(c: &LimitedSpaceCircuit<T>, f: &BooleanFunction) -> Result<SimulationResult<T>> {
    let n = c.arity();
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: f.arity(),
        });
    }
    let per_input: Vec<InputResult<T>> = (0..1usize << n)
        .into_par_iter()
        .map(|x| {
            let v = c.unitary(x);
            InputResult {
                x,
                v,
                f: f.get(x),
                p_one: v.p_one(),
            }
        })
        .collect();
    let total: T = per_input.iter().map(InputResult::success).sum();
    let asp = total / T::from_usize_lossy(per_input.len());
    let classification = classify(&per_input);
    Ok(SimulationResult {
        n,
        per_input,
        asp,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::{ip, maj, slsb};
    use crate::circuits::{builtin_slsb3_fig1, ip_circuit, slsb_relative, slsb_true, GateKind};

    #[test]
    fn empty_circuit() {
        let c = LimitedSpaceCircuit::<f64>::new(2);
        let (v, p) = evaluate(&c, &[true, false]).unwrap();
        assert_eq!(v, Unitary2::identity());
        assert_eq!(p, 0.0);
        assert!(evaluate(&c, &[true]).is_err());
    }

    #[test]
    fn point_evaluations() {
        let (_, p) = evaluate(&slsb_relative::<f64>(3).unwrap(), &[true, true, false]).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
        let (_, p) = evaluate(&builtin_slsb3_fig1::<f64>(), &[true, true, true]).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
        let (_, p) = evaluate(&builtin_slsb3_fig1::<f64>(), &[false; 3]).unwrap();
        assert!(p.abs() < 1e-12);
    }

    #[test]
    fn classifications() {
        for n in 3..=8 {
            let r = asp(&slsb_relative::<f64>(n).unwrap(), &slsb(n).unwrap()).unwrap();
            assert!((r.asp - 1.0).abs() < 1e-12);
            assert_eq!(r.classification, Classification::RelativePhase);
        }
        let r = asp(&slsb_true::<f64>(3).unwrap(), &slsb(3).unwrap()).unwrap();
        assert_eq!(r.classification, Classification::TrueImpl);
        let r = asp(&ip_circuit::<f64>(4).unwrap(), &ip(4).unwrap()).unwrap();
        assert_eq!(r.classification, Classification::RelativePhase);

        let mut c = LimitedSpaceCircuit::<f64>::new(3);
        c.controlled(1, GateKind::Ry(1.1)).unwrap();
        let r = asp(&c, &maj(3).unwrap()).unwrap();
        assert!(r.asp <= 1.0);
        assert_eq!(r.classification, Classification::Approximate);
        assert!(asp(&c, &maj(5).unwrap()).is_err());
    }

    #[test]
    fn csv_layout() {
        let r = asp(&slsb_relative::<f64>(2).unwrap(), &slsb(2).unwrap()).unwrap();
        let text = r.to_csv();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "input_bits,f,target,p_one");
        assert_eq!(lines.len(), 5);
        assert!(lines[2].starts_with("10,0,"));
        assert!(lines[4].starts_with("11,1,1"));
    }
}
