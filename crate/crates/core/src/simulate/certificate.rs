use num_complex::Complex;
use serde::Serialize;

use crate::boolfun::{AffineWitness, BooleanFunction};
use crate::circuits::LimitedSpaceCircuit;
use crate::scalar::Real;
use crate::unitary::Unitary2;

use super::CLASSIFICATION_TOLERANCE;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CertificateError {
    /// `V(x)` is not exactly `I` or `X` on some input.
    #[error("circuit is not phaseless: V(x) is neither I nor X on input {x}")]
    NotPhaseless { x: usize },
    #[error("theory violation: {0}")]
    TheoryViolation(String),
}

/// `det V_j(x) = e^{i(α + β·x_p)}` for gate `j` controlled by `x_p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GatePhase<T> {
    pub control: Option<usize>,
    pub alpha: T,
    pub beta: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeterminantCertificate<T> {
    pub function: BooleanFunction,
    pub witness: AffineWitness,
    pub gate_phases: Vec<GatePhase<T>>,
    /// `γ_p`, the summed `β` of the gates controlled by `x_p`.
    pub gamma: Vec<T>,
    pub alpha_total: T,
}

fn sign_matches<T: Real>(angle: T, odd: bool, tol: T) -> bool {
    let z = Complex::from_polar(T::one(), angle);
    let want = if odd { -T::one() } else { T::one() };
    (z - Complex::new(want, T::zero())).norm() <= tol
}

/// For a circuit with `V(x) ∈ {I, X}` on every input, extracts `f`, proves it
/// affine and checks the determinant identity
/// `(−1)^{f(x)} = e^{iΣα} · Π_p e^{iγ_p x_p}` on the unit vectors.
pub fn linearity_certificate<T: Real>(
    c: &LimitedSpaceCircuit<T>,
) -> Result<DeterminantCertificate<T>, CertificateError> {
    let n = c.arity();
    let tol = T::tol(CLASSIFICATION_TOLERANCE);
    let (id, x_gate) = (Unitary2::<T>::identity(), Unitary2::<T>::x());
    let mut table = Vec::with_capacity(1 << n);
    for x in 0..1usize << n {
        let v = c.unitary(x);
        if v.dist(&id) <= tol {
            table.push(false);
        } else if v.dist(&x_gate) <= tol {
            table.push(true);
        } else {
            return Err(CertificateError::NotPhaseless { x });
        }
    }
    let function = BooleanFunction::from_bits(n, &table)
        .map_err(|e| CertificateError::TheoryViolation(e.to_string()))?;
    let witness = function.affine_test().ok_or_else(|| {
        CertificateError::TheoryViolation(format!(
            "phaseless circuit computes the non-affine function {function}"
        ))
    })?;

    let gate_phases: Vec<GatePhase<T>> = c
        .gates()
        .iter()
        .map(|g| {
            let theta = g.action().det().arg();
            match g.control {
                Some(_) => GatePhase { control: g.control, alpha: T::zero(), beta: theta },
                None => GatePhase { control: None, alpha: theta, beta: T::zero() },
            }
        })
        .collect();
    let mut gamma = vec![T::zero(); n];
    for p in &gate_phases {
        if let Some(j) = p.control {
            gamma[j] = gamma[j] + p.beta;
        }
    }
    let alpha_total: T = gate_phases.iter().map(|p| p.alpha).sum();

    let f0 = function.get(0);
    if !sign_matches(alpha_total, f0, tol) {
        return Err(CertificateError::TheoryViolation(format!(
            "e^(i·Σα) = e^(i·{alpha_total}) disagrees with f(0) = {}",
            f0 as u8
        )));
    }
    for (p, &g) in gamma.iter().enumerate() {
        if !sign_matches(g, function.get(1 << p) ^ f0, tol) {
            return Err(CertificateError::TheoryViolation(format!(
                "e^(i·γ_{}) disagrees with f(e_{}) + f(0)",
                p + 1,
                p + 1
            )));
        }
    }
    Ok(DeterminantCertificate {
        function,
        witness,
        gate_phases,
        gamma,
        alpha_total,
    })
}
