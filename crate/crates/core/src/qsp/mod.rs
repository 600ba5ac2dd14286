//! Quantum signal processing for symmetric targets: interpolate `A`, `B`,
//! complete to a unitary quadruple and extract the rotation angles.

mod angles;
mod complete;
pub mod linalg;
mod params;
mod solve;
mod trig;

use serde::{Deserialize, Serialize};

pub use angles::{find_angles, reconstruct, AngleSequence, QspQuadruple};
pub use complete::{complete_cd, min_power};
pub use params::{signal_params_general, signal_params_maj, ParamFamily, SignalParams};
pub use solve::{minimal_relaxed, solve_ab, SolveOptions, SolvedAB, SOLVE_TOLERANCE};
pub use trig::{TrigKind, TrigPolynomial};

use crate::boolfun::SymmetricSpec;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::unitary::Unitary2;

pub const QUADRUPLE_TOLERANCE: f64 = 1e-8;
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-6;

/// Everything produced by the synthesis pipeline for one target.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QspSynthesis<T> {
    pub spec: SymmetricSpec,
    pub params: SignalParams<T>,
    pub complemented: bool,
    pub quadruple: QspQuadruple<T>,
    pub angles: AngleSequence<T>,
}

impl<T: Real> QspSynthesis<T> {
    /// Largest deviation of `U(φ_w)` from `I` or `iX` over the weight points,
    /// measured against the normalized (possibly complemented) target.
    pub fn weight_point_error(&self) -> T {
        let ix = Unitary2::x().scale(num_complex::Complex::new(T::zero(), T::one()));
        (0..=self.spec.arity())
            .map(|w| {
                let want = if self.spec.value(w) != self.complemented { ix } else { Unitary2::identity() };
                self.angles.reconstruct(self.params.phi(w)).dist(&want)
            })
            .fold(T::zero(), T::max)
    }
}

/// Full pipeline with verification of every stage.
pub fn synthesize<T: Real>(
    spec: &SymmetricSpec,
    params: &SignalParams<T>,
    opts: SolveOptions,
) -> Result<QspSynthesis<T>> {
    let (params, solved) = if opts.relax {
        minimal_relaxed(spec, params)?
    } else {
        (*params, solve_ab(spec, params, opts)?)
    };
    let (c, d) = complete_cd(&solved.a, &solved.b)?;
    let quadruple = QspQuadruple::new(solved.a, solved.b, c, d)?;
    let res = quadruple.norm_residual();
    let tol = T::tol(QUADRUPLE_TOLERANCE);
    if res.is_nan() || res > tol {
        return Err(Error::Residual { residual: res.as_f64(), tolerance: tol.as_f64() });
    }
    let angles = find_angles(&quadruple)?;
    let out = QspSynthesis {
        spec: spec.clone(),
        params,
        complemented: solved.complemented,
        quadruple,
        angles,
    };
    let err = out.weight_point_error();
    let rtol = T::tol(RECONSTRUCTION_TOLERANCE);
    if err.is_nan() || err > rtol {
        return Err(Error::Residual { residual: err.as_f64(), tolerance: rtol.as_f64() });
    }
    Ok(out)
}
