use serde::{Deserialize, Serialize};

use super::complete::min_power;
use super::linalg::{lstsq, residual};
use super::params::{ParamFamily, SignalParams};
use super::trig::{TrigKind, TrigPolynomial};
use crate::boolfun::SymmetricSpec;
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const SOLVE_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Impose zero derivatives only at weight points where the polynomial equals 1.
    pub relax: bool,
}

/// `A` and `B` for a target normalized to `f(0^n) = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolvedAB<T> {
    pub a: TrigPolynomial<T>,
    pub b: TrigPolynomial<T>,
    /// The target had `f(0^n) = 1` and was complemented before solving.
    pub complemented: bool,
    pub residual: T,
}

struct System<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
}

fn half_harmonics<T: Real>(length: usize) -> Vec<T> {
    (0..length.div_ceil(2))
        .map(|k| T::from_usize_lossy(2 * k + 1) * T::lit(0.5))
        .collect()
}

/// Interpolation rows: value `target(w)` and, where `keep_derivative(w)`, zero slope.
fn build<T: Real>(
    kind: TrigKind,
    spec: &SymmetricSpec,
    params: &SignalParams<T>,
    target: impl Fn(bool) -> T,
    keep_derivative: impl Fn(bool) -> bool,
) -> System<T> {
    let hs = half_harmonics::<T>(params.length);
    let mut sys = System { rows: Vec::new(), rhs: Vec::new() };
    for w in 0..=spec.arity() {
        let phi = params.phi(w);
        let fw = spec.value(w);
        let (val, der): (Vec<T>, Vec<T>) = match kind {
            TrigKind::Cos => hs.iter().map(|&h| ((h * phi).cos(), -h * (h * phi).sin())).unzip(),
            TrigKind::Sin => hs.iter().map(|&h| ((h * phi).sin(), h * (h * phi).cos())).unzip(),
        };
        sys.rows.push(val);
        sys.rhs.push(target(fw));
        if keep_derivative(fw) {
            sys.rows.push(der);
            sys.rhs.push(T::zero());
        }
    }
    sys
}

/// Solves the interpolation conditions for `A` (cosine series) and `B` (sine series):
/// `A(φ_w) = 1 − f_w`, `B(φ_w) = f_w`, with zero derivatives at the weight points.
///
/// With majority parameters `B` is taken as `A(φ − π)` and only checked against its
/// own conditions.
pub fn solve_ab<T: Real>(
    f: &SymmetricSpec,
    params: &SignalParams<T>,
    opts: SolveOptions,
) -> Result<SolvedAB<T>> {
    let complemented = f.value(0);
    let spec = if complemented { f.complement() } else { f.clone() };
    let relax = opts.relax;
    let sys_a = build(
        TrigKind::Cos,
        &spec,
        params,
        |fw| if fw { T::zero() } else { T::one() },
        |fw| !relax || !fw,
    );
    let sys_b = build(
        TrigKind::Sin,
        &spec,
        params,
        |fw| if fw { T::one() } else { T::zero() },
        |fw| !relax || fw,
    );
    let tol = T::tol(SOLVE_TOLERANCE);
    let a = lstsq(&sys_a.rows, &sys_a.rhs)?;
    let b = match params.family {
        ParamFamily::Majority => TrigPolynomial::new(TrigKind::Cos, a.clone())?
            .shifted_by_pi()
            .coeffs,
        _ => lstsq(&sys_b.rows, &sys_b.rhs)?,
    };
    let res = residual(&sys_a.rows, &a, &sys_a.rhs).max(residual(&sys_b.rows, &b, &sys_b.rhs));
    if res.is_nan() || res > tol {
        return Err(Error::Residual {
            residual: res.as_f64(),
            tolerance: tol.as_f64(),
        });
    }
    Ok(SolvedAB {
        a: TrigPolynomial::new(TrigKind::Cos, a)?,
        b: TrigPolynomial::new(TrigKind::Sin, b)?,
        complemented,
        residual: res,
    })
}

/// Shortest odd length `< params.length` whose relaxed solution keeps
/// `1 − A² − B² ≥ 0`, with its solution. Falls back to the strict conditions at
/// `params.length` when no shorter length qualifies.
pub fn minimal_relaxed<T: Real>(
    f: &SymmetricSpec,
    params: &SignalParams<T>,
) -> Result<(SignalParams<T>, SolvedAB<T>)> {
    for length in (1..params.length).step_by(2) {
        let p = params.with_length(length)?;
        if let Ok(sol) = solve_ab(f, &p, SolveOptions { relax: true }) {
            if min_power(&sol.a, &sol.b, 10_000) >= -T::tol(1e-9) {
                return Ok((p, sol));
            }
        }
    }
    Ok((*params, solve_ab(f, params, SolveOptions::default())?))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::boolfun::{maj_spec, slsb_spec};

    #[test]
    fn maj3_weight_values() {
        let p = SignalParams::<f64>::majority(3).unwrap();
        let s = solve_ab(&maj_spec(3).unwrap(), &p, SolveOptions::default()).unwrap();
        let a = &s.a;
        for (phi, v) in [(-PI / 4.0, 1.0), (PI / 4.0, 1.0), (3.0 * PI / 4.0, 0.0), (5.0 * PI / 4.0, 0.0)] {
            assert!((a.eval(phi) - v).abs() < 1e-10);
        }
        assert!(a.derivative(0.0).abs() < 1e-15);
        assert!(!s.complemented);
    }

    #[test]
    fn slsb4_general_constraints() {
        let p = SignalParams::<f64>::general(4).unwrap();
        let spec = slsb_spec(4).unwrap();
        let s = solve_ab(&spec, &p, SolveOptions::default()).unwrap();
        for w in 0..=4 {
            let phi = p.phi(w);
            let fw = if spec.value(w) { 1.0 } else { 0.0 };
            assert!((s.a.eval(phi) - (1.0 - fw)).abs() < 1e-10);
            assert!((s.b.eval(phi) - fw).abs() < 1e-10);
            assert!(s.a.derivative(phi).abs() < 1e-10);
            assert!(s.b.derivative(phi).abs() < 1e-10);
        }
    }

    #[test]
    fn complement_is_recorded() {
        let p = SignalParams::<f64>::general(3).unwrap();
        let nmaj = maj_spec(3).unwrap().complement();
        let s = solve_ab(&nmaj, &p, SolveOptions::default()).unwrap();
        assert!(s.complemented);
        assert!((s.a.eval(0.0) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn relaxed_maj3_is_shorter() {
        let p = SignalParams::<f64>::majority(3).unwrap();
        let (q, _) = minimal_relaxed(&maj_spec(3).unwrap(), &p).unwrap();
        assert_eq!(q.length, 5);
    }

    #[test]
    fn too_short_is_rejected() {
        let p = SignalParams::<f64>::general(4).unwrap().with_length(3).unwrap();
        assert!(solve_ab(&slsb_spec(4).unwrap(), &p, SolveOptions::default()).is_err());
    }
}
