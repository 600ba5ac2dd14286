use num_complex::Complex;

use super::linalg::{newton, poly_roots, polyder, polyval};
use super::trig::{TrigKind, TrigPolynomial};
use crate::error::{Error, Result};
use crate::scalar::Real;

const UNIT_BAND: f64 = 1e-7;

/// Minimum of `1 − A² − B²` over `points` equispaced samples of `[−2π, 2π)`.
pub fn min_power<T: Real>(a: &TrigPolynomial<T>, b: &TrigPolynomial<T>, points: usize) -> T {
    grid::<T>(points)
        .map(|phi| {
            let (x, y) = (a.eval(phi), b.eval(phi));
            T::one() - x * x - y * y
        })
        .fold(T::infinity(), T::min)
}

pub(crate) fn grid<T: Real>(points: usize) -> impl Iterator<Item = T> {
    let step = T::lit(4.0) * T::PI() / T::from_usize_lossy(points);
    (0..points).map(move |k| -T::lit(2.0) * T::PI() + step * T::from_usize_lossy(k))
}

/// Real Laurent coefficients of `1 − A² − B²` in `z = t²`, index `i` ↔ `z^{i−L}`.
fn power_laurent(a: &[f64], b: &[f64], l: usize) -> Vec<f64> {
    let mut alpha = vec![0.0; 2 * l + 1];
    let mut beta = vec![0.0; 2 * l + 1];
    for (k, (&ca, &cb)) in a.iter().zip(b).enumerate() {
        let j = 2 * k + 1;
        alpha[l + j] += ca / 2.0;
        alpha[l - j] += ca / 2.0;
        // B = β(t)/i, so B² = −β².
        beta[l + j] += cb / 2.0;
        beta[l - j] -= cb / 2.0;
    }
    let mut p = vec![0.0; 4 * l + 1];
    p[2 * l] = 1.0;
    for (i, (&ai, &bi)) in alpha.iter().zip(&beta).enumerate() {
        for (j, (&aj, &bj)) in alpha.iter().zip(&beta).enumerate() {
            p[i + j] += bi * bj - ai * aj;
        }
    }
    p.iter().step_by(2).copied().collect()
}

/// Pairs each unit-circle root with its nearest unpaired neighbour, and refines
/// the midpoint as a root of `q'`.
fn pair_unit_roots(mut unit: Vec<Complex<f64>>, q: &[Complex<f64>]) -> Result<Vec<Complex<f64>>> {
    if unit.len() % 2 == 1 {
        return Err(Error::RootPairing(format!(
            "{} roots on the unit circle, expected an even count",
            unit.len()
        )));
    }
    let dq = polyder(q);
    let ddq = polyder(&dq);
    let mut out = Vec::new();
    while let Some(u) = unit.pop() {
        let (k, _) = unit
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| (*x - u).norm().partial_cmp(&(*y - u).norm()).unwrap())
            .expect("even count");
        let v = unit.swap_remove(k);
        let mid = (u + v) / 2.0;
        let polished = newton(&dq, &ddq, mid / mid.norm(), 6);
        out.push(polished / polished.norm());
    }
    Ok(out)
}

/// Spectral factorization of `1 − A² − B²` into `C² + D²` with `C` a sine series
/// and `D` a cosine series of the same length.
pub fn complete_cd<T: Real>(
    a: &TrigPolynomial<T>,
    b: &TrigPolynomial<T>,
) -> Result<(TrigPolynomial<T>, TrigPolynomial<T>)> {
    if a.kind != TrigKind::Cos || b.kind != TrigKind::Sin {
        return Err(Error::OutOfRange("complete_cd expects A as cosine and B as sine series".into()));
    }
    let l = a.length().max(b.length());
    let (a, b) = (a.padded(l), b.padded(l));
    let min = min_power(&a, &b, 10_000);
    if min < -T::tol(1e-9) {
        return Err(Error::NegativePower { min: min.as_f64() });
    }
    let af: Vec<f64> = a.coeffs.iter().map(|c| c.as_f64()).collect();
    let bf: Vec<f64> = b.coeffs.iter().map(|c| c.as_f64()).collect();
    let pz = power_laurent(&af, &bf, l);
    let peak = pz.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak < 1e-14 {
        return Ok((TrigPolynomial::zero(TrigKind::Sin, l), TrigPolynomial::zero(TrigKind::Cos, l)));
    }
    let mut m = l;
    while m > 0 && pz[l + m].abs() < 1e-13 * peak {
        m -= 1;
    }
    let q: Vec<f64> = pz[l - m..=l + m].to_vec();
    let qc: Vec<Complex<f64>> = q.iter().map(|&c| Complex::new(c, 0.0)).collect();
    let roots = poly_roots(&q);
    let inside: Vec<Complex<f64>> = roots.iter().copied().filter(|r| r.norm() < 1.0 - UNIT_BAND).collect();
    let unit: Vec<Complex<f64>> = roots
        .iter()
        .copied()
        .filter(|r| (r.norm() - 1.0).abs() <= UNIT_BAND)
        .collect();
    let mut chosen = inside;
    chosen.extend(pair_unit_roots(unit, &qc)?);
    if chosen.len() != m {
        return Err(Error::RootPairing(format!(
            "selected {} roots for a degree-{m} factor",
            chosen.len()
        )));
    }
    let mut h = vec![Complex::new(1.0, 0.0)];
    for r in &chosen {
        let mut next = vec![Complex::new(0.0, 0.0); h.len() + 1];
        for (k, &c) in h.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        h = next;
    }
    let (mut num, mut den) = (0.0, 0.0);
    for k in 0..16 {
        let phi = 0.37 + 1.1 * k as f64;
        let target = {
            let (x, y) = (a.eval(T::lit(phi)).as_f64(), b.eval(T::lit(phi)).as_f64());
            1.0 - x * x - y * y
        };
        let hv = polyval(&h, Complex::new(0.0, phi).exp()).norm_sqr();
        num += target * hv;
        den += hv * hv;
    }
    let scale = (num / den).max(0.0).sqrt();
    let mut g = vec![0.0; l + 1];
    for (k, c) in h.iter().enumerate() {
        g[k] = c.re * scale;
    }
    let (mut cs, mut ds) = (Vec::new(), Vec::new());
    for j in (1..=l).step_by(2) {
        let (hi, lo) = (g[(l + j) / 2], g[(l - j) / 2]);
        ds.push(T::lit(hi + lo));
        cs.push(T::lit(hi - lo));
    }
    Ok((TrigPolynomial::new(TrigKind::Sin, cs)?, TrigPolynomial::new(TrigKind::Cos, ds)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_zero_completion() {
        let a = TrigPolynomial::<f64>::new(TrigKind::Cos, vec![1.0]).unwrap();
        let b = TrigPolynomial::new(TrigKind::Sin, vec![-1.0]).unwrap();
        let (c, d) = complete_cd(&a, &b).unwrap();
        assert!(c.coeffs.iter().chain(&d.coeffs).all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn forced_factorization() {
        let a = TrigPolynomial::<f64>::new(TrigKind::Cos, vec![1.0]).unwrap();
        let b = TrigPolynomial::new(TrigKind::Sin, vec![0.0]).unwrap();
        let (c, d) = complete_cd(&a, &b).unwrap();
        for phi in [0.1, 1.3, -2.0, 4.0] {
            let s: f64 = (phi / 2.0f64).sin();
            let (cv, dv) = (c.eval(phi), d.eval(phi));
            assert!((cv * cv + dv * dv - s * s).abs() < 1e-12);
        }
    }

    #[test]
    fn negative_power_rejected() {
        let a = TrigPolynomial::<f64>::new(TrigKind::Cos, vec![1.5]).unwrap();
        let b = TrigPolynomial::new(TrigKind::Sin, vec![0.0]).unwrap();
        assert!(matches!(complete_cd(&a, &b), Err(Error::NegativePower { .. })));
    }
}
