use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Basis of a half-angle series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrigKind {
    /// `Σ c_j cos(jφ/2)`, a reciprocal Laurent polynomial in `t = e^{iφ/2}`.
    Cos,
    /// `Σ c_j sin(jφ/2)`, anti-reciprocal.
    Sin,
}

/// Real half-angle series over odd harmonics `j = 1, 3, …, L`; `coeffs[k]` multiplies `j = 2k+1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrigPolynomial<T> {
    pub kind: TrigKind,
    pub coeffs: Vec<T>,
}

impl<T: Real> TrigPolynomial<T> {
    pub fn new(kind: TrigKind, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::OutOfRange("a half-angle series needs at least one coefficient".into()));
        }
        Ok(Self { kind, coeffs })
    }

    pub fn zero(kind: TrigKind, length: usize) -> Self {
        Self {
            kind,
            coeffs: vec![T::zero(); length.div_ceil(2)],
        }
    }

    /// Degree bound `L = 2·len − 1`.
    pub fn length(&self) -> usize {
        2 * self.coeffs.len() - 1
    }

    fn harmonics(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (T::from_usize_lossy(2 * k + 1) * T::lit(0.5), c))
    }

    pub fn eval(&self, phi: T) -> T {
        match self.kind {
            TrigKind::Cos => self.harmonics().map(|(h, c)| c * (h * phi).cos()).sum(),
            TrigKind::Sin => self.harmonics().map(|(h, c)| c * (h * phi).sin()).sum(),
        }
    }

    /// `d/dφ`.
    pub fn derivative(&self, phi: T) -> T {
        match self.kind {
            TrigKind::Cos => self.harmonics().map(|(h, c)| -c * h * (h * phi).sin()).sum(),
            TrigKind::Sin => self.harmonics().map(|(h, c)| c * h * (h * phi).cos()).sum(),
        }
    }

    /// Laurent coefficients of `t^j` for `j = -L..=L`, stored at index `j + L`.
    pub fn laurent(&self) -> Vec<Complex<T>> {
        let l = self.length();
        let mut v = vec![Complex::new(T::zero(), T::zero()); 2 * l + 1];
        let half = T::lit(0.5);
        for (k, &c) in self.coeffs.iter().enumerate() {
            let j = 2 * k + 1;
            match self.kind {
                TrigKind::Cos => {
                    v[l + j] = v[l + j] + Complex::new(c * half, T::zero());
                    v[l - j] = v[l - j] + Complex::new(c * half, T::zero());
                }
                TrigKind::Sin => {
                    v[l + j] = v[l + j] + Complex::new(T::zero(), -c * half);
                    v[l - j] = v[l - j] + Complex::new(T::zero(), c * half);
                }
            }
        }
        v
    }

    /// Same polynomial with zero coefficients appended up to `length`.
    pub fn padded(&self, length: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(length.div_ceil(2).max(coeffs.len()), T::zero());
        Self { kind: self.kind, coeffs }
    }

    /// `p(φ − π)`. A cosine series becomes a sine series and vice versa, with
    /// `cos(j(φ−π)/2) = (−1)^k sin(jφ/2)` for `j = 2k+1`.
    pub fn shifted_by_pi(&self) -> Self {
        let sign = |k: usize| if k.is_multiple_of(2) { T::one() } else { -T::one() };
        let (kind, coeffs) = match self.kind {
            TrigKind::Cos => (
                TrigKind::Sin,
                self.coeffs.iter().enumerate().map(|(k, &c)| c * sign(k)).collect(),
            ),
            TrigKind::Sin => (
                TrigKind::Cos,
                self.coeffs.iter().enumerate().map(|(k, &c)| -c * sign(k)).collect(),
            ),
        };
        Self { kind, coeffs }
    }

    pub fn cast<U: Real>(&self) -> TrigPolynomial<U> {
        TrigPolynomial {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| U::lit(c.as_f64())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn eval_and_laurent_agree() {
        let p = TrigPolynomial::new(TrigKind::Sin, vec![0.3, -1.2, 0.5]).unwrap();
        let q = TrigPolynomial::new(TrigKind::Cos, vec![0.7, 0.1, -0.4]).unwrap();
        for poly in [&p, &q] {
            let lau = poly.laurent();
            let l = poly.length() as i32;
            for phi in [0.0, 0.4, 2.0, -3.1] {
                let t = Complex::new(0.0, phi / 2.0).exp();
                let v: Complex<f64> = (-l..=l).map(|j| lau[(j + l) as usize] * t.powi(j)).sum();
                assert!((v.re - poly.eval(phi)).abs() < 1e-13 && v.im.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let p = TrigPolynomial::<f64>::new(TrigKind::Cos, vec![0.7, 0.1, -0.4]).unwrap();
        let h = 1e-6;
        for phi in [0.3, 1.7] {
            let fd = (p.eval(phi + h) - p.eval(phi - h)) / (2.0 * h);
            assert!((fd - p.derivative(phi)).abs() < 1e-8);
        }
        assert!(p.derivative(0.0).abs() < 1e-15);
    }

    #[test]
    fn shift_by_pi() {
        let p = TrigPolynomial::<f64>::new(TrigKind::Cos, vec![0.7, 0.1, -0.4]).unwrap();
        let s = p.shifted_by_pi();
        for phi in [0.2, 1.0, -2.5] {
            assert!((s.eval(phi) - p.eval(phi - PI)).abs() < 1e-14);
        }
        let back = s.shifted_by_pi();
        for phi in [0.2, 1.0] {
            assert!((back.eval(phi) - p.eval(phi - 2.0 * PI)).abs() < 1e-14);
        }
    }
}
