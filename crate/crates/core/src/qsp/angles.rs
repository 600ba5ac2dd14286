use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::complete::grid;
use super::trig::{TrigKind, TrigPolynomial};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::unitary::Unitary2;

/// `U(φ) = A·I + iB·X + iC·Y + iD·Z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QspQuadruple<T> {
    pub a: TrigPolynomial<T>,
    pub b: TrigPolynomial<T>,
    pub c: TrigPolynomial<T>,
    pub d: TrigPolynomial<T>,
}

impl<T: Real> QspQuadruple<T> {
    pub fn new(
        a: TrigPolynomial<T>,
        b: TrigPolynomial<T>,
        c: TrigPolynomial<T>,
        d: TrigPolynomial<T>,
    ) -> Result<Self> {
        let kinds = [a.kind, b.kind, c.kind, d.kind];
        if kinds != [TrigKind::Cos, TrigKind::Sin, TrigKind::Sin, TrigKind::Cos] {
            return Err(Error::OutOfRange(format!(
                "quadruple kinds must be (cos, sin, sin, cos), got {kinds:?}"
            )));
        }
        let l = [&a, &b, &c, &d].iter().map(|p| p.length()).max().unwrap();
        Ok(Self {
            a: a.padded(l),
            b: b.padded(l),
            c: c.padded(l),
            d: d.padded(l),
        })
    }

    pub fn length(&self) -> usize {
        self.a.length()
    }

    pub fn matrix(&self, phi: T) -> Unitary2<T> {
        Unitary2::from_pauli_coeffs(self.a.eval(phi), self.b.eval(phi), self.c.eval(phi), self.d.eval(phi))
    }

    /// `max |A² + B² + C² + D² − 1|` on a `4L`-point grid over `[−2π, 2π)`.
    pub fn norm_residual(&self) -> T {
        grid::<T>(4 * self.length())
            .map(|phi| {
                let s: T = [&self.a, &self.b, &self.c, &self.d]
                    .iter()
                    .map(|p| {
                        let v = p.eval(phi);
                        v * v
                    })
                    .sum();
                (s - T::one()).abs()
            })
            .fold(T::zero(), T::max)
    }

    /// Laurent coefficient matrices `U_k` of `t^k`, `k = −L..=L` at index `k + L`.
    pub fn laurent_matrices(&self) -> Vec<Unitary2<T>> {
        let (a, b, c, d) = (self.a.laurent(), self.b.laurent(), self.c.laurent(), self.d.laurent());
        let i = Complex::new(T::zero(), T::one());
        (0..a.len())
            .map(|k| {
                Unitary2::new([
                    [a[k] + i * d[k], i * b[k] + c[k]],
                    [i * b[k] - c[k], a[k] - i * d[k]],
                ])
            })
            .collect()
    }
}

/// `ξ_0, ξ_1, …, ξ_L`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AngleSequence<T> {
    pub xi: Vec<T>,
}

impl<T: Real> AngleSequence<T> {
    pub fn new(xi: Vec<T>) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::AngleMismatch("an angle sequence needs ξ_0".into()));
        }
        Ok(Self { xi })
    }

    /// Number of signal rotations `L`.
    pub fn length(&self) -> usize {
        self.xi.len() - 1
    }

    pub fn reconstruct(&self, phi: T) -> Unitary2<T> {
        reconstruct(self, phi)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

impl AngleSequence<f64> {
    pub fn from_json(s: &str) -> Result<Self> {
        let seq: Self = serde_json::from_str(s)?;
        Self::new(seq.xi)
    }
}

/// `U(φ) = R_z(ξ_0) · ∏_{j=1}^{L} R_z(ξ_j) R_x(φ) R_z(−ξ_j)`.
pub fn reconstruct<T: Real>(seq: &AngleSequence<T>, phi: T) -> Unitary2<T> {
    let rx = Unitary2::rx(phi);
    seq.xi[1..].iter().fold(Unitary2::rz(seq.xi[0]), |acc, &xi| {
        acc * Unitary2::rz(xi) * rx * Unitary2::rz(-xi)
    })
}

fn zero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// `Π₊(ξ) = ½[[1, e^{−iξ}], [e^{iξ}, 1]]` and `Π₋ = I − Π₊`.
fn projectors<T: Real>(w: Complex<T>) -> (Unitary2<T>, Unitary2<T>) {
    let h = Complex::new(T::lit(0.5), T::zero());
    let plus = Unitary2::new([[h, h * w.conj()], [h * w, h]]);
    let minus = Unitary2::identity().sub(&plus);
    (plus, minus)
}

fn max_entry<T: Real>(u: &Unitary2<T>) -> T {
    u.m.iter().flatten().map(|z| z.norm()).fold(T::zero(), T::max)
}

/// Peels one factor `R_z(ξ)R_x(φ)R_z(−ξ) = tΠ₋(ξ) + t⁻¹Π₊(ξ)` at a time from the
/// right, choosing `ξ` so that multiplying by the inverse factor lowers the degree.
pub fn find_angles<T: Real>(q: &QspQuadruple<T>) -> Result<AngleSequence<T>> {
    let mut u = q.laurent_matrices();
    let l = q.length();
    let tol = T::tol(1e-9);
    let mut peeled = Vec::with_capacity(l);
    for step in 0..l {
        let top = u[u.len() - 1];
        let bot = u[0];
        let mut num = zero::<T>();
        for r in 0..2 {
            num = num - top.m[r][1].conj() * top.m[r][0] + bot.m[r][1].conj() * bot.m[r][0];
        }
        let w = if num.norm() > T::tol(1e-12) {
            num / num.norm()
        } else {
            Complex::new(T::one(), T::zero())
        };
        let (plus, minus) = projectors(w);
        let len = u.len();
        let mut next = vec![Unitary2::from_fn(|_, _| zero()); len + 2];
        for (k, m) in u.iter().enumerate() {
            let lo = *m * minus;
            let hi = *m * plus;
            next[k] = Unitary2::from_fn(|i, j| next[k].m[i][j] + lo.m[i][j]);
            next[k + 2] = Unitary2::from_fn(|i, j| next[k + 2].m[i][j] + hi.m[i][j]);
        }
        let stray = [&next[0], &next[1], &next[len], &next[len + 1]]
            .iter()
            .map(|m| max_entry(m))
            .fold(T::zero(), T::max);
        if stray > tol {
            return Err(Error::DegreeNotReduced {
                length: l - step,
                norm: stray.as_f64(),
            });
        }
        u = next[2..len].to_vec();
        peeled.push(w.arg());
    }
    let u0 = u[0];
    let xi0 = -T::lit(2.0) * u0.m[0][0].arg();
    let mut xi = vec![xi0];
    xi.extend(peeled.into_iter().rev());
    AngleSequence::new(xi)
}
