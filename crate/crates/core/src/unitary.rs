//! Single-qubit operators on the computational qubit.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex;

use crate::scalar::Real;

/// 2×2 complex matrix in row-major order.
#[derive(Clone, Copy, PartialEq)]
pub struct Unitary2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

impl<T: Real> Unitary2<T> {
    pub fn new(m: [[Complex<T>; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        Self {
            m: [[f(0, 0), f(0, 1)], [f(1, 0), f(1, 1)]],
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) })
    }

    pub fn x() -> Self {
        Self::from_fn(|i, j| if i != j { c(1.0, 0.0) } else { c(0.0, 0.0) })
    }

    pub fn y() -> Self {
        Self::new([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
    }

    pub fn z() -> Self {
        Self::new([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
    }

    pub fn h() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::new([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]])
    }

    /// Phase gate `diag(1, i)`.
    pub fn s() -> Self {
        Self::new([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]])
    }

    /// `cos(χ/2)·I − i·sin(χ/2)·P` for a Pauli `P`.
    pub fn rotation(pauli: &Self, chi: T) -> Self {
        let half = chi * T::lit(0.5);
        let cos = Complex::new(half.cos(), T::zero());
        let msin = Complex::new(T::zero(), -half.sin());
        Self::from_fn(|i, j| {
            let id = if i == j { cos } else { Complex::new(T::zero(), T::zero()) };
            id + msin * pauli.m[i][j]
        })
    }

    pub fn rx(chi: T) -> Self {
        Self::rotation(&Self::x(), chi)
    }

    pub fn ry(chi: T) -> Self {
        Self::rotation(&Self::y(), chi)
    }

    pub fn rz(chi: T) -> Self {
        Self::rotation(&Self::z(), chi)
    }

    /// `a·I + i·b·X + i·c·Y + i·d·Z`.
    pub fn from_pauli_coeffs(a: T, b: T, cc: T, d: T) -> Self {
        Self::new([
            [Complex::new(a, d), Complex::new(cc, b)],
            [Complex::new(-cc, b), Complex::new(a, -d)],
        ])
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_fn(|i, j| self.m[i][j] * s)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].conj())
    }

    pub fn det(&self) -> Complex<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j] - other.m[i][j])
    }

    /// Largest singular value.
    pub fn norm(&self) -> T {
        let g = self.adjoint() * *self;
        let tr = (g.m[0][0].re + g.m[1][1].re) * T::lit(0.5);
        let det = g.det().re;
        let disc = (tr * tr - det).max(T::zero()).sqrt();
        (tr + disc).max(T::zero()).sqrt()
    }

    pub fn dist(&self, other: &Self) -> T {
        self.sub(other).norm()
    }

    /// `‖U·U† − I‖`.
    pub fn unitarity_defect(&self) -> T {
        (*self * self.adjoint()).dist(&Self::identity())
    }

    pub fn commutes_with(&self, other: &Self, tol: T) -> bool {
        (*self * *other).dist(&(*other * *self)) <= tol
    }

    /// Probability of reading 1 after applying the operator to `|0⟩`.
    pub fn p_one(&self) -> T {
        self.m[1][0].norm_sqr()
    }

    pub fn cast<U: Real>(&self) -> Unitary2<U> {
        Unitary2::from_fn(|i, j| Complex::new(U::lit(self.m[i][j].re.as_f64()), U::lit(self.m[i][j].im.as_f64())))
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = *self;
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<T: Real> Mul for Unitary2<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.m[i][0] * rhs.m[0][j] + self.m[i][1] * rhs.m[1][j])
    }
}

impl<T: fmt::Debug> fmt::Debug for Unitary2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = |z: &Complex<T>| format!("{:+.6?}{:+.6?}i", z.re, z.im);
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e(&self.m[0][0]),
            e(&self.m[0][1]),
            e(&self.m[1][0]),
            e(&self.m[1][1])
        )
    }
}
