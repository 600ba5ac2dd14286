use nalgebra::{DMatrix, Schur};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Least-squares solution of `A·x = b` (`rows × cols`, row-major) by Householder
/// QR with column pivoting. Fails when the numerical rank is below `cols`.
pub fn lstsq<T: Real>(a: &[Vec<T>], b: &[T]) -> Result<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut r: Vec<Vec<T>> = a.to_vec();
    let mut rhs = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let frob = r.iter().flatten().map(|&v| v * v).sum::<T>().sqrt();
    let tol = T::tol(1e-9) * frob.max(T::min_positive_value());

    let col_norm = |r: &[Vec<T>], k: usize, j: usize| (k..m).map(|i| r[i][j] * r[i][j]).sum::<T>().sqrt();
    let mut rank = 0;
    for k in 0..n.min(m) {
        let p = (k..n)
            .max_by(|&x, &y| col_norm(&r, k, x).partial_cmp(&col_norm(&r, k, y)).unwrap())
            .unwrap();
        if p != k {
            perm.swap(k, p);
            for row in r.iter_mut() {
                row.swap(k, p);
            }
        }
        let norm = col_norm(&r, k, k);
        if norm <= tol {
            break;
        }
        rank += 1;
        let alpha = if r[k][k] > T::zero() { -norm } else { norm };
        let mut v: Vec<T> = (k..m).map(|i| r[i][k]).collect();
        v[0] = v[0] - alpha;
        let vv: T = v.iter().map(|&x| x * x).sum();
        #[allow(clippy::needless_range_loop)]
        if vv > T::zero() {
            for j in k..n {
                let dot: T = (k..m).map(|i| v[i - k] * r[i][j]).sum();
                let f = (dot + dot) / vv;
                for i in k..m {
                    r[i][j] = r[i][j] - f * v[i - k];
                }
            }
            let dot: T = (k..m).map(|i| v[i - k] * rhs[i]).sum();
            let f = (dot + dot) / vv;
            for i in k..m {
                rhs[i] = rhs[i] - f * v[i - k];
            }
        }
    }
    if rank < n {
        return Err(Error::SingularSystem { rank, unknowns: n });
    }
    let mut z = vec![T::zero(); n];
    for k in (0..n).rev() {
        let s: T = (k + 1..n).map(|j| r[k][j] * z[j]).sum();
        z[k] = (rhs[k] - s) / r[k][k];
    }
    let mut x = vec![T::zero(); n];
    for (k, &p) in perm.iter().enumerate() {
        x[p] = z[k];
    }
    Ok(x)
}

/// `max_i |(A·x − b)_i|`.
pub fn residual<T: Real>(a: &[Vec<T>], x: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .map(|(row, &bi)| (row.iter().zip(x).map(|(&r, &xi)| r * xi).sum::<T>() - bi).abs())
        .fold(T::zero(), T::max)
}

/// Horner evaluation; `coeffs[k]` multiplies `z^k`.
pub fn polyval(coeffs: &[Complex<f64>], z: Complex<f64>) -> Complex<f64> {
    coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
}

pub fn polyder(coeffs: &[Complex<f64>]) -> Vec<Complex<f64>> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

/// Roots of `Σ coeffs[k]·z^k`. Companion-matrix eigenvalues seed the search;
/// when the Schur iteration does not converge, Aberth iteration from a circle
/// of starting points takes over. Each root then gets a few Newton steps that
/// are kept only when they reduce `|p|`.
pub fn poly_roots(coeffs: &[f64]) -> Vec<Complex<f64>> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    let comp = DMatrix::from_fn(deg, deg, |i, j| {
        if i == 0 {
            -coeffs[deg - 1 - j] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let p: Vec<Complex<f64>> = coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect();
    let dp = polyder(&p);
    let seeds: Vec<Complex<f64>> = match Schur::try_new(comp, f64::EPSILON, 20_000) {
        Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
        None => aberth(&p, &dp),
    };
    seeds.into_iter().map(|z0| newton(&p, &dp, z0, 8)).collect()
}

/// Simultaneous Aberth–Ehrlich iteration for all roots.
fn aberth(p: &[Complex<f64>], dp: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let deg = p.len() - 1;
    let lead = p[deg].norm();
    let radius = 1.0 + p[..deg].iter().map(|c| c.norm() / lead).fold(0.0, f64::max);
    let mut z: Vec<Complex<f64>> = (0..deg)
        .map(|k| Complex::from_polar(0.5 * radius, 0.4 + std::f64::consts::TAU * k as f64 / deg as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let ratio = polyval(p, z[i]) / polyval(dp, z[i]);
            let repel: Complex<f64> = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex::new(1.0, 0.0) - ratio * repel);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

pub fn newton(p: &[Complex<f64>], dp: &[Complex<f64>], z0: Complex<f64>, steps: usize) -> Complex<f64> {
    let mut z = z0;
    let mut fz = polyval(p, z).norm();
    for _ in 0..steps {
        let d = polyval(dp, z);
        if d.norm() == 0.0 {
            break;
        }
        let cand = z - polyval(p, z) / d;
        let fc = polyval(p, cand).norm();
        if fc.is_nan() || fc >= fz {
            break;
        }
        z = cand;
        fz = fc;
    }
    z
}
