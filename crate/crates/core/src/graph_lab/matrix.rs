// SPDX-License-Identifier: Apache-2.0

//! Dense symmetric matrices: Gram matrices, cyclic Jacobi eigensolver and
//! a Lanczos minimum-eigenvalue check for large Bose–Mesner members.

use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph_lab::{Coordinates, DEFAULT_SEED};
use crate::spectral::symmetric_tridiagonal_eigenvalues;

/// Largest dimension handled by Jacobi; larger matrices use Lanczos.
pub const JACOBI_MAX_DIM: usize = 128;
const JACOBI_MAX_SWEEPS: usize = 30;
const JACOBI_OFF_TOL: f64 = 1e-12;

/// A dense `n x n` real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    n: usize,
    data: Vec<f64>,
}

impl GramMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Row-major data; rejected unless symmetric within `1e-12` relative to
    /// the largest entry.
    pub fn from_rows(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        let m = Self { n, data };
        let scale = m.data.iter().fold(0.0f64, |a, x| a.max(x.abs())).max(1.0);
        for i in 0..n {
            for j in 0..i {
                if (m.get(i, j) - m.get(j, i)).abs() > 1e-12 * scale {
                    return Err(Error::InvalidParameters(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    /// Gram matrix `X X^T` of the coordinate rows.
    pub fn from_coordinates(coords: &Coordinates) -> Self {
        let n = coords.n_points();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v: f64 = coords.row(i).iter().zip(coords.row(j)).map(|(a, b)| a * b).sum();
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Maximum absolute row sum; bounds the spectral radius.
    pub fn norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Squared distance `q_xx - 2 q_xy + q_yy` of the embedding this Gram
    /// matrix describes.
    pub fn squared_distance(&self, x: usize, y: usize) -> f64 {
        self.get(x, x) - 2.0 * self.get(x, y) + self.get(y, y)
    }

    fn mul_vec(&self, v: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
        }
    }
}

/// Eigen-decomposition from cyclic Jacobi rotations: eigenvalues in
/// ascending order with matching eigenvector columns (row-major `n x n`).
pub struct SymmetricEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<f64>,
}

/// Cyclic Jacobi until the off-diagonal Frobenius norm drops below
/// `1e-12 * ||m||_F`, at most 30 sweeps.
pub fn jacobi_eigen(m: &GramMatrix) -> Result<SymmetricEigen> {
    jacobi(m, true)
}

fn jacobi(m: &GramMatrix, want_vectors: bool) -> Result<SymmetricEigen> {
    let n = m.n();
    let mut a = m.data.clone();
    let mut v = if want_vectors { GramMatrix::identity(n).data } else { Vec::new() };
    let target = JACOBI_OFF_TOL * m.frobenius();

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = off(&a) <= target;
    let mut sweeps = 0;
    let mut row_p = vec![0.0; n];
    let mut row_q = vec![0.0; n];
    while !converged {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence(JACOBI_MAX_SWEEPS));
        }
        sweeps += 1;
        // rotations below this size cannot move the off-diagonal norm
        let skip = 1e-3 * target / n as f64;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= skip {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // rows p and q equal columns p and q by symmetry
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    row_p[k] = c * apk - s * aqk;
                    row_q[k] = s * apk + c * aqk;
                }
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                a[p * n..(p + 1) * n].copy_from_slice(&row_p);
                a[q * n..(q + 1) * n].copy_from_slice(&row_q);
                for k in 0..n {
                    a[k * n + p] = row_p[k];
                    a[k * n + q] = row_q[k];
                }
                if want_vectors {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        converged = off(&a) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let eigenvalues = order.iter().map(|&i| a[i * n + i]).collect();
    let mut eigenvectors = vec![0.0; if want_vectors { n * n } else { 0 }];
    for (col, &src) in order.iter().enumerate().filter(|_| want_vectors) {
        for k in 0..n {
            eigenvectors[k * n + col] = v[k * n + src];
        }
    }
    Ok(SymmetricEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// Lanczos with full reorthogonalization from a seeded Gaussian start,
/// run until the Krylov space becomes invariant. Returns the Ritz values
/// in ascending order.
///
/// Matrices in a Bose–Mesner algebra have `d + 1` distinct eigenvalues, so
/// the iteration stops after at most `d + 1` steps.
pub fn lanczos_eigenvalues(m: &GramMatrix) -> Vec<f64> {
    let n = m.n();
    if n == 0 {
        return Vec::new();
    }
    let norm = m.norm();
    let mut rng = SplitMix64::seed_from_u64(DEFAULT_SEED);
    let mut q: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
    normalize(&mut q);

    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut alphas = Vec::new();
    let mut betas_sq = Vec::new();
    let mut w = vec![0.0; n];
    for _ in 0..n {
        m.mul_vec(&q, &mut w);
        let alpha = dot(&q, &w);
        basis.push(q.clone());
        alphas.push(alpha);
        for _ in 0..2 {
            for b in &basis {
                let h = dot(b, &w);
                axpy(-h, b, &mut w);
            }
        }
        let beta = dot(&w, &w).sqrt();
        if beta <= 1e-10 * norm.max(f64::MIN_POSITIVE) || basis.len() == n {
            break;
        }
        betas_sq.push(beta * beta);
        q = w.iter().map(|x| x / beta).collect();
    }
    symmetric_tridiagonal_eigenvalues(&alphas, &betas_sq)
}

/// Smallest eigenvalue: Jacobi up to [`JACOBI_MAX_DIM`], Lanczos above.
pub fn psd_min_eig(m: &GramMatrix) -> Result<f64> {
    if m.n() == 0 {
        return Ok(0.0);
    }
    let eigenvalues = if m.n() <= JACOBI_MAX_DIM {
        jacobi(m, false)?.eigenvalues
    } else {
        lanczos_eigenvalues(m)
    };
    Ok(eigenvalues[0])
}

/// Recovers coordinates from a PSD Gram matrix. Eigenvalues in
/// `[-1e-8 ||g||, 1e-9 ||g||]` are dropped; anything more negative is an
/// error. Columns are ordered by decreasing eigenvalue.
pub fn coords_from_gram(g: &GramMatrix) -> Result<Coordinates> {
    let n = g.n();
    let norm = g.norm();
    let eig = jacobi_eigen(g)?;
    let min = eig.eigenvalues.first().copied().unwrap_or(0.0);
    if min < -1e-8 * norm {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
            tolerance: 1e-8 * norm,
        });
    }
    let keep: Vec<usize> = (0..n)
        .rev()
        .filter(|&k| eig.eigenvalues[k] > 1e-9 * norm)
        .collect();
    let dim = keep.len();
    let mut data = Vec::with_capacity(n * dim);
    for x in 0..n {
        for &k in &keep {
            data.push(eig.eigenvalues[k].sqrt() * eig.eigenvectors[x * n + k]);
        }
    }
    Coordinates::new(n, dim, data)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn normalize(v: &mut [f64]) {
    let norm = dot(v, v).sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    #[test]
    fn identity_min_eigenvalue() {
        assert_abs_diff_eq!(psd_min_eig(&GramMatrix::identity(4)).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn two_by_two() {
        let m = GramMatrix::from_rows(2, vec![1.0, 2.0, 2.0, 1.0]).unwrap();
        let e = jacobi_eigen(&m).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(psd_min_eig(&m).unwrap(), -1.0, epsilon = 1e-14);
    }

    #[test]
    fn jacobi_reconstructs() {
        let m = GramMatrix::from_fn(6, |i, j| 1.0 / (1.0 + i as f64 + j as f64));
        let e = jacobi_eigen(&m).unwrap();
        let n = 6;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n)
                    .map(|k| e.eigenvectors[i * n + k] * e.eigenvalues[k] * e.eigenvectors[j * n + k])
                    .sum();
                assert_abs_diff_eq!(r, m.get(i, j), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn lanczos_matches_jacobi() {
        // circulant matrix: few distinct eigenvalues
        let n = 12;
        let m = GramMatrix::from_fn(n, |i, j| {
            let d = (i as i64 - j as i64).rem_euclid(n as i64).min((j as i64 - i as i64).rem_euclid(n as i64));
            [2.0, -1.0, 0.25, 0.0, 0.0, 0.0, 0.5][d as usize]
        });
        let jac = jacobi_eigen(&m).unwrap().eigenvalues;
        let lan = lanczos_eigenvalues(&m);
        assert_abs_diff_eq!(jac[0], lan[0], epsilon = 1e-10);
        assert_abs_diff_eq!(jac[n - 1], lan[lan.len() - 1], epsilon = 1e-10);
    }

    #[test]
    fn coordinates_round_trip() {
        let id = GramMatrix::identity(2);
        let c = coords_from_gram(&id).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(GramMatrix::from_coordinates(&c), id);

        let pts = Coordinates::new(4, 2, vec![0.0, 0.0, 1.0, 0.0, 0.0, 2.0, 1.0, 1.0]).unwrap();
        let g = GramMatrix::from_coordinates(&pts);
        let back = GramMatrix::from_coordinates(&coords_from_gram(&g).unwrap());
        for (a, b) in g.as_slice().iter().zip(back.as_slice()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-7 * g.norm());
        }
        let bad = GramMatrix::from_rows(2, vec![1.0, 2.0, 2.0, 1.0]).unwrap();
        assert!(matches!(coords_from_gram(&bad), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn asymmetric_rejected() {
        assert!(GramMatrix::from_rows(2, vec![1.0, 2.0, 0.0, 1.0]).is_err());
    }
}
