// SPDX-License-Identifier: Apache-2.0

//! Spectra of distance-regular graphs from their intersection arrays.
//!
//! The distinct eigenvalues `theta_0 > ... > theta_d` of the adjacency
//! matrix `A_1` are the eigenvalues of the `(d+1) x (d+1)` tridiagonal
//! intersection matrix with diagonal `a_i`, superdiagonal `c_{i+1}` and
//! subdiagonal `b_i`. A diagonal similarity makes it symmetric with
//! off-diagonal entries `sqrt(b_i c_{i+1})`; eigenvalues are found by
//! Sturm-sequence bisection.
//!
//! The distance polynomials `v_i` satisfy
//! `x v_i(x) = c_{i+1} v_{i+1}(x) + a_i v_i(x) + b_{i-1} v_{i-1}(x)` and
//! `A_i = v_i(A_1)`, so the eigenmatrix is `P[i][j] = v_i(theta_j)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scheme::{DerivedParams, IntersectionArray};

/// Relative gap below which two eigenvalues are considered equal.
pub const EIGENVALUE_GAP: f64 = 1e-9;

/// Number of eigenvalues of the symmetric tridiagonal matrix with diagonal
/// `diag` and squared off-diagonal `offdiag_sq` that are strictly below `x`.
pub fn sturm_count(diag: &[f64], offdiag_sq: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut pivot = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        let coupling = if i == 0 { 0.0 } else { offdiag_sq[i - 1] };
        pivot = d - x - coupling / pivot;
        if pivot == 0.0 {
            pivot = -f64::EPSILON * (d.abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of a symmetric tridiagonal matrix in ascending order,
/// each bisected until the bracket stops shrinking in floating point.
///
/// `offdiag_sq[i]` is the square of the `(i, i+1)` entry.
pub fn symmetric_tridiagonal_eigenvalues(diag: &[f64], offdiag_sq: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert_eq!(offdiag_sq.len() + 1, n.max(1), "off-diagonal length");
    if n == 0 {
        return Vec::new();
    }
    // Gershgorin disc radius bound
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { offdiag_sq[i - 1].sqrt() } else { 0.0 };
        let right = if i + 1 < n { offdiag_sq[i].sqrt() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    let pad = 1.0 + 1e-3 * (hi - lo).abs();
    lo -= pad;
    hi += pad;

    (0..n)
        .map(|k| {
            // smallest x with more than k eigenvalues below it
            let (mut a, mut b) = (lo, hi);
            for _ in 0..2048 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if sturm_count(diag, offdiag_sq, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Distinct eigenvalues of `A_1` in strictly descending order.
///
/// `theta_0` is returned as exactly `b_0` once bisection confirms it.
pub fn eigenvalues(ia: &IntersectionArray) -> Result<Vec<f64>> {
    let dp = ia.derive()?;
    eigenvalues_with(ia, &dp)
}

fn eigenvalues_with(ia: &IntersectionArray, dp: &DerivedParams) -> Result<Vec<f64>> {
    let d = ia.diameter();
    let diag: Vec<f64> = dp.a.iter().map(|&a| a as f64).collect();
    let offdiag_sq: Vec<f64> = (0..d)
        .map(|i| ia.b_at(i) as f64 * ia.c_at(i + 1) as f64)
        .collect();
    let mut theta = symmetric_tridiagonal_eigenvalues(&diag, &offdiag_sq);
    theta.reverse();

    let k = ia.valency() as f64;
    let scale = theta.iter().fold(1.0f64, |m, t| m.max(t.abs()));
    let tol = 1e-12 * k.max(1.0);
    if (theta[0] - k).abs() > tol.max(64.0 * f64::EPSILON * scale) {
        return Err(Error::NumericalFailure(format!(
            "largest eigenvalue {} differs from the valency {k}",
            theta[0]
        )));
    }
    theta[0] = k;
    for j in 1..theta.len() {
        if theta[j - 1] - theta[j] <= EIGENVALUE_GAP * scale {
            return Err(Error::NumericalFailure(format!(
                "eigenvalues {} and {} are not separated; expected {} distinct values",
                theta[j - 1],
                theta[j],
                d + 1
            )));
        }
    }
    Ok(theta)
}

/// Evaluates the distance polynomial `v_i` at `x` by the three-term
/// recurrence.
pub fn eval_v(ia: &IntersectionArray, i: usize, x: f64) -> f64 {
    assert!(i <= ia.diameter(), "index {i} exceeds the diameter");
    eval_all_v(ia, x)[i]
}

/// `v_0(x), ..., v_d(x)`.
pub fn eval_all_v(ia: &IntersectionArray, x: f64) -> Vec<f64> {
    let d = ia.diameter();
    let b0 = ia.valency();
    let mut v = Vec::with_capacity(d + 1);
    v.push(1.0);
    for i in 0..d {
        let a_i = (b0 - ia.b_at(i) - ia.c_at(i)) as f64;
        let prev = if i == 0 { 0.0 } else { ia.b_at(i - 1) as f64 * v[i - 1] };
        v.push(((x - a_i) * v[i] - prev) / ia.c_at(i + 1) as f64);
    }
    v
}

/// Generalized binomial coefficient `x (x-1) ... (x-t+1) / t!` for real `x`.
pub fn falling_binomial(x: f64, t: u64) -> f64 {
    (0..t).fold(1.0, |acc, s| acc * (x - s as f64) / (s + 1) as f64)
}

/// Krawtchouk polynomial
/// `K_i(x) = sum_t (-q)^t (q-1)^(i-t) C(n-t, i-t) C(x, t)`.
pub fn krawtchouk(q: u64, n: u64, i: u64, x: f64) -> f64 {
    assert!(i <= n);
    let q = q as f64;
    (0..=i)
        .map(|t| {
            (-q).powi(t as i32)
                * (q - 1.0).powi((i - t) as i32)
                * falling_binomial((n - t) as f64, i - t)
                * falling_binomial(x, t)
        })
        .sum()
}

/// Eberlein (dual Hahn) polynomial
/// `E_i(x) = sum_t (-1)^t C(x, t) C(n-x, i-t) C(v-n-x, i-t)`.
pub fn eberlein(v: u64, n: u64, i: u64, x: f64) -> f64 {
    assert!(i <= n && 2 * n <= v);
    (0..=i)
        .map(|t| {
            let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
            sign * falling_binomial(x, t)
                * falling_binomial(n as f64 - x, i - t)
                * falling_binomial((v - n) as f64 - x, i - t)
        })
        .sum()
}

/// Eigenvalues, eigenmatrix, cosine sequences and multiplicities of a
/// distance-regular graph.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    #[serde(skip)]
    array: IntersectionArray,
    #[serde(skip)]
    params: DerivedParams,
    /// `theta_0 > ... > theta_d`.
    pub theta: Vec<f64>,
    /// `P[i][j] = v_i(theta_j)`.
    #[serde(rename = "P")]
    pub p: Vec<Vec<f64>>,
    /// `u[j][i] = P[i][j] / k_i`.
    pub u: Vec<Vec<f64>>,
    /// Eigenspace dimensions.
    pub m: Vec<f64>,
}

impl Spectrum {
    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn params(&self) -> &DerivedParams {
        &self.params
    }

    pub fn diameter(&self) -> usize {
        self.array.diameter()
    }

    /// `k_i` as a float.
    pub fn k(&self, i: usize) -> f64 {
        self.params.k[i] as f64
    }

    pub fn n_vertices(&self) -> u64 {
        self.params.n_vertices
    }
}

/// Computes the full [`Spectrum`] and checks its invariants.
pub fn full_spectrum(ia: &IntersectionArray) -> Result<Spectrum> {
    let dp = ia.derive()?;
    let theta = eigenvalues_with(ia, &dp)?;
    let d = ia.diameter();

    let columns: Vec<Vec<f64>> = theta.iter().map(|&t| eval_all_v(ia, t)).collect();
    let p: Vec<Vec<f64>> = (0..=d)
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();
    let u: Vec<Vec<f64>> = columns
        .iter()
        .map(|col| {
            col.iter()
                .zip(&dp.k)
                .map(|(&v, &k)| v / k as f64)
                .collect()
        })
        .collect();
    let n = dp.n_vertices as f64;
    let m: Vec<f64> = u
        .iter()
        .map(|uj| {
            let norm: f64 = uj
                .iter()
                .zip(&dp.k)
                .map(|(&x, &k)| k as f64 * x * x)
                .sum();
            n / norm
        })
        .collect();

    for (i, row) in p.iter().enumerate() {
        let ki = dp.k[i] as f64;
        if row[0] != ki {
            return Err(Error::NumericalFailure(format!(
                "Perron entry P[{i}][0] = {} differs from k_{i} = {ki}",
                row[0]
            )));
        }
        if let Some(j) = row.iter().position(|x| x.abs() > ki + 1e-9 * ki.max(1.0)) {
            return Err(Error::NumericalFailure(format!(
                "|P[{i}][{j}]| = {} exceeds k_{i} = {ki}",
                row[j].abs()
            )));
        }
    }
    for (j, &mj) in m.iter().enumerate() {
        if !(mj.is_finite() && (mj - mj.round()).abs() <= 1e-6 && mj.round() >= 1.0) {
            return Err(Error::InfeasibleParameters(format!(
                "multiplicity m_{j} = {mj} is not a positive integer"
            )));
        }
    }
    let total: f64 = m.iter().sum();
    if (total - n).abs() > 1e-6 {
        return Err(Error::NumericalFailure(format!(
            "multiplicities sum to {total}, expected {n}"
        )));
    }

    Ok(Spectrum {
        array: ia.clone(),
        params: dp,
        theta,
        p,
        u,
        m,
    })
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::scheme::{hamming_array, johnson_array, srg_array};

    fn petersen() -> IntersectionArray {
        "3,2;1,1".parse().unwrap()
    }

    #[test]
    fn sturm_count_on_diagonal() {
        let diag = [1.0, 2.0, 3.0];
        let off = [0.0, 0.0];
        assert_eq!(sturm_count(&diag, &off, 0.5), 0);
        assert_eq!(sturm_count(&diag, &off, 2.5), 2);
        assert_eq!(sturm_count(&diag, &off, 10.0), 3);
    }

    #[test]
    fn tridiagonal_two_by_two() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let ev = symmetric_tridiagonal_eigenvalues(&[2.0, 2.0], &[1.0]);
        assert_abs_diff_eq!(ev[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ev[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn petersen_eigenvalues() {
        // characteristic polynomial of [[0,1,0],[3,0,1],[0,2,2]] is
        // -(x - 3)(x - 1)(x + 2)
        let theta = eigenvalues(&petersen()).unwrap();
        assert_eq!(theta.len(), 3);
        assert_eq!(theta[0], 3.0);
        assert_abs_diff_eq!(theta[1], 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(theta[2], -2.0, epsilon = 1e-13);
    }

    #[test]
    fn hamming_and_johnson_eigenvalues() {
        for (q, n) in [(2u64, 3u64), (3, 4), (5, 6)] {
            let theta = eigenvalues(&hamming_array(q, n).unwrap()).unwrap();
            for (j, t) in theta.iter().enumerate() {
                let expected = (n * (q - 1)) as f64 - (q * j as u64) as f64;
                assert_abs_diff_eq!(*t, expected, epsilon = 1e-10);
            }
        }
        for (v, n) in [(5u64, 2u64), (10, 4), (14, 7)] {
            let theta = eigenvalues(&johnson_array(v, n).unwrap()).unwrap();
            for (j, t) in theta.iter().enumerate() {
                let j = j as f64;
                let expected = j * j - (v as f64 + 1.0) * j + (n * (v - n)) as f64;
                assert_abs_diff_eq!(*t, expected, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn recurrence_base_cases() {
        let ia = johnson_array(9, 3).unwrap();
        for x in [-3.5, 0.0, 2.25, 17.0] {
            assert_eq!(eval_v(&ia, 0, x), 1.0);
            assert_eq!(eval_v(&ia, 1, x), x);
        }
    }

    #[test]
    fn hamming_top_polynomial_at_eigenvalues() {
        for (q, n) in [(2u64, 4u64), (3, 3), (4, 5)] {
            let ia = hamming_array(q, n).unwrap();
            for j in 0..=n {
                let theta = (n * (q - 1)) as f64 - (q * j) as f64;
                let expected = (-1f64).powi(j as i32) * ((q - 1) as f64).powi((n - j) as i32);
                assert_abs_diff_eq!(eval_v(&ia, n as usize, theta), expected, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn srg_second_polynomial_at_r_and_s() {
        for (nu, k, l, m) in [(10, 3, 0, 1), (13, 6, 2, 3), (16, 5, 0, 2), (9, 4, 1, 2)] {
            let ia = srg_array(nu, k, l, m).unwrap();
            let theta = eigenvalues(&ia).unwrap();
            for &x in &theta[1..] {
                assert_abs_diff_eq!(eval_v(&ia, 2, x), -x - 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn krawtchouk_values() {
        for (q, n) in [(2u64, 4u64), (3, 5), (5, 3)] {
            for i in 0..=n {
                let ki = crate::scheme::binomial(n, i).unwrap() as f64
                    * ((q - 1) as f64).powi(i as i32);
                assert_eq!(krawtchouk(q, n, i, 0.0), ki);
            }
            assert_eq!(krawtchouk(q, n, 0, 1.7), 1.0);
        }
        for j in 0..=4u64 {
            let expected = if j % 2 == 0 { 1.0 } else { -1.0 };
            assert_abs_diff_eq!(krawtchouk(2, 4, 4, j as f64), expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn eberlein_values() {
        let expected = [3.0, -2.0, 1.0];
        for (j, e) in expected.iter().enumerate() {
            assert_abs_diff_eq!(eberlein(5, 2, 2, j as f64), *e, epsilon = 1e-12);
        }
        let ia = johnson_array(5, 2).unwrap();
        for (theta, e) in [6.0, 1.0, -2.0].iter().zip(expected) {
            assert_abs_diff_eq!(eval_v(&ia, 2, *theta), e, epsilon = 1e-12);
        }
        for (v, n) in [(7u64, 3u64), (12, 5)] {
            for j in 0..=n {
                let jf = j as f64;
                let theta = jf * jf - (v as f64 + 1.0) * jf + (n * (v - n)) as f64;
                assert_abs_diff_eq!(eberlein(v, n, 1, jf), theta, epsilon = 1e-12);
            }
            for i in 0..=n {
                let ki = crate::scheme::binomial(n, i).unwrap()
                    * crate::scheme::binomial(v - n, i).unwrap();
                assert_eq!(eberlein(v, n, i, 0.0), ki as f64);
            }
        }
    }

    #[test]
    fn petersen_spectrum() {
        let sp = full_spectrum(&petersen()).unwrap();
        assert_abs_diff_eq!(sp.m[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sp.m[1], 5.0, epsilon = 1e-9);
        assert_abs_diff_eq!(sp.m[2], 4.0, epsilon = 1e-9);
        let u1 = [1.0, 1.0 / 3.0, -1.0 / 3.0];
        let u2 = [1.0, -2.0 / 3.0, 1.0 / 6.0];
        for i in 0..3 {
            assert_abs_diff_eq!(sp.u[1][i], u1[i], epsilon = 1e-12);
            assert_abs_diff_eq!(sp.u[2][i], u2[i], epsilon = 1e-12);
        }
        assert_eq!(sp.p[2][0], 6.0);
    }

    #[test]
    fn complete_graph_spectrum() {
        let sp = full_spectrum(&hamming_array(5, 1).unwrap()).unwrap();
        assert_eq!(sp.theta[0], 4.0);
        assert_abs_diff_eq!(sp.theta[1], -1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(sp.m[1], 4.0, epsilon = 1e-9);
    }

    #[test]
    fn infeasible_multiplicities_rejected() {
        // {2,1;1,1} is C_5 (fine); {4,3;1,1} would be a Moore graph of valency 4 on
        // 17 vertices, which has non-integral multiplicities.
        assert!(full_spectrum(&"2,1;1,1".parse().unwrap()).is_ok());
        assert!(matches!(
            full_spectrum(&"4,3;1,1".parse().unwrap()),
            Err(Error::InfeasibleParameters(_))
        ));
    }
}
