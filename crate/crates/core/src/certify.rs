// SPDX-License-Identifier: Apache-2.0

//! Spectral lower bound on the least Euclidean distortion and its dual
//! certificate.
//!
//! For a distance-regular graph of diameter `d` the class matrix
//!
//! ```text
//! Q_alpha = (k_1 - alpha k_d) A_0 - A_1 + alpha A_d
//! ```
//!
//! has vanishing row sums and acts on the `j`-th common eigenspace as
//! `k_1 - alpha k_d - theta_j + alpha v_d(theta_j)`. The largest `alpha`
//! keeping all of these nonnegative gives `c_2^2 >= d^2 k_d alpha / k_1`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scheme::srg_array;
use crate::spectral::{full_spectrum, Spectrum};

/// Default absolute tolerance, scaled by `k_1`, for PSD and row-sum checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A member of the Bose–Mesner algebra, `sum_i coef[i] A_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassMatrix {
    pub coef: Vec<f64>,
}

impl ClassMatrix {
    pub fn new(coef: Vec<f64>) -> Result<Self> {
        if coef.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        if coef.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameters("class coefficients must be finite".into()));
        }
        Ok(Self { coef })
    }

    pub fn len(&self) -> usize {
        self.coef.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coef.is_empty()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            coef: self.coef.iter().map(|c| c * factor).collect(),
        }
    }
}

/// Optimal `alpha` together with the indices that attain it.
#[derive(Debug, Clone, PartialEq)]
pub struct Alpha {
    pub alpha: f64,
    /// Indices `j` in `1..=d` attaining the minimum.
    pub argmin_js: BTreeSet<usize>,
    /// Indices where `k_d - v_d(theta_j)` vanishes; they do not constrain `alpha`.
    pub unconstrained_js: BTreeSet<usize>,
}

/// Lower bound on `c_2^2` together with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub alpha: f64,
    pub bound_sq: f64,
    pub bound: f64,
    pub argmin_js: BTreeSet<usize>,
    pub unconstrained_js: BTreeSet<usize>,
    pub certificate_coef: Vec<f64>,
}

/// `alpha = min_j (k_1 - theta_j) / (k_d - v_d(theta_j))` over the indices
/// `j >= 1` whose denominator does not vanish.
pub fn compute_alpha(sp: &Spectrum) -> Result<Alpha> {
    let d = sp.diameter();
    let k1 = sp.k(1);
    let kd = sp.k(d);
    let mut ratios = Vec::with_capacity(d);
    let mut unconstrained_js = BTreeSet::new();
    for j in 1..=d {
        let denom = kd - sp.p[d][j];
        if denom.abs() <= 1e-9 * kd {
            unconstrained_js.insert(j);
        } else {
            ratios.push((j, (k1 - sp.theta[j]) / denom));
        }
    }
    let alpha = ratios
        .iter()
        .map(|&(_, r)| r)
        .fold(f64::INFINITY, f64::min);
    if !alpha.is_finite() {
        return Err(Error::NoConstraint);
    }
    let argmin_js = ratios
        .iter()
        .filter(|&&(_, r)| r - alpha <= 1e-9 * alpha.abs())
        .map(|&(j, _)| j)
        .collect();
    Ok(Alpha {
        alpha,
        argmin_js,
        unconstrained_js,
    })
}

/// The lower bound `c_2^2 >= d^2 k_d alpha / k_1`.
pub fn theorem1_bound(sp: &Spectrum) -> Result<BoundResult> {
    let a = compute_alpha(sp)?;
    let d = sp.diameter();
    let bound_sq = (d * d) as f64 * sp.k(d) * a.alpha / sp.k(1);
    let certificate = build_q_alpha(sp, a.alpha);
    Ok(BoundResult {
        alpha: a.alpha,
        bound_sq,
        bound: bound_sq.sqrt(),
        argmin_js: a.argmin_js,
        unconstrained_js: a.unconstrained_js,
        certificate_coef: certificate.coef,
    })
}

/// Positive eigenvalue `r` of a connected strongly regular graph.
pub fn srg_positive_eigenvalue(k: u64, lambda: u64, mu: u64) -> f64 {
    let diff = lambda as f64 - mu as f64;
    let disc = diff * diff + 4.0 * (k as f64 - mu as f64);
    0.5 * (diff + disc.sqrt())
}

/// Closed-form squared distortion `4(nu-k-1)(k-r) / (k(nu-k+r))` of a
/// connected strongly regular graph.
///
/// `r` is the positive adjacency eigenvalue
/// `((lambda - mu) + sqrt((lambda - mu)^2 + 4(k - mu))) / 2`.
pub fn srg_bound(nu: u64, k: u64, lambda: u64, mu: u64) -> Result<f64> {
    srg_array(nu, k, lambda, mu)?;
    let r = srg_positive_eigenvalue(k, lambda, mu);
    let (nu, k) = (nu as f64, k as f64);
    Ok(4.0 * (nu - k - 1.0) * (k - r) / (k * (nu - k + r)))
}

/// [`srg_bound`] with `r` checked against the spectrum of the array.
pub fn srg_bound_checked(nu: u64, k: u64, lambda: u64, mu: u64) -> Result<f64> {
    let bound = srg_bound(nu, k, lambda, mu)?;
    let sp = full_spectrum(&srg_array(nu, k, lambda, mu)?)?;
    let r = srg_positive_eigenvalue(k, lambda, mu);
    if (sp.theta[1] - r).abs() > 1e-9 * (k as f64) {
        return Err(Error::NumericalFailure(format!(
            "closed-form r = {r} disagrees with spectral theta_1 = {}",
            sp.theta[1]
        )));
    }
    Ok(bound)
}

/// `Q_alpha = (k_1 - alpha k_d) A_0 - A_1 + alpha A_d`.
///
/// For diameter 1 the classes `A_1` and `A_d` coincide and their
/// coefficients are added.
pub fn build_q_alpha(sp: &Spectrum, alpha: f64) -> ClassMatrix {
    let d = sp.diameter();
    let mut coef = vec![0.0; d + 1];
    coef[0] = sp.k(1) - alpha * sp.k(d);
    coef[1] -= 1.0;
    coef[d] += alpha;
    ClassMatrix { coef }
}

/// Eigenvalue of `sum_i coef_i A_i` on each common eigenspace,
/// `sum_i coef_i P[i][j]`.
pub fn class_matrix_eigenvalues(cm: &ClassMatrix, sp: &Spectrum) -> Result<Vec<f64>> {
    let d = sp.diameter();
    if cm.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: cm.len(),
        });
    }
    Ok((0..=d)
        .map(|j| cm.coef.iter().enumerate().map(|(i, c)| c * sp.p[i][j]).sum())
        .collect())
}

/// Row sum `sum_i coef_i k_i`, common to every row.
pub fn class_row_sum(cm: &ClassMatrix, sp: &Spectrum) -> f64 {
    cm.coef
        .iter()
        .enumerate()
        .map(|(i, c)| c * sp.k(i))
        .sum()
}

/// Certificate ratio evaluated per distance class:
/// `sum_{coef_i > 0} i^2 coef_i k_i / sum_{coef_i < 0} i^2 (-coef_i) k_i`.
///
/// The class matrix must be PSD and have vanishing row sums, both up to
/// `tol * k_1`.
pub fn class_certificate_ratio(cm: &ClassMatrix, sp: &Spectrum, tol: f64) -> Result<f64> {
    let eigen = class_matrix_eigenvalues(cm, sp)?;
    let abs_tol = tol * sp.k(1);
    let min_eigenvalue = eigen.iter().copied().fold(f64::INFINITY, f64::min);
    if min_eigenvalue < -abs_tol {
        return Err(Error::NotPsd {
            min_eigenvalue,
            tolerance: abs_tol,
        });
    }
    let row_sum = class_row_sum(cm, sp);
    if row_sum.abs() > abs_tol {
        return Err(Error::RowSumsNonzero {
            max_row_sum: row_sum.abs(),
            tolerance: abs_tol,
        });
    }
    let scale = cm.coef.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let threshold = 1e-12 * scale;
    let (mut num, mut den) = (0.0, 0.0);
    for (i, &c) in cm.coef.iter().enumerate().skip(1) {
        let weight = (i * i) as f64 * sp.k(i);
        if c > threshold {
            num += weight * c;
        } else if c < -threshold {
            den -= weight * c;
        }
    }
    if den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(num / den)
}

/// Whether the class matrix is PSD up to `tol * k_1`.
pub fn class_matrix_is_psd(cm: &ClassMatrix, sp: &Spectrum, tol: f64) -> Result<bool> {
    let eigen = class_matrix_eigenvalues(cm, sp)?;
    Ok(eigen.iter().all(|&e| e >= -tol * sp.k(1)))
}
