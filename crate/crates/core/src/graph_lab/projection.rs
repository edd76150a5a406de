// SPDX-License-Identifier: Apache-2.0

//! Moving between explicit matrices and the Bose–Mesner algebra.

use crate::certify::ClassMatrix;
use crate::error::{Error, Result};
use crate::graph_lab::graph::{extract_from_distances, DistanceMatrix};
use crate::graph_lab::matrix::{psd_min_eig, GramMatrix};

/// Orthogonal projection onto the span of the distance matrices `A_i`:
/// coefficient `i` is the mean of `q` over the ordered pairs at distance `i`.
///
/// The projection of a PSD matrix is PSD only when the distance classes
/// form an association scheme, so the graph must be distance-regular.
pub fn faithful_project(q: &GramMatrix, dm: &DistanceMatrix) -> Result<ClassMatrix> {
    extract_from_distances(dm)?;
    class_averages(q, dm)
}

/// Class averages without the distance-regularity check.
pub fn class_averages(q: &GramMatrix, dm: &DistanceMatrix) -> Result<ClassMatrix> {
    let n = dm.n();
    if q.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: q.n(),
        });
    }
    let mut sums = vec![0.0; dm.diameter() + 1];
    let mut counts = vec![0usize; dm.diameter() + 1];
    for x in 0..n {
        for (y, &d) in dm.row(x).iter().enumerate() {
            sums[d as usize] += q.get(x, y);
            counts[d as usize] += 1;
        }
    }
    ClassMatrix::new(
        sums.iter()
            .zip(&counts)
            .map(|(s, &c)| s / c as f64)
            .collect(),
    )
}

/// Explicit matrix `sum_i coef_i A_i`.
pub fn expand_class_matrix(cm: &ClassMatrix, dm: &DistanceMatrix) -> Result<GramMatrix> {
    if cm.len() != dm.diameter() + 1 {
        return Err(Error::DimensionMismatch {
            expected: dm.diameter() + 1,
            got: cm.len(),
        });
    }
    Ok(GramMatrix::from_fn(dm.n(), |x, y| cm.coef[dm.get(x, y)]))
}

/// Certificate ratio of an explicit PSD matrix with vanishing row sums:
/// `sum_{q_xy > 0} d(x,y)^2 q_xy / sum_{q_xy < 0} d(x,y)^2 (-q_xy)`, a
/// lower bound on the squared least distortion.
///
/// PSD and row-sum checks use `tol * ||q||`; entries within
/// `1e-12 * ||q||` of zero count for neither sign.
pub fn matrix_certificate_ratio(q: &GramMatrix, dm: &DistanceMatrix, tol: f64) -> Result<f64> {
    let n = dm.n();
    if q.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: q.n(),
        });
    }
    let norm = q.norm();
    let min_eigenvalue = psd_min_eig(q)?;
    if min_eigenvalue < -tol * norm {
        return Err(Error::NotPsd {
            min_eigenvalue,
            tolerance: tol * norm,
        });
    }
    let max_row_sum = q.row_sums().iter().fold(0.0f64, |m, s| m.max(s.abs()));
    if max_row_sum > tol * norm {
        return Err(Error::RowSumsNonzero {
            max_row_sum,
            tolerance: tol * norm,
        });
    }
    let threshold = 1e-12 * norm;
    let (mut num, mut den) = (0.0, 0.0);
    for x in 0..n {
        for (y, &d) in dm.row(x).iter().enumerate() {
            let v = q.get(x, y);
            let w = (d as f64) * (d as f64);
            if v > threshold {
                num += w * v;
            } else if v < -threshold {
                den -= w * v;
            }
        }
    }
    if den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(num / den)
}
