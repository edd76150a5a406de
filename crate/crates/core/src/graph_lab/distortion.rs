// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_lab::graph::DistanceMatrix;
use crate::graph_lab::matrix::GramMatrix;
use crate::graph_lab::Coordinates;

/// Smallest and largest ratio `||rho(x) - rho(y)|| / d(x, y)` within one
/// distance class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassRatioRange {
    pub distance: usize,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistortionReport {
    /// `max_ratio / min_ratio`: the distortion after the best rescaling.
    pub distortion: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    /// Distance class holding the most expanded pairs (smallest such
    /// distance on ties).
    pub most_expanded_distance: usize,
    /// Distance class holding the most contracted pairs (largest such
    /// distance on ties).
    pub most_contracted_distance: usize,
    pub per_class_ratio_range: Vec<ClassRatioRange>,
}

/// Distortion of a coordinate embedding against the graph metric.
pub fn measure_distortion(dm: &DistanceMatrix, coords: &Coordinates) -> Result<DistortionReport> {
    if coords.n_points() != dm.n() {
        return Err(Error::DimensionMismatch {
            expected: dm.n(),
            got: coords.n_points(),
        });
    }
    measure_with(dm, |x, y| coords.squared_distance(x, y))
}

/// Distortion of the embedding described by a Gram matrix, with squared
/// distances `q_xx - 2 q_xy + q_yy`.
pub fn measure_distortion_gram(dm: &DistanceMatrix, gram: &GramMatrix) -> Result<DistortionReport> {
    if gram.n() != dm.n() {
        return Err(Error::DimensionMismatch {
            expected: dm.n(),
            got: gram.n(),
        });
    }
    measure_with(dm, |x, y| gram.squared_distance(x, y))
}

fn measure_with<F>(dm: &DistanceMatrix, squared: F) -> Result<DistortionReport>
where
    F: Fn(usize, usize) -> f64 + Sync,
{
    let n = dm.n();
    let diameter = dm.diameter();
    if n < 2 {
        return Err(Error::InvalidParameters("need at least two vertices".into()));
    }
    let empty = || vec![(f64::INFINITY, f64::NEG_INFINITY); diameter + 1];
    let ranges = (0..n)
        .into_par_iter()
        .fold(empty, |mut acc, x| {
            let row = dm.row(x);
            for y in x + 1..n {
                let d = row[y] as usize;
                let ratio = squared(x, y).max(0.0).sqrt() / d as f64;
                let slot = &mut acc[d];
                slot.0 = slot.0.min(ratio);
                slot.1 = slot.1.max(ratio);
            }
            acc
        })
        .reduce(empty, |mut a, b| {
            for (sa, sb) in a.iter_mut().zip(b) {
                sa.0 = sa.0.min(sb.0);
                sa.1 = sa.1.max(sb.1);
            }
            a
        });

    let per_class: Vec<ClassRatioRange> = (1..=diameter)
        .map(|distance| ClassRatioRange {
            distance,
            min: ranges[distance].0,
            max: ranges[distance].1,
        })
        .collect();
    let min_ratio = per_class.iter().map(|c| c.min).fold(f64::INFINITY, f64::min);
    let max_ratio = per_class.iter().map(|c| c.max).fold(f64::NEG_INFINITY, f64::max);
    if min_ratio <= 0.0 {
        return Err(Error::DegenerateEmbedding);
    }
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs();
    let most_expanded_distance = per_class
        .iter()
        .find(|c| close(c.max, max_ratio))
        .map(|c| c.distance)
        .unwrap_or(1);
    let most_contracted_distance = per_class
        .iter()
        .rev()
        .find(|c| close(c.min, min_ratio))
        .map(|c| c.distance)
        .unwrap_or(diameter);
    Ok(DistortionReport {
        distortion: max_ratio / min_ratio,
        min_ratio,
        max_ratio,
        most_expanded_distance,
        most_contracted_distance,
        per_class_ratio_range: per_class,
    })
}
