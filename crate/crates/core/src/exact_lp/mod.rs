// SPDX-License-Identifier: Apache-2.0

//! Exact least distortion of a distance-regular graph.
//!
//! Some optimal embedding is faithful, so its Gram matrix can be taken in
//! the Bose–Mesner algebra. There it is PSD exactly when its eigenvalue on
//! every common eigenspace is nonnegative. Writing the squared embedded
//! distance at graph distance `t` as
//!
//! ```text
//! S_t = sum_{j=1..d} g_j (1 - u_j(t)),   g_j >= 0
//! ```
//!
//! the semidefinite program collapses to the linear program
//!
//! ```text
//! minimize C  subject to  t^2 <= S_t <= C t^2   for t = 1..d.
//! ```

mod simplex;

pub use simplex::{
    simplex_solve, Constraint, LpProblem, LpSolution, Sense, VarBound, PIVOT_TOL,
};

use serde::Serialize;

use crate::certify::theorem1_bound;
use crate::error::Result;
use crate::spectral::Spectrum;

/// Weights below this are treated as absent when counting dimensions.
pub const WEIGHT_EPS: f64 = 1e-9;

/// Optimal faithful embedding of a distance-regular graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaithfulResult {
    /// Squared least distortion `c_2^2`.
    pub c2_sq: f64,
    /// Eigenspace weights `g_1..g_d`.
    pub g: Vec<f64>,
    /// `S_1..S_d`: squared embedded distance per graph distance.
    pub profile: Vec<f64>,
    /// Gram entry for each distance class `0..=d`.
    pub gram_class: Vec<f64>,
    pub embedding_dim: u64,
}

impl FaithfulResult {
    pub fn c2(&self) -> f64 {
        self.c2_sq.sqrt()
    }
}

/// Builds the faithful-embedding LP over variables `(g_1, ..., g_d, C)`.
pub fn faithful_problem(sp: &Spectrum) -> LpProblem {
    let d = sp.diameter();
    let mut objective = vec![0.0; d + 1];
    objective[d] = 1.0;
    let mut lp = LpProblem::new(objective).with_bound(d, VarBound::Free);
    for t in 1..=d {
        let t_sq = (t * t) as f64;
        let mut lower: Vec<f64> = (1..=d).map(|j| 1.0 - sp.u[j][t]).collect();
        lower.push(0.0);
        let mut upper = lower.clone();
        upper[d] = -t_sq;
        lp = lp
            .constrain(lower, Sense::Ge, t_sq)
            .constrain(upper, Sense::Le, 0.0);
    }
    lp
}

/// Solves for the least distortion over faithful embeddings, which equals
/// the least distortion of the graph.
pub fn faithful_lp(sp: &Spectrum) -> Result<FaithfulResult> {
    let d = sp.diameter();
    let solution = simplex_solve(&faithful_problem(sp))?;
    let g: Vec<f64> = solution.x[..d].to_vec();
    let profile = squared_distance_profile(sp, &g);
    let gram_class: Vec<f64> = (0..=d)
        .map(|t| 0.5 * (1..=d).map(|j| g[j - 1] * sp.u[j][t]).sum::<f64>())
        .collect();
    let embedding_dim = (1..=d)
        .filter(|&j| g[j - 1] > WEIGHT_EPS)
        .map(|j| sp.m[j].round() as u64)
        .sum();
    Ok(FaithfulResult {
        c2_sq: solution.objective,
        g,
        profile,
        gram_class,
        embedding_dim,
    })
}

/// `S_t = sum_j g_j (1 - u_j(t))` for `t = 1..d`; `g` holds `g_1..g_d`.
pub fn squared_distance_profile(sp: &Spectrum, g: &[f64]) -> Vec<f64> {
    let d = sp.diameter();
    (1..=d)
        .map(|t| (1..=d).map(|j| g[j - 1] * (1.0 - sp.u[j][t])).sum())
        .collect()
}

/// Lower bound, exact value and their gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tightness {
    pub bound_sq: f64,
    pub c2_sq: f64,
    pub gap: f64,
}

impl Tightness {
    pub fn is_tight(&self, tol: f64) -> bool {
        self.gap.abs() <= tol
    }
}

pub fn tightness_report(sp: &Spectrum) -> Result<Tightness> {
    let bound = theorem1_bound(sp)?;
    let exact = faithful_lp(sp)?;
    Ok(Tightness {
        bound_sq: bound.bound_sq,
        c2_sq: exact.c2_sq,
        gap: exact.c2_sq - bound.bound_sq,
    })
}
