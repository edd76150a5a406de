// SPDX-License-Identifier: Apache-2.0

//! Dense two-phase primal simplex with Bland's rule.
//!
//! Sized for the handful of variables and constraints the faithful
//! embedding program needs; there is no presolve and no sparse storage.

use crate::error::{Error, Result};

/// Entries of a pivot column at or below this magnitude are never pivoted on.
pub const PIVOT_TOL: f64 = 1e-10;
const COST_TOL: f64 = 1e-11;
const MAX_ITERATIONS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarBound {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coef: Vec<f64>,
    pub sense: Sense,
    pub rhs: f64,
}

/// `minimize objective . x` subject to the constraints and variable bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<VarBound>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

impl LpProblem {
    /// A problem over `n` nonnegative variables with no constraints.
    pub fn new(objective: Vec<f64>) -> Self {
        let n = objective.len();
        Self {
            objective,
            constraints: Vec::new(),
            bounds: vec![VarBound::NonNegative; n],
        }
    }

    pub fn with_bound(mut self, var: usize, bound: VarBound) -> Self {
        self.bounds[var] = bound;
        self
    }

    pub fn constrain(mut self, coef: Vec<f64>, sense: Sense, rhs: f64) -> Self {
        self.constraints.push(Constraint { coef, sense, rhs });
        self
    }

    pub fn n_vars(&self) -> usize {
        self.objective.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.n_vars();
        if self.bounds.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.bounds.len(),
            });
        }
        for row in &self.constraints {
            if row.coef.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.coef.len(),
                });
            }
            if !row.rhs.is_finite() || row.coef.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidParameters("non-finite LP entry".into()));
            }
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameters("non-finite objective".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    /// `rows x (cols + 1)`, last column is the right-hand side.
    t: Vec<Vec<f64>>,
    /// Reduced costs, last entry is minus the objective value.
    cost: Vec<f64>,
    basis: Vec<usize>,
    kinds: Vec<ColumnKind>,
    iterations: usize,
}

impl Tableau {
    fn cols(&self) -> usize {
        self.kinds.len()
    }

    fn set_objective(&mut self, c: &[f64]) {
        let n = self.cols();
        self.cost = c.to_vec();
        self.cost.push(0.0);
        for (row, &b) in self.t.iter().zip(&self.basis) {
            let cb = c[b];
            if cb != 0.0 {
                for j in 0..=n {
                    self.cost[j] -= cb * row[j];
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let n = self.cols();
        let p = self.t[r][e];
        for j in 0..=n {
            self.t[r][j] /= p;
        }
        self.t[r][e] = 1.0;
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[e];
            if f != 0.0 {
                for j in 0..=n {
                    row[j] -= f * pivot_row[j];
                }
                row[e] = 0.0;
            }
        }
        let f = self.cost[e];
        if f != 0.0 {
            for j in 0..=n {
                self.cost[j] -= f * pivot_row[j];
            }
            self.cost[e] = 0.0;
        }
        self.basis[r] = e;
        self.iterations += 1;
    }

    /// Runs Bland-rule iterations until optimal.
    fn optimize(&mut self, allow_artificial: bool) -> Result<()> {
        let n = self.cols();
        loop {
            if self.iterations > MAX_ITERATIONS {
                return Err(Error::NumericalFailure("simplex iteration limit".into()));
            }
            let entering = (0..n).find(|&j| {
                (allow_artificial || self.kinds[j] != ColumnKind::Artificial)
                    && !self.basis.contains(&j)
                    && self.cost[j] < -COST_TOL
            });
            let Some(e) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, f64)> = None;
            let mut tiny = false;
            for (i, row) in self.t.iter().enumerate() {
                let a = row[e];
                if a > PIVOT_TOL {
                    let ratio = row[n].max(0.0) / a;
                    best = match best {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            let tie = (ratio - br).abs() <= 1e-12 * br.abs().max(1.0);
                            if ratio < br && !tie || tie && self.basis[i] < self.basis[bi] {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    };
                } else if a > 0.0 {
                    tiny = true;
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, e),
                None if tiny => return Err(Error::PivotTolerance(PIVOT_TOL)),
                None => return Err(Error::Unbounded),
            }
        }
    }
}

/// Solves the problem, returning the optimal vertex or `Infeasible` /
/// `Unbounded`.
pub fn simplex_solve(problem: &LpProblem) -> Result<LpSolution> {
    problem.validate()?;
    let n_orig = problem.n_vars();

    // structural columns: free variables are split into x+ - x-
    let mut column_of = Vec::with_capacity(n_orig);
    let mut n_struct = 0;
    for bound in &problem.bounds {
        column_of.push(n_struct);
        n_struct += match bound {
            VarBound::NonNegative => 1,
            VarBound::Free => 2,
        };
    }

    let m = problem.constraints.len();
    let n_slack = problem
        .constraints
        .iter()
        .filter(|c| c.sense != Sense::Eq)
        .count();
    let n_art = problem
        .constraints
        .iter()
        .filter(|c| {
            let flip = c.rhs < 0.0;
            match c.sense {
                Sense::Le => flip,
                Sense::Ge => !flip,
                Sense::Eq => true,
            }
        })
        .count();
    let cols = n_struct + n_slack + n_art;

    let mut kinds = vec![ColumnKind::Structural; n_struct];
    kinds.extend(std::iter::repeat_n(ColumnKind::Slack, n_slack));
    kinds.extend(std::iter::repeat_n(ColumnKind::Artificial, n_art));

    let mut t = vec![vec![0.0; cols + 1]; m];
    let mut basis = vec![0; m];
    let (mut next_slack, mut next_art) = (n_struct, n_struct + n_slack);
    for (i, c) in problem.constraints.iter().enumerate() {
        let sign = if c.rhs < 0.0 { -1.0 } else { 1.0 };
        let sense = match (c.sense, sign < 0.0) {
            (Sense::Le, true) => Sense::Ge,
            (Sense::Ge, true) => Sense::Le,
            (s, _) => s,
        };
        let row = &mut t[i];
        for (j, &a) in c.coef.iter().enumerate() {
            let col = column_of[j];
            row[col] = sign * a;
            if problem.bounds[j] == VarBound::Free {
                row[col + 1] = -sign * a;
            }
        }
        row[cols] = sign * c.rhs;
        match sense {
            Sense::Le => {
                row[next_slack] = 1.0;
                basis[i] = next_slack;
                next_slack += 1;
            }
            Sense::Ge => {
                row[next_slack] = -1.0;
                next_slack += 1;
                row[next_art] = 1.0;
                basis[i] = next_art;
                next_art += 1;
            }
            Sense::Eq => {
                row[next_art] = 1.0;
                basis[i] = next_art;
                next_art += 1;
            }
        }
    }

    let mut tab = Tableau {
        t,
        cost: Vec::new(),
        basis,
        kinds,
        iterations: 0,
    };

    if n_art > 0 {
        let phase1: Vec<f64> = tab
            .kinds
            .iter()
            .map(|k| if *k == ColumnKind::Artificial { 1.0 } else { 0.0 })
            .collect();
        tab.set_objective(&phase1);
        tab.optimize(true)?;
        let infeasibility = -tab.cost[cols];
        let scale = 1.0
            + problem
                .constraints
                .iter()
                .fold(0.0f64, |acc, c| acc.max(c.rhs.abs()));
        if infeasibility > 1e-9 * scale {
            return Err(Error::Infeasible);
        }
        // drive remaining artificials out of the basis where possible
        for r in 0..m {
            if tab.kinds[tab.basis[r]] != ColumnKind::Artificial {
                continue;
            }
            let candidate = (0..cols).find(|&j| {
                tab.kinds[j] != ColumnKind::Artificial && tab.t[r][j].abs() > PIVOT_TOL
            });
            if let Some(j) = candidate {
                tab.pivot(r, j);
            }
        }
    }

    let mut phase2 = vec![0.0; cols];
    for (j, &c) in problem.objective.iter().enumerate() {
        let col = column_of[j];
        phase2[col] = c;
        if problem.bounds[j] == VarBound::Free {
            phase2[col + 1] = -c;
        }
    }
    tab.set_objective(&phase2);
    tab.optimize(false)?;

    let mut values = vec![0.0; cols];
    for (row, &b) in tab.t.iter().zip(&tab.basis) {
        values[b] = row[cols];
    }
    let x: Vec<f64> = (0..n_orig)
        .map(|j| {
            let col = column_of[j];
            match problem.bounds[j] {
                VarBound::NonNegative => values[col].max(0.0),
                VarBound::Free => values[col] - values[col + 1],
            }
        })
        .collect();
    let objective = x.iter().zip(&problem.objective).map(|(a, b)| a * b).sum();
    Ok(LpSolution {
        x,
        objective,
        iterations: tab.iterations,
    })
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    #[test]
    fn single_lower_bound() {
        let lp = LpProblem::new(vec![1.0]).constrain(vec![1.0], Sense::Ge, 3.0);
        let sol = simplex_solve(&lp).unwrap();
        assert_abs_diff_eq!(sol.x[0], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.objective, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn infeasible_box() {
        let lp = LpProblem::new(vec![1.0]).constrain(vec![1.0], Sense::Le, -1.0);
        assert_eq!(simplex_solve(&lp), Err(Error::Infeasible));
    }

    #[test]
    fn unbounded_direction() {
        let lp = LpProblem::new(vec![-1.0, 0.0]).constrain(vec![1.0, -1.0], Sense::Le, 1.0);
        assert_eq!(simplex_solve(&lp), Err(Error::Unbounded));
    }

    #[test]
    fn classic_two_variable() {
        // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let lp = LpProblem::new(vec![-3.0, -5.0])
            .constrain(vec![1.0, 0.0], Sense::Le, 4.0)
            .constrain(vec![0.0, 2.0], Sense::Le, 12.0)
            .constrain(vec![3.0, 2.0], Sense::Le, 18.0);
        let sol = simplex_solve(&lp).unwrap();
        assert_abs_diff_eq!(sol.x[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.x[1], 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.objective, -36.0, epsilon = 1e-12);
    }

    #[test]
    fn equality_and_free_variable() {
        // min x + y s.t. x - y = -2, x free, y >= 0, y <= 5 -> x = -2, y = 0
        let lp = LpProblem::new(vec![1.0, 1.0])
            .with_bound(0, VarBound::Free)
            .constrain(vec![1.0, -1.0], Sense::Eq, -2.0)
            .constrain(vec![0.0, 1.0], Sense::Le, 5.0);
        let sol = simplex_solve(&lp).unwrap();
        assert_abs_diff_eq!(sol.x[0], -2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.x[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn redundant_equalities() {
        let lp = LpProblem::new(vec![1.0, 2.0])
            .constrain(vec![1.0, 1.0], Sense::Eq, 1.0)
            .constrain(vec![2.0, 2.0], Sense::Eq, 2.0);
        let sol = simplex_solve(&lp).unwrap();
        assert_abs_diff_eq!(sol.x[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.objective, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule
        let lp = LpProblem::new(vec![-0.75, 150.0, -0.02, 6.0])
            .constrain(vec![0.25, -60.0, -0.04, 9.0], Sense::Le, 0.0)
            .constrain(vec![0.5, -90.0, -0.02, 3.0], Sense::Le, 0.0)
            .constrain(vec![0.0, 0.0, 1.0, 0.0], Sense::Le, 1.0);
        let sol = simplex_solve(&lp).unwrap();
        assert_abs_diff_eq!(sol.objective, -0.05, epsilon = 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let lp = LpProblem::new(vec![1.0]).constrain(vec![1.0, 2.0], Sense::Ge, 1.0);
        assert!(matches!(simplex_solve(&lp), Err(Error::DimensionMismatch { .. })));
    }
}
