// SPDX-License-Identifier: Apache-2.0

//! The dense simplex solver on its own.

use drg_distortion::exact_lp::{simplex_solve, LpProblem, Sense, VarBound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // minimize -3x - 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18
    let lp = LpProblem::new(vec![-3.0, -5.0])
        .constrain(vec![1.0, 0.0], Sense::Le, 4.0)
        .constrain(vec![0.0, 2.0], Sense::Le, 12.0)
        .constrain(vec![3.0, 2.0], Sense::Le, 18.0);
    let sol = simplex_solve(&lp)?;
    println!("x = {:?}, objective {} after {} pivots", sol.x, sol.objective, sol.iterations);

    // a free variable: minimize z  s.t.  z >= x - 1, z >= 1 - x, x = 0.25
    let lp = LpProblem::new(vec![0.0, 1.0])
        .with_bound(1, VarBound::Free)
        .constrain(vec![-1.0, 1.0], Sense::Ge, -1.0)
        .constrain(vec![1.0, 1.0], Sense::Ge, 1.0)
        .constrain(vec![1.0, 0.0], Sense::Eq, 0.25);
    let sol = simplex_solve(&lp)?;
    println!("|0.25 - 1| = {}", sol.objective);
    Ok(())
}
