// SPDX-License-Identifier: Apache-2.0

//! Closed-form distortion of strongly regular graphs against the spectral
//! computation and the LP.

use drg_distortion::certify::{srg_bound, srg_positive_eigenvalue, theorem1_bound};
use drg_distortion::exact_lp::faithful_lp;
use drg_distortion::scheme::srg_array;
use drg_distortion::spectral::full_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>18} {:>8} {:>20} {:>20} {:>20}", "(nu,k,lambda,mu)", "r", "closed form", "spectral", "LP");
    for (nu, k, lambda, mu) in [
        (5, 2, 0, 1),
        (10, 3, 0, 1),
        (13, 6, 2, 3),
        (16, 5, 0, 2),
        (27, 10, 1, 5),
        (50, 7, 0, 1),
    ] {
        let sp = full_spectrum(&srg_array(nu, k, lambda, mu)?)?;
        println!(
            "{:>18} {:>8.4} {:>20.15} {:>20.15} {:>20.15}",
            format!("({nu},{k},{lambda},{mu})"),
            srg_positive_eigenvalue(k, lambda, mu),
            srg_bound(nu, k, lambda, mu)?,
            theorem1_bound(&sp)?.bound_sq,
            faithful_lp(&sp)?.c2_sq,
        );
    }
    Ok(())
}
