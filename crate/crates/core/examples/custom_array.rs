// SPDX-License-Identifier: Apache-2.0

//! Spectrum, bound and exact value for any intersection array.
//!
//! `cargo run --example custom_array -- "3,2,2;1,1,3"` runs the Heawood
//! graph. The default is the Biggs-Smith graph.

use drg_distortion::certify::theorem1_bound;
use drg_distortion::exact_lp::faithful_lp;
use drg_distortion::scheme::IntersectionArray;
use drg_distortion::spectral::full_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,2,2,2,1,1,1;1,1,1,1,1,1,3".into());
    let array: IntersectionArray = text.parse()?;
    let sp = full_spectrum(&array)?;
    println!("{array}: {} vertices, diameter {}", sp.n_vertices(), sp.diameter());
    for (theta, m) in sp.theta.iter().zip(&sp.m) {
        println!("  eigenvalue {theta:>10.6} multiplicity {m:.0}");
    }
    let bound = theorem1_bound(&sp)?;
    let exact = faithful_lp(&sp)?;
    println!("bound^2 {} attained at j in {:?}", bound.bound_sq, bound.argmin_js);
    println!("c2^2    {} with eigenspace weights {:?}", exact.c2_sq, exact.g);
    Ok(())
}
