// SPDX-License-Identifier: Apache-2.0

//! Bound, exact value and explicit embedding for Hamming graphs.
//!
//! Run with `cargo run --example hamming_cube -- 3 4` for H(3, 4).

use drg_distortion::certify::theorem1_bound;
use drg_distortion::exact_lp::faithful_lp;
use drg_distortion::graph_lab::{all_pairs_bfs, build_hamming, embed_hamming, measure_distortion};
use drg_distortion::scheme::hamming_array;
use drg_distortion::spectral::full_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>());
    let q = args.next().transpose()?.unwrap_or(2);
    let n = args.next().transpose()?.unwrap_or(3);

    let sp = full_spectrum(&hamming_array(q, n)?)?;
    let bound = theorem1_bound(&sp)?;
    let exact = faithful_lp(&sp)?;
    println!("H({q},{n}): {} vertices, eigenvalues {:?}", sp.n_vertices(), sp.theta);
    println!("alpha    = {}", bound.alpha);
    println!("bound^2  = {}", bound.bound_sq);
    println!("c2^2     = {}", exact.c2_sq);

    if let Ok(graph) = build_hamming(q, n) {
        let dm = all_pairs_bfs(&graph);
        let report = measure_distortion(&dm, &embed_hamming(q, n)?)?;
        println!(
            "product-of-simplices embedding: distortion {} (sqrt n = {})",
            report.distortion,
            (n as f64).sqrt()
        );
    } else {
        println!("too many vertices to embed explicitly");
    }
    Ok(())
}
