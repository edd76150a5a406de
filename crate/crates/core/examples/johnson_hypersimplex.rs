// SPDX-License-Identifier: Apache-2.0

//! The hypersimplex embedding of J(v, n) and its per-class ratios.

use drg_distortion::certify::compute_alpha;
use drg_distortion::graph_lab::{all_pairs_bfs, build_johnson, embed_johnson, measure_distortion};
use drg_distortion::scheme::johnson_array;
use drg_distortion::spectral::full_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (v, n) = (9, 4);
    let sp = full_spectrum(&johnson_array(v, n)?)?;
    println!("J({v},{n}) alpha = {}", compute_alpha(&sp)?.alpha);

    let dm = all_pairs_bfs(&build_johnson(v, n)?);
    let report = measure_distortion(&dm, &embed_johnson(v, n)?)?;
    for class in &report.per_class_ratio_range {
        // every pair at distance i sits at sqrt(n i), so the range collapses
        println!(
            "distance {}: ratio {:.12} .. {:.12}",
            class.distance, class.min, class.max
        );
    }
    println!(
        "distortion {} with most expanded pairs at distance {} and most contracted at {}",
        report.distortion, report.most_expanded_distance, report.most_contracted_distance
    );
    Ok(())
}
