// SPDX-License-Identifier: Apache-2.0

//! Averaging an arbitrary embedding over distance classes never makes it
//! worse.

use drg_distortion::graph_lab::{
    all_pairs_bfs, build_hamming, expand_class_matrix, faithful_project, measure_distortion_gram, GramMatrix,
    DEFAULT_SEED,
};
use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use rand_xoshiro::SplitMix64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dm = all_pairs_bfs(&build_hamming(2, 4)?);
    let n = dm.n();
    let mut rng = SplitMix64::seed_from_u64(DEFAULT_SEED);
    for trial in 0..5 {
        // Gram matrix of 16 random points in R^16
        let x: Vec<f64> = (0..n * n).map(|_| StandardNormal.sample(&mut rng)).collect();
        let q = GramMatrix::from_fn(n, |i, j| (0..n).map(|t| x[i * n + t] * x[j * n + t]).sum());
        let projected = expand_class_matrix(&faithful_project(&q, &dm)?, &dm)?;
        println!(
            "trial {trial}: distortion {:8.4} -> {:8.4}",
            measure_distortion_gram(&dm, &q)?.distortion,
            measure_distortion_gram(&dm, &projected)?.distortion
        );
    }
    Ok(())
}
