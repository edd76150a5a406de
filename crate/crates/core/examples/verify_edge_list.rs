// SPDX-License-Identifier: Apache-2.0

//! From an edge list to the intersection array, the exact distortion and
//! an optimal embedding.
//!
//! Pass a file path, or run without arguments to use the cube below.

use drg_distortion::exact_lp::faithful_lp;
use drg_distortion::graph_lab::{
    all_pairs_bfs, coords_from_gram, expand_class_matrix, extract_intersection_array, load_edge_list,
    measure_distortion, parse_edge_list,
};
use drg_distortion::certify::ClassMatrix;
use drg_distortion::spectral::full_spectrum;

const CUBE: &str = "\
# the 3-cube
0 1
0 2
0 4
1 3
1 5
2 3
2 6
3 7
4 5
4 6
5 7
6 7
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = match std::env::args().nth(1) {
        Some(path) => load_edge_list(path)?,
        None => parse_edge_list(CUBE)?,
    };
    let dm = all_pairs_bfs(&graph);
    let array = match extract_intersection_array(&graph, &dm) {
        Ok(a) => a,
        Err(e) => {
            println!("{e}");
            return Ok(());
        }
    };
    let sp = full_spectrum(&array)?;
    let exact = faithful_lp(&sp)?;
    println!("intersection array {array}, c2^2 = {}", exact.c2_sq);

    let gram = expand_class_matrix(&ClassMatrix::new(exact.gram_class.clone())?, &dm)?;
    let coords = coords_from_gram(&gram)?;
    println!(
        "optimal embedding in dimension {} with distortion {}",
        coords.dim(),
        measure_distortion(&dm, &coords)?.distortion
    );
    Ok(())
}
