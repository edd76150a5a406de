// SPDX-License-Identifier: Apache-2.0

//! The dual certificate for the Petersen graph, checked classwise and as an
//! explicit 10 x 10 matrix.

use drg_distortion::certify::{class_certificate_ratio, class_matrix_eigenvalues, theorem1_bound, ClassMatrix};
use drg_distortion::graph_lab::{
    all_pairs_bfs, build_named, expand_class_matrix, extract_intersection_array, matrix_certificate_ratio,
    psd_min_eig,
};
use drg_distortion::spectral::full_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = build_named("petersen")?;
    let dm = all_pairs_bfs(&graph);
    let sp = full_spectrum(&extract_intersection_array(&graph, &dm)?)?;
    let bound = theorem1_bound(&sp)?;
    let q = ClassMatrix::new(bound.certificate_coef.clone())?;

    println!("Q_alpha = {:?} . (A_0, A_1, A_2)", q.coef);
    println!("eigenvalue per eigenspace: {:?}", class_matrix_eigenvalues(&q, &sp)?);
    println!("classwise ratio: {}", class_certificate_ratio(&q, &sp, 1e-9)?);

    let explicit = expand_class_matrix(&q, &dm)?;
    println!("explicit min eigenvalue: {:e}", psd_min_eig(&explicit)?);
    println!("explicit ratio: {}", matrix_certificate_ratio(&explicit, &dm, 1e-9)?);
    println!("so c2(Petersen)^2 >= {}", bound.bound_sq);
    Ok(())
}
