// SPDX-License-Identifier: Apache-2.0

//! Explicit graphs, matrices and embeddings used to check the closed-form
//! results vertex by vertex.

mod distortion;
mod embed;
mod families;
mod graph;
mod io;
mod matrix;
mod projection;

pub use distortion::{measure_distortion, measure_distortion_gram, ClassRatioRange, DistortionReport};
pub use embed::{embed_hamming, embed_johnson, Coordinates};
pub use families::{build_hamming, build_johnson, build_named, combinations, hamming_word, paley, NAMED_GRAPHS};
pub use graph::{all_pairs_bfs, extract_from_distances, extract_intersection_array, DistanceMatrix, ExplicitGraph};
pub use io::{load_edge_list, parse_edge_list, write_coordinates_csv};
pub use matrix::{
    coords_from_gram, jacobi_eigen, lanczos_eigenvalues, psd_min_eig, GramMatrix, SymmetricEigen, JACOBI_MAX_DIM,
};
pub use projection::{class_averages, expand_class_matrix, faithful_project, matrix_certificate_ratio};

/// Largest explicit graph the constructors will build.
pub const VERTEX_CAP: usize = 5000;

/// Seed for every randomized routine in the crate (SplitMix64).
pub const DEFAULT_SEED: u64 = 0x5EED;
