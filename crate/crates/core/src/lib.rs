// SPDX-License-Identifier: Apache-2.0

//! Least-distortion Euclidean embeddings of distance-regular graphs.
//!
//! Everything is driven by the intersection array. [`scheme`] parses and
//! validates arrays, [`spectral`] computes the eigenvalue tables, and
//! [`certify`] turns them into the spectral lower bound together with its
//! PSD certificate. [`exact_lp`] solves the small LP over eigenspace weights
//! whose optimum is the exact least squared distortion of the graph.
//! [`graph_lab`] builds explicit graphs and embeddings, so every class-level
//! claim can be checked against real vertex coordinates.
//!
//! ```
//! use drg_distortion::{certify::theorem1_bound, exact_lp::faithful_lp, scheme, spectral};
//!
//! let petersen: scheme::IntersectionArray = "3,2;1,1".parse().unwrap();
//! let sp = spectral::full_spectrum(&petersen).unwrap();
//! let bound = theorem1_bound(&sp).unwrap();
//! let exact = faithful_lp(&sp).unwrap();
//! assert!((bound.bound_sq - 2.0).abs() < 1e-9);
//! assert!((exact.c2_sq - bound.bound_sq).abs() < 1e-9);
//! ```

pub mod certify;
pub mod cli;
pub mod error;
pub mod exact_lp;
pub mod format;
pub mod graph_lab;
pub mod scheme;
pub mod spectral;
