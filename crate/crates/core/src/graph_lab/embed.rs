// SPDX-License-Identifier: Apache-2.0

//! Explicit optimal embeddings of Hamming and Johnson graphs.
//!
//! Both place every vertex so that vertices at graph distance `i` are
//! `sqrt(n i)` apart, which gives distortion `sqrt(n)`:
//!
//! - `H(q, n)`: a word `(x_1, ..., x_n)` maps to `sqrt(n/2) (e_{x_1}, ..., e_{x_n})`,
//!   a point of the `n`-fold product of regular `q`-simplices.
//! - `J(v, n)`: a subset `X` maps to `sqrt(n/2) sum_{x in X} e_x`, a vertex of
//!   the hypersimplex. Two subsets at distance `i` differ in `2i` coordinates,
//!   so the factor `sqrt(n/2)` is what produces the distance `sqrt(n i)`.
//!
//! Vertex order matches [`build_hamming`](super::build_hamming) and
//! [`build_johnson`](super::build_johnson).

use crate::error::{Error, Result};
use crate::graph_lab::families::{combinations, hamming_size, hamming_word};
use crate::graph_lab::VERTEX_CAP;
use crate::scheme::binomial;

/// One row of coordinates per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Coordinates {
    n: usize,
    dim: usize,
    data: Vec<f64>,
}

impl Coordinates {
    pub fn new(n: usize, dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * dim {
            return Err(Error::DimensionMismatch {
                expected: n * dim,
                got: data.len(),
            });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameters("coordinates must be finite".into()));
        }
        Ok(Self { n, dim, data })
    }

    pub fn n_points(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn squared_distance(&self, x: usize, y: usize) -> f64 {
        self.row(x)
            .iter()
            .zip(self.row(y))
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }
}

fn too_large(vertices: u128) -> Result<()> {
    if vertices > VERTEX_CAP as u128 {
        return Err(Error::TooLarge {
            vertices,
            cap: VERTEX_CAP,
        });
    }
    Ok(())
}

/// Product-of-simplices embedding of `H(q, n)` in dimension `q n`.
pub fn embed_hamming(q: u64, n: u64) -> Result<Coordinates> {
    if q < 2 || n < 1 {
        return Err(Error::InvalidParameters(format!(
            "H(q, n) needs q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    too_large(hamming_size(q, n))?;
    let size = hamming_size(q, n) as usize;
    let (q, n) = (q as usize, n as usize);
    let scale = (n as f64 / 2.0).sqrt();
    let dim = q * n;
    let mut data = vec![0.0; size * dim];
    for x in 0..size {
        for (block, &symbol) in hamming_word(q, n, x).iter().enumerate() {
            data[x * dim + block * q + symbol] = scale;
        }
    }
    Coordinates::new(size, dim, data)
}

/// Hypersimplex embedding of `J(v, n)` in dimension `v`.
pub fn embed_johnson(v: u64, n: u64) -> Result<Coordinates> {
    if n < 1 || v < n.saturating_mul(2) {
        return Err(Error::InvalidParameters(format!(
            "J(v, n) needs v >= 2n >= 2, got v={v}, n={n}"
        )));
    }
    too_large(binomial(v, n).map_or(u128::MAX, u128::from))?;
    let (v, n) = (v as usize, n as usize);
    let scale = (n as f64 / 2.0).sqrt();
    let subsets = combinations(v, n);
    let mut data = vec![0.0; subsets.len() * v];
    for (x, set) in subsets.iter().enumerate() {
        for &e in set {
            data[x * v + e] = scale;
        }
    }
    Coordinates::new(subsets.len(), v, data)
}
