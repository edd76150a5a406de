// SPDX-License-Identifier: Apache-2.0

//! Explicit constructions of the graph families.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph_lab::graph::ExplicitGraph;
use crate::graph_lab::VERTEX_CAP;
use crate::scheme::binomial;

fn check_cap(vertices: u128) -> Result<usize> {
    if vertices > VERTEX_CAP as u128 {
        return Err(Error::TooLarge {
            vertices,
            cap: VERTEX_CAP,
        });
    }
    Ok(vertices as usize)
}

/// Number of vertices of `H(q, n)`, saturating.
pub(crate) fn hamming_size(q: u64, n: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(q as u128);
        if acc > u64::MAX as u128 {
            break;
        }
    }
    acc
}

/// Symbols of vertex `index` of `H(q, n)`, most significant first.
pub fn hamming_word(q: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut word = vec![0; n];
    for slot in word.iter_mut().rev() {
        *slot = index % q;
        index /= q;
    }
    word
}

/// Hamming graph `H(q, n)` on `q^n` words; vertex `i` is the base-`q`
/// expansion of `i`.
pub fn build_hamming(q: u64, n: u64) -> Result<ExplicitGraph> {
    if q < 2 || n < 1 {
        return Err(Error::InvalidParameters(format!(
            "H(q, n) needs q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    let size = check_cap(hamming_size(q, n))?;
    let (q, n) = (q as usize, n as usize);
    let mut edges = Vec::with_capacity(size * n * (q - 1) / 2);
    let mut place = 1;
    for _ in 0..n {
        for x in 0..size {
            let digit = (x / place) % q;
            for s in digit + 1..q {
                edges.push((x, x + (s - digit) * place));
            }
        }
        place *= q;
    }
    let labels = (0..size)
        .map(|i| join(&hamming_word(q, n, i)))
        .collect();
    ExplicitGraph::from_edges(size, edges, Some(labels))
}

/// All `n`-subsets of `0..v` in lexicographic order.
pub fn combinations(v: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    if n > v {
        return out;
    }
    loop {
        out.push(current.clone());
        let Some(i) = (0..n).rev().find(|&i| current[i] < v - n + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..n {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Johnson graph `J(v, n)`: `n`-subsets of `0..v`, adjacent when they
/// share `n - 1` elements. Vertices are in lexicographic order.
pub fn build_johnson(v: u64, n: u64) -> Result<ExplicitGraph> {
    if n < 1 || v < n.saturating_mul(2) {
        return Err(Error::InvalidParameters(format!(
            "J(v, n) needs v >= 2n >= 2, got v={v}, n={n}"
        )));
    }
    let size = binomial(v, n).map_or(u128::MAX, u128::from);
    let size = check_cap(size)?;
    let (v, n) = (v as usize, n as usize);
    let subsets = combinations(v, n);
    debug_assert_eq!(subsets.len(), size);
    let index: HashMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    let mut buf = Vec::with_capacity(n);
    for (x, set) in subsets.iter().enumerate() {
        for out_pos in 0..n {
            for new in 0..v {
                if set.binary_search(&new).is_ok() {
                    continue;
                }
                buf.clear();
                buf.extend(set.iter().enumerate().filter(|&(p, _)| p != out_pos).map(|(_, &e)| e));
                buf.push(new);
                buf.sort_unstable();
                let y = index[buf.as_slice()];
                if x < y {
                    edges.push((x, y));
                }
            }
        }
    }
    let labels = subsets.iter().map(|s| join(s)).collect();
    ExplicitGraph::from_edges(size, edges, Some(labels))
}

/// Graphs available through [`build_named`].
pub const NAMED_GRAPHS: &[&str] = &["petersen", "c5", "k33", "clebsch", "paley<p>"];

/// Catalog of small distance-regular graphs:
///
/// - `petersen`: Kneser graph on the 2-subsets of a 5-set
/// - `c5`: the pentagon
/// - `k33`: complete bipartite `K_{3,3}`
/// - `clebsch`: folded 5-cube, SRG(16, 5, 0, 2)
/// - `paley<p>` or `paley(<p>)`: Paley graph for a prime `p = 1 mod 4`, `p <= 101`
pub fn build_named(name: &str) -> Result<ExplicitGraph> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "petersen" => petersen(),
        "c5" => cycle(5),
        "k33" => complete_bipartite(3, 3),
        "clebsch" => clebsch(),
        _ => match parse_paley(&lower) {
            Some(p) => paley(p),
            None => Err(Error::UnknownName(name.to_string())),
        },
    }
}

fn parse_paley(name: &str) -> Option<u64> {
    let rest = name.strip_prefix("paley")?;
    let digits = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    digits.parse().ok()
}

fn petersen() -> Result<ExplicitGraph> {
    let subsets = combinations(5, 2);
    let mut edges = Vec::new();
    for (x, a) in subsets.iter().enumerate() {
        for (y, b) in subsets.iter().enumerate().skip(x + 1) {
            if a.iter().all(|e| !b.contains(e)) {
                edges.push((x, y));
            }
        }
    }
    let labels = subsets.iter().map(|s| join(s)).collect();
    ExplicitGraph::from_edges(10, edges, Some(labels))
}

fn cycle(n: usize) -> Result<ExplicitGraph> {
    ExplicitGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), None)
}

fn complete_bipartite(m: usize, n: usize) -> Result<ExplicitGraph> {
    let edges = (0..m).flat_map(|x| (m..m + n).map(move |y| (x, y)));
    ExplicitGraph::from_edges(m + n, edges, None)
}

fn clebsch() -> Result<ExplicitGraph> {
    // words of length 4; adjacent if they differ in one position or in all four
    let mut edges = Vec::new();
    for x in 0..16usize {
        for y in x + 1..16 {
            let w = (x ^ y).count_ones();
            if w == 1 || w == 4 {
                edges.push((x, y));
            }
        }
    }
    ExplicitGraph::from_edges(16, edges, None)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Paley graph on `Z_p`: `x ~ y` when `x - y` is a nonzero square.
pub fn paley(p: u64) -> Result<ExplicitGraph> {
    if !is_prime(p) || p % 4 != 1 || p > 101 {
        return Err(Error::InvalidParameters(format!(
            "Paley graphs are built for primes p = 1 mod 4 with p <= 101, got {p}"
        )));
    }
    let p = p as usize;
    let mut square = vec![false; p];
    for x in 1..p {
        square[x * x % p] = true;
    }
    let edges = (0..p).flat_map(|x| {
        let square = &square;
        (x + 1..p).filter(move |&y| square[y - x]).map(move |y| (x, y))
    });
    let edges: Vec<_> = edges.collect();
    ExplicitGraph::from_edges(p, edges, None)
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("-")
}
