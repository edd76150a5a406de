// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scheme::IntersectionArray;

/// A finite, simple, connected, undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
}

impl ExplicitGraph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges are
    /// merged; self-loops and disconnected graphs are rejected.
    pub fn from_edges<I>(n: usize, edges: I, labels: Option<Vec<String>>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidParameters("graph has no vertices".into()));
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: l.len(),
                })
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let mut adjacency = vec![Vec::new(); n];
        for (x, y) in edges {
            if x >= n || y >= n {
                return Err(Error::InvalidParameters(format!(
                    "edge ({x}, {y}) references a vertex outside 0..{n}"
                )));
            }
            if x == y {
                return Err(Error::SelfLoop(x));
            }
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let graph = Self { labels, adjacency };
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].binary_search(&y).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    fn is_connected(&self) -> bool {
        bfs_row(&self.adjacency, 0).iter().all(|&d| d != u32::MAX)
    }
}

fn bfs_row(adjacency: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adjacency.len()];
    fill_bfs(adjacency, source, &mut dist);
    dist
}

fn fill_bfs(adjacency: &[Vec<usize>], source: usize, dist: &mut [u32]) {
    dist.fill(u32::MAX);
    let mut queue = VecDeque::with_capacity(adjacency.len());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for &y in &adjacency[x] {
            if dist[y] == u32::MAX {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
}

/// Shortest-path distances between all pairs of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: usize,
}

impl DistanceMatrix {
    /// Wraps a row-major `n x n` distance table, checking symmetry and the
    /// zero diagonal.
    pub fn from_rows(n: usize, dist: Vec<u32>) -> Result<Self> {
        if dist.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: dist.len(),
            });
        }
        for x in 0..n {
            if dist[x * n + x] != 0 {
                return Err(Error::InvalidParameters(format!("d({x}, {x}) != 0")));
            }
            for y in 0..x {
                if dist[x * n + y] != dist[y * n + x] {
                    return Err(Error::InvalidParameters(format!(
                        "distance table is not symmetric at ({x}, {y})"
                    )));
                }
            }
        }
        let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
        Ok(Self { n, dist, diameter })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.dist[x * self.n..(x + 1) * self.n]
    }

    /// Number of ordered pairs at each distance `0..=diameter`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.diameter + 1];
        for &d in &self.dist {
            sizes[d as usize] += 1;
        }
        sizes
    }

    /// Adjacency lists of the distance-1 graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| {
                self.row(x)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &d)| d == 1)
                    .map(|(y, _)| y)
                    .collect()
            })
            .collect()
    }
}

/// Breadth-first search from every vertex; sources run in parallel.
pub fn all_pairs_bfs(g: &ExplicitGraph) -> DistanceMatrix {
    let n = g.n_vertices();
    let mut dist = vec![0u32; n * n];
    dist.par_chunks_mut(n)
        .enumerate()
        .for_each(|(x, row)| fill_bfs(&g.adjacency, x, row));
    let diameter = dist.par_iter().copied().max().unwrap_or(0) as usize;
    DistanceMatrix { n, dist, diameter }
}

/// Checks distance-regularity exhaustively and returns the intersection
/// array. On failure the error carries the first offending pair, in
/// row-major order, relative to the counts seen from vertex 0.
pub fn extract_intersection_array(
    g: &ExplicitGraph,
    dm: &DistanceMatrix,
) -> Result<IntersectionArray> {
    if g.n_vertices() != dm.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n_vertices(),
            got: dm.n(),
        });
    }
    intersection_array_from_adjacency(&g.adjacency, dm)
}

/// Same as [`extract_intersection_array`] with adjacency read off the
/// distance matrix.
pub fn extract_from_distances(dm: &DistanceMatrix) -> Result<IntersectionArray> {
    intersection_array_from_adjacency(&dm.adjacency(), dm)
}

/// `(c, b)` counts for every `y` as seen from `x`.
fn counts_from(adjacency: &[Vec<usize>], dm: &DistanceMatrix, x: usize) -> Vec<(u32, u32)> {
    let n = dm.n();
    let row_x = dm.row(x);
    let mut c = vec![0u32; n];
    let mut b = vec![0u32; n];
    for &z in &adjacency[x] {
        let row_z = dm.row(z);
        for y in 0..n {
            let (dz, dx) = (row_z[y], row_x[y]);
            c[y] += u32::from(dz + 1 == dx);
            b[y] += u32::from(dz == dx + 1);
        }
    }
    c.into_iter().zip(b).collect()
}

fn intersection_array_from_adjacency(
    adjacency: &[Vec<usize>],
    dm: &DistanceMatrix,
) -> Result<IntersectionArray> {
    let n = dm.n();
    let diameter = dm.diameter();
    if diameter == 0 {
        return Err(Error::InvalidParameters("graph has a single vertex".into()));
    }

    // reference counts from vertex 0
    let mut reference: Vec<Option<(u32, u32)>> = vec![None; diameter + 1];
    let counts0 = counts_from(adjacency, dm, 0);
    let row0 = dm.row(0);
    for y in 0..n {
        let i = row0[y] as usize;
        match reference[i] {
            None => reference[i] = Some(counts0[y]),
            Some(r) if r != counts0[y] => {
                return Err(witness(0, y, i, counts0[y], r));
            }
            Some(_) => {}
        }
    }
    if let Some(i) = reference.iter().position(Option::is_none) {
        let (x, y) = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| dm.get(x, y) == i)
            .expect("distance class is nonempty");
        return Err(Error::NotDistanceRegular {
            x,
            y,
            distance: i,
            detail: format!("no vertex at distance {i} from vertex 0"),
        });
    }
    let reference: Vec<(u32, u32)> = reference.into_iter().map(Option::unwrap).collect();

    let violation = (1..n).into_par_iter().find_map_first(|x| {
        let counts = counts_from(adjacency, dm, x);
        dm.row(x).iter().enumerate().find_map(|(y, &i)| {
            let i = i as usize;
            (counts[y] != reference[i]).then(|| witness(x, y, i, counts[y], reference[i]))
        })
    });
    if let Some(err) = violation {
        return Err(err);
    }

    let b: Vec<u64> = (0..diameter).map(|i| reference[i].1 as u64).collect();
    let c: Vec<u64> = (1..=diameter).map(|i| reference[i].0 as u64).collect();
    let array = IntersectionArray::new(b, c)?;
    array.derive()?;
    Ok(array)
}

fn witness(x: usize, y: usize, i: usize, got: (u32, u32), expected: (u32, u32)) -> Error {
    Error::NotDistanceRegular {
        x,
        y,
        distance: i,
        detail: format!(
            "c = {}, b = {} where vertex 0 sees c = {}, b = {}",
            got.0, got.1, expected.0, expected.1
        ),
    }
}
