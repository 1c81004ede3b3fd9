//! Finite simple undirected graphs and their geodesic metric: BFS all-pairs
//! distances, intervals, and collinear-triple detection.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Triple lists larger than this are not materialized; callers fall back to
/// on-the-fly pair checks against the distance matrix.
pub const TRIPLE_MATERIALIZE_CAP: usize = 2_000_000;

/// A finite simple undirected graph with vertices `0..n`.
///
/// Edges are stored normalized (`u < v`, sorted, deduplicated) together with
/// per-vertex sorted adjacency lists. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Pairs may arrive in
    /// any order and duplicates are dropped; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: normalized, adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edge list, sorted with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, order: self.n })
        }
    }
}

/// Dense all-pairs geodesic distances of a connected graph.
///
/// Entries are 16-bit hop counts; the dense layout keeps triple checks O(1)
/// in the solver's inner loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

const UNREACHED: u16 = u16::MAX;

impl DistanceMatrix {
    /// Runs a BFS from every source. Errors on disconnected input; the
    /// geodesic metric is defined only for connected graphs.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut d = vec![UNREACHED; n * n];
        // Rows are independent, so per-source BFS parallelizes without
        // affecting the result.
        let run_row = |(src, row): (usize, &mut [u16])| {
            let mut queue = VecDeque::from([src]);
            row[src] = 0;
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == UNREACHED {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        };
        if n >= 256 {
            d.par_chunks_mut(n).enumerate().for_each(run_row);
        } else {
            d.chunks_mut(n).enumerate().for_each(run_row);
        }
        if d.contains(&UNREACHED) {
            return Err(Error::Disconnected);
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Geodesic distance between `u` and `v`.
    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, order: self.n })
        }
    }

    /// `{x, y, z}` is collinear when one of the three lies on a shortest path
    /// between the other two. Assumes the vertices are pairwise distinct.
    #[inline]
    pub(crate) fn collinear_unchecked(&self, x: usize, y: usize, z: usize) -> bool {
        let dxy = self.distance(x, y);
        let dxz = self.distance(x, z);
        let dyz = self.distance(y, z);
        dxy == dxz + dyz || dxz == dxy + dyz || dyz == dxy + dxz
    }
}

/// The interval `I(u,v)`: all vertices on shortest `u,v`-paths, i.e. every
/// `w` with `d(u,v) = d(u,w) + d(w,v)`. Sorted ascending; always contains
/// `u` and `v`.
pub fn interval(dm: &DistanceMatrix, u: usize, v: usize) -> Result<Vec<usize>> {
    dm.check_vertex(u)?;
    dm.check_vertex(v)?;
    let duv = dm.distance(u, v);
    Ok((0..dm.order())
        .filter(|&w| dm.distance(u, w) + dm.distance(w, v) == duv)
        .collect())
}

/// True iff some labeling of `{x, y, z}` puts one vertex on a shortest path
/// between the other two. Symmetric in all three arguments.
pub fn is_collinear_triple(dm: &DistanceMatrix, x: usize, y: usize, z: usize) -> Result<bool> {
    for w in [x, y, z] {
        dm.check_vertex(w)?;
    }
    if x == y || x == z || y == z {
        return Err(Error::NotDistinct);
    }
    Ok(dm.collinear_unchecked(x, y, z))
}

/// All collinear triples `{x < y < z}` in lexicographic order.
///
/// Returns `None` when the list would exceed [`TRIPLE_MATERIALIZE_CAP`];
/// callers are expected to fall back to per-pair checks.
pub fn collinear_triples_capped(dm: &DistanceMatrix) -> Option<Vec<[usize; 3]>> {
    let n = dm.order();
    let mut triples = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if dm.collinear_unchecked(x, y, z) {
                    if triples.len() == TRIPLE_MATERIALIZE_CAP {
                        return None;
                    }
                    triples.push([x, y, z]);
                }
            }
        }
    }
    Some(triples)
}

/// All collinear triples, materialized unconditionally.
pub fn collinear_triples(dm: &DistanceMatrix) -> Vec<[usize; 3]> {
    let n = dm.order();
    let mut triples = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if dm.collinear_unchecked(x, y, z) {
                    triples.push([x, y, z]);
                }
            }
        }
    }
    triples
}

/// Per-vertex count of collinear triples containing the vertex, computed
/// without materializing the triple list.
pub(crate) fn collinearity_degrees(dm: &DistanceMatrix) -> Vec<u64> {
    let n = dm.order();
    let mut deg = vec![0u64; n];
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if dm.collinear_unchecked(x, y, z) {
                    deg[x] += 1;
                    deg[y] += 1;
                    deg[z] += 1;
                }
            }
        }
    }
    deg
}

pub(crate) fn check_vertices(dm: &DistanceMatrix, vs: &[usize]) -> Result<()> {
    for &v in vs {
        dm.check_vertex(v)?;
    }
    Ok(())
}

impl Graph {
    /// Convenience wrapper building the distance matrix of `self`.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        DistanceMatrix::new(self)
    }

    pub(crate) fn validate_vertex(&self, u: usize) -> Result<()> {
        self.check_vertex(u)
    }
}
