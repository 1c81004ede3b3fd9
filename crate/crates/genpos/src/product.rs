//! Cartesian products of graphs: materialized form with a row-major index
//! map, the additive factored metric, interval factorization, layers, and
//! the maximal general position set construction for products of two trees.

use crate::error::{Error, Result};
use crate::graph::{interval, DistanceMatrix, Graph};
use crate::set::VertexSet;
use crate::tree::TreeProfile;

/// The Cartesian product of two graphs, carrying both factors plus the
/// materialized graph on `n(G) * n(H)` vertices.
///
/// Coordinates map row-major: `(a, b) <-> a * n(H) + b`.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    g: Graph,
    h: Graph,
    materialized: Graph,
}

/// Which factor a layer copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerKind {
    /// A copy of `G` at a fixed `H`-coordinate.
    G,
    /// A copy of `H` at a fixed `G`-coordinate.
    H,
}

/// A layer of a product: the copy of one factor obtained by fixing the other
/// coordinate at `anchor`. Vertices are materialized indices in index-map
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub kind: LayerKind,
    pub anchor: usize,
    pub vertices: Vec<usize>,
}

impl ProductGraph {
    /// Builds `G [] H`: `(a,b)` and `(a',b')` are adjacent iff the pairs
    /// agree in one coordinate and are adjacent in the other factor.
    pub fn new(g: Graph, h: Graph) -> Self {
        let ng = g.order();
        let nh = h.order();
        let mut edges = Vec::with_capacity(ng * h.size() + nh * g.size());
        for a in 0..ng {
            for &(b, b2) in h.edges() {
                edges.push((a * nh + b, a * nh + b2));
            }
        }
        for b in 0..nh {
            for &(a, a2) in g.edges() {
                edges.push((a * nh + b, a2 * nh + b));
            }
        }
        let materialized = Graph::new(ng * nh, &edges).expect("product of valid graphs is valid");
        ProductGraph { g, h, materialized }
    }

    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn materialized(&self) -> &Graph {
        &self.materialized
    }

    pub fn order(&self) -> usize {
        self.materialized.order()
    }

    #[inline]
    pub fn flatten(&self, a: usize, b: usize) -> usize {
        a * self.h.order() + b
    }

    #[inline]
    pub fn unflatten(&self, idx: usize) -> (usize, usize) {
        (idx / self.h.order(), idx % self.h.order())
    }

    /// The layer of `kind` anchored at the given coordinate of the opposite
    /// factor: a G-layer fixes an `H`-vertex, an H-layer fixes a `G`-vertex.
    pub fn layer(&self, kind: LayerKind, anchor: usize) -> Result<Layer> {
        let vertices = match kind {
            LayerKind::G => {
                self.h.validate_vertex(anchor)?;
                (0..self.g.order()).map(|a| self.flatten(a, anchor)).collect()
            }
            LayerKind::H => {
                self.g.validate_vertex(anchor)?;
                (0..self.h.order()).map(|b| self.flatten(anchor, b)).collect()
            }
        };
        Ok(Layer { kind, anchor, vertices })
    }
}

/// Distance in the product via the additive metric:
/// `d((a,b),(a',b')) = d_G(a,a') + d_H(b,b')`.
pub fn product_distance(
    dm_g: &DistanceMatrix,
    dm_h: &DistanceMatrix,
    (a, b): (usize, usize),
    (a2, b2): (usize, usize),
) -> Result<usize> {
    check_coord(dm_g, dm_h, (a, b))?;
    check_coord(dm_g, dm_h, (a2, b2))?;
    Ok(dm_g.distance(a, a2) + dm_h.distance(b, b2))
}

/// Interval in the product as the set product of factor intervals:
/// `I((a,b),(a',b')) = I_G(a,a') x I_H(b,b')`. Sorted row-major.
pub fn product_interval(
    dm_g: &DistanceMatrix,
    dm_h: &DistanceMatrix,
    (a, b): (usize, usize),
    (a2, b2): (usize, usize),
) -> Result<Vec<(usize, usize)>> {
    let ig = interval(dm_g, a, a2)?;
    let ih = interval(dm_h, b, b2)?;
    let mut out = Vec::with_capacity(ig.len() * ih.len());
    for &x in &ig {
        for &y in &ih {
            out.push((x, y));
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn check_coord(dm_g: &DistanceMatrix, dm_h: &DistanceMatrix, (a, b): (usize, usize)) -> Result<()> {
    if a >= dm_g.order() {
        return Err(Error::VertexOutOfRange { vertex: a, order: dm_g.order() });
    }
    if b >= dm_h.order() {
        return Err(Error::VertexOutOfRange { vertex: b, order: dm_h.order() });
    }
    Ok(())
}

/// The maximal general position set `(L(T) x {vj}) u ({vi} x L(T*))` of a
/// product of two trees of order >= 3, where `vi`, `vj` are non-leaf
/// vertices of their factors. Returns sorted coordinate pairs of cardinality
/// `l(T) + l(T*)`.
pub fn construct_maximal_gp(
    t_g: &TreeProfile,
    t_h: &TreeProfile,
    vi: usize,
    vj: usize,
) -> Result<Vec<(usize, usize)>> {
    for t in [t_g, t_h] {
        if t.order() < 3 {
            return Err(Error::FactorTooSmall(t.order()));
        }
    }
    t_g.graph().validate_vertex(vi)?;
    t_h.graph().validate_vertex(vj)?;
    if t_g.is_leaf(vi) {
        return Err(Error::NotANonLeaf(vi));
    }
    if t_h.is_leaf(vj) {
        return Err(Error::NotANonLeaf(vj));
    }
    let mut coords: Vec<(usize, usize)> = t_g.leaves().iter().map(|&a| (a, vj)).collect();
    coords.extend(t_h.leaves().iter().map(|&b| (vi, b)));
    coords.sort_unstable();
    Ok(coords)
}

/// Same construction flattened into materialized indices of `p`.
pub fn construct_maximal_gp_flat(
    p: &ProductGraph,
    t_g: &TreeProfile,
    t_h: &TreeProfile,
    vi: usize,
    vj: usize,
) -> Result<VertexSet> {
    let coords = construct_maximal_gp(t_g, t_h, vi, vj)?;
    Ok(VertexSet::constructed(
        coords.into_iter().map(|(a, b)| p.flatten(a, b)).collect(),
    ))
}

/// The additive prediction `l(T) + l(T*)` for the general position number of
/// a product of two trees, valid when both factors have order >= 3.
pub fn theorem_prediction(t_g: &TreeProfile, t_h: &TreeProfile) -> Result<usize> {
    for t in [t_g, t_h] {
        if t.order() < 3 {
            return Err(Error::FactorTooSmall(t.order()));
        }
    }
    Ok(t_g.leaf_count() + t_h.leaf_count())
}
