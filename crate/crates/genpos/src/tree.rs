//! Tree structure: leaves, branching paths, the closed-form general position
//! number of a tree, and the membership characterization for non-leaf
//! vertices.
//!
//! A *branching path* runs from a vertex of degree >= 2 (the root) to a leaf;
//! a non-leaf root has exactly one branching path per leaf. The general
//! position number of a tree equals its leaf count, realized by the leaf set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// True iff `g` is connected and acyclic.
pub fn is_tree(g: &Graph) -> bool {
    g.size() == g.order() - 1 && g.is_connected()
}

/// A verified tree together with its leaf set and, for every non-leaf root,
/// the root-to-leaf branching paths (root first, leaf last, one per leaf,
/// ordered by leaf index).
#[derive(Debug, Clone)]
pub struct TreeProfile {
    graph: Graph,
    leaves: Vec<usize>,
    branching_paths: BTreeMap<usize, Vec<Vec<usize>>>,
}

impl TreeProfile {
    pub fn new(graph: Graph) -> Result<Self> {
        if !is_tree(&graph) {
            return Err(Error::NotATree);
        }
        let leaves: Vec<usize> = (0..graph.order()).filter(|&v| graph.degree(v) == 1).collect();
        let mut branching_paths = BTreeMap::new();
        for root in 0..graph.order() {
            if graph.degree(root) >= 2 {
                let paths = leaves.iter().map(|&leaf| tree_path(&graph, root, leaf)).collect();
                branching_paths.insert(root, paths);
            }
        }
        Ok(TreeProfile { graph, leaves, branching_paths })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Sorted degree-1 vertices.
    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    /// The smallest-index non-leaf vertex, if one exists (every tree of order
    /// >= 3 has one).
    pub fn first_non_leaf(&self) -> Option<usize> {
        self.branching_paths.keys().next().copied()
    }

    /// Branching paths rooted at `root`, one per leaf.
    pub fn branching_paths(&self, root: usize) -> Result<&[Vec<usize>]> {
        self.graph.validate_vertex(root)?;
        self.branching_paths
            .get(&root)
            .map(Vec::as_slice)
            .ok_or(Error::NotANonLeaf(root))
    }
}

/// The unique path between two vertices of a tree, endpoints included.
fn tree_path(g: &Graph, from: usize, to: usize) -> Vec<usize> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![from];
    parent[from] = from;
    while let Some(u) = stack.pop() {
        if u == to {
            break;
        }
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// gp(T) = l(T): the leaf count, realized by the leaf set.
pub fn gp_number_tree(t: &TreeProfile) -> usize {
    t.leaf_count()
}

/// The leaf set of `t`, the canonical maximum general position set of a tree
/// of order >= 2.
pub fn tree_gp_set(t: &TreeProfile) -> VertexSet {
    VertexSet::constructed(t.leaves().to_vec())
}

/// Whether the non-leaf vertex `u` belongs to some maximum general position
/// set of the tree: true iff `T - u` has exactly two components and at least
/// one of them is a path hanging from `u` at one of its ends (single
/// vertices and single edges count as paths).
///
/// The endpoint condition matters: a path component attached at an interior
/// vertex does not put `u` on a pendant path. Joining two P3s through a
/// middle vertex `r` gives the smallest tree where the difference shows:
/// `T - r` is two P3s, yet no maximum general position set contains `r`,
/// because any such set must avoid one branch entirely and `r`'s side of
/// the other branch tops out below the leaf count.
pub fn nonleaf_in_some_gp_set(t: &TreeProfile, u: usize) -> Result<bool> {
    t.graph().validate_vertex(u)?;
    if t.graph().degree(u) < 2 {
        return Err(Error::NotANonLeaf(u));
    }
    let components = components_without(t.graph(), u);
    if components.len() != 2 {
        return Ok(false);
    }
    // u's neighbor inside a path component must be one of the path's ends,
    // i.e. have degree <= 2 in T.
    Ok(t.graph().neighbors(u).iter().any(|&v| {
        t.graph().degree(v) <= 2
            && components
                .iter()
                .find(|c| c.binary_search(&v).is_ok())
                .is_some_and(|c| is_path_component(t.graph(), c))
    }))
}

/// Connected components of `g - u`, each as a sorted vertex list.
fn components_without(g: &Graph, u: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// A connected component is a path iff it has <= 2 vertices or exactly two
/// vertices of degree 1 and the rest of degree 2, degrees measured inside
/// the component.
fn is_path_component(g: &Graph, comp: &[usize]) -> bool {
    if comp.len() <= 2 {
        return true;
    }
    let in_comp = |v: usize| comp.binary_search(&v).is_ok();
    let mut ones = 0;
    for &v in comp {
        match g.neighbors(v).iter().filter(|&&w| in_comp(w)).count() {
            1 => ones += 1,
            2 => {}
            _ => return false,
        }
    }
    ones == 2
}
