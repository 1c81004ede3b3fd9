//! Free-tree enumeration and the exhaustive verification sweeps.
//!
//! Trees are generated by decoding every Prüfer sequence of the requested
//! order and deduplicating by a canonical key: the rooted subtree encoding
//! at the tree center (for bicentral trees, the lexicographic minimum of the
//! two center-rooted encodings). Equal keys hold exactly for isomorphic
//! trees.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{construct_maximal_gp_flat, theorem_prediction, ProductGraph};
use crate::solver::{gp_number_exact, GpInstance};
use crate::tree::{gp_number_tree, is_tree, nonleaf_in_some_gp_set, TreeProfile};

/// Largest order the Prüfer-based generator accepts; 10 would mean 10^8
/// sequences and needs a streaming generator instead.
pub const MAX_ENUM_ORDER: usize = 9;

/// One representative per isomorphism class of trees of a given order,
/// sorted by canonical key.
#[derive(Debug, Clone)]
pub struct TreeCatalog {
    order: usize,
    trees: Vec<Graph>,
    canonical_keys: Vec<String>,
}

impl TreeCatalog {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[Graph] {
        &self.trees
    }

    pub fn canonical_keys(&self) -> &[String] {
        &self.canonical_keys
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Graph)> {
        self.canonical_keys.iter().map(String::as_str).zip(self.trees.iter())
    }
}

/// Canonical encoding of a tree, invariant under relabeling.
pub fn canonical_tree_key(g: &Graph) -> Result<String> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    Ok(key_from_adj(&adj))
}

fn key_from_adj(adj: &[Vec<usize>]) -> String {
    centers(adj)
        .into_iter()
        .map(|c| encode_rooted(adj, c))
        .min()
        .expect("tree has a center")
}

/// The one or two central vertices, found by stripping leaf layers.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Bracket encoding of the tree rooted at `root`: children encodings sorted
/// lexicographically, wrapped in parentheses.
fn encode_rooted(adj: &[Vec<usize>], root: usize) -> String {
    fn rec(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut codes: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rec(adj, w, v))
            .collect();
        codes.sort_unstable();
        let mut out = String::with_capacity(2 + codes.iter().map(String::len).sum::<usize>());
        out.push('(');
        for c in &codes {
            out.push_str(c);
        }
        out.push(')');
        out
    }
    rec(adj, root, usize::MAX)
}

/// Decodes a Prüfer sequence over `0..n` into the edge list of a labeled
/// tree on `n` vertices (`n >= 2`, sequence length `n - 2`).
fn prufer_decode(seq: &[usize], n: usize, edges: &mut Vec<(usize, usize)>) {
    edges.clear();
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &a in seq {
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

/// All non-isomorphic free trees of order `n`, one representative per class.
///
/// Every labeled tree is visited via its Prüfer sequence and classes are
/// collapsed by canonical key, so the cost is `n^(n-2)` decodes.
pub fn enumerate_free_trees(n: usize) -> Result<TreeCatalog> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_ENUM_ORDER });
    }
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    if n == 1 {
        let g = Graph::new(1, &[])?;
        classes.insert(canonical_tree_key(&g)?, g);
    } else {
        let mut seq = vec![0usize; n - 2];
        let mut edges = Vec::with_capacity(n - 1);
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        loop {
            prufer_decode(&seq, n, &mut edges);
            for a in adj.iter_mut() {
                a.clear();
            }
            for &(u, v) in edges.iter() {
                adj[u].push(v);
                adj[v].push(u);
            }
            let key = key_from_adj(&adj);
            classes
                .entry(key)
                .or_insert_with(|| Graph::new(n, &edges).expect("decoded tree is valid"));

            // Odometer step over all n^(n-2) sequences.
            let mut pos = 0;
            loop {
                if pos == seq.len() {
                    break;
                }
                seq[pos] += 1;
                if seq[pos] < n {
                    break;
                }
                seq[pos] = 0;
                pos += 1;
            }
            if pos == seq.len() {
                break;
            }
        }
    }
    let (canonical_keys, trees): (Vec<_>, Vec<_>) = classes.into_iter().unzip();
    Ok(TreeCatalog { order: n, trees, canonical_keys })
}

/// Per-pair outcome of the additivity sweep.
#[derive(Debug, Clone, Serialize)]
pub struct PairRecord {
    pub key_left: String,
    pub key_right: String,
    pub order_left: usize,
    pub order_right: usize,
    pub leaves_left: usize,
    pub leaves_right: usize,
    pub predicted: usize,
    pub computed: usize,
    pub proven_optimal: bool,
    pub witness: Vec<usize>,
    pub nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// A pair where the exact solver disagreed with the additive prediction.
#[derive(Debug, Clone, Serialize)]
pub struct SweepMismatch {
    pub key_left: String,
    pub key_right: String,
    pub predicted: usize,
    pub computed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub min_order: usize,
    pub max_order: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<SweepMismatch>,
    pub records: Vec<PairRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Solves every unordered pair of free trees with orders in
/// `min_order..=max_order` and compares the exact general position number of
/// the product against the additive prediction. Pairs run in parallel; the
/// report order is fixed by (order, canonical key).
pub fn sweep_verify_theorem(min_order: usize, max_order: usize) -> Result<SweepReport> {
    if min_order < 3 || min_order > max_order || max_order > MAX_ENUM_ORDER {
        let bad = if min_order < 3 { min_order } else { max_order };
        return Err(Error::OrderOutOfRange { order: bad, min: 3, max: MAX_ENUM_ORDER });
    }
    let start = Instant::now();
    let mut universe: Vec<(String, TreeProfile)> = Vec::new();
    for order in min_order..=max_order {
        for (key, tree) in enumerate_free_trees(order)?.iter() {
            universe.push((key.to_string(), TreeProfile::new(tree.clone())?));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..universe.len())
        .flat_map(|i| (i..universe.len()).map(move |j| (i, j)))
        .collect();

    let records: Vec<PairRecord> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (key_left, left) = &universe[i];
            let (key_right, right) = &universe[j];
            solve_tree_pair(key_left, left, key_right, right)
        })
        .collect();

    let mismatches = records
        .iter()
        .filter(|r| r.computed != r.predicted || !r.proven_optimal)
        .map(|r| SweepMismatch {
            key_left: r.key_left.clone(),
            key_right: r.key_right.clone(),
            predicted: r.predicted,
            computed: r.computed,
        })
        .collect();

    Ok(SweepReport {
        min_order,
        max_order,
        pairs_checked: records.len(),
        mismatches,
        records,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

fn solve_tree_pair(
    key_left: &str,
    left: &TreeProfile,
    key_right: &str,
    right: &TreeProfile,
) -> PairRecord {
    let start = Instant::now();
    let predicted = theorem_prediction(left, right).expect("sweep orders are >= 3");
    let product = ProductGraph::new(left.graph().clone(), right.graph().clone());
    let vi = left.first_non_leaf().expect("order >= 3 has a non-leaf");
    let vj = right.first_non_leaf().expect("order >= 3 has a non-leaf");
    let seed = construct_maximal_gp_flat(&product, left, right, vi, vj)
        .expect("construction holds for non-leaf anchors");
    let dm = product.materialized().distances().expect("products of trees are connected");
    let result = gp_number_exact(&GpInstance::new(product.materialized(), &dm).with_incumbent(seed))
        .expect("instance is connected with empty forced set");
    PairRecord {
        key_left: key_left.to_string(),
        key_right: key_right.to_string(),
        order_left: left.order(),
        order_right: right.order(),
        leaves_left: left.leaf_count(),
        leaves_right: right.leaf_count(),
        predicted,
        computed: result.gp_number,
        proven_optimal: result.proven_optimal,
        witness: result.witness.vertices().to_vec(),
        nodes_expanded: result.nodes_expanded,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}

/// A vertex where the structural characterization and the forced-inclusion
/// solver disagreed.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipMismatch {
    pub key: String,
    pub order: usize,
    pub vertex: usize,
    pub characterization: bool,
    pub solver_attains: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport {
    pub max_order: usize,
    pub trees_checked: usize,
    pub vertices_checked: usize,
    pub mismatches: Vec<MembershipMismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// For every tree of order `3..=max_order` and every non-leaf vertex `u`,
/// checks that the two-components-one-a-path characterization agrees with
/// the exact solver forced to include `u` attaining the leaf count.
pub fn sweep_verify_membership(max_order: usize) -> Result<MembershipReport> {
    if !(3..=8).contains(&max_order) {
        return Err(Error::OrderOutOfRange { order: max_order, min: 3, max: 8 });
    }
    let start = Instant::now();
    let mut universe: Vec<(String, TreeProfile)> = Vec::new();
    for order in 3..=max_order {
        for (key, tree) in enumerate_free_trees(order)?.iter() {
            universe.push((key.to_string(), TreeProfile::new(tree.clone())?));
        }
    }

    let per_tree: Vec<(usize, Vec<MembershipMismatch>)> = universe
        .par_iter()
        .map(|(key, profile)| {
            let dm = profile.graph().distances().expect("trees are connected");
            let target = gp_number_tree(profile);
            let mut mismatches = Vec::new();
            let mut checked = 0;
            for u in 0..profile.order() {
                if profile.is_leaf(u) {
                    continue;
                }
                checked += 1;
                let characterization =
                    nonleaf_in_some_gp_set(profile, u).expect("u is a non-leaf");
                let result =
                    gp_number_exact(&GpInstance::new(profile.graph(), &dm).with_forced(vec![u]))
                        .expect("forcing a single vertex is always feasible");
                let solver_attains = result.gp_number == target;
                if characterization != solver_attains {
                    mismatches.push(MembershipMismatch {
                        key: key.clone(),
                        order: profile.order(),
                        vertex: u,
                        characterization,
                        solver_attains,
                    });
                }
            }
            (checked, mismatches)
        })
        .collect();

    let vertices_checked = per_tree.iter().map(|(c, _)| c).sum();
    let mismatches = per_tree.into_iter().flat_map(|(_, m)| m).collect();
    Ok(MembershipReport {
        max_order,
        trees_checked: universe.len(),
        vertices_checked,
        mismatches,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}
