//! Exact general position numbers by depth-first branch-and-bound over the
//! collinear-triple hypergraph, plus set verification and maximality tests.
//!
//! The search branches include/exclude on vertices in a fixed order
//! (descending collinear-triple degree, ties by index). Including a vertex
//! prunes from the candidate pool every vertex that would complete a
//! collinear triple with two included ones; a subtree is cut when the
//! included count plus the remaining candidates cannot beat the incumbent.
//! Runs are single-threaded and fully deterministic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    check_vertices, collinear_triples_capped, collinearity_degrees, DistanceMatrix, Graph,
};
use crate::set::{Provenance, VertexSet};

/// A solver instance: graph, metric, optional materialized triple list,
/// forced vertices, and an optional node-expansion budget.
pub struct GpInstance<'a> {
    graph: &'a Graph,
    dm: &'a DistanceMatrix,
    /// `None` when the triple list exceeds the materialization cap; the
    /// search then relies on per-pair distance checks only.
    triples: Option<Vec<[usize; 3]>>,
    forced: Vec<usize>,
    budget: Option<u64>,
    seed: Option<VertexSet>,
}

impl<'a> GpInstance<'a> {
    pub fn new(graph: &'a Graph, dm: &'a DistanceMatrix) -> Self {
        GpInstance {
            graph,
            dm,
            triples: collinear_triples_capped(dm),
            forced: Vec::new(),
            budget: None,
            seed: None,
        }
    }

    /// Vertices required in any solution.
    pub fn with_forced(mut self, mut forced: Vec<usize>) -> Self {
        forced.sort_unstable();
        forced.dedup();
        self.forced = forced;
        self
    }

    /// Node-expansion cap; on exhaustion the best incumbent is returned with
    /// `proven_optimal = false`.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    /// Seeds the incumbent with a known general position set (which must
    /// contain the forced vertices). A seed of optimal size reduces the
    /// search to the optimality proof.
    pub fn with_incumbent(mut self, seed: VertexSet) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn triples(&self) -> Option<&[[usize; 3]]> {
        self.triples.as_deref()
    }
}

/// Result of an exact solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GpResult {
    pub gp_number: usize,
    pub witness: VertexSet,
    pub nodes_expanded: u64,
    pub proven_optimal: bool,
}

/// True iff no 3-subset of `s` is collinear. Sets of size <= 2 always pass.
pub fn verify_general_position(dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    check_vertices(dm, s)?;
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for k in j + 1..s.len() {
                if dm.collinear_unchecked(s[i], s[j], s[k]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The lexicographically first collinear triple inside `s`, if any.
pub fn first_violating_triple(dm: &DistanceMatrix, s: &[usize]) -> Result<Option<[usize; 3]>> {
    check_vertices(dm, s)?;
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for k in j + 1..s.len() {
                if dm.collinear_unchecked(s[i], s[j], s[k]) {
                    return Ok(Some([s[i], s[j], s[k]]));
                }
            }
        }
    }
    Ok(None)
}

/// True iff `s` is a general position set that no single outside vertex can
/// extend. Errors when `s` is not in general position to begin with.
pub fn is_maximal_gp(dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    if !verify_general_position(dm, s)? {
        return Err(Error::NotAGpSet);
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok((0..dm.order())
        .filter(|z| s.binary_search(z).is_err())
        .all(|z| !extends(dm, &s, z)))
}

/// Whether `s + z` is still in general position (`s` itself assumed valid).
fn extends(dm: &DistanceMatrix, s: &[usize], z: usize) -> bool {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if dm.collinear_unchecked(s[i], s[j], z) {
                return false;
            }
        }
    }
    true
}

/// A maximal general position set built greedily: vertices are scanned in
/// ascending collinearity-degree order (ties by index) and kept when
/// compatible with the set so far. Starts from the instance's forced
/// vertices; its size is a lower bound on the instance optimum.
pub fn greedy_gp_lower_bound(inst: &GpInstance) -> VertexSet {
    let n = inst.dm.order();
    let degrees = degrees_of(inst);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (degrees[v], v));

    let mut chosen = inst.forced.clone();
    for v in order {
        if chosen.contains(&v) {
            continue;
        }
        if extends(inst.dm, &chosen, v) {
            chosen.push(v);
        }
    }
    VertexSet::solved(chosen)
}

fn degrees_of(inst: &GpInstance) -> Vec<u64> {
    match &inst.triples {
        Some(triples) => {
            let mut deg = vec![0u64; inst.dm.order()];
            for t in triples {
                for &v in t {
                    deg[v] += 1;
                }
            }
            deg
        }
        None => collinearity_degrees(inst.dm),
    }
}

/// Exact general position number with witness by branch-and-bound.
pub fn gp_number_exact(inst: &GpInstance) -> Result<GpResult> {
    if !inst.graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if !verify_general_position(inst.dm, &inst.forced)? {
        return Err(Error::InfeasibleForcedSet);
    }
    if let Some(seed) = &inst.seed {
        if !verify_general_position(inst.dm, seed.vertices())? {
            return Err(Error::NotAGpSet);
        }
        if inst.forced.iter().any(|&f| !seed.contains(f)) {
            return Err(Error::InfeasibleForcedSet);
        }
    }

    let n = inst.dm.order();
    let degrees = degrees_of(inst);
    let mut order: Vec<usize> = (0..n).filter(|v| !inst.forced.contains(v)).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));

    let incumbent = match &inst.seed {
        Some(seed) => seed.clone(),
        None => greedy_gp_lower_bound(inst),
    };

    let mut cand = BitSet::full(n);
    for &f in &inst.forced {
        cand.remove(f);
    }
    // Commit forced vertices up front so their triple implications prune the
    // pool before any branching.
    for (i, &f) in inst.forced.iter().enumerate() {
        for &e in &inst.forced[..i] {
            prune_pair(inst.dm, &mut cand, e, f);
        }
    }

    let mut search = Search {
        dm: inst.dm,
        order,
        included: inst.forced.clone(),
        best: incumbent.vertices().to_vec(),
        improved: false,
        nodes: 0,
        budget: inst.budget,
        exhausted: false,
    };
    search.run(cand, 0);

    let provenance = if search.improved {
        Provenance::Solved
    } else {
        incumbent.provenance()
    };
    let witness = VertexSet::new(search.best, provenance);
    Ok(GpResult {
        gp_number: witness.len(),
        witness,
        nodes_expanded: search.nodes,
        proven_optimal: !search.exhausted,
    })
}

struct Search<'a> {
    dm: &'a DistanceMatrix,
    order: Vec<usize>,
    included: Vec<usize>,
    best: Vec<usize>,
    improved: bool,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl Search<'_> {
    fn run(&mut self, mut cand: BitSet, from: usize) {
        if self.exhausted {
            return;
        }
        if self.included.len() + cand.count() <= self.best.len() {
            return;
        }
        // Next undecided vertex in the fixed branching order.
        let Some(pos) = (from..self.order.len()).find(|&p| cand.contains(self.order[p])) else {
            // Leaf: every candidate was decided or pruned.
            if self.included.len() > self.best.len() {
                self.best = self.included.clone();
                self.improved = true;
            }
            return;
        };
        let v = self.order[pos];

        self.nodes += 1;
        if let Some(budget) = self.budget {
            if self.nodes > budget {
                self.exhausted = true;
                return;
            }
        }

        // Include v: prune everything that completes a triple with v and an
        // included vertex.
        let mut with_v = cand.clone();
        with_v.remove(v);
        for i in 0..self.included.len() {
            prune_pair(self.dm, &mut with_v, self.included[i], v);
        }
        self.included.push(v);
        self.run(with_v, pos + 1);
        self.included.pop();

        // Exclude v.
        cand.remove(v);
        self.run(cand, pos + 1);
    }
}

/// Removes from `cand` every vertex collinear with the pair `{a, b}`.
fn prune_pair(dm: &DistanceMatrix, cand: &mut BitSet, a: usize, b: usize) {
    cand.retain(|z| z == a || z == b || !dm.collinear_unchecked(a, b, z));
}

/// Fixed-capacity bitset over vertex ids with a maintained population count.
#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
    count: usize,
}

impl BitSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        BitSet { words, count: n }
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] & (1 << (v % 64)) != 0
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        let mask = 1u64 << (v % 64);
        if self.words[v / 64] & mask != 0 {
            self.words[v / 64] &= !mask;
            self.count -= 1;
        }
    }

    #[inline]
    fn count(&self) -> usize {
        self.count
    }

    fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        for (w, word) in self.words.iter_mut().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let v = w * 64 + b;
                if !keep(v) {
                    *word &= !(1u64 << b);
                    self.count -= 1;
                }
            }
        }
    }
}
