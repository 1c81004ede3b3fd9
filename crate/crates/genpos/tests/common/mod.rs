//! Shared helpers for the integration and acceptance suites: seeded random
//! graph generators and independent brute-force oracles.

#![allow(dead_code)]

pub mod oracle;

use genpos::Graph;
use rand::Rng;

/// Labeled tree on `n >= 2` vertices from a Prüfer sequence of length
/// `n - 2` over `0..n`.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
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
    Graph::new(n, &edges).unwrap()
}

/// Random labeled tree on `n` vertices from a uniform Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::new(1, &[]).unwrap();
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(n, &seq)
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `extra_p`.
pub fn random_connected_graph(n: usize, extra_p: f64, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, &(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

/// Relabels `g` by the permutation `perm` (vertex `v` becomes `perm[v]`).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.order(), &edges).unwrap()
}

/// Fisher-Yates shuffle of `0..n`.
pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
