//! Brute-force oracles, written independently of the library's
//! implementation paths: Floyd-Warshall distances instead of BFS, subset
//! enumeration instead of branch-and-bound, explicit shortest-path walks
//! instead of the interval formula, and two independent free-tree counters.

use genpos::Graph;

const INF: usize = usize::MAX / 4;

/// All-pairs distances by Floyd-Warshall.
pub fn floyd_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn collinear(d: &[Vec<usize>], x: usize, y: usize, z: usize) -> bool {
    d[x][y] == d[x][z] + d[z][y] || d[x][z] == d[x][y] + d[y][z] || d[y][z] == d[y][x] + d[x][z]
}

fn mask_in_general_position(d: &[Vec<usize>], mask: u32, n: usize) -> bool {
    let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            for k in j + 1..members.len() {
                if collinear(d, members[i], members[j], members[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact general position number by enumerating all vertex subsets in
/// decreasing-size order. Only sensible for small orders.
pub fn gp_bruteforce(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "subset enumeration oracle is for small graphs");
    let d = floyd_distances(g);
    for size in (1..=n).rev() {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == size && mask_in_general_position(&d, mask, n) {
                return size;
            }
        }
    }
    0
}

/// Largest general position set containing all of `forced`, by subset
/// enumeration.
pub fn gp_bruteforce_forced(g: &Graph, forced: &[usize]) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let d = floyd_distances(g);
    let forced_mask: u32 = forced.iter().map(|&v| 1u32 << v).sum();
    for size in (forced.len().max(1)..=n).rev() {
        for mask in 0u32..(1 << n) {
            if mask & forced_mask == forced_mask
                && mask.count_ones() as usize == size
                && mask_in_general_position(&d, mask, n)
            {
                return size;
            }
        }
    }
    0
}

/// Interval by enumerating every shortest `u,v`-path explicitly.
pub fn interval_bruteforce(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let d = floyd_distances(g);
    let mut on_some_path = vec![false; g.order()];
    let mut stack = vec![u];
    walk(g, &d, u, v, &mut stack, &mut on_some_path);
    (0..g.order()).filter(|&w| on_some_path[w]).collect()
}

fn walk(
    g: &Graph,
    d: &[Vec<usize>],
    at: usize,
    target: usize,
    stack: &mut Vec<usize>,
    on_some_path: &mut [bool],
) {
    if at == target {
        for &w in stack.iter() {
            on_some_path[w] = true;
        }
        return;
    }
    for &next in g.neighbors(at) {
        if d[at][target] == 1 + d[next][target] {
            stack.push(next);
            walk(g, d, next, target, stack, on_some_path);
            stack.pop();
        }
    }
}

/// All labeled trees on `n` vertices, decoded from every Prüfer sequence
/// with a heap-based decoder (distinct from the library's pointer decoder).
pub fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    assert!(n >= 2);
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let mut degree = vec![1usize; n];
        for &a in &seq {
            degree[a] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| degree[i] == 1).map(Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &a in &seq {
            let Reverse(u) = leaves.pop().unwrap();
            edges.push((u.min(a), u.max(a)));
            degree[a] -= 1;
            if degree[a] == 1 {
                leaves.push(Reverse(a));
            }
        }
        let Reverse(x) = leaves.pop().unwrap();
        let Reverse(y) = leaves.pop().unwrap();
        edges.push((x.min(y), x.max(y)));
        edges.sort_unstable();
        out.push(edges);

        let mut pos = 0;
        while pos < seq.len() {
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
    out
}

/// Canonical form of an edge list as the minimum sorted edge list over all
/// vertex permutations. Exponential; for n <= 7 or so.
pub fn min_permutation_form(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.unwrap()
}

fn permute(perm: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == perm.len() {
        visit(perm);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, visit);
        perm.swap(at, i);
    }
}

/// Number of free trees on `n` vertices by enumerating all Prüfer sequences
/// and deduplicating with the permutation canonical form.
pub fn free_tree_count_by_permutation(n: usize) -> usize {
    assert!((2..=7).contains(&n), "permutation dedup explodes past n = 7");
    let mut forms = std::collections::BTreeSet::new();
    for edges in labeled_trees(n) {
        forms.insert(min_permutation_form(n, &edges));
    }
    forms.len()
}

/// Number of free trees on `n` vertices by pure counting: the rooted-tree
/// recurrence r(n) = (1/(n-1)) * sum_{k<n} (sum_{d|k} d*r(d)) * r(n-k),
/// then t(n) = r(n) - sum_{i<=n/2} r(i) r(n-i) + [n even] C(r(n/2)+1, 2).
pub fn free_tree_count_by_recurrence(n: usize) -> usize {
    assert!(n >= 1);
    let mut r = vec![0u64; n + 1];
    r[1] = 1;
    for m in 2..=n {
        let mut total = 0u64;
        for k in 1..m {
            let divisor_sum: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * r[d]).sum();
            total += divisor_sum * r[m - k];
        }
        r[m] = total / (m as u64 - 1);
    }
    let mut t = r[n];
    for i in 1..=n / 2 {
        t -= r[i] * r[n - i];
    }
    if n.is_multiple_of(2) {
        let half = r[n / 2];
        t += half * (half + 1) / 2;
    }
    t as usize
}
