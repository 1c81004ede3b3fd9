//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `--nocapture` to see them on success).

mod common;

use std::time::{Duration, Instant};

use common::{oracle, path, random_connected_graph, random_tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use genpos::enumerate::{enumerate_free_trees, sweep_verify_membership, sweep_verify_theorem};
use genpos::solver::{gp_number_exact, verify_general_position, GpInstance, GpResult};
use genpos::{
    construct_maximal_gp, construct_maximal_gp_flat, interval, is_maximal_gp, is_tree,
    product_distance, product_interval, Graph, ProductGraph, TreeProfile,
};

/// Exact solve of `G [] H`, seeding the incumbent with the tree-product
/// construction whenever both factors are trees of order >= 3.
fn solve_product(g: &Graph, h: &Graph) -> (GpResult, ProductGraph) {
    let p = ProductGraph::new(g.clone(), h.clone());
    let dm = p.materialized().distances().unwrap();
    let result = if is_tree(g) && is_tree(h) && g.order() >= 3 && h.order() >= 3 {
        let t_g = TreeProfile::new(g.clone()).unwrap();
        let t_h = TreeProfile::new(h.clone()).unwrap();
        let vi = t_g.first_non_leaf().unwrap();
        let vj = t_h.first_non_leaf().unwrap();
        let seed = construct_maximal_gp_flat(&p, &t_g, &t_h, vi, vj).unwrap();
        gp_number_exact(&GpInstance::new(p.materialized(), &dm).with_incumbent(seed)).unwrap()
    } else {
        gp_number_exact(&GpInstance::new(p.materialized(), &dm)).unwrap()
    };
    (result, p)
}

/// Every witness member must be alone in its H-layer or alone in its
/// G-layer.
fn layer_condition_holds(coords: &[(usize, usize)]) -> bool {
    coords.iter().all(|&(a, b)| {
        let h_layer = coords.iter().filter(|&&(x, _)| x == a).count();
        let g_layer = coords.iter().filter(|&&(_, y)| y == b).count();
        h_layer == 1 || g_layer == 1
    })
}

#[test]
fn criterion_1_path_grid_table() {
    // Expected values follow the path-grid formula: 4 when both sides have
    // at least 3 vertices, 3 otherwise.
    let table = [(2usize, 2usize, 3usize), (2, 7, 3), (3, 3, 4), (5, 4, 4), (7, 6, 4)];
    let mut outcomes = Vec::new();
    for &(n1, n2, expected) in &table {
        let start = Instant::now();
        let (result, _) = solve_product(&path(n1), &path(n2));
        let elapsed = start.elapsed();
        let ok = result.gp_number == expected && result.proven_optimal;
        println!(
            "  P{n1} x P{n2}: expected {expected}, computed {} ({}proven, {:?})",
            result.gp_number,
            if result.proven_optimal { "" } else { "not " },
            elapsed
        );
        outcomes.push((n1, n2, expected, result.gp_number, ok, elapsed));
    }
    let all_ok = outcomes.iter().all(|o| o.4);
    let within_time = outcomes.iter().all(|o| o.5 < Duration::from_secs(1));
    println!(
        "criterion 1 (path-grid table): {}",
        if all_ok && within_time { "PASS" } else { "FAIL" }
    );
    assert!(within_time, "an instance exceeded 1 s");
    for (n1, n2, expected, computed, _, _) in outcomes {
        assert_eq!(computed, expected, "gp(P{n1} [] P{n2})");
    }
}

#[test]
fn criterion_2_additivity_sweep_orders_3_to_6() {
    let start = Instant::now();
    let report = sweep_verify_theorem(3, 6).unwrap();
    let elapsed = start.elapsed();
    let ok = report.pairs_checked == 78
        && report.mismatches.is_empty()
        && report.records.iter().all(|r| r.proven_optimal && r.witness.len() == r.predicted)
        && elapsed < Duration::from_secs(600);
    println!(
        "criterion 2 (additivity sweep, orders 3-6): {} ({} pairs, {} mismatches, {:?})",
        if ok { "PASS" } else { "FAIL" },
        report.pairs_checked,
        report.mismatches.len(),
        elapsed
    );
    assert_eq!(report.pairs_checked, 78);
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    for r in &report.records {
        assert!(r.proven_optimal);
        assert_eq!(r.witness.len(), r.predicted);
    }
    assert!(elapsed < Duration::from_secs(600));
}

#[test]
fn criterion_3_construction_random_pairs() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x67705f33);
    let mut failures = 0;
    for _ in 0..100 {
        let t_g = TreeProfile::new(random_tree(rng.gen_range(3..=8), &mut rng)).unwrap();
        let t_h = TreeProfile::new(random_tree(rng.gen_range(3..=8), &mut rng)).unwrap();
        let pick = |t: &TreeProfile, rng: &mut ChaCha8Rng| {
            let non_leaves: Vec<usize> =
                (0..t.order()).filter(|&v| !t.is_leaf(v)).collect();
            non_leaves[rng.gen_range(0..non_leaves.len())]
        };
        let vi = pick(&t_g, &mut rng);
        let vj = pick(&t_h, &mut rng);
        let coords = construct_maximal_gp(&t_g, &t_h, vi, vj).unwrap();
        let p = ProductGraph::new(t_g.graph().clone(), t_h.graph().clone());
        let flat: Vec<usize> = coords.iter().map(|&(a, b)| p.flatten(a, b)).collect();
        let dm = p.materialized().distances().unwrap();
        let good = coords.len() == t_g.leaf_count() + t_h.leaf_count()
            && verify_general_position(&dm, &flat).unwrap()
            && is_maximal_gp(&dm, &flat).unwrap();
        if !good {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(120);
    println!(
        "criterion 3 (construction on 100 random tree pairs): {} ({} failures, {:?})",
        if ok { "PASS" } else { "FAIL" },
        failures,
        elapsed
    );
    assert_eq!(failures, 0);
    assert!(elapsed < Duration::from_secs(120));
}

#[test]
fn criterion_4_tree_closed_form() {
    let start = Instant::now();
    let mut trees_checked = 0;
    for order in 3..=8 {
        for tree in enumerate_free_trees(order).unwrap().trees() {
            let profile = TreeProfile::new(tree.clone()).unwrap();
            let dm = tree.distances().unwrap();
            let result = gp_number_exact(&GpInstance::new(tree, &dm)).unwrap();
            assert_eq!(result.gp_number, profile.leaf_count(), "order {order}");
            assert!(verify_general_position(&dm, profile.leaves()).unwrap());
            trees_checked += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = trees_checked == 46 && elapsed < Duration::from_secs(60);
    println!(
        "criterion 4 (gp(T) = leaf count on {} trees): {} ({:?})",
        trees_checked,
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
    assert_eq!(trees_checked, 46);
    assert!(elapsed < Duration::from_secs(60));
}

#[test]
fn criterion_5_nonleaf_membership() {
    let start = Instant::now();
    let report = sweep_verify_membership(8).unwrap();
    let elapsed = start.elapsed();
    let ok = report.trees_checked == 46
        && report.mismatches.is_empty()
        && elapsed < Duration::from_secs(300);
    println!(
        "criterion 5 (non-leaf membership on {} trees, {} vertices): {} ({:?})",
        report.trees_checked,
        report.vertices_checked,
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
    assert_eq!(report.trees_checked, 46);
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    assert!(elapsed < Duration::from_secs(300));
}

#[test]
fn criterion_6_metric_and_interval_factorization() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x67705f36);
    let mut failures = 0;
    for _ in 0..200 {
        let g = random_connected_graph(rng.gen_range(2..=8), rng.gen_range(0.0..0.5), &mut rng);
        let h = random_connected_graph(rng.gen_range(2..=8), rng.gen_range(0.0..0.5), &mut rng);
        let dm_g = g.distances().unwrap();
        let dm_h = h.distances().unwrap();
        let p = ProductGraph::new(g, h);
        let dm_p = p.materialized().distances().unwrap();
        'pair: for i in 0..p.order() {
            for j in 0..p.order() {
                let (a, b) = p.unflatten(i);
                let (a2, b2) = p.unflatten(j);
                if product_distance(&dm_g, &dm_h, (a, b), (a2, b2)).unwrap() != dm_p.distance(i, j)
                {
                    failures += 1;
                    break 'pair;
                }
                let factored: Vec<usize> =
                    product_interval(&dm_g, &dm_h, (a, b), (a2, b2))
                        .unwrap()
                        .into_iter()
                        .map(|(x, y)| p.flatten(x, y))
                        .collect();
                if factored != interval(&dm_p, i, j).unwrap() {
                    failures += 1;
                    break 'pair;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(120);
    println!(
        "criterion 6 (factored metric and intervals on 200 random pairs): {} ({} failures, {:?})",
        if ok { "PASS" } else { "FAIL" },
        failures,
        elapsed
    );
    assert_eq!(failures, 0);
    assert!(elapsed < Duration::from_secs(120));
}

#[test]
fn criterion_7_layer_condition_on_witnesses() {
    // Witnesses from the path-grid table.
    let mut violations = 0;
    for &(n1, n2) in &[(2usize, 2usize), (2, 7), (3, 3), (5, 4), (7, 6)] {
        let (result, p) = solve_product(&path(n1), &path(n2));
        let coords: Vec<(usize, usize)> =
            result.witness.vertices().iter().map(|&i| p.unflatten(i)).collect();
        if !layer_condition_holds(&coords) {
            violations += 1;
        }
    }
    // Witnesses from the additivity sweep.
    let report = sweep_verify_theorem(3, 6).unwrap();
    for r in &report.records {
        let coords: Vec<(usize, usize)> = r
            .witness
            .iter()
            .map(|&i| (i / r.order_right, i % r.order_right))
            .collect();
        if !layer_condition_holds(&coords) {
            violations += 1;
        }
    }
    let ok = violations == 0;
    println!(
        "criterion 7 (layer condition on {} witnesses): {}",
        5 + report.records.len(),
        if ok { "PASS" } else { "FAIL" }
    );
    assert_eq!(violations, 0);
}

#[test]
fn criterion_8_solver_oracle_corpus() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x67705f38);
    let mut corpus: Vec<Graph> = Vec::new();
    for _ in 0..15 {
        corpus.push(random_tree(rng.gen_range(3..=10), &mut rng));
    }
    for n in 3..=10 {
        corpus.push(common::cycle(n));
    }
    let products = [
        (path(2), path(3)),
        (path(2), path(4)),
        (path(2), path(5)),
        (path(3), path(3)),
        (common::star(3), path(2)),
        (common::cycle(4), path(2)),
    ];
    for (g, h) in products {
        corpus.push(ProductGraph::new(g, h).materialized().clone());
    }
    while corpus.len() < 50 {
        corpus.push(random_connected_graph(
            rng.gen_range(4..=10),
            rng.gen_range(0.05..0.5),
            &mut rng,
        ));
    }

    let mut mismatches = 0;
    for g in &corpus {
        let dm = g.distances().unwrap();
        let solved = gp_number_exact(&GpInstance::new(g, &dm)).unwrap();
        let brute = oracle::gp_bruteforce(g);
        if solved.gp_number != brute || !solved.proven_optimal {
            mismatches += 1;
            eprintln!(
                "mismatch on order {}: solver {} vs oracle {}",
                g.order(),
                solved.gp_number,
                brute
            );
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches == 0 && corpus.len() == 50 && elapsed < Duration::from_secs(300);
    println!(
        "criterion 8 (solver vs subset oracle on {} graphs): {} ({} mismatches, {:?})",
        corpus.len(),
        if ok { "PASS" } else { "FAIL" },
        mismatches,
        elapsed
    );
    assert_eq!(corpus.len(), 50);
    assert_eq!(mismatches, 0);
    assert!(elapsed < Duration::from_secs(300));
}

#[test]
fn criterion_9_tree_enumeration_counts() {
    let expected = [1usize, 1, 1, 2, 3, 6, 11, 23];
    let mut ok = true;
    for (n, &count) in (1..=8).zip(expected.iter()) {
        let catalog = enumerate_free_trees(n).unwrap();
        if catalog.len() != count {
            ok = false;
        }
        assert_eq!(catalog.len(), count, "catalog size at order {n}");
        // Independent counting route.
        assert_eq!(
            oracle::free_tree_count_by_recurrence(n),
            count,
            "recurrence count at order {n}"
        );
    }
    // Independent enumeration route: Prüfer sequences deduplicated by the
    // permutation-minimal edge list.
    for n in 2..=7 {
        assert_eq!(
            oracle::free_tree_count_by_permutation(n),
            expected[n - 1],
            "permutation dedup at order {n}"
        );
    }
    // The oracle decoder is a bijection from sequences onto labeled trees.
    for n in 2..=6 {
        let trees = oracle::labeled_trees(n);
        assert_eq!(trees.len(), n.pow(n as u32 - 2));
        let distinct: std::collections::BTreeSet<_> = trees.iter().collect();
        assert_eq!(distinct.len(), trees.len());
    }
    println!(
        "criterion 9 (free-tree counts 1..8 = {:?}): {}",
        expected,
        if ok { "PASS" } else { "FAIL" }
    );
}
