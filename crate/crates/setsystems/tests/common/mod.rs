//! Shared fixture generators for the integration suites. Everything is
//! seeded; the same call always yields the same fixtures.
#![allow(dead_code)] // each integration test compiles its own copy

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use setsystems::families::{partition_matroid, uniform_matroid, PartitionBlock, PartitionSpec};
use setsystems::ground::GroundSet;
use setsystems::logic::{parse_circuit, BoolCircuit, CnfFormula};
use setsystems::oracle::SetSystemOracle;
use setsystems::treematch::{BipartiteGraph, RootedTree};

/// Every single-clause 3CNF over up to `max_n` variables: all ordered
/// literal triples, (2n)^3 formulas per variable count.
pub fn all_single_clause_formulas(max_n: usize) -> Vec<CnfFormula> {
    let mut formulas = Vec::new();
    for n in 1..=max_n {
        let literals: Vec<i32> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
        for &a in &literals {
            for &b in &literals {
                for &c in &literals {
                    formulas.push(CnfFormula::new(n, [[a, b, c]]).expect("valid clause"));
                }
            }
        }
    }
    formulas
}

/// Seeded random 3CNF formulas with up to `max_n` variables. Clause counts
/// lean high so a healthy share of the fixtures is unsatisfiable.
pub fn random_formulas(count: usize, max_n: usize, seed: u64) -> Vec<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(1..=2 * n + 4);
            let clauses: Vec<Vec<i32>> = (0..m)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            let var = rng.gen_range(1..=n as i32);
                            if rng.gen_bool(0.5) {
                                var
                            } else {
                                -var
                            }
                        })
                        .collect()
                })
                .collect();
            CnfFormula::new(n, clauses).expect("generated clauses are valid")
        })
        .collect()
}

/// A fixed set of circuits with up to 4 inputs and size at most 8,
/// covering constants-by-structure, negations, and mixed gate trees.
pub fn circuit_fixtures() -> Vec<BoolCircuit> {
    let texts = [
        "g1 = AND x1 x1\nout = g1\n",
        "out = x1\n",
        "g1 = NOT x1\nout = g1\n",
        "g1 = OR x1 x1\nout = g1\n",
        "g1 = AND x1 x2\nout = g1\n",
        "g1 = OR x1 x2\nout = g1\n",
        "g1 = NOT x1\ng2 = AND g1 x2\nout = g2\n",
        "g1 = NOT x2\ng2 = OR x1 g1\nout = g2\n",
        "g1 = NOT x1\ng2 = NOT x2\ng3 = AND g1 g2\nout = g3\n",
        "g1 = AND x1 x2\ng2 = NOT g1\nout = g2\n",
        "g1 = OR x1 x2\ng2 = AND x1 x2\ng3 = NOT g2\ng4 = AND g1 g3\nout = g4\n",
        "g1 = AND x1 x2\ng2 = AND g1 x3\nout = g2\n",
        "g1 = OR x1 x2\ng2 = OR g1 x3\nout = g2\n",
        "g1 = AND x1 x2\ng2 = OR g1 x3\nout = g2\n",
        "g1 = NOT x3\ng2 = AND x1 g1\nout = g2\n",
        "g1 = OR x1 x2\ng2 = AND x3 g1\ng3 = NOT g2\nout = g3\n",
        "g1 = AND x1 x2\ng2 = AND x1 x3\ng3 = AND x2 x3\ng4 = OR g1 g2\ng5 = OR g4 g3\nout = g5\n",
        "g1 = AND x1 x2\ng2 = AND x3 x4\ng3 = OR g1 g2\nout = g3\n",
        "g1 = OR x1 x2\ng2 = OR x3 x4\ng3 = AND g1 g2\nout = g3\n",
        "g1 = NOT x4\ng2 = AND x1 g1\ng3 = OR g2 x3\nout = g3\n",
        "out = x4\n",
        "g1 = AND x2 x3\ng2 = OR x1 g1\ng3 = NOT x4\ng4 = AND g2 g3\nout = g4\n",
    ];
    let circuits: Vec<BoolCircuit> = texts
        .iter()
        .map(|t| parse_circuit(t).expect("fixture circuits parse"))
        .collect();
    for c in &circuits {
        assert!(c.num_inputs() <= 4 && c.size() <= 8);
    }
    circuits
}

/// All rooted labeled trees on `1..=max_vertices` vertices with vertex 0 as
/// the root, by filtering parent assignments for acyclicity.
pub fn all_rooted_trees(max_vertices: usize) -> Vec<RootedTree> {
    let mut trees = Vec::new();
    for m in 1..=max_vertices {
        let labels: Vec<String> = (0..m).map(|i| format!("v{i}")).collect();
        if m == 1 {
            trees.push(RootedTree::new(labels, "v0", &[]).expect("single vertex"));
            continue;
        }
        // Each non-root vertex picks any other vertex as parent; cyclic
        // assignments are rejected by the tree constructor.
        let base = (m - 1) as u64;
        let total = base.pow((m - 1) as u32);
        for code in 0..total {
            let mut c = code;
            let pairs: Vec<(String, String)> = (1..m)
                .map(|i| {
                    let digit = (c % base) as usize;
                    c /= base;
                    let p = if digit >= i { digit + 1 } else { digit };
                    (format!("v{i}"), format!("v{p}"))
                })
                .collect();
            let refs: Vec<(&str, &str)> =
                pairs.iter().map(|(c, p)| (c.as_str(), p.as_str())).collect();
            if let Ok(tree) = RootedTree::new(labels.clone(), "v0", &refs) {
                trees.push(tree);
            }
        }
    }
    trees
}

/// A seeded random matroid over `ground`: either a partition matroid with
/// random disjoint blocks or a uniform matroid with random rank.
pub fn random_matroid(ground: &GroundSet, rng: &mut ChaCha8Rng) -> SetSystemOracle {
    let n = ground.size();
    if rng.gen_bool(0.5) {
        uniform_matroid(ground, rng.gen_range(0..=n))
    } else {
        let mut indices: Vec<usize> = (0..n).collect();
        for i in (1..indices.len()).rev() {
            let j = rng.gen_range(0..=i);
            indices.swap(i, j);
        }
        let mut blocks = Vec::new();
        let mut cursor = 0;
        while cursor < n {
            let take = rng.gen_range(1..=3.min(n - cursor));
            let members = indices[cursor..cursor + take].to_vec();
            cursor += take;
            if rng.gen_bool(0.8) {
                blocks.push(PartitionBlock {
                    members,
                    capacity: rng.gen_range(1..=2),
                });
            }
        }
        partition_matroid(ground, &PartitionSpec::new(blocks)).expect("blocks are disjoint")
    }
}

/// A seeded random tree-constrained matching instance: a random rooted tree
/// on the left vertices and a random duplicate-free edge set.
pub fn random_tree_instance(
    rng: &mut ChaCha8Rng,
    max_left: usize,
    max_right: usize,
    max_edges: usize,
) -> (BipartiteGraph, RootedTree) {
    let nl = rng.gen_range(1..=max_left);
    let nr = rng.gen_range(1..=max_right);
    let left: Vec<String> = (0..nl).map(|i| format!("v{i}")).collect();
    let right: Vec<String> = (0..nr).map(|i| format!("w{i}")).collect();

    let pairs: Vec<(String, String)> = (1..nl)
        .map(|i| (format!("v{i}"), format!("v{}", rng.gen_range(0..i))))
        .collect();
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(c, p)| (c.as_str(), p.as_str())).collect();
    let tree = RootedTree::new(left.clone(), "v0", &refs).expect("ancestor parents are acyclic");

    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for _ in 0..rng.gen_range(0..=max_edges) {
        let e = (rng.gen_range(0..nl), rng.gen_range(0..nr));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    let named: Vec<(String, String)> = edges
        .iter()
        .map(|&(l, r)| (left[l].clone(), right[r].clone()))
        .collect();
    let named_refs: Vec<(&str, &str)> =
        named.iter().map(|(l, r)| (l.as_str(), r.as_str())).collect();
    let graph = BipartiteGraph::new(left, right, &named_refs).expect("edges are deduplicated");
    (graph, tree)
}
