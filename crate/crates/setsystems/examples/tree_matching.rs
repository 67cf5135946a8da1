//! Maximum tree-constrained matching: the matched left vertices must
//! contain the tree's root and induce a connected subtree. Solved by
//! enumerating root subtrees and matching each one, then cross-checked
//! against the matroid-greedoid intersection encoding.
//!
//! ```sh
//! cargo run --example tree_matching
//! ```

use setsystems::solvers::brute_force_max_intersection;
use setsystems::treematch::{
    enumerate_root_subtrees, tree_constrained_matching, tree_matching_as_intersection,
    BipartiteGraph, RootedTree,
};

fn main() -> setsystems::Result<()> {
    // A root with two children; b only connects through a.
    let tree = RootedTree::new(
        vec!["r".into(), "a".into(), "b".into()],
        "r",
        &[("a", "r"), ("b", "a")],
    )?;
    let graph = BipartiteGraph::new(
        vec!["r".into(), "a".into(), "b".into()],
        vec!["x".into(), "y".into(), "z".into()],
        &[("r", "x"), ("r", "y"), ("a", "x"), ("a", "z"), ("b", "z")],
    )?;

    println!("root subtrees, smallest first:");
    for w in enumerate_root_subtrees(&tree) {
        let labels: Vec<&str> = w.indices().map(|v| tree.label(v)).collect();
        println!("  {labels:?}");
    }

    let outcome = tree_constrained_matching(&graph, &tree)?;
    let edges: Vec<String> = outcome
        .matching
        .edges
        .indices()
        .map(|e| graph.edge_label(e))
        .collect();
    let matched: Vec<&str> = outcome.matched_left.indices().map(|v| tree.label(v)).collect();
    println!(
        "enumeration algorithm: {} edges {edges:?}, saturating {matched:?} \
         ({} subtrees examined)",
        outcome.matching.size(),
        outcome.subtrees_examined
    );

    let instance = tree_matching_as_intersection(&graph, &tree)?;
    let optimum = brute_force_max_intersection(&instance)?;
    println!(
        "intersection encoding: optimum {} (witness {:?})",
        optimum.size,
        instance.ground().labels_of_mask(&optimum.witness)
    );
    assert_eq!(optimum.size, outcome.matching.size());

    // On a path the subtree count is linear, so the enumeration route is
    // fast; a balanced binary tree has exponentially many root subtrees.
    let path_labels: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
    let path_parents: Vec<(String, String)> = (1..6)
        .map(|i| (format!("v{i}"), format!("v{}", i - 1)))
        .collect();
    let refs: Vec<(&str, &str)> = path_parents
        .iter()
        .map(|(c, p)| (c.as_str(), p.as_str()))
        .collect();
    let path = RootedTree::new(path_labels, "v0", &refs)?;
    println!(
        "path of 6 vertices: {} root subtrees",
        enumerate_root_subtrees(&path).count()
    );
    Ok(())
}
