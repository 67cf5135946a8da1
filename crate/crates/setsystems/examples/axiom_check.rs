//! Classify stock oracles by checking the set-system axioms, and replay a
//! counterexample when one is found.
//!
//! ```sh
//! cargo run --example axiom_check
//! ```

use setsystems::axioms::{check_axioms, classify, CheckMode};
use setsystems::families::{
    cardinality_band, partition_matroid, rooted_subtree_greedoid, uniform_matroid,
    PartitionBlock, PartitionSpec,
};
use setsystems::ground::GroundSet;
use setsystems::treematch::RootedTree;

fn main() -> setsystems::Result<()> {
    let ground = GroundSet::new(["a", "b", "c", "d"])?;

    let spec = PartitionSpec::new(vec![
        PartitionBlock {
            members: vec![0, 1],
            capacity: 1,
        },
        PartitionBlock {
            members: vec![2, 3],
            capacity: 1,
        },
    ]);
    let tree = RootedTree::new(
        vec!["r".into(), "a".into(), "b".into()],
        "r",
        &[("a", "r"), ("b", "a")],
    )?;

    let oracles = vec![
        partition_matroid(&ground, &spec)?,
        uniform_matroid(&ground, 2),
        rooted_subtree_greedoid(&tree),
        cardinality_band(&ground, 1, 3), // rejects the empty set
    ];

    for oracle in &oracles {
        let report = check_axioms(oracle, CheckMode::Exhaustive)?;
        println!(
            "{:<45} m1={} m2={} m3={} -> {}",
            oracle.description(),
            report.m1,
            report.m2,
            report.m3,
            classify(&report)
        );
        if let Some(cx) = &report.counterexample {
            println!(
                "    counterexample against {}: x={:?} y={:?} (replays: {})",
                cx.axiom,
                cx.x,
                cx.y,
                cx.reproduces(oracle)
            );
        }
    }

    // The same check, sampled with a fixed seed: useful beyond the
    // exhaustive cap, and reproducible bit for bit.
    let big = GroundSet::new((0..30).map(|i| format!("e{i}")))?;
    let oracle = uniform_matroid(&big, 15);
    let report = check_axioms(
        &oracle,
        CheckMode::Sampled {
            samples: 5_000,
            seed: 7,
        },
    )?;
    println!(
        "{:<45} m1={} m2={} m3={} -> {} (sampled)",
        oracle.description(),
        report.m1,
        report.m2,
        report.m3,
        classify(&report)
    );
    Ok(())
}
