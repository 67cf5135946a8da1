//! The maximum partition problem: split one set into disjoint parts
//! Y ∪ Z with Y matroid-feasible and Z greedoid-feasible, maximizing the
//! union. Taking Z empty shows the partition optimum always dominates the
//! intersection optimum.
//!
//! ```sh
//! cargo run --example partition_problem
//! ```

use setsystems::logic::CnfFormula;
use setsystems::reductions::sat_to_intersection;
use setsystems::solvers::{brute_force_max_intersection, brute_force_max_partition};

fn main() -> setsystems::Result<()> {
    let formula = CnfFormula::new(2, vec![vec![1, 2]])?;
    let instance = sat_to_intersection(&formula);
    let ground = instance.ground();

    let intersection = brute_force_max_intersection(&instance)?;
    println!(
        "intersection optimum: {} (witness {:?})",
        intersection.size,
        ground.labels_of_mask(&intersection.witness)
    );

    let partition = brute_force_max_partition(instance.matroid(), instance.greedoid())?;
    println!(
        "partition optimum: {} = |Y| + |Z| with Y = {:?}, Z = {:?}",
        partition.size,
        ground.labels_of_mask(&partition.matroid_part),
        ground.labels_of_mask(&partition.greedoid_part)
    );
    assert!(partition.size >= intersection.size);
    assert!(partition
        .matroid_part
        .is_disjoint_from(&partition.greedoid_part));
    Ok(())
}
