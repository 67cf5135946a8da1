//! Encode satisfiability of a 3CNF formula as a matroid-greedoid
//! intersection: the formula is satisfiable exactly when the largest common
//! set has one element per variable.
//!
//! ```sh
//! cargo run --example sat_reduction
//! ```

use setsystems::logic::{brute_force_sat, parse_dimacs};
use setsystems::reductions::{sat_to_intersection, serialize_instance};
use setsystems::solvers::brute_force_max_intersection;

fn main() -> setsystems::Result<()> {
    let satisfiable = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 2 0\n")?;
    let unsatisfiable = parse_dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n")?;

    for formula in [satisfiable, unsatisfiable] {
        let n = formula.num_vars();
        let instance = sat_to_intersection(&formula);
        let optimum = brute_force_max_intersection(&instance)?;
        let direct = brute_force_sat(&formula)?;

        println!("formula over {n} variables:");
        println!("  ground set: {:?}", instance
            .ground()
            .elements()
            .iter()
            .map(|e| e.label.as_str())
            .collect::<Vec<_>>());
        println!(
            "  max |F ∩ G| = {} (witness {:?})",
            optimum.size,
            instance.ground().labels_of_mask(&optimum.witness)
        );
        println!(
            "  intersection says {}, direct enumeration says {}",
            if optimum.size == n { "SAT" } else { "UNSAT" },
            if direct.is_some() { "SAT" } else { "UNSAT" },
        );
        println!("  descriptor:\n{}", indent(&serialize_instance(&instance)));
    }
    Ok(())
}

fn indent(text: &str) -> String {
    text.lines()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}
