//! The padded construction: indicator elements blow the ground set up to
//! (2n)^inv_eps, so satisfiable formulas reach optimum |S|-n while
//! unsatisfiable ones stop at n-1. Any approximation within |S|^(1-eps)
//! would have to tell the two cases apart.
//!
//! ```sh
//! cargo run --example inapprox_gap
//! ```

use setsystems::logic::CnfFormula;
use setsystems::reductions::padded_sat_to_intersection;
use setsystems::solvers::brute_force_max_intersection;

fn main() -> setsystems::Result<()> {
    let inv_eps = 2;
    let satisfiable = CnfFormula::new(2, vec![vec![1, 2]])?;
    let unsatisfiable = CnfFormula::new(2, vec![vec![1, 2], vec![-1, 2], vec![1, -2], vec![-1, -2]])?;

    let mut optima = Vec::new();
    for (name, formula) in [("satisfiable", satisfiable), ("unsatisfiable", unsatisfiable)] {
        let n = formula.num_vars();
        let instance = padded_sat_to_intersection(&formula, inv_eps)?;
        let s = instance.ground().size();
        let optimum = brute_force_max_intersection(&instance)?;
        println!(
            "{name}: n={n}, inv_eps={inv_eps}, |S|={s} ({} indicators), optimum={}",
            s - 2 * n,
            optimum.size
        );
        println!(
            "  expected {} = {}",
            if optimum.size == s - n { "|S|-n" } else { "<= n-1" },
            optimum.size
        );
        optima.push(optimum.size);
    }

    // The gap that defeats |S|^(1-eps) approximation: with inv_eps = 2 the
    // threshold |S|^(1/2)/2 sits strictly between the two optima.
    let ratio = optima[0] as f64 / optima[1].max(1) as f64;
    let threshold = (16f64).sqrt() / 2.0;
    println!("gap ratio {ratio:.1} vs threshold |S|^(1/2)/2 = {threshold:.1}");
    Ok(())
}
