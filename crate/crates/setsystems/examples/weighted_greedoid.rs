//! Weighted greedoid maximization with an exponentially heavy indicator
//! element: the optimum is (n+1)*2^{|S|^k}+1 for satisfiable formulas and
//! n+1 otherwise, so the two cases differ by more than a 2^{|S|^k} factor.
//! Exact big-integer arithmetic throughout; the unweighted maximization is
//! shown for contrast, since a plain greedy walk already solves it.
//!
//! ```sh
//! cargo run --example weighted_greedoid
//! ```

use num_bigint::BigInt;
use setsystems::logic::CnfFormula;
use setsystems::reductions::sat_to_weighted_greedoid;
use setsystems::solvers::{brute_force_max_weight, greedy_basis};

fn main() -> setsystems::Result<()> {
    let k = 2;
    let satisfiable = CnfFormula::new(2, vec![vec![1, -2]])?;
    let unsatisfiable = CnfFormula::new(2, vec![vec![1], vec![-1]])?;

    let mut optima: Vec<BigInt> = Vec::new();
    for (name, formula) in [("satisfiable", satisfiable), ("unsatisfiable", unsatisfiable)] {
        let (oracle, weights) = sat_to_weighted_greedoid(&formula, k)?;
        let s = oracle.ground().size();
        let indicator = weights.get(s - 1);
        let optimum = brute_force_max_weight(&oracle, &weights)?;
        println!("{name}: |S|={s}, k={k}");
        println!("  indicator weight (n+1)*2^(|S|^k)-n+1 = {indicator}");
        println!(
            "  optimum weight = {} (witness {:?})",
            optimum.weight,
            oracle.ground().labels_of_mask(&optimum.witness)
        );

        // Unweighted maximization is easy: greedy augmentation reaches a
        // maximum-cardinality feasible set.
        let basis = greedy_basis(&oracle);
        println!(
            "  unweighted greedy basis: {:?}",
            oracle.ground().labels_of_mask(&basis)
        );
        optima.push(optimum.weight);
    }

    let bound = BigInt::from(1) << 25u32; // 2^{|S|^k} with |S|=5, k=2
    println!(
        "optimum ratio exceeds 2^(|S|^k): {} / {} > {bound} is {}",
        optima[0],
        optima[1],
        &optima[0] > &(&optima[1] * &bound)
    );
    Ok(())
}
