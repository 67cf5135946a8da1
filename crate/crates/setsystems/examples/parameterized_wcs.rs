//! The parameterized constructions: does a circuit have a satisfying
//! assignment with exactly k true variables? Both gadgets answer through
//! the size of the largest common set -- k+1 for the primal form, |S|-k for
//! the dual -- and both agree with direct enumeration.
//!
//! ```sh
//! cargo run --example parameterized_wcs
//! ```

use setsystems::logic::{brute_force_weighted_sat, parse_circuit};
use setsystems::reductions::{wcs_to_dual_param_intersection, wcs_to_param_intersection};
use setsystems::solvers::brute_force_max_intersection;

fn main() -> setsystems::Result<()> {
    // x1 XOR x2, built from the fan-in-2 basis.
    let circuit = parse_circuit(
        "or = OR x1 x2\nboth = AND x1 x2\nnotboth = NOT both\nout_gate = AND or notboth\nout = out_gate\n",
    )?;
    let n = circuit.num_inputs();
    println!("circuit size |e| = {} over {n} inputs", circuit.size());

    for k in 0..=n as u32 {
        let direct = brute_force_weighted_sat(&circuit, k as usize)?;

        let (primal, primal_target) = wcs_to_param_intersection(&circuit, k)?;
        let primal_hit = brute_force_max_intersection(&primal)?.size == primal_target;

        let (dual, dual_target) = wcs_to_dual_param_intersection(&circuit, k)?;
        let dual_hit = brute_force_max_intersection(&dual)?.size == dual_target;

        println!(
            "k={k}: weight-k satisfying assignment {} | primal size-{primal_target} set: {} | dual size-{dual_target} set: {}",
            match &direct {
                Some(z) => format!("yes ({z})"),
                None => "no".to_string(),
            },
            primal_hit,
            dual_hit,
        );
        assert_eq!(direct.is_some(), primal_hit);
        assert_eq!(direct.is_some(), dual_hit);
    }
    Ok(())
}
