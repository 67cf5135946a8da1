//! Satisfiability verdicts through four interchangeable routes: the direct
//! brute-force check, or any of the three gadget constructions solved at
//! desk scale. All routes agree by construction; the CLI and the
//! conformance tests exercise that agreement.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::logic::{brute_force_sat, CnfFormula};
use crate::reductions::{
    padded_sat_to_intersection, sat_to_intersection, sat_to_weighted_greedoid,
};
use crate::solvers::{brute_force_max_intersection, brute_force_max_weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatRoute {
    /// Enumerate truth assignments directly.
    Direct,
    /// Satisfiable iff the intersection optimum reaches n.
    Intersection,
    /// Satisfiable iff the padded intersection optimum reaches |S|-n.
    Padded,
    /// Satisfiable iff the weighted greedoid optimum exceeds n+1.
    Weighted,
}

impl SatRoute {
    pub const ALL: [SatRoute; 4] = [
        SatRoute::Direct,
        SatRoute::Intersection,
        SatRoute::Padded,
        SatRoute::Weighted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SatRoute::Direct => "direct",
            SatRoute::Intersection => "intersection",
            SatRoute::Padded => "padded",
            SatRoute::Weighted => "weighted",
        }
    }
}

/// Padding exponent used by the padded route: the largest inv_eps with
/// (2n)^inv_eps <= 8, so the gadget stays solvable by brute force while
/// still carrying indicators for small n.
fn padded_route_inv_eps(n: usize) -> u32 {
    let base = 2 * n as u128;
    let mut inv_eps = 1;
    while base.pow(inv_eps + 1) <= 8 {
        inv_eps += 1;
    }
    inv_eps
}

/// True iff `formula` is satisfiable, decided through `route`.
pub fn sat_verdict(formula: &CnfFormula, route: SatRoute) -> Result<bool> {
    let n = formula.num_vars();
    match route {
        SatRoute::Direct => Ok(brute_force_sat(formula)?.is_some()),
        SatRoute::Intersection => {
            let instance = sat_to_intersection(formula);
            Ok(brute_force_max_intersection(&instance)?.size == n)
        }
        SatRoute::Padded => {
            let instance = padded_sat_to_intersection(formula, padded_route_inv_eps(n))?;
            let optimum = brute_force_max_intersection(&instance)?.size;
            Ok(optimum == instance.ground().size() - n)
        }
        SatRoute::Weighted => {
            let (oracle, weights) = sat_to_weighted_greedoid(formula, 1)?;
            let optimum = brute_force_max_weight(&oracle, &weights)?.weight;
            let ground_size = oracle.ground().size() as u32;
            let satisfied = (BigInt::one() << ground_size) * (n as i64 + 1) + 1;
            Ok(optimum == satisfied)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree_on_small_formulas() {
        let fixtures = [
            CnfFormula::new(1, vec![vec![1]]).unwrap(),
            CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap(),
            CnfFormula::new(2, vec![vec![1, 2], vec![-1, -2]]).unwrap(),
            CnfFormula::new(2, vec![vec![1], vec![-1], vec![2]]).unwrap(),
            CnfFormula::new(3, vec![vec![1, -2, 3]]).unwrap(),
        ];
        for formula in &fixtures {
            let direct = sat_verdict(formula, SatRoute::Direct).unwrap();
            for route in SatRoute::ALL {
                assert_eq!(
                    sat_verdict(formula, route).unwrap(),
                    direct,
                    "route {} disagrees",
                    route.name()
                );
            }
        }
    }

    #[test]
    fn padded_route_exponent_is_desk_scale() {
        assert_eq!(padded_route_inv_eps(1), 3);
        assert_eq!(padded_route_inv_eps(2), 1);
        assert_eq!(padded_route_inv_eps(4), 1);
    }
}
