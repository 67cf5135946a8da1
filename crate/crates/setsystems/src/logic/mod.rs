//! Propositional inputs for the gadget constructions: 3CNF formulas,
//! boolean circuits, and brute-force satisfiability oracles used as
//! independent ground truth in tests.

mod circuit;
mod cnf;

pub use circuit::{
    brute_force_weighted_sat, eval_circuit, parse_circuit, BoolCircuit, Gate,
};
pub use cnf::{
    brute_force_sat, eval_cnf, parse_dimacs, CnfFormula, TruthAssignment, SAT_BRUTE_CAP,
};
