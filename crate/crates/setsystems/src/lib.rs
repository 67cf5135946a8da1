//! Finite set systems given by membership oracles.
//!
//! The crate centers on [`SetSystemOracle`]: a pure membership predicate
//! over subsets of a labeled ground set. On top of it sit
//!
//! - axiom checking and classification (matroid / greedoid / neither),
//!   exhaustive at small sizes and seeded-sampled beyond ([`axioms`]);
//! - stock families: partition and uniform matroids, rooted-subtree and
//!   tree-constrained edge greedoids ([`families`]);
//! - 3CNF and boolean-circuit parsing with brute-force satisfiability
//!   oracles ([`logic`]);
//! - the satisfiability gadgets: constructions that encode a formula or a
//!   weighted circuit question as a matroid-greedoid intersection (or a
//!   weighted greedoid), with serializable provenance ([`reductions`]);
//! - exact solvers: subset-enumerating brute force, exchange-graph matroid
//!   intersection, and greedy maximizers ([`solvers`]);
//! - tree-constrained bipartite matching with a cross-checkable
//!   intersection encoding ([`treematch`]).
//!
//! Every capability has a runnable example under `examples/`; `cargo run
//! --example axiom_check` is a good starting point. The `setsystems` binary
//! exposes the same machinery as subcommands over the documented file
//! formats.

pub mod axioms;
pub mod error;
pub mod families;
pub mod ground;
pub mod logic;
pub mod oracle;
pub mod reductions;
pub mod satcheck;
pub mod solvers;
pub mod treematch;

pub use error::{Error, Result};
pub use ground::{Element, GroundSet, SubsetMask};
pub use oracle::SetSystemOracle;
