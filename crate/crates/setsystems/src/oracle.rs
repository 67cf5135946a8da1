//! The membership-oracle abstraction: a pure predicate over subsets of one
//! ground set, with a call counter so solvers can report how much oracle
//! work they did.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::ground::{GroundSet, SubsetMask};

/// A set system given by a total deterministic membership predicate.
///
/// The predicate must be pure: the same mask always yields the same answer.
/// Oracles are immutable and safe to share across threads; the call counter
/// uses relaxed atomics and only ever increases.
pub struct SetSystemOracle {
    ground: GroundSet,
    description: String,
    member: Box<dyn Fn(&SubsetMask) -> bool + Send + Sync>,
    calls: AtomicU64,
}

impl SetSystemOracle {
    pub fn new<F>(ground: GroundSet, description: impl Into<String>, member: F) -> Self
    where
        F: Fn(&SubsetMask) -> bool + Send + Sync + 'static,
    {
        SetSystemOracle {
            ground,
            description: description.into(),
            member: Box::new(member),
            calls: AtomicU64::new(0),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Answers whether `mask` is a feasible set. Panics if the mask is over
    /// a different universe size; the predicate is total over this ground.
    pub fn member(&self, mask: &SubsetMask) -> bool {
        assert_eq!(
            mask.universe_size(),
            self.ground.size(),
            "mask universe does not match the oracle's ground set"
        );
        self.calls.fetch_add(1, Ordering::Relaxed);
        (self.member)(mask)
    }

    /// Total number of membership queries answered so far.
    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

impl fmt::Debug for SetSystemOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetSystemOracle")
            .field("ground_size", &self.ground.size())
            .field("description", &self.description)
            .field("calls", &self.calls())
            .finish()
    }
}
