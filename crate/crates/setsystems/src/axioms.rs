//! Verification of the set-system axioms behind an oracle.
//!
//! Three axioms are checked: the empty set is feasible (M1), feasibility is
//! hereditary under subsets (M2), and any two feasible sets of different
//! sizes admit an exchange element (M3). A system with all three is a
//! matroid; M1 and M3 alone make a greedoid.
//!
//! Exhaustive mode tabulates membership for every subset (capped), then
//! walks feasible pairs only; sampled mode draws a seeded stream of masks
//! and tests the axioms on the feasible ones it finds, so large domains get
//! a reproducible spot check instead of a silent downgrade.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ground::SubsetMask;
use crate::oracle::SetSystemOracle;

/// Default element cap for exhaustive checks.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 12;
/// Hard ceiling for exhaustive checks (the membership table is 2^n bits).
pub const MAX_EXHAUSTIVE_CAP: usize = 24;
/// Default element cap for feasible-set enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;
/// Default number of sampled masks used by the sampled-mode properties.
pub const DEFAULT_SAMPLES: usize = 10_000;

const SAMPLE_POOL_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    /// Seeded spot check; `samples` is the mask-draw budget.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomKind {
    EmptySetFeasible,
    Hereditary,
    Exchange,
}

impl std::fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomKind::EmptySetFeasible => write!(f, "M1"),
            AxiomKind::Hereditary => write!(f, "M2"),
            AxiomKind::Exchange => write!(f, "M3"),
        }
    }
}

/// A witness pair violating one axiom. For M1 both masks are empty; for M2
/// `y` is a proper subset of the feasible `x`; for M3 both are feasible with
/// `|x| > |y|` and no element of `x \ y` extends `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub axiom: AxiomKind,
    pub x: SubsetMask,
    pub y: SubsetMask,
}

impl Counterexample {
    /// Replays the counterexample against the oracle and confirms it still
    /// violates the recorded axiom.
    pub fn reproduces(&self, oracle: &SetSystemOracle) -> bool {
        match self.axiom {
            AxiomKind::EmptySetFeasible => !oracle.member(&self.x),
            AxiomKind::Hereditary => {
                self.y.is_subset_of(&self.x)
                    && self.y != self.x
                    && oracle.member(&self.x)
                    && !oracle.member(&self.y)
            }
            AxiomKind::Exchange => {
                self.x.cardinality() > self.y.cardinality()
                    && oracle.member(&self.x)
                    && oracle.member(&self.y)
                    && self
                        .x
                        .difference(&self.y)
                        .indices()
                        .all(|e| !oracle.member(&self.y.with(e)))
            }
        }
    }
}

/// Outcome of the hereditarity check. Sampled runs that never found a
/// testable feasible pair report `Skipped` rather than a vacuous pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HereditaryStatus {
    Holds,
    Violated,
    Skipped,
}

impl std::fmt::Display for HereditaryStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HereditaryStatus::Holds => write!(f, "true"),
            HereditaryStatus::Violated => write!(f, "false"),
            HereditaryStatus::Skipped => write!(f, "skipped"),
        }
    }
}

/// Result of [`check_axioms`]. If any flag is negative, `counterexample`
/// holds the first violation found (priority M1, M2, M3) and replaying it
/// reproduces the failure.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub m1: bool,
    pub m2: HereditaryStatus,
    pub m3: bool,
    pub counterexample: Option<Counterexample>,
    pub mode: CheckMode,
    pub samples: usize,
    pub seed: u64,
}

impl AxiomReport {
    pub fn is_matroid(&self) -> bool {
        self.m1 && self.m2 == HereditaryStatus::Holds && self.m3
    }

    /// M1 and M3 hold; hereditarity is irrelevant. True for every matroid.
    pub fn is_greedoid(&self) -> bool {
        self.m1 && self.m3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Matroid,
    Greedoid,
    Neither,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Matroid => write!(f, "matroid"),
            Classification::Greedoid => write!(f, "greedoid"),
            Classification::Neither => write!(f, "neither"),
        }
    }
}

/// Classifies a report. Matroid takes precedence when all three axioms
/// hold; a system passing only M1 and M3 is a greedoid.
pub fn classify(report: &AxiomReport) -> Classification {
    if report.is_matroid() {
        Classification::Matroid
    } else if report.is_greedoid() {
        Classification::Greedoid
    } else {
        Classification::Neither
    }
}

/// Checks the axioms with the default exhaustive cap of
/// [`DEFAULT_EXHAUSTIVE_CAP`] elements.
pub fn check_axioms(oracle: &SetSystemOracle, mode: CheckMode) -> Result<AxiomReport> {
    check_axioms_capped(oracle, mode, DEFAULT_EXHAUSTIVE_CAP)
}

/// Checks the axioms with an explicit exhaustive cap (at most
/// [`MAX_EXHAUSTIVE_CAP`]). The cap is ignored in sampled mode.
pub fn check_axioms_capped(
    oracle: &SetSystemOracle,
    mode: CheckMode,
    cap: usize,
) -> Result<AxiomReport> {
    match mode {
        CheckMode::Exhaustive => check_exhaustive(oracle, cap.min(MAX_EXHAUSTIVE_CAP)),
        CheckMode::Sampled { samples, seed } => Ok(check_sampled(oracle, samples, seed)),
    }
}

/// Membership table over all 2^n subsets, n <= MAX_EXHAUSTIVE_CAP.
struct MemberTable {
    n: usize,
    bits: Vec<u64>,
}

impl MemberTable {
    fn build(oracle: &SetSystemOracle) -> Self {
        let n = oracle.ground().size();
        let total = 1usize << n;
        let mut bits = vec![0u64; total.div_ceil(64)];
        for m in 0..total as u64 {
            let mask = SubsetMask::from_bits(n, m);
            if oracle.member(&mask) {
                bits[(m / 64) as usize] |= 1 << (m % 64);
            }
        }
        MemberTable { n, bits }
    }

    fn get(&self, mask: u64) -> bool {
        self.bits[(mask / 64) as usize] >> (mask % 64) & 1 == 1
    }

    fn feasible(&self) -> Vec<u64> {
        (0..1u64 << self.n).filter(|&m| self.get(m)).collect()
    }
}

fn check_exhaustive(oracle: &SetSystemOracle, cap: usize) -> Result<AxiomReport> {
    let n = oracle.ground().size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "exhaustive axiom check: domain too large",
            size: n,
            cap,
        });
    }
    let table = MemberTable::build(oracle);
    let feasible = table.feasible();

    let m1 = table.get(0);
    let mut counterexample = if m1 {
        None
    } else {
        Some(Counterexample {
            axiom: AxiomKind::EmptySetFeasible,
            x: SubsetMask::empty(n),
            y: SubsetMask::empty(n),
        })
    };

    // M2: every proper subset of a feasible set is feasible. Subsets are
    // walked with the carry-rippler, so only feasible supersets pay.
    let mut m2 = HereditaryStatus::Holds;
    'outer_m2: for &x in &feasible {
        if x == 0 {
            continue;
        }
        let mut s = x;
        loop {
            s = s.wrapping_sub(1) & x;
            if !table.get(s) {
                m2 = HereditaryStatus::Violated;
                if counterexample.is_none() {
                    counterexample = Some(Counterexample {
                        axiom: AxiomKind::Hereditary,
                        x: SubsetMask::from_bits(n, x),
                        y: SubsetMask::from_bits(n, s),
                    });
                }
                break 'outer_m2;
            }
            if s == 0 {
                break;
            }
        }
    }

    // M3: for every feasible pair with |x| > |y| some element of x \ y
    // extends y. Pairs of feasible sets only; infeasible masks never enter.
    let cards: Vec<u32> = feasible.iter().map(|m| m.count_ones()).collect();
    let mut m3 = true;
    'outer_m3: for (yi, &y) in feasible.iter().enumerate() {
        for (xi, &x) in feasible.iter().enumerate() {
            if cards[xi] <= cards[yi] {
                continue;
            }
            let mut diff = x & !y;
            let mut extended = false;
            while diff != 0 {
                let bit = diff & diff.wrapping_neg();
                if table.get(y | bit) {
                    extended = true;
                    break;
                }
                diff &= diff - 1;
            }
            if !extended {
                m3 = false;
                if counterexample.is_none() {
                    counterexample = Some(Counterexample {
                        axiom: AxiomKind::Exchange,
                        x: SubsetMask::from_bits(n, x),
                        y: SubsetMask::from_bits(n, y),
                    });
                }
                break 'outer_m3;
            }
        }
    }

    Ok(AxiomReport {
        m1,
        m2,
        m3,
        counterexample,
        mode: CheckMode::Exhaustive,
        samples: 0,
        seed: 0,
    })
}

fn random_mask(rng: &mut ChaCha8Rng, n: usize) -> SubsetMask {
    if n == 0 {
        return SubsetMask::empty(0);
    }
    // Stratify by cardinality so layered families are actually hit.
    let card = rng.gen_range(0..=n);
    let picked = sample(rng, n, card);
    SubsetMask::from_indices(n, picked.iter())
}

fn check_sampled(oracle: &SetSystemOracle, samples: usize, seed: u64) -> AxiomReport {
    let n = oracle.ground().size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let m1 = oracle.member(&SubsetMask::empty(n));
    let mut counterexample = if m1 {
        None
    } else {
        Some(Counterexample {
            axiom: AxiomKind::EmptySetFeasible,
            x: SubsetMask::empty(n),
            y: SubsetMask::empty(n),
        })
    };

    let mut pool: Vec<SubsetMask> = Vec::new();
    for _ in 0..samples {
        let mask = random_mask(&mut rng, n);
        if oracle.member(&mask) && pool.len() < SAMPLE_POOL_CAP {
            pool.push(mask);
        }
    }

    // M2 on one random proper subset of each feasible set found.
    let mut m2 = HereditaryStatus::Skipped;
    for x in &pool {
        if x.is_empty() {
            continue;
        }
        let mut y = SubsetMask::empty(n);
        for i in x.indices() {
            if rng.gen_bool(0.5) {
                y.insert(i);
            }
        }
        if y == *x {
            let drop_pos = rng.gen_range(0..x.cardinality());
            let idx = x.indices().nth(drop_pos).expect("nonempty mask");
            y.remove(idx);
        }
        if !oracle.member(&y) {
            m2 = HereditaryStatus::Violated;
            if counterexample.is_none() {
                counterexample = Some(Counterexample {
                    axiom: AxiomKind::Hereditary,
                    x: x.clone(),
                    y,
                });
            }
            break;
        }
        m2 = HereditaryStatus::Holds;
    }

    // M3 on random feasible pairs of different sizes drawn from the pool.
    // No eligible pair in the budget means no violation was found.
    let mut m3 = true;
    if pool.len() >= 2 {
        'm3: for _ in 0..samples {
            let xi = rng.gen_range(0..pool.len());
            let yi = rng.gen_range(0..pool.len());
            let (x, y) = (&pool[xi], &pool[yi]);
            if x.cardinality() <= y.cardinality() {
                continue;
            }
            let extended = x
                .difference(y)
                .indices()
                .any(|e| oracle.member(&y.with(e)));
            if !extended {
                m3 = false;
                if counterexample.is_none() {
                    counterexample = Some(Counterexample {
                        axiom: AxiomKind::Exchange,
                        x: x.clone(),
                        y: y.clone(),
                    });
                }
                break 'm3;
            }
        }
    }

    AxiomReport {
        m1,
        m2,
        m3,
        counterexample,
        mode: CheckMode::Sampled { samples, seed },
        samples,
        seed,
    }
}

/// Streams the feasible sets of `oracle` in nondecreasing cardinality,
/// lexicographic within each cardinality, with the default cap of
/// [`DEFAULT_ENUMERATION_CAP`] elements.
pub fn enumerate_feasible(
    oracle: &SetSystemOracle,
) -> Result<impl Iterator<Item = SubsetMask> + '_> {
    enumerate_feasible_capped(oracle, DEFAULT_ENUMERATION_CAP)
}

/// Same as [`enumerate_feasible`] with an explicit cap.
pub fn enumerate_feasible_capped(
    oracle: &SetSystemOracle,
    cap: usize,
) -> Result<impl Iterator<Item = SubsetMask> + '_> {
    use itertools::Itertools;
    let n = oracle.ground().size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "feasible-set enumeration: domain too large",
            size: n,
            cap,
        });
    }
    Ok((0..=n)
        .flat_map(move |card| (0..n).combinations(card))
        .map(move |combo| SubsetMask::from_indices(n, combo))
        .filter(move |mask| oracle.member(mask)))
}
