//! Exact solvers. The brute-force family enumerates subsets and is the
//! desk-scale ground truth; the exchange-graph intersection solver and the
//! greedy maximizers stay polynomial in oracle calls. Every result carries
//! the number of membership queries it cost.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ground::SubsetMask;
use crate::oracle::SetSystemOracle;
use crate::reductions::{IntersectionInstance, WeightVector};

/// Element cap for the subset-enumerating solvers.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 24;
/// Element cap for the disjoint-pair enumeration (3^n pairs).
pub const DEFAULT_PARTITION_CAP: usize = 16;

/// A maximum common feasible set with the oracle work it took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionOptimum {
    pub size: usize,
    pub witness: SubsetMask,
    pub matroid_calls: u64,
    pub greedoid_calls: u64,
}

impl IntersectionOptimum {
    pub fn oracle_calls(&self) -> u64 {
        self.matroid_calls + self.greedoid_calls
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

/// Maximum-cardinality common feasible set by full enumeration.
///
/// Masks are scanned in decreasing cardinality and lexicographically within
/// each cardinality, stopping at the first hit, so the witness is the
/// lexicographically smallest among the maxima.
pub fn brute_force_max_intersection(
    instance: &IntersectionInstance,
) -> Result<IntersectionOptimum> {
    brute_force_max_intersection_capped(instance, DEFAULT_BRUTE_FORCE_CAP)
}

/// Same as [`brute_force_max_intersection`] with an explicit cap.
pub fn brute_force_max_intersection_capped(
    instance: &IntersectionInstance,
    cap: usize,
) -> Result<IntersectionOptimum> {
    brute_force_max_common_capped(instance.matroid(), instance.greedoid(), cap)
}

/// Maximum-cardinality set feasible in both oracles, for ad-hoc pairs that
/// are not wrapped in an instance.
pub fn brute_force_max_common(
    a: &SetSystemOracle,
    b: &SetSystemOracle,
) -> Result<IntersectionOptimum> {
    brute_force_max_common_capped(a, b, DEFAULT_BRUTE_FORCE_CAP)
}

fn brute_force_max_common_capped(
    a: &SetSystemOracle,
    b: &SetSystemOracle,
    cap: usize,
) -> Result<IntersectionOptimum> {
    if a.ground() != b.ground() {
        return Err(Error::construction(
            "intersection solving needs oracles over one ground set",
        ));
    }
    let n = a.ground().size();
    check_cap("brute-force intersection", n, cap)?;
    let a_before = a.calls();
    let b_before = b.calls();
    for card in (0..=n).rev() {
        for combo in (0..n).combinations(card) {
            let mask = SubsetMask::from_indices(n, combo);
            if a.member(&mask) && b.member(&mask) {
                return Ok(IntersectionOptimum {
                    size: card,
                    witness: mask,
                    matroid_calls: a.calls() - a_before,
                    greedoid_calls: b.calls() - b_before,
                });
            }
        }
    }
    Err(Error::Infeasible(
        "no common feasible set (the empty set is rejected)".into(),
    ))
}

/// A maximum-weight feasible set with its exact big-integer weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightOptimum {
    pub weight: BigInt,
    pub witness: SubsetMask,
    pub oracle_calls: u64,
}

/// Maximum-weight feasible set by full enumeration; ties go to the
/// lexicographically smallest witness. Weights may be negative.
pub fn brute_force_max_weight(
    oracle: &SetSystemOracle,
    weights: &WeightVector,
) -> Result<WeightOptimum> {
    brute_force_max_weight_capped(oracle, weights, DEFAULT_BRUTE_FORCE_CAP)
}

/// Same as [`brute_force_max_weight`] with an explicit cap.
pub fn brute_force_max_weight_capped(
    oracle: &SetSystemOracle,
    weights: &WeightVector,
    cap: usize,
) -> Result<WeightOptimum> {
    let n = oracle.ground().size();
    check_cap("brute-force weighted maximization", n, cap)?;
    if weights.len() != n {
        return Err(Error::construction(format!(
            "{} weights given for a ground set of {n}",
            weights.len()
        )));
    }
    let before = oracle.calls();
    let mut best: Option<(BigInt, SubsetMask)> = None;
    for bits in 0..1u64 << n {
        let mask = SubsetMask::from_bits(n, bits);
        if !oracle.member(&mask) {
            continue;
        }
        let weight = weights.sum_over(&mask);
        let better = match &best {
            None => true,
            Some((w, m)) => weight > *w || (weight == *w && mask < *m),
        };
        if better {
            best = Some((weight, mask));
        }
    }
    let (weight, witness) =
        best.ok_or_else(|| Error::Infeasible("no feasible set at all".into()))?;
    Ok(WeightOptimum {
        weight,
        witness,
        oracle_calls: oracle.calls() - before,
    })
}

/// Maximum-weight common feasible set of an intersection instance.
pub fn brute_force_max_weight_intersection(
    instance: &IntersectionInstance,
    weights: &WeightVector,
) -> Result<WeightOptimum> {
    let n = instance.ground().size();
    check_cap("brute-force weighted intersection", n, DEFAULT_BRUTE_FORCE_CAP)?;
    if weights.len() != n {
        return Err(Error::construction(format!(
            "{} weights given for a ground set of {n}",
            weights.len()
        )));
    }
    let before = instance.matroid().calls() + instance.greedoid().calls();
    let mut best: Option<(BigInt, SubsetMask)> = None;
    for bits in 0..1u64 << n {
        let mask = SubsetMask::from_bits(n, bits);
        if !instance.matroid().member(&mask) || !instance.greedoid().member(&mask) {
            continue;
        }
        let weight = weights.sum_over(&mask);
        let better = match &best {
            None => true,
            Some((w, m)) => weight > *w || (weight == *w && mask < *m),
        };
        if better {
            best = Some((weight, mask));
        }
    }
    let (weight, witness) =
        best.ok_or_else(|| Error::Infeasible("no common feasible set".into()))?;
    Ok(WeightOptimum {
        weight,
        witness,
        oracle_calls: instance.matroid().calls() + instance.greedoid().calls() - before,
    })
}

/// A maximum disjoint pair: one part feasible in each system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionOptimum {
    pub size: usize,
    pub matroid_part: SubsetMask,
    pub greedoid_part: SubsetMask,
    pub oracle_calls: u64,
}

/// Maximum partition by enumerating disjoint pairs (Y, Z): Y feasible in
/// `matroid`, Z in `greedoid`, maximizing |Y ∪ Z|. Ties go to the pair with
/// lexicographically smallest Y, then Z. The pair space is 3^n, hence the
/// smaller cap.
pub fn brute_force_max_partition(
    matroid: &SetSystemOracle,
    greedoid: &SetSystemOracle,
) -> Result<PartitionOptimum> {
    brute_force_max_partition_capped(matroid, greedoid, DEFAULT_PARTITION_CAP)
}

/// Same as [`brute_force_max_partition`] with an explicit cap.
pub fn brute_force_max_partition_capped(
    matroid: &SetSystemOracle,
    greedoid: &SetSystemOracle,
    cap: usize,
) -> Result<PartitionOptimum> {
    if matroid.ground() != greedoid.ground() {
        return Err(Error::construction(
            "partition solving needs oracles over one ground set",
        ));
    }
    let n = matroid.ground().size();
    check_cap("brute-force partition", n, cap)?;
    let before = matroid.calls() + greedoid.calls();
    let mut best: Option<(usize, SubsetMask, SubsetMask)> = None;
    for y_bits in 0..1u64 << n {
        let y = SubsetMask::from_bits(n, y_bits);
        if !matroid.member(&y) {
            continue;
        }
        // Carry-rippler over subsets of the complement of Y.
        let complement = if n == 64 {
            !y_bits
        } else {
            !y_bits & ((1u64 << n) - 1)
        };
        let mut z_bits = 0u64;
        loop {
            let z = SubsetMask::from_bits(n, z_bits);
            if greedoid.member(&z) {
                let size = y.cardinality() + z.cardinality();
                let better = match &best {
                    None => true,
                    Some((s, by, bz)) => {
                        size > *s
                            || (size == *s && (y < *by || (y == *by && z < *bz)))
                    }
                };
                if better {
                    best = Some((size, y.clone(), z));
                }
            }
            if z_bits == complement {
                break;
            }
            z_bits = z_bits.wrapping_sub(complement) & complement;
        }
    }
    let (size, matroid_part, greedoid_part) =
        best.ok_or_else(|| Error::Infeasible("no disjoint feasible pair".into()))?;
    Ok(PartitionOptimum {
        size,
        matroid_part,
        greedoid_part,
        oracle_calls: matroid.calls() + greedoid.calls() - before,
    })
}

/// Maximum common independent set of two matroids by exchange-graph
/// augmentation: starting from the empty set, repeatedly build the
/// directed exchange graph on the current set and follow a shortest
/// augmenting path from the a-addable elements to the b-addable ones.
///
/// Oracle work is polynomial in the ground size; no subset enumeration
/// happens. Matroid-hood of the inputs is the caller's responsibility:
/// on non-matroid inputs the result may be non-maximal (not detected).
pub fn matroid_intersection(
    a: &SetSystemOracle,
    b: &SetSystemOracle,
) -> Result<IntersectionOptimum> {
    if a.ground() != b.ground() {
        return Err(Error::construction(
            "matroid intersection needs oracles over one ground set",
        ));
    }
    let n = a.ground().size();
    let a_before = a.calls();
    let b_before = b.calls();
    let mut current = SubsetMask::empty(n);

    loop {
        let in_current: Vec<bool> = (0..n).map(|e| current.contains(e)).collect();
        let mut sources = Vec::new();
        let mut is_sink = vec![false; n];
        for e in 0..n {
            if in_current[e] {
                continue;
            }
            let grown = current.with(e);
            if a.member(&grown) {
                sources.push(e);
            }
            if b.member(&grown) {
                is_sink[e] = true;
            }
        }

        // BFS over the exchange graph; arcs y->x when swapping x for y
        // keeps a-feasibility, x->y when it keeps b-feasibility.
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut visited = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        for &s in &sources {
            visited[s] = true;
            queue.push_back(s);
        }
        let mut reached_sink = sources.iter().copied().find(|&s| is_sink[s]);

        while reached_sink.is_none() {
            let Some(v) = queue.pop_front() else {
                break;
            };
            if in_current[v] {
                // v in the current set: arcs v -> x for x outside with
                // current - v + x feasible in a.
                let removed = current.without(v);
                for x in 0..n {
                    if in_current[x] || visited[x] {
                        continue;
                    }
                    if a.member(&removed.with(x)) {
                        visited[x] = true;
                        parent[x] = Some(v);
                        if is_sink[x] {
                            reached_sink = Some(x);
                            break;
                        }
                        queue.push_back(x);
                    }
                }
            } else {
                // v outside: arcs v -> y for y inside with current - y + v
                // feasible in b.
                let grown = current.with(v);
                for y in 0..n {
                    if !in_current[y] || visited[y] {
                        continue;
                    }
                    if b.member(&grown.without(y)) {
                        visited[y] = true;
                        parent[y] = Some(v);
                        queue.push_back(y);
                    }
                }
            }
        }

        match reached_sink {
            None => break,
            Some(sink) => {
                // Flip membership along the augmenting path.
                let mut v = Some(sink);
                while let Some(e) = v {
                    if current.contains(e) {
                        current.remove(e);
                    } else {
                        current.insert(e);
                    }
                    v = parent[e];
                }
            }
        }
    }

    Ok(IntersectionOptimum {
        size: current.cardinality(),
        witness: current,
        matroid_calls: a.calls() - a_before,
        greedoid_calls: b.calls() - b_before,
    })
}

/// Grows a basis by repeatedly adding the lowest-index element that keeps
/// the set feasible. On a greedoid (M1 + M3) the result has maximum
/// cardinality among all feasible sets.
pub fn greedy_basis(oracle: &SetSystemOracle) -> SubsetMask {
    let n = oracle.ground().size();
    let mut current = SubsetMask::empty(n);
    loop {
        let mut progressed = false;
        // Rescan from the bottom: in a greedoid an element skipped earlier
        // can become addable later.
        for e in 0..n {
            if current.contains(e) {
                continue;
            }
            let grown = current.with(e);
            if oracle.member(&grown) {
                current = grown;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return current;
        }
    }
}

/// Classical matroid greedy: consider elements by decreasing weight (index
/// breaks ties), skip negative weights, keep an element whenever the set
/// stays feasible. On a matroid this reaches the maximum weight.
pub fn greedy_weighted_matroid(oracle: &SetSystemOracle, weights: &WeightVector) -> SubsetMask {
    let n = oracle.ground().size();
    assert_eq!(weights.len(), n, "one weight per element");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| weights.get(j).cmp(weights.get(i)).then(i.cmp(&j)));
    let zero = BigInt::from(0);
    let mut current = SubsetMask::empty(n);
    for e in order {
        if weights.get(e) < &zero {
            continue;
        }
        let grown = current.with(e);
        if oracle.member(&grown) {
            current = grown;
        }
    }
    current
}
