//! The gadget constructions: each one turns a formula or circuit into a
//! matroid-greedoid pair (or a weighted greedoid) over a shared ground set,
//! such that a feasibility question about the inputs becomes a size or
//! weight question about the intersection.
//!
//! Ground-set conventions, fixed for deterministic serialization:
//! assignment symbols are ordered `t1,f1,...,tn,fn`; indicator and padding
//! elements follow in the order listed by each construction; the membership
//! predicates evaluate the embedded formula or circuit directly, so the
//! oracles stay pure and self-contained.

mod descriptor;

pub use descriptor::{deserialize_instance, serialize_instance};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::families::{partition_matroid, power_set, PartitionBlock, PartitionSpec};
use crate::ground::{GroundSet, SubsetMask};
use crate::logic::{BoolCircuit, CnfFormula, TruthAssignment};
use crate::oracle::SetSystemOracle;
use crate::treematch::{BipartiteGraph, RootedTree};

/// Ceiling on the padded construction's ground size.
pub const MAX_PADDED_GROUND: usize = 1 << 16;
/// Ceiling on the bit length of the weighted construction's indicator.
pub const MAX_WEIGHT_EXPONENT: u64 = 1 << 20;

/// How an intersection instance was built.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Sat3 { formula: CnfFormula },
    Padded { formula: CnfFormula, inv_eps: u32 },
    Weighted { formula: CnfFormula, k: u32 },
    Wcs { circuit: BoolCircuit, k: u32 },
    WcsDual { circuit: BoolCircuit, k: u32 },
    TreeMatch { graph: BipartiteGraph, tree: RootedTree },
}

impl Provenance {
    /// Stable kind tag used by the descriptor schema.
    pub fn kind(&self) -> &'static str {
        match self {
            Provenance::Sat3 { .. } => "sat3",
            Provenance::Padded { .. } => "padded",
            Provenance::Weighted { .. } => "weighted",
            Provenance::Wcs { .. } => "wcs",
            Provenance::WcsDual { .. } => "wcs-dual",
            Provenance::TreeMatch { .. } => "treematch",
        }
    }
}

/// A matroid oracle and a greedoid oracle over one ground set, plus the
/// recipe that built them.
#[derive(Debug)]
pub struct IntersectionInstance {
    ground: GroundSet,
    matroid: SetSystemOracle,
    greedoid: SetSystemOracle,
    provenance: Provenance,
}

impl IntersectionInstance {
    pub fn new(
        ground: GroundSet,
        matroid: SetSystemOracle,
        greedoid: SetSystemOracle,
        provenance: Provenance,
    ) -> Result<Self> {
        if matroid.ground() != &ground || greedoid.ground() != &ground {
            return Err(Error::construction(
                "intersection instance oracles must share one ground set",
            ));
        }
        Ok(IntersectionInstance {
            ground,
            matroid,
            greedoid,
            provenance,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn matroid(&self) -> &SetSystemOracle {
        &self.matroid
    }

    pub fn greedoid(&self) -> &SetSystemOracle {
        &self.greedoid
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Per-element arbitrary-precision integer weights. Fixed-width arithmetic
/// is never used on weights; the weighted construction's indicator weight
/// is astronomically large by design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<BigInt>,
}

impl WeightVector {
    pub fn new(weights: Vec<BigInt>) -> Self {
        WeightVector { weights }
    }

    pub fn from_i64s(weights: &[i64]) -> Self {
        WeightVector {
            weights: weights.iter().map(|&w| BigInt::from(w)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, index: usize) -> &BigInt {
        &self.weights[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &BigInt> {
        self.weights.iter()
    }

    pub fn sum_over(&self, mask: &SubsetMask) -> BigInt {
        mask.indices().map(|i| &self.weights[i]).sum()
    }

    /// Prints the `weights v1` schema: one `label weight` line per ground
    /// element, in ground order.
    pub fn to_text(&self, ground: &GroundSet) -> String {
        assert_eq!(self.len(), ground.size(), "one weight per element");
        let mut out = String::from("weights v1\n");
        for (i, w) in self.weights.iter().enumerate() {
            out.push_str(&format!("{} {}\n", ground.label(i), w));
        }
        out
    }

    /// Parses the `weights v1` schema against a ground set; labels must
    /// appear in ground order.
    pub fn parse(text: &str, ground: &GroundSet) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, header)) if header.trim() == "weights v1" => {}
            _ => return Err(Error::parse(1, "expected `weights v1` header")),
        }
        let mut weights = Vec::with_capacity(ground.size());
        for (lineno, line) in lines {
            let lineno = lineno + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let label = tokens
                .next()
                .ok_or_else(|| Error::parse(lineno, "expected `label weight`"))?;
            let value = tokens
                .next()
                .ok_or_else(|| Error::parse(lineno, "expected `label weight`"))?;
            if tokens.next().is_some() {
                return Err(Error::parse(lineno, "expected exactly `label weight`"));
            }
            let index = weights.len();
            if index >= ground.size() || ground.label(index) != label {
                return Err(Error::parse(
                    lineno,
                    format!("label {label:?} does not match the ground set order"),
                ));
            }
            let w: BigInt = value
                .parse()
                .map_err(|_| Error::parse(lineno, format!("malformed weight {value:?}")))?;
            weights.push(w);
        }
        if weights.len() != ground.size() {
            return Err(Error::parse(
                text.lines().count().max(1),
                format!(
                    "{} weights given for a ground set of {}",
                    weights.len(),
                    ground.size()
                ),
            ));
        }
        Ok(WeightVector { weights })
    }
}

/// Ground set `t1,f1,...,tn,fn` plus optional extra labels.
fn assignment_ground(n: usize, extra: impl IntoIterator<Item = String>) -> GroundSet {
    let mut labels: Vec<String> = Vec::with_capacity(2 * n);
    for i in 1..=n {
        labels.push(format!("t{i}"));
        labels.push(format!("f{i}"));
    }
    labels.extend(extra);
    GroundSet::new(labels).expect("generated labels are unique")
}

/// Blocks {t_i, f_i} with capacity one; elements beyond `2n` unconstrained.
fn assignment_blocks(n: usize) -> PartitionSpec {
    PartitionSpec::new(
        (0..n)
            .map(|i| PartitionBlock {
                members: vec![2 * i, 2 * i + 1],
                capacity: 1,
            })
            .collect(),
    )
}

/// Decodes the assignment-symbol prefix (bits `0..2n`) into a truth
/// assignment, requiring exactly one of each `t_i,f_i` pair.
fn decode_assignment(mask: &SubsetMask, n: usize) -> Option<TruthAssignment> {
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let t = mask.contains(2 * i);
        let f = mask.contains(2 * i + 1);
        if t == f {
            return None;
        }
        values.push(t);
    }
    Some(TruthAssignment::new(values))
}

fn count_below(mask: &SubsetMask, bound: usize) -> usize {
    mask.indices().take_while(|&i| i < bound).count()
}

/// Group A of the satisfiability gadgets: at most `n` assignment symbols,
/// none of them from the last pair.
fn in_group_a(mask: &SubsetMask, n: usize, assignment_card: usize) -> bool {
    assignment_card <= n && !mask.contains(2 * n - 2) && !mask.contains(2 * n - 1)
}

/// Group B: the assignment symbols encode a satisfying truth assignment.
fn in_group_b(mask: &SubsetMask, n: usize, formula: &CnfFormula) -> bool {
    decode_assignment(mask, n).is_some_and(|z| formula.eval(&z))
}

/// The satisfiability gadget: ground `t1,f1,...,tn,fn`; the matroid caps
/// each `t_i,f_i` pair at one element; the greedoid accepts small sets
/// avoiding the last pair (group A) and satisfying full assignments (group
/// B). The formula is satisfiable iff the intersection reaches size `n`.
pub fn sat_to_intersection(formula: &CnfFormula) -> IntersectionInstance {
    let n = formula.num_vars();
    let ground = assignment_ground(n, []);
    let matroid =
        partition_matroid(&ground, &assignment_blocks(n)).expect("generated blocks are disjoint");
    let f = formula.clone();
    let greedoid = SetSystemOracle::new(
        ground.clone(),
        format!("satisfiability greedoid, n={n}"),
        move |x| {
            let card = x.cardinality();
            in_group_a(x, n, card) || in_group_b(x, n, &f)
        },
    );
    IntersectionInstance::new(
        ground,
        matroid,
        greedoid,
        Provenance::Sat3 {
            formula: formula.clone(),
        },
    )
    .expect("oracles share the generated ground")
}

/// The padded gadget: the ground set grows to `(2n)^inv_eps` with indicator
/// elements `p_1..p_I`. The matroid leaves indicators unconstrained; the
/// greedoid adds group C, the size-`n` sets of groups A and B padded with
/// any nonempty indicator subset. Satisfiable formulas reach `|S|-n`,
/// unsatisfiable ones stop at `n-1`, which makes the optimum gap wide.
pub fn padded_sat_to_intersection(
    formula: &CnfFormula,
    inv_eps: u32,
) -> Result<IntersectionInstance> {
    if inv_eps < 1 {
        return Err(Error::construction("inv_eps must be at least 1"));
    }
    let n = formula.num_vars();
    let ground_size = (2 * n as u128)
        .checked_pow(inv_eps)
        .filter(|&s| s <= MAX_PADDED_GROUND as u128)
        .ok_or(Error::CapExceeded {
            what: "padded ground size (2n)^inv_eps",
            size: usize::MAX,
            cap: MAX_PADDED_GROUND,
        })? as usize;
    let indicators = ground_size - 2 * n;
    let ground = assignment_ground(n, (1..=indicators).map(|i| format!("p{i}")));
    let matroid =
        partition_matroid(&ground, &assignment_blocks(n)).expect("generated blocks are disjoint");
    let f = formula.clone();
    let greedoid = SetSystemOracle::new(
        ground.clone(),
        format!("padded satisfiability greedoid, n={n}, {indicators} indicators"),
        move |x| {
            let assignment_card = count_below(x, 2 * n);
            let has_indicators = x.cardinality() > assignment_card;
            if has_indicators {
                // Group C: a size-n group A or B set plus indicators.
                assignment_card == n
                    && (in_group_a(x, n, assignment_card) || in_group_b(x, n, &f))
            } else {
                in_group_a(x, n, assignment_card) || in_group_b(x, n, &f)
            }
        },
    );
    IntersectionInstance::new(
        ground,
        matroid,
        greedoid,
        Provenance::Padded {
            formula: formula.clone(),
            inv_eps,
        },
    )
}

/// The weighted greedoid gadget over `t1,f1,...,tn,fn,1`: any subset of the
/// assignment symbols of size at most `n+1` is feasible, and so is a
/// satisfying assignment together with the indicator `1`. The indicator
/// weighs `(n+1)*2^{|S|^k} - n + 1` against unit symbol weights, so the
/// optimum is `(n+1)*2^{|S|^k} + 1` when satisfiable and `n+1` otherwise.
pub fn sat_to_weighted_greedoid(
    formula: &CnfFormula,
    k: u32,
) -> Result<(SetSystemOracle, WeightVector)> {
    if k < 1 {
        return Err(Error::construction("k must be at least 1"));
    }
    let n = formula.num_vars();
    let ground = assignment_ground(n, ["1".to_string()]);
    let ground_size = ground.size() as u64; // 2n + 1
    let exponent = ground_size
        .checked_pow(k)
        .filter(|&e| e <= MAX_WEIGHT_EXPONENT)
        .ok_or(Error::CapExceeded {
            what: "weighted indicator exponent |S|^k",
            size: usize::MAX,
            cap: MAX_WEIGHT_EXPONENT as usize,
        })?;
    let indicator = 2 * n; // element "1" comes last
    let f = formula.clone();
    let oracle = SetSystemOracle::new(
        ground.clone(),
        format!("weighted satisfiability greedoid, n={n}, k={k}"),
        move |x| {
            if !x.contains(indicator) {
                x.cardinality() <= n + 1
            } else {
                x.cardinality() == n + 1 && in_group_b(x, n, &f)
            }
        },
    );
    let indicator_weight =
        (BigInt::one() << exponent) * (n as i64 + 1) - BigInt::from(n as i64) + 1;
    let mut weights = vec![BigInt::one(); 2 * n];
    weights.push(indicator_weight);
    Ok((oracle, WeightVector::new(weights)))
}

/// The weighted gadget wrapped as an intersection instance with the free
/// matroid (every subset feasible), so the weighted greedoid optimum equals
/// the weighted intersection optimum.
pub fn sat_to_weighted_intersection(
    formula: &CnfFormula,
    k: u32,
) -> Result<(IntersectionInstance, WeightVector)> {
    let (greedoid, weights) = sat_to_weighted_greedoid(formula, k)?;
    let ground = greedoid.ground().clone();
    let matroid = power_set(&ground);
    let instance = IntersectionInstance::new(
        ground,
        matroid,
        greedoid,
        Provenance::Weighted {
            formula: formula.clone(),
            k,
        },
    )?;
    Ok((instance, weights))
}

/// Ground set `t1..tn, 1, d1..d_e` for the parameterized constructions.
fn circuit_ground(n: usize, e: usize, symbol: char) -> GroundSet {
    let mut labels: Vec<String> = (1..=n).map(|i| format!("{symbol}{i}")).collect();
    labels.push("1".to_string());
    labels.extend((1..=e).map(|j| format!("d{j}")));
    GroundSet::new(labels).expect("generated labels are unique")
}

/// The parameterized gadget: over `t1..tn, 1, d1..d_e` the matroid keeps
/// subsets of the symbols and the indicator with at most `k` symbols and
/// size at most `k+1`; the greedoid accepts small symbol sets (group A),
/// weight-`k` satisfying assignments plus the indicator (group B), and
/// symbol sets of size `k+1` (group C). A common set of size `k+1` exists
/// iff the circuit has a weight-`k` satisfying assignment; the target size
/// `k+1` is returned alongside.
pub fn wcs_to_param_intersection(
    circuit: &BoolCircuit,
    k: u32,
) -> Result<(IntersectionInstance, usize)> {
    let n = circuit.num_inputs();
    let k = k as usize;
    if k > n {
        return Err(Error::construction(format!(
            "k = {k} exceeds the circuit's {n} variables"
        )));
    }
    let e = circuit.size();
    let ground = circuit_ground(n, e, 't');
    let one = n;
    let matroid = SetSystemOracle::new(
        ground.clone(),
        format!("parameterized matroid, n={n}, k={k}"),
        move |x| {
            let symbol_card = count_below(x, n);
            let padding = x.cardinality() - symbol_card - usize::from(x.contains(one));
            padding == 0 && x.cardinality() <= k + 1 && symbol_card <= k
        },
    );
    let c = circuit.clone();
    let greedoid = SetSystemOracle::new(
        ground.clone(),
        format!("parameterized greedoid, n={n}, k={k}"),
        move |x| {
            let symbol_card = count_below(x, n);
            let padding = x.cardinality() - symbol_card - usize::from(x.contains(one));
            if padding > 0 {
                return false;
            }
            if x.contains(one) {
                // Group B: indicator plus exactly the true symbols of a
                // weight-k satisfying assignment.
                symbol_card == k && c.eval(&assignment_from_symbols(x, n, true))
            } else {
                symbol_card <= k || symbol_card == k + 1
            }
        },
    );
    let instance = IntersectionInstance::new(
        ground,
        matroid,
        greedoid,
        Provenance::Wcs {
            circuit: circuit.clone(),
            k: k as u32,
        },
    )?;
    Ok((instance, k + 1))
}

/// The dual parameterized gadget over `f1..fn, 1, d1..d_e`: the matroid
/// allows at most `n-k` false symbols; the greedoid stacks padding-only
/// sets (group A'), all padding plus up to `n-k` false symbols (group A),
/// the full padding plus the indicator and the `n-k` false symbols of a
/// weight-`k` satisfying assignment (group B), and the full padding plus
/// `n-k+1` false symbols (group C). A common set of size `|S|-k` exists iff
/// the circuit has a weight-`k` satisfying assignment.
pub fn wcs_to_dual_param_intersection(
    circuit: &BoolCircuit,
    k: u32,
) -> Result<(IntersectionInstance, usize)> {
    let n = circuit.num_inputs();
    let k = k as usize;
    if k > n {
        return Err(Error::construction(format!(
            "k = {k} exceeds the circuit's {n} variables"
        )));
    }
    let e = circuit.size();
    let ground = circuit_ground(n, e, 'f');
    let one = n;
    let matroid = SetSystemOracle::new(
        ground.clone(),
        format!("dual parameterized matroid, n={n}, k={k}"),
        move |x| count_below(x, n) <= n - k,
    );
    let c = circuit.clone();
    let greedoid = SetSystemOracle::new(
        ground.clone(),
        format!("dual parameterized greedoid, n={n}, k={k}"),
        move |x| {
            let symbol_card = count_below(x, n);
            let has_one = x.contains(one);
            let padding = x.cardinality() - symbol_card - usize::from(has_one);
            let all_padding = padding == e;
            if !has_one && symbol_card == 0 {
                return true; // group A': any subset of the padding
            }
            if !has_one && all_padding && (1..=n - k).contains(&symbol_card) {
                return true; // group A
            }
            if has_one && all_padding && symbol_card == n - k {
                // Group B: the false symbols of a weight-k satisfying
                // assignment.
                return c.eval(&assignment_from_symbols(x, n, false));
            }
            // Group C
            !has_one && all_padding && symbol_card == n - k + 1
        },
    );
    let target = ground.size() - k;
    let instance = IntersectionInstance::new(
        ground,
        matroid,
        greedoid,
        Provenance::WcsDual {
            circuit: circuit.clone(),
            k: k as u32,
        },
    )?;
    Ok((instance, target))
}

/// Assignment read off the symbol prefix: variable i is `polarity` when
/// symbol i is present.
fn assignment_from_symbols(mask: &SubsetMask, n: usize, polarity: bool) -> TruthAssignment {
    TruthAssignment::new(
        (0..n)
            .map(|i| if mask.contains(i) { polarity } else { !polarity })
            .collect(),
    )
}
