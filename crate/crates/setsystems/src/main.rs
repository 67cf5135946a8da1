//! Command-line front end: axiom checking, gadget construction, solving,
//! satisfiability routes, and tree-constrained matching over the documented
//! file formats.
//!
//! Exit codes: 0 ok, 2 parse/usage error, 3 classification mismatch,
//! 4 cap or budget exceeded, 10 satisfiable, 20 unsatisfiable.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use setsystems::axioms::{check_axioms, classify, AxiomReport, CheckMode};
use setsystems::families::{
    cardinality_band, partition_matroid, power_set, uniform_matroid, PartitionBlock,
    PartitionSpec,
};
use setsystems::ground::GroundSet;
use setsystems::logic::{parse_circuit, parse_dimacs};
use setsystems::oracle::SetSystemOracle;
use setsystems::reductions::{
    deserialize_instance, padded_sat_to_intersection, sat_to_intersection,
    sat_to_weighted_intersection, serialize_instance, wcs_to_dual_param_intersection,
    wcs_to_param_intersection, IntersectionInstance, WeightVector,
};
use setsystems::satcheck::{sat_verdict, SatRoute};
use setsystems::solvers::{
    brute_force_max_intersection, brute_force_max_weight_intersection, greedy_basis,
    greedy_weighted_matroid, matroid_intersection,
};
use setsystems::treematch::{
    tree_constrained_matching_with_budget, tree_matching_as_intersection, BipartiteGraph,
    RootedTree, DEFAULT_SUBTREE_BUDGET,
};
use setsystems::Error;

const EXIT_PARSE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_SAT: u8 = 10;
const EXIT_UNSAT: u8 = 20;

#[derive(Parser)]
#[command(name = "setsystems", version, about = "Matroid/greedoid oracle toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the set-system axioms of an instance descriptor or stock
    /// oracle file and classify the result
    Check {
        file: PathBuf,
        /// Check every subset pair (default; capped domain size)
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        /// Seeded spot check with this mask budget; requires --seed
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for --samples; sampling without a seed is an error
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build a gadget instance file from a DIMACS CNF or circuit file
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        /// Instance descriptor output path
        #[arg(short, long)]
        output: PathBuf,
        /// Padding exponent for the padded construction (>= 1)
        #[arg(long)]
        inv_eps: Option<u32>,
        /// Weight/parameter k for weighted, wcs, and wcs-dual
        #[arg(long)]
        k: Option<u32>,
    },
    /// Solve an instance file for its maximum common set (or weight)
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        method: SolveMethod,
        /// Weights file (`weights v1`); switches brute/greedy to weighted
        /// maximization
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Decide satisfiability of a DIMACS CNF file; exits 10 (SAT) or 20
    /// (UNSAT)
    Sat {
        cnf: PathBuf,
        #[arg(long, value_enum)]
        via: ViaRoute,
    },
    /// Maximum tree-constrained matching on graph and tree files
    Treematch {
        graph: PathBuf,
        tree: PathBuf,
        #[arg(long, value_enum)]
        method: TreeMethod,
        /// Subtree enumeration budget (default 1000000)
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Sat3,
    Padded,
    Weighted,
    Wcs,
    WcsDual,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    Brute,
    Edmonds,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViaRoute {
    Direct,
    Intersection,
    Padded,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeMethod {
    Enum,
    Intersection,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse { .. } | Error::Construction(_) | Error::Infeasible(_) => EXIT_PARSE,
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_BUDGET,
        };
        fail(code, e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Check {
            file,
            exhaustive,
            samples,
            seed,
        } => cmd_check(&file, exhaustive, samples, seed),
        Command::Reduce {
            kind,
            input,
            output,
            inv_eps,
            k,
        } => cmd_reduce(kind, &input, &output, inv_eps, k),
        Command::Solve {
            instance,
            method,
            weights,
        } => cmd_solve(&instance, method, weights.as_deref()),
        Command::Sat { cnf, via } => cmd_sat(&cnf, via),
        Command::Treematch {
            graph,
            tree,
            method,
            budget,
        } => cmd_treematch(&graph, &tree, method, budget),
    }
}

fn check_mode(
    exhaustive: bool,
    samples: Option<usize>,
    seed: Option<u64>,
) -> Result<CheckMode, Failure> {
    match (samples, seed) {
        (Some(samples), Some(seed)) => Ok(CheckMode::Sampled { samples, seed }),
        (Some(_), None) => Err(fail(EXIT_PARSE, "--samples requires an explicit --seed")),
        (None, Some(_)) => Err(fail(EXIT_PARSE, "--seed is only meaningful with --samples")),
        (None, None) => {
            let _ = exhaustive; // exhaustive is the default
            Ok(CheckMode::Exhaustive)
        }
    }
}

fn mode_line(mode: CheckMode) -> String {
    match mode {
        CheckMode::Exhaustive => "exhaustive".to_string(),
        CheckMode::Sampled { samples, seed } => format!("sampled samples={samples} seed={seed}"),
    }
}

fn print_report(prefix: &str, report: &AxiomReport) {
    println!("{prefix}m1: {}", report.m1);
    println!("{prefix}m2: {}", report.m2);
    println!("{prefix}m3: {}", report.m3);
    println!("{prefix}classification: {}", classify(report));
}

/// Stock oracle description accepted by `check`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OracleSpec {
    schema: String,
    oracle: String,
    labels: Vec<String>,
    #[serde(default)]
    blocks: Option<Vec<Vec<String>>>,
    #[serde(default)]
    capacities: Option<Vec<usize>>,
    #[serde(default)]
    rank: Option<usize>,
    #[serde(default)]
    lo: Option<usize>,
    #[serde(default)]
    hi: Option<usize>,
    declare: String,
}

fn build_stock_oracle(spec: &OracleSpec) -> Result<SetSystemOracle, Failure> {
    if spec.schema != "v1" {
        return Err(fail(
            EXIT_PARSE,
            format!("unsupported oracle schema {:?}", spec.schema),
        ));
    }
    let ground = GroundSet::new(spec.labels.iter().cloned())?;
    match spec.oracle.as_str() {
        "power" => Ok(power_set(&ground)),
        "uniform" => {
            let rank = spec
                .rank
                .ok_or_else(|| fail(EXIT_PARSE, "uniform oracle requires \"rank\""))?;
            Ok(uniform_matroid(&ground, rank))
        }
        "band" => {
            let lo = spec
                .lo
                .ok_or_else(|| fail(EXIT_PARSE, "band oracle requires \"lo\""))?;
            let hi = spec
                .hi
                .ok_or_else(|| fail(EXIT_PARSE, "band oracle requires \"hi\""))?;
            Ok(cardinality_band(&ground, lo, hi))
        }
        "partition" => {
            let blocks = spec
                .blocks
                .as_ref()
                .ok_or_else(|| fail(EXIT_PARSE, "partition oracle requires \"blocks\""))?;
            let capacities = spec
                .capacities
                .as_ref()
                .ok_or_else(|| fail(EXIT_PARSE, "partition oracle requires \"capacities\""))?;
            if blocks.len() != capacities.len() {
                return Err(fail(
                    EXIT_PARSE,
                    "\"blocks\" and \"capacities\" must have equal length",
                ));
            }
            let mut resolved = Vec::new();
            for (block, &capacity) in blocks.iter().zip(capacities) {
                let mut members = Vec::new();
                for label in block {
                    let index = ground.index_of(label).ok_or_else(|| {
                        fail(EXIT_PARSE, format!("unknown block label {label:?}"))
                    })?;
                    members.push(index);
                }
                resolved.push(PartitionBlock { members, capacity });
            }
            Ok(partition_matroid(&ground, &PartitionSpec::new(resolved))?)
        }
        other => Err(fail(EXIT_PARSE, format!("unknown oracle kind {other:?}"))),
    }
}

fn declared_matches(declare: &str, report: &AxiomReport) -> Result<bool, Failure> {
    match declare {
        // A matroid also satisfies the greedoid axioms, so a "greedoid"
        // declaration accepts both classifications.
        "matroid" => Ok(report.is_matroid()),
        "greedoid" => Ok(report.is_greedoid()),
        "neither" => Ok(!report.is_greedoid()),
        other => Err(fail(
            EXIT_PARSE,
            format!("unknown declared kind {other:?}"),
        )),
    }
}

fn cmd_check(
    path: &Path,
    exhaustive: bool,
    samples: Option<usize>,
    seed: Option<u64>,
) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let mode = check_mode(exhaustive, samples, seed)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;

    if value.get("kind").is_some() {
        // Instance descriptor: the matroid side must satisfy all three
        // axioms, the greedoid side M1 and M3.
        let instance = deserialize_instance(&text)?;
        println!("schema: v1");
        println!("kind: {}", instance.provenance().kind());
        println!("ground-size: {}", instance.ground().size());
        println!("mode: {}", mode_line(mode));
        let matroid_report = check_axioms(instance.matroid(), mode)?;
        print_report("matroid-", &matroid_report);
        let matroid_ok = matroid_report.is_matroid();
        println!("matroid: {}", if matroid_ok { "OK" } else { "MISMATCH" });
        let greedoid_report = check_axioms(instance.greedoid(), mode)?;
        print_report("greedoid-", &greedoid_report);
        let greedoid_ok = greedoid_report.is_greedoid();
        println!("greedoid: {}", if greedoid_ok { "OK" } else { "MISMATCH" });
        Ok(if matroid_ok && greedoid_ok {
            0
        } else {
            EXIT_MISMATCH
        })
    } else if value.get("oracle").is_some() {
        let spec: OracleSpec = serde_json::from_str(&text)
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
        let oracle = build_stock_oracle(&spec)?;
        println!("schema: v1");
        println!("oracle: {}", spec.oracle);
        println!("ground-size: {}", oracle.ground().size());
        println!("mode: {}", mode_line(mode));
        let report = check_axioms(&oracle, mode)?;
        print_report("", &report);
        println!("declared: {}", spec.declare);
        let ok = declared_matches(&spec.declare, &report)?;
        println!("verdict: {}", if ok { "OK" } else { "MISMATCH" });
        Ok(if ok { 0 } else { EXIT_MISMATCH })
    } else {
        Err(fail(
            EXIT_PARSE,
            format!(
                "{}: neither an instance descriptor (\"kind\") nor an oracle spec (\"oracle\")",
                path.display()
            ),
        ))
    }
}

fn reject_param(value: Option<u32>, name: &str, kind: &str) -> Result<(), Failure> {
    if value.is_some() {
        Err(fail(
            EXIT_PARSE,
            format!("--{name} is not valid for kind {kind}"),
        ))
    } else {
        Ok(())
    }
}

fn require_param(value: Option<u32>, name: &str, kind: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| fail(EXIT_PARSE, format!("kind {kind} requires --{name}")))
}

fn cmd_reduce(
    kind: ReduceKind,
    input: &Path,
    output: &Path,
    inv_eps: Option<u32>,
    k: Option<u32>,
) -> Result<u8, Failure> {
    let text = read_file(input)?;
    let mut weights_output: Option<(PathBuf, String)> = None;
    let instance: IntersectionInstance = match kind {
        ReduceKind::Sat3 => {
            reject_param(inv_eps, "inv-eps", "sat3")?;
            reject_param(k, "k", "sat3")?;
            sat_to_intersection(&parse_dimacs(&text)?)
        }
        ReduceKind::Padded => {
            reject_param(k, "k", "padded")?;
            let inv_eps = require_param(inv_eps, "inv-eps", "padded")?;
            padded_sat_to_intersection(&parse_dimacs(&text)?, inv_eps)?
        }
        ReduceKind::Weighted => {
            reject_param(inv_eps, "inv-eps", "weighted")?;
            let k = require_param(k, "k", "weighted")?;
            let (instance, weights) = sat_to_weighted_intersection(&parse_dimacs(&text)?, k)?;
            let path = PathBuf::from(format!("{}.weights", output.display()));
            weights_output = Some((path, weights.to_text(instance.ground())));
            instance
        }
        ReduceKind::Wcs => {
            reject_param(inv_eps, "inv-eps", "wcs")?;
            let k = require_param(k, "k", "wcs")?;
            wcs_to_param_intersection(&parse_circuit(&text)?, k)?.0
        }
        ReduceKind::WcsDual => {
            reject_param(inv_eps, "inv-eps", "wcs-dual")?;
            let k = require_param(k, "k", "wcs-dual")?;
            wcs_to_dual_param_intersection(&parse_circuit(&text)?, k)?.0
        }
    };
    let descriptor = serialize_instance(&instance);
    std::fs::write(output, descriptor)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", output.display())))?;
    println!("kind: {}", instance.provenance().kind());
    println!("ground-size: {}", instance.ground().size());
    println!("output: {}", output.display());
    if let Some((path, text)) = weights_output {
        std::fs::write(&path, text)
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
        println!("weights-output: {}", path.display());
    }
    Ok(0)
}

fn sorted_labels(ground: &GroundSet, mask: &setsystems::SubsetMask) -> String {
    let mut labels = ground.labels_of_mask(mask);
    labels.sort_unstable();
    labels
        .iter()
        .map(|l| format!(" {l}"))
        .collect::<Vec<_>>()
        .join("")
}

fn cmd_solve(
    instance_path: &Path,
    method: SolveMethod,
    weights_path: Option<&Path>,
) -> Result<u8, Failure> {
    let instance = deserialize_instance(&read_file(instance_path)?)?;
    let weights = match weights_path {
        Some(path) => Some(WeightVector::parse(&read_file(path)?, instance.ground())?),
        None => None,
    };
    match (method, weights) {
        (SolveMethod::Brute, None) => {
            let opt = brute_force_max_intersection(&instance)?;
            println!("method: brute");
            println!("size: {}", opt.size);
            println!("witness:{}", sorted_labels(instance.ground(), &opt.witness));
            println!("matroid-calls: {}", opt.matroid_calls);
            println!("greedoid-calls: {}", opt.greedoid_calls);
        }
        (SolveMethod::Brute, Some(w)) => {
            let opt = brute_force_max_weight_intersection(&instance, &w)?;
            println!("method: brute");
            println!("weight: {}", opt.weight);
            println!("witness:{}", sorted_labels(instance.ground(), &opt.witness));
            println!("oracle-calls: {}", opt.oracle_calls);
        }
        (SolveMethod::Edmonds, None) => {
            let opt = matroid_intersection(instance.matroid(), instance.greedoid())?;
            println!("method: edmonds");
            println!("size: {}", opt.size);
            println!("witness:{}", sorted_labels(instance.ground(), &opt.witness));
            println!("matroid-calls: {}", opt.matroid_calls);
            println!("greedoid-calls: {}", opt.greedoid_calls);
        }
        (SolveMethod::Edmonds, Some(_)) => {
            return Err(fail(
                EXIT_PARSE,
                "edmonds solves unweighted intersections; drop --weights",
            ));
        }
        (SolveMethod::Greedy, None) => {
            let before = instance.greedoid().calls();
            let basis = greedy_basis(instance.greedoid());
            println!("method: greedy");
            println!("size: {}", basis.cardinality());
            println!("witness:{}", sorted_labels(instance.ground(), &basis));
            println!("greedoid-calls: {}", instance.greedoid().calls() - before);
        }
        (SolveMethod::Greedy, Some(w)) => {
            let before = instance.matroid().calls();
            let basis = greedy_weighted_matroid(instance.matroid(), &w);
            println!("method: greedy");
            println!("weight: {}", w.sum_over(&basis));
            println!("witness:{}", sorted_labels(instance.ground(), &basis));
            println!("matroid-calls: {}", instance.matroid().calls() - before);
        }
    }
    Ok(0)
}

fn cmd_sat(cnf_path: &Path, via: ViaRoute) -> Result<u8, Failure> {
    let formula = parse_dimacs(&read_file(cnf_path)?)?;
    let route = match via {
        ViaRoute::Direct => SatRoute::Direct,
        ViaRoute::Intersection => SatRoute::Intersection,
        ViaRoute::Padded => SatRoute::Padded,
        ViaRoute::Weighted => SatRoute::Weighted,
    };
    let satisfiable = sat_verdict(&formula, route)?;
    println!("via: {}", route.name());
    println!("n: {}", formula.num_vars());
    println!("verdict: {}", if satisfiable { "SAT" } else { "UNSAT" });
    Ok(if satisfiable { EXIT_SAT } else { EXIT_UNSAT })
}

fn cmd_treematch(
    graph_path: &Path,
    tree_path: &Path,
    method: TreeMethod,
    budget: Option<usize>,
) -> Result<u8, Failure> {
    let graph = BipartiteGraph::parse(&read_file(graph_path)?)?;
    let tree = RootedTree::parse(&read_file(tree_path)?)?;
    match method {
        TreeMethod::Enum => {
            let outcome = tree_constrained_matching_with_budget(
                &graph,
                &tree,
                budget.unwrap_or(DEFAULT_SUBTREE_BUDGET),
            )?;
            let mut edges: Vec<String> = outcome
                .matching
                .edges
                .indices()
                .map(|e| graph.edge_label(e))
                .collect();
            edges.sort_unstable();
            let mut matched: Vec<&str> = outcome
                .matched_left
                .indices()
                .map(|v| tree.label(v))
                .collect();
            matched.sort_unstable();
            println!("method: enum");
            println!("size: {}", outcome.matching.size());
            println!(
                "edges:{}",
                edges.iter().map(|e| format!(" {e}")).collect::<String>()
            );
            println!(
                "matched-left:{}",
                matched.iter().map(|v| format!(" {v}")).collect::<String>()
            );
        }
        TreeMethod::Intersection => {
            let instance = tree_matching_as_intersection(&graph, &tree)?;
            let opt = brute_force_max_intersection(&instance)?;
            let mut edges: Vec<String> = opt
                .witness
                .indices()
                .map(|e| graph.edge_label(e))
                .collect();
            edges.sort_unstable();
            let mut matched: Vec<&str> = opt
                .witness
                .indices()
                .map(|e| graph.left()[graph.edges()[e].0].as_str())
                .collect();
            matched.sort_unstable();
            println!("method: intersection");
            println!("size: {}", opt.size);
            println!(
                "edges:{}",
                edges.iter().map(|e| format!(" {e}")).collect::<String>()
            );
            println!(
                "matched-left:{}",
                matched.iter().map(|v| format!(" {v}")).collect::<String>()
            );
        }
    }
    Ok(0)
}
