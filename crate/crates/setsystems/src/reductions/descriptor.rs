//! The versioned instance-descriptor schema: a JSON document carrying the
//! reduction kind, the source formula/circuit/graph text verbatim, and the
//! construction parameters. Instances serialize as recipes, not as
//! extensional set lists, so deserialization rebuilds bit-identical
//! oracles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{parse_circuit, parse_dimacs};
use crate::reductions::{
    padded_sat_to_intersection, sat_to_intersection, sat_to_weighted_intersection,
    wcs_to_dual_param_intersection, wcs_to_param_intersection, IntersectionInstance, Provenance,
};
use crate::treematch::{tree_matching_as_intersection, BipartiteGraph, RootedTree};

const SCHEMA: &str = "v1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    schema: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cnf: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    circuit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tree: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inv_eps: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
}

/// Serializes an instance as its provenance descriptor. Output bytes are
/// deterministic for a fixed instance.
pub fn serialize_instance(instance: &IntersectionInstance) -> String {
    let mut raw = RawDescriptor {
        schema: SCHEMA.to_string(),
        kind: instance.provenance().kind().to_string(),
        cnf: None,
        circuit: None,
        graph: None,
        tree: None,
        inv_eps: None,
        k: None,
    };
    match instance.provenance() {
        Provenance::Sat3 { formula } => {
            raw.cnf = Some(formula.to_dimacs());
        }
        Provenance::Padded { formula, inv_eps } => {
            raw.cnf = Some(formula.to_dimacs());
            raw.inv_eps = Some(*inv_eps);
        }
        Provenance::Weighted { formula, k } => {
            raw.cnf = Some(formula.to_dimacs());
            raw.k = Some(*k);
        }
        Provenance::Wcs { circuit, k } => {
            raw.circuit = Some(circuit.to_text());
            raw.k = Some(*k);
        }
        Provenance::WcsDual { circuit, k } => {
            raw.circuit = Some(circuit.to_text());
            raw.k = Some(*k);
        }
        Provenance::TreeMatch { graph, tree } => {
            raw.graph = Some(graph.to_text());
            raw.tree = Some(tree.to_text());
        }
    }
    let mut text = serde_json::to_string_pretty(&raw).expect("descriptor serializes");
    text.push('\n');
    text
}

/// Rebuilds an instance from descriptor text. The reconstructed oracles
/// answer identically to the originals on every mask.
pub fn deserialize_instance(text: &str) -> Result<IntersectionInstance> {
    let raw: RawDescriptor = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line().max(1),
        message: format!("descriptor: {e}"),
    })?;
    if raw.schema != SCHEMA {
        return Err(Error::parse(
            1,
            format!("unsupported descriptor schema {:?}", raw.schema),
        ));
    }
    let need = |field: Option<&String>, name: &str| -> Result<String> {
        field.cloned().ok_or_else(|| {
            Error::parse(1, format!("kind {:?} requires field {name:?}", raw.kind))
        })
    };
    let need_num = |field: Option<u32>, name: &str| -> Result<u32> {
        field.ok_or_else(|| {
            Error::parse(1, format!("kind {:?} requires field {name:?}", raw.kind))
        })
    };
    match raw.kind.as_str() {
        "sat3" => {
            let formula = parse_dimacs(&need(raw.cnf.as_ref(), "cnf")?)?;
            Ok(sat_to_intersection(&formula))
        }
        "padded" => {
            let formula = parse_dimacs(&need(raw.cnf.as_ref(), "cnf")?)?;
            padded_sat_to_intersection(&formula, need_num(raw.inv_eps, "inv_eps")?)
        }
        "weighted" => {
            let formula = parse_dimacs(&need(raw.cnf.as_ref(), "cnf")?)?;
            Ok(sat_to_weighted_intersection(&formula, need_num(raw.k, "k")?)?.0)
        }
        "wcs" => {
            let circuit = parse_circuit(&need(raw.circuit.as_ref(), "circuit")?)?;
            Ok(wcs_to_param_intersection(&circuit, need_num(raw.k, "k")?)?.0)
        }
        "wcs-dual" => {
            let circuit = parse_circuit(&need(raw.circuit.as_ref(), "circuit")?)?;
            Ok(wcs_to_dual_param_intersection(&circuit, need_num(raw.k, "k")?)?.0)
        }
        "treematch" => {
            let graph = BipartiteGraph::parse(&need(raw.graph.as_ref(), "graph")?)?;
            let tree = RootedTree::parse(&need(raw.tree.as_ref(), "tree")?)?;
            tree_matching_as_intersection(&graph, &tree)
        }
        other => Err(Error::parse(1, format!("unknown reduction kind {other:?}"))),
    }
}
