//! Stock oracle families: partition and uniform matroids, power sets,
//! cardinality bands, and the two tree-based greedoids.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, SubsetMask};
use crate::oracle::SetSystemOracle;
use crate::treematch::{BipartiteGraph, RootedTree};

/// One block of a partition constraint: member indices plus a capacity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionBlock {
    pub members: Vec<usize>,
    pub capacity: usize,
}

/// Disjoint blocks with per-block capacities. Elements outside every block
/// are unconstrained.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionSpec {
    pub blocks: Vec<PartitionBlock>,
}

impl PartitionSpec {
    pub fn new(blocks: Vec<PartitionBlock>) -> Self {
        PartitionSpec { blocks }
    }
}

/// Feasible sets meet every block in at most its capacity.
pub fn partition_matroid(ground: &GroundSet, spec: &PartitionSpec) -> Result<SetSystemOracle> {
    let n = ground.size();
    let mut seen = SubsetMask::empty(n);
    let mut blocks = Vec::with_capacity(spec.blocks.len());
    for block in &spec.blocks {
        let mut mask = SubsetMask::empty(n);
        for &i in &block.members {
            if i >= n {
                return Err(Error::construction(format!(
                    "partition block element {i} is outside the ground set"
                )));
            }
            if seen.contains(i) {
                return Err(Error::construction(format!(
                    "partition blocks overlap at element {i} ({})",
                    ground.label(i)
                )));
            }
            seen.insert(i);
            mask.insert(i);
        }
        blocks.push((mask, block.capacity));
    }
    Ok(SetSystemOracle::new(
        ground.clone(),
        format!("partition matroid with {} blocks", blocks.len()),
        move |m| {
            blocks
                .iter()
                .all(|(block, cap)| m.intersection(block).cardinality() <= *cap)
        },
    ))
}

/// Feasible sets are those of cardinality at most `rank`.
pub fn uniform_matroid(ground: &GroundSet, rank: usize) -> SetSystemOracle {
    SetSystemOracle::new(
        ground.clone(),
        format!("uniform matroid of rank {rank}"),
        move |m| m.cardinality() <= rank,
    )
}

/// Every subset is feasible.
pub fn power_set(ground: &GroundSet) -> SetSystemOracle {
    SetSystemOracle::new(ground.clone(), "power set", |_| true)
}

/// Feasible sets have cardinality in `lo..=hi`. With `lo > 0` this rejects
/// the empty set, which makes it a handy negative fixture.
pub fn cardinality_band(ground: &GroundSet, lo: usize, hi: usize) -> SetSystemOracle {
    SetSystemOracle::new(
        ground.clone(),
        format!("cardinality band {lo}..={hi}"),
        move |m| {
            let c = m.cardinality();
            lo <= c && c <= hi
        },
    )
}

/// Vertex sets that are empty, or contain the root and induce a connected
/// subtree. The empty set is admitted explicitly so the family satisfies
/// the greedoid axioms.
pub fn rooted_subtree_greedoid(tree: &RootedTree) -> SetSystemOracle {
    let ground = GroundSet::new(tree.labels().iter().cloned()).expect("tree labels are unique");
    let parent = tree.parents().to_vec();
    let root = tree.root();
    SetSystemOracle::new(
        ground,
        format!("rooted-subtree greedoid on {} vertices", tree.len()),
        move |w| {
            w.is_empty()
                || (w.contains(root)
                    && w.indices()
                        .all(|v| v == root || w.contains(parent[v].expect("non-root has parent"))))
        },
    )
}

/// Edge sets whose edges start at pairwise-distinct left vertices and whose
/// left-endpoint set contains the root and induces a connected subtree.
/// The empty edge set is feasible. Ground set: one element per edge,
/// labeled `left~right`.
pub fn tree_constrained_edge_greedoid(
    graph: &BipartiteGraph,
    tree: &RootedTree,
) -> Result<SetSystemOracle> {
    let left_to_tree = map_left_to_tree(graph, tree)?;
    let ground = GroundSet::new(
        (0..graph.edges().len()).map(|e| graph.edge_label(e)),
    )?;
    let edge_tree_vertex: Vec<usize> = graph
        .edges()
        .iter()
        .map(|&(l, _)| left_to_tree[l])
        .collect();
    let parent = tree.parents().to_vec();
    let root = tree.root();
    let tree_len = tree.len();
    Ok(SetSystemOracle::new(
        ground,
        format!(
            "tree-constrained edge greedoid on {} edges",
            graph.edges().len()
        ),
        move |m| {
            if m.is_empty() {
                return true;
            }
            let mut covered = SubsetMask::empty(tree_len);
            for e in m.indices() {
                let v = edge_tree_vertex[e];
                if covered.contains(v) {
                    return false;
                }
                covered.insert(v);
            }
            covered.contains(root)
                && covered.indices().all(|v| {
                    v == root || covered.contains(parent[v].expect("non-root has parent"))
                })
        },
    ))
}

/// Maps graph-left indices to tree-vertex indices, requiring the two vertex
/// sets to coincide.
pub(crate) fn map_left_to_tree(graph: &BipartiteGraph, tree: &RootedTree) -> Result<Vec<usize>> {
    if graph.left().len() != tree.len() {
        return Err(Error::construction(format!(
            "tree has {} vertices but the graph's left side has {}",
            tree.len(),
            graph.left().len()
        )));
    }
    graph
        .left()
        .iter()
        .map(|name| {
            tree.index_of(name).ok_or_else(|| {
                Error::construction(format!("left vertex {name:?} is missing from the tree"))
            })
        })
        .collect()
}
