//! Tree-constrained bipartite matching: find a maximum matching whose
//! matched left vertices contain the root of a given tree and induce a
//! connected subtree of it.
//!
//! The enumeration algorithm walks the root-containing connected subtrees
//! `W` in size order, computes a maximum matching restricted to edges
//! leaving `W`, and keeps the largest matching that saturates its `W`. The
//! same problem is also encoded as a matroid-greedoid intersection for
//! cross-checking.

use crate::error::{Error, Result};
use crate::families::{
    map_left_to_tree, partition_matroid, tree_constrained_edge_greedoid, PartitionBlock,
    PartitionSpec,
};
use crate::ground::SubsetMask;
use crate::reductions::{IntersectionInstance, Provenance};

/// Subtree enumeration budget used when none is given explicitly.
pub const DEFAULT_SUBTREE_BUDGET: usize = 1_000_000;

/// A bipartite graph with disjoint left/right vertex namespaces and no
/// duplicate edges. Edges are index pairs into the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        left: Vec<String>,
        right: Vec<String>,
        edges: &[(&str, &str)],
    ) -> Result<Self> {
        let mut names = std::collections::HashSet::new();
        for name in left.iter().chain(right.iter()) {
            if !names.insert(name.clone()) {
                return Err(Error::construction(format!(
                    "vertex name {name:?} is not unique across the two sides"
                )));
            }
        }
        let index = |side: &[String], name: &str| -> Result<usize> {
            side.iter().position(|v| v == name).ok_or_else(|| {
                Error::construction(format!("edge endpoint {name:?} is not a declared vertex"))
            })
        };
        let mut seen = std::collections::HashSet::new();
        let mut resolved = Vec::with_capacity(edges.len());
        for &(l, r) in edges {
            let e = (index(&left, l)?, index(&right, r)?);
            if !seen.insert(e) {
                return Err(Error::construction(format!("duplicate edge {l:?} -> {r:?}")));
            }
            resolved.push(e);
        }
        Ok(BipartiteGraph {
            left,
            right,
            edges: resolved,
        })
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_label(&self, e: usize) -> String {
        let (l, r) = self.edges[e];
        format!("{}~{}", self.left[l], self.right[r])
    }

    /// Parses the `graph v1` text schema: a header line, one `left` and one
    /// `right` vertex list, then `edge l r` lines. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut left: Option<Vec<String>> = None;
        let mut right: Option<Vec<String>> = None;
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut saw_header = false;
        let mut last_line = 1;
        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            last_line = lineno;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !saw_header {
                if line != "graph v1" {
                    return Err(Error::parse(lineno, "expected `graph v1` header"));
                }
                saw_header = true;
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("left") => {
                    if left.is_some() {
                        return Err(Error::parse(lineno, "duplicate `left` line"));
                    }
                    left = Some(tokens.map(String::from).collect());
                }
                Some("right") => {
                    if right.is_some() {
                        return Err(Error::parse(lineno, "duplicate `right` line"));
                    }
                    right = Some(tokens.map(String::from).collect());
                }
                Some("edge") => {
                    let l = tokens
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "edge needs two endpoints"))?;
                    let r = tokens
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "edge needs two endpoints"))?;
                    if tokens.next().is_some() {
                        return Err(Error::parse(lineno, "edge takes exactly two endpoints"));
                    }
                    edges.push((l.to_string(), r.to_string()));
                }
                Some(other) => {
                    return Err(Error::parse(lineno, format!("unknown directive {other:?}")))
                }
                None => unreachable!("blank lines were skipped"),
            }
        }
        if !saw_header {
            return Err(Error::parse(last_line, "expected `graph v1` header"));
        }
        let left = left.ok_or_else(|| Error::parse(last_line, "missing `left` line"))?;
        let right = right.ok_or_else(|| Error::parse(last_line, "missing `right` line"))?;
        let edge_refs: Vec<(&str, &str)> =
            edges.iter().map(|(l, r)| (l.as_str(), r.as_str())).collect();
        BipartiteGraph::new(left, right, &edge_refs)
    }

    /// Prints the `graph v1` schema, preserving vertex and edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::from("graph v1\n");
        out.push_str(&format!("left {}\n", self.left.join(" ")));
        out.push_str(&format!("right {}\n", self.right.join(" ")));
        for &(l, r) in &self.edges {
            out.push_str(&format!("edge {} {}\n", self.left[l], self.right[r]));
        }
        out
    }
}

/// A rooted tree stored as parent links. Exactly one vertex (the root) has
/// no parent, and parent links are acyclic and spanning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    labels: Vec<String>,
    parent: Vec<Option<usize>>,
    root: usize,
}

impl RootedTree {
    /// Builds a tree from a vertex order, the root label, and
    /// (child, parent) label pairs covering every non-root vertex.
    pub fn new(labels: Vec<String>, root: &str, parents: &[(&str, &str)]) -> Result<Self> {
        let index = |name: &str| -> Result<usize> {
            labels.iter().position(|v| v == name).ok_or_else(|| {
                Error::construction(format!("{name:?} is not a declared tree vertex"))
            })
        };
        {
            let mut names = std::collections::HashSet::new();
            for name in &labels {
                if !names.insert(name) {
                    return Err(Error::construction(format!(
                        "duplicate tree vertex {name:?}"
                    )));
                }
            }
        }
        let root = index(root)?;
        let mut parent = vec![None; labels.len()];
        for &(child, par) in parents {
            let c = index(child)?;
            let p = index(par)?;
            if c == root {
                return Err(Error::construction("the root cannot have a parent"));
            }
            if parent[c].is_some() {
                return Err(Error::construction(format!(
                    "vertex {child:?} has two parents"
                )));
            }
            parent[c] = Some(p);
        }
        for (v, p) in parent.iter().enumerate() {
            if v != root && p.is_none() {
                return Err(Error::construction(format!(
                    "vertex {:?} has no parent and is not the root",
                    labels[v]
                )));
            }
        }
        // Acyclicity: every vertex must reach the root within n steps.
        for start in 0..labels.len() {
            let mut v = start;
            let mut steps = 0;
            while v != root {
                v = parent[v].expect("checked above");
                steps += 1;
                if steps > labels.len() {
                    return Err(Error::construction(format!(
                        "parent links cycle at {:?}",
                        labels[start]
                    )));
                }
            }
        }
        Ok(RootedTree {
            labels,
            parent,
            root,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|v| v == label)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| self.parent[c] == Some(v))
            .collect()
    }

    /// Parses the `tree v1` text schema: a header, an optional `vertices`
    /// order line, one `root` line, and `parent child parent` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut root: Option<String> = None;
        let mut parents: Vec<(String, String)> = Vec::new();
        let mut saw_header = false;
        let mut last_line = 1;
        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            last_line = lineno;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !saw_header {
                if line != "tree v1" {
                    return Err(Error::parse(lineno, "expected `tree v1` header"));
                }
                saw_header = true;
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("vertices") => {
                    if vertices.is_some() {
                        return Err(Error::parse(lineno, "duplicate `vertices` line"));
                    }
                    vertices = Some(tokens.map(String::from).collect());
                }
                Some("root") => {
                    if root.is_some() {
                        return Err(Error::parse(lineno, "duplicate `root` line"));
                    }
                    root = Some(
                        tokens
                            .next()
                            .ok_or_else(|| Error::parse(lineno, "root needs a vertex"))?
                            .to_string(),
                    );
                }
                Some("parent") => {
                    let c = tokens
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "parent needs child and parent"))?;
                    let p = tokens
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "parent needs child and parent"))?;
                    parents.push((c.to_string(), p.to_string()));
                }
                Some(other) => {
                    return Err(Error::parse(lineno, format!("unknown directive {other:?}")))
                }
                None => unreachable!("blank lines were skipped"),
            }
        }
        if !saw_header {
            return Err(Error::parse(last_line, "expected `tree v1` header"));
        }
        let root = root.ok_or_else(|| Error::parse(last_line, "missing `root` line"))?;
        let labels = vertices.unwrap_or_else(|| {
            // No explicit order: vertices in order of first appearance.
            let mut seen = std::collections::HashSet::new();
            let mut order = Vec::new();
            let mut push = |name: &String| {
                if seen.insert(name.clone()) {
                    order.push(name.clone());
                }
            };
            push(&root);
            for (c, p) in &parents {
                push(c);
                push(p);
            }
            order
        });
        let parent_refs: Vec<(&str, &str)> = parents
            .iter()
            .map(|(c, p)| (c.as_str(), p.as_str()))
            .collect();
        RootedTree::new(labels, &root, &parent_refs)
            .map_err(|e| Error::parse(last_line, e.to_string()))
    }

    /// Prints the `tree v1` schema, preserving vertex order.
    pub fn to_text(&self) -> String {
        let mut out = String::from("tree v1\n");
        out.push_str(&format!("vertices {}\n", self.labels.join(" ")));
        out.push_str(&format!("root {}\n", self.labels[self.root]));
        for v in 0..self.len() {
            if let Some(p) = self.parent[v] {
                out.push_str(&format!("parent {} {}\n", self.labels[v], self.labels[p]));
            }
        }
        out
    }
}

/// A set of edges with pairwise-distinct left and right endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: SubsetMask,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.cardinality()
    }

    /// Validates the matching invariants against its graph.
    pub fn is_valid(&self, graph: &BipartiteGraph) -> bool {
        let mut left_seen = vec![false; graph.left().len()];
        let mut right_seen = vec![false; graph.right().len()];
        for e in self.edges.indices() {
            let (l, r) = graph.edges()[e];
            if left_seen[l] || right_seen[r] {
                return false;
            }
            left_seen[l] = true;
            right_seen[r] = true;
        }
        true
    }
}

/// Streams the vertex sets of connected subtrees containing the root,
/// smallest first and lexicographic within each size, each exactly once.
///
/// Levels are grown one vertex at a time; a set is emitted only from its
/// canonical parent (the set minus its largest removable leaf), so no
/// deduplication table is needed and memory stays proportional to one
/// level of the stream.
pub fn enumerate_root_subtrees(tree: &RootedTree) -> RootSubtreeIter {
    let n = tree.len();
    let mut first = SubsetMask::empty(n);
    first.insert(tree.root());
    RootSubtreeIter {
        parent: tree.parents().to_vec(),
        children: (0..n).map(|v| tree.children(v)).collect(),
        root: tree.root(),
        level: vec![first],
        next_index: 0,
    }
}

pub struct RootSubtreeIter {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
    level: Vec<SubsetMask>,
    next_index: usize,
}

impl RootSubtreeIter {
    /// Leaves of the induced subtree, root excluded.
    fn removable(&self, w: &SubsetMask) -> Vec<usize> {
        w.indices()
            .filter(|&v| v != self.root && self.children[v].iter().all(|&c| !w.contains(c)))
            .collect()
    }

    fn advance_level(&mut self) {
        let mut next = Vec::new();
        for w in &self.level {
            for v in 0..self.parent.len() {
                if w.contains(v) {
                    continue;
                }
                let attaches = match self.parent[v] {
                    Some(p) => w.contains(p),
                    None => false,
                };
                if !attaches {
                    continue;
                }
                let grown = w.with(v);
                // Canonical-parent rule: accept only if v is the largest
                // removable leaf of the grown set.
                let largest = self
                    .removable(&grown)
                    .into_iter()
                    .max()
                    .expect("grown set has a removable leaf");
                if largest == v {
                    next.push(grown);
                }
            }
        }
        next.sort();
        self.level = next;
        self.next_index = 0;
    }
}

impl Iterator for RootSubtreeIter {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        if self.next_index >= self.level.len() {
            if self.level.is_empty() {
                return None;
            }
            self.advance_level();
            if self.level.is_empty() {
                return None;
            }
        }
        let item = self.level[self.next_index].clone();
        self.next_index += 1;
        Some(item)
    }
}

/// Maximum bipartite matching by augmenting paths, optionally restricted to
/// edges whose left endpoint lies in `allowed_left`.
pub fn bipartite_max_matching(
    graph: &BipartiteGraph,
    allowed_left: Option<&SubsetMask>,
) -> Matching {
    let nl = graph.left().len();
    let nr = graph.right().len();
    if let Some(mask) = allowed_left {
        assert_eq!(mask.universe_size(), nl, "allowed_left is over the left side");
    }
    // adjacency as edge indices, kept in input order for determinism
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nl];
    for (e, &(l, _)) in graph.edges().iter().enumerate() {
        adj[l].push(e);
    }

    // match_right[r] = edge index currently matching r
    let mut match_right: Vec<Option<usize>> = vec![None; nr];
    let mut match_left: Vec<Option<usize>> = vec![None; nl];

    fn augment(
        l: usize,
        graph: &BipartiteGraph,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
        match_left: &mut [Option<usize>],
    ) -> bool {
        for &e in &adj[l] {
            let (_, r) = graph.edges()[e];
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match match_right[r] {
                None => true,
                Some(old_edge) => {
                    let (old_l, _) = graph.edges()[old_edge];
                    augment(old_l, graph, adj, seen, match_right, match_left)
                }
            };
            if free {
                match_right[r] = Some(e);
                match_left[l] = Some(e);
                return true;
            }
        }
        false
    }

    for l in 0..nl {
        if let Some(mask) = allowed_left {
            if !mask.contains(l) {
                continue;
            }
        }
        let mut seen = vec![false; nr];
        augment(l, graph, &adj, &mut seen, &mut match_right, &mut match_left);
    }

    let mut edges = SubsetMask::empty(graph.edges().len());
    for e in match_right.into_iter().flatten() {
        edges.insert(e);
    }
    Matching { edges }
}

/// Result of the enumeration algorithm: the matching plus the left vertex
/// set it saturates (empty when no subtree could be fully matched).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeMatchOutcome {
    pub matching: Matching,
    /// Mask over the tree's vertices.
    pub matched_left: SubsetMask,
    /// Number of subtrees examined.
    pub subtrees_examined: usize,
}

/// Runs the enumeration algorithm with the default subtree budget.
pub fn tree_constrained_matching(
    graph: &BipartiteGraph,
    tree: &RootedTree,
) -> Result<TreeMatchOutcome> {
    tree_constrained_matching_with_budget(graph, tree, DEFAULT_SUBTREE_BUDGET)
}

/// For each root-containing subtree `W` (size order), computes a maximum
/// matching on edges leaving `W` and keeps the largest one that matches all
/// of `W`. Errors out when more than `budget` subtrees would be examined.
pub fn tree_constrained_matching_with_budget(
    graph: &BipartiteGraph,
    tree: &RootedTree,
    budget: usize,
) -> Result<TreeMatchOutcome> {
    let left_to_tree = map_left_to_tree(graph, tree)?;
    let mut tree_to_left = vec![0usize; tree.len()];
    for (l, &t) in left_to_tree.iter().enumerate() {
        tree_to_left[t] = l;
    }

    let mut best: Option<(Matching, SubsetMask)> = None;
    let mut examined = 0usize;
    for w in enumerate_root_subtrees(tree) {
        examined += 1;
        if examined > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let mut allowed = SubsetMask::empty(graph.left().len());
        for v in w.indices() {
            allowed.insert(tree_to_left[v]);
        }
        let matching = bipartite_max_matching(graph, Some(&allowed));
        // "Matches W entirely": the matching saturates every vertex of W.
        if matching.size() != w.cardinality() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((current, _)) => matching.size() > current.size(),
        };
        if better {
            best = Some((matching, w));
        }
    }

    let (matching, matched_left) = best.unwrap_or_else(|| {
        (
            Matching {
                edges: SubsetMask::empty(graph.edges().len()),
            },
            SubsetMask::empty(tree.len()),
        )
    });
    Ok(TreeMatchOutcome {
        matching,
        matched_left,
        subtrees_examined: examined,
    })
}

/// Encodes the problem as a matroid-greedoid intersection over the edge
/// set: a partition matroid capping each right endpoint at one edge, and
/// the tree-constrained edge greedoid.
pub fn tree_matching_as_intersection(
    graph: &BipartiteGraph,
    tree: &RootedTree,
) -> Result<IntersectionInstance> {
    let greedoid = tree_constrained_edge_greedoid(graph, tree)?;
    let ground = greedoid.ground().clone();
    let mut blocks: Vec<PartitionBlock> = Vec::new();
    for r in 0..graph.right().len() {
        let members: Vec<usize> = graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(_, er))| er == r)
            .map(|(e, _)| e)
            .collect();
        if !members.is_empty() {
            blocks.push(PartitionBlock {
                members,
                capacity: 1,
            });
        }
    }
    let matroid = partition_matroid(&ground, &PartitionSpec::new(blocks))?;
    IntersectionInstance::new(
        ground,
        matroid,
        greedoid,
        Provenance::TreeMatch {
            graph: graph.clone(),
            tree: tree.clone(),
        },
    )
}
