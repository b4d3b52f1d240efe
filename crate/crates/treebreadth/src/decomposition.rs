//! Tree and path decompositions: validation, breadth and length, reduction to
//! star-decompositions and the JSON exchange format.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::sets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Tree,
    Path,
}

/// Bags over the vertices of a host graph, arranged on a tree (or a path).
/// Bags are kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub shape: Shape,
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

/// First violated axiom found by [`Decomposition::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoBags,
    VertexOutOfRange { node: usize, vertex: usize },
    BadSkeletonEdge(usize, usize),
    NotATree,
    NotAPath,
    MissingVertex(usize),
    MissingEdge(usize, usize),
    DisconnectedOccurrence(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoBags => write!(f, "decomposition has no bags"),
            Violation::VertexOutOfRange { node, vertex } => {
                write!(f, "bag {} holds vertex {} which is not in the graph", node, vertex)
            }
            Violation::BadSkeletonEdge(a, b) => write!(f, "skeleton edge [{}, {}] is invalid", a, b),
            Violation::NotATree => write!(f, "skeleton is not a tree"),
            Violation::NotAPath => write!(f, "skeleton is not a path"),
            Violation::MissingVertex(v) => write!(f, "vertex {} is in no bag", v),
            Violation::MissingEdge(u, v) => write!(f, "edge {{{}, {}}} is in no bag", u, v),
            Violation::DisconnectedOccurrence(v) => {
                write!(f, "bags containing vertex {} do not induce a subtree", v)
            }
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::InvalidDecomposition(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub breadth: u32,
    pub length: u32,
    pub is_star: bool,
    /// Per bag, the smallest vertex of the graph realising the bag radius.
    pub centers: Vec<usize>,
    /// Per bag, the smallest vertex of the bag dominating it, if any.
    pub star_centers: Vec<Option<usize>>,
}

impl Decomposition {
    pub fn new(shape: Shape) -> Self {
        Decomposition { shape, bags: Vec::new(), edges: Vec::new() }
    }

    pub fn single_bag(bag: Vec<usize>) -> Self {
        let mut d = Decomposition::new(Shape::Tree);
        d.add_bag(bag);
        d
    }

    /// Path decomposition with the given bags in order.
    pub fn path(bags: Vec<Vec<usize>>) -> Self {
        let mut d = Decomposition::new(Shape::Path);
        for (i, b) in bags.into_iter().enumerate() {
            d.add_bag(b);
            if i > 0 {
                d.add_edge(i - 1, i);
            }
        }
        d
    }

    pub fn add_bag(&mut self, bag: Vec<usize>) -> usize {
        self.bags.push(sets::sorted(bag));
        self.bags.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.edges.push((a.min(b), a.max(b)));
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn node_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn nodes_containing(&self, v: usize) -> Vec<usize> {
        (0..self.bags.len()).filter(|&i| sets::contains(&self.bags[i], v)).collect()
    }

    /// Some node whose bag contains all of `set`.
    pub fn node_containing_all(&self, set: &[usize]) -> Option<usize> {
        let s = sets::sorted(set.to_vec());
        (0..self.bags.len()).find(|&i| sets::is_subset(&s, &self.bags[i]))
    }

    /// Nodes on the skeleton path from `a` to `b`, both included.
    pub fn skeleton_path(&self, a: usize, b: usize) -> Vec<usize> {
        let adj = self.node_adjacency();
        let mut parent = vec![usize::MAX; self.bags.len()];
        parent[a] = a;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            if cur == usize::MAX {
                return Vec::new();
            }
            path.push(cur);
        }
        path.reverse();
        path
    }

    pub fn remove_vertex(&mut self, v: usize) {
        for bag in &mut self.bags {
            sets::remove(bag, v);
        }
    }

    pub fn rename_vertex(&mut self, from: usize, to: usize) {
        for bag in &mut self.bags {
            if sets::contains(bag, from) {
                sets::remove(bag, from);
                sets::insert(bag, to);
            }
        }
    }

    /// Relabels every vertex through `map`.
    pub fn map_vertices(&mut self, map: &[usize]) {
        for bag in &mut self.bags {
            let mapped = bag.iter().map(|&v| map[v]).collect();
            *bag = sets::sorted(mapped);
        }
    }

    /// Contracts the skeleton edge between `keep` and `gone`; the merged bag
    /// is the union and sits at `keep` (renumbered if `gone < keep`).
    pub fn contract_nodes(&mut self, keep: usize, gone: usize) {
        let merged = sets::union(&self.bags[keep], &self.bags[gone]);
        self.bags[keep] = merged;
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(a, b) in &self.edges {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        self.edges = edges;
        self.remove_isolated_node(gone);
    }

    /// Deletes a node that has no incident skeleton edge, shifting ids above it.
    fn remove_isolated_node(&mut self, node: usize) {
        self.bags.remove(node);
        for e in &mut self.edges {
            debug_assert!(e.0 != node && e.1 != node);
            if e.0 > node {
                e.0 -= 1;
            }
            if e.1 > node {
                e.1 -= 1;
            }
        }
    }

    /// Drops bags that became empty, reconnecting their neighbours through one
    /// of them. Only used on trees.
    pub fn drop_empty_bags(&mut self) {
        while let Some(i) = (0..self.bags.len()).find(|&i| self.bags[i].is_empty()) {
            if self.bags.len() == 1 {
                return;
            }
            let adj = self.node_adjacency();
            if adj[i].is_empty() {
                self.remove_isolated_node(i);
            } else {
                self.contract_nodes(adj[i][0], i);
            }
        }
    }

    /// Contracts adjacent pairs of bags where one contains the other, scanning
    /// skeleton edges in lexicographic order and restarting after each merge.
    pub fn reduce(&mut self) {
        loop {
            let mut edges = self.edges.clone();
            edges.sort_unstable();
            let hit = edges.into_iter().find(|&(a, b)| {
                sets::is_subset(&self.bags[a], &self.bags[b])
                    || sets::is_subset(&self.bags[b], &self.bags[a])
            });
            match hit {
                Some((a, b)) => {
                    if sets::is_subset(&self.bags[a], &self.bags[b]) {
                        self.contract_nodes(b, a);
                    } else {
                        self.contract_nodes(a, b);
                    }
                }
                None => return,
            }
        }
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        let k = self.bags.len();
        if k == 0 {
            return Err(Violation::NoBags);
        }
        for (node, bag) in self.bags.iter().enumerate() {
            if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
                return Err(Violation::VertexOutOfRange { node, vertex: v });
            }
        }
        for &(a, b) in &self.edges {
            if a >= k || b >= k || a == b {
                return Err(Violation::BadSkeletonEdge(a, b));
            }
        }
        if self.edges.len() != k - 1 || !self.skeleton_connected() {
            return Err(Violation::NotATree);
        }
        if self.shape == Shape::Path && self.node_adjacency().iter().any(|l| l.len() > 2) {
            return Err(Violation::NotAPath);
        }
        let mut occurs = vec![Vec::new(); g.n()];
        for (node, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                occurs[v].push(node);
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| occurs[v].is_empty()) {
            return Err(Violation::MissingVertex(v));
        }
        for (u, v) in g.edges() {
            if sets::intersection(&occurs[u], &occurs[v]).is_empty() {
                return Err(Violation::MissingEdge(u, v));
            }
        }
        // A node set of a tree induces a subtree iff it spans exactly
        // |set| - 1 skeleton edges.
        let mut inner_edges = vec![0usize; g.n()];
        for &(a, b) in &self.edges {
            for v in sets::intersection(&self.bags[a], &self.bags[b]) {
                inner_edges[v] += 1;
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| inner_edges[v] + 1 != occurs[v].len()) {
            return Err(Violation::DisconnectedOccurrence(v));
        }
        Ok(())
    }

    fn skeleton_connected(&self) -> bool {
        let adj = self.node_adjacency();
        let mut seen = vec![false; self.bags.len()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.bags.len()
    }

    pub fn evaluate(&self, g: &Graph) -> Result<Metrics> {
        self.validate(g)?;
        g.require_connected()?;
        let d = g.all_pairs_distances();
        let mut breadth = 0;
        let mut length = 0;
        let mut centers = Vec::with_capacity(self.bags.len());
        let mut star_centers = Vec::with_capacity(self.bags.len());
        for bag in &self.bags {
            let (r, c) = d.radius_of(bag);
            debug_assert!(r != UNREACHABLE);
            breadth = breadth.max(r);
            length = length.max(d.diameter_of(bag));
            centers.push(c);
            star_centers.push(g.inner_dominator(bag));
        }
        let is_star = star_centers.iter().all(Option::is_some);
        Ok(Metrics { breadth, length, is_star, centers, star_centers })
    }

    /// Whether every bag is dominated by some vertex of the graph.
    pub fn has_breadth_one(&self, g: &Graph) -> bool {
        self.bags.iter().all(|b| g.any_dominator(b).is_some())
    }

    pub fn is_star(&self, g: &Graph) -> bool {
        self.bags.iter().all(|b| g.inner_dominator(b).is_some())
    }

    /// Reduces a breadth-one decomposition to a star-decomposition.
    pub fn reduce_to_star(&self, g: &Graph) -> Result<Decomposition> {
        self.validate(g)?;
        let metrics = self.evaluate(g)?;
        if metrics.breadth > 1 {
            return Err(Error::Breadth(metrics.breadth as usize, 1));
        }
        let mut out = self.clone();
        out.reduce();
        if !out.is_star(g) {
            return Err(Error::InvalidDecomposition(
                "reduced breadth-one decomposition has an undominated bag".into(),
            ));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let repr = JsonDecomposition {
            shape: self.shape,
            nodes: self
                .bags
                .iter()
                .enumerate()
                .map(|(id, bag)| JsonNode { id, bag: bag.clone() })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&repr).expect("serialisable")
    }

    /// Parses the JSON format; node ids may be arbitrary distinct integers and
    /// are renumbered by position.
    pub fn from_json(src: &str) -> Result<Decomposition> {
        let repr: JsonDecomposition = serde_json::from_str(src)
            .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        let mut index = std::collections::HashMap::new();
        for (pos, node) in repr.nodes.iter().enumerate() {
            if index.insert(node.id, pos).is_some() {
                return Err(Error::InvalidDecomposition(format!("duplicate node id {}", node.id)));
            }
        }
        let lookup = |id: usize| {
            index
                .get(&id)
                .copied()
                .ok_or_else(|| Error::InvalidDecomposition(format!("unknown node id {}", id)))
        };
        let mut d = Decomposition::new(repr.shape);
        for node in repr.nodes {
            d.add_bag(node.bag);
        }
        for [a, b] in repr.edges {
            d.edges.push((lookup(a)?, lookup(b)?));
        }
        Ok(d)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonNode {
    id: usize,
    bag: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonDecomposition {
    shape: Shape,
    nodes: Vec<JsonNode>,
    edges: Vec<[usize; 2]>,
}
