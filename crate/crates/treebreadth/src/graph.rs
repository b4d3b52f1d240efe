//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets;

/// Sentinel distance between vertices of different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from an adjacency structure that is already symmetric,
    /// sorted and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, l)| {
            l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v)
        }));
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Union of the open neighborhoods of `set`, minus `set` itself.
    pub fn neighborhood_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for &v in set {
            for &w in &self.adj[v] {
                if !inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        sets::intersection(&self.adj[u], &self.adj[v])
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether `set ⊆ N[c]`.
    pub fn dominates(&self, c: usize, set: &[usize]) -> bool {
        set.iter().all(|&x| x == c || self.has_edge(c, x))
    }

    /// Smallest vertex of `set` whose closed neighborhood contains `set`.
    pub fn inner_dominator(&self, set: &[usize]) -> Option<usize> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.into_iter().find(|&c| self.dominates(c, set))
    }

    /// Smallest vertex of the graph whose closed neighborhood contains `set`.
    pub fn any_dominator(&self, set: &[usize]) -> Option<usize> {
        (0..self.n()).find(|&c| self.dominates(c, set))
    }

    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut d = Vec::with_capacity(n * n);
        for v in 0..n {
            d.extend(self.bfs(v));
        }
        DistanceMatrix { n, d }
    }

    /// Component labels of the subgraph induced by the vertices not marked in
    /// `blocked`; blocked vertices get `usize::MAX`. Returns (labels, count).
    pub fn component_labels(&self, blocked: &[bool]) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if blocked[s] || label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !blocked[w] && label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Connected components of `G - removed`, each sorted, ordered by smallest
    /// vertex.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut blocked = vec![false; self.n()];
        for &v in removed {
            blocked[v] = true;
        }
        let (label, count) = self.component_labels(&blocked);
        let mut comps = vec![Vec::new(); count];
        for v in 0..self.n() {
            if label[v] != usize::MAX {
                comps[label[v]].push(v);
            }
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Contracts edge `{u, v}` into the smaller endpoint. Returns the new graph
    /// and the map from old ids to new ids.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let map: Vec<usize> = (0..self.n())
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut edges = Vec::with_capacity(self.m());
        for (a, b) in self.edges() {
            let (x, y) = (map[a], map[b]);
            if x != y {
                edges.push((x, y));
            }
        }
        let mut g = Graph::from_edges(self.n() - 1, &edges)?;
        if let Some(labels) = &self.labels {
            let kept = labels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != gone)
                .map(|(_, l)| l.clone())
                .collect();
            g.labels = Some(kept);
        }
        Ok((g, map))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        let mut g = Graph::from_sorted_adjacency(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Copy of the graph with extra edges; loops and duplicates are rejected
    /// and collapsed respectively.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        let mut g = Graph::from_edges(self.n(), &edges)?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Two-coloring `(side0, side1)` of a bipartite graph, colouring the
    /// smallest vertex of every component with side 0.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let side0 = (0..n).filter(|&v| color[v] == 0).collect();
        let side1 = (0..n).filter(|&v| color[v] == 1).collect();
        Some((side0, side1))
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
    /// Text after `#` is ignored.
    pub fn parse_edge_list(src: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two integers, found {:?}", line),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("not a nonnegative integer: {:?}", s),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a >= n {
                        return Err(Error::VertexOutOfRange(a));
                    }
                    if b >= n {
                        return Err(Error::VertexOutOfRange(b));
                    }
                    if a == b {
                        return Err(Error::SelfLoop(a));
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header announces {} edges, found {}", m, edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let repr = JsonGraph {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        };
        serde_json::to_string(&repr).expect("serialisable")
    }

    /// Parses `{"n": .., "edges": [[u, v], ..], "labels": [..]}`; labels are
    /// optional.
    pub fn parse_json(src: &str) -> Result<Graph> {
        let repr: JsonGraph =
            serde_json::from_str(src).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        let edges: Vec<(usize, usize)> = repr.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(repr.n, &edges)?;
        match repr.labels {
            Some(l) if l.len() != repr.n => Err(Error::Parse {
                line: 1,
                msg: format!("{} labels for {} vertices", l.len(), repr.n),
            }),
            Some(l) => Ok(g.with_labels(l)),
            None => Ok(g),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            match &self.labels {
                Some(l) => {
                    let _ = writeln!(out, "  {} [label=\"{}\"];", v, l[v].replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(out, "  {};", v);
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", u, v);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// Hop distances between all pairs of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// `B(v, r)`, sorted.
    pub fn ball(&self, v: usize, r: u32) -> Vec<usize> {
        (0..self.n).filter(|&x| self.get(v, x) <= r).collect()
    }

    /// Largest distance from `c` to a vertex of `set`.
    pub fn eccentricity_to(&self, c: usize, set: &[usize]) -> u32 {
        set.iter().map(|&x| self.get(c, x)).max().unwrap_or(0)
    }

    /// Radius of `set` with centers ranging over all vertices: the minimum
    /// eccentricity and the smallest vertex attaining it.
    pub fn radius_of(&self, set: &[usize]) -> (u32, usize) {
        let mut best = (UNREACHABLE, 0);
        for c in 0..self.n {
            let e = self.eccentricity_to(c, set);
            if e < best.0 {
                best = (e, c);
            }
        }
        best
    }

    pub fn diameter_of(&self, set: &[usize]) -> u32 {
        let mut best = 0;
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                best = best.max(self.get(x, y));
            }
        }
        best
    }
}
