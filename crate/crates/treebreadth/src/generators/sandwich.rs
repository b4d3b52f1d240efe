use crate::chordal;
use crate::decomposition::{Decomposition, Shape};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets;

use super::GadgetMap;

/// Largest vertex set handled by [`solve_sandwich`].
pub const SANDWICH_LIMIT: usize = 8;

/// Role suffixes of the seven gadget vertices, in id order.
const GADGET: [&str; 7] = ["s", "t", "c", "x", "y", "w", "z"];

/// Two graphs on the same vertices with `E1 ⊆ E2`, where the pairs missing
/// from `E2` form a perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichInstance {
    pub g1: Graph,
    pub g2: Graph,
    /// Forbidden pairs `(u, v)` with `u < v`, sorted.
    pub forbidden: Vec<(usize, usize)>,
    partner: Vec<usize>,
}

impl SandwichInstance {
    pub fn new(g1: Graph, g2: Graph) -> Result<Self> {
        let n = g1.n();
        if g2.n() != n {
            return Err(Error::Precondition("the two graphs have different orders".into()));
        }
        if let Some((u, v)) = g1.edges().into_iter().find(|&(u, v)| !g2.has_edge(u, v)) {
            return Err(Error::Precondition(format!("edge {{{}, {}}} of the first graph is missing from the second", u, v)));
        }
        let mut partner = vec![usize::MAX; n];
        let mut forbidden = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !g2.has_edge(u, v) {
                    if partner[u] != usize::MAX || partner[v] != usize::MAX {
                        return Err(Error::Precondition("forbidden pairs do not form a matching".into()));
                    }
                    partner[u] = v;
                    partner[v] = u;
                    forbidden.push((u, v));
                }
            }
        }
        if n == 0 || partner.contains(&usize::MAX) {
            return Err(Error::Precondition("forbidden pairs do not form a perfect matching".into()));
        }
        Ok(SandwichInstance { g1, g2, forbidden, partner })
    }

    /// The instance whose second graph is complete except for `forbidden`.
    pub fn with_forbidden(g1: Graph, forbidden: &[(usize, usize)]) -> Result<Self> {
        let n = g1.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !forbidden.contains(&(u, v)) && !forbidden.contains(&(v, u)) {
                    edges.push((u, v));
                }
            }
        }
        let g2 = Graph::from_edges(n, &edges)?;
        SandwichInstance::new(g1, g2)
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// Two edge lists separated by a line `---`.
    pub fn parse(src: &str) -> Result<Self> {
        let mut blocks = vec![String::new()];
        for line in src.lines() {
            if line.trim() == "---" {
                blocks.push(String::new());
            } else {
                let last = blocks.last_mut().unwrap();
                last.push_str(line);
                last.push('\n');
            }
        }
        if blocks.len() != 2 {
            return Err(Error::Parse { line: 1, msg: "expected two edge lists separated by `---`".into() });
        }
        SandwichInstance::new(Graph::parse_edge_list(&blocks[0])?, Graph::parse_edge_list(&blocks[1])?)
    }

    pub fn to_text(&self) -> String {
        format!("{}---\n{}", self.g1.to_edge_list(), self.g2.to_edge_list())
    }

    /// Whether `E1 ⊆ E(h) ⊆ E2`.
    pub fn is_sandwich(&self, h: &Graph) -> bool {
        h.n() == self.g1.n()
            && self.g1.edges().into_iter().all(|(u, v)| h.has_edge(u, v))
            && h.edges().into_iter().all(|(u, v)| self.g2.has_edge(u, v))
    }

    fn gadget_base(&self, pair: usize) -> usize {
        2 * self.g1.n() + 7 * pair
    }
}

/// Vertex ids: `V` keeps its ids, the copy `v'` of `v` is `n + v`, and the
/// gadget of the `p`-th forbidden pair uses `2n + 7p ..` for
/// `s, t, c, x, y, w, z`.
pub fn sandwich_graph(inst: &SandwichInstance) -> (Graph, GadgetMap) {
    let n = inst.g1.n();
    let mut roles = GadgetMap::new();
    let mut edges = inst.g1.edges();
    for v in 0..n {
        roles.insert(format!("v{}", v), v);
        roles.insert(format!("v'{}", v), n + v);
        for w in 0..n {
            if w > v {
                edges.push((n + v, n + w));
            }
            if w != inst.partner(v) {
                edges.push((v, n + w));
            }
        }
    }
    for (p, &(u, v)) in inst.forbidden.iter().enumerate() {
        let base = inst.gadget_base(p);
        for (k, name) in GADGET.iter().enumerate() {
            roles.insert(format!("{}_{}_{}", name, u, v), base + k);
        }
        let [s, t, c, x, y, w, z] = [0, 1, 2, 3, 4, 5, 6].map(|k| base + k);
        edges.extend([(s, c), (c, t), (s, x), (x, t), (s, y), (y, w), (w, z), (z, t), (c, w)]);
        for end in [s, t] {
            edges.extend([(end, u), (end, v), (end, n + u), (end, n + v)]);
        }
    }
    let g = Graph::from_edges(2 * n + 7 * inst.forbidden.len(), &edges).expect("gadget edges are valid");
    (g, roles)
}

fn require_sandwich(inst: &SandwichInstance, h: &Graph) -> Result<()> {
    if !chordal::is_chordal(h) {
        return Err(Error::NotChordal);
    }
    if !inst.is_sandwich(h) {
        return Err(Error::Precondition("graph is not between the two instance graphs".into()));
    }
    Ok(())
}

/// Adds allowed edges to a chordal sandwich while it stays chordal, scanning
/// pairs in lexicographic order and restarting after each addition.
pub fn maximal_sandwich(inst: &SandwichInstance, h: &Graph) -> Result<Graph> {
    require_sandwich(inst, h)?;
    let mut h = h.clone();
    'scan: loop {
        for (u, v) in inst.g2.edges() {
            if h.has_edge(u, v) {
                continue;
            }
            let bigger = h.with_edges(&[(u, v)])?;
            if chordal::is_chordal(&bigger) {
                h = bigger;
                continue 'scan;
            }
        }
        return Ok(h);
    }
}

/// Fill graph of the elimination game along `order`.
fn fill_graph(g: &Graph, order: &[usize]) -> Graph {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut done = vec![false; n];
    for &v in order {
        done[v] = true;
        let later: Vec<usize> = (0..n).filter(|&w| !done[w] && adj[v][w]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
    }
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]).collect();
    Graph::from_edges(n, &edges).expect("fill edges are valid")
}

/// A chordal sandwich, if one exists. Every minimal triangulation of the
/// first graph is the fill graph of some elimination ordering, so trying all
/// orderings (lexicographically) is exact.
pub fn solve_sandwich(inst: &SandwichInstance) -> Result<Option<Graph>> {
    let n = inst.g1.n();
    if n > SANDWICH_LIMIT {
        return Err(Error::OverLimit { n, limit: SANDWICH_LIMIT });
    }
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let h = fill_graph(&inst.g1, &order);
        if inst.is_sandwich(&h) {
            return Ok(Some(h));
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| order[i] < order[i + 1]) else {
            return Ok(None);
        };
        let j = (i + 1..n).rev().find(|&j| order[j] > order[i]).unwrap();
        order.swap(i, j);
        order[i + 1..].reverse();
    }
}

/// A star-decomposition of the gadget graph built from a chordal sandwich.
pub fn sandwich_witness(inst: &SandwichInstance, h: &Graph) -> Result<Decomposition> {
    let n = inst.g1.n();
    let hm = maximal_sandwich(inst, h)?;
    let ct = chordal::clique_tree(&hm)?;
    // Each clique tree edge swaps exactly one forbidden pair.
    let mut pair_of_edge = Vec::with_capacity(ct.edges.len());
    for &(a, b) in &ct.edges {
        let only_a = sets::difference(&ct.bags[a], &ct.bags[b]);
        let only_b = sets::difference(&ct.bags[b], &ct.bags[a]);
        if only_a.len() != 1 || only_b.len() != 1 || inst.partner(only_a[0]) != only_b[0] {
            return Err(Error::Invariant(format!(
                "clique tree edge between {:?} and {:?} does not swap a forbidden pair",
                ct.bags[a], ct.bags[b]
            )));
        }
        let key = (only_a[0].min(only_b[0]), only_a[0].max(only_b[0]));
        pair_of_edge.push(inst.forbidden.binary_search(&key).expect("partners form a forbidden pair"));
    }
    let mut seen = pair_of_edge.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != inst.forbidden.len() || pair_of_edge.len() != inst.forbidden.len() {
        return Err(Error::Invariant("forbidden pairs and clique tree edges do not match up".into()));
    }

    let clique: Vec<usize> = (n..2 * n).collect();
    let mut d = Decomposition::new(Shape::Tree);
    // ends[e] = (bag of the first endpoint, bag of the second endpoint).
    let mut ends = vec![(usize::MAX, usize::MAX); ct.edges.len()];
    for node in 0..ct.len() {
        let mut prev = None;
        for (e, &(a, b)) in ct.edges.iter().enumerate() {
            if a != node && b != node {
                continue;
            }
            let base = inst.gadget_base(pair_of_edge[e]);
            let mut bag = sets::union(&ct.bags[node], &clique);
            bag.extend([base, base + 1]);
            let id = d.add_bag(bag);
            if let Some(p) = prev {
                d.add_edge(p, id);
            }
            prev = Some(id);
            if a == node {
                ends[e].0 = id;
            } else {
                ends[e].1 = id;
            }
        }
    }
    for (e, &(ya, yb)) in ends.iter().enumerate() {
        d.add_edge(ya, yb);
        let [s, t, c, x, y, w, z] = [0, 1, 2, 3, 4, 5, 6].map(|k| inst.gadget_base(pair_of_edge[e]) + k);
        let inner = d.add_bag(vec![c, s, t, w]);
        d.add_edge(ya, inner);
        for leaf in [vec![x, s, t], vec![y, s, w], vec![z, t, w]] {
            let id = d.add_bag(leaf);
            d.add_edge(inner, id);
        }
    }
    d.edges.sort_unstable();
    let (g, _) = sandwich_graph(inst);
    d.validate(&g)?;
    if !d.is_star(&g) {
        return Err(Error::Invariant("assembled decomposition is not a star-decomposition".into()));
    }
    Ok(d)
}
