//! Exact, exponential-time ground truth on small graphs.
//!
//! The four parameters are computed by a dynamic program over vertex subsets.
//! For the tree parameters a subset `S` is the set of vertices eliminated so
//! far and the clique created when `v` is eliminated next is `v` plus the
//! vertices outside `S` reachable from `v` through `S`; every triangulation
//! contains a minimal one produced this way and the bag conditions are closed
//! under subsets, so the minimum is exact. For the path parameters a subset is
//! a prefix of a vertex layout and the bag opened by the next vertex `v` is
//! `v` plus the prefix vertices that still have a neighbour outside the
//! prefix. [`exact_parameter_by_supergraphs`] is the direct enumeration of
//! chordal and interval supergraphs, kept as an independent cross-check.

use crate::chordal;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    TreeBreadth,
    TreeLength,
    PathBreadth,
    PathLength,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [
        Parameter::TreeBreadth,
        Parameter::TreeLength,
        Parameter::PathBreadth,
        Parameter::PathLength,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Parameter::TreeBreadth => "tb",
            Parameter::TreeLength => "tl",
            Parameter::PathBreadth => "pb",
            Parameter::PathLength => "pl",
        }
    }

    pub fn from_short_name(s: &str) -> Option<Parameter> {
        Parameter::ALL.into_iter().find(|p| p.short_name() == s)
    }

    fn is_path(self) -> bool {
        matches!(self, Parameter::PathBreadth | Parameter::PathLength)
    }

    fn is_breadth(self) -> bool {
        matches!(self, Parameter::TreeBreadth | Parameter::PathBreadth)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParameterQuery {
    pub which: Parameter,
    pub limit: usize,
}

impl ParameterQuery {
    pub const DEFAULT_LIMIT: usize = 7;

    pub fn new(which: Parameter) -> Self {
        ParameterQuery { which, limit: Self::DEFAULT_LIMIT }
    }

    pub fn with_limit(which: Parameter, limit: usize) -> Self {
        assert!(limit >= 1);
        ParameterQuery { which, limit }
    }
}

/// Hard cap for the subset dynamic program.
const MAX_SUBSET_VERTICES: usize = 24;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn mask_to_vec(mut m: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Bag predicate: the set fits in a ball of radius `k` (breadth) or has
/// diameter at most `k` (length).
struct BagTest {
    balls: Vec<u32>,
    breadth: bool,
}

impl BagTest {
    fn new(g: &Graph, k: u32, breadth: bool) -> Self {
        let d = g.all_pairs_distances();
        let balls = (0..g.n())
            .map(|c| (0..g.n()).filter(|&x| d.get(c, x) <= k).fold(0u32, |m, x| m | (1 << x)))
            .collect();
        BagTest { balls, breadth }
    }

    fn ok(&self, bag: u32) -> bool {
        if self.breadth {
            self.balls.iter().any(|&b| bag & !b == 0)
        } else {
            mask_to_vec(bag).into_iter().all(|x| bag & !self.balls[x] == 0)
        }
    }
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn elimination_clique(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut reach = 1u32 << v;
    let mut frontier = reach;
    let mut outside = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        for x in mask_to_vec(frontier) {
            next |= adj[x];
        }
        outside |= next & !s;
        let inner = next & s & !reach;
        reach |= inner;
        frontier = inner;
    }
    outside & !(1 << v)
}

fn boundary(adj: &[u32], s: u32) -> u32 {
    mask_to_vec(s).into_iter().filter(|&u| adj[u] & !s != 0).fold(0, |m, u| m | (1 << u))
}

/// Subset dynamic program; returns the elimination order (tree) or layout
/// (path) when a decomposition meeting the bag test exists.
fn search_order(adj: &[u32], path: bool, test: &BagTest) -> Option<Vec<usize>> {
    let n = adj.len();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut last = vec![u8::MAX; 1usize << n];
    let mut reached = vec![false; 1usize << n];
    reached[0] = true;
    for s in 0..=full {
        if !reached[s as usize] {
            continue;
        }
        let open = if path { boundary(adj, s) } else { 0 };
        for v in 0..n {
            if s & (1 << v) != 0 {
                continue;
            }
            let t = s | (1 << v);
            if reached[t as usize] {
                continue;
            }
            let bag = if path { open | (1 << v) } else { elimination_clique(adj, s, v) | (1 << v) };
            if test.ok(bag) {
                reached[t as usize] = true;
                last[t as usize] = v as u8;
            }
        }
        if s == full {
            break;
        }
    }
    if !reached[full as usize] {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Some(order)
}

/// Tree decomposition from an elimination order: the clique tree of the
/// filled graph.
pub fn decomposition_from_elimination(g: &Graph, order: &[usize]) -> Decomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut fill = Vec::new();
    for &v in order {
        let later: Vec<usize> = (0..n).filter(|&w| adj[v][w] && pos[w] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !adj[a][b] {
                    adj[a][b] = true;
                    adj[b][a] = true;
                    fill.push((a, b));
                }
            }
        }
    }
    let h = g.with_edges(&fill).expect("fill edges are valid");
    let cliques = chordal::maximal_cliques_from_peo(&h, order);
    chordal::tree_on_bags(cliques)
}

/// Path decomposition from a vertex layout.
pub fn decomposition_from_layout(g: &Graph, layout: &[usize]) -> Decomposition {
    let adj = adjacency_masks(g);
    let mut s = 0u32;
    let mut bags = Vec::with_capacity(layout.len());
    for &v in layout {
        bags.push(mask_to_vec(boundary(&adj, s) | (1 << v)));
        s |= 1 << v;
    }
    let mut d = Decomposition::path(bags);
    d.reduce();
    d
}

fn check_input(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit || g.n() > MAX_SUBSET_VERTICES {
        return Err(Error::OverLimit { n: g.n(), limit: limit.min(MAX_SUBSET_VERTICES) });
    }
    if g.n() == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    g.require_connected()
}

/// A decomposition of the requested kind whose breadth (or length) is at most
/// `k`, if one exists.
pub fn decomposition_within(g: &Graph, which: Parameter, k: u32) -> Result<Option<Decomposition>> {
    check_input(g, MAX_SUBSET_VERTICES)?;
    let adj = adjacency_masks(g);
    let test = BagTest::new(g, k, which.is_breadth());
    Ok(search_order(&adj, which.is_path(), &test).map(|order| {
        if which.is_path() {
            decomposition_from_layout(g, &order)
        } else {
            decomposition_from_elimination(g, &order)
        }
    }))
}

/// Exact value of the parameter together with an optimal decomposition.
pub fn exact_parameter_with_decomposition(
    g: &Graph,
    q: ParameterQuery,
) -> Result<(u32, Decomposition)> {
    check_input(g, q.limit)?;
    for k in 0..=g.n() as u32 {
        if let Some(d) = decomposition_within(g, q.which, k)? {
            return Ok((k, d));
        }
    }
    unreachable!("a single bag always has breadth and length below n")
}

pub fn exact_parameter(g: &Graph, q: ParameterQuery) -> Result<u32> {
    exact_parameter_with_decomposition(g, q).map(|(k, _)| k)
}

pub fn tree_breadth(g: &Graph, limit: usize) -> Result<u32> {
    exact_parameter(g, ParameterQuery::with_limit(Parameter::TreeBreadth, limit))
}

/// Exact value by enumerating every chordal (tree parameters) or interval
/// (path parameters) supergraph, intended for very small graphs.
pub fn exact_parameter_by_supergraphs(g: &Graph, q: ParameterQuery) -> Result<u32> {
    check_input(g, q.limit.min(8))?;
    let n = g.n();
    let d = g.all_pairs_distances();
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let base = adjacency_masks(g);
    let mut best = u32::MAX;
    for pick in 0u64..(1u64 << non_edges.len()) {
        let mut adj = base.clone();
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if pick & (1 << i) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let Some(order) = simplicial_order(&adj) else { continue };
        if q.which.is_path() && has_asteroidal_triple(&adj) {
            continue;
        }
        let mut cost = 0;
        for clique in maximal_cliques_masks(&adj, &order) {
            let members = mask_to_vec(clique);
            let c = if q.which.is_breadth() {
                d.radius_of(&members).0
            } else {
                d.diameter_of(&members)
            };
            cost = cost.max(c);
        }
        if q.which.is_breadth() {
            cost = cost.max(1);
        }
        best = best.min(cost);
    }
    Ok(best)
}

/// Perfect elimination order by repeatedly removing a simplicial vertex.
fn simplicial_order(adj: &[u32]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut alive: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut order = Vec::with_capacity(n);
    while alive != 0 {
        let v = mask_to_vec(alive).into_iter().find(|&v| {
            let nb = adj[v] & alive;
            mask_to_vec(nb).into_iter().all(|w| nb & !(adj[w] | (1 << w)) == 0)
        })?;
        order.push(v);
        alive &= !(1 << v);
    }
    Some(order)
}

fn maximal_cliques_masks(adj: &[u32], order: &[usize]) -> Vec<u32> {
    let mut later = 0u32;
    for &v in order {
        later |= 1 << v;
    }
    let mut cands = Vec::new();
    for &v in order {
        later &= !(1 << v);
        cands.push((adj[v] & later) | (1 << v));
    }
    let mut out: Vec<u32> = Vec::new();
    for (i, &c) in cands.iter().enumerate() {
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(j, &e)| j != i && c & !e == 0 && (c != e || j < i));
        if !dominated {
            out.push(c);
        }
    }
    out
}

fn has_asteroidal_triple(adj: &[u32]) -> bool {
    let n = adj.len();
    let all: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    // comp[z][x]: component mask of x in the graph minus N[z].
    let comp: Vec<Vec<u32>> = (0..n)
        .map(|z| {
            let avoid = adj[z] | (1 << z);
            let allowed = all & !avoid;
            (0..n)
                .map(|x| {
                    if allowed & (1 << x) == 0 {
                        return 0;
                    }
                    let mut reach = 1u32 << x;
                    loop {
                        let mut next = reach;
                        for y in mask_to_vec(reach) {
                            next |= adj[y] & allowed;
                        }
                        if next == reach {
                            break reach;
                        }
                        reach = next;
                    }
                })
                .collect()
        })
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            if adj[a] & (1 << b) != 0 {
                continue;
            }
            for c in b + 1..n {
                if adj[a] & (1 << c) != 0 || adj[b] & (1 << c) != 0 {
                    continue;
                }
                if comp[c][a] & (1 << b) != 0
                    && comp[a][b] & (1 << c) != 0
                    && comp[b][a] & (1 << c) != 0
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Treewidth by branch and bound over elimination orders.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    if g.n() > 10 {
        return Err(Error::OverLimit { n: g.n(), limit: 10 });
    }
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let mut best = n - 1;
    let mut seen = std::collections::HashMap::new();
    branch(&adj, (1u32 << n) - 1, 0, &mut best, &mut seen);
    Ok(best)
}

fn branch(
    adj: &[u32],
    alive: u32,
    width: usize,
    best: &mut usize,
    seen: &mut std::collections::HashMap<u32, usize>,
) {
    let remaining = alive.count_ones() as usize;
    if remaining == 0 || remaining - 1 <= width {
        *best = (*best).min(width.max(remaining.saturating_sub(1)));
        return;
    }
    if width >= *best {
        return;
    }
    match seen.get(&alive) {
        Some(&w) if w <= width => return,
        _ => {
            seen.insert(alive, width);
        }
    }
    let min_degree = mask_to_vec(alive)
        .into_iter()
        .map(|v| (adj[v] & alive).count_ones() as usize)
        .min()
        .unwrap_or(0);
    if width.max(min_degree) >= *best {
        return;
    }
    for v in mask_to_vec(alive) {
        let nb = adj[v] & alive;
        let w = width.max(nb.count_ones() as usize);
        if w >= *best {
            continue;
        }
        let mut next = adj.to_vec();
        for x in mask_to_vec(nb) {
            next[x] |= nb & !(1 << x);
        }
        branch(&next, alive & !(1 << v), w, best, seen);
    }
}

/// Treewidth by the subset recurrence `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`.
pub fn treewidth_by_subsets(g: &Graph) -> Result<usize> {
    if g.n() > 16 {
        return Err(Error::OverLimit { n: g.n(), limit: 16 });
    }
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        for v in mask_to_vec(s) {
            let rest = s & !(1 << v);
            let q = elimination_clique(&adj, rest, v).count_ones() as usize;
            best = best.min(tw[rest as usize].max(q));
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize])
}

/// Whether each vertex's later neighbourhood is dominated by a later vertex.
pub fn is_domination_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().enumerate().take(n.saturating_sub(1)).all(|(i, &v)| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > i).collect();
        order[i + 1..].iter().any(|&u| g.dominates(u, &later))
    })
}

/// Greedy search (smallest removable vertex, then smallest dominator), with an
/// exhaustive fallback on graphs of at most nine vertices.
pub fn domination_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    if let Some(order) = greedy_deo(g) {
        return Some(order);
    }
    if g.n() <= 9 {
        return exhaustive_deo(g);
    }
    None
}

fn greedy_deo(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n.saturating_sub(1) {
        let pick = (0..n).filter(|&v| alive[v]).find(|&v| {
            let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
            (0..n).any(|u| u != v && alive[u] && g.dominates(u, &nb))
        })?;
        alive[pick] = false;
        order.push(pick);
    }
    order.extend((0..n).filter(|&v| alive[v]));
    Some(order)
}

fn exhaustive_deo(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    // good[r]: the vertices of r can be ordered validly once everything else
    // has been eliminated.
    let mut good = vec![false; 1 << n];
    let mut next = vec![u8::MAX; 1 << n];
    for r in 1..=full {
        if r.count_ones() == 1 {
            good[r as usize] = true;
            continue;
        }
        for v in mask_to_vec(r) {
            let rest = r & !(1 << v);
            if !good[rest as usize] {
                continue;
            }
            let nb = adj[v] & r;
            if mask_to_vec(rest).into_iter().any(|u| nb & !(adj[u] | (1 << u)) == 0) {
                good[r as usize] = true;
                next[r as usize] = v as u8;
                break;
            }
        }
    }
    if !good[full as usize] {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut r = full;
    while r.count_ones() > 1 {
        let v = next[r as usize] as usize;
        order.push(v);
        r &= !(1 << v);
    }
    order.push(r.trailing_zeros() as usize);
    Some(order)
}
