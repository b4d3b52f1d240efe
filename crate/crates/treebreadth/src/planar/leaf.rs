//! Leaf-vertices and the one-or-two bag test.

use crate::decomposition::{Decomposition, Shape};
use crate::graph::Graph;
use crate::sets;

use super::adjacency::AdjacencyOracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafKind {
    Type1,
    Type2,
    Type3,
}

/// A leaf-vertex with its witness.
///
/// `path` is the path induced by the neighbourhood for Types 1 and 2, listed
/// from `a` to `c`. For Type 3 it is `[a, b, c]` where `b` is a common
/// neighbour of the two non-adjacent neighbours `a` and `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafVertex {
    pub vertex: usize,
    pub kind: LeafKind,
    pub path: Vec<usize>,
    /// Type 1 only: a vertex whose neighbourhood holds the whole path.
    pub dominator: Option<usize>,
}

impl LeafVertex {
    pub fn a(&self) -> usize {
        self.path[0]
    }

    /// The middle vertex; only meaningful for Types 2 and 3.
    pub fn b(&self) -> usize {
        self.path[1]
    }

    pub fn c(&self) -> usize {
        *self.path.last().unwrap()
    }

    pub fn relabel(&self, ids: &[usize]) -> LeafVertex {
        LeafVertex {
            vertex: ids[self.vertex],
            kind: self.kind,
            path: self.path.iter().map(|&x| ids[x]).collect(),
            dominator: self.dominator.map(|d| ids[d]),
        }
    }

    /// Re-checks the witness against the definition.
    pub fn verify(&self, g: &Graph) -> bool {
        let nb = g.neighbors(self.vertex);
        match self.kind {
            LeafKind::Type1 | LeafKind::Type2 => {
                let want = if self.kind == LeafKind::Type1 { nb.len() >= 4 } else { nb.len() == 3 };
                want && sets::sorted(self.path.clone()) == nb
                    && induced_path(g, nb).as_deref().is_some_and(|p| same_path(p, &self.path))
                    && match (self.kind, self.dominator) {
                        (LeafKind::Type1, Some(d)) => d != self.vertex && sets::is_subset(nb, g.neighbors(d)),
                        (LeafKind::Type2, None) => true,
                        _ => false,
                    }
            }
            LeafKind::Type3 => {
                let (a, b, c) = (self.a(), self.b(), self.c());
                nb == sets::sorted(vec![a, c]).as_slice()
                    && !g.has_edge(a, c)
                    && b != self.vertex
                    && g.has_edge(a, b)
                    && g.has_edge(b, c)
            }
        }
    }
}

fn same_path(p: &[usize], q: &[usize]) -> bool {
    p == q || p.iter().rev().eq(q.iter())
}

/// The vertices of `set` in path order when they induce a path with at least
/// two vertices, starting from the smaller endpoint.
fn induced_path(g: &Graph, set: &[usize]) -> Option<Vec<usize>> {
    induced_path_with(set, |x, y| g.has_edge(x, y))
}

fn induced_path_with(set: &[usize], adjacent: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    if set.len() < 2 {
        return None;
    }
    let inner: Vec<Vec<usize>> =
        set.iter().map(|&x| set.iter().copied().filter(|&y| y != x && adjacent(x, y)).collect()).collect();
    let edges: usize = inner.iter().map(Vec::len).sum::<usize>() / 2;
    if edges != set.len() - 1 || inner.iter().any(|l| l.is_empty() || l.len() > 2) {
        return None;
    }
    let start = (0..set.len()).find(|&i| inner[i].len() == 1)?;
    let mut order = vec![set[start]];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = inner[cur].iter().copied().find(|&y| y != prev);
        let Some(y) = next else { break };
        prev = set[cur];
        cur = set.iter().position(|&s| s == y).unwrap();
        order.push(set[cur]);
        if inner[cur].len() == 1 {
            break;
        }
    }
    (order.len() == set.len()).then_some(order)
}

fn leaf_of_kind(g: &Graph, o: &AdjacencyOracle, v: usize, kind: LeafKind) -> Option<LeafVertex> {
    let nb = g.neighbors(v);
    match kind {
        LeafKind::Type1 | LeafKind::Type2 => {
            let deg_ok = if kind == LeafKind::Type1 { nb.len() >= 4 } else { nb.len() == 3 };
            if !deg_ok {
                return None;
            }
            let path = induced_path_with(nb, |x, y| o.adjacent(x, y))?;
            let dominator = if kind == LeafKind::Type1 {
                // A dominator is a common neighbour of both ends.
                let (a, c) = (path[0], path[path.len() - 1]);
                let d = g
                    .common_neighbors(a, c)
                    .into_iter()
                    .find(|&d| d != v && nb.iter().all(|&w| o.adjacent(d, w)))?;
                Some(d)
            } else {
                None
            };
            Some(LeafVertex { vertex: v, kind, path, dominator })
        }
        LeafKind::Type3 => {
            if nb.len() != 2 || o.adjacent(nb[0], nb[1]) {
                return None;
            }
            let (a, c) = (nb[0], nb[1]);
            let b = g.common_neighbors(a, c).into_iter().find(|&b| b != v)?;
            Some(LeafVertex { vertex: v, kind, path: vec![a, b, c], dominator: None })
        }
    }
}

/// Whether `v` is a leaf-vertex, trying Types 1, 2 and 3 in this order.
pub fn leaf_vertex_at(g: &Graph, v: usize) -> Option<LeafVertex> {
    let o = AdjacencyOracle::new(g);
    [LeafKind::Type1, LeafKind::Type2, LeafKind::Type3].into_iter().find_map(|k| leaf_of_kind(g, &o, v, k))
}

/// First leaf-vertex among `candidates`: Types are tried in the order 1, 2, 3
/// and, within a type, the smallest vertex wins.
pub fn find_leaf_among(g: &Graph, candidates: &[usize]) -> Option<LeafVertex> {
    let o = AdjacencyOracle::new(g);
    let mut cand = candidates.to_vec();
    cand.sort_unstable();
    for kind in [LeafKind::Type1, LeafKind::Type2, LeafKind::Type3] {
        for &v in &cand {
            if let Some(l) = leaf_of_kind(g, &o, v, kind) {
                return Some(l);
            }
        }
    }
    None
}

pub fn find_leaf_vertex(g: &Graph) -> Option<LeafVertex> {
    let all: Vec<usize> = (0..g.n()).collect();
    find_leaf_among(g, &all)
}

/// A star-decomposition with one or two bags, if there is one.
///
/// One bag works exactly when some vertex is universal. Two bags `N[x]` and
/// `N[y]` work when they cover the graph and no edge joins `N[x] \ N[y]` to
/// `N[y] \ N[x]`; pairs are tried in lexicographic order.
pub fn two_bag_star(g: &Graph) -> Option<Decomposition> {
    let n = g.n();
    if let Some(u) = (0..n).find(|&u| g.degree(u) + 1 == n) {
        return Some(Decomposition::single_bag(g.closed_neighborhood(u)));
    }
    for x in 0..n {
        let nx = g.closed_neighborhood(x);
        for y in x + 1..n {
            let ny = g.closed_neighborhood(y);
            if sets::union(&nx, &ny).len() != n {
                continue;
            }
            let only_x = sets::difference(&nx, &ny);
            let only_y = sets::difference(&ny, &nx);
            let crossing = only_x.iter().any(|&p| only_y.iter().any(|&q| g.has_edge(p, q)));
            if !crossing {
                let mut d = Decomposition::new(Shape::Tree);
                d.add_bag(nx.clone());
                d.add_bag(ny);
                d.add_edge(0, 1);
                return Some(d);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn c4_vertices_are_type3() {
        let g = cycle(4);
        let l = find_leaf_vertex(&g).unwrap();
        assert_eq!((l.vertex, l.kind), (0, LeafKind::Type3));
        assert_eq!(l.path, vec![1, 2, 3]);
        assert!(l.verify(&g));
    }

    #[test]
    fn diamond_has_type2() {
        // K4 minus the edge {0, 3}.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let l = find_leaf_vertex(&g).unwrap();
        assert_eq!(l.kind, LeafKind::Type2);
        assert_eq!(l.vertex, 1);
        assert_eq!(l.path, vec![0, 2, 3]);
        assert!(l.verify(&g));
    }

    #[test]
    fn type1_with_dominator() {
        // v = 0 on the path 1-2-3-4, and 5 adjacent to the whole path.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (5, 1), (5, 2), (5, 3), (5, 4)],
        )
        .unwrap();
        let l = find_leaf_vertex(&g).unwrap();
        assert_eq!((l.vertex, l.kind, l.dominator), (0, LeafKind::Type1, Some(5)));
        assert_eq!(l.path, vec![1, 2, 3, 4]);
        assert!(l.verify(&g));
    }

    #[test]
    fn two_bags() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(two_bag_star(&k4).unwrap().len(), 1);
        let d = two_bag_star(&cycle(4)).unwrap();
        assert_eq!(d.bags, vec![vec![0, 1, 3], vec![1, 2, 3]]);
        assert!(two_bag_star(&cycle(6)).is_none());
    }

    #[test]
    fn no_leaf_in_octahedron() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        assert!(find_leaf_vertex(&g).is_none());
        // Two antipodal vertices give the bags.
        assert!(two_bag_star(&g).is_some());
    }
}
