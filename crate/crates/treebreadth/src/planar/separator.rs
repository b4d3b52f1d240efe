//! Turning a minimal separator of a biconnected plane graph into an edge or an
//! induced cycle by adding chords inside faces.

use crate::chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets;

use super::embedding::{self, PlaneEmbedding};

/// Planar supergraph of `g` on the same vertices in which `s` induces an edge
/// (when `|s| = 2`) or a cycle. For every face meeting `s` in exactly two
/// vertices the chord between them is added.
pub fn make_separator_cycle(g: &Graph, s: &[usize]) -> Result<Graph> {
    if !embedding::is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    let s = sets::sorted(s.to_vec());
    if !chordal::is_minimal_separator(g, &s) {
        return Err(Error::Precondition(format!("{:?} is not a minimal separator", s)));
    }
    let e = embedding::planar_embed(g)?.ok_or(Error::NotPlanar)?;
    with_face_chords(g, &e, &s)
}

pub(crate) fn with_face_chords(g: &Graph, e: &PlaneEmbedding, s: &[usize]) -> Result<Graph> {
    let mut extra = Vec::new();
    for face in e.face_vertex_sets() {
        let meet = sets::intersection(&face, s);
        match meet.len() {
            0 | 1 => {}
            2 => {
                if !g.has_edge(meet[0], meet[1]) {
                    extra.push((meet[0], meet[1]));
                }
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "a face meets the separator in {} vertices",
                    meet.len()
                )))
            }
        }
    }
    g.with_edges(&extra)
}

/// The cyclic order of `s` in a graph where it induces a cycle.
pub fn separator_cycle_order(h: &Graph, s: &[usize]) -> Option<Vec<usize>> {
    let s = sets::sorted(s.to_vec());
    if s.len() < 3 {
        return None;
    }
    let inner = |x: usize| sets::intersection(h.neighbors(x), &s);
    if s.iter().any(|&x| inner(x).len() != 2) {
        return None;
    }
    let mut order = vec![s[0]];
    let mut prev = s[0];
    let mut cur = inner(s[0])[0];
    while cur != s[0] {
        order.push(cur);
        let nb = inner(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (order.len() == s.len()).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(r: usize, c: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                if j + 1 < c {
                    edges.push((v, v + 1));
                }
                if i + 1 < r {
                    edges.push((v, v + c));
                }
            }
        }
        Graph::from_edges(r * c, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn two_vertex_separators_become_edges() {
        let h = make_separator_cycle(&cycle(4), &[0, 2]).unwrap();
        assert!(h.has_edge(0, 2));
        let h = make_separator_cycle(&cycle(6), &[0, 3]).unwrap();
        assert!(h.has_edge(0, 3));
        assert!(embedding::is_planar(&h));
    }

    #[test]
    fn grid_middle_row_closes_into_a_cycle() {
        let g = grid(3, 3);
        let h = make_separator_cycle(&g, &[3, 4, 5]).unwrap();
        assert!(embedding::is_planar(&h));
        let order = separator_cycle_order(&h, &[3, 4, 5]).unwrap();
        assert_eq!(order.len(), 3);
    }

    #[test]
    fn preconditions() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(make_separator_cycle(&path, &[1]), Err(Error::NotBiconnected));
        assert!(matches!(make_separator_cycle(&cycle(5), &[0, 1]), Err(Error::Precondition(_))));
    }
}
