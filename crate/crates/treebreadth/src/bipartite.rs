//! Tree-breadth one on bipartite graphs.
//!
//! A prime bipartite graph has tree-breadth one exactly when the closed
//! neighbourhoods of one colour class are the bags of a tree decomposition.
//! General graphs are split into atoms first and the per-atom answers are
//! glued along the clique separators.

use crate::chordal::{self, AtomDecomposition};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets;

/// The two colour classes of a connected bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitionWitness {
    pub side0: Vec<usize>,
    pub side1: Vec<usize>,
}

impl BipartitionWitness {
    pub fn of(g: &Graph) -> Result<Self> {
        let (side0, side1) = g.bipartition().ok_or(Error::NotBipartite)?;
        Ok(BipartitionWitness { side0, side1 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteAnswer {
    Yes(Decomposition),
    No,
}

impl BipartiteAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, BipartiteAnswer::Yes(_))
    }
}

/// Drops duplicates and sets properly contained in another member.
pub fn normalize_family(family: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut fam: Vec<Vec<usize>> = family.into_iter().map(sets::sorted).collect();
    fam.sort();
    fam.dedup();
    let keep: Vec<bool> = fam
        .iter()
        .enumerate()
        .map(|(i, a)| !fam.iter().enumerate().any(|(j, b)| i != j && sets::is_subset(a, b)))
        .collect();
    fam.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect()
}

/// Decides a single atom, given by its induced subgraph. Returned bags use
/// the atom's local ids.
fn decide_atom(h: &Graph) -> Result<Option<Decomposition>> {
    let n = h.n();
    if n <= 2 {
        return Ok(Some(Decomposition::single_bag((0..n).collect())));
    }
    if let Some(u) = (0..n).find(|&u| h.degree(u) == n - 1) {
        return Ok(Some(Decomposition::single_bag(h.closed_neighborhood(u))));
    }
    let w = BipartitionWitness::of(h)?;
    for side in [&w.side0, &w.side1] {
        let family = normalize_family(side.iter().map(|&v| h.closed_neighborhood(v)).collect());
        if let Some(d) = chordal::constrained_bags(h, &family)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Recognises tree-breadth one on a connected bipartite graph. A positive
/// answer carries a star-decomposition of `g`.
pub fn recognize_bipartite_tb1(g: &Graph) -> Result<BipartiteAnswer> {
    g.require_connected()?;
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let atoms: AtomDecomposition = chordal::atoms(g)?;
    let mut parts = Vec::with_capacity(atoms.atoms.len());
    for atom in &atoms.atoms {
        let h = g.induced_subgraph(atom);
        match decide_atom(&h)? {
            Some(mut d) => {
                d.map_vertices(atom);
                parts.push(d);
            }
            None => return Ok(BipartiteAnswer::No),
        }
    }
    let mut d = chordal::glue_atom_decompositions(&atoms, parts)?;
    d.reduce();
    Ok(BipartiteAnswer::Yes(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn yes(g: &Graph) -> Decomposition {
        match recognize_bipartite_tb1(g).unwrap() {
            BipartiteAnswer::Yes(d) => {
                d.validate(g).unwrap();
                assert!(d.is_star(g));
                d
            }
            BipartiteAnswer::No => panic!("expected yes"),
        }
    }

    #[test]
    fn c4_two_bags() {
        let d = yes(&cycle(4));
        let mut bags = d.bags.clone();
        bags.sort();
        assert_eq!(bags, vec![vec![0, 1, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn c6_is_rejected() {
        assert_eq!(recognize_bipartite_tb1(&cycle(6)).unwrap(), BipartiteAnswer::No);
    }

    #[test]
    fn k33_and_grid() {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        let d = yes(&Graph::from_edges(6, &edges).unwrap());
        assert_eq!(d.len(), 3);
        let grid = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        yes(&grid);
    }

    #[test]
    fn trees_and_errors() {
        let path = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(yes(&path).len(), 4);
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(recognize_bipartite_tb1(&triangle), Err(Error::NotBipartite));
        assert_eq!(recognize_bipartite_tb1(&Graph::new(2)), Err(Error::Disconnected));
    }

    #[test]
    fn normalization_drops_contained_sets() {
        let fam = normalize_family(vec![vec![2, 0], vec![0, 1, 2], vec![0, 2], vec![3]]);
        assert_eq!(fam, vec![vec![0, 1, 2], vec![3]]);
    }
}
