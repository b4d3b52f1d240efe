//! A mutable graph with stable vertex ids, used by the step machine and the
//! certificate replay. Deleted and contracted vertices stay as dead ids.

use std::collections::BTreeSet;

use crate::decomposition::Decomposition;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Work {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

/// A compact copy of a [`Work`] graph together with the id translation.
pub(crate) struct Compact {
    pub graph: Graph,
    /// Local id to stable id.
    pub ids: Vec<usize>,
    /// Stable id to local id, `usize::MAX` for dead vertices.
    pub local: Vec<usize>,
}

impl Compact {
    pub fn to_local(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.local[x]).collect();
        out.sort_unstable();
        out
    }

    pub fn to_stable(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.ids[x]).collect();
        out.sort_unstable();
        out
    }
}

impl Work {
    pub fn from_graph(g: &Graph) -> Self {
        Work {
            adj: (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect(),
            alive: vec![true; g.n()],
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.alive.len()).filter(|&v| self.alive[v]).collect()
    }

    pub fn len(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn nbrs(&self, v: usize) -> Vec<usize> {
        self.adj[v].iter().copied().collect()
    }

    pub fn closed(&self, v: usize) -> Vec<usize> {
        let mut out = self.nbrs(v);
        crate::sets::insert(&mut out, v);
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && self.alive[u] && self.alive[v]);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_vertex(&mut self, v: usize) {
        for w in std::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
    }

    /// Contracts the edge (or non-edge) `{keep, gone}` into `keep`.
    pub fn contract_into(&mut self, keep: usize, gone: usize) {
        let moved = std::mem::take(&mut self.adj[gone]);
        for w in moved {
            self.adj[w].remove(&gone);
            if w != keep {
                self.adj[w].insert(keep);
                self.adj[keep].insert(w);
            }
        }
        self.alive[gone] = false;
    }

    /// Common neighbours of `u` and `v`.
    pub fn common(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u].intersection(&self.adj[v]).copied().collect()
    }

    pub fn dominates(&self, z: usize, set: &[usize]) -> bool {
        set.iter().all(|&x| x == z || self.adj[z].contains(&x))
    }

    /// Some live vertex whose closed neighbourhood contains `set`.
    pub fn dominator(&self, set: &[usize]) -> Option<usize> {
        match set.first() {
            None => self.vertices().first().copied(),
            Some(&s) => std::iter::once(s)
                .chain(self.adj[s].iter().copied())
                .find(|&z| self.dominates(z, set)),
        }
    }

    /// Every live vertex whose closed neighbourhood contains `set`.
    pub fn dominators(&self, set: &[usize]) -> Vec<usize> {
        match set.first() {
            None => self.vertices(),
            Some(&s) => {
                let mut out: Vec<usize> = std::iter::once(s)
                    .chain(self.adj[s].iter().copied())
                    .filter(|&z| self.dominates(z, set))
                    .collect();
                out.sort_unstable();
                out
            }
        }
    }

    pub(crate) fn compact(&self) -> Compact {
        let ids = self.vertices();
        let mut local = vec![usize::MAX; self.alive.len()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<Vec<usize>> =
            ids.iter().map(|&v| self.adj[v].iter().map(|&w| local[w]).collect()).collect();
        Compact { graph: Graph::from_sorted_adjacency(adj), ids, local }
    }

    /// Whether `d` (over stable ids) is a tree decomposition of this graph.
    pub fn accepts(&self, d: &Decomposition) -> bool {
        let c = self.compact();
        if d.bags.iter().flatten().any(|&x| x >= self.alive.len() || !self.alive[x]) {
            return false;
        }
        let mut local = d.clone();
        local.map_vertices(&c.local);
        local.validate(&c.graph).is_ok()
    }

    pub fn violation(&self, d: &Decomposition) -> Option<String> {
        if let Some(&x) = d.bags.iter().flatten().find(|&&x| x >= self.alive.len() || !self.alive[x]) {
            return Some(format!("bag holds removed vertex {}", x));
        }
        let c = self.compact();
        let mut local = d.clone();
        local.map_vertices(&c.local);
        local.validate(&c.graph).err().map(|v| v.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_keeps_ids() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut w = Work::from_graph(&g);
        w.contract_into(1, 2);
        assert_eq!(w.vertices(), vec![0, 1, 3]);
        assert_eq!(w.nbrs(1), vec![0, 3]);
        let c = w.compact();
        assert_eq!(c.graph.n(), 3);
        assert_eq!(c.to_stable(&[2]), vec![3]);
        w.remove_vertex(0);
        assert_eq!(w.nbrs(3), vec![1]);
        assert_eq!(w.dominator(&[1, 3]), Some(1));
    }
}
