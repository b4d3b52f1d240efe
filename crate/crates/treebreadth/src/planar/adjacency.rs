//! Constant-time adjacency queries for graphs of bounded degeneracy.

use crate::graph::Graph;

/// Orients every edge towards the vertex removed later in a smallest-last
/// ordering. Out-degrees are then bounded by the degeneracy (at most five
/// on planar graphs), so a lookup scans two short lists.
#[derive(Clone, Debug)]
pub struct AdjacencyOracle {
    out: Vec<Vec<usize>>,
}

impl AdjacencyOracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
        for v in 0..n {
            buckets[degree[v]].push(v);
        }
        let mut out = vec![Vec::new(); n];
        let mut low = 0;
        for _ in 0..n {
            low = low.min(n - 1);
            let v = loop {
                match buckets[low].pop() {
                    Some(v) if !removed[v] && degree[v] == low => break v,
                    Some(_) => {}
                    None => low += 1,
                }
            };
            removed[v] = true;
            for &w in g.neighbors(v) {
                if !removed[w] {
                    out[v].push(w);
                    degree[w] -= 1;
                    buckets[degree[w]].push(w);
                    low = low.min(degree[w]);
                }
            }
        }
        AdjacencyOracle { out }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(&v) || self.out[v].contains(&u)
    }

    pub fn max_out_degree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_adjacency_lists_and_stays_sparse() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..40 {
            let g = catalog::random_triangulation(&mut rng, n);
            let o = AdjacencyOracle::new(&g);
            assert!(o.max_out_degree() <= 5);
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(o.adjacent(u, v), g.has_edge(u, v));
                }
            }
        }
    }
}
