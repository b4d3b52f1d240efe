//! Small-graph catalogues: exhaustive enumeration up to isomorphism and
//! random connected or planar samples.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Largest order supported by [`connected_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 9;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn from_masks(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] & (1 << v) != 0)
        .collect();
    Graph::from_edges(n, &edges).expect("valid masks")
}

/// Canonical code of a graph: the largest upper-triangle bit string over
/// vertex orders that list vertices by increasing invariant.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_code_masks(&adjacency_masks(g))
}

fn canonical_code_masks(adj: &[u32]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let invariant: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] & (1 << w) != 0).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || invariant[order[i]] != invariant[order[start]] {
            classes.push((start, i));
            start = i;
        }
    }
    let mut best = 0u64;
    let mut perm = order.clone();
    permute_classes(adj, &classes, 0, &mut perm, &mut best);
    // Mix in the order so graphs of different sizes never collide.
    best ^ ((n as u64) << 58)
}

fn permute_classes(adj: &[u32], classes: &[(usize, usize)], ci: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if ci == classes.len() {
        let n = perm.len();
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1) as u64;
            }
        }
        *best = (*best).max(code);
        return;
    }
    let (s, e) = classes[ci];
    heap_permute(adj, classes, ci, perm, s, e - s, best);
}

fn heap_permute(
    adj: &[u32],
    classes: &[(usize, usize)],
    ci: usize,
    perm: &mut Vec<usize>,
    s: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_classes(adj, classes, ci + 1, perm, best);
        return;
    }
    for i in 0..k {
        heap_permute(adj, classes, ci, perm, s, k - 1, best);
        if i + 1 < k {
            if k % 2 == 0 {
                perm.swap(s + i, s + k - 1);
            } else {
                perm.swap(s, s + k - 1);
            }
        }
    }
}

/// Every connected graph on `n` vertices, one per isomorphism class.
///
/// Connected graphs of order `n` arise from those of order `n - 1` by adding
/// a vertex with a non-empty neighbourhood, since every connected graph has a
/// vertex whose removal leaves it connected.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_ORDER, "enumeration is limited to {} vertices", MAX_ENUMERATION_ORDER);
    if n == 0 {
        return Vec::new();
    }
    let mut layer: Vec<Vec<u32>> = vec![vec![0]];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &layer {
            for nb in 1u32..(1 << k) {
                let mut grown = adj.clone();
                for (w, m) in grown.iter_mut().enumerate() {
                    if nb & (1 << w) != 0 {
                        *m |= 1 << k;
                    }
                }
                grown.push(nb);
                if seen.insert(canonical_code_masks(&grown)) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|a| from_masks(a)).collect()
}

/// All connected graphs with between `lo` and `hi` vertices.
pub fn connected_graphs_between(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(connected_graphs).collect()
}

/// A random connected graph: a random tree plus each other pair with
/// probability `p`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let tree: HashSet<(usize, usize)> = edges.iter().copied().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// A random maximal planar graph on `n >= 3` vertices, built by inserting
/// vertices into random triangular faces followed by random edge flips.
pub fn random_triangulation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 3);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    let mut adj = vec![HashSet::new(); n];
    let link = |adj: &mut Vec<HashSet<usize>>, a: usize, b: usize| {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    link(&mut adj, 0, 1);
    link(&mut adj, 1, 2);
    link(&mut adj, 0, 2);
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([a, c, v]);
        link(&mut adj, a, v);
        link(&mut adj, b, v);
        link(&mut adj, c, v);
    }
    for _ in 0..4 * n {
        let i = rng.gen_range(0..faces.len());
        let f = faces[i];
        let k = rng.gen_range(0..3);
        let (a, b, c) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
        let Some(j) = (0..faces.len()).find(|&j| j != i && faces[j].contains(&a) && faces[j].contains(&b))
        else {
            continue;
        };
        let d = faces[j].iter().copied().find(|&x| x != a && x != b).unwrap();
        if d == c || adj[c].contains(&d) || adj[a].len() <= 3 || adj[b].len() <= 3 {
            continue;
        }
        adj[a].remove(&b);
        adj[b].remove(&a);
        link(&mut adj, c, d);
        faces[i] = [a, c, d];
        faces[j] = [b, c, d];
    }
    let mut edges = Vec::new();
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// A random connected planar graph: a random triangulation with each edge
/// kept with probability `keep`, plus a spanning tree so it stays connected.
pub fn random_planar<R: Rng + ?Sized>(rng: &mut R, n: usize, keep: f64) -> Graph {
    if n < 3 {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        return Graph::from_edges(n, &edges).unwrap();
    }
    let t = random_triangulation(rng, n);
    let mut all = t.edges();
    all.shuffle(rng);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let z = p[y];
            p[y] = r;
            y = z;
        }
        r
    }
    let mut chosen = Vec::new();
    let mut rest = Vec::new();
    for (u, v) in all {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            chosen.push((u, v));
        } else {
            rest.push((u, v));
        }
    }
    for e in rest {
        if rng.gen_bool(keep) {
            chosen.push(e);
        }
    }
    Graph::from_edges(n, &chosen).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_match_known_sequence() {
        // Connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112, 853.
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).len(), c, "n = {}", i + 1);
        }
    }

    #[test]
    fn canonical_code_is_invariant() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }

    #[test]
    fn random_graphs_are_connected_and_sparse_enough() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..30 {
            let g = random_connected(&mut rng, n, 0.2);
            assert!(g.is_connected());
            let t = random_triangulation(&mut rng, n);
            assert_eq!(t.m(), 3 * n - 6);
            let p = random_planar(&mut rng, n, 0.5);
            assert!(p.is_connected());
            assert!(p.m() <= 3 * n - 6);
        }
    }
}
