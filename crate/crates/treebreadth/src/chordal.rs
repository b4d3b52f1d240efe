//! Chordal graphs, clique trees, clique-minimal-separator decomposition and
//! tree decompositions with prescribed bags.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::decomposition::{Decomposition, Shape};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets;

/// A vertex order, first eliminated first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
    pub is_perfect: bool,
}

/// Lex-BFS visiting order starting from the smallest vertex.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) if labels[v] > labels[b] => best = Some(v),
                _ => {}
            }
        }
        let v = best.expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Whether `order` (first eliminated first) is a perfect elimination ordering.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != p && !g.has_edge(p, w)) {
                return false;
            }
        }
    }
    true
}

pub fn chordality(g: &Graph) -> EliminationOrdering {
    let mut order = lex_bfs(g);
    order.reverse();
    let is_perfect = is_perfect_elimination(g, &order);
    EliminationOrdering { order, is_perfect }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_perfect
}

/// Maximal cliques of a chordal graph read off a perfect elimination
/// ordering, each sorted, in lexicographic order.
pub fn maximal_cliques_from_peo(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> =
                g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            sets::sorted(c)
        })
        .collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates.iter().enumerate().any(|(j, d)| {
            j != i && sets::is_subset(c, d) && (c.len() < d.len() || j < i)
        });
        if !dominated {
            out.push(c.clone());
        }
    }
    out.sort();
    out
}

pub fn maximal_cliques(h: &Graph) -> Result<Vec<Vec<usize>>> {
    let peo = chordality(h);
    if !peo.is_perfect {
        return Err(Error::NotChordal);
    }
    Ok(maximal_cliques_from_peo(h, &peo.order))
}

/// Tree decomposition whose bags are the maximal cliques, linked by a
/// maximum-weight spanning tree of the clique intersection graph.
pub fn clique_tree(h: &Graph) -> Result<Decomposition> {
    let cliques = maximal_cliques(h)?;
    Ok(tree_on_bags(cliques))
}

/// Links the given bags by a maximum-weight spanning tree where the weight of
/// a pair is the size of its intersection (Prim, ties to smaller indices).
pub(crate) fn tree_on_bags(bags: Vec<Vec<usize>>) -> Decomposition {
    let k = bags.len();
    let mut d = Decomposition::new(Shape::Tree);
    for b in &bags {
        d.add_bag(b.clone());
    }
    if k == 0 {
        return d;
    }
    let mut in_tree = vec![false; k];
    let mut best: Vec<(isize, usize)> = vec![(-1, usize::MAX); k];
    in_tree[0] = true;
    for j in 1..k {
        best[j] = (sets::intersection(&bags[0], &bags[j]).len() as isize, 0);
    }
    for _ in 1..k {
        let mut pick = usize::MAX;
        for j in 0..k {
            if !in_tree[j] && (pick == usize::MAX || best[j].0 > best[pick].0) {
                pick = j;
            }
        }
        in_tree[pick] = true;
        d.add_edge(best[pick].1, pick);
        for j in 0..k {
            if !in_tree[j] {
                let w = sets::intersection(&bags[pick], &bags[j]).len() as isize;
                if w > best[j].0 {
                    best[j] = (w, pick);
                }
            }
        }
    }
    d.edges.sort_unstable();
    d
}

/// Clique-minimal-separator decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomDecomposition {
    /// Vertex sets of the atoms, each sorted.
    pub atoms: Vec<Vec<usize>>,
    /// Clique minimal separators; `separators[i]` splits atom `i` off.
    pub separators: Vec<Vec<usize>>,
    /// `(i, j, s)`: atom `i` is glued to the later atom `j` along
    /// `separators[s]`.
    pub glue: Vec<(usize, usize, usize)>,
}

/// Minimal elimination ordering and minimal triangulation by MCS-M.
/// Returns (order first eliminated first, triangulation, generators) where
/// a generator is a vertex whose higher neighbourhood in the triangulation is
/// a minimal separator of it.
pub fn mcs_m(g: &Graph) -> (Vec<usize>, Graph, Vec<usize>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut mcs_order = Vec::with_capacity(n);
    let mut fill: Vec<(usize, usize)> = Vec::new();
    let mut generators = Vec::new();
    let mut prev: isize = -1;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], Reverse(u)))
            .expect("unnumbered vertex");
        if (weight[v] as isize) <= prev {
            generators.push(v);
        }
        prev = weight[v] as isize;
        numbered[v] = true;
        mcs_order.push(v);
        // Bottleneck search: key[u] is the smallest achievable maximum weight
        // of internal vertices on a path from v to u through unnumbered
        // vertices.
        let mut key: Vec<isize> = vec![isize::MAX; n];
        let mut heap = BinaryHeap::new();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                key[u] = -1;
                heap.push(Reverse((-1isize, u)));
            }
        }
        while let Some(Reverse((k, u))) = heap.pop() {
            if k > key[u] {
                continue;
            }
            let through = k.max(weight[u] as isize);
            for &w in g.neighbors(u) {
                if !numbered[w] && through < key[w] {
                    key[w] = through;
                    heap.push(Reverse((through, w)));
                }
            }
        }
        for u in 0..n {
            if !numbered[u] && key[u] < weight[u] as isize {
                weight[u] += 1;
                if !g.has_edge(u, v) {
                    fill.push((u, v));
                }
            }
        }
    }
    let h = g.with_edges(&fill).expect("fill edges are valid");
    let mut order = mcs_order;
    order.reverse();
    (order, h, generators)
}

pub fn atoms(g: &Graph) -> Result<AtomDecomposition> {
    g.require_connected()?;
    let n = g.n();
    let (order, h, generators) = mcs_m(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut gens = generators;
    gens.sort_by_key(|&x| pos[x]);
    let mut alive = vec![true; n];
    let mut atoms = Vec::new();
    let mut separators = Vec::new();
    for x in gens {
        if !alive[x] {
            continue;
        }
        let sep: Vec<usize> =
            h.neighbors(x).iter().copied().filter(|&w| pos[w] > pos[x]).collect();
        if sep.is_empty() || !g.is_clique(&sep) || sep.iter().any(|&s| !alive[s]) {
            continue;
        }
        let mut blocked: Vec<bool> = alive.iter().map(|a| !a).collect();
        for &s in &sep {
            blocked[s] = true;
        }
        let (label, count) = g.component_labels(&blocked);
        if count < 2 {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&u| label[u] == label[x]).collect();
        for &u in &comp {
            alive[u] = false;
        }
        atoms.push(sets::union(&comp, &sep));
        separators.push(sep);
    }
    atoms.push((0..n).filter(|&u| alive[u]).collect());
    let mut glue = Vec::new();
    for (i, sep) in separators.iter().enumerate() {
        let j = (i + 1..atoms.len())
            .find(|&j| sets::is_subset(sep, &atoms[j]))
            .expect("separator survives in a later atom");
        glue.push((i, j, i));
    }
    Ok(AtomDecomposition { atoms, separators, glue })
}

/// A connected graph is prime when it has no clique separator.
pub fn is_prime(g: &Graph) -> Result<bool> {
    Ok(atoms(g)?.atoms.len() == 1)
}

/// Joins per-atom tree decompositions (over host ids) into one decomposition
/// of the host, linking along each separator two bags that contain it.
pub fn glue_atom_decompositions(
    atoms: &AtomDecomposition,
    parts: Vec<Decomposition>,
) -> Result<Decomposition> {
    assert_eq!(atoms.atoms.len(), parts.len());
    let mut out = Decomposition::new(Shape::Tree);
    let mut offsets = Vec::with_capacity(parts.len());
    for part in &parts {
        let base = out.bags.len();
        offsets.push(base);
        for bag in &part.bags {
            out.add_bag(bag.clone());
        }
        for &(a, b) in &part.edges {
            out.add_edge(base + a, base + b);
        }
    }
    for &(i, j, s) in &atoms.glue {
        let sep = &atoms.separators[s];
        let bi = parts[i].node_containing_all(sep);
        let bj = parts[j].node_containing_all(sep);
        match (bi, bj) {
            (Some(bi), Some(bj)) => out.add_edge(offsets[i] + bi, offsets[j] + bj),
            _ => {
                return Err(Error::InvalidDecomposition(format!(
                    "no bag holds separator {:?}",
                    sep
                )))
            }
        }
    }
    out.edges.sort_unstable();
    Ok(out)
}

/// Components of `g - s` whose neighbourhood is all of `s`.
pub fn full_components(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let s = sets::sorted(s.to_vec());
    g.components_without(&s)
        .into_iter()
        .filter(|c| g.neighborhood_of_set(c) == s)
        .collect()
}

pub fn is_minimal_separator(g: &Graph, s: &[usize]) -> bool {
    !s.is_empty() && full_components(g, s).len() >= 2
}

/// Tree decomposition whose bags are exactly `family`, if one exists.
/// Members must be pairwise incomparable.
pub fn constrained_bags(g: &Graph, family: &[Vec<usize>]) -> Result<Option<Decomposition>> {
    let fam: Vec<Vec<usize>> = family.iter().map(|s| sets::sorted(s.clone())).collect();
    for (i, a) in fam.iter().enumerate() {
        for (j, b) in fam.iter().enumerate() {
            if i != j && sets::is_subset(a, b) {
                return Err(Error::Containment(i, j));
            }
        }
        if let Some(&v) = a.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let mut extra = Vec::new();
    for set in &fam {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                extra.push((u, v));
            }
        }
    }
    let h = g.with_edges(&extra)?;
    let peo = chordality(&h);
    if !peo.is_perfect {
        return Ok(None);
    }
    let cliques = maximal_cliques_from_peo(&h, &peo.order);
    let mut wanted = fam.clone();
    wanted.sort();
    if cliques != wanted {
        return Ok(None);
    }
    Ok(Some(tree_on_bags(fam)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&complete(4)));
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&cycle(5)));
        assert!(is_chordal(&Graph::new(1)));
    }

    #[test]
    fn clique_tree_examples() {
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let d = clique_tree(&tree).unwrap();
        assert_eq!(d.bags, vec![vec![0, 1], vec![1, 2], vec![1, 3]]);
        assert_eq!(d.validate(&tree), Ok(()));
        assert_eq!(clique_tree(&complete(4)).unwrap().bags, vec![vec![0, 1, 2, 3]]);
        assert_eq!(clique_tree(&Graph::new(1)).unwrap().bags, vec![vec![0]]);
        // Gem: path 0-1-2-3 plus vertex 4 adjacent to all of it.
        let gem = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
            .unwrap();
        let d = clique_tree(&gem).unwrap();
        assert_eq!(d.bags, vec![vec![0, 1, 4], vec![1, 2, 4], vec![2, 3, 4]]);
        assert_eq!(d.validate(&gem), Ok(()));
        assert_eq!(clique_tree(&cycle(4)), Err(Error::NotChordal));
    }

    #[test]
    fn atom_examples() {
        let a = atoms(&cycle(4)).unwrap();
        assert_eq!(a.atoms, vec![vec![0, 1, 2, 3]]);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut a = atoms(&diamond).unwrap();
        a.atoms.sort();
        assert_eq!(a.atoms, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(a.separators, vec![vec![1, 2]]);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut a = atoms(&p3).unwrap();
        assert_eq!(a.separators, vec![vec![1]]);
        a.atoms.sort();
        assert_eq!(a.atoms, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(atoms(&Graph::new(2)), Err(Error::Disconnected));
    }

    #[test]
    fn constrained_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(constrained_bags(&p3, &[vec![0, 1], vec![1, 2]]).unwrap().is_some());
        let c4 = cycle(4);
        let d = constrained_bags(&c4, &[vec![0, 1, 3], vec![1, 2, 3]]).unwrap().unwrap();
        assert_eq!(d.validate(&c4), Ok(()));
        let c6 = cycle(6);
        let fam = vec![vec![5, 0, 1], vec![1, 2, 3], vec![3, 4, 5]];
        assert_eq!(constrained_bags(&c6, &fam).unwrap(), None);
        assert_eq!(
            constrained_bags(&p3, &[vec![0, 1], vec![0, 1, 2]]),
            Err(Error::Containment(0, 1))
        );
    }

    #[test]
    fn minimal_separators() {
        let c6 = cycle(6);
        assert!(is_minimal_separator(&c6, &[0, 3]));
        assert!(is_minimal_separator(&c6, &[0, 2]));
        assert!(!is_minimal_separator(&c6, &[0, 1]));
    }
}
