//! Planarity testing and plane embeddings.
//!
//! Each biconnected block is embedded by the path-addition method of
//! Demoucron, Malgrange and Pertuiset; block rotations are then concatenated
//! at cut vertices and the faces traced from the combined rotation system.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rotation system of a connected plane graph together with its faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneEmbedding {
    /// Cyclic order of the neighbours around each vertex.
    pub rotation: Vec<Vec<usize>>,
    /// Boundary walks; consecutive entries (cyclically) are the darts of the face.
    pub faces: Vec<Vec<usize>>,
    pub outer_face: usize,
}

impl PlaneEmbedding {
    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted vertex set of every face.
    pub fn face_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .map(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect()
    }

    /// Euler's formula and the one-face-per-dart condition.
    pub fn is_consistent(&self) -> bool {
        let n = self.n() as i64;
        let m = self.m() as i64;
        let f = self.faces.len() as i64;
        if n == 1 {
            return m == 0 && f == 1;
        }
        let mut darts = HashSet::new();
        for face in &self.faces {
            for i in 0..face.len() {
                if !darts.insert((face[i], face[(i + 1) % face.len()])) {
                    return false;
                }
            }
        }
        darts.len() as i64 == 2 * m && n - m + f == 2
    }
}

/// Biconnected blocks as edge lists.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && biconnected_blocks(g).len() == 1
}

/// Faces (as vertex cycles over local ids) of a biconnected block with at
/// least three vertices, or `None` when the block is not planar.
fn embed_block(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let (u0, v0) = edges[0];
    // Initial cycle: the edge plus a shortest path avoiding it.
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([u0]);
    prev[u0] = u0;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if prev[y] == usize::MAX && key(x, y) != key(u0, v0) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![v0];
    let mut cur = v0;
    while cur != u0 {
        cur = prev[cur];
        cycle.push(cur);
    }
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < edges.len() {
        // Fragments: (attachments, path between two attachments).
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for &(u, v) in edges {
            if in_h[u] && in_h[v] && !h_edges.contains(&key(u, v)) {
                fragments.push((vec![u, v], vec![u, v]));
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0;
        for s in 0..n {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let mut members = vec![s];
            comp[s] = ncomp;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for &y in &adj[x] {
                    if !in_h[y] && comp[y] == usize::MAX {
                        comp[y] = ncomp;
                        members.push(y);
                    }
                }
            }
            let mut attachments: Vec<usize> =
                members.iter().flat_map(|&x| adj[x].iter().copied()).filter(|&y| in_h[y]).collect();
            attachments.sort_unstable();
            attachments.dedup();
            let path = fragment_path(&adj, &in_h, &comp, ncomp, &attachments);
            fragments.push((attachments, path));
            ncomp += 1;
        }
        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut mark = vec![false; n];
                for &x in f {
                    mark[x] = true;
                }
                mark
            })
            .collect();
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|(att, _)| {
                (0..faces.len()).filter(|&fi| att.iter().all(|&a| face_sets[fi][a])).collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let chosen = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let fi = admissible[chosen][0];
        let path = fragments[chosen].1.clone();
        let (f1, f2) = split_face(&faces[fi], &path);
        faces[fi] = f1;
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &x in &path {
            in_h[x] = true;
        }
    }
    Some(faces)
}

/// A path through component `c` joining two distinct attachments.
fn fragment_path(
    adj: &[Vec<usize>],
    in_h: &[bool],
    comp: &[usize],
    c: usize,
    attachments: &[usize],
) -> Vec<usize> {
    let a1 = attachments[0];
    let start = adj[a1].iter().copied().find(|&w| !in_h[w] && comp[w] == c).expect("attachment has a neighbour in its fragment");
    let mut prev = vec![usize::MAX; adj.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&a2) = adj[x].iter().find(|&&y| in_h[y] && y != a1) {
            let mut inner = vec![x];
            let mut cur = x;
            while cur != start {
                cur = prev[cur];
                inner.push(cur);
            }
            inner.reverse();
            let mut path = vec![a1];
            path.extend(inner);
            path.push(a2);
            return path;
        }
        for &y in &adj[x] {
            if !in_h[y] && comp[y] == c && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    panic!("fragment of a biconnected block has a single attachment")
}

/// Splits a face cycle along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let x = path[0];
    let y = *path.last().unwrap();
    let i = face.iter().position(|&w| w == x).unwrap();
    let j = face.iter().position(|&w| w == y).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(interior.iter().rev());
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

/// Traces the faces of a rotation system.
pub fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rotation.len();
    if n == 1 {
        return vec![vec![0]];
    }
    let succ = |v: usize, u: usize| -> usize {
        let r = &rotation[v];
        let p = r.iter().position(|&w| w == u).expect("dart in rotation");
        r[(p + 1) % r.len()]
    };
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for u in 0..n {
        for &v in &rotation[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                face.push(a);
                let c = succ(b, a);
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    faces
}

/// A plane embedding of a connected graph, or `None` when it is not planar.
pub fn planar_embed(g: &Graph) -> Result<Option<PlaneEmbedding>> {
    g.require_connected()?;
    let n = g.n();
    if g.m() > 3 * n.saturating_sub(2) && n >= 3 {
        return Ok(None);
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).unwrap();
        let local_edges: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (local(u), local(v))).collect();
        let Some(faces) = embed_block(verts.len(), &local_edges) else {
            return Ok(None);
        };
        let mut next: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
        for f in &faces {
            let k = f.len();
            for t in 0..k {
                let (u, v, w) = (f[t], f[(t + 1) % k], f[(t + 2) % k]);
                next[v].push((u, w));
            }
        }
        for (lv, pairs) in next.iter().enumerate() {
            let start = pairs.iter().map(|p| p.0).min().unwrap();
            let mut cur = start;
            let mut order = Vec::with_capacity(pairs.len());
            loop {
                order.push(verts[cur]);
                cur = pairs.iter().find(|p| p.0 == cur).expect("rotation is a permutation").1;
                if cur == start {
                    break;
                }
            }
            assert_eq!(order.len(), pairs.len(), "rotation at a block vertex is one cycle");
            rotation[verts[lv]].extend(order);
        }
    }
    let faces = trace_faces(&rotation);
    let outer_face = (0..faces.len()).max_by_key(|&i| (faces[i].len(), std::cmp::Reverse(i))).unwrap_or(0);
    let e = PlaneEmbedding { rotation, faces, outer_face };
    if !e.is_consistent() {
        return Err(Error::Invariant("traced embedding violates Euler's formula".into()));
    }
    Ok(Some(e))
}

/// Planarity of a graph of any connectivity.
pub fn is_planar(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let h = g.induced_subgraph(c);
        matches!(planar_embed(&h), Ok(Some(_)))
    })
}

/// Graph on the vertices and faces of an embedding; face `i` is vertex
/// `first_face + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateGraph {
    pub graph: Graph,
    pub first_face: usize,
}

impl IntermediateGraph {
    pub fn is_face_vertex(&self, x: usize) -> bool {
        x >= self.first_face
    }
}

pub fn intermediate_graph(e: &PlaneEmbedding) -> IntermediateGraph {
    let n = e.n();
    let mut edges = Vec::new();
    for (u, r) in e.rotation.iter().enumerate() {
        for &v in r {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    for (i, f) in e.face_vertex_sets().into_iter().enumerate() {
        for v in f {
            edges.push((v, n + i));
        }
    }
    let graph = Graph::from_edges(n + e.faces.len(), &edges).expect("valid intermediate edges");
    IntermediateGraph { graph, first_face: n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_examples() {
        let e = planar_embed(&complete(4)).unwrap().unwrap();
        assert_eq!(e.faces.len(), 4);
        assert!(planar_embed(&complete(5)).unwrap().is_none());
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        assert!(planar_embed(&Graph::from_edges(6, &edges).unwrap()).unwrap().is_none());
        assert_eq!(planar_embed(&Graph::new(2)), Err(Error::Disconnected));
    }

    #[test]
    fn intermediate_graph_sizes() {
        let tri = intermediate_graph(&planar_embed(&cycle(3)).unwrap().unwrap());
        assert_eq!((tri.graph.n(), tri.graph.m()), (5, 9));
        let c4 = intermediate_graph(&planar_embed(&cycle(4)).unwrap().unwrap());
        assert_eq!((c4.graph.n(), c4.graph.m()), (6, 12));
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let e = intermediate_graph(&planar_embed(&k2).unwrap().unwrap());
        assert_eq!((e.graph.n(), e.graph.m()), (3, 3));
        assert!(is_planar(&e.graph));
    }

    #[test]
    fn cut_vertices_and_bridges() {
        // Two triangles sharing vertex 2, plus a pendant path.
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)]).unwrap();
        let e = planar_embed(&g).unwrap().unwrap();
        assert!(e.is_consistent());
        assert_eq!(e.faces.len(), 3);
        assert_eq!(biconnected_blocks(&g).len(), 4);
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(planar_embed(&Graph::from_edges(10, &edges).unwrap()).unwrap().is_none());
    }
}
