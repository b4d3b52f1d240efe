use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::GadgetMap;

/// Ground set `0..n` and ordered triples `(i, j, k)` asking for `j` to lie
/// between `i` and `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetweennessInstance {
    pub n: usize,
    pub triples: Vec<(usize, usize, usize)>,
}

impl BetweennessInstance {
    pub fn new(n: usize, triples: Vec<(usize, usize, usize)>) -> Result<Self> {
        for &(i, j, k) in &triples {
            if let Some(&x) = [i, j, k].iter().find(|&&x| x >= n) {
                return Err(Error::VertexOutOfRange(x));
            }
            if i == j || j == k || i == k {
                return Err(Error::Precondition(format!("triple ({}, {}, {}) repeats an element", i, j, k)));
            }
        }
        Ok(BetweennessInstance { n, triples })
    }

    /// `m` chained triples over `n >= 3` elements: the windows
    /// `(i, i+1, i+2)` from left to right, then reversed from right to left,
    /// and so on. The identity ordering satisfies all of them.
    pub fn chain(n: usize, m: usize) -> Self {
        assert!(n >= 3);
        let w = n - 2;
        let triples = (0..m)
            .map(|t| {
                let (pass, i) = (t / w, t % w);
                if pass % 2 == 0 {
                    (i, i + 1, i + 2)
                } else {
                    let i = w - 1 - i;
                    (i + 2, i + 1, i)
                }
            })
            .collect();
        BetweennessInstance { n, triples }
    }

    /// Reads a header `n m` followed by `m` lines `i j k`.
    pub fn parse(src: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: std::result::Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let nums = nums.map_err(|_| Error::Parse { line: idx + 1, msg: format!("bad number in {:?}", line) })?;
            rows.push((idx + 1, nums));
        }
        let Some((_, header)) = rows.first() else {
            return Err(Error::Parse { line: 1, msg: "missing header".into() });
        };
        if header.len() != 2 {
            return Err(Error::Parse { line: rows[0].0, msg: "header must be `n m`".into() });
        }
        let (n, m) = (header[0], header[1]);
        let mut triples = Vec::with_capacity(m);
        for (line, nums) in &rows[1..] {
            if nums.len() != 3 {
                return Err(Error::Parse { line: *line, msg: "expected three integers".into() });
            }
            triples.push((nums[0], nums[1], nums[2]));
        }
        if triples.len() != m {
            return Err(Error::Parse { line: 1, msg: format!("header announces {} triples, found {}", m, triples.len()) });
        }
        BetweennessInstance::new(n, triples)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.triples.len());
        for &(i, j, k) in &self.triples {
            out.push_str(&format!("{} {} {}\n", i, j, k));
        }
        out
    }

    /// First triple violated by `ordering`, a permutation listing the
    /// elements from first to last.
    pub fn violated_by(&self, ordering: &[usize]) -> Option<(usize, usize, usize)> {
        let mut pos = vec![usize::MAX; self.n];
        for (p, &x) in ordering.iter().enumerate() {
            pos[x] = p;
        }
        self.triples.iter().copied().find(|&(i, j, k)| {
            let (pi, pj, pk) = (pos[i], pos[j], pos[k]);
            !(pi < pj && pj < pk || pk < pj && pj < pi)
        })
    }
}

/// Vertex ids: `u_i = i`, `v_i = n + i`, and for triple `t` the four
/// vertices `a_t, b_t, c_t, d_t` at `2n + 4t ..`.
pub fn betweenness_graph(inst: &BetweennessInstance) -> (Graph, GadgetMap) {
    let n = inst.n;
    let mut roles = GadgetMap::new();
    let mut edges = Vec::new();
    for i in 0..n {
        roles.insert(format!("u{}", i), i);
        roles.insert(format!("v{}", i), n + i);
        edges.push((i, n + i));
        for l in i + 1..n {
            edges.push((i, l));
        }
    }
    for (t, &(i, j, k)) in inst.triples.iter().enumerate() {
        let base = 2 * n + 4 * t;
        let (a, b, c, d) = (base, base + 1, base + 2, base + 3);
        for (name, id) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            roles.insert(format!("{}{}", name, t), id);
        }
        edges.extend([(n + i, a), (a, b), (b, n + j), (n + j, c), (c, d), (d, n + k)]);
        for l in 0..n {
            if l != k {
                edges.extend([(a, l), (b, l)]);
            }
            if l != i {
                edges.extend([(c, l), (d, l)]);
            }
        }
    }
    let g = Graph::from_edges(2 * n + 4 * inst.triples.len(), &edges).expect("gadget edges are valid");
    (g, roles)
}

/// The path decomposition with one bag per element, in the order given.
pub fn betweenness_witness(inst: &BetweennessInstance, ordering: &[usize]) -> Result<Decomposition> {
    let n = inst.n;
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Precondition(format!("{:?} is not an ordering of 0..{}", ordering, n)));
    }
    if let Some((i, j, k)) = inst.violated_by(ordering) {
        return Err(Error::Precondition(format!("ordering violates triple ({}, {}, {})", i, j, k)));
    }
    let mut pos = vec![0; n];
    for (p, &x) in ordering.iter().enumerate() {
        pos[x] = p;
    }
    let mut bags: Vec<Vec<usize>> = ordering
        .iter()
        .map(|&x| (0..n).chain(std::iter::once(n + x)).collect())
        .collect();
    let span = |x: usize, y: usize| pos[x].min(pos[y])..=pos[x].max(pos[y]);
    for (t, &(i, j, k)) in inst.triples.iter().enumerate() {
        let base = 2 * n + 4 * t;
        for p in span(i, j) {
            bags[p].extend([base, base + 1]);
        }
        for p in span(j, k) {
            bags[p].extend([base + 2, base + 3]);
        }
    }
    Ok(Decomposition::path(bags))
}

pub fn solve_betweenness(inst: &BetweennessInstance) -> Result<Option<Vec<usize>>> {
    solve_betweenness_within(inst, 10)
}

/// Lexicographically first ordering satisfying every triple, by exhaustive
/// search over permutations in lexicographic order.
pub fn solve_betweenness_within(inst: &BetweennessInstance, limit: usize) -> Result<Option<Vec<usize>>> {
    if inst.n > limit {
        return Err(Error::OverLimit { n: inst.n, limit });
    }
    let mut perm: Vec<usize> = (0..inst.n).collect();
    loop {
        if inst.violated_by(&perm).is_none() {
            return Ok(Some(perm));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
