//! The recursive case analysis on a prime planar graph, unrolled into a loop.
//!
//! Every reduction step turns the current graph into a smaller prime planar
//! graph (or one with more edges) of tree-breadth one exactly when the current
//! one has it. Each step stores a snapshot of the graph it started from so
//! that the certificate can be rebuilt backwards.

use crate::chordal;
use crate::decomposition::{Decomposition, Shape};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, Parameter};
use crate::sets;

use super::embedding;
use super::leaf::{self, LeafKind, LeafVertex};
use super::separator;
use super::work::Work;

/// Graphs below this order are decided by the exact oracle.
pub const SMALL_ORDER: usize = 7;

/// Which reduction a step applied, with the label of the matching case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepLabel {
    /// Remove a Type 1 leaf and shrink its neighbourhood path.
    Type1,
    /// Remove a Type 2 or 3 leaf whose removal keeps the graph prime.
    PrimeEasy,
    /// Join the leaf to both common neighbours of its path ends.
    PrimeDifficult,
    /// Join a Type 3 leaf to the middle of its path.
    AddEdgeBv,
    /// Contract the leaf into an end of its path.
    ContractVa,
    /// Attach the middle vertex to a neighbour and contract that edge.
    ConnectB,
    /// Contract the middle vertex into its unique diamond apex.
    Diamond,
    /// Add a chord inside a separator of the middle vertex.
    FinalCase,
}

impl StepLabel {
    pub fn code(self) -> &'static str {
        match self {
            StepLabel::Type1 => "2",
            StepLabel::PrimeEasy => "4a",
            StepLabel::PrimeDifficult => "4b-ii",
            StepLabel::AddEdgeBv => "5",
            StepLabel::ContractVa => "5a",
            StepLabel::ConnectB => "5b-i",
            StepLabel::Diamond => "5b-ii",
            StepLabel::FinalCase => "5b-iii",
        }
    }
}

/// One elementary graph change. Contractions keep the id of `keep`, which
/// doubles as the id map of the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transformation {
    RemoveVertex(usize),
    ContractInterior { interior: Vec<usize>, x: usize, y: usize },
    AddEdge(usize, usize),
    ContractEdge { keep: usize, gone: usize },
}

#[derive(Clone, Debug)]
pub struct Step {
    pub label: StepLabel,
    pub leaf: LeafVertex,
    /// Path ends and middle in the roles used by the step; `a` and `c` may be
    /// swapped with respect to the leaf witness.
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub u: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub z: Option<usize>,
    pub transformations: Vec<Transformation>,
    pub(crate) before: Work,
}

/// How the loop stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// No leaf-vertex; a star-decomposition with one or two bags exists.
    TwoBags,
    /// No leaf-vertex and no star-decomposition with at most two bags.
    NoTwoBags,
    /// A Type 1 leaf whose closed neighbourhood plus dominator is everything.
    Type1Closed,
    /// The graph shrank below [`SMALL_ORDER`] and the oracle decided.
    Small { yes: bool },
    /// The ends of the leaf path have a single other common neighbour.
    OneCommonNeighbour,
    /// The separator required by the last case is missing or too small.
    NoSeparator,
}

impl Outcome {
    pub fn is_yes(self) -> bool {
        matches!(self, Outcome::TwoBags | Outcome::Type1Closed | Outcome::Small { yes: true })
    }
}

/// The record of one atom's run.
#[derive(Clone, Debug)]
pub struct StepTrace {
    /// Atom vertices in host ids; stable ids in the steps index this list.
    pub atom: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub steps: Vec<Step>,
    pub outcome: Outcome,
}

impl StepTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The bound `5n - m` on the number of steps.
    pub fn step_bound(&self) -> usize {
        (5 * self.n).saturating_sub(self.m)
    }

    pub fn labels(&self) -> Vec<StepLabel> {
        self.steps.iter().map(|s| s.label).collect()
    }
}

pub(crate) struct Run {
    pub trace: StepTrace,
    /// Final graph and, on a positive outcome, its decomposition.
    pub last: Work,
    pub decomposition: Option<Decomposition>,
}

enum Flow {
    Continue,
    Stop(Outcome, Option<Decomposition>),
}

fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

struct Machine {
    work: Work,
    steps: Vec<Step>,
}

impl Machine {
    fn check(&self) -> Result<()> {
        let c = self.work.compact();
        if !chordal::is_prime(&c.graph)? {
            return Err(invariant(format!("graph after {} steps is not prime", self.steps.len())));
        }
        if !embedding::is_planar(&c.graph) {
            return Err(invariant(format!("graph after {} steps is not planar", self.steps.len())));
        }
        Ok(())
    }

    fn record(&mut self, step: Step) {
        self.steps.push(step);
    }

    fn base(&self, leaf: &LeafVertex, label: StepLabel) -> Step {
        let (a, c) = (leaf.a(), leaf.c());
        let b = if leaf.kind == LeafKind::Type1 { leaf.path[1] } else { leaf.b() };
        Step {
            label,
            leaf: leaf.clone(),
            a,
            b,
            c,
            u: None,
            x: None,
            y: None,
            z: None,
            transformations: Vec::new(),
            before: self.work.clone(),
        }
    }

    fn small(&self) -> Result<Flow> {
        let c = self.work.compact();
        match oracle::decomposition_within(&c.graph, Parameter::TreeBreadth, 1)? {
            Some(mut d) => {
                d.map_vertices(&c.ids);
                Ok(Flow::Stop(Outcome::Small { yes: true }, Some(d)))
            }
            None => Ok(Flow::Stop(Outcome::Small { yes: false }, None)),
        }
    }

    fn iterate(&mut self) -> Result<Flow> {
        self.check()?;
        if self.work.len() < SMALL_ORDER {
            return self.small();
        }
        let c = self.work.compact();
        match leaf::find_leaf_vertex(&c.graph) {
            None => match leaf::two_bag_star(&c.graph) {
                Some(mut d) => {
                    d.map_vertices(&c.ids);
                    Ok(Flow::Stop(Outcome::TwoBags, Some(d)))
                }
                None => Ok(Flow::Stop(Outcome::NoTwoBags, None)),
            },
            Some(l) => {
                let l = l.relabel(&c.ids);
                match l.kind {
                    LeafKind::Type1 => self.type1(&l),
                    _ => self.type23(&l, true),
                }
            }
        }
    }

    fn type1(&mut self, l: &LeafVertex) -> Result<Flow> {
        let v = l.vertex;
        let d = l.dominator.ok_or_else(|| invariant("Type 1 leaf without dominator"))?;
        let mut closed = self.work.closed(v);
        sets::insert(&mut closed, d);
        if closed == self.work.vertices() {
            let mut dec = Decomposition::new(Shape::Tree);
            dec.add_bag(self.work.closed(v));
            let mut b2 = self.work.nbrs(v);
            sets::insert(&mut b2, d);
            dec.add_bag(b2);
            dec.add_edge(0, 1);
            return Ok(Flow::Stop(Outcome::Type1Closed, Some(dec)));
        }
        let mut step = self.base(l, StepLabel::Type1);
        let p = &l.path;
        let k = p.len() - 1;
        let (x, y) = (p[1], p[k - 1]);
        self.work.remove_vertex(v);
        for &w in &p[2..k - 1] {
            self.work.contract_into(x, w);
        }
        step.x = Some(x);
        step.y = Some(y);
        step.transformations = vec![
            Transformation::RemoveVertex(v),
            Transformation::ContractInterior { interior: p[1..k].to_vec(), x, y },
        ];
        self.record(step);
        Ok(Flow::Continue)
    }

    fn without(&self, v: usize) -> Work {
        let mut w = self.work.clone();
        w.remove_vertex(v);
        w
    }

    fn type23(&mut self, l: &LeafVertex, allow_clique_case: bool) -> Result<Flow> {
        let v = l.vertex;
        let minus = self.without(v);
        let c = minus.compact();
        if chordal::is_prime(&c.graph)? {
            return self.prime_case(l, &minus);
        }
        if !allow_clique_case {
            return Err(invariant("leaf found inside the last separator leaves a clique separator"));
        }
        let (a, b, cc) = (l.a(), l.b(), l.c());
        let u = minus
            .nbrs(b)
            .into_iter()
            .filter(|&u| u != a && u != cc)
            .find(|&u| {
                let mut blocked = vec![false; c.graph.n()];
                blocked[c.local[b]] = true;
                blocked[c.local[u]] = true;
                c.graph.component_labels(&blocked).1 > 1
            })
            .ok_or_else(|| invariant("no clique separator through the middle vertex"))?;
        self.clique_case(l, u)
    }

    fn prime_case(&mut self, l: &LeafVertex, minus: &Work) -> Result<Flow> {
        let v = l.vertex;
        let (a, b, c) = (l.a(), l.b(), l.c());
        let common = minus.common(a, c);
        let easy = common.len() >= 3 || {
            let cm = minus.compact();
            subsets(&common).into_iter().any(|j| {
                let mut s = j;
                s.push(a);
                s.push(c);
                chordal::is_minimal_separator(&cm.graph, &cm.to_local(&s))
            })
        };
        if easy {
            let mut step = self.base(l, StepLabel::PrimeEasy);
            self.work.remove_vertex(v);
            step.transformations = vec![Transformation::RemoveVertex(v)];
            self.record(step);
            return Ok(Flow::Continue);
        }
        match common.len() {
            1 => Ok(Flow::Stop(Outcome::OneCommonNeighbour, None)),
            2 => {
                let u = common
                    .iter()
                    .copied()
                    .find(|&w| w != b)
                    .ok_or_else(|| invariant("middle vertex missing among common neighbours"))?;
                let mut step = self.base(l, StepLabel::PrimeDifficult);
                step.u = Some(u);
                let mut t = vec![Transformation::AddEdge(v, u)];
                self.work.add_edge(v, u);
                if !self.work.has_edge(v, b) {
                    self.work.add_edge(v, b);
                    t.push(Transformation::AddEdge(v, b));
                }
                step.transformations = t;
                self.record(step);
                Ok(Flow::Continue)
            }
            k => Err(invariant(format!("path ends have {} common neighbours besides the leaf", k))),
        }
    }

    fn clique_case(&mut self, l: &LeafVertex, u: usize) -> Result<Flow> {
        let v = l.vertex;
        let b = l.b();
        if !self.work.has_edge(v, b) {
            let mut step = self.base(l, StepLabel::AddEdgeBv);
            step.u = Some(u);
            self.work.add_edge(v, b);
            step.transformations = vec![Transformation::AddEdge(v, b)];
            self.record(step);
            self.check()?;
        }
        let (mut a, mut c) = (l.a(), l.c());
        if self.work.has_edge(u, a) {
            std::mem::swap(&mut a, &mut c);
        }
        if self.work.has_edge(u, a) {
            return Err(invariant("separator vertex adjacent to both path ends"));
        }
        let w = &self.work;
        let au = w.common(a, u);
        let separated = w.has_edge(u, c) && {
            let cm = w.compact();
            let mut blocked = vec![false; cm.graph.n()];
            for &s in au.iter().chain([v, c].iter()) {
                blocked[cm.local[s]] = true;
            }
            let (label, _) = cm.graph.component_labels(&blocked);
            label[cm.local[a]] != label[cm.local[u]]
        };
        let mut step = self.base(l, StepLabel::ContractVa);
        step.a = a;
        step.c = c;
        step.u = Some(u);
        if !separated {
            self.work.contract_into(a, v);
            step.transformations = vec![Transformation::ContractEdge { keep: a, gone: v }];
            self.record(step);
            return Ok(Flow::Continue);
        }
        let nb = w.nbrs(b);
        if nb == sets::sorted(vec![v, a, c, u]) {
            let mut s = au.clone();
            sets::insert(&mut s, v);
            let cm = w.compact();
            let gs = separator::make_separator_cycle(&cm.graph, &cm.to_local(&s))
                .map_err(|e| invariant(format!("separator cycle for the middle vertex: {}", e)))?;
            let lb = cm.local[b];
            let x = gs
                .neighbors(lb)
                .iter()
                .map(|&t| cm.ids[t])
                .find(|&t| t != v && sets::contains(&s, t))
                .ok_or_else(|| invariant("middle vertex has no partner on the separator cycle"))?;
            let mut with = self.work.clone();
            with.add_edge(b, x);
            if !embedding::is_planar(&with.compact().graph) {
                return Err(invariant("joining the middle vertex breaks planarity"));
            }
            step.label = StepLabel::ConnectB;
            step.x = Some(x);
            self.work.add_edge(b, x);
            self.work.contract_into(x, b);
            step.transformations =
                vec![Transformation::AddEdge(b, x), Transformation::ContractEdge { keep: x, gone: b }];
            self.record(step);
            return Ok(Flow::Continue);
        }
        let apex = sets::intersection(&nb, &au);
        if !apex.is_empty() {
            if apex.len() != 1 {
                return Err(invariant("several diamond apexes"));
            }
            let x = apex[0];
            step.label = StepLabel::Diamond;
            step.x = Some(x);
            self.work.contract_into(x, b);
            step.transformations = vec![Transformation::ContractEdge { keep: x, gone: b }];
            self.record(step);
            return Ok(Flow::Continue);
        }
        self.final_case(step, &au)
    }

    fn final_case(&mut self, mut step: Step, au: &[usize]) -> Result<Flow> {
        let (a, b, c, v) = (step.a, step.b, step.c, step.leaf.vertex);
        let u = step.u.unwrap();
        let w = self.work.clone();
        let cm = w.compact();
        let mut wall = au.to_vec();
        for t in [a, c, u, v] {
            sets::insert(&mut wall, t);
        }
        let c0 = cm
            .graph
            .components_without(&cm.to_local(&wall))
            .into_iter()
            .map(|comp| cm.to_stable(&comp))
            .find(|comp| comp.iter().any(|&t| w.has_edge(t, b)))
            .ok_or_else(|| invariant("no component next to the middle vertex"))?;
        let n_c0 = neighbourhood(&w, &c0);
        let xs: Vec<usize> = sets::intersection(&n_c0, au).into_iter().filter(|&t| t != b).collect();
        if xs.len() != 1 {
            return Err(invariant(format!("expected one partner of the middle vertex, found {}", xs.len())));
        }
        let x = xs[0];
        step.x = Some(x);
        let s = w.common(b, x);
        let separates = s.len() >= 3 && {
            let mut blocked = vec![false; cm.graph.n()];
            for &t in &s {
                blocked[cm.local[t]] = true;
            }
            let (label, _) = cm.graph.component_labels(&blocked);
            label[cm.local[b]] != label[cm.local[x]]
        };
        if !separates {
            return Ok(Flow::Stop(Outcome::NoSeparator, None));
        }
        if let Some(l) = leaf::find_leaf_among(&cm.graph, &cm.to_local(&s)) {
            let l = l.relabel(&cm.ids);
            return match l.kind {
                LeafKind::Type1 => self.type1(&l),
                _ => self.type23(&l, false),
            };
        }
        let gs = separator::make_separator_cycle(&cm.graph, &cm.to_local(&s))
            .map_err(|e| invariant(format!("separator cycle in the last case: {}", e)))?;
        let order: Vec<usize> = separator::separator_cycle_order(&gs, &cm.to_local(&s))
            .ok_or_else(|| invariant("separator does not close into a cycle"))?
            .into_iter()
            .map(|t| cm.ids[t])
            .collect();
        let mut closed_c0 = n_c0.clone();
        for &t in &c0 {
            sets::insert(&mut closed_c0, t);
        }
        let (y, z) = chord_in_arc(&order, a, u, &c0, &closed_c0)
            .ok_or_else(|| invariant("no chord found on the separator cycle"))?;
        if w.has_edge(y, z) {
            return Err(invariant("chosen chord already present"));
        }
        step.label = StepLabel::FinalCase;
        step.y = Some(y);
        step.z = Some(z);
        self.work.add_edge(y, z);
        step.transformations = vec![Transformation::AddEdge(y, z)];
        self.record(step);
        Ok(Flow::Continue)
    }
}

/// On the cycle `order`, a vertex `y` of `c0` on an arc between `a` and `u`
/// together with an arc neighbour `z` outside `closed_c0`.
fn chord_in_arc(order: &[usize], a: usize, u: usize, c0: &[usize], closed_c0: &[usize]) -> Option<(usize, usize)> {
    let k = order.len();
    let ia = order.iter().position(|&t| t == a)?;
    let iu = order.iter().position(|&t| t == u)?;
    for dir in [1, k - 1] {
        let mut arc = vec![a];
        let mut i = ia;
        while i != iu {
            i = (i + dir) % k;
            arc.push(order[i]);
        }
        for j in 0..arc.len() {
            if !sets::contains(c0, arc[j]) {
                continue;
            }
            for t in [j.checked_sub(1), Some(j + 1)].into_iter().flatten() {
                if t < arc.len() && !sets::contains(closed_c0, arc[t]) {
                    return Some((arc[j], arc[t]));
                }
            }
        }
    }
    None
}

fn neighbourhood(w: &Work, set: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &s in set {
        for t in w.nbrs(s) {
            if !sets::contains(set, t) {
                sets::insert(&mut out, t);
            }
        }
    }
    out
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << items.len())
        .map(|mask| (0..items.len()).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect())
        .collect()
}

/// Runs the case analysis on a prime planar graph.
pub(crate) fn run(h: &Graph) -> Result<Run> {
    let mut m = Machine { work: Work::from_graph(h), steps: Vec::new() };
    let bound = (5 * h.n()).saturating_sub(h.m());
    let (outcome, decomposition) = loop {
        match m.iterate()? {
            Flow::Continue => {
                if m.steps.len() > bound {
                    return Err(invariant(format!("more than {} steps", bound)));
                }
            }
            Flow::Stop(o, d) => break (o, d),
        }
    };
    let trace = StepTrace { atom: (0..h.n()).collect(), n: h.n(), m: h.m(), steps: m.steps, outcome };
    Ok(Run { trace, last: m.work, decomposition })
}
