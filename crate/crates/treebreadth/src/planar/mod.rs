//! Tree-breadth one on planar graphs.
//!
//! The input is split into atoms along clique minimal separators. Each prime
//! atom is shrunk by local reductions around leaf-vertices until it becomes
//! small or has no leaf-vertex; the answer for the last graph is lifted back
//! step by step into a star-decomposition of the atom.

pub mod adjacency;
pub mod embedding;
pub mod leaf;
pub mod machine;
mod replay;
pub mod separator;
pub(crate) mod work;

pub use embedding::{is_planar, planar_embed, PlaneEmbedding};
pub use leaf::{find_leaf_vertex, two_bag_star, LeafKind, LeafVertex};
pub use machine::{Outcome, Step, StepLabel, StepTrace, Transformation};
pub use separator::make_separator_cycle;

use crate::chordal;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, Parameter};

#[derive(Clone, Debug)]
pub enum PlanarAnswer {
    /// A star-decomposition of the input and the trace of every atom.
    Yes { decomposition: Decomposition, traces: Vec<StepTrace> },
    /// Traces up to and including the first rejected atom.
    No { traces: Vec<StepTrace> },
}

impl PlanarAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, PlanarAnswer::Yes { .. })
    }

    pub fn decomposition(&self) -> Option<&Decomposition> {
        match self {
            PlanarAnswer::Yes { decomposition, .. } => Some(decomposition),
            PlanarAnswer::No { .. } => None,
        }
    }

    pub fn traces(&self) -> &[StepTrace] {
        match self {
            PlanarAnswer::Yes { traces, .. } | PlanarAnswer::No { traces } => traces,
        }
    }
}

/// Decides one prime atom, returning its trace and, on success, a
/// star-decomposition over the atom's own ids.
fn decide_atom(h: &Graph) -> Result<(StepTrace, Option<Decomposition>)> {
    if h.n() < machine::SMALL_ORDER {
        let d = oracle::decomposition_within(h, Parameter::TreeBreadth, 1)?;
        let outcome = Outcome::Small { yes: d.is_some() };
        let trace = StepTrace { atom: (0..h.n()).collect(), n: h.n(), m: h.m(), steps: Vec::new(), outcome };
        return Ok((trace, d.map(|d| d.reduce_to_star(h)).transpose()?));
    }
    let run = machine::run(h)?;
    if !run.trace.outcome.is_yes() {
        return Ok((run.trace, None));
    }
    let d = replay::replay(&run)?;
    if !d.has_breadth_one(h) {
        return Err(Error::Replay("lifted decomposition has an undominated bag".into()));
    }
    let d = d.reduce_to_star(h)?;
    Ok((run.trace, Some(d)))
}

/// Decides whether a connected planar graph has tree-breadth one.
pub fn recognize_planar_tb1(g: &Graph) -> Result<PlanarAnswer> {
    g.require_connected()?;
    if !is_planar(g) {
        return Err(Error::NotPlanar);
    }
    let atoms = chordal::atoms(g)?;
    let mut parts = Vec::with_capacity(atoms.atoms.len());
    let mut traces = Vec::with_capacity(atoms.atoms.len());
    for atom in &atoms.atoms {
        let h = g.induced_subgraph(atom);
        let (mut trace, d) = decide_atom(&h)?;
        trace.atom = atom.clone();
        traces.push(trace);
        match d {
            Some(mut d) => {
                d.map_vertices(atom);
                parts.push(d);
            }
            None => return Ok(PlanarAnswer::No { traces }),
        }
    }
    let mut d = chordal::glue_atom_decompositions(&atoms, parts)?;
    d.reduce();
    Ok(PlanarAnswer::Yes { decomposition: d, traces })
}
