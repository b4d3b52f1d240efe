//! Reduction instances with named vertex roles and the witness
//! decompositions that certify their yes-instances.

mod ball;
mod betweenness;
mod sandwich;

use std::collections::BTreeMap;

pub use ball::{ball_augmentation, transfer_decomposition, Direction};
pub use betweenness::{
    betweenness_graph, betweenness_witness, solve_betweenness, solve_betweenness_within, BetweennessInstance,
};
pub use sandwich::{
    maximal_sandwich, sandwich_graph, sandwich_witness, solve_sandwich, SandwichInstance, SANDWICH_LIMIT,
};

/// Role names of the generated vertices, such as `u3`, `a1` or `s_0_5`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GadgetMap {
    roles: BTreeMap<String, usize>,
}

impl GadgetMap {
    pub fn new() -> Self {
        GadgetMap::default()
    }

    /// Registers a role; panics on a duplicate name, which would be a
    /// construction bug.
    pub fn insert(&mut self, role: impl Into<String>, vertex: usize) {
        let role = role.into();
        let old = self.roles.insert(role.clone(), vertex);
        assert!(old.is_none(), "role {} assigned twice", role);
    }

    pub fn get(&self, role: &str) -> Option<usize> {
        self.roles.get(role).copied()
    }

    /// Vertex of a role known to exist.
    pub fn id(&self, role: &str) -> usize {
        self.roles[role]
    }

    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.roles.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Whether no two roles share a vertex.
    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<usize> = self.roles.values().copied().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// One `role vertex` line per role, sorted by role name.
    pub fn to_text(&self) -> String {
        self.roles.iter().map(|(k, v)| format!("{} {}\n", k, v)).collect()
    }
}
