use serde::Serialize;

use crate::graph::DEFAULT_ISO_BUDGET;
use crate::ring::{DEFAULT_HOM_CANDIDATE_CAP, DEFAULT_IDEAL_CAP};

/// Search limits shared by the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Backtracking nodes per graph isomorphism search.
    pub iso_nodes: usize,
    /// Maximum number of ideals enumerated per ring.
    pub ideal_cap: usize,
    /// Candidate image tuples per hom enumeration.
    pub hom_candidates: usize,
    /// Largest ring order included in hom searches.
    pub hom_order_cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            iso_nodes: DEFAULT_ISO_BUDGET,
            ideal_cap: DEFAULT_IDEAL_CAP,
            hom_candidates: DEFAULT_HOM_CANDIDATE_CAP,
            hom_order_cap: 16,
        }
    }
}
