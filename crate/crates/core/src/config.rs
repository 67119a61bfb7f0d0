use serde::{Deserialize, Serialize};
use std::time::Duration;

pub const DEFAULT_MAX_VERTICES: usize = 20_000;
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;
pub const DEFAULT_TIME_BUDGET_SECS: u64 = 600;

/// Resource limits shared by enumeration, graph building and search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_vertices: usize,
    pub node_budget: u64,
    pub time_budget_secs: u64,
    /// Report the lexicographically smallest maximum clique as the witness.
    pub deterministic: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_MAX_VERTICES,
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget_secs: DEFAULT_TIME_BUDGET_SECS,
            deterministic: true,
        }
    }
}

impl Limits {
    pub fn time_budget(&self) -> Duration {
        Duration::from_secs(self.time_budget_secs)
    }
}
