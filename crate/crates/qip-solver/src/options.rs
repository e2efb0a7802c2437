use std::time::Duration;

use thiserror::Error;

/// Which phases strategic copy-pruning runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScpMode {
    Off,
    FeasibilityOnly,
    OptimizationOnly,
    Both,
}

impl ScpMode {
    pub fn in_feasibility(self) -> bool {
        matches!(self, ScpMode::FeasibilityOnly | ScpMode::Both)
    }

    pub fn in_optimization(self) -> bool {
        matches!(self, ScpMode::OptimizationOnly | ScpMode::Both)
    }
}

/// Branch value ordering at a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveOrdering {
    /// Threat-score ordering: universal nodes take the more threatening
    /// value first, existential nodes the cheaper one; ties prefer 0.
    Default,
    /// Always 0 then 1.
    Naive,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OptionsError {
    #[error("node limit must be positive")]
    ZeroNodeLimit,
    #[error("time limit must be positive")]
    ZeroTimeLimit,
}

/// Search configuration. The ablation grid of the benchmark harness spans
/// `mono` and `scp`; the remaining knobs stay at their defaults there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Exploit monotone variables (forced values at both player kinds).
    pub mono: bool,
    pub scp: ScpMode,
    pub move_ordering: MoveOrdering,
    /// Total node budget across both phases.
    pub node_limit: Option<u64>,
    /// Wall-clock budget across both phases.
    pub time_limit: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        // Monotone exploitation plus SCP in the optimization phase is the
        // best-performing configuration; SCP during the feasibility phase
        // costs average time, so it is opt-in.
        SearchOptions {
            mono: true,
            scp: ScpMode::OptimizationOnly,
            move_ordering: MoveOrdering::Default,
            node_limit: None,
            time_limit: None,
        }
    }
}

impl SearchOptions {
    pub fn validate(&self) -> Result<(), OptionsError> {
        if self.node_limit == Some(0) {
            return Err(OptionsError::ZeroNodeLimit);
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(OptionsError::ZeroTimeLimit);
        }
        Ok(())
    }
}
