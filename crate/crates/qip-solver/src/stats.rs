use std::time::Duration;

/// Counters accumulated over both search phases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_visited: u64,
    /// Sibling subtrees skipped thanks to a strategic-copy certificate.
    pub scp_prunes: u64,
    /// BoundUpdate effects recorded by the recycle walk.
    pub scp_bound_updates: u64,
    /// Nodes where a monotone variable forced its value (one sibling skipped).
    pub mono_prunes: u64,
    pub leaves_evaluated: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes_visited += other.nodes_visited;
        self.scp_prunes += other.scp_prunes;
        self.scp_bound_updates += other.scp_bound_updates;
        self.mono_prunes += other.mono_prunes;
        self.leaves_evaluated += other.leaves_evaluated;
        self.elapsed += other.elapsed;
    }
}
