//! Wall-clock and work-count limits for the search procedures.
//!
//! Exhausting a guard is an error distinct from every algorithmic verdict:
//! a depth certificate is a proof, a guard trip is a resource failure, and
//! the two must never be conflated.

use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GuardError {
    #[error("node budget of {limit} exhausted")]
    NodeLimit { limit: u64 },
    #[error("wall-clock budget of {seconds} seconds exhausted")]
    Deadline { seconds: u64 },
}

/// A combined node-count and deadline budget, ticked once per unit of work.
#[derive(Debug)]
pub struct ResourceGuard {
    node_limit: Option<u64>,
    nodes: u64,
    deadline: Option<(Instant, u64)>,
}

impl ResourceGuard {
    /// A guard with no limits.
    pub fn unlimited() -> ResourceGuard {
        ResourceGuard {
            node_limit: None,
            nodes: 0,
            deadline: None,
        }
    }

    pub fn with_node_limit(mut self, limit: u64) -> ResourceGuard {
        self.node_limit = Some(limit);
        self
    }

    /// Starts the wall clock now; the budget is expressed in whole seconds.
    pub fn with_seconds(mut self, seconds: u64) -> ResourceGuard {
        self.deadline = Some((Instant::now() + Duration::from_secs(seconds), seconds));
        self
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Accounts one unit of work and fails if a budget is exhausted.
    pub fn tick(&mut self) -> Result<(), GuardError> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(GuardError::NodeLimit { limit });
            }
        }
        if let Some((deadline, seconds)) = self.deadline {
            // Checking the clock on every tick would dominate small steps.
            if self.nodes.is_multiple_of(1024) && Instant::now() > deadline {
                return Err(GuardError::Deadline { seconds });
            }
        }
        Ok(())
    }
}

impl Default for ResourceGuard {
    fn default() -> Self {
        ResourceGuard::unlimited()
    }
}
