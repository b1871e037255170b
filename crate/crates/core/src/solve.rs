//! Result and budget types shared by every exact solver.

use serde::Serialize;

/// Default node budget per solve.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Search-node counter with a hard limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// Charge one node. Returns `false` once the limit is exceeded.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }

    /// Nodes still available.
    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    /// Budget for a sub-solve, capped at `cap` nodes.
    pub fn sub(&self, cap: u64) -> Budget {
        Budget::new(self.remaining().min(cap))
    }

    /// Charge nodes spent by a sub-solve.
    pub fn charge(&mut self, other: &Budget) {
        self.used += other.used.min(other.limit);
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Exact,
    /// The optimum lies in `lower..=upper`.
    BoundsOnly {
        lower: usize,
        upper: usize,
    },
}

/// Outcome of an exact solver.
///
/// For minimisation problems the witness achieves `upper` (and `value`);
/// for maximisation problems it achieves `lower` (and `value`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub status: Status,
    pub nodes: u64,
}

impl<W> SolveResult<W> {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// `(lower, upper)` bounds on the optimum.
    pub fn bounds(&self) -> (usize, usize) {
        match self.status {
            Status::Exact => (self.value, self.value),
            Status::BoundsOnly { lower, upper } => (lower, upper),
        }
    }

    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> SolveResult<V> {
        SolveResult {
            value: self.value,
            witness: f(self.witness),
            status: self.status,
            nodes: self.nodes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_counts() {
        let mut b = Budget::new(2);
        assert!(b.tick());
        assert!(b.tick());
        assert!(!b.tick());
        assert!(b.exhausted());
        assert_eq!(b.remaining(), 0);
    }

    #[test]
    fn status_json() {
        assert_eq!(serde_json::to_string(&Status::Exact).unwrap(), "\"Exact\"");
        let s = Status::BoundsOnly { lower: 2, upper: 3 };
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"BoundsOnly":{"lower":2,"upper":3}}"#
        );
    }
}
