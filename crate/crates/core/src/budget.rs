//! Search budgets. `TRIHOM_BUDGET` overrides the defaults.

use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_NODES: u64 = 100_000_000;
pub const DEFAULT_FAMILY_MEMBERS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Backtracking nodes a single search may visit.
    pub search_nodes: u64,
    /// Members a single branching transform may produce.
    pub family_members: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            search_nodes: DEFAULT_SEARCH_NODES,
            family_members: DEFAULT_FAMILY_MEMBERS,
        }
    }
}

impl Budget {
    /// Defaults, with both limits replaced by `TRIHOM_BUDGET` when it parses.
    pub fn from_env() -> Budget {
        match std::env::var("TRIHOM_BUDGET").ok().and_then(|s| s.trim().parse::<u64>().ok()) {
            Some(b) => Budget {
                search_nodes: b,
                family_members: usize::try_from(b).unwrap_or(usize::MAX),
            },
            None => Budget::default(),
        }
    }

    pub fn with_nodes(nodes: u64) -> Budget {
        Budget {
            search_nodes: nodes,
            ..Budget::default()
        }
    }
}

/// Node counter for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Meter {
    pub(crate) fn new(limit: u64, what: &'static str) -> Meter {
        Meter { used: 0, limit, what }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget(format!("{} exceeded {} nodes", self.what, self.limit)))
        } else {
            Ok(())
        }
    }
}

/// Fails when a family grew beyond the member budget.
pub(crate) fn check_family(len: usize, budget: &Budget, what: &str) -> Result<()> {
    if len > budget.family_members {
        Err(Error::Budget(format!(
            "{what} produced more than {} instances",
            budget.family_members
        )))
    } else {
        Ok(())
    }
}
