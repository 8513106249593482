use crate::budget::Budget;
use crate::error::Result;
use crate::instance::{Certificate, ListInstance};
use crate::network::Network;

/// Complete backtracking with arc-consistency propagation at every node.
pub fn solve_exact(inst: &ListInstance, surjective: bool, budget: &Budget) -> Result<Option<Certificate>> {
    Ok(Network::from_instance(inst).solve(surjective, budget)?.map(Certificate))
}
