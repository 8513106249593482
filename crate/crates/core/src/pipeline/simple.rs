use crate::budget::Budget;
use crate::error::{contract_err, input_err, Result};
use crate::instance::{Certificate, ListInstance};
use crate::recognize::simple_case_applies;

use super::{prepared, small_lists::solve_small_lists, validated};

/// Every vertex a strong loop and no symmetric triangle: with strong
/// representatives each list lies in some `S_x`, which has at most two
/// elements, so each member is a 2SAT instance.
pub fn solve_simple_2sat(inst: &ListInstance, budget: &Budget) -> Result<Option<Certificate>> {
    if !simple_case_applies(&inst.h) {
        return Err(input_err!("trigraph is not all strong loops with a triangle-free symmetric graph"));
    }
    for m in prepared(inst, budget, true, false)?.members {
        if m.lists.iter().any(|l| l.len() > 2) {
            return Err(contract_err!("strong representatives left a list with more than two entries"));
        }
        if let Some(f) = solve_small_lists(&m)? {
            return Ok(Some(validated(inst, f, "2SAT solver")?));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::trigraph::Trigraph;

    #[test]
    fn single_strong_loop() {
        let h = Trigraph::from_rows(&["1"]).unwrap();
        let b = Budget::default();
        let k3 = ListInstance::from_graph(h.clone(), &Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(solve_simple_2sat(&k3, &b).unwrap().is_some());
        let two = ListInstance::from_graph(h, &Graph::new(2));
        assert!(solve_simple_2sat(&two, &b).unwrap().is_none());
    }

    #[test]
    fn rejects_other_trigraphs() {
        let inst = ListInstance::from_graph(crate::trigraph::fixtures::split(), &Graph::new(1));
        assert!(solve_simple_2sat(&inst, &Budget::default()).is_err());
    }
}
