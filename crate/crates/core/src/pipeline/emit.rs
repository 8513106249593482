use crate::budget::Budget;
use crate::error::{input_err, Result};
use crate::instance::{InstanceFamily, ListInstance};
use crate::recognize::{is_trigraph_tree, recognize_tree_like};
use crate::trigraph::Remap;

use super::tree::tree;
use super::tree_like::tree_like;
use super::{Ctx, Emitter};

/// Runs the tree or tree-like solver, but instead of solving the digraph
/// instances it bottoms out in, collects them as instances over `H⁻`. Parts
/// decided along the way contribute the empty instance when they succeed.
/// The input is solvable iff some member is.
pub fn reduce_to_digraph_family(inst: &ListInstance, budget: &Budget) -> Result<InstanceFamily> {
    let h = &inst.h;
    if !h.has_strong() {
        return Ok(InstanceFamily::single(inst.clone()));
    }
    let mut ctx = Ctx {
        budget: budget.clone(),
        emit: Some(Emitter::new(h)),
    };
    let top = Remap::identity(h.order());
    if is_trigraph_tree(h) {
        tree(&mut ctx, inst, &top)?;
    } else {
        let cert = recognize_tree_like(h, budget)?.ok_or_else(|| input_err!("trigraph is not tree-like"))?;
        tree_like(&mut ctx, inst, &cert, &top)?;
    }
    Ok(ctx.emit.take().map(|e| e.out).unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::brute_force;
    use crate::trigraph::fixtures::split;

    #[test]
    fn split_path() {
        let b = Budget::default();
        let p4 = ListInstance::from_graph(split(), &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]));
        let fam = reduce_to_digraph_family(&p4, &b).unwrap();
        let (minus, _) = split().h_minus();
        assert_eq!(minus.order(), 1);
        assert!(fam.members.iter().all(|m| m.h == minus));
        let or = fam.members.iter().any(|m| brute_force(m, false, &b).unwrap().is_some());
        assert!(or);
    }
}
