use crate::budget::Budget;
use crate::consistency::{arc_reduce, exact_decider, combined_transform};
use crate::error::{contract_err, input_err, Result};
use crate::instance::{Certificate, ListInstance};
use crate::recognize::{
    cycle_order, good_cycle_condition, matching_property, recognize_tree_like, TreeLikeCertificate,
};
use crate::representatives::{
    has_representatives, has_strong_edge_representatives, has_strong_representatives, strong_candidate,
};
use crate::trigraph::{EdgeSet, Remap};
use crate::vset::VSet;

use super::tree::tree;
use super::tree_like::tree_like;
use super::{compacted, drop_forced_pair, holders, lift, prepared, remove_forced, validated, Ctx};

/// Solves instances over good trigraph cycles (at least five vertices) by
/// reducing to trigraph trees or to a tree-like derivation.
pub fn solve_good_cycle(inst: &ListInstance, budget: &Budget) -> Result<Option<Certificate>> {
    let h = &inst.h;
    if h.order() < 5 {
        return Err(input_err!("good-cycle solver needs at least five vertices"));
    }
    if good_cycle_condition(h)?.is_none() {
        return Err(input_err!("UNRESOLVED: the cycle satisfies none of the good-cycle conditions"));
    }
    cycle(&mut Ctx::solving(budget), inst, &Remap::identity(h.order()))
}

fn cycle(ctx: &mut Ctx, inst: &ListInstance, to_top: &Remap) -> Result<Option<Certificate>> {
    let ac = arc_reduce(inst);
    if ac.has_empty_list() {
        return Ok(None);
    }
    if ac.n() == 0 {
        return Ok(Some(Certificate(Vec::new())));
    }
    // Any missing vertex leaves a path.
    if let Some((sub, map)) = compacted(&ac) {
        return Ok(tree(ctx, &sub, &map.then(to_top))?.map(|g| lift(g, &map)));
    }
    if !has_representatives(&ac) || !has_strong_representatives(&ac) || !has_strong_edge_representatives(&ac) {
        let family = prepared(&ac, &ctx.budget, true, true)?;
        return ctx.any_member(family, |ctx, m| cycle(ctx, m, to_top));
    }
    let answer = cases(ctx, &ac, to_top)?;
    answer.map(|f| validated(inst, f, "good-cycle solver")).transpose()
}

fn cases(ctx: &mut Ctx, ac: &ListInstance, to_top: &Remap) -> Result<Option<Certificate>> {
    let h = &ac.h;
    let order = cycle_order(h).ok_or_else(|| contract_err!("trigraph is not a cycle"))?;
    let k = order.len();
    let ring: Vec<(usize, usize)> = (0..k).map(|i| (order[i], order[(i + 1) % k])).collect();

    // Two strong units (strong edges, or edges between strong loops) whose
    // edges together satisfy the matching property: a tree-like derivation.
    let units: Vec<(usize, usize)> = ring
        .iter()
        .copied()
        .filter(|&(a, b)| h.is_strong(a, b) || h.is_strong(b, a) || (h.strong_loop(a) && h.strong_loop(b)))
        .collect();
    for (i, &e) in units.iter().enumerate() {
        for &e2 in &units[i + 1..] {
            let f: EdgeSet = [e, e2]
                .iter()
                .flat_map(|&(a, b)| [(a, b), (b, a)])
                .filter(|&(a, b)| h.is_edge(a, b))
                .collect();
            if !matching_property(h, &f) {
                continue;
            }
            if let Some(child) = recognize_tree_like(&h.without_pairs(&f), &ctx.budget)? {
                let cert = TreeLikeCertificate::RemoveEdges {
                    f,
                    child: Box::new(child),
                };
                return tree_like(ctx, ac, &cert, to_top);
            }
        }
    }

    // A vertex all of whose holders are forced onto it.
    for v in 0..k {
        if holders(ac, v).iter().all(|&u| ac.lists[u] == VSet::single(v)) {
            return remove_forced(ctx, ac, v, to_top, |c, i, t| tree(c, i, t));
        }
    }

    // Strong loops on a nonsymmetric edge whose uses are all forced.
    for &(a, b) in &ring {
        if h.strong_loop(a) && h.strong_loop(b) && h.is_edge(a, b) != h.is_edge(b, a) {
            if let Some(sub) = drop_forced_pair(ac, a, b) {
                return tree(ctx, &sub, to_top);
            }
        }
    }

    // A strong loop whose only companion is loopless: separate them, after
    // which the loop is forced.
    let decide = exact_decider(ctx.budget.clone());
    for x in h.strong_loops().iter() {
        let s = strong_candidate(ac, x);
        if s.len() == 2 && h.loopless(s.without(x).first().unwrap()) {
            let y = s.without(x);
            let family = combined_transform(ac, VSet::single(x), y, VSet::EMPTY, &decide, &ctx.budget)?;
            return ctx.any_member(family, |ctx, m| remove_forced(ctx, m, x, to_top, |c, i, t| tree(c, i, t)));
        }
    }
    Err(contract_err!("no case of the good-cycle analysis applies"))
}
