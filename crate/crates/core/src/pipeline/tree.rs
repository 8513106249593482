use crate::budget::Budget;
use crate::consistency::{arc_reduce, exact_decider, combined_transform};
use crate::error::{contract_err, input_err, Result};
use crate::instance::{Certificate, ListInstance};
use crate::recognize::is_trigraph_tree;
use crate::representatives::{has_representatives, has_strong_representatives, strong_candidate};
use crate::trigraph::Remap;
use crate::vset::VSet;

use super::separable::{solve_separable, SeparableSplit};
use super::{compacted, component_without, extend_past_loop, lift, prepared, remove_forced, validated, Ctx};

/// Solves instances over trigraph trees by removing strong loops and strong
/// edges one at a time until a digraph remains.
pub fn solve_tree(inst: &ListInstance, budget: &Budget) -> Result<Option<Certificate>> {
    if !is_trigraph_tree(&inst.h) {
        return Err(input_err!("trigraph is not a tree"));
    }
    tree(&mut Ctx::solving(budget), inst, &Remap::identity(inst.k()))
}

/// Works on forests, which is what vertex deletion leaves behind.
pub(crate) fn tree(ctx: &mut Ctx, inst: &ListInstance, to_top: &Remap) -> Result<Option<Certificate>> {
    match tree_step(ctx, inst, to_top)? {
        Some(f) => Ok(Some(validated(inst, f, "tree solver")?)),
        None => Ok(None),
    }
}

fn tree_step(ctx: &mut Ctx, inst: &ListInstance, to_top: &Remap) -> Result<Option<Certificate>> {
    let ac = arc_reduce(inst);
    if ac.has_empty_list() {
        return Ok(None);
    }
    if ac.n() == 0 {
        return Ok(ctx.leaf(Some(Certificate(Vec::new()))));
    }
    if let Some((sub, map)) = compacted(&ac) {
        return Ok(tree(ctx, &sub, &map.then(to_top))?.map(|g| lift(g, &map)));
    }
    let h = &ac.h;
    if !h.has_strong() {
        return ctx.base(&ac, to_top);
    }
    if !has_representatives(&ac) || !has_strong_representatives(&ac) {
        let family = prepared(&ac, &ctx.budget, true, false)?;
        return ctx.any_member(family, |ctx, m| tree(ctx, m, to_top));
    }
    let decide = exact_decider(ctx.budget.clone());

    if let Some(x) = h.strong_loops().first() {
        let s = strong_candidate(&ac, x);
        if s == VSet::single(x) {
            return remove_forced(ctx, &ac, x, to_top, |c, i, m| tree(c, i, m));
        }
        let y = s.without(x).first().unwrap();
        if s.len() != 2 {
            return Err(contract_err!("strong loop {} has more than one companion", to_top.origin[x] + 1));
        }
        if h.loopless(y) {
            let family = combined_transform(&ac, s.without(y), VSet::single(y), VSet::EMPTY, &decide, &ctx.budget)?;
            return ctx.any_member(family, |ctx, m| remove_forced(ctx, m, x, to_top, |c, i, m| tree(c, i, m)));
        }
        if h.weak_loop(y) {
            let family = combined_transform(&ac, s.without(y), VSet::EMPTY, VSet::single(y), &decide, &ctx.budget)?;
            return ctx.any_member(family, |ctx, m| weak_loop_case(ctx, m, x, y, to_top));
        }
        if strong_candidate(&ac, y) != s {
            return remove_forced(ctx, &ac, x, to_top, |c, i, m| tree(c, i, m));
        }
        return separable_case(ctx, &ac, x, y, to_top);
    }
    let (x, y) = h.strong_edges()[0];
    separable_case(ctx, &ac, x, y, to_top)
}

/// `S_x = {x, y}` with `y` a weak loop.
fn weak_loop_case(ctx: &mut Ctx, m: &ListInstance, x: usize, y: usize, to_top: &Remap) -> Result<Option<Certificate>> {
    let comp = component_without(&m.h, x, y);
    extend_past_loop(ctx, m, x, VSet::single(y), comp, to_top, |c, i, t| tree(c, i, t))
}

/// Splits `H` at the edges between `x` and `y`, with `x`'s side as `A`.
fn separable_case(ctx: &mut Ctx, inst: &ListInstance, x: usize, y: usize, to_top: &Remap) -> Result<Option<Certificate>> {
    let cut = inst.h.without_pairs(&[(x, y), (y, x)]);
    let split = SeparableSplit::new(&inst.h, cut.component_of(x));
    let decide = exact_decider(ctx.budget.clone());
    let mut sub_ctx = Ctx::solving(&ctx.budget);
    let answer = solve_separable(inst, &split, &decide, &mut |sub| tree(&mut sub_ctx, sub, to_top))?;
    Ok(ctx.leaf(answer))
}
