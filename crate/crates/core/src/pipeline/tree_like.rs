use crate::budget::Budget;
use crate::consistency::{arc_reduce, domination_reduce, exact_decider, combined_transform};
use crate::error::{contract_err, Error, Result};
use crate::instance::{Certificate, ListInstance};
use crate::recognize::TreeLikeCertificate;
use crate::representatives::{has_representatives, has_strong_representatives, strong_candidate};
use crate::trigraph::{EdgeSet, Remap};
use crate::vset::VSet;

use super::separable::{solve_separable, SeparableSplit};
use super::{
    component_without, drop_forced_pair, extend_past_loop, lift, prepared, simple::solve_simple_2sat, solve_exact, validated, Ctx,
};

/// Follows the derivation `cert` of the instance's trigraph.
pub fn solve_tree_like(inst: &ListInstance, cert: &TreeLikeCertificate, budget: &Budget) -> Result<Option<Certificate>> {
    cert.replay(&inst.h).map_err(|e| contract_err!("certificate does not replay: {e}"))?;
    tree_like(&mut Ctx::solving(budget), inst, cert, &Remap::identity(inst.k()))
}

pub(crate) fn tree_like(
    ctx: &mut Ctx,
    inst: &ListInstance,
    cert: &TreeLikeCertificate,
    to_top: &Remap,
) -> Result<Option<Certificate>> {
    let ac = arc_reduce(inst);
    if ac.has_empty_list() {
        return Ok(None);
    }
    if ac.n() == 0 {
        return Ok(ctx.leaf(Some(Certificate(Vec::new()))));
    }
    let answer = match cert {
        TreeLikeCertificate::Digraph => ctx.base(&ac, to_top)?,
        TreeLikeCertificate::AllStrongLoops => {
            let a = solve_simple_2sat(&ac, &ctx.budget)?;
            ctx.leaf(a)
        }
        TreeLikeCertificate::NoWeakEdges => {
            let a = solve_exact(&ac, false, &ctx.budget)?;
            ctx.leaf(a)
        }
        TreeLikeCertificate::RemoveLoop { x, orderings, child } => remove_loop(ctx, &ac, *x, orderings, child, to_top)?,
        TreeLikeCertificate::RemoveEdges { f, child } => remove_edges(ctx, &ac, f.clone(), child, to_top)?,
    };
    answer.map(|f| validated(inst, f, "tree-like solver")).transpose()
}

/// Recurse on `H − x` when `x` is on no list.
fn without_loop(ctx: &mut Ctx, m: &ListInstance, x: usize, child: &TreeLikeCertificate, to_top: &Remap) -> Result<Option<Certificate>> {
    let (sub, map) = m.restrict_trigraph(m.h.vertices().without(x));
    Ok(tree_like(ctx, &sub, child, &map.then(to_top))?.map(|g| lift(g, &map)))
}

fn remove_loop(
    ctx: &mut Ctx,
    ac: &ListInstance,
    x: usize,
    orderings: &[(VSet, Vec<usize>)],
    child: &TreeLikeCertificate,
    to_top: &Remap,
) -> Result<Option<Certificate>> {
    if !ac.used().contains(x) {
        return without_loop(ctx, ac, x, child, to_top);
    }
    let family = prepared(ac, &ctx.budget, true, false)?;
    ctx.any_member(family, |ctx, m| {
        if !m.used().contains(x) {
            return without_loop(ctx, m, x, child, to_top);
        }
        let h = &m.h;
        let partners = strong_candidate(m, x).without(x);
        if partners.iter().any(|v| h.strong_loop(v)) {
            return Err(contract_err!("strong loop next to a removable strong loop"));
        }
        let y: VSet = partners.iter().filter(|&v| h.loopless(v)).collect();
        let z: VSet = partners.iter().filter(|&v| h.weak_loop(v)).collect();
        let k = partners.first().map(|p| component_without(h, x, p)).unwrap_or_default();
        let order: Vec<usize> = orderings
            .iter()
            .find(|(c, _)| z.is_subset(*c))
            .map(|(_, o)| o.iter().copied().filter(|&v| z.contains(v)).collect())
            .ok_or_else(|| contract_err!("no domination ordering covers the weak loops next to {}", x + 1))?;

        // Keep only the first weak loop, in domination order, on each list.
        let mut m = m.clone();
        for (i, &zi) in order.iter().enumerate() {
            for &zj in &order[i + 1..] {
                if m.lists.iter().any(|l| l.contains(zi) && l.contains(zj)) {
                    m = arc_reduce(&domination_reduce(&m, zj, zi)?);
                    if m.has_empty_list() {
                        return Ok(None);
                    }
                }
            }
        }
        let decide = exact_decider(ctx.budget.clone());
        let family = combined_transform(&m, VSet::single(x), y, z, &decide, &ctx.budget)?;
        ctx.any_member(family, |ctx, m2| {
            extend_past_loop(ctx, m2, x, z, k, to_top, |c, i, t| tree_like(c, i, child, t))
        })
    })
}

/// Unordered pairs `{p, q}` present in `f`.
fn pairs(f: &EdgeSet) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = f.iter().map(|&(p, q)| (p.min(q), p.max(q))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn minus_pairs(f: &EdgeSet, drop: &[(usize, usize)]) -> EdgeSet {
    f.iter()
        .copied()
        .filter(|&(p, q)| !drop.contains(&(p.min(q), p.max(q))))
        .collect()
}

fn both_ways(ps: &[(usize, usize)]) -> EdgeSet {
    ps.iter().flat_map(|&(p, q)| [(p, q), (q, p)]).collect()
}

/// Instances over `H_cur` where `H_cur \ f` is the trigraph `child` derives.
fn remove_edges(
    ctx: &mut Ctx,
    inst: &ListInstance,
    f: EdgeSet,
    child: &TreeLikeCertificate,
    to_top: &Remap,
) -> Result<Option<Certificate>> {
    let ac = arc_reduce(inst);
    if ac.has_empty_list() {
        return Ok(None);
    }
    if ac.n() == 0 {
        return Ok(ctx.leaf(Some(Certificate(Vec::new()))));
    }
    if f.is_empty() {
        return tree_like(ctx, &ac, child, to_top);
    }
    let h = &ac.h;

    // Edges at vertices on no list can be deleted outright.
    let used = ac.used();
    let idle: Vec<(usize, usize)> = pairs(&f)
        .into_iter()
        .filter(|&(p, q)| !used.contains(p) || !used.contains(q))
        .collect();
    if !idle.is_empty() {
        let sub = ac.relabelled(h.without_pairs(&both_ways(&idle)), ac.lists.clone());
        return remove_edges(ctx, &sub, minus_pairs(&f, &idle), child, to_top);
    }

    if !has_representatives(&ac) || !has_strong_representatives(&ac) {
        let family = prepared(&ac, &ctx.budget, true, false)?;
        return ctx.any_member(family, |ctx, m| remove_edges(ctx, m, f.clone(), child, to_top));
    }

    // Non-strong edges of `F` whose every use is forced are deleted.
    for (x, y) in pairs(&f) {
        if h.is_strong(x, y) || h.is_strong(y, x) {
            continue;
        }
        if let Some(sub) = drop_forced_pair(&ac, x, y) {
            return remove_edges(ctx, &sub, minus_pairs(&f, &[(x, y)]), child, to_top);
        }
    }

    // Split along a smallest disconnecting part of `F` (all of `F` when it
    // already cuts one component into two).
    let f0 = disconnecting_subset(h, &pairs(&f))?;
    let cut = h.without_pairs(&both_ways(&f0));
    let changed = cut
        .components()
        .into_iter()
        .find(|c| !h.components().contains(c))
        .ok_or_else(|| contract_err!("edge set does not disconnect"))?;
    let split = SeparableSplit::new(h, changed);
    if pairs(&split.f) != f0 {
        return Err(contract_err!("disconnecting edges are not the whole cut"));
    }
    let rest_f = minus_pairs(&f, &f0);
    let decide = exact_decider(ctx.budget.clone());
    let mut sub_ctx = Ctx::solving(&ctx.budget);
    let answer = solve_separable(&ac, &split, &decide, &mut |sub| {
        let sub = sub.relabelled(cut.clone(), sub.lists.clone());
        remove_edges(&mut sub_ctx, &sub, rest_f.clone(), child, to_top)
    })?;
    Ok(ctx.leaf(answer))
}

/// The lexicographically least among the smallest sets of pairs whose
/// removal increases the number of components.
fn disconnecting_subset(h: &crate::trigraph::Trigraph, ps: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let before = h.components().len();
    for size in 1..=ps.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let pick: Vec<(usize, usize)> = idx.iter().map(|&i| ps[i]).collect();
            if h.without_pairs(&both_ways(&pick)).components().len() > before {
                return Ok(pick);
            }
            // Next combination in lexicographic order.
            let Some(i) = (0..size).rev().find(|&i| idx[i] < ps.len() - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Err(Error::Contract("edge set does not disconnect the trigraph".into()))
}
