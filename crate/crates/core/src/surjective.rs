//! Surjective list homomorphisms.

use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::consistency::arc_reduce;
use crate::error::{contract_err, input_err, Result};
use crate::instance::{check_certificate, Certificate, ListInstance};
use crate::pipeline::{reduce_to_digraph_family, Plan, Strategy};
use crate::recognize::{recognize_special_tree_like, slhom_equiv_condition, DerivedDigraph};
use crate::trigraph::{Remap, Trigraph};
use crate::vset::VSet;

/// Branches over every way of giving each vertex of `H` its own preimage,
/// solving each branch with the dispatcher.
pub fn solve_surjective(inst: &ListInstance, budget: &Budget) -> Result<Option<Certificate>> {
    let (n, k) = (inst.n(), inst.k());
    if k > n {
        return Ok(None);
    }
    let plan = Plan::new(&inst.h, Strategy::Auto, budget)?;
    let mut meter = Meter::new(budget.search_nodes, "surjective pinning branches");
    let mut pins = vec![usize::MAX; k];
    let mut taken = vec![false; n];
    let found = pin_branches(inst, 0, &mut pins, &mut taken, &mut |pinned| {
        meter.tick()?;
        plan.solve(pinned, budget)
    })?;
    match found {
        Some(f) if check_certificate(inst, &f, true)? => Ok(Some(f)),
        Some(_) => Err(contract_err!("pinned solution is not surjective")),
        None => Ok(None),
    }
}

fn pin_branches(
    inst: &ListInstance,
    x: usize,
    pins: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    solve: &mut dyn FnMut(&ListInstance) -> Result<Option<Certificate>>,
) -> Result<Option<Certificate>> {
    if x == inst.k() {
        let mut pinned = inst.clone();
        for (y, &u) in pins.iter().enumerate() {
            pinned.lists[u] = pinned.lists[u].inter(VSet::single(y));
        }
        let pinned = arc_reduce(&pinned);
        return if pinned.has_empty_list() { Ok(None) } else { solve(&pinned) };
    }
    for u in 0..inst.n() {
        if taken[u] || !inst.lists[u].contains(x) {
            continue;
        }
        taken[u] = true;
        pins[x] = u;
        let r = pin_branches(inst, x + 1, pins, taken, solve)?;
        taken[u] = false;
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// Disjoint union of `inst0`'s graph with an anchor copy of `H` (vertex `x`
/// listed `{x}`), over `H`. `embedding.origin[i]` is the vertex of `H` that
/// vertex `i` of `inst0`'s trigraph stands for.
///
/// `H` must have no strong entries: anchor vertices are non-adjacent to the
/// rest, and only then are those non-adjacencies free.
pub fn anchor_embed(h: &Trigraph, inst0: &ListInstance, embedding: &Remap) -> Result<ListInstance> {
    if h.has_strong() {
        return Err(input_err!("anchor embedding needs a trigraph without strong entries"));
    }
    let k0 = inst0.k();
    let image: VSet = embedding.origin.iter().copied().collect();
    if embedding.origin.len() != k0 || image.len() != k0 || !image.is_subset(h.vertices()) {
        return Err(input_err!("embedding is not injective into the vertices of H"));
    }
    for a in 0..k0 {
        for b in 0..k0 {
            if inst0.h.get(a, b) != h.get(embedding.origin[a], embedding.origin[b]) {
                return Err(input_err!("embedding does not induce the instance's trigraph"));
            }
        }
    }
    let base = inst0.relabelled(
        h.clone(),
        inst0.lists.iter().map(|&l| embedding.lift(l)).collect(),
    );
    let k = h.order();
    let anchor = ListInstance::with_lists(
        h.clone(),
        (0..k).map(|x| (0..k).map(|y| x != y && h.is_edge(x, y)).collect()).collect(),
        (0..k).map(VSet::single).collect(),
    )?;
    Ok(base.disjoint_union(&anchor))
}

/// Surjective decision through the digraph reduction: pin preimages, reduce
/// each branch to instances over `H⁻`, and decide each of those surjectively
/// through its anchor gadget.
pub fn surjective_via_reduction(inst: &ListInstance, budget: &Budget) -> Result<bool> {
    let (n, k) = (inst.n(), inst.k());
    if k > n {
        return Ok(false);
    }
    let (minus, _) = inst.h.h_minus();
    let mut pins = vec![usize::MAX; k];
    let mut taken = vec![false; n];
    let found = pin_branches(inst, 0, &mut pins, &mut taken, &mut |pinned| {
        for m in reduce_to_digraph_family(pinned, budget)?.members {
            let gadget = anchor_embed(&minus, &m, &Remap::identity(minus.order()))?;
            if let Some(f) = crate::oracle::brute_force(&gadget, true, budget)? {
                return Ok(Some(f));
            }
        }
        Ok(None)
    })?;
    Ok(found.is_some())
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjectiveReport {
    /// Membership in the special tree-like class, under which the surjective
    /// problem is equivalent to the surjective problem for `H⁻⁻`.
    pub special_tree_like: bool,
    pub h_minus_minus: DerivedDigraph,
    /// No `x, y, z` with `xy` strong and `xz` a non-edge.
    pub list_equals_surjective: bool,
    pub verdict: String,
}

pub fn surjective_equivalence_report(h: &Trigraph, budget: &Budget) -> Result<SurjectiveReport> {
    let special = recognize_special_tree_like(h, budget)?.is_some();
    let equiv = slhom_equiv_condition(h);
    let verdict = match (special, equiv) {
        (_, true) if !h.has_strong() => "L-HOM ≡ SL-HOM (no strong entries)".to_string(),
        (true, true) => "special tree-like: SL-HOM(H) ≡ SL-HOM(H⁻⁻); L-HOM ≡ SL-HOM".to_string(),
        (true, false) => "special tree-like: SL-HOM(H) ≡ SL-HOM(H⁻⁻)".to_string(),
        (false, true) => "L-HOM ≡ SL-HOM".to_string(),
        (false, false) => "no equivalence established".to_string(),
    };
    Ok(SurjectiveReport {
        special_tree_like: special,
        h_minus_minus: DerivedDigraph::new(h.h_minus_minus()),
        list_equals_surjective: equiv,
        verdict,
    })
}
