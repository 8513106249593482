//! Solvers for the tractable classes, the exact fallback, the dispatcher and
//! the reduction to digraph instances.

mod cycle;
mod emit;
mod exact;
mod separable;
mod simple;
mod small_lists;
mod tree;
mod tree_like;

pub use cycle::solve_good_cycle;
pub use emit::reduce_to_digraph_family;
pub use exact::solve_exact;
pub use separable::{solve_separable, solve_separable_exact, SeparableSplit};
pub use simple::solve_simple_2sat;
pub use small_lists::solve_small_lists;
pub use tree::solve_tree;
pub use tree_like::solve_tree_like;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{contract_err, input_err, Result};
use crate::instance::{check_certificate, Certificate, InstanceFamily, ListInstance};
use crate::recognize::{
    good_cycle_condition, is_trigraph_tree, recognize_tree_like, simple_case_applies, TreeLikeCertificate,
};
use crate::trigraph::{Remap, Trigraph};
use crate::vset::VSet;

/// Which solver handled an instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Tree,
    TreeLike,
    GoodCycle,
    Simple,
    Exact,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Tree => "tree",
            Route::TreeLike => "tree-like",
            Route::GoodCycle => "good-cycle",
            Route::Simple => "simple",
            Route::Exact => "exact",
        }
    }
}

/// `Auto` picks the first applicable route; the others force one.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Force(Route),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    pub certificate: Option<Certificate>,
    pub route: Route,
}

/// A route chosen for a trigraph, with the derivation when tree-like.
#[derive(Clone, Debug)]
pub struct Plan {
    pub route: Route,
    cert: Option<TreeLikeCertificate>,
}

impl Plan {
    /// Classifies `h` for `strategy`: trees, good cycles (a cheap structural
    /// test, tried before the tree-like search), tree-like trigraphs, the
    /// all-strong-loop case, and exact search.
    pub fn new(h: &Trigraph, strategy: Strategy, budget: &Budget) -> Result<Plan> {
        let route = match strategy {
            Strategy::Force(r) => r,
            Strategy::Auto => {
                if is_trigraph_tree(h) {
                    Route::Tree
                } else if h.order() >= 5 && good_cycle_condition(h).ok().flatten().is_some() {
                    Route::GoodCycle
                } else if recognize_tree_like(h, budget)?.is_some() {
                    Route::TreeLike
                } else if simple_case_applies(h) {
                    Route::Simple
                } else {
                    Route::Exact
                }
            }
        };
        let cert = match route {
            Route::TreeLike => {
                Some(recognize_tree_like(h, budget)?.ok_or_else(|| input_err!("trigraph is not tree-like"))?)
            }
            _ => None,
        };
        Ok(Plan { route, cert })
    }

    /// Solves an instance over the trigraph this plan was made for.
    pub fn solve(&self, inst: &ListInstance, budget: &Budget) -> Result<Option<Certificate>> {
        match self.route {
            Route::Tree => solve_tree(inst, budget),
            Route::TreeLike => solve_tree_like(inst, self.cert.as_ref().expect("tree-like plan"), budget),
            Route::GoodCycle => solve_good_cycle(inst, budget),
            Route::Simple => solve_simple_2sat(inst, budget),
            Route::Exact => solve_exact(inst, false, budget),
        }
    }
}

pub fn solve(inst: &ListInstance, strategy: Strategy, budget: &Budget) -> Result<Solution> {
    let plan = Plan::new(&inst.h, strategy, budget)?;
    Ok(Solution {
        certificate: plan.solve(inst, budget)?,
        route: plan.route,
    })
}

/// Per-invocation state: the budget, and when emitting, the collector of
/// digraph instances.
pub(crate) struct Ctx {
    pub budget: Budget,
    pub emit: Option<Emitter>,
}

pub(crate) struct Emitter {
    top: Trigraph,
    minus: Trigraph,
    minus_map: Remap,
    pub out: InstanceFamily,
}

impl Emitter {
    pub fn new(top: &Trigraph) -> Emitter {
        let (minus, minus_map) = top.h_minus();
        Emitter {
            top: top.clone(),
            minus,
            minus_map,
            out: InstanceFamily::default(),
        }
    }

    /// A base instance over a strong-free induced subtrigraph of the top
    /// trigraph, re-expressed over the top trigraph's `H⁻`.
    fn push_base(&mut self, inst: &ListInstance, to_top: &Remap) -> Result<()> {
        let pos: Vec<usize> = to_top
            .origin
            .iter()
            .map(|&t| {
                self.minus_map
                    .position(t)
                    .ok_or_else(|| contract_err!("base vertex {} has a strong loop in the input trigraph", t + 1))
            })
            .collect::<Result<_>>()?;
        let keep: VSet = pos.iter().copied().collect();
        let (sub, sub_map) = self.minus.induced(keep);
        // The base trigraph must coincide with H⁻ on its vertices.
        let relabel: Vec<usize> = pos.iter().map(|&p| sub_map.position(p).unwrap()).collect();
        let k = inst.k();
        for x in 0..k {
            for y in 0..k {
                if inst.h.get(x, y) != sub.get(relabel[x], relabel[y]) {
                    return Err(contract_err!(
                        "base trigraph differs from the reduced trigraph at ({}, {})",
                        self.top_label(to_top, x),
                        self.top_label(to_top, y)
                    ));
                }
            }
        }
        let lists = inst.lists.iter().map(|l| l.iter().map(|x| pos[x]).collect()).collect();
        self.out.push_unique(inst.relabelled(self.minus.clone(), lists));
        Ok(())
    }

    fn top_label(&self, to_top: &Remap, x: usize) -> usize {
        debug_assert!(to_top.origin[x] < self.top.order());
        to_top.origin[x] + 1
    }

    fn push_yes(&mut self) {
        let empty = ListInstance::new(self.minus.clone(), Vec::new()).expect("empty instance");
        self.out.push_unique(empty);
    }
}

impl Ctx {
    pub fn solving(budget: &Budget) -> Ctx {
        Ctx {
            budget: budget.clone(),
            emit: None,
        }
    }

    pub fn emitting(&self) -> bool {
        self.emit.is_some()
    }

    /// Digraph base case: solved exactly, or emitted.
    pub fn base(&mut self, inst: &ListInstance, to_top: &Remap) -> Result<Option<Certificate>> {
        if inst.h.has_strong() {
            return Err(contract_err!("base case reached with strong entries"));
        }
        match &mut self.emit {
            None => solve_exact(inst, false, &self.budget),
            Some(e) => {
                e.push_base(inst, to_top)?;
                Ok(None)
            }
        }
    }

    /// A subproblem decided outright; when emitting, a YES becomes the empty
    /// instance.
    pub fn leaf(&mut self, answer: Option<Certificate>) -> Option<Certificate> {
        match &mut self.emit {
            None => answer,
            Some(e) => {
                if answer.is_some() {
                    e.push_yes();
                }
                None
            }
        }
    }

    /// Solves each member in turn; stops at the first success unless emitting.
    pub fn any_member(
        &mut self,
        family: InstanceFamily,
        mut solve: impl FnMut(&mut Ctx, &ListInstance) -> Result<Option<Certificate>>,
    ) -> Result<Option<Certificate>> {
        for m in &family.members {
            if let Some(f) = solve(self, m)? {
                if !self.emitting() {
                    return Ok(Some(f));
                }
            }
        }
        Ok(None)
    }
}

/// Fails loudly unless `f` solves `inst`.
pub(crate) fn validated(inst: &ListInstance, f: Certificate, what: &str) -> Result<Certificate> {
    if check_certificate(inst, &f, false)? {
        Ok(f)
    } else {
        Err(contract_err!("{what} produced an invalid certificate"))
    }
}

pub(crate) fn lift(f: Certificate, map: &Remap) -> Certificate {
    Certificate(f.0.into_iter().map(|x| map.origin[x]).collect())
}

/// Input vertices whose list contains `x`.
pub(crate) fn holders(inst: &ListInstance, x: usize) -> Vec<usize> {
    (0..inst.n()).filter(|&u| inst.lists[u].contains(x)).collect()
}

/// When every list containing `x` is `{x}`: maps those vertices to `x` and
/// solves the rest over `H − x` with `rest` (which receives the subinstance
/// and its map to the current trigraph's ids).
pub(crate) fn remove_forced(
    ctx: &mut Ctx,
    inst: &ListInstance,
    x: usize,
    to_top: &Remap,
    rest: impl FnOnce(&mut Ctx, &ListInstance, &Remap) -> Result<Option<Certificate>>,
) -> Result<Option<Certificate>> {
    let b = holders(inst, x);
    if let Some(&u) = b.iter().find(|&&u| inst.lists[u] != VSet::single(x)) {
        return Err(contract_err!(
            "list of vertex {} holds {} but is not forced",
            u + 1,
            to_top.origin[x] + 1
        ));
    }
    let keep: Vec<usize> = (0..inst.n()).filter(|u| !b.contains(u)).collect();
    let (sub, map) = inst.induced(&keep).restrict_trigraph(inst.h.vertices().without(x));
    let sub_top = map.then(to_top);
    let Some(g) = rest(ctx, &sub, &sub_top)? else {
        return Ok(None);
    };
    let mut f = vec![x; inst.n()];
    for (i, &u) in keep.iter().enumerate() {
        f[u] = map.origin[g.0[i]];
    }
    Ok(Some(validated(inst, Certificate(f), "vertex removal")?))
}

/// If some vertex of `H` is on no list, re-expresses the instance over the
/// used vertices.
pub(crate) fn compacted(inst: &ListInstance) -> Option<(ListInstance, Remap)> {
    let used = inst.used();
    (used != inst.h.vertices()).then(|| inst.restrict_trigraph(used))
}

/// Arc-consistent reductions with representatives, and optionally strong
/// (edge) representatives, whose union is equivalent to `inst`.
pub(crate) fn prepared(inst: &ListInstance, budget: &Budget, strong: bool, strong_edges: bool) -> Result<InstanceFamily> {
    use crate::consistency::arc_reduce;
    use crate::representatives::*;
    let start = arc_reduce(inst);
    if start.has_empty_list() {
        return Ok(InstanceFamily::default());
    }
    let mut family = if has_representatives(&start) {
        InstanceFamily::single(start)
    } else {
        representatives_transform(&start, budget)?
    };
    let stage = |family: InstanceFamily,
                     holds: fn(&ListInstance) -> bool,
                     step: fn(&ListInstance, &Budget) -> Result<InstanceFamily>|
     -> Result<InstanceFamily> {
        let mut out = InstanceFamily::default();
        for m in family.members {
            if holds(&m) {
                out.push_unique(m);
            } else {
                for e in step(&m, budget)?.members {
                    out.push_unique(e);
                }
            }
        }
        crate::budget::check_family(out.len(), budget, "prepared family")?;
        Ok(out)
    };
    if strong {
        family = stage(family, has_strong_representatives, strong_representatives_transform)?;
    }
    if strong_edges {
        family = stage(family, has_strong_edge_representatives, strong_edge_representatives_transform)?;
    }
    Ok(family)
}

/// The component of `H − x` containing `y`, in the ids of `H`.
pub(crate) fn component_without(h: &Trigraph, x: usize, y: usize) -> VSet {
    h.without_pairs(&crate::consistency::edges_touching(h, VSet::single(x)))
        .component_of(y)
}

/// Every list holding the strong loop `x` is `{x}` or `{x, z}` with `z` in
/// `partners`. Solves `G − B` over `H − x` with `rest`, restricting each
/// component of `G − B` to `k` whenever one of its lists meets `k`, and
/// falling back to the unrestricted lists if that fails; then maps `{x}` to
/// `x` and `{x, z}` to `z`.
pub(crate) fn extend_past_loop(
    ctx: &mut Ctx,
    m: &ListInstance,
    x: usize,
    partners: VSet,
    k: VSet,
    to_top: &Remap,
    mut rest: impl FnMut(&mut Ctx, &ListInstance, &Remap) -> Result<Option<Certificate>>,
) -> Result<Option<Certificate>> {
    let b = holders(m, x);
    if let Some(&u) = b
        .iter()
        .find(|&&u| m.lists[u].len() > 2 || !m.lists[u].without(x).is_subset(partners))
    {
        return Err(contract_err!("list of vertex {} is not of the form {{x}} or {{x, z}}", u + 1));
    }
    let keep: Vec<usize> = (0..m.n()).filter(|u| !b.contains(u)).collect();
    let (sub, map) = m.induced(&keep).restrict_trigraph(m.h.vertices().without(x));
    let sub_top = map.then(to_top);
    if ctx.emitting() {
        return rest(ctx, &sub, &sub_top);
    }
    let k = map.project(k);
    let mut preferred = sub.clone();
    for c in sub.underlying_graph().components() {
        if c.iter().any(|&u| sub.lists[u].intersects(k)) {
            for u in c {
                preferred.lists[u] = sub.lists[u].inter(k);
            }
        }
    }
    let g = match rest(ctx, &preferred, &sub_top)? {
        Some(g) => g,
        None => match rest(ctx, &sub, &sub_top)? {
            Some(g) => g,
            None => return Ok(None),
        },
    };
    let mut f: Vec<usize> = m.lists.iter().map(|&l| l.without(x).first().unwrap_or(x)).collect();
    for (i, &u) in keep.iter().enumerate() {
        f[u] = map.origin[g.0[i]];
    }
    Ok(Some(validated(m, Certificate(f), "strong-loop extension")?))
}

/// Deletes the edges between `x` and `y` from `H` when every input pair that
/// could use them is forced: both lists singletons, for every pair joined by
/// an arc (and for every pair at all when one orientation is strong). Forced
/// pairs keep their verdict: valid ones lose their arcs, an invalid one
/// empties a list. `None` when some relevant pair is not forced.
pub(crate) fn drop_forced_pair(inst: &ListInstance, x: usize, y: usize) -> Option<ListInstance> {
    let h = &inst.h;
    let strong = h.is_strong(x, y) || h.is_strong(y, x);
    let n = inst.n();
    let mut relevant = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let meets = inst.lists[u].contains(x) && inst.lists[v].contains(y);
            if u != v && meets && (strong || inst.arc(u, v) || inst.arc(v, u)) {
                relevant.push((u, v));
            }
        }
    }
    if relevant.iter().any(|&(u, v)| inst.lists[u].len() != 1 || inst.lists[v].len() != 1) {
        return None;
    }
    let mut out = inst.relabelled(h.without_pairs(&[(x, y), (y, x)]), inst.lists.clone());
    for (u, v) in relevant {
        if !crate::instance::pair_ok(h, x, y, inst.arc(u, v), inst.arc(v, u)) {
            out.lists[u] = VSet::EMPTY;
        }
        out.set_arc(u, v, false);
        out.set_arc(v, u, false);
    }
    Some(out)
}
