use crate::budget::Budget;
use crate::consistency::{exact_decider, joint_fixpoint, Decider};
use crate::error::{contract_err, Result};
use crate::instance::{Certificate, ListInstance};
use crate::trigraph::{EdgeKind, EdgeSet, Trigraph};
use crate::vset::VSet;

use super::{small_lists::solve_small_lists, validated};

/// A partition `A ∪ B` of `V(H)`, the edges `F` with exactly one endpoint in
/// `A`, and the endpoints `X ⊆ A`, `Y ⊆ B` of those edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparableSplit {
    pub a: VSet,
    pub b: VSet,
    pub f: EdgeSet,
    pub x: VSet,
    pub y: VSet,
}

impl SeparableSplit {
    pub fn new(h: &Trigraph, a: VSet) -> SeparableSplit {
        let b = h.vertices().minus(a);
        let f: EdgeSet = h
            .edges()
            .into_iter()
            .filter(|&(p, q)| a.contains(p) != a.contains(q))
            .collect();
        let x = f.iter().flat_map(|&(p, q)| [p, q]).filter(|&v| a.contains(v)).collect();
        let y = f.iter().flat_map(|&(p, q)| [p, q]).filter(|&v| b.contains(v)).collect();
        SeparableSplit { a, b, f, x, y }
    }

    /// Every list meets `X` (and `Y`) at most once, and a list meeting `X`
    /// (resp. `Y`) avoids the rest of `A` (resp. `B`).
    pub fn is_separable(&self, inst: &ListInstance) -> bool {
        inst.lists.iter().all(|&l| {
            let side = |ends: VSet, all: VSet| {
                let e = l.inter(ends);
                e.len() <= 1 && (e.is_empty() || !l.intersects(all.minus(ends)))
            };
            side(self.x, self.a) && side(self.y, self.b)
        })
    }

    fn first_violation(&self, inst: &ListInstance) -> Option<usize> {
        (0..inst.n()).find(|&u| !self.is_separable(&inst.induced(&[u])))
    }
}

/// Solves an instance separable on `split.f`.
///
/// Lists are made arc- and separator-consistent on `F` (with `decide` as the
/// `H \ F` oracle). Each input vertex then only needs to choose a side, or a
/// specific endpoint of `F`, which is a 2SAT problem over a small auxiliary
/// trigraph. The remaining vertices are solved on their side by `rest`,
/// which receives instances over the same trigraph whose lists avoid `X ∪ Y`.
pub fn solve_separable(
    inst: &ListInstance,
    split: &SeparableSplit,
    decide: Decider,
    rest: &mut dyn FnMut(&ListInstance) -> Result<Option<Certificate>>,
) -> Result<Option<Certificate>> {
    if let Some(u) = split.first_violation(inst) {
        return Err(contract_err!("instance is not separable at vertex {}", u + 1));
    }
    if inst.n() == 0 {
        return Ok(Some(Certificate(Vec::new())));
    }
    let l = joint_fixpoint(inst, &split.f, decide)?;
    if l.has_empty_list() {
        return Ok(None);
    }

    // Auxiliary trigraph: H[X ∪ Y] plus `a` and `b`, weak loops joined
    // weakly to X and Y respectively.
    let ends: Vec<usize> = split.x.union(split.y).iter().collect();
    let (ia, ib) = (ends.len(), ends.len() + 1);
    let mut h0 = Trigraph::new(ends.len() + 2);
    for (i, &p) in ends.iter().enumerate() {
        for (j, &q) in ends.iter().enumerate() {
            h0.set(i, j, inst.h.get(p, q));
        }
        let hub = if split.x.contains(p) { ia } else { ib };
        h0.set_sym(i, hub, EdgeKind::Weak);
    }
    h0.set(ia, ia, EdgeKind::Weak);
    h0.set(ib, ib, EdgeKind::Weak);

    let mut lists0 = vec![VSet::EMPTY; l.n()];
    for (u, list) in lists0.iter_mut().enumerate() {
        let orig = l.lists[u];
        let mut s: VSet = ends
            .iter()
            .enumerate()
            .filter(|&(_, &p)| orig.contains(p))
            .map(|(i, _)| i)
            .collect();
        if orig.intersects(split.a.minus(split.x)) {
            s.insert(ia);
        }
        if orig.intersects(split.b.minus(split.y)) {
            s.insert(ib);
        }
        *list = s;
    }
    let Some(f0) = solve_small_lists(&l.relabelled(h0, lists0))? else {
        return Ok(None);
    };

    // Side-restricted lists, with endpoint images pinned.
    let mut side = l.clone();
    for (u, list) in side.lists.iter_mut().enumerate() {
        *list = match f0.0[u] {
            i if i == ia => l.lists[u].inter(split.a.minus(split.x)),
            i if i == ib => l.lists[u].inter(split.b.minus(split.y)),
            i => VSet::single(ends[i]),
        };
    }
    for c in l.puncture(&split.f).underlying_graph().components() {
        let in_a = |u: usize| split.a.intersects(side.lists[u]);
        if c.iter().any(|&u| in_a(u) != in_a(c[0])) {
            return Err(contract_err!("side assignment splits a component of the punctured graph"));
        }
    }
    let side = crate::consistency::arc_reduce(&side);
    if side.has_empty_list() {
        return Err(contract_err!("side-restricted extension is inconsistent"));
    }
    let ends_set = split.x.union(split.y);
    let free: Vec<usize> = (0..side.n()).filter(|&u| !side.lists[u].is_subset(ends_set)).collect();
    let Some(g) = rest(&side.induced(&free))? else {
        return Err(contract_err!("side-restricted extension has no solution"));
    };
    let mut f: Vec<usize> = side.lists.iter().map(|l| l.first().unwrap_or(0)).collect();
    for (i, &u) in free.iter().enumerate() {
        f[u] = g.0[i];
    }
    Ok(Some(validated(inst, Certificate(f), "separable solver")?))
}

/// `solve_separable` with exact search for every subproblem.
pub fn solve_separable_exact(inst: &ListInstance, split: &SeparableSplit, budget: &Budget) -> Result<Option<Certificate>> {
    let decide = exact_decider(budget.clone());
    solve_separable(inst, split, &decide, &mut |sub| super::solve_exact(sub, false, budget))
}
