//! Branching transforms that pin representatives, plus pure checkers for the
//! resulting witness properties.

use std::collections::HashSet;

use crate::budget::{check_family, Budget};
use crate::consistency::{arc_reduce, is_arc_consistent};
use crate::error::{contract_err, Result};
use crate::graph::{chordal_maximal_cliques, is_chordal, minimal_chordal_completion, Graph};
use crate::instance::{InstanceFamily, ListInstance};
use crate::vset::VSet;

/// Pins per represented vertex: every list lies inside the union of lists,
/// and each vertex of that union is the whole list of some input vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeWitness {
    pub x: VSet,
    /// `(x, v)` with `L(v) = {x}`; lowest such `v`.
    pub pins: Vec<(usize, usize)>,
}

pub fn representative_witness(inst: &ListInstance) -> Option<RepresentativeWitness> {
    let x = inst.used();
    let mut pins = Vec::new();
    for h in x.iter() {
        let v = inst.lists.iter().position(|&l| l == VSet::single(h))?;
        pins.push((h, v));
    }
    Some(RepresentativeWitness { x, pins })
}

pub fn has_representatives(inst: &ListInstance) -> bool {
    representative_witness(inst).is_some()
}

/// Adds `m` (after arc reduction) unless a list became empty or an identical
/// member exists.
fn keep(
    m: ListInstance,
    family: &mut InstanceFamily,
    seen: &mut HashSet<Vec<VSet>>,
    budget: &Budget,
    what: &str,
) -> Result<()> {
    let m = arc_reduce(&m);
    if !m.has_empty_list() && seen.insert(m.lists.clone()) {
        family.members.push(m);
        check_family(family.len(), budget, what)?;
    }
    Ok(())
}

/// For each `H` vertex still on some list but not yet pinned: pin it at one
/// of the vertices whose list contains it, or drop it everywhere. Members are
/// arc-reduced; members with an empty list are discarded.
pub fn representatives_transform(inst: &ListInstance, budget: &Budget) -> Result<InstanceFamily> {
    let mut family = InstanceFamily::default();
    let mut seen = HashSet::new();
    let start = arc_reduce(inst);
    if !start.has_empty_list() {
        pin_from(start, 0, &mut family, &mut seen, budget)?;
    }
    Ok(family)
}

fn pin_from(
    inst: ListInstance,
    x: usize,
    family: &mut InstanceFamily,
    seen: &mut HashSet<Vec<VSet>>,
    budget: &Budget,
) -> Result<()> {
    if x == inst.k() {
        if seen.insert(inst.lists.clone()) {
            family.members.push(inst);
            check_family(family.len(), budget, "representatives transform")?;
        }
        return Ok(());
    }
    let holders: Vec<usize> = (0..inst.n()).filter(|&u| inst.lists[u].contains(x)).collect();
    if holders.is_empty() || holders.iter().any(|&u| inst.lists[u].len() == 1) {
        return pin_from(inst, x + 1, family, seen, budget);
    }
    for &u in &holders {
        let m = arc_reduce(&inst.pin(u, x));
        if !m.has_empty_list() {
            pin_from(m, x + 1, family, seen, budget)?;
        }
    }
    let m = arc_reduce(&inst.drop_vertex_everywhere(x));
    if !m.has_empty_list() {
        pin_from(m, x + 1, family, seen, budget)?;
    }
    Ok(())
}

fn require_consistent_with_representatives(inst: &ListInstance, what: &str) -> Result<()> {
    if !is_arc_consistent(inst) || !has_representatives(inst) {
        return Err(contract_err!(
            "{what} needs arc-consistent lists with representatives"
        ));
    }
    Ok(())
}

/// Maximal cliques of a minimal chordal completion of `g`, as vertex lists
/// of `g`.
fn completion_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let filled = minimal_chordal_completion(g);
    let peo = is_chordal(&filled).ok_or_else(|| contract_err!("chordal completion is not chordal"))?;
    chordal_maximal_cliques(&filled, &peo)
}

/// Components of `g[within]` as vertex sets of `g`.
fn components_within(g: &Graph, within: VSet) -> Vec<VSet> {
    let alive: Vec<bool> = (0..g.order()).map(|v| within.contains(v)).collect();
    g.components_within(&alive)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

/// The smallest candidate for `S_x`: `x` together with every list that
/// contains it.
pub fn strong_candidate(inst: &ListInstance, x: usize) -> VSet {
    inst.lists
        .iter()
        .filter(|l| l.contains(x))
        .fold(VSet::single(x), |a, &l| a.union(l))
}

/// `S_x \ {x}` consists of symmetric neighbours of `x` and is connected in
/// the symmetric graph of `H`.
pub fn has_strong_representative(inst: &ListInstance, x: usize) -> bool {
    let h = &inst.h;
    let rest = strong_candidate(inst, x).without(x);
    rest.is_subset(h.symmetric_neighbours(x)) && components_within(&h.symmetric_graph(), rest).len() <= 1
}

pub fn has_strong_representatives(inst: &ListInstance) -> bool {
    inst.h.strong_loops().iter().all(|x| has_strong_representative(inst, x))
}

/// Branches each strong loop `x` (in id order) over a maximal clique `C` of a
/// minimal chordal completion of the symmetric graph of `G` on the vertices
/// whose list holds `x`, and over a component `K` of the symmetric graph of
/// `H` on the symmetric neighbours of `x`. Outside `C`, `x` is removed; inside
/// `C`, lists shrink to `V(K) ∪ {x}`.
pub fn strong_representatives_transform(inst: &ListInstance, budget: &Budget) -> Result<InstanceFamily> {
    require_consistent_with_representatives(inst, "strong representatives transform")?;
    let h = &inst.h;
    let sym_h = h.symmetric_graph();
    let sym_g = inst.symmetric_graph();
    let mut family = InstanceFamily::single(inst.clone());
    for x in h.strong_loops().iter() {
        let nbrs = h.symmetric_neighbours(x).without(x);
        let mut ks = components_within(&sym_h, nbrs);
        if ks.is_empty() {
            ks.push(VSet::EMPTY);
        }
        let mut next = InstanceFamily::default();
        let mut seen = HashSet::new();
        for m in family.members {
            let b: Vec<usize> = (0..m.n()).filter(|&u| m.lists[u].contains(x)).collect();
            if b.is_empty() {
                if seen.insert(m.lists.clone()) {
                    next.members.push(m);
                }
                continue;
            }
            for clique in completion_cliques(&sym_g.induced(&b))? {
                let inside: Vec<usize> = clique.iter().map(|&i| b[i]).collect();
                for &k in &ks {
                    let mut e = m.clone();
                    for &u in &b {
                        if inside.contains(&u) {
                            e.lists[u] = e.lists[u].inter(k.with(x));
                        } else {
                            e.lists[u].remove(x);
                        }
                    }
                    keep(e, &mut next, &mut seen, budget, "strong representatives transform")?;
                }
            }
        }
        family = next;
    }
    Ok(family)
}

/// Which of the strong-edge representative conditions hold for `{x, y}`,
/// using the smallest candidate set (the union of lists meeting `{x, y}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrongEdgeConditions {
    /// Lists meeting `{x, y}` lie inside the set (always true for the
    /// smallest candidate).
    pub covers: bool,
    /// Other members are neighbours of `x` or of `y`.
    pub neighbours: bool,
    /// Without common neighbours, other members sit on one side only.
    pub one_side: bool,
    /// With both orientations strong, other members are symmetric neighbours.
    pub symmetric: bool,
    /// With both orientations strong and no common symmetric neighbours,
    /// other members are symmetric neighbours of one side only.
    pub symmetric_one_side: bool,
}

impl StrongEdgeConditions {
    pub fn all(&self) -> bool {
        self.covers && self.neighbours && self.one_side && self.symmetric && self.symmetric_one_side
    }
}

pub fn strong_edge_candidate(inst: &ListInstance, x: usize, y: usize) -> VSet {
    let xy = VSet::single(x).with(y);
    inst.lists
        .iter()
        .filter(|l| l.intersects(xy))
        .fold(xy, |a, &l| a.union(l))
}

pub fn strong_edge_conditions(inst: &ListInstance, x: usize, y: usize) -> StrongEdgeConditions {
    let h = &inst.h;
    let xy = VSet::single(x).with(y);
    let s = strong_edge_candidate(inst, x, y);
    let rest = s.minus(xy);
    let covers = inst.lists.iter().all(|&l| !l.intersects(xy) || l.is_subset(s));
    let (nx, ny) = (h.neighbours(x).minus(xy), h.neighbours(y).minus(xy));
    let (sx, sy) = (h.symmetric_neighbours(x).minus(xy), h.symmetric_neighbours(y).minus(xy));
    let both_strong = h.is_strong(x, y) && h.is_strong(y, x);
    StrongEdgeConditions {
        covers,
        neighbours: rest.is_subset(nx.union(ny)),
        one_side: nx.intersects(ny) || rest.is_subset(nx) || rest.is_subset(ny),
        symmetric: !both_strong || rest.is_subset(sx.union(sy)),
        symmetric_one_side: !both_strong || sx.intersects(sy) || rest.is_subset(sx) || rest.is_subset(sy),
    }
}

/// Strong non-loop edges `{x, y}` (either orientation) with `x` and `y` both
/// on some list.
pub fn admissible_strong_edges(inst: &ListInstance) -> Vec<(usize, usize)> {
    let used = inst.used();
    inst.h
        .strong_edges()
        .into_iter()
        .filter(|&(x, y)| used.contains(x) && used.contains(y))
        .collect()
}

pub fn has_strong_edge_representatives(inst: &ListInstance) -> bool {
    admissible_strong_edges(inst)
        .into_iter()
        .all(|(x, y)| strong_edge_conditions(inst, x, y).all())
}

/// For each admissible strong edge `{x, y}`: branch over a maximal clique `C`
/// of a minimal chordal completion of the square of `G'` on the vertices
/// whose list meets `{x, y}`, and over a component `K` of the square of `H'`
/// on `N` (the two ends and their neighbours) minus `{x, y}`. `G'`, `H'` are
/// the underlying graphs, or the symmetric ones when both orientations are
/// strong. Outside `C`, `x` and `y` are removed; inside, lists shrink to
/// `V(K) ∪ {x, y}`.
pub fn strong_edge_representatives_transform(inst: &ListInstance, budget: &Budget) -> Result<InstanceFamily> {
    require_consistent_with_representatives(inst, "strong edge representatives transform")?;
    let h = &inst.h;
    let mut family = InstanceFamily::single(inst.clone());
    for (x, y) in h.strong_edges() {
        let xy = VSet::single(x).with(y);
        let both = h.is_strong(x, y) && h.is_strong(y, x);
        let (hg, gg) = if both {
            (h.symmetric_graph(), inst.symmetric_graph())
        } else {
            (h.underlying_graph(), inst.underlying_graph())
        };
        let n_set: VSet = hg.neighbours(x).chain(hg.neighbours(y)).collect::<VSet>().union(xy);
        let n_list: Vec<usize> = n_set.iter().collect();
        let sq = hg.induced(&n_list).square();
        let rest: VSet = (0..n_list.len()).filter(|&i| !xy.contains(n_list[i])).collect();
        let mut ks: Vec<VSet> = components_within(&sq, rest)
            .into_iter()
            .map(|c| c.iter().map(|i| n_list[i]).collect())
            .collect();
        if ks.is_empty() {
            ks.push(VSet::EMPTY);
        }
        let mut next = InstanceFamily::default();
        let mut seen = HashSet::new();
        for m in family.members {
            let used = m.used();
            if !(used.contains(x) && used.contains(y)) {
                if seen.insert(m.lists.clone()) {
                    next.members.push(m);
                }
                continue;
            }
            let b: Vec<usize> = (0..m.n()).filter(|&u| m.lists[u].intersects(xy)).collect();
            for clique in completion_cliques(&gg.induced(&b).square())? {
                let inside: Vec<usize> = clique.iter().map(|&i| b[i]).collect();
                for &k in &ks {
                    let mut e = m.clone();
                    for &u in &b {
                        if inside.contains(&u) {
                            e.lists[u] = e.lists[u].inter(k.union(xy));
                        } else {
                            e.lists[u] = e.lists[u].minus(xy);
                        }
                    }
                    keep(e, &mut next, &mut seen, budget, "strong edge representatives transform")?;
                }
            }
        }
        family = next;
    }
    Ok(family)
}
