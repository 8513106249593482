//! List reductions and transformations that need no chordal machinery: arc
//! consistency, separator consistency, sparse-dense consistency and weak
//! domination.

use std::collections::HashSet;

use crate::budget::{check_family, Budget, Meter};
use crate::error::{contract_err, input_err, Result};
use crate::instance::{InstanceFamily, ListInstance};
use crate::network::Network;
use crate::representatives::{has_representatives, representatives_transform};
use crate::trigraph::{EdgeSet, Trigraph};
use crate::vset::VSet;

/// Decides whether a constraint network has a solution.
pub type Decider<'a> = &'a dyn Fn(&Network) -> Result<bool>;

/// Decider backed by exact backtracking.
pub fn exact_decider(budget: Budget) -> impl Fn(&Network) -> Result<bool> {
    move |net: &Network| net.decide(&budget)
}

pub fn arc_reduce(inst: &ListInstance) -> ListInstance {
    let mut net = Network::from_instance(inst);
    net.arc_reduce();
    let mut out = inst.clone();
    out.lists = net.lists;
    out
}

pub fn is_arc_consistent(inst: &ListInstance) -> bool {
    Network::from_instance(inst).is_arc_consistent()
}

/// Every edge of `h` with an endpoint in `x`, loops included, both
/// orientations.
pub fn edges_touching(h: &Trigraph, x: VSet) -> EdgeSet {
    h.edges()
        .into_iter()
        .filter(|&(p, q)| x.contains(p) || x.contains(q))
        .collect()
}

/// One separator test per (component of the punctured graph, component of
/// `H \ F`): the vertex set `C`, the component `K`, and whether `C` has a
/// list `K`-colouring. Pairs where `K` is absent from every list of `C` are
/// skipped.
fn separator_tests(
    inst: &ListInstance,
    f: &[(usize, usize)],
    decide: Decider,
) -> Result<Vec<(Vec<usize>, VSet, bool)>> {
    let punctured = inst.puncture(f);
    let hf = inst.h.without_pairs(f);
    let ks = hf.components();
    let mut out = Vec::new();
    for c in punctured.underlying_graph().components() {
        for &k in &ks {
            if !c.iter().any(|&u| inst.lists[u].intersects(k)) {
                continue;
            }
            let mut sub = inst.with_trigraph(hf.clone());
            for l in &mut sub.lists {
                *l = l.inter(k);
            }
            // Arcs removed by the puncture impose nothing on the component.
            let net = Network::relaxed(&sub, |u, v| inst.arc(u, v) && !punctured.arc(u, v)).induced(&c);
            let ok = decide(&net)?;
            out.push((c.clone(), k, ok));
        }
    }
    Ok(out)
}

/// For every component `C` of the punctured graph and every component `K` of
/// `H \ F`, either `C` has a list `K`-colouring or no list of `C` meets `K`.
///
/// Arcs removed by the puncture are left unconstrained in the `K`-colouring
/// test: they join vertices whose images may use an `F` edge, so requiring
/// them to map onto non-strong pairs would reject genuine solutions.
pub fn is_separator_consistent(inst: &ListInstance, f: &[(usize, usize)], decide: Decider) -> Result<bool> {
    Ok(separator_tests(inst, f, decide)?.iter().all(|t| t.2))
}

/// Removes `V(K)` from the lists of `C` whenever the `K`-colouring test
/// fails, repeating until separator-consistent.
pub fn separator_reduce(inst: &ListInstance, f: &[(usize, usize)], decide: Decider) -> Result<ListInstance> {
    let mut cur = inst.clone();
    loop {
        let mut changed = false;
        for (c, k, ok) in separator_tests(&cur, f, decide)? {
            if !ok {
                for u in c {
                    cur.lists[u] = cur.lists[u].minus(k);
                }
                changed = true;
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
}

/// Alternates arc and separator reduction until neither changes anything.
pub fn joint_fixpoint(inst: &ListInstance, f: &[(usize, usize)], decide: Decider) -> Result<ListInstance> {
    let mut cur = arc_reduce(inst);
    loop {
        let next = arc_reduce(&separator_reduce(&cur, f, decide)?);
        if next.lists == cur.lists {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Every list inside `x ∪ y` lies inside `x` or inside `y`.
pub fn is_sparse_dense_consistent(inst: &ListInstance, x: VSet, y: VSet) -> bool {
    let xy = x.union(y);
    inst.lists
        .iter()
        .all(|&l| !l.is_subset(xy) || l.is_subset(x) || l.is_subset(y))
}

/// All partitions `0..n = V1 ∪ V2` with `s_test(V1)` and `d_test(V2)`, for
/// hereditary tests. Branches vertex by vertex, pruning as soon as a side
/// fails; `V1` is tried first so the output is in a fixed order.
pub fn sparse_dense_partitions(
    n: usize,
    s_test: &mut dyn FnMut(&[usize]) -> Result<bool>,
    d_test: &mut dyn FnMut(&[usize]) -> Result<bool>,
    budget: &Budget,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut out = Vec::new();
    let mut meter = Meter::new(budget.search_nodes, "sparse-dense partition search");
    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    partitions_from(0, n, &mut v1, &mut v2, s_test, d_test, &mut meter, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn partitions_from(
    u: usize,
    n: usize,
    v1: &mut Vec<usize>,
    v2: &mut Vec<usize>,
    s_test: &mut dyn FnMut(&[usize]) -> Result<bool>,
    d_test: &mut dyn FnMut(&[usize]) -> Result<bool>,
    meter: &mut Meter,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) -> Result<()> {
    meter.tick()?;
    if u == n {
        out.push((v1.clone(), v2.clone()));
        return Ok(());
    }
    v1.push(u);
    if s_test(v1)? {
        partitions_from(u + 1, n, v1, v2, s_test, d_test, meter, out)?;
    }
    v1.pop();
    v2.push(u);
    if d_test(v2)? {
        partitions_from(u + 1, n, v1, v2, s_test, d_test, meter, out)?;
    }
    v2.pop();
    Ok(())
}

/// Whether the digraph induced by `verts` maps to `h[side]` (no lists).
fn colourable(inst: &ListInstance, verts: &[usize], side: VSet, decide: Decider) -> Result<bool> {
    let mut sub = inst.induced(verts);
    for l in &mut sub.lists {
        *l = side;
    }
    decide(&Network::from_instance(&sub))
}

/// Splits every list inside `x ∪ y` to its `x` part or its `y` part, one
/// member per admissible partition of those vertices. Members with an empty
/// list are dropped.
pub fn sparse_dense_transform(
    inst: &ListInstance,
    x: VSet,
    y: VSet,
    decide: Decider,
    budget: &Budget,
) -> Result<InstanceFamily> {
    let h = &inst.h;
    if let Some(v) = x.iter().find(|&v| !h.strong_loop(v)) {
        return Err(input_err!("vertex {} of the dense side has no strong loop", v + 1));
    }
    if let Some(v) = y.iter().find(|&v| !h.loopless(v)) {
        return Err(input_err!("vertex {} of the sparse side has a loop", v + 1));
    }
    if x.intersects(y) {
        return Err(input_err!("dense and sparse sides overlap"));
    }
    let xy = x.union(y);
    let z: Vec<usize> = (0..inst.n()).filter(|&u| inst.lists[u].is_subset(xy)).collect();
    let mut s_test = |part: &[usize]| {
        let verts: Vec<usize> = part.iter().map(|&i| z[i]).collect();
        colourable(inst, &verts, x, decide)
    };
    let mut d_test = |part: &[usize]| {
        let verts: Vec<usize> = part.iter().map(|&i| z[i]).collect();
        colourable(inst, &verts, y, decide)
    };
    let parts = sparse_dense_partitions(z.len(), &mut s_test, &mut d_test, budget)?;
    let mut family = InstanceFamily::default();
    for (a, b) in parts {
        let mut m = inst.clone();
        for i in a {
            m.lists[z[i]] = m.lists[z[i]].inter(x);
        }
        for i in b {
            m.lists[z[i]] = m.lists[z[i]].inter(y);
        }
        if !m.has_empty_list() {
            family.push_unique(m);
            check_family(family.len(), budget, "sparse-dense transform")?;
        }
    }
    Ok(family)
}

/// For every `z` in `d`: `zx` weak implies `zy` weak, and `xz` weak implies
/// `yz` weak.
pub fn weakly_dominates(h: &Trigraph, y: usize, x: usize, d: VSet) -> bool {
    d.iter()
        .all(|z| (!h.is_weak(z, x) || h.is_weak(z, y)) && (!h.is_weak(x, z) || h.is_weak(y, z)))
}

/// Removes `x` from every list that contains `y`, where `y` weakly dominates
/// `x`. Only sound on arc-consistent lists with representatives; both are
/// checked.
pub fn domination_reduce(inst: &ListInstance, x: usize, y: usize) -> Result<ListInstance> {
    if !weakly_dominates(&inst.h, y, x, inst.h.vertices()) {
        return Err(contract_err!("{} does not weakly dominate {}", y + 1, x + 1));
    }
    if !is_arc_consistent(inst) || !has_representatives(inst) {
        return Err(contract_err!(
            "domination reduction needs arc-consistent lists with representatives"
        ));
    }
    let mut out = inst.clone();
    for l in &mut out.lists {
        if l.contains(y) {
            l.remove(x);
        }
    }
    Ok(out)
}

/// Combined transform for strong-loop vertices `x`, loopless `y` and
/// weak-loop `z` (each of `z` weakly dominating each of `y`). Members are
/// arc-consistent, separator-consistent on the edges touching `x`, and
/// sparse-dense-consistent on `x` and `y`.
pub fn combined_transform(
    inst: &ListInstance,
    x: VSet,
    y: VSet,
    z: VSet,
    decide: Decider,
    budget: &Budget,
) -> Result<InstanceFamily> {
    let h = &inst.h;
    if let Some(v) = x.iter().find(|&v| !h.strong_loop(v)) {
        return Err(input_err!("vertex {} has no strong loop", v + 1));
    }
    if let Some(v) = y.iter().find(|&v| !h.loopless(v)) {
        return Err(input_err!("vertex {} has a loop", v + 1));
    }
    if let Some(v) = z.iter().find(|&v| !h.weak_loop(v)) {
        return Err(input_err!("vertex {} has no weak loop", v + 1));
    }
    for zz in z.iter() {
        for yy in y.iter() {
            if !weakly_dominates(h, zz, yy, h.vertices()) {
                return Err(input_err!("{} does not weakly dominate {}", zz + 1, yy + 1));
            }
        }
    }
    let xyz = x.union(y).union(z);
    if let Some(u) = (0..inst.n()).find(|&u| inst.lists[u].intersects(x) && !inst.lists[u].is_subset(xyz)) {
        return Err(input_err!(
            "list of vertex {} meets the strong-loop side but leaves the three sides",
            u + 1
        ));
    }

    let start = arc_reduce(inst);
    if start.has_empty_list() {
        return Ok(InstanceFamily::default());
    }
    // Domination needs representatives; branch for them only when used.
    let needs_domination = y.iter().any(|yy| {
        z.iter()
            .any(|zz| start.lists.iter().any(|l| l.contains(yy) && l.contains(zz)))
    });
    let seeds = if needs_domination && !has_representatives(&start) {
        representatives_transform(&start, budget)?
    } else {
        InstanceFamily::single(start)
    };

    let f = edges_touching(h, x);
    let mut seen = HashSet::new();
    let mut family = InstanceFamily::default();
    for mut m in seeds.members {
        let mut alive = true;
        'dom: for yy in y.iter() {
            for zz in z.iter() {
                if m.lists.iter().any(|l| l.contains(yy) && l.contains(zz)) {
                    m = arc_reduce(&domination_reduce(&m, yy, zz)?);
                    if m.has_empty_list() {
                        alive = false;
                        break 'dom;
                    }
                }
            }
        }
        if !alive {
            continue;
        }
        for part in sparse_dense_transform(&m, x, y, decide, budget)?.members {
            let fixed = joint_fixpoint(&part, &f, decide)?;
            if !fixed.has_empty_list() && seen.insert(fixed.lists.clone()) {
                family.members.push(fixed);
                check_family(family.len(), budget, "combined transform")?;
            }
        }
    }
    Ok(family)
}
