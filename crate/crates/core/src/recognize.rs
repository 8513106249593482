//! Structural class recognition: separating edge sets, the matching and
//! domination properties, tree-like trigraphs (with replayable derivations),
//! special tree-like trigraphs, good cycles and a few auxiliary predicates.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::consistency::weakly_dominates;
use crate::error::{contract_err, input_err, Result};
use crate::trigraph::{EdgeSet, Trigraph};
use crate::vset::VSet;

/// Edges with a strong orientation, plus weak symmetric edges joining two
/// strong loops. Loops are never included.
pub fn f_of_h(h: &Trigraph) -> EdgeSet {
    let mut out = Vec::new();
    for x in 0..h.order() {
        for y in 0..h.order() {
            if x == y || !h.is_edge(x, y) {
                continue;
            }
            let strong = h.is_strong(x, y) || h.is_strong(y, x);
            let weak_pair = h.is_weak(x, y) && h.is_weak(y, x) && h.strong_loop(x) && h.strong_loop(y);
            if strong || weak_pair {
                out.push((x, y));
            }
        }
    }
    out
}

/// Every pair of `f` joins different components of `H \ F`.
pub fn separates(h: &Trigraph, f: &[(usize, usize)]) -> bool {
    let comps = h.without_pairs(f).components();
    let id = |v: usize| comps.iter().position(|c| c.contains(v));
    f.iter().all(|&(x, y)| h.is_edge(x, y) && id(x) != id(y))
}

/// All edges of `h` between different parts of `labels`.
pub fn cross_edges(h: &Trigraph, labels: &[usize]) -> EdgeSet {
    h.edges()
        .into_iter()
        .filter(|&(x, y)| labels[x] != labels[y])
        .collect()
}

/// Set partitions of `0..k` as restricted growth strings.
pub fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, k: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max {
            cur.push(l);
            go(i + 1, k, cur, max.max(l + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut Vec::new(), 0, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatchingClause {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
}

impl fmt::Display for MatchingClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn symmetric_edge(h: &Trigraph, x: usize, y: usize) -> bool {
    h.is_edge(x, y) && h.is_edge(y, x)
}

/// First violated clause of the matching property, or `None` when `f`
/// satisfies it.
///
/// Clauses quantifying over two edges of `f` use two distinct edges; the
/// clauses about symmetric edges `xz`, `yw` leaving an `F*` edge `xy` take
/// `z != x` and `w != y` (a loop is not an edge leaving its vertex).
pub fn matching_violation(h: &Trigraph, f: &[(usize, usize)]) -> Option<MatchingClause> {
    if !separates(h, f) {
        return Some(MatchingClause::M1);
    }
    let in_f = |x: usize, y: usize| f.contains(&(x, y));
    let in_fs = |x: usize, y: usize| in_f(x, y) && !h.is_strong(x, y) && !h.is_strong(y, x);
    let fs: Vec<(usize, usize)> = f.iter().copied().filter(|&(x, y)| in_fs(x, y)).collect();
    if fs.iter().any(|&(x, y)| !h.strong_loop(x) || !h.strong_loop(y)) {
        return Some(MatchingClause::M2);
    }
    let g = h.underlying_graph();
    let bridge = |x: usize, y: usize| g.is_bridge(x, y);
    let loops_ok = |a: usize, b: usize| !symmetric_edge(h, a, b) && (h.strong_loop(a) || h.strong_loop(b));
    for &(x, y) in f {
        for &(z, y2) in f {
            if y2 == y && z != x && !bridge(x, y) && !bridge(z, y) && !loops_ok(x, z) {
                return Some(MatchingClause::M3);
            }
        }
    }
    for &(x, y) in f {
        for &(x2, z) in f {
            if x2 == x && z != y && !bridge(x, y) && !bridge(x, z) && !loops_ok(y, z) {
                return Some(MatchingClause::M4);
            }
        }
    }
    let k = h.order();
    for &(x, y) in &fs {
        for z in (0..k).filter(|&z| z != x && symmetric_edge(h, x, z)) {
            for w in (0..k).filter(|&w| w != y && symmetric_edge(h, y, w)) {
                if !in_f(x, z) && (in_fs(z, w) || in_fs(x, w)) {
                    return Some(MatchingClause::M5);
                }
                if !in_f(y, w) && (in_fs(z, w) || in_fs(z, y)) {
                    return Some(MatchingClause::M6);
                }
            }
        }
    }
    None
}

pub fn matching_property(h: &Trigraph, f: &[(usize, usize)]) -> bool {
    matching_violation(h, f).is_none()
}

/// Domination property of the component `k` of `H - x`: returns the
/// domination ordering of the weak-loop symmetric neighbours of `x` in `k`,
/// or `None` when the property fails.
pub fn domination_property(h: &Trigraph, x: usize, k: VSet) -> Result<Option<Vec<usize>>> {
    if x >= h.order() || !h.strong_loop(x) {
        return Err(input_err!("vertex {} is not a strong loop", x + 1));
    }
    let (rest, map) = h.delete_vertex(x);
    if !rest.components().iter().any(|&c| map.lift(c) == k) {
        return Err(input_err!("{k:?} is not a component of H - {}", x + 1));
    }
    Ok(domination_ordering(h, x, k))
}

fn domination_ordering(h: &Trigraph, x: usize, k: VSet) -> Option<Vec<usize>> {
    let r = h.symmetric_neighbours(x).inter(k);
    if r.iter().any(|v| h.strong_loop(v)) {
        return None;
    }
    let weak: Vec<usize> = r.iter().filter(|&v| h.weak_loop(v)).collect();
    let bare: Vec<usize> = r.iter().filter(|&v| h.loopless(v)).collect();
    let all = h.vertices();
    for &z in &weak {
        if !weakly_dominates(h, z, x, k) || bare.iter().any(|&y| !weakly_dominates(h, z, y, all)) {
            return None;
        }
    }
    // Weak domination on a fixed set is a preorder, so a greedy choice of a
    // maximum element works whenever any ordering exists.
    let mut left = weak;
    let mut order = Vec::new();
    while !left.is_empty() {
        let i = left
            .iter()
            .position(|&a| left.iter().all(|&b| weakly_dominates(h, a, b, all)))?;
        order.push(left.remove(i));
    }
    Some(order)
}

/// Orderings for every component of `H - x`, or `None` if one fails.
fn all_component_orderings(h: &Trigraph, x: usize) -> Option<Vec<(VSet, Vec<usize>)>> {
    let (rest, map) = h.delete_vertex(x);
    rest.components()
        .into_iter()
        .map(|c| {
            let k = map.lift(c);
            domination_ordering(h, x, k).map(|o| (k, o))
        })
        .collect()
}

/// The underlying graph (loops ignored) is a tree.
pub fn is_trigraph_tree(h: &Trigraph) -> bool {
    h.order() > 0 && h.underlying_graph().without_loops().is_tree()
}

pub fn simple_case_applies(h: &Trigraph) -> bool {
    h.strong_loops() == h.vertices() && !h.symmetric_graph().without_loops().has_triangle()
}

/// No `x, y, z` with `xy` strong and `xz` not an edge.
pub fn slhom_equiv_condition(h: &Trigraph) -> bool {
    let k = h.order();
    !(0..k).any(|x| (0..k).any(|y| h.is_strong(x, y)) && (0..k).any(|z| !h.is_edge(x, z)))
}

/// A derivation of membership in the tree-like class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule")]
pub enum TreeLikeCertificate {
    /// No strong entries.
    Digraph,
    /// Every vertex a strong loop; symmetric graph triangle-free.
    AllStrongLoops,
    /// No weak entries.
    NoWeakEdges,
    /// Remove the strong loop `x`; `orderings` holds, per component of
    /// `H - x` (original ids), the domination ordering of its weak loops.
    /// `child` derives `H - x` (ids renumbered).
    RemoveLoop {
        x: usize,
        orderings: Vec<(VSet, Vec<usize>)>,
        child: Box<TreeLikeCertificate>,
    },
    /// Remove the edge set `f` (matching property); `child` derives `H \ F`.
    RemoveEdges {
        f: EdgeSet,
        child: Box<TreeLikeCertificate>,
    },
}

impl TreeLikeCertificate {
    /// Re-verifies every side condition against `h`.
    pub fn replay(&self, h: &Trigraph) -> Result<()> {
        match self {
            TreeLikeCertificate::Digraph => {
                if h.has_strong() {
                    return Err(contract_err!("digraph leaf on a trigraph with strong entries"));
                }
            }
            TreeLikeCertificate::AllStrongLoops => {
                if !simple_case_applies(h) {
                    return Err(contract_err!("all-strong-loop leaf does not apply"));
                }
            }
            TreeLikeCertificate::NoWeakEdges => {
                if h.has_weak() {
                    return Err(contract_err!("no-weak-edges leaf on a trigraph with weak entries"));
                }
            }
            TreeLikeCertificate::RemoveLoop { x, orderings, child } => {
                if *x >= h.order() || !h.strong_loop(*x) {
                    return Err(contract_err!("loop removal at a non-strong-loop vertex"));
                }
                if all_component_orderings(h, *x).as_ref() != Some(orderings) {
                    return Err(contract_err!("domination property fails at {}", x + 1));
                }
                child.replay(&h.delete_vertex(*x).0)?;
            }
            TreeLikeCertificate::RemoveEdges { f, child } => {
                if f.is_empty() {
                    return Err(contract_err!("empty edge removal"));
                }
                if let Some(c) = matching_violation(h, f) {
                    return Err(contract_err!("matching property fails ({c})"));
                }
                child.replay(&h.without_pairs(f))?;
            }
        }
        Ok(())
    }

    /// One line per rule application, with 1-based ids of the original `H`.
    pub fn steps(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut origin: Vec<usize> = (0..64).collect();
        let mut cert = self;
        loop {
            match cert {
                TreeLikeCertificate::Digraph => out.push("no strong entries left: digraph".into()),
                TreeLikeCertificate::AllStrongLoops => out.push("all strong loops, triangle-free: 2SAT".into()),
                TreeLikeCertificate::NoWeakEdges => out.push("no weak entries left: exact".into()),
                TreeLikeCertificate::RemoveLoop { x, child, .. } => {
                    out.push(format!("remove strong loop {}", origin[*x] + 1));
                    origin.remove(*x);
                    cert = child;
                    continue;
                }
                TreeLikeCertificate::RemoveEdges { f, child } => {
                    let pairs: Vec<String> = f.iter().map(|&(a, b)| format!("{}-{}", origin[a] + 1, origin[b] + 1)).collect();
                    out.push(format!("remove edges {}", pairs.join(" ")));
                    cert = child;
                    continue;
                }
            }
            return out;
        }
    }

    /// Number of rule applications.
    pub fn depth(&self) -> usize {
        match self {
            TreeLikeCertificate::RemoveLoop { child, .. } | TreeLikeCertificate::RemoveEdges { child, .. } => {
                1 + child.depth()
            }
            _ => 0,
        }
    }
}

/// Exhaustive memoized search for a tree-like derivation.
pub fn recognize_tree_like(h: &Trigraph, budget: &Budget) -> Result<Option<TreeLikeCertificate>> {
    let mut memo = HashMap::new();
    let mut meter = Meter::new(budget.search_nodes, "tree-like recognition");
    tree_like(h, &mut memo, &mut meter)
}

fn tree_like(
    h: &Trigraph,
    memo: &mut HashMap<String, Option<TreeLikeCertificate>>,
    meter: &mut Meter,
) -> Result<Option<TreeLikeCertificate>> {
    let key = h.matrix_string();
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let found = tree_like_uncached(h, memo, meter)?;
    memo.insert(key, found.clone());
    Ok(found)
}

fn tree_like_uncached(
    h: &Trigraph,
    memo: &mut HashMap<String, Option<TreeLikeCertificate>>,
    meter: &mut Meter,
) -> Result<Option<TreeLikeCertificate>> {
    meter.tick()?;
    if !h.has_strong() {
        return Ok(Some(TreeLikeCertificate::Digraph));
    }
    if simple_case_applies(h) {
        return Ok(Some(TreeLikeCertificate::AllStrongLoops));
    }
    if !h.has_weak() {
        return Ok(Some(TreeLikeCertificate::NoWeakEdges));
    }
    for x in h.strong_loops().iter() {
        if let Some(orderings) = all_component_orderings(h, x) {
            if let Some(child) = tree_like(&h.delete_vertex(x).0, memo, meter)? {
                return Ok(Some(TreeLikeCertificate::RemoveLoop {
                    x,
                    orderings,
                    child: Box::new(child),
                }));
            }
        }
    }
    for labels in set_partitions(h.order()) {
        meter.tick()?;
        let f = cross_edges(h, &labels);
        if f.is_empty() || !matching_property(h, &f) {
            continue;
        }
        if let Some(child) = tree_like(&h.without_pairs(&f), memo, meter)? {
            return Ok(Some(TreeLikeCertificate::RemoveEdges {
                f,
                child: Box::new(child),
            }));
        }
    }
    Ok(None)
}

fn special_conditions_hold(h: &Trigraph, f: &[(usize, usize)], required: &[(usize, usize)]) -> bool {
    if !required.iter().all(|e| f.contains(e)) || !matching_property(h, f) {
        return false;
    }
    let rest = h.without_pairs(f);
    rest.strong_loops()
        .iter()
        .all(|x| all_component_orderings(&rest, x).is_some())
}

/// An edge set `F' ⊇ F(H)` with the matching property such that `H \ F'`
/// has the domination property at every strong loop. Tries `F(H)` itself
/// first, then every vertex partition.
pub fn recognize_special_tree_like(h: &Trigraph, budget: &Budget) -> Result<Option<EdgeSet>> {
    let required = f_of_h(h);
    if special_conditions_hold(h, &required, &required) {
        return Ok(Some(required));
    }
    let mut meter = Meter::new(budget.search_nodes, "special tree-like recognition");
    for labels in set_partitions(h.order()) {
        meter.tick()?;
        let f = cross_edges(h, &labels);
        if special_conditions_hold(h, &f, &required) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Which clause makes a trigraph cycle good.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GoodCycle {
    TwoStrongEdges,
    ThreeConsecutiveLoops,
    TwoLoopPairs,
    StrongEdgeAndLoopPair,
    LoopsOnNonsymmetricEdge,
    LoopWithLooplessNeighbours,
    LoopWithNonsymmetricEdges,
    StrongEdgeWithLooplessEnd,
}

impl GoodCycle {
    pub fn roman(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"][self as usize]
    }
}

impl fmt::Display for GoodCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

/// Vertices in cyclic order when the underlying graph (loops ignored) is a
/// cycle.
pub fn cycle_order(h: &Trigraph) -> Option<Vec<usize>> {
    let g = h.underlying_graph().without_loops();
    if !g.is_cycle() {
        return None;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = g.neighbours(cur).find(|&v| v != prev)?;
        if next == 0 {
            return Some(order);
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
}

/// First satisfied good-cycle clause.
pub fn good_cycle_condition(h: &Trigraph) -> Result<Option<GoodCycle>> {
    let order = cycle_order(h).ok_or_else(|| input_err!("not a trigraph cycle"))?;
    let k = order.len();
    let at = |i: usize| order[i % k];
    let strong_edge = |a: usize, b: usize| h.is_strong(a, b) || h.is_strong(b, a);
    let sl = |a: usize| h.strong_loop(a);
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (at(i), at(i + 1))).collect();
    let strong: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| strong_edge(a, b)).collect();
    let loop_pairs: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| sl(a) && sl(b)).collect();
    let same = |p: (usize, usize), q: (usize, usize)| (p.0 == q.0 && p.1 == q.1) || (p.0 == q.1 && p.1 == q.0);
    let nbrs = |i: usize| (at(i + k - 1), at(i + 1));

    if strong.len() >= 2 {
        return Ok(Some(GoodCycle::TwoStrongEdges));
    }
    if (0..k).any(|i| sl(at(i)) && sl(at(i + 1)) && sl(at(i + 2))) {
        return Ok(Some(GoodCycle::ThreeConsecutiveLoops));
    }
    if loop_pairs.len() >= 2 {
        return Ok(Some(GoodCycle::TwoLoopPairs));
    }
    if strong.iter().any(|&e| loop_pairs.iter().any(|&p| !same(e, p))) {
        return Ok(Some(GoodCycle::StrongEdgeAndLoopPair));
    }
    if loop_pairs.iter().any(|&(a, b)| !symmetric_edge(h, a, b)) {
        return Ok(Some(GoodCycle::LoopsOnNonsymmetricEdge));
    }
    if (0..k).any(|i| {
        let (p, q) = nbrs(i);
        sl(at(i)) && h.loopless(p) && h.loopless(q)
    }) {
        return Ok(Some(GoodCycle::LoopWithLooplessNeighbours));
    }
    if (0..k).any(|i| {
        let (p, q) = nbrs(i);
        sl(at(i)) && !symmetric_edge(h, at(i), p) && !symmetric_edge(h, at(i), q)
    }) {
        return Ok(Some(GoodCycle::LoopWithNonsymmetricEdges));
    }
    if strong.iter().any(|&(a, b)| h.loopless(a) || h.loopless(b)) {
        return Ok(Some(GoodCycle::StrongEdgeWithLooplessEnd));
    }
    Ok(None)
}

/// Adjacent `x, y` with a strong `xy` between two weak loops, or with all of
/// `xx, xy, yx, yy` edges and one of them strong.
pub fn unresolved_cycle_pattern(h: &Trigraph) -> bool {
    let k = h.order();
    (0..k).any(|x| {
        (0..k).any(|y| {
            x != y
                && ((h.is_strong(x, y) && h.weak_loop(x) && h.weak_loop(y))
                    || ([(x, x), (x, y), (y, x), (y, y)].iter().all(|&(a, b)| h.is_edge(a, b))
                        && [(x, x), (x, y), (y, x), (y, y)].iter().any(|&(a, b)| h.is_strong(a, b))))
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedDigraph {
    pub matrix: Vec<String>,
    /// Original 1-based ids of the kept vertices.
    pub vertices: Vec<usize>,
}

impl DerivedDigraph {
    pub fn new((h, map): (Trigraph, crate::trigraph::Remap)) -> DerivedDigraph {
        DerivedDigraph {
            matrix: h.rows(),
            vertices: map.origin.iter().map(|x| x + 1).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub k: usize,
    pub is_trigraph_tree: bool,
    /// `F'` as 1-based pairs.
    pub special_tree_like: Option<Vec<(usize, usize)>>,
    /// Derivation steps when tree-like.
    pub tree_like: Option<Vec<String>>,
    /// Why no derivation exists, when not tree-like.
    pub not_tree_like: Option<String>,
    pub is_cycle: bool,
    pub good_cycle: Option<String>,
    pub unresolved_cycle: bool,
    pub simple_case: bool,
    pub slhom_equiv: bool,
    pub h_minus: DerivedDigraph,
    pub h_minus_minus: DerivedDigraph,
    pub verdict: String,
}

fn not_tree_like_reason(h: &Trigraph) -> String {
    if !h.has_strong() || !h.has_weak() {
        return "a leaf rule applies".into();
    }
    for x in h.strong_loops().iter() {
        let (rest, map) = h.delete_vertex(x);
        for c in rest.components() {
            let k = map.lift(c);
            if domination_ordering(h, x, k).is_none() {
                return format!("domination fails at vertex {} for component {k:?}", x + 1);
            }
        }
    }
    if h.strong_loops().is_empty() {
        "no strong loop and no separating edge set with the matching property".into()
    } else {
        "every applicable rule leads to a trigraph that is not tree-like".into()
    }
}

pub fn classify(h: &Trigraph, budget: &Budget) -> Result<ClassReport> {
    let special = recognize_special_tree_like(h, budget)?;
    let tree_like = recognize_tree_like(h, budget)?;
    let cycle = cycle_order(h).is_some();
    let good = if cycle { good_cycle_condition(h)? } else { None };
    let unresolved = cycle && good.is_none() && h.has_strong();
    let simple = simple_case_applies(h);
    let verdict = if tree_like.is_some() {
        "tree-like: list homomorphism to H is polynomially equivalent to list homomorphism to H-minus".to_string()
    } else if let Some(c) = good {
        if h.order() >= 5 {
            format!("good cycle {c}: reducible to an induced subtrigraph; polynomial or NP-complete")
        } else {
            format!("good cycle {c} on fewer than five vertices: small cycle, outside the supported reductions")
        }
    } else if simple {
        "every vertex a strong loop with triangle-free symmetric graph: polynomial via 2SAT".to_string()
    } else if unresolved {
        "unresolved trigraph cycle".to_string()
    } else {
        "no structural classification applies; solved exactly".to_string()
    };
    Ok(ClassReport {
        k: h.order(),
        is_trigraph_tree: is_trigraph_tree(h),
        special_tree_like: special.map(|f| f.into_iter().map(|(x, y)| (x + 1, y + 1)).collect()),
        not_tree_like: tree_like.is_none().then(|| not_tree_like_reason(h)),
        tree_like: tree_like.map(|c| c.steps()),
        is_cycle: cycle,
        good_cycle: good.map(|c| c.roman().to_string()),
        unresolved_cycle: unresolved,
        simple_case: simple,
        slhom_equiv: slhom_equiv_condition(h),
        h_minus: DerivedDigraph::new(h.h_minus()),
        h_minus_minus: DerivedDigraph::new(h.h_minus_minus()),
        verdict,
    })
}
