//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::sync::atomic::{AtomicUsize, Ordering::Relaxed};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trihom::consistency::*;
use trihom::gen::*;
use trihom::graph::{chordal_maximal_cliques, is_chordal, minimal_chordal_completion};
use trihom::pipeline::*;
use trihom::recognize::*;
use trihom::representatives::*;
use trihom::surjective::*;
use trihom::trigraph::fixtures;
use trihom::twosat::{Lit, TwoSat};
use trihom::*;

static CONTRACT_ERRORS: AtomicUsize = AtomicUsize::new(0);
static CERTIFICATES: AtomicUsize = AtomicUsize::new(0);
static BAD_CERTIFICATES: AtomicUsize = AtomicUsize::new(0);

/// Collects failures of one criterion.
#[derive(Default)]
struct Suite {
    checks: usize,
    failures: Vec<String>,
}

impl Suite {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    /// Unwraps a result, recording errors (contract violations separately).
    fn run<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                if matches!(e, Error::Contract(_)) {
                    CONTRACT_ERRORS.fetch_add(1, Relaxed);
                }
                let msg = what();
                self.check(false, || format!("{msg}: {e}"));
                None
            }
        }
    }

    /// Decision of a solver result, validating any certificate.
    fn decision(&mut self, inst: &ListInstance, r: Result<Option<Certificate>>, surjective: bool) -> Option<bool> {
        let f = self.run(r, || format!("{inst:?}"))?;
        if let Some(f) = &f {
            CERTIFICATES.fetch_add(1, Relaxed);
            if !check_certificate(inst, f, surjective).unwrap_or(false) {
                BAD_CERTIFICATES.fetch_add(1, Relaxed);
                self.check(false, || format!("invalid certificate for {inst:?}"));
            }
        }
        Some(f.is_some())
    }

    fn report(self, n: usize, title: &str, detail: String, started: Instant) -> bool {
        let pass = self.failures.is_empty();
        println!(
            "criterion {n:>2} {} — {title}: {} checks, {} failures; {detail} ({:.1}s)",
            if pass { "PASS" } else { "FAIL" },
            self.checks,
            self.failures.len(),
            started.elapsed().as_secs_f64()
        );
        for f in self.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {f}");
        }
        pass
    }
}

fn budget() -> Budget {
    Budget::default()
}

fn oracle(inst: &ListInstance) -> bool {
    brute_force(inst, false, &budget()).expect("oracle within budget").is_some()
}

fn any_solvable(family: &InstanceFamily) -> bool {
    family.members.iter().any(oracle)
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
    Graph::from_edges(n, &edges)
}

/// Induced 2K2, C4 or C5.
fn has_forbidden_split_subgraph(g: &Graph) -> bool {
    let n = g.order();
    let subsets = |size: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == size);
    let degrees = |verts: &[usize]| -> Vec<usize> {
        verts.iter().map(|&u| verts.iter().filter(|&&v| v != u && g.has_edge(u, v)).count()).collect()
    };
    for m in subsets(4).chain(subsets(5)) {
        let verts: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
        let d = degrees(&verts);
        if (verts.len() == 4 && (d.iter().all(|&x| x == 1) || d.iter().all(|&x| x == 2)))
            || (verts.len() == 5 && d.iter().all(|&x| x == 2))
        {
            return true;
        }
    }
    false
}

fn criterion_1() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut yes = 0;
    let mut graphs = 0;
    for n in 0..=6usize {
        for mask in 0u32..1 << (n * (n.max(1) - 1) / 2) {
            let g = graph_from_mask(n, mask);
            let inst = ListInstance::from_graph(fixtures::split(), &g);
            let Some(sol) = s.run(solve(&inst, Strategy::Auto, &budget()), || format!("graph {n}/{mask}")) else {
                continue;
            };
            let got = s.decision(&inst, Ok(sol.certificate), false).unwrap_or(false);
            let split = !has_forbidden_split_subgraph(&g);
            s.check(got == split, || format!("n={n} mask={mask}: solver {got}, forbidden-subgraph test {split}"));
            s.check(got == oracle(&inst), || format!("n={n} mask={mask}: oracle disagrees"));
            yes += got as usize;
            graphs += 1;
        }
    }
    s.report(1, "split graphs", format!("{graphs} graphs, {yes} split"), t)
}

fn random_small(rng: &mut ChaCha8Rng, max_k: usize) -> (Trigraph, ListInstance) {
    let k = rng.gen_range(1..=max_k);
    let h = random_trigraph(k, rng);
    let n = rng.gen_range(0..=7);
    let inst = random_instance(&h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.5..1.0), rng);
    (h, inst)
}

/// Members of the representatives transform (at most `limit`), which are
/// arc-consistent with representatives.
fn with_representatives(s: &mut Suite, inst: &ListInstance, limit: usize) -> Vec<ListInstance> {
    s.run(representatives_transform(inst, &budget()), || format!("{inst:?}"))
        .map(|f| f.members.into_iter().take(limit).collect())
        .unwrap_or_default()
}

fn criterion_2() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let decide = exact_decider(budget());
    const NAMES: [&str; 9] = [
        "arc",
        "separator",
        "joint",
        "domination",
        "representatives",
        "strong-representatives",
        "strong-edge-representatives",
        "sparse-dense",
        "combined",
    ];
    const ARC: usize = 0;
    const SEPARATOR: usize = 1;
    const JOINT: usize = 2;
    const DOMINATION: usize = 3;
    const REPS: usize = 4;
    const STRONG_REPS: usize = 5;
    const EDGE_REPS: usize = 6;
    const SPARSE_DENSE: usize = 7;
    const COMBINED: usize = 8;
    let mut counts = [0usize; 9];
    let target = 300;

    // Reductions: arc consistency, separator consistency, both jointly.
    while counts[ARC] < target {
        let (h, inst) = random_small(&mut rng, 5);
        let want = oracle(&inst);
        s.check(oracle(&arc_reduce(&inst)) == want, || format!("arc consistency: {inst:?}"));
        let edges = h.edges();
        let f: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(0.4)).collect();
        if let Some(r) = s.run(separator_reduce(&inst, &f, &decide), || format!("{inst:?}")) {
            s.check(oracle(&r) == want, || format!("separator reduction {f:?}: {inst:?}"));
        }
        if let Some(r) = s.run(joint_fixpoint(&inst, &f, &decide), || format!("{inst:?}")) {
            s.check(oracle(&r) == want, || format!("joint reduction {f:?}: {inst:?}"));
        }
        counts[ARC] += 1;
        counts[SEPARATOR] += 1;
        counts[JOINT] += 1;
    }
    // Weak domination, on arc-consistent lists with representatives.
    while counts[DOMINATION] < target {
        let (h, inst) = random_small(&mut rng, 4);
        let k = h.order();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|x| (0..k).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && weakly_dominates(&h, y, x, h.vertices()))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        let (x, y) = pairs[rng.gen_range(0..pairs.len())];
        for m in with_representatives(&mut s, &inst, 3) {
            if let Some(r) = s.run(domination_reduce(&m, x, y), || format!("{m:?}")) {
                s.check(oracle(&r) == oracle(&m), || format!("domination {y} over {x}: {m:?}"));
                counts[DOMINATION] += 1;
            }
        }
    }
    // Transformations: representatives, strong representatives, strong edge
    // representatives.
    while counts[REPS] < target || counts[STRONG_REPS] < target || counts[EDGE_REPS] < target {
        let (h, inst) = random_small(&mut rng, 5);
        let want = oracle(&inst);
        let Some(fam) = s.run(representatives_transform(&inst, &budget()), || format!("{inst:?}")) else {
            continue;
        };
        s.check(any_solvable(&fam) == want, || format!("representatives: {inst:?}"));
        s.check(fam.members.iter().all(has_representatives), || format!("representatives missing: {inst:?}"));
        counts[REPS] += 1;
        for m in fam.members.iter().take(3) {
            if h.strong_loops().is_empty() {
                break;
            }
            if let Some(f) = s.run(strong_representatives_transform(m, &budget()), || format!("{m:?}")) {
                s.check(any_solvable(&f) == oracle(m), || format!("strong representatives: {m:?}"));
                counts[STRONG_REPS] += 1;
            }
        }
        for m in fam.members.iter().take(3) {
            if h.strong_edges().is_empty() {
                break;
            }
            if let Some(f) = s.run(strong_edge_representatives_transform(m, &budget()), || format!("{m:?}")) {
                s.check(any_solvable(&f) == oracle(m), || format!("strong edge representatives: {m:?}"));
                counts[EDGE_REPS] += 1;
            }
        }
    }
    // Sparse-dense transform and the combined transform.
    while counts[SPARSE_DENSE] < target || counts[COMBINED] < target {
        let (h, mut inst) = random_small(&mut rng, 5);
        let x: VSet = h.strong_loops().iter().filter(|_| rng.gen_bool(0.6)).collect();
        let y: VSet = (0..h.order()).filter(|&v| h.loopless(v) && rng.gen_bool(0.6)).collect();
        if x.is_empty() {
            continue;
        }
        if counts[SPARSE_DENSE] < target {
            if let Some(f) = s.run(sparse_dense_transform(&inst, x, y, &decide, &budget()), || format!("{inst:?}")) {
                s.check(any_solvable(&f) == oracle(&inst), || format!("sparse-dense {x:?} {y:?}: {inst:?}"));
                counts[SPARSE_DENSE] += 1;
            }
        }
        let z: VSet = (0..h.order())
            .filter(|&v| h.weak_loop(v) && y.iter().all(|w| weakly_dominates(&h, v, w, h.vertices())))
            .collect();
        let xyz = x.union(y).union(z);
        for l in &mut inst.lists {
            if l.intersects(x) {
                *l = l.inter(xyz);
            }
        }
        if let Some(f) = s.run(combined_transform(&inst, x, y, z, &decide, &budget()), || format!("{inst:?}")) {
            s.check(any_solvable(&f) == oracle(&inst), || format!("combined {x:?} {y:?} {z:?}: {inst:?}"));
            counts[COMBINED] += 1;
        }
    }
    let detail = NAMES
        .iter()
        .zip(counts)
        .map(|(n, c)| format!("{n}:{c}"))
        .collect::<Vec<_>>()
        .join(" ");
    s.report(2, "reductions and transformations preserve decisions", detail, t)
}

fn criterion_3() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut members = 0;
    for _ in 0..600 {
        let h = random_tree(rng.gen_range(1..=5), &mut rng);
        let n = rng.gen_range(0..=7);
        let inst = random_instance(&h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.5..1.0), &mut rng);
        let want = oracle(&inst);
        if let Some(got) = s.decision(&inst, solve_tree(&inst, &budget()), false) {
            s.check(got == want, || format!("tree solver: {inst:?}"));
        }
        if let Some(fam) = s.run(reduce_to_digraph_family(&inst, &budget()), || format!("{inst:?}")) {
            members += fam.len();
            s.check(fam.members.iter().all(|m| !m.h.has_strong()), || format!("strong entry emitted: {inst:?}"));
            s.check(any_solvable(&fam) == want, || format!("digraph family: {inst:?}"));
        }
    }
    s.report(3, "trigraph trees", format!("600 instances, {members} digraph members"), t)
}

/// All trigraphs on `k` vertices.
fn all_trigraphs(k: usize) -> impl Iterator<Item = Trigraph> {
    (0..3usize.pow((k * k) as u32)).map(move |mut code| {
        let mut h = Trigraph::new(k);
        for x in 0..k {
            for y in 0..k {
                h.set(x, y, EdgeKind::ALL[code % 3]);
                code /= 3;
            }
        }
        h
    })
}

fn criterion_4() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut members: Vec<(Trigraph, TreeLikeCertificate)> = Vec::new();
    let mut enumerated = 0;
    for k in 1..=3 {
        for h in all_trigraphs(k) {
            enumerated += 1;
            if let Some(Some(c)) = s.run(recognize_tree_like(&h, &budget()), || h.to_tri()) {
                members.push((h, c));
            }
        }
    }
    let found = members.len();
    // Four-vertex trigraphs are sampled rather than enumerated.
    let mut sampled = 0;
    while sampled < 150 {
        let h = if sampled % 2 == 0 { random_trigraph(4, &mut rng) } else { random_tree(4, &mut rng) };
        if let Some(Some(c)) = s.run(recognize_tree_like(&h, &budget()), || h.to_tri()) {
            members.push((h, c));
            sampled += 1;
        }
    }
    let mut trees = 0;
    for i in 0..900 {
        let (h, cert) = if i % 3 == 0 {
            &members[found + rng.gen_range(0..sampled)]
        } else {
            &members[rng.gen_range(0..found)]
        };
        let n = rng.gen_range(0..=7);
        let inst = random_instance(h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.5..1.0), &mut rng);
        let want = oracle(&inst);
        if let Some(got) = s.decision(&inst, solve_tree_like(&inst, cert, &budget()), false) {
            s.check(got == want, || format!("tree-like solver: {inst:?}"));
            if is_trigraph_tree(h) {
                trees += 1;
                if let Some(tree) = s.decision(&inst, solve_tree(&inst, &budget()), false) {
                    s.check(tree == got, || format!("tree and tree-like solvers differ: {inst:?}"));
                }
            }
        }
    }
    s.report(
        4,
        "tree-like trigraphs",
        format!("{found} members among {enumerated} trigraphs with k ≤ 3, {sampled} sampled with k = 4; 900 instances, {trees} over trees"),
        t,
    )
}

fn criterion_5() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let (mut trees, mut special, mut tree_like) = (0, 0, 0);
    for code in 0..729usize {
        let mut h = Trigraph::new(3);
        let mut c = code;
        for x in 0..3 {
            for y in x..3 {
                h.set_sym(x, y, EdgeKind::ALL[c % 3]);
                c /= 3;
            }
        }
        let is_tree = is_trigraph_tree(&h);
        let sp = s.run(recognize_special_tree_like(&h, &budget()), || h.to_tri()).flatten();
        let tl = s.run(recognize_tree_like(&h, &budget()), || h.to_tri()).flatten();
        if let Some(cert) = &tl {
            s.check(cert.replay(&h).is_ok(), || format!("certificate does not replay: {}", h.to_tri()));
        }
        s.check(!is_tree || sp.is_some(), || format!("tree outside the special class: {}", h.to_tri()));
        s.check(sp.is_none() || tl.is_some(), || format!("special but not tree-like: {}", h.to_tri()));
        trees += is_tree as usize;
        special += sp.is_some() as usize;
        tree_like += tl.is_some() as usize;
    }
    let elapsed = t.elapsed().as_secs();
    s.check(elapsed < 60, || format!("took {elapsed}s"));
    s.report(5, "class containment", format!("729 symmetric trigraphs: {trees} trees, {special} special, {tree_like} tree-like"), t)
}

fn criterion_6() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let b = budget();
    let stubborn = fixtures::stubborn();
    s.check(recognize_tree_like(&stubborn, &b).unwrap().is_none(), || "stubborn recognized".into());
    let witness = stubborn.strong_loops().iter().find_map(|x| {
        let (rest, map) = stubborn.delete_vertex(x);
        rest.components()
            .into_iter()
            .map(|c| map.lift(c))
            .find(|&k| domination_property(&stubborn, x, k).unwrap().is_none())
            .map(|k| (x, k))
    });
    s.check(witness.is_some(), || "no domination failure witness for stubborn".into());
    s.check(recognize_tree_like(&fixtures::clique3(), &b).unwrap().is_none(), || "clique3 recognized".into());
    s.check(recognize_tree_like(&fixtures::stable_cut(), &b).unwrap().is_none(), || "stable_cut recognized".into());
    s.check(is_trigraph_tree(&fixtures::path4()), || "path4 is not a tree".into());
    let detail = match witness {
        Some((x, k)) => format!("domination fails at vertex {} for component {k:?}", x + 1),
        None => "no witness".into(),
    };
    s.report(6, "example trigraphs", detail, t)
}

/// A cycle on five to seven vertices whose first satisfied clause is
/// `clause` (two disjoint loop pairs need at least six vertices).
fn cycle_for(clause: GoodCycle, rng: &mut ChaCha8Rng) -> Trigraph {
    loop {
        let h = random_cycle(rng.gen_range(5..=7), rng);
        if good_cycle_condition(&h).unwrap() == Some(clause) {
            return h;
        }
    }
}

fn criterion_7() -> bool {
    use GoodCycle::*;
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cycles = vec![("cycle5_3l".to_string(), fixtures::cycle5_3l())];
    for c in [
        TwoStrongEdges,
        ThreeConsecutiveLoops,
        TwoLoopPairs,
        StrongEdgeAndLoopPair,
        LoopsOnNonsymmetricEdge,
        LoopWithLooplessNeighbours,
        LoopWithNonsymmetricEdges,
        StrongEdgeWithLooplessEnd,
    ] {
        cycles.push((format!("({})", c.roman()), cycle_for(c, &mut rng)));
    }
    for (_, h) in &cycles {
        for _ in 0..200 {
            let n = rng.gen_range(0..=6);
            let inst = random_instance(h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.5..1.0), &mut rng);
            if let Some(got) = s.decision(&inst, solve_good_cycle(&inst, &budget()), false) {
                s.check(got == oracle(&inst), || format!("good-cycle solver: {inst:?}"));
            }
        }
    }
    let names: Vec<String> = cycles.into_iter().map(|(n, _)| n).collect();
    s.report(7, "good cycles", format!("200 instances with n ≤ 6 each for {}", names.join(" ")), t)
}

fn criterion_8() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..300 {
        let mut h = if i % 2 == 0 { random_cycle(5, &mut rng) } else { random_tree(rng.gen_range(1..=5), &mut rng) };
        if i % 2 == 1 {
            // Relabel the tree as a path.
            let k = h.order();
            let mut p = Trigraph::new(k);
            for v in 1..k {
                p.set(v - 1, v, h.get(v - 1, v).max(EdgeKind::Weak));
                p.set(v, v - 1, h.get(v, v - 1));
            }
            h = p;
        }
        for x in 0..h.order() {
            h.set(x, x, EdgeKind::Strong);
        }
        let n = rng.gen_range(0..=7);
        let inst = random_instance(&h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.5..1.0), &mut rng);
        if let Some(got) = s.decision(&inst, solve_simple_2sat(&inst, &budget()), false) {
            s.check(got == oracle(&inst), || format!("2SAT solver: {inst:?}"));
        }
    }
    s.report(8, "all strong loops, triangle-free", "300 instances over 5-cycles and paths".into(), t)
}

fn criterion_9() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let b = budget();
    let mut special = 0;
    for i in 0..400 {
        let k = rng.gen_range(1..=4);
        let h = if i % 2 == 0 { random_tree(k, &mut rng) } else { random_trigraph(k, &mut rng) };
        let n = rng.gen_range(0..=7);
        let inst = random_instance(&h, n, rng.gen_range(0.15..0.5), rng.gen_range(0.6..1.0), &mut rng);
        let want = brute_force(&inst, true, &b).unwrap().is_some();
        if let Some(got) = s.decision(&inst, solve_surjective(&inst, &b), true) {
            s.check(got == want, || format!("surjective solver: {inst:?}"));
        }
        if let Some(Some(_)) = s.run(recognize_special_tree_like(&h, &b), || h.to_tri()) {
            special += 1;
            if let Some(route) = s.run(surjective_via_reduction(&inst, &b), || format!("{inst:?}")) {
                s.check(route == want, || format!("reduction route: {inst:?}"));
            }
        }
    }
    for i in 0..200 {
        let k = rng.gen_range(1..=4);
        let h = random_digraph(k, &mut rng);
        let keep: VSet = (0..k).filter(|_| rng.gen_bool(0.7)).collect();
        let (h0, map) = h.induced(keep);
        let inst0 = random_instance(&h0, rng.gen_range(0..=5), 0.4, 0.7, &mut rng);
        if let Some(gadget) = s.run(anchor_embed(&h, &inst0, &map), || format!("pair {i}")) {
            let surj = brute_force(&gadget, true, &b).unwrap().is_some();
            s.check(oracle(&inst0) == surj, || format!("anchor gadget: {inst0:?}"));
        }
    }
    s.report(9, "surjective problems", format!("400 instances ({special} special tree-like), 200 anchor gadgets"), t)
}

fn criterion_10() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut fill = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.6);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let c = minimal_chordal_completion(&g);
        let fills: Vec<(usize, usize)> = c.edges().into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        fill += fills.len();
        s.check(is_chordal(&c).is_some(), || format!("completion not chordal: {g:?}"));
        for &(u, v) in &fills {
            let mut less = c.clone();
            less.remove_edge(u, v);
            s.check(is_chordal(&less).is_none(), || format!("fill edge {u}-{v} removable: {g:?}"));
        }
        // Fill edges never cross between components of G − C for a clique C.
        for mask in 1u32..1 << n {
            let clique: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !g.is_clique(&clique) {
                continue;
            }
            let alive: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 0).collect();
            let mut comp = vec![usize::MAX; n];
            for (i, cc) in g.components_within(&alive).into_iter().enumerate() {
                for u in cc {
                    comp[u] = i;
                }
            }
            for &(u, v) in &fills {
                s.check(
                    comp[u] == usize::MAX || comp[v] == usize::MAX || comp[u] == comp[v],
                    || format!("fill edge {u}-{v} crosses the clique separator {clique:?}: {g:?}"),
                );
            }
        }
        let peo = is_chordal(&c).unwrap();
        if let Some(cliques) = s.run(chordal_maximal_cliques(&c, &peo), || format!("{g:?}")) {
            s.check(cliques.len() <= n, || format!("{} cliques on {n} vertices", cliques.len()));
            for q in &cliques {
                s.check(c.is_clique(q), || format!("not a clique: {q:?}"));
                let extendable = (0..n).any(|v| !q.contains(&v) && q.iter().all(|&u| c.has_edge(u, v)));
                s.check(!extendable, || format!("clique {q:?} is not maximal"));
            }
            s.check((0..n).all(|v| cliques.iter().any(|q| q.contains(&v))), || "uncovered vertex".into());
        }
    }

    // 2SAT against truth tables: every clause set over at most three
    // variables, every formula of at most three clauses over four variables,
    // and random formulas over up to twelve variables.
    let exhaustive = |f: &TwoSat| (0u32..1 << f.vars()).any(|m| f.satisfied_by(&(0..f.vars()).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()));
    let mut formulas = 0;
    let mut agree = |s: &mut Suite, f: &TwoSat| {
        formulas += 1;
        let got = f.solve();
        let ok = match &got {
            Some(a) => f.satisfied_by(a),
            None => !exhaustive(f),
        };
        s.check(ok, || format!("2SAT disagrees on {:?}", f.clauses()));
    };
    let clauses = |vars: usize| -> Vec<(Lit, Lit)> {
        let lits: Vec<Lit> = (0..vars).flat_map(|v| [Lit::pos(v), Lit::neg(v)]).collect();
        (0..lits.len()).flat_map(|i| (i..lits.len()).map(move |j| (i, j))).map(|(i, j)| (lits[i], lits[j])).collect()
    };
    for vars in 0..=3 {
        let cs = clauses(vars);
        for mask in 0u64..1 << cs.len() {
            let mut f = TwoSat::new(vars);
            for (i, &(a, b)) in cs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    f.add_clause(a, b);
                }
            }
            agree(&mut s, &f);
        }
    }
    let cs = clauses(4);
    for i in 0..cs.len() {
        for j in i..cs.len() {
            for l in j..cs.len() {
                let mut f = TwoSat::new(4);
                for &c in [cs[i], cs[j], cs[l]].iter() {
                    f.add_clause(c.0, c.1);
                }
                agree(&mut s, &f);
            }
        }
    }
    for _ in 0..300 {
        let vars = rng.gen_range(1..=12);
        let mut f = TwoSat::new(vars);
        for _ in 0..rng.gen_range(0..=3 * vars) {
            let lit = |r: &mut ChaCha8Rng| {
                let v = r.gen_range(0..vars);
                if r.gen_bool(0.5) { Lit::pos(v) } else { Lit::neg(v) }
            };
            let (a, b) = (lit(&mut rng), lit(&mut rng));
            f.add_clause(a, b);
        }
        agree(&mut s, &f);
    }
    s.report(10, "graph kit", format!("300 graphs ({fill} fill edges), {formulas} 2SAT formulas"), t)
}

fn criterion_11() -> bool {
    let t = Instant::now();
    let mut s = Suite::default();
    let contract = CONTRACT_ERRORS.load(Relaxed);
    let (certs, bad) = (CERTIFICATES.load(Relaxed), BAD_CERTIFICATES.load(Relaxed));
    s.check(contract == 0, || format!("{contract} contract violations"));
    s.check(bad == 0, || format!("{bad} invalid certificates"));
    s.check(certs > 0, || "no certificates were produced".into());
    s.report(11, "defensive validation", format!("{certs} certificates validated, {contract} contract violations"), t)
}

fn main() {
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
