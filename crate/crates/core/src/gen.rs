//! Random trigraphs and instances for randomized testing.

use rand::Rng;

use crate::instance::ListInstance;
use crate::trigraph::{EdgeKind, Trigraph};
use crate::vset::VSet;

fn kind(rng: &mut impl Rng) -> EdgeKind {
    EdgeKind::ALL[rng.gen_range(0..3)]
}

/// Random loops, and for each given pair random orientations with at least
/// one of them an edge.
fn with_edges(k: usize, pairs: &[(usize, usize)], rng: &mut impl Rng) -> Trigraph {
    let mut h = Trigraph::new(k);
    for x in 0..k {
        h.set(x, x, kind(rng));
    }
    for &(x, y) in pairs {
        loop {
            let (a, b) = (kind(rng), kind(rng));
            if a.is_edge() || b.is_edge() {
                h.set(x, y, a);
                h.set(y, x, b);
                break;
            }
        }
    }
    h
}

/// A trigraph whose underlying graph is a uniformly grown random tree.
pub fn random_tree(k: usize, rng: &mut impl Rng) -> Trigraph {
    let pairs: Vec<(usize, usize)> = (1..k).map(|v| (rng.gen_range(0..v), v)).collect();
    with_edges(k, &pairs, rng)
}

/// A trigraph whose underlying graph is the cycle `0, 1, ..., k-1`.
pub fn random_cycle(k: usize, rng: &mut impl Rng) -> Trigraph {
    let pairs: Vec<(usize, usize)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    with_edges(k, &pairs, rng)
}

/// Every entry drawn independently.
pub fn random_trigraph(k: usize, rng: &mut impl Rng) -> Trigraph {
    let mut h = Trigraph::new(k);
    for x in 0..k {
        for y in 0..k {
            h.set(x, y, kind(rng));
        }
    }
    h
}

/// A digraph (no strong entries) with independent arcs and loops.
pub fn random_digraph(k: usize, rng: &mut impl Rng) -> Trigraph {
    let mut h = Trigraph::new(k);
    for x in 0..k {
        for y in 0..k {
            if rng.gen_bool(0.5) {
                h.set(x, y, EdgeKind::Weak);
            }
        }
    }
    h
}

/// Random input digraph on `n` vertices with arc probability `arc_p`; each
/// list keeps each vertex of `H` with probability `list_p`.
pub fn random_instance(h: &Trigraph, n: usize, arc_p: f64, list_p: f64, rng: &mut impl Rng) -> ListInstance {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(arc_p))
        .collect();
    let mut inst = ListInstance::from_arcs(h.clone(), n, &arcs).expect("arcs in range");
    for l in &mut inst.lists {
        *l = (0..h.order()).filter(|_| rng.gen_bool(list_p)).collect::<VSet>();
    }
    inst
}
