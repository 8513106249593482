//! Class membership for every small trigraph, with containment checks.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trihom::recognize::{
    good_cycle_condition, is_trigraph_tree, recognize_special_tree_like, recognize_tree_like, simple_case_applies,
    slhom_equiv_condition,
};
use trihom::{Budget, EdgeKind, Error, Trigraph};

pub const HEADER: &str = "matrix,canonical,tree,special,tree_like,good_cycle,simple_case,slhom_equiv";

/// Cells of the matrix that determine a trigraph (the upper triangle with
/// the diagonal when symmetric).
fn cells(k: usize, symmetric: bool) -> Vec<(usize, usize)> {
    (0..k)
        .flat_map(|x| (0..k).map(move |y| (x, y)))
        .filter(|&(x, y)| !symmetric || x <= y)
        .collect()
}

/// The trigraph whose cells are the base-3 digits of `code`.
fn decode(k: usize, cells: &[(usize, usize)], symmetric: bool, mut code: u64) -> Trigraph {
    let mut h = Trigraph::new(k);
    for &(x, y) in cells {
        let e = EdgeKind::ALL[(code % 3) as usize];
        if symmetric {
            h.set_sym(x, y, e);
        } else {
            h.set(x, y, e);
        }
        code /= 3;
    }
    h
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Least matrix string over all vertex orders.
fn canonical(h: &Trigraph, perms: &[Vec<usize>]) -> String {
    perms
        .iter()
        .map(|p| {
            let mut g = Trigraph::new(h.order());
            for x in 0..h.order() {
                for y in 0..h.order() {
                    g.set(p[x], p[y], h.get(x, y));
                }
            }
            g.matrix_string()
        })
        .min()
        .unwrap_or_default()
}

pub fn run(k: usize, symmetric: bool, out: Option<&Path>, samples: usize, seed: u64, budget: &Budget) -> Result<u8, Error> {
    let cells = cells(k, symmetric);
    let count = 3u64.pow(cells.len() as u32);
    let codes: Vec<u64> = match k {
        0..=3 => (0..count).collect(),
        4 => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v: Vec<u64> = (0..samples).map(|_| rng.gen_range(0..count)).collect();
            v.sort_unstable();
            v.dedup();
            v
        }
        _ => return Err(Error::Input("catalog supports k ≤ 4".into())),
    };
    let trigraphs: Vec<Trigraph> = codes.into_iter().map(|c| decode(k, &cells, symmetric, c)).collect();
    let perms = permutations(k);
    let flag = |b: bool| if b { "1" } else { "0" };
    let mut csv = format!("{HEADER}\n");
    let mut violations = 0;
    for h in &trigraphs {
        let tree = is_trigraph_tree(h);
        let special = recognize_special_tree_like(h, budget)?.is_some();
        let tree_like = recognize_tree_like(h, budget)?.is_some();
        if (tree && !special) || (special && !tree_like) {
            violations += 1;
            eprintln!("containment violated by {}", h.matrix_string());
        }
        let cycle = good_cycle_condition(h).ok().flatten();
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{},{}",
            h.matrix_string(),
            canonical(h, &perms),
            flag(tree),
            flag(special),
            flag(tree_like),
            cycle.map_or("", |c| c.roman()),
            flag(simple_case_applies(h)),
            flag(slhom_equiv_condition(h)),
        );
    }
    match out {
        Some(path) => super::write(path, &csv)?,
        None => print!("{csv}"),
    }
    eprintln!("{} trigraphs, {violations} containment violations", trigraphs.len());
    Ok(if violations == 0 { 0 } else { super::NO })
}
