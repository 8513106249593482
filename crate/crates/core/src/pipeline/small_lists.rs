//! Instances whose lists have at most two entries, via 2SAT.

use crate::error::{input_err, Result};
use crate::instance::{pair_ok, Certificate, ListInstance};
use crate::twosat::{Lit, TwoSat};

/// One variable per input vertex, true meaning the smaller list entry; one
/// clause per incompatible pair of choices.
pub fn solve_small_lists(inst: &ListInstance) -> Result<Option<Certificate>> {
    let n = inst.n();
    let opts: Vec<Vec<usize>> = inst.lists.iter().map(|l| l.iter().collect()).collect();
    if let Some(u) = (0..n).find(|&u| opts[u].len() > 2) {
        return Err(input_err!("list of vertex {} has more than two entries", u + 1));
    }
    if opts.iter().any(|o| o.is_empty()) {
        return Ok(None);
    }
    let lit = |u: usize, i: usize| if i == 0 { Lit::pos(u) } else { Lit::neg(u) };
    let mut f = TwoSat::new(n);
    for u in 0..n {
        if opts[u].len() == 1 {
            f.add_unit(Lit::pos(u));
        }
        for v in u + 1..n {
            for (i, &p) in opts[u].iter().enumerate() {
                for (j, &q) in opts[v].iter().enumerate() {
                    if !pair_ok(&inst.h, p, q, inst.arc(u, v), inst.arc(v, u)) {
                        f.add_clause(lit(u, i).not(), lit(v, j).not());
                    }
                }
            }
        }
    }
    Ok(f.solve().map(|a| Certificate((0..n).map(|u| opts[u][if a[u] { 0 } else { 1 }]).collect())))
}
