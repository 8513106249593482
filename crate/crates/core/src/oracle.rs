//! Independent brute-force decision procedure used as ground truth.

use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::instance::{pair_ok, Certificate, ListInstance};
use crate::vset::VSet;

/// Lexicographically least valid certificate (vertex order `0..n`, values
/// ascending), or `None`. Only plain backtracking: no consistency
/// propagation, so it shares no logic with the solvers it checks.
pub fn brute_force(inst: &ListInstance, surjective: bool, budget: &Budget) -> Result<Option<Certificate>> {
    let n = inst.n();
    let all = inst.h.vertices();
    if surjective && n < all.len() {
        return Ok(None);
    }
    let mut f = vec![usize::MAX; n];
    let mut meter = Meter::new(budget.search_nodes, "brute force");
    if go(inst, surjective, all, 0, &mut f, &mut meter)? {
        Ok(Some(Certificate(f)))
    } else {
        Ok(None)
    }
}

fn go(
    inst: &ListInstance,
    surjective: bool,
    all: VSet,
    u: usize,
    f: &mut [usize],
    meter: &mut Meter,
) -> Result<bool> {
    let n = f.len();
    if u == n {
        return Ok(!surjective || f.iter().copied().collect::<VSet>() == all);
    }
    if surjective {
        let seen: VSet = f[..u].iter().copied().collect();
        if all.minus(seen).len() > n - u {
            return Ok(false);
        }
    }
    for x in inst.lists[u].iter() {
        meter.tick()?;
        let fits = (0..u).all(|v| pair_ok(&inst.h, x, f[v], inst.arc(u, v), inst.arc(v, u)));
        if fits {
            f[u] = x;
            if go(inst, surjective, all, u + 1, f, meter)? {
                return Ok(true);
            }
        }
    }
    f[u] = usize::MAX;
    Ok(false)
}

/// Decision only.
pub fn decide(inst: &ListInstance, surjective: bool, budget: &Budget) -> Result<bool> {
    Ok(brute_force(inst, surjective, budget)?.is_some())
}
