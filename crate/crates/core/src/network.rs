//! Binary constraint networks over a trigraph: the common engine behind arc
//! consistency and exact backtracking.
//!
//! Each ordered pair `u != v` has an arc state: absent (image must not be a
//! strong edge), present (image must be an edge) or free (no constraint; used
//! for arcs removed by a puncture).

use std::collections::VecDeque;
use std::sync::Arc;

use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::instance::ListInstance;
use crate::trigraph::{EdgeKind, Trigraph};
use crate::vset::VSet;

const ABSENT: u8 = 0;
const PRESENT: u8 = 1;
const FREE: u8 = 2;

#[derive(Clone, Debug)]
pub struct Network {
    pub h: Trigraph,
    state: Vec<Vec<u8>>,
    pub lists: Vec<VSet>,
    table: Arc<Vec<Vec<VSet>>>,
}

fn allowed(e: EdgeKind, state: u8) -> bool {
    match state {
        ABSENT => e != EdgeKind::Strong,
        PRESENT => e != EdgeKind::None,
        _ => true,
    }
}

/// `table[3 * s(uv) + s(vu)][x]`: values of `v` compatible with `u -> x`.
fn tables(h: &Trigraph) -> Arc<Vec<Vec<VSet>>> {
    let k = h.order();
    let mut out = Vec::with_capacity(9);
    for a in [ABSENT, PRESENT, FREE] {
        for b in [ABSENT, PRESENT, FREE] {
            out.push(
                (0..k)
                    .map(|x| {
                        (0..k)
                            .filter(|&y| allowed(h.get(x, y), a) && allowed(h.get(y, x), b))
                            .collect()
                    })
                    .collect(),
            );
        }
    }
    Arc::new(out)
}

impl Network {
    pub fn from_instance(inst: &ListInstance) -> Network {
        Network::relaxed(inst, |_, _| false)
    }

    /// Like [`Network::from_instance`], but the arc `uv` imposes nothing
    /// whenever `free(u, v)` holds.
    pub fn relaxed(inst: &ListInstance, free: impl Fn(usize, usize) -> bool) -> Network {
        let n = inst.n();
        let state = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        if u != v && free(u, v) {
                            FREE
                        } else if inst.arc(u, v) {
                            PRESENT
                        } else {
                            ABSENT
                        }
                    })
                    .collect()
            })
            .collect();
        Network {
            h: inst.h.clone(),
            state,
            lists: inst.lists.clone(),
            table: tables(&inst.h),
        }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    /// Sub-network on `keep` (in that order).
    pub fn induced(&self, keep: &[usize]) -> Network {
        Network {
            h: self.h.clone(),
            state: keep
                .iter()
                .map(|&u| keep.iter().map(|&v| self.state[u][v]).collect())
                .collect(),
            lists: keep.iter().map(|&u| self.lists[u]).collect(),
            table: Arc::clone(&self.table),
        }
    }

    /// Values of `v` compatible with `u -> x`.
    #[inline]
    pub fn support(&self, u: usize, v: usize, x: usize) -> VSet {
        self.table[3 * self.state[u][v] as usize + self.state[v][u] as usize][x]
    }

    /// Removes every `x` from `L(u)` lacking support at some `v != u`, until
    /// nothing changes. `seeds` are the vertices whose lists changed since
    /// the last fixpoint (all vertices when unknown). Returns `false` as soon
    /// as some list is empty when `stop_on_empty` is set.
    pub fn propagate(&self, lists: &mut [VSet], seeds: &[usize], stop_on_empty: bool) -> bool {
        let n = lists.len();
        let mut queued = vec![vec![false; n]; n];
        let mut work = VecDeque::new();
        let push = |work: &mut VecDeque<(usize, usize)>, queued: &mut Vec<Vec<bool>>, v: usize| {
            for w in 0..n {
                if w != v && !queued[w][v] {
                    queued[w][v] = true;
                    work.push_back((w, v));
                }
            }
        };
        for &v in seeds {
            push(&mut work, &mut queued, v);
        }
        while let Some((u, v)) = work.pop_front() {
            queued[u][v] = false;
            let lv = lists[v];
            let before = lists[u];
            let after: VSet = before
                .iter()
                .filter(|&x| self.support(u, v, x).intersects(lv))
                .collect();
            if after != before {
                lists[u] = after;
                if after.is_empty() && stop_on_empty {
                    return false;
                }
                push(&mut work, &mut queued, u);
            }
        }
        lists.iter().all(|l| !l.is_empty())
    }

    pub fn arc_reduce(&mut self) {
        let mut lists = self.lists.clone();
        let all: Vec<usize> = (0..self.n()).collect();
        self.propagate(&mut lists, &all, false);
        self.lists = lists;
    }

    pub fn is_arc_consistent(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            (0..n).all(|v| {
                u == v
                    || self.lists[u]
                        .iter()
                        .all(|x| self.support(u, v, x).intersects(self.lists[v]))
            })
        })
    }

    pub fn satisfied_by(&self, f: &[usize]) -> bool {
        let n = self.n();
        f.len() == n
            && (0..n).all(|u| {
                self.lists[u].contains(f[u])
                    && (0..n).all(|v| u == v || self.support(u, v, f[u]).contains(f[v]))
            })
    }

    /// Backtracking with full arc-consistency propagation at every node.
    /// Branches on the smallest non-singleton list (lowest vertex on ties),
    /// values ascending.
    pub fn solve(&self, surjective: bool, budget: &Budget) -> Result<Option<Vec<usize>>> {
        let all = self.h.vertices();
        if surjective && self.n() < all.len() {
            return Ok(None);
        }
        let mut meter = Meter::new(budget.search_nodes, "exact search");
        let mut lists = self.lists.clone();
        let seeds: Vec<usize> = (0..self.n()).collect();
        if !self.propagate(&mut lists, &seeds, true) {
            return Ok(None);
        }
        let out = self.search(lists, surjective, &mut meter)?;
        debug_assert!(out.as_ref().map_or(true, |f| self.satisfied_by(f)));
        Ok(out)
    }

    fn search(&self, lists: Vec<VSet>, surjective: bool, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
        meter.tick()?;
        if surjective {
            let reach = lists.iter().fold(VSet::EMPTY, |a, &l| a.union(l));
            if reach != self.h.vertices() {
                return Ok(None);
            }
        }
        let pick = (0..lists.len())
            .filter(|&u| lists[u].len() > 1)
            .min_by_key(|&u| (lists[u].len(), u));
        let Some(u) = pick else {
            let f: Vec<usize> = lists.iter().map(|l| l.first().expect("non-empty")).collect();
            if surjective && f.iter().copied().collect::<VSet>() != self.h.vertices() {
                return Ok(None);
            }
            return Ok(Some(f));
        };
        for x in lists[u].iter() {
            let mut next = lists.clone();
            next[u] = VSet::single(x);
            if self.propagate(&mut next, &[u], true) {
                if let Some(f) = self.search(next, surjective, meter)? {
                    return Ok(Some(f));
                }
            }
        }
        Ok(None)
    }

    pub fn decide(&self, budget: &Budget) -> Result<bool> {
        Ok(self.solve(false, budget)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::trigraph::fixtures::*;

    #[test]
    fn free_pairs_are_unconstrained() {
        // two nonadjacent vertices cannot both sit on the strong loop
        let inst = ListInstance::from_graph(split(), &Graph::new(2))
            .pin(0, 1)
            .pin(1, 1);
        assert!(!Network::from_instance(&inst).decide(&Budget::default()).unwrap());
        let relaxed = Network::relaxed(&inst, |_, _| true);
        assert!(relaxed.decide(&Budget::default()).unwrap());
    }

    #[test]
    fn propagation_reaches_fixpoint() {
        let inst = ListInstance::from_graph(split(), &Graph::new(2)).pin(1, 1);
        let mut net = Network::from_instance(&inst);
        net.arc_reduce();
        assert_eq!(net.lists[0], VSet::single(0));
        assert!(net.is_arc_consistent());
    }
}
