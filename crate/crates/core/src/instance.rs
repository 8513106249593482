//! List-digraph instances, certificates and instance families.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Result};
use crate::graph::Graph;
use crate::trigraph::{EdgeKind, Trigraph};
use crate::vset::VSet;

/// `f(u)` for every input vertex `u` (0-based trigraph ids).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Certificate(pub Vec<usize>);

impl Certificate {
    pub fn image(&self) -> VSet {
        self.0.iter().copied().collect()
    }
}

/// Whether mapping `u -> x`, `v -> y` is allowed given which of the arcs
/// `uv`, `vu` are present (for `u != v`).
#[inline]
pub fn pair_ok(h: &Trigraph, x: usize, y: usize, uv: bool, vu: bool) -> bool {
    let a = h.get(x, y);
    let b = h.get(y, x);
    (if uv { a != EdgeKind::None } else { a != EdgeKind::Strong })
        && (if vu { b != EdgeKind::None } else { b != EdgeKind::Strong })
}

/// `table[t][x]` is the set of `y` compatible with `x` when the arc pattern
/// between the two input vertices is `t = 2*[uv] + [vu]`.
pub fn support_table(h: &Trigraph) -> [Vec<VSet>; 4] {
    let k = h.order();
    let mk = |uv: bool, vu: bool| -> Vec<VSet> {
        (0..k)
            .map(|x| (0..k).filter(|&y| pair_ok(h, x, y, uv, vu)).collect())
            .collect()
    };
    [mk(false, false), mk(false, true), mk(true, false), mk(true, true)]
}

/// A loopless input digraph `G` with a list `L(u)` per vertex, over a fixed
/// trigraph `H`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ListInstance {
    pub h: Trigraph,
    adj: Vec<Vec<bool>>,
    pub lists: Vec<VSet>,
}

impl std::fmt::Debug for ListInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ListInstance")
            .field("h", &self.h)
            .field("arcs", &self.arcs().iter().map(|&(u, v)| (u + 1, v + 1)).collect::<Vec<_>>())
            .field("lists", &self.lists)
            .finish()
    }
}

impl ListInstance {
    /// Instance with every list full.
    pub fn new(h: Trigraph, adj: Vec<Vec<bool>>) -> Result<ListInstance> {
        let n = adj.len();
        let lists = vec![h.vertices(); n];
        ListInstance::with_lists(h, adj, lists)
    }

    pub fn with_lists(h: Trigraph, adj: Vec<Vec<bool>>, lists: Vec<VSet>) -> Result<ListInstance> {
        let n = adj.len();
        if lists.len() != n {
            return Err(input_err!("{} lists for {n} vertices", lists.len()));
        }
        for (u, row) in adj.iter().enumerate() {
            if row.len() != n {
                return Err(input_err!("adjacency row {} has length {}", u + 1, row.len()));
            }
            if row[u] {
                return Err(input_err!("input digraph has a loop at vertex {}", u + 1));
            }
        }
        let all = h.vertices();
        for (u, l) in lists.iter().enumerate() {
            if !l.is_subset(all) {
                return Err(input_err!("list of vertex {} names a vertex outside H", u + 1));
            }
        }
        Ok(ListInstance { h, adj, lists })
    }

    /// Symmetric instance from an undirected graph, full lists.
    pub fn from_graph(h: Trigraph, g: &Graph) -> ListInstance {
        let n = g.order();
        let adj = (0..n)
            .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
            .collect();
        ListInstance::new(h, adj).expect("graph adjacency is loopless")
    }

    pub fn from_arcs(h: Trigraph, n: usize, arcs: &[(usize, usize)]) -> Result<ListInstance> {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(input_err!("arc ({}, {}) out of range", u + 1, v + 1));
            }
            adj[u][v] = true;
        }
        ListInstance::new(h, adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn k(&self) -> usize {
        self.h.order()
    }

    #[inline]
    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn adjacency(&self) -> &[Vec<bool>] {
        &self.adj
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Arc pattern index into [`support_table`].
    #[inline]
    pub fn pattern(&self, u: usize, v: usize) -> usize {
        2 * self.adj[u][v] as usize + self.adj[v][u] as usize
    }

    pub fn set_arc(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "input digraphs are loopless");
        self.adj[u][v] = present;
    }

    pub fn has_empty_list(&self) -> bool {
        self.lists.iter().any(|l| l.is_empty())
    }

    /// Union of all lists.
    pub fn used(&self) -> VSet {
        self.lists.iter().fold(VSet::EMPTY, |a, &l| a.union(l))
    }

    /// `u` and `v` adjacent in the underlying graph of `G`.
    pub fn underlying_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in 0..n {
                if self.adj[u][v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `u` and `v` joined by arcs in both directions.
    pub fn symmetric_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u][v] && self.adj[v][u] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Same graph over another trigraph with new lists.
    pub fn relabelled(&self, h: Trigraph, lists: Vec<VSet>) -> ListInstance {
        assert_eq!(lists.len(), self.n());
        assert!(lists.iter().all(|l| l.is_subset(h.vertices())));
        ListInstance {
            h,
            adj: self.adj.clone(),
            lists,
        }
    }

    /// Same lists and graph but a different trigraph of the same order.
    pub fn with_trigraph(&self, h: Trigraph) -> ListInstance {
        assert_eq!(h.order(), self.k());
        ListInstance {
            h,
            adj: self.adj.clone(),
            lists: self.lists.clone(),
        }
    }

    /// `B` is a reduction of `A`: same `H`, same `G`, lists shrink pointwise.
    pub fn is_reduction_of(&self, parent: &ListInstance) -> bool {
        self.h == parent.h
            && self.adj == parent.adj
            && self
                .lists
                .iter()
                .zip(&parent.lists)
                .all(|(a, b)| a.is_subset(*b))
    }

    pub fn restrict(&self, u: usize, allowed: VSet) -> ListInstance {
        let mut out = self.clone();
        out.lists[u] = out.lists[u].inter(allowed);
        out
    }

    pub fn pin(&self, u: usize, x: usize) -> ListInstance {
        self.restrict(u, VSet::single(x))
    }

    pub fn drop_vertex_everywhere(&self, x: usize) -> ListInstance {
        let mut out = self.clone();
        for l in &mut out.lists {
            l.remove(x);
        }
        out
    }

    /// `G` with every arc `uv` removed for which some `x in L(u)`, `y in L(v)`
    /// has `(x, y)` in `f`.
    pub fn puncture(&self, f: &[(usize, usize)]) -> ListInstance {
        let mut out = self.clone();
        let n = self.n();
        for u in 0..n {
            for v in 0..n {
                if self.adj[u][v]
                    && f
                        .iter()
                        .any(|&(x, y)| self.lists[u].contains(x) && self.lists[v].contains(y))
                {
                    out.adj[u][v] = false;
                }
            }
        }
        out
    }

    /// Subinstance induced by the input vertices `keep` (in that order).
    pub fn induced(&self, keep: &[usize]) -> ListInstance {
        ListInstance {
            h: self.h.clone(),
            adj: keep
                .iter()
                .map(|&u| keep.iter().map(|&v| self.adj[u][v]).collect())
                .collect(),
            lists: keep.iter().map(|&u| self.lists[u]).collect(),
        }
    }

    /// Re-express the instance over `h.induced(keep)`; list entries outside
    /// `keep` are dropped.
    pub fn restrict_trigraph(&self, keep: VSet) -> (ListInstance, crate::trigraph::Remap) {
        let (h, map) = self.h.induced(keep);
        let lists = self.lists.iter().map(|&l| map.project(l)).collect();
        (
            ListInstance {
                h,
                adj: self.adj.clone(),
                lists,
            },
            map,
        )
    }

    /// Disjoint union with `other` (same trigraph); `other`'s vertices follow.
    pub fn disjoint_union(&self, other: &ListInstance) -> ListInstance {
        assert_eq!(self.h, other.h);
        let (n1, n2) = (self.n(), other.n());
        let mut adj = vec![vec![false; n1 + n2]; n1 + n2];
        for u in 0..n1 {
            for v in 0..n1 {
                adj[u][v] = self.adj[u][v];
            }
        }
        for u in 0..n2 {
            for v in 0..n2 {
                adj[n1 + u][n1 + v] = other.adj[u][v];
            }
        }
        let mut lists = self.lists.clone();
        lists.extend_from_slice(&other.lists);
        ListInstance {
            h: self.h.clone(),
            adj,
            lists,
        }
    }

    pub fn to_lhi(&self) -> String {
        let n = self.n();
        let k = self.k();
        let mut s = format!("{n} {k}\n");
        for row in &self.adj {
            s.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
            s.push('\n');
        }
        for &l in &self.lists {
            if l.is_empty() {
                s.push('-');
            } else if k > 0 && l == self.h.vertices() {
                s.push('+');
            } else {
                let ids: Vec<String> = l.iter().map(|x| (x + 1).to_string()).collect();
                s.push_str(&ids.join(" "));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the `.lhi` format against trigraph `h`.
    pub fn parse_lhi(h: &Trigraph, text: &str) -> Result<ListInstance> {
        let mut lines = text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| input_err!("missing `n k` header"))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [n, k] = nums[..] else {
            return Err(input_err!("header must be `n k`, found {header:?}"));
        };
        let n: usize = n.parse().map_err(|_| input_err!("invalid n {n:?}"))?;
        let k: usize = k.parse().map_err(|_| input_err!("invalid k {k:?}"))?;
        if k != h.order() {
            return Err(input_err!("instance declares k={k} but the trigraph has {} vertices", h.order()));
        }
        let mut adj = Vec::with_capacity(n);
        for u in 0..n {
            let row = lines
                .next()
                .ok_or_else(|| input_err!("missing adjacency row {}", u + 1))?
                .trim();
            let bits: Vec<bool> = row
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(input_err!("adjacency row {}: invalid symbol {c:?}", u + 1)),
                })
                .collect::<Result<_>>()?;
            if bits.len() != n {
                return Err(input_err!("adjacency row {} has {} entries, expected {n}", u + 1, bits.len()));
            }
            adj.push(bits);
        }
        let mut lists = Vec::with_capacity(n);
        for u in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| input_err!("missing list for vertex {}", u + 1))?
                .trim();
            let l = match line {
                "-" => VSet::EMPTY,
                "+" => h.vertices(),
                _ => {
                    let mut l = VSet::EMPTY;
                    for tok in line.split_whitespace() {
                        let x: usize = tok
                            .parse()
                            .map_err(|_| input_err!("list {}: invalid entry {tok:?}", u + 1))?;
                        if x == 0 || x > k {
                            return Err(input_err!("list {}: vertex {x} outside 1..{k}", u + 1));
                        }
                        l.insert(x - 1);
                    }
                    l
                }
            };
            lists.push(l);
        }
        if let Some(extra) = lines.next() {
            return Err(input_err!("unexpected trailing line {extra:?}"));
        }
        ListInstance::with_lists(h.clone(), adj, lists)
    }

    /// `f(u) -> x` lines, 1-based.
    pub fn witness_lines(cert: &Certificate) -> String {
        let mut s = String::new();
        for (u, &x) in cert.0.iter().enumerate() {
            let _ = writeln!(s, "{} -> {}", u + 1, x + 1);
        }
        s
    }
}

/// Arc `xy` iff it is an arc or `x -> z -> y` for some `z`.
pub fn square_digraph(adj: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| adj[x][y] || (0..n).any(|z| adj[x][z] && adj[z][y]))
                .collect()
        })
        .collect()
}

/// Validity of `f` for `inst`: homomorphism conditions on every ordered pair
/// `u != v`, list membership, and (optionally) surjectivity onto `V(H)`.
pub fn check_certificate(inst: &ListInstance, f: &Certificate, surjective: bool) -> Result<bool> {
    let n = inst.n();
    if f.0.len() != n {
        return Err(input_err!("certificate has {} entries for {n} vertices", f.0.len()));
    }
    if let Some(&x) = f.0.iter().find(|&&x| x >= inst.k()) {
        return Err(input_err!("certificate maps to vertex {} outside H", x + 1));
    }
    for u in 0..n {
        if !inst.lists[u].contains(f.0[u]) {
            return Ok(false);
        }
        for v in 0..n {
            if u == v {
                continue;
            }
            let e = inst.h.get(f.0[u], f.0[v]);
            if inst.arc(u, v) {
                if e == EdgeKind::None {
                    return Ok(false);
                }
            } else if e == EdgeKind::Strong {
                return Ok(false);
            }
        }
    }
    if surjective && f.image() != inst.h.vertices() {
        return Ok(false);
    }
    Ok(true)
}

/// A finite disjunction of reductions of a common parent instance.
#[derive(Clone, Debug, Default)]
pub struct InstanceFamily {
    pub members: Vec<ListInstance>,
}

impl InstanceFamily {
    pub fn single(inst: ListInstance) -> InstanceFamily {
        InstanceFamily {
            members: vec![inst],
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Adds a member unless an identical one is already present.
    pub fn push_unique(&mut self, inst: ListInstance) {
        if !self.members.contains(&inst) {
            self.members.push(inst);
        }
    }

    pub fn all_reductions_of(&self, parent: &ListInstance) -> bool {
        self.members.iter().all(|m| m.is_reduction_of(parent))
    }
}
