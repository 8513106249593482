//! Trigraphs: a vertex set with disjoint weak and strong directed edge
//! relations, encoded as a square matrix over `0`, `*`, `1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::graph::Graph;
use crate::vset::{VSet, MAX_VERTICES};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    None,
    Weak,
    Strong,
}

impl EdgeKind {
    pub fn symbol(self) -> char {
        match self {
            EdgeKind::None => '0',
            EdgeKind::Weak => '*',
            EdgeKind::Strong => '1',
        }
    }

    pub fn from_symbol(c: char) -> Option<EdgeKind> {
        match c {
            '0' => Some(EdgeKind::None),
            '*' => Some(EdgeKind::Weak),
            '1' => Some(EdgeKind::Strong),
            _ => None,
        }
    }

    pub fn is_edge(self) -> bool {
        self != EdgeKind::None
    }

    pub const ALL: [EdgeKind; 3] = [EdgeKind::None, EdgeKind::Weak, EdgeKind::Strong];
}

/// A set of ordered vertex pairs of some trigraph.
pub type EdgeSet = Vec<(usize, usize)>;

/// Maps vertices of a derived trigraph back to the vertices they came from.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Remap {
    /// `origin[i]` is the id, in the source trigraph, of new vertex `i`.
    pub origin: Vec<usize>,
}

impl Remap {
    pub fn identity(k: usize) -> Remap {
        Remap {
            origin: (0..k).collect(),
        }
    }

    pub fn position(&self, old: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == old)
    }

    pub fn lift(&self, set: VSet) -> VSet {
        set.iter().map(|i| self.origin[i]).collect()
    }

    /// Translate a set of old ids into new ids, dropping vertices that were removed.
    pub fn project(&self, set: VSet) -> VSet {
        self.origin
            .iter()
            .enumerate()
            .filter(|&(_, &o)| set.contains(o))
            .map(|(i, _)| i)
            .collect()
    }

    /// `self` maps C -> B and `outer` maps B -> A; the result maps C -> A.
    pub fn then(&self, outer: &Remap) -> Remap {
        Remap {
            origin: self.origin.iter().map(|&b| outer.origin[b]).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trigraph {
    k: usize,
    m: Vec<EdgeKind>,
}

impl Trigraph {
    /// Edgeless trigraph on `k` vertices.
    pub fn new(k: usize) -> Trigraph {
        assert!(k <= MAX_VERTICES, "at most {MAX_VERTICES} trigraph vertices");
        Trigraph {
            k,
            m: vec![EdgeKind::None; k * k],
        }
    }

    pub fn from_rows(rows: &[&str]) -> Result<Trigraph> {
        let k = rows.len();
        if k > MAX_VERTICES {
            return Err(input_err!("trigraph has {k} vertices; at most {MAX_VERTICES} supported"));
        }
        let mut h = Trigraph::new(k);
        for (i, row) in rows.iter().enumerate() {
            let chars: Vec<char> = row.chars().collect();
            if chars.len() != k {
                return Err(input_err!(
                    "row {} has {} entries, expected {k}",
                    i + 1,
                    chars.len()
                ));
            }
            for (j, &c) in chars.iter().enumerate() {
                let e = EdgeKind::from_symbol(c)
                    .ok_or_else(|| input_err!("row {}: invalid symbol {c:?}", i + 1))?;
                h.set(i, j, e);
            }
        }
        Ok(h)
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> VSet {
        VSet::full(self.k)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> EdgeKind {
        self.m[x * self.k + y]
    }

    pub fn set(&mut self, x: usize, y: usize, e: EdgeKind) {
        self.m[x * self.k + y] = e;
    }

    pub fn set_sym(&mut self, x: usize, y: usize, e: EdgeKind) {
        self.set(x, y, e);
        self.set(y, x, e);
    }

    pub fn is_edge(&self, x: usize, y: usize) -> bool {
        self.get(x, y).is_edge()
    }

    pub fn is_weak(&self, x: usize, y: usize) -> bool {
        self.get(x, y) == EdgeKind::Weak
    }

    pub fn is_strong(&self, x: usize, y: usize) -> bool {
        self.get(x, y) == EdgeKind::Strong
    }

    pub fn strong_loop(&self, x: usize) -> bool {
        self.is_strong(x, x)
    }

    pub fn weak_loop(&self, x: usize) -> bool {
        self.is_weak(x, x)
    }

    pub fn loopless(&self, x: usize) -> bool {
        !self.is_edge(x, x)
    }

    /// `x != y` and both `xy` and `yx` are edges.
    pub fn symmetric_neighbours(&self, x: usize) -> VSet {
        (0..self.k)
            .filter(|&y| y != x && self.is_edge(x, y) && self.is_edge(y, x))
            .collect()
    }

    /// `x != y` and `xy` or `yx` is an edge.
    pub fn neighbours(&self, x: usize) -> VSet {
        (0..self.k)
            .filter(|&y| y != x && (self.is_edge(x, y) || self.is_edge(y, x)))
            .collect()
    }

    pub fn strong_loops(&self) -> VSet {
        (0..self.k).filter(|&x| self.strong_loop(x)).collect()
    }

    pub fn has_strong(&self) -> bool {
        self.m.contains(&EdgeKind::Strong)
    }

    pub fn has_weak(&self) -> bool {
        self.m.contains(&EdgeKind::Weak)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.k).all(|x| (0..self.k).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Ordered non-loop pairs with at least one orientation strong, as
    /// unordered edges `(x, y)`, `x < y`.
    pub fn strong_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.k {
            for y in x + 1..self.k {
                if self.is_strong(x, y) || self.is_strong(y, x) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All ordered pairs (including loops) that are edges.
    pub fn edges(&self) -> EdgeSet {
        let mut out = Vec::new();
        for x in 0..self.k {
            for y in 0..self.k {
                if self.is_edge(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Edge `{x, y}` present iff `xy` or `yx` is an edge; loops kept.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.k);
        for x in 0..self.k {
            for y in 0..self.k {
                if self.is_edge(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// Edge `{x, y}` present iff both `xy` and `yx` are edges; loops kept.
    pub fn symmetric_graph(&self) -> Graph {
        let mut g = Graph::new(self.k);
        for x in 0..self.k {
            for y in x..self.k {
                if self.is_edge(x, y) && self.is_edge(y, x) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// Arc `xy` iff `xy` is a weak or strong edge (loops included).
    pub fn associated_digraph(&self) -> Vec<Vec<bool>> {
        (0..self.k)
            .map(|x| (0..self.k).map(|y| self.is_edge(x, y)).collect())
            .collect()
    }

    /// Strong `xy` iff `xy` and `yx` are strong; weak iff both are edges but
    /// not both strong.
    pub fn symmetric_trigraph(&self) -> Trigraph {
        let mut h = Trigraph::new(self.k);
        for x in 0..self.k {
            for y in 0..self.k {
                let e = if self.is_strong(x, y) && self.is_strong(y, x) {
                    EdgeKind::Strong
                } else if self.is_edge(x, y) && self.is_edge(y, x) {
                    EdgeKind::Weak
                } else {
                    EdgeKind::None
                };
                h.set(x, y, e);
            }
        }
        h
    }

    /// Strong `xy` iff `xy` or `yx` is strong; weak iff not strong and `xy`
    /// or `yx` is weak.
    pub fn underlying_trigraph(&self) -> Trigraph {
        let mut h = Trigraph::new(self.k);
        for x in 0..self.k {
            for y in 0..self.k {
                let e = if self.is_strong(x, y) || self.is_strong(y, x) {
                    EdgeKind::Strong
                } else if self.is_weak(x, y) || self.is_weak(y, x) {
                    EdgeKind::Weak
                } else {
                    EdgeKind::None
                };
                h.set(x, y, e);
            }
        }
        h
    }

    /// Strong `xy` iff `xy` is strong or composes from two strong edges;
    /// otherwise weak iff `xy` is weak or composes from two edges.
    pub fn square(&self) -> Trigraph {
        let k = self.k;
        let mut h = Trigraph::new(k);
        for x in 0..k {
            for y in 0..k {
                let strong = self.is_strong(x, y)
                    || (0..k).any(|z| self.is_strong(x, z) && self.is_strong(z, y));
                let weak = self.is_weak(x, y)
                    || (0..k).any(|z| self.is_edge(x, z) && self.is_edge(z, y));
                let e = if strong {
                    EdgeKind::Strong
                } else if weak {
                    EdgeKind::Weak
                } else {
                    EdgeKind::None
                };
                h.set(x, y, e);
            }
        }
        h
    }

    /// Subtrigraph induced by `keep`; vertices keep their relative order.
    pub fn induced(&self, keep: VSet) -> (Trigraph, Remap) {
        let origin: Vec<usize> = keep.iter().filter(|&x| x < self.k).collect();
        let mut h = Trigraph::new(origin.len());
        for (i, &x) in origin.iter().enumerate() {
            for (j, &y) in origin.iter().enumerate() {
                h.set(i, j, self.get(x, y));
            }
        }
        (h, Remap { origin })
    }

    pub fn delete_vertex(&self, x: usize) -> (Trigraph, Remap) {
        self.induced(self.vertices().without(x))
    }

    /// Removes the pairs in `f` (and, with `symmetric_closure`, their
    /// converses when present). Every pair in `f` must be an edge.
    pub fn delete_edges(&self, f: &[(usize, usize)], symmetric_closure: bool) -> Result<Trigraph> {
        let mut h = self.clone();
        for &(x, y) in f {
            if x >= self.k || y >= self.k || !self.is_edge(x, y) {
                return Err(input_err!("({}, {}) is not an edge", x + 1, y + 1));
            }
            h.set(x, y, EdgeKind::None);
            if symmetric_closure {
                h.set(y, x, EdgeKind::None);
            }
        }
        Ok(h)
    }

    /// Same as [`Trigraph::delete_edges`] without the validity check.
    pub(crate) fn without_pairs(&self, f: &[(usize, usize)]) -> Trigraph {
        let mut h = self.clone();
        for &(x, y) in f {
            h.set(x, y, EdgeKind::None);
        }
        h
    }

    /// Drop strong-loop vertices, then every edge one of whose orientations
    /// is strong. The result has no strong entries.
    pub fn h_minus(&self) -> (Trigraph, Remap) {
        let keep: VSet = (0..self.k).filter(|&x| !self.strong_loop(x)).collect();
        let (mut h, map) = self.induced(keep);
        for (i, &x) in map.origin.iter().enumerate() {
            for (j, &y) in map.origin.iter().enumerate() {
                if self.is_strong(x, y) || self.is_strong(y, x) {
                    h.set(i, j, EdgeKind::None);
                }
            }
        }
        (h, map)
    }

    /// Drop every vertex touching a strong entry (loop or edge, either direction).
    pub fn h_minus_minus(&self) -> (Trigraph, Remap) {
        let keep: VSet = (0..self.k)
            .filter(|&x| (0..self.k).all(|y| !self.is_strong(x, y) && !self.is_strong(y, x)))
            .collect();
        self.induced(keep)
    }

    /// Vertex components of the underlying graph.
    pub fn components(&self) -> Vec<VSet> {
        self.underlying_graph()
            .components()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect()
    }

    pub fn component_of(&self, x: usize) -> VSet {
        self.components()
            .into_iter()
            .find(|c| c.contains(x))
            .unwrap_or(VSet::EMPTY)
    }

    pub fn rows(&self) -> Vec<String> {
        (0..self.k)
            .map(|x| (0..self.k).map(|y| self.get(x, y).symbol()).collect())
            .collect()
    }

    /// The matrix rows concatenated, e.g. `0**1` for the split trigraph.
    pub fn matrix_string(&self) -> String {
        self.rows().concat()
    }

    /// Serialized `.tri` form: the vertex count, then one row per line.
    pub fn to_tri(&self) -> String {
        let mut s = format!("{}\n", self.k);
        for r in self.rows() {
            s.push_str(&r);
            s.push('\n');
        }
        s
    }

    pub fn parse_tri(text: &str) -> Result<Trigraph> {
        let mut lines = text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| input_err!("missing vertex count"))?;
        let k: usize = header
            .trim()
            .parse()
            .map_err(|_| input_err!("invalid vertex count {header:?}"))?;
        let rows: Vec<&str> = lines.by_ref().take(k).map(str::trim).collect();
        if rows.len() != k {
            return Err(input_err!("expected {k} matrix rows, found {}", rows.len()));
        }
        if let Some(extra) = lines.next() {
            return Err(input_err!("unexpected trailing line {extra:?}"));
        }
        Trigraph::from_rows(&rows)
    }
}

impl FromStr for Trigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Trigraph> {
        Trigraph::parse_tri(s)
    }
}

impl fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trigraph[{}]", self.rows().join("/"))
    }
}

impl fmt::Display for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tri())
    }
}

/// Trigraphs used throughout the tests and shipped as `.tri` fixtures.
pub mod fixtures {
    use super::*;

    fn rows(r: &[&str]) -> Trigraph {
        Trigraph::from_rows(r).expect("fixture rows are valid")
    }

    /// Clique + independent set partition; 1 is the independent side.
    pub fn split() -> Trigraph {
        rows(&["0*", "*1"])
    }

    /// Order x, y, z, w.
    pub fn stubborn() -> Trigraph {
        rows(&["1***", "*00*", "*0**", "***0"])
    }

    pub fn clique3() -> Trigraph {
        rows(&["1**", "*1*", "**1"])
    }

    /// Order x, y, z.
    pub fn stable_cut() -> Trigraph {
        rows(&["*1*", "1**", "**1"])
    }

    /// Order x, y, z, w.
    pub fn path4() -> Trigraph {
        rows(&["0100", "1**0", "0*0*", "00**"])
    }

    /// Strong loop x, weak loop y, weak path x - y - z.
    pub fn tree3() -> Trigraph {
        rows(&["1*0", "***", "0*0"])
    }

    /// Weak symmetric 5-cycle with strong loops at the first three vertices.
    pub fn cycle5_3l() -> Trigraph {
        let mut h = Trigraph::new(5);
        for i in 0..5 {
            h.set_sym(i, (i + 1) % 5, EdgeKind::Weak);
        }
        for i in 0..3 {
            h.set(i, i, EdgeKind::Strong);
        }
        h
    }

    pub fn all() -> Vec<(&'static str, Trigraph)> {
        vec![
            ("split", split()),
            ("stubborn", stubborn()),
            ("clique3", clique3()),
            ("stable_cut", stable_cut()),
            ("path4", path4()),
            ("tree3", tree3()),
            ("cycle5_3l", cycle5_3l()),
        ]
    }
}
