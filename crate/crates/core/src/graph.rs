//! Exact graph algorithms on small undirected graphs and digraphs:
//! components, bridges, chordality, minimal chordal completion and the
//! maximal cliques of a chordal graph.

use crate::error::{contract_err, Result};

/// Undirected graph on `0..n` stored as a symmetric adjacency matrix.
///
/// Loops are representable (trigraph-derived graphs keep them) but every
/// chordality routine ignores the diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v] = false;
        self.adj[v][u] = false;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.adj[u][u]
    }

    /// Neighbours other than `u` itself, in increasing order.
    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| v != u && self.adj[u][v])
    }

    /// Non-loop edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                g.adj[i][j] = self.adj[u][v];
            }
        }
        g
    }

    pub fn without_loops(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            g.adj[u][u] = false;
        }
        g
    }

    /// Edges `uv` present, or joined through some third vertex `z`.
    pub fn square(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !g.adj[u][v] {
                    if (0..self.n).any(|z| self.adj[u][z] && self.adj[z][v]) {
                        g.adj[u][v] = true;
                    }
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by their least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n])
    }

    /// Components of the subgraph induced by the vertices flagged in `alive`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] || !alive[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbours(u) {
                    if alive[v] && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Component index of every vertex (in the order of [`Graph::components`]).
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (c, comp) in self.components().iter().enumerate() {
            for &u in comp {
                ids[u] = c;
            }
        }
        ids
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        // low-link DFS; graphs here are tiny so recursion depth is harmless
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();

        fn dfs(
            g: &Graph,
            u: usize,
            parent: Option<usize>,
            timer: &mut usize,
            disc: &mut [usize],
            low: &mut [usize],
            out: &mut Vec<(usize, usize)>,
        ) {
            disc[u] = *timer;
            low[u] = *timer;
            *timer += 1;
            for v in g.neighbours(u) {
                if Some(v) == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    dfs(g, v, Some(u), timer, disc, low, out);
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        out.push((u.min(v), u.max(v)));
                    }
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            }
        }

        for s in 0..n {
            if disc[s] == usize::MAX {
                dfs(self, s, None, &mut timer, &mut disc, &mut low, &mut out);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.has_edge(u, v) && u != v && self.bridges().contains(&key)
    }

    /// Whether the graph (ignoring loops) is a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Whether the graph (ignoring loops) is a single cycle through all vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.is_connected()
            && (0..self.n).all(|u| self.neighbours(u).count() == 2)
    }

    pub fn has_triangle(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                if !self.adj[a][b] {
                    continue;
                }
                for c in b + 1..n {
                    if self.adj[a][c] && self.adj[b][c] {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| self.adj[u][v]))
    }
}

/// Maximum cardinality search. Returns vertices in the order they were
/// numbered (first numbered first); reversing it yields a perfect
/// elimination ordering exactly when the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // lowest id wins ties
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Checks that `peo` is a perfect elimination ordering of `g`: the later
/// neighbours of every vertex form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, peo: &[usize]) -> bool {
    let n = g.order();
    if peo.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in peo.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g.neighbours(v).filter(|&w| pos[w] > pos[v]).collect();
        // it suffices to check against the earliest later neighbour
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != p && !g.has_edge(p, w)) {
                return false;
            }
        }
    }
    true
}

/// Chordality test; returns a perfect elimination ordering when chordal.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let g = g.without_loops();
    let mut peo = mcs_order(&g);
    peo.reverse();
    is_perfect_elimination_ordering(&g, &peo).then_some(peo)
}

/// Inclusion-minimal chordal supergraph, computed with MCS-M.
///
/// A vertex `y` gets its weight raised (and, if not adjacent, a fill edge
/// to the current vertex) when it is reachable through unnumbered vertices
/// of strictly smaller weight.
pub fn minimal_chordal_completion(g: &Graph) -> Graph {
    let g = g.without_loops();
    let n = g.order();
    let mut out = g.clone();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[v] = true;

        // reach[y] = smallest possible maximum weight of an inner vertex on a
        // path v .. y through unnumbered vertices (bottleneck search).
        let mut best = vec![usize::MAX; n];
        let mut raise = Vec::new();
        let mut frontier: Vec<(usize, usize)> = Vec::new();
        for w in g.neighbours(v) {
            if !numbered[w] {
                best[w] = 0;
                frontier.push((0, w));
            }
        }
        while let Some(idx) = (0..frontier.len()).min_by_key(|&i| frontier[i].0) {
            let (b, y) = frontier.swap_remove(idx);
            if b > best[y] {
                continue;
            }
            for z in g.neighbours(y) {
                if numbered[z] || z == v {
                    continue;
                }
                let nb = b.max(weight[y] + 1);
                if nb < best[z] {
                    best[z] = nb;
                    frontier.push((nb, z));
                }
            }
        }
        for y in 0..n {
            // a path whose inner weights are all < weight[y]
            if !numbered[y] && y != v && best[y] != usize::MAX && best[y] <= weight[y] {
                raise.push(y);
            }
        }
        for y in raise {
            weight[y] += 1;
            if !out.has_edge(v, y) {
                out.add_edge(v, y);
            }
        }
    }
    out
}

/// All maximal cliques of a chordal graph, given a perfect elimination
/// ordering. Each clique is sorted; cliques appear in PEO order of their
/// defining vertex.
pub fn chordal_maximal_cliques(g: &Graph, peo: &[usize]) -> Result<Vec<Vec<usize>>> {
    let g = g.without_loops();
    if !is_perfect_elimination_ordering(&g, peo) {
        return Err(contract_err!("ordering is not a perfect elimination ordering"));
    }
    let n = g.order();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbours(v).filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    let all = candidates.clone();
    candidates.retain(|c| {
        !all.iter()
            .any(|d| d.len() > c.len() && c.iter().all(|x| d.contains(x)))
    });
    candidates.dedup();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for c in candidates {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn components_and_bridges() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.components().len(), 1);
        assert_eq!(p3.bridges().len(), 2);
        let k3 = cycle(3);
        assert_eq!(k3.components().len(), 1);
        assert!(k3.bridges().is_empty());
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&cycle(4)).is_none());
        assert!(is_chordal(&cycle(5)).is_none());
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        assert!(is_chordal(&star).is_some());
    }

    #[test]
    fn completion_fill_counts() {
        let c4 = cycle(4);
        let h = minimal_chordal_completion(&c4);
        assert!(is_chordal(&h).is_some());
        assert_eq!(h.edge_count() - c4.edge_count(), 1);

        let c5 = cycle(5);
        let h = minimal_chordal_completion(&c5);
        assert!(is_chordal(&h).is_some());
        assert_eq!(h.edge_count() - c5.edge_count(), 2);

        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(minimal_chordal_completion(&tree), tree);
    }

    #[test]
    fn cliques_of_small_chordal_graphs() {
        let k3 = cycle(3);
        let peo = is_chordal(&k3).unwrap();
        assert_eq!(chordal_maximal_cliques(&k3, &peo).unwrap(), vec![vec![0, 1, 2]]);

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let peo = is_chordal(&p3).unwrap();
        let mut cl = chordal_maximal_cliques(&p3, &peo).unwrap();
        cl.sort();
        assert_eq!(cl, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn cliques_reject_bad_ordering() {
        let c4 = cycle(4);
        assert!(chordal_maximal_cliques(&c4, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn square_adds_two_step_pairs() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(p3.square().has_edge(0, 2));
        assert_eq!(Graph::new(3).square(), Graph::new(3));
    }
}
