//! 2-satisfiability via strongly connected components of the implication
//! graph.

/// A literal: variable index and polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Lit {
        Lit { var, positive: false }
    }

    pub fn not(self) -> Lit {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    fn node(self) -> usize {
        2 * self.var + (!self.positive) as usize
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

#[derive(Clone, Debug, Default)]
pub struct TwoSat {
    vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSat {
    pub fn new(vars: usize) -> TwoSat {
        TwoSat {
            vars,
            clauses: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    /// `a or b`.
    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.vars && b.var < self.vars);
        self.clauses.push((a, b));
    }

    /// Forces `a` true.
    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }

    /// A satisfying assignment, or `None`.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let m = 2 * self.vars;
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(a, b) in &self.clauses {
            out[a.not().node()].push(b.node());
            out[b.not().node()].push(a.node());
        }
        let comp = tarjan(&out);
        // Tarjan numbers components in reverse topological order.
        let mut assignment = vec![false; self.vars];
        for v in 0..self.vars {
            let (p, q) = (comp[2 * v], comp[2 * v + 1]);
            if p == q {
                return None;
            }
            assignment[v] = p < q;
        }
        debug_assert!(self.satisfied_by(&assignment));
        Some(assignment)
    }
}

/// Component id per node; ids follow reverse topological order of the
/// condensation. Iterative to avoid deep recursion.
fn tarjan(out: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let m = out.len();
    let mut index = vec![UNSEEN; m];
    let mut low = vec![0; m];
    let mut on_stack = vec![false; m];
    let mut comp = vec![UNSEEN; m];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..m {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < out[v].len() {
                let w = out[v][*i];
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("scc stack underflow");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}
