//! 2-SAT via the implication graph and strongly connected components.

/// A literal over variable `var`; `positive == false` is the negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    fn negate(self) -> Self {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }
}

/// Clauses are two-literal disjunctions; a unit clause repeats its literal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoSatInstance {
    vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatInstance {
    pub fn new(vars: usize) -> Self {
        TwoSatInstance {
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

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(
            a.var < self.vars && b.var < self.vars,
            "literal references unknown variable"
        );
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }
}

/// A satisfying assignment, or `None` if the instance is unsatisfiable.
///
/// Tarjan's algorithm numbers components in reverse topological order of the
/// implication graph; a variable is set true when its positive literal's
/// component comes first in that numbering.
pub fn solve_2sat(inst: &TwoSatInstance) -> Option<Vec<bool>> {
    let nodes = 2 * inst.vars;
    let mut graph = vec![Vec::new(); nodes];
    for &(a, b) in &inst.clauses {
        graph[a.negate().node()].push(b.node());
        graph[b.negate().node()].push(a.node());
    }
    let comp = tarjan(&graph);
    (0..inst.vars)
        .map(|v| {
            let (p, n) = (comp[Lit::pos(v).node()], comp[Lit::neg(v).node()]);
            (p != n).then_some(p < n)
        })
        .collect()
}

/// Iterative Tarjan SCC; returns the component index of every node.
fn tarjan(graph: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = graph.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&(v, edge)) = call.last() {
            if edge == 0 && index[v] == UNSEEN {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = graph[v].get(edge) {
                call.last_mut().unwrap().1 += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
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
    comp
}
