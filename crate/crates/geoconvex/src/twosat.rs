//! 2-SAT over an implication graph.
//!
//! Satisfiability is decided by strongly connected components: a clause
//! (a ∨ b) contributes the implications ¬a → b and ¬b → a, and the
//! formula is unsatisfiable exactly when some variable shares a
//! component with its negation. Model extraction is deterministic.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwoSatError {
    #[error("{count} variables exceed the brute-force cap of {max}")]
    TooManyVariables { count: usize, max: usize },
}

/// Literal: a variable index with a polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Lit { var: self.var, positive: !self.positive }
    }

    /// Implication-graph node: 2v for the negative literal, 2v+1 for the
    /// positive one.
    fn node(self) -> usize {
        2 * self.var + usize::from(self.positive)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    var_count: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatFormula {
    pub fn new(var_count: usize) -> Self {
        TwoSatFormula { var_count, clauses: Vec::new() }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.var_count && b.var < self.var_count, "literal out of range");
        self.clauses.push((a, b));
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.var_count);
        self.clauses.iter().all(|&(a, b)| {
            assignment[a.var] == a.positive || assignment[b.var] == b.positive
        })
    }

    /// Satisfying assignment, or None when unsatisfiable.
    ///
    /// Components are numbered in reverse topological order by the SCC
    /// pass; a variable is set true exactly when its positive literal's
    /// component sits later in topological order (smaller id) than its
    /// negative literal's. Variables in no clause come out false.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let nodes = 2 * self.var_count;
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in &self.clauses {
            adj[a.negated().node()].push(b.node());
            adj[b.negated().node()].push(a.node());
        }
        let comp = scc_ids(&adj);
        let mut assignment = Vec::with_capacity(self.var_count);
        for v in 0..self.var_count {
            let (neg, pos) = (comp[2 * v], comp[2 * v + 1]);
            if neg == pos {
                return None;
            }
            assignment.push(pos < neg);
        }
        debug_assert!(self.evaluate(&assignment));
        Some(assignment)
    }

    /// Exact model count by exhaustive enumeration. Guarded to keep the
    /// search below ~32M assignments.
    pub fn count_models_bruteforce(&self) -> Result<u64, TwoSatError> {
        const MAX_VARS: usize = 25;
        if self.var_count > MAX_VARS {
            return Err(TwoSatError::TooManyVariables {
                count: self.var_count,
                max: MAX_VARS,
            });
        }
        // Precompute clause bitmask tests: clause satisfied unless both
        // literals evaluate false.
        let mut count = 0u64;
        let mut assignment = vec![false; self.var_count];
        for bits in 0u64..1 << self.var_count {
            for (v, slot) in assignment.iter_mut().enumerate() {
                *slot = bits >> v & 1 == 1;
            }
            if self.evaluate(&assignment) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// DIMACS CNF text; variables are 1-based in the output.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p cnf {} {}", self.var_count, self.clauses.len());
        for &(a, b) in &self.clauses {
            let lit = |l: Lit| {
                let v = l.var as i64 + 1;
                if l.positive {
                    v
                } else {
                    -v
                }
            };
            let _ = writeln!(out, "{} {} 0", lit(a), lit(b));
        }
        out
    }
}

/// Strongly connected component ids via iterative Tarjan. Components
/// are numbered in the order they complete, so every component's id is
/// smaller than the ids of components that can reach it.
fn scc_ids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut next_comp = 0usize;
    // Explicit DFS frames: (vertex, next outgoing edge position).
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = frames.last_mut() {
            if *edge < adj[v].len() {
                let w = adj[v][*edge];
                *edge += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    comp
}
