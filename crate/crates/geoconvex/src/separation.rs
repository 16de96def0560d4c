//! Halfspace separation: shadows, shadow closure, gate sets, and the
//! 2-SAT reduction.
//!
//! The pipeline in [`halfspace_separation`] answers whether complementary
//! halfspaces H, H^c exist with A ⊆ H and B ⊆ H^c. A YES is verified
//! before it is returned and therefore sound on any connected graph; NO
//! and UNKNOWN split by whether some branch failed for a reason that is
//! only conclusive on the supported graph classes.

use serde::Serialize;
use thiserror::Error;

use crate::convexity::{hull, is_halfspace};
use crate::graph::{shortest_connecting_path, DistanceMatrix, Graph, GraphError};
use crate::twosat::{Lit, TwoSatFormula};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

/// Vertices x whose hull with `base` reaches `target`:
/// {x : hull(base ∪ {x}) ∩ target ≠ ∅}. Always contains `target`.
pub fn shadow(
    d: &DistanceMatrix,
    target: &VertexSet,
    base: &VertexSet,
) -> Result<VertexSet, GraphError> {
    if target.is_empty() || base.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let n = d.vertex_count();
    let mut out = VertexSet::empty(n);
    for x in 0..n {
        // x ∈ target makes hull(base ∪ {x}) ∩ target ∋ x directly.
        if target.contains(x) || hull(d, &base.with(x)).intersects(target) {
            out.insert(x);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureOutcome {
    pub a: VertexSet,
    pub b: VertexSet,
    /// Final sets intersect; the caller must treat this as failure.
    pub overlap: bool,
    /// Successive (A, B) pairs from the inputs to the fixpoint.
    pub trace: Vec<(VertexSet, VertexSet)>,
}

/// Alternating shadow/hull iteration until both sets stabilize:
/// Aⁱ ← hull(shadow(Aⁱ⁻¹ over Bⁱ⁻¹)) and symmetrically, both updates
/// reading the previous round. Sets grow monotonically, so the loop
/// terminates within |V| rounds; the fixpoint satisfies
/// A* = shadow(A*, B*) and B* = shadow(B*, A*).
pub fn shadow_closure(
    d: &DistanceMatrix,
    a0: &VertexSet,
    b0: &VertexSet,
) -> Result<ClosureOutcome, GraphError> {
    if a0.is_empty() || b0.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let mut a = a0.clone();
    let mut b = b0.clone();
    let mut trace = vec![(a.clone(), b.clone())];
    loop {
        let next_a = hull(d, &shadow(d, &a, &b)?);
        let next_b = hull(d, &shadow(d, &b, &a)?);
        if next_a == a && next_b == b {
            break;
        }
        a = next_a;
        b = next_b;
        trace.push((a.clone(), b.clone()));
    }
    Ok(ClosureOutcome { overlap: a.intersects(&b), a, b, trace })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("both sides must be nonempty")]
    EmptySide,
    #[error("sides must be disjoint")]
    NotDisjoint,
    #[error("side {side:?} is not convex")]
    NotConvex { side: Side },
    #[error("no edge joins the two sides")]
    NotOsculating,
    #[error("side {side:?} is not shadow-closed")]
    NotShadowClosed { side: Side },
}

/// A validated separation instance: disjoint convex sets joined by at
/// least one edge, each a fixpoint of its shadow over the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowClosedPair {
    a: VertexSet,
    b: VertexSet,
    residue: VertexSet,
    /// Edges with one end in A and one in B, stored (a-side, b-side) in
    /// the graph's edge order.
    ab_edges: Vec<(usize, usize)>,
}

impl ShadowClosedPair {
    pub fn new(
        g: &Graph,
        d: &DistanceMatrix,
        a: VertexSet,
        b: VertexSet,
    ) -> Result<Self, PairError> {
        if a.is_empty() || b.is_empty() {
            return Err(PairError::EmptySide);
        }
        if a.intersects(&b) {
            return Err(PairError::NotDisjoint);
        }
        if hull(d, &a) != a {
            return Err(PairError::NotConvex { side: Side::A });
        }
        if hull(d, &b) != b {
            return Err(PairError::NotConvex { side: Side::B });
        }
        let mut ab_edges = Vec::new();
        for &(u, v) in g.edges() {
            if a.contains(u) && b.contains(v) {
                ab_edges.push((u, v));
            } else if b.contains(u) && a.contains(v) {
                ab_edges.push((v, u));
            }
        }
        if ab_edges.is_empty() {
            return Err(PairError::NotOsculating);
        }
        if shadow(d, &a, &b).expect("sides nonempty") != a {
            return Err(PairError::NotShadowClosed { side: Side::A });
        }
        if shadow(d, &b, &a).expect("sides nonempty") != b {
            return Err(PairError::NotShadowClosed { side: Side::B });
        }
        let residue = a.union(&b).complement();
        // Every residue vertex is equidistant to the two ends of every
        // cross edge: a strictly closer end would place the vertex in
        // the opposite shadow, contradicting shadow-closedness.
        #[cfg(debug_assertions)]
        for x in residue.iter() {
            for &(ea, eb) in &ab_edges {
                debug_assert_eq!(
                    d.get(x, ea),
                    d.get(x, eb),
                    "residue vertex {x} not equidistant on cross edge ({ea},{eb})"
                );
            }
        }
        Ok(ShadowClosedPair { a, b, residue, ab_edges })
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn residue(&self) -> &VertexSet {
        &self.residue
    }

    pub fn ab_edges(&self) -> &[(usize, usize)] {
        &self.ab_edges
    }

    /// Gate set S_x^{ab}: residue vertices adjacent to both ends of the
    /// cross edge (a, b) and lying in interval(x,a) ∩ interval(x,b).
    pub fn s_set(
        &self,
        g: &Graph,
        d: &DistanceMatrix,
        x: usize,
        a: usize,
        b: usize,
    ) -> VertexSet {
        assert!(self.a.contains(a), "{a} is not on side A");
        assert!(self.b.contains(b), "{b} is not on side B");
        assert!(g.has_edge(a, b), "({a},{b}) is not an edge");
        assert!(self.residue.contains(x), "{x} is not a residue vertex");
        let mut out = VertexSet::empty(self.residue.universe());
        for x0 in self.residue.iter() {
            if g.has_edge(x0, a)
                && g.has_edge(x0, b)
                && d.get(x, x0) + d.get(x0, a) == d.get(x, a)
                && d.get(x, x0) + d.get(x0, b) == d.get(x, b)
            {
                out.insert(x0);
            }
        }
        out
    }

    /// S_x: union of the gate sets over all cross edges.
    pub fn s_union(&self, g: &Graph, d: &DistanceMatrix, x: usize) -> VertexSet {
        let mut out = VertexSet::empty(self.residue.universe());
        for &(a, b) in &self.ab_edges {
            out.union_with(&self.s_set(g, d, x, a, b));
        }
        out
    }

    /// x →_A y: some z ∈ A has y on a shortest x–z path.
    pub fn implies_a(&self, d: &DistanceMatrix, x: usize, y: usize) -> bool {
        assert!(self.residue.contains(x) && self.residue.contains(y));
        self.a.iter().any(|z| d.get(x, y) + d.get(y, z) == d.get(x, z))
    }

    /// x →_B y: some z ∈ B has y on a shortest x–z path.
    pub fn implies_b(&self, d: &DistanceMatrix, x: usize, y: usize) -> bool {
        assert!(self.residue.contains(x) && self.residue.contains(y));
        self.b.iter().any(|z| d.get(x, y) + d.get(y, z) == d.get(x, z))
    }

    /// Encodes the separation constraints over one boolean per residue
    /// vertex (true = joins the A side). Fails when some residue vertex
    /// has an empty gate set, which cannot happen on graphs satisfying
    /// the triangle condition.
    pub fn build_formula(
        &self,
        g: &Graph,
        d: &DistanceMatrix,
    ) -> Result<(TwoSatFormula, ResidueVars), PairFailure> {
        let vars = ResidueVars::new(&self.residue);
        let verts = vars.vertices().to_vec();
        let mut gates = Vec::with_capacity(verts.len());
        for &x in &verts {
            let s = self.s_union(g, d, x);
            if s.is_empty() {
                return Err(PairFailure::EmptySSet { vertex: x });
            }
            gates.push(s);
        }
        let mut f = TwoSatFormula::new(verts.len());
        // Equality constraints: gates shared by x and y tie every
        // residue vertex between them to the gate's value.
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i) {
                let common = gates[i].intersection(&gates[j]);
                if common.is_empty() {
                    continue;
                }
                for z in d.interval(x, y).intersection(&self.residue).iter() {
                    let zv = vars.var_of(z);
                    for x0 in common.iter() {
                        let gv = vars.var_of(x0);
                        f.add_clause(Lit::pos(gv), Lit::neg(zv));
                        f.add_clause(Lit::neg(gv), Lit::pos(zv));
                    }
                }
            }
        }
        // Implication constraints: pulling x to a side drags along every
        // vertex that lies toward that side from x.
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate() {
                if i == j {
                    continue;
                }
                if self.implies_a(d, x, y) {
                    f.add_clause(Lit::neg(i), Lit::pos(j));
                }
                if self.implies_b(d, x, y) {
                    f.add_clause(Lit::pos(i), Lit::neg(j));
                }
            }
        }
        // Interval constraints: a pair straddling B (resp. A) cannot go
        // entirely to A (resp. B).
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i) {
                let interval = d.interval(x, y);
                if interval.intersects(&self.b) {
                    f.add_clause(Lit::neg(i), Lit::neg(j));
                }
                if interval.intersects(&self.a) {
                    f.add_clause(Lit::pos(i), Lit::pos(j));
                }
            }
        }
        Ok((f, vars))
    }

    /// Solves this instance: UNSAT is a definitive NO (the constraints
    /// are necessary on any graph); a model yields a candidate
    /// H = A ∪ {x : α(x)} which is verified before YES. Verification can
    /// only fail outside the supported classes, where the answer
    /// degrades to UNKNOWN.
    pub fn separate(&self, g: &Graph, d: &DistanceMatrix) -> PairOutcome {
        let (formula, vars) = match self.build_formula(g, d) {
            Err(failure) => {
                return PairOutcome {
                    answer: Answer::Unknown,
                    halfspace: None,
                    failure: Some(failure),
                    formula: None,
                }
            }
            Ok(built) => built,
        };
        match formula.solve() {
            None => PairOutcome {
                answer: Answer::No,
                halfspace: None,
                failure: Some(PairFailure::FormulaUnsat),
                formula: Some(formula),
            },
            Some(model) => {
                let mut h = self.a.clone();
                for (var, &joins_a) in model.iter().enumerate() {
                    if joins_a {
                        h.insert(vars.vertex_of(var));
                    }
                }
                if is_halfspace(d, &h) {
                    debug_assert!(h.is_disjoint(&self.b));
                    // Halfspaces and their complements are convex, hence
                    // induce connected subgraphs.
                    debug_assert!(g.induces_connected(&h));
                    debug_assert!(g.induces_connected(&h.complement()));
                    PairOutcome {
                        answer: Answer::Yes,
                        halfspace: Some(h),
                        failure: None,
                        formula: Some(formula),
                    }
                } else {
                    PairOutcome {
                        answer: Answer::Unknown,
                        halfspace: None,
                        failure: Some(PairFailure::VerificationFailed),
                        formula: Some(formula),
                    }
                }
            }
        }
    }
}

/// Bidirectional map between residue vertices and formula variables.
/// Variable i is the i-th residue vertex in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueVars {
    vertices: Vec<usize>,
    var_index: Vec<Option<usize>>,
}

impl ResidueVars {
    fn new(residue: &VertexSet) -> Self {
        let vertices = residue.to_vec();
        let mut var_index = vec![None; residue.universe()];
        for (i, &v) in vertices.iter().enumerate() {
            var_index[v] = Some(i);
        }
        ResidueVars { vertices, var_index }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn var_of(&self, vertex: usize) -> usize {
        self.var_index[vertex].expect("vertex is not in the residue")
    }

    pub fn vertex_of(&self, var: usize) -> usize {
        self.vertices[var]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum PairFailure {
    FormulaUnsat,
    VerificationFailed,
    /// Some residue vertex has no gate; arises only on graphs violating
    /// the triangle condition.
    EmptySSet { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub answer: Answer,
    pub halfspace: Option<VertexSet>,
    pub failure: Option<PairFailure>,
    /// The solved formula, when construction got that far.
    pub formula: Option<TwoSatFormula>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BranchFailure {
    /// The input hulls intersect; no branches were attempted.
    HullOverlap,
    ClosureOverlap { branch: usize },
    FormulaUnsat { branch: usize },
    VerificationFailed { branch: usize },
    EmptySSet { branch: usize, vertex: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationOutcome {
    pub answer: Answer,
    pub halfspace: Option<VertexSet>,
    /// Index of the path edge whose branch produced the halfspace.
    pub branch: Option<usize>,
    pub diagnostics: Vec<BranchFailure>,
    /// Formulas built per branch, for CNF export.
    #[serde(skip)]
    pub formulas: Vec<(usize, TwoSatFormula)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeparationError {
    #[error("input sets must be disjoint")]
    OverlappingInputs,
}

fn yes_outcome(halfspace: VertexSet, branch: Option<usize>) -> SeparationOutcome {
    SeparationOutcome {
        answer: Answer::Yes,
        halfspace: Some(halfspace),
        branch,
        diagnostics: Vec::new(),
        formulas: Vec::new(),
    }
}

/// Decides whether complementary halfspaces separate A from B.
///
/// Empty sides are separated by the trivial halfspaces. Intersecting
/// hulls rule separation out immediately. Otherwise each edge of a fixed
/// lexicographic shortest A–B path seeds a branch: the closure of
/// (A ∪ {uᵢ}, B ∪ {uᵢ₊₁}) either overlaps (branch fails), or its pair is
/// solved via 2-SAT. The first verified halfspace wins; with no YES the
/// answer is NO unless some branch was inconclusive (UNKNOWN).
pub fn halfspace_separation(
    g: &Graph,
    d: &DistanceMatrix,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<SeparationOutcome, SeparationError> {
    if a.intersects(b) {
        return Err(SeparationError::OverlappingInputs);
    }
    let n = g.vertex_count();
    if a.is_empty() {
        return Ok(yes_outcome(VertexSet::empty(n), None));
    }
    if b.is_empty() {
        return Ok(yes_outcome(VertexSet::full(n), None));
    }
    if hull(d, a).intersects(&hull(d, b)) {
        return Ok(SeparationOutcome {
            answer: Answer::No,
            halfspace: None,
            branch: None,
            diagnostics: vec![BranchFailure::HullOverlap],
            formulas: Vec::new(),
        });
    }
    let path = shortest_connecting_path(g, d, a, b).expect("sides nonempty");
    let mut diagnostics = Vec::new();
    let mut formulas = Vec::new();
    let mut saw_unknown = false;
    for i in 0..path.len() - 1 {
        let closed = shadow_closure(d, &a.with(path[i]), &b.with(path[i + 1]))
            .expect("branch sets nonempty");
        if closed.overlap {
            diagnostics.push(BranchFailure::ClosureOverlap { branch: i });
            continue;
        }
        let pair = ShadowClosedPair::new(g, d, closed.a, closed.b)
            .expect("closure fixpoints satisfy the pair invariants");
        let outcome = pair.separate(g, d);
        if let Some(f) = outcome.formula {
            formulas.push((i, f));
        }
        match outcome.answer {
            Answer::Yes => {
                let h = outcome.halfspace.expect("yes carries a halfspace");
                debug_assert!(a.is_subset(&h) && b.is_disjoint(&h));
                return Ok(SeparationOutcome {
                    answer: Answer::Yes,
                    halfspace: Some(h),
                    branch: Some(i),
                    diagnostics,
                    formulas,
                });
            }
            Answer::No => diagnostics.push(BranchFailure::FormulaUnsat { branch: i }),
            Answer::Unknown => {
                saw_unknown = true;
                diagnostics.push(match outcome.failure.expect("unknown carries a reason") {
                    PairFailure::VerificationFailed => {
                        BranchFailure::VerificationFailed { branch: i }
                    }
                    PairFailure::EmptySSet { vertex } => {
                        BranchFailure::EmptySSet { branch: i, vertex }
                    }
                    PairFailure::FormulaUnsat => unreachable!("unsat is a definitive no"),
                });
            }
        }
    }
    Ok(SeparationOutcome {
        answer: if saw_unknown { Answer::Unknown } else { Answer::No },
        halfspace: None,
        branch: None,
        diagnostics,
        formulas,
    })
}
