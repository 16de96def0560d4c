//! Metric graph-class checkers.
//!
//! Each checker scans its defining condition exhaustively and reports
//! either that the class condition holds or the first violating tuple in
//! lexicographic scan order. Witnesses can be re-validated against the
//! definitions via [`Violation::confirms`].

use serde::Serialize;
use thiserror::Error;

use crate::convexity::is_convex;
use crate::graph::{find_induced_cycle, DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("descent width must be at least 1")]
    InvalidDescentWidth,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassKind {
    TriangleCondition,
    QuadrangleCondition,
    WeaklyModular,
    Meshed,
    PseudoModularMetric,
    PseudoModularBalls,
    Bridged,
    WeaklyBridged,
    ConvexBalls,
    SimpleDescent(usize),
    IntervalCondition,
    PositioningCondition,
    MatroidBasisCandidate,
}

impl ClassKind {
    pub fn name(&self) -> String {
        match self {
            ClassKind::TriangleCondition => "tc".into(),
            ClassKind::QuadrangleCondition => "qc".into(),
            ClassKind::WeaklyModular => "weakly_modular".into(),
            ClassKind::Meshed => "meshed".into(),
            ClassKind::PseudoModularMetric => "pseudo_modular_metric".into(),
            ClassKind::PseudoModularBalls => "pseudo_modular_3helly".into(),
            ClassKind::Bridged => "bridged".into(),
            ClassKind::WeaklyBridged => "weakly_bridged".into(),
            ClassKind::ConvexBalls => "convex_balls".into(),
            ClassKind::SimpleDescent(k) => format!("sd_{k}"),
            ClassKind::IntervalCondition => "ic".into(),
            ClassKind::PositioningCondition => "pc".into(),
            ClassKind::MatroidBasisCandidate => "matroid_basis_candidate".into(),
        }
    }
}

impl Serialize for ClassKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

/// Violating tuple for one of the class conditions. Field names follow
/// the roles in the condition being violated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Adjacent v, w equidistant from u with no common neighbor closer to u.
    Triangle { u: usize, v: usize, w: usize },
    /// Nonadjacent v, w with shared neighbor z one step farther from u,
    /// no common neighbor closer to u.
    Quadrangle { u: usize, v: usize, w: usize, z: usize },
    /// d(v,w) = 2 but no common neighbor x with 2 d(u,x) <= d(u,v) + d(u,w).
    WeakQuadrangle { u: usize, v: usize, w: usize },
    /// Close equidistant pair v, w with no common neighbor nearer to u.
    MetricTriple { u: usize, v: usize, w: usize },
    /// Pairwise intersecting balls with empty common intersection.
    BallTriple { centers: [usize; 3], radii: [usize; 3] },
    InducedCycle { vertices: Vec<usize> },
    NonConvexBall { center: usize, radius: usize },
    /// Clique on a sphere with no common neighbor on the next sphere in.
    SphereClique { center: usize, radius: usize, clique: Vec<usize> },
    /// Distance-2 interval that is not a square, pyramid, or octahedron.
    IntervalShape { u: usize, v: usize },
    /// Square whose opposite-corner distance sums to u disagree.
    SquarePosition { square: [usize; 4], vertex: usize },
}

impl Violation {
    /// Re-evaluates the defining condition for this tuple and returns
    /// true when the tuple genuinely violates it.
    pub fn confirms(&self, g: &Graph, d: &DistanceMatrix) -> bool {
        match *self {
            Violation::Triangle { u, v, w } => {
                g.has_edge(v, w)
                    && d.get(u, v) == d.get(u, w)
                    && d.get(u, v) > 1
                    && common_neighbor_at(g, d, u, v, w, d.get(u, v) - 1).is_none()
            }
            Violation::Quadrangle { u, v, w, z } => {
                g.has_edge(v, z)
                    && g.has_edge(z, w)
                    && v != w
                    && !g.has_edge(v, w)
                    && d.get(u, v) >= 2
                    && d.get(u, v) == d.get(u, w)
                    && d.get(u, z) == d.get(u, v) + 1
                    && common_neighbor_at(g, d, u, v, w, d.get(u, v) - 1).is_none()
            }
            Violation::WeakQuadrangle { u, v, w } => {
                d.get(v, w) == 2
                    && !g.neighbors(v).iter().any(|&x| {
                        g.has_edge(x, w) && 2 * d.get(u, x) <= d.get(u, v) + d.get(u, w)
                    })
            }
            Violation::MetricTriple { u, v, w } => {
                let k = d.get(u, v);
                (1..=2).contains(&d.get(v, w))
                    && k == d.get(u, w)
                    && k >= 2
                    && common_neighbor_at(g, d, u, v, w, k - 1).is_none()
            }
            Violation::BallTriple { centers, radii } => {
                let pairwise = (0..3).all(|i| {
                    (i + 1..3).all(|j| d.get(centers[i], centers[j]) <= radii[i] + radii[j])
                });
                pairwise
                    && !g
                        .vertices()
                        .any(|x| (0..3).all(|i| d.get(centers[i], x) <= radii[i]))
            }
            Violation::InducedCycle { ref vertices } => {
                (vertices.len() == 4 || vertices.len() == 5)
                    && vertices.iter().all(|&v| {
                        vertices.iter().filter(|&&w| w != v && g.has_edge(v, w)).count() == 2
                    })
            }
            Violation::NonConvexBall { center, radius } => !is_convex(d, &d.ball(center, radius)),
            Violation::SphereClique { center, radius, ref clique } => {
                radius >= 2
                    && !clique.is_empty()
                    && clique.iter().all(|&v| d.get(center, v) == radius)
                    && g.is_clique(&VertexSet::from_members(g.vertex_count(), clique.iter().copied()))
                    && !g.vertices().any(|w| {
                        d.get(center, w) == radius - 1 && clique.iter().all(|&v| g.has_edge(w, v))
                    })
            }
            Violation::IntervalShape { u, v } => {
                d.get(u, v) == 2 && !interval_shape_ok(g, d, u, v)
            }
            Violation::SquarePosition { square, vertex } => {
                squares(g).contains(&square) && {
                    let [v1, v2, v3, v4] = square;
                    d.get(vertex, v1) + d.get(vertex, v3) != d.get(vertex, v2) + d.get(vertex, v4)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub kind: ClassKind,
    pub holds: bool,
    pub witness: Option<Violation>,
}

impl ClassReport {
    fn pass(kind: ClassKind) -> Self {
        ClassReport { kind, holds: true, witness: None }
    }

    fn fail(kind: ClassKind, witness: Violation) -> Self {
        ClassReport { kind, holds: false, witness: Some(witness) }
    }

    fn relabel(self, kind: ClassKind) -> Self {
        ClassReport { kind, ..self }
    }
}

/// First common neighbor of v and w at the given distance from u.
fn common_neighbor_at(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
    w: usize,
    dist: usize,
) -> Option<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .find(|&x| g.has_edge(x, w) && d.get(u, x) == dist)
}

/// Triangle condition: adjacent vertices equidistant from u at distance
/// more than one have a common neighbor one step closer to u.
pub fn satisfies_tc(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    for u in g.vertices() {
        for v in g.vertices() {
            for w in v + 1..g.vertex_count() {
                if !g.has_edge(v, w) {
                    continue;
                }
                let k = d.get(u, v);
                if k != d.get(u, w) || k <= 1 {
                    continue;
                }
                if common_neighbor_at(g, d, u, v, w, k - 1).is_none() {
                    return ClassReport::fail(
                        ClassKind::TriangleCondition,
                        Violation::Triangle { u, v, w },
                    );
                }
            }
        }
    }
    ClassReport::pass(ClassKind::TriangleCondition)
}

/// Quadrangle condition: for nonadjacent v, w at equal distance k >= 2
/// from u with a common neighbor z at distance k + 1, some common
/// neighbor of v and w lies at distance k - 1.
pub fn satisfies_qc(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    for u in g.vertices() {
        for v in g.vertices() {
            for w in v + 1..g.vertex_count() {
                if g.has_edge(v, w) {
                    continue;
                }
                let k = d.get(u, v);
                if k < 2 || k != d.get(u, w) {
                    continue;
                }
                for z in g.neighbors(v).iter().copied() {
                    if !g.has_edge(z, w) || d.get(u, z) != k + 1 {
                        continue;
                    }
                    if common_neighbor_at(g, d, u, v, w, k - 1).is_none() {
                        return ClassReport::fail(
                            ClassKind::QuadrangleCondition,
                            Violation::Quadrangle { u, v, w, z },
                        );
                    }
                }
            }
        }
    }
    ClassReport::pass(ClassKind::QuadrangleCondition)
}

pub fn is_weakly_modular(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    let tc = satisfies_tc(g, d);
    if !tc.holds {
        return tc.relabel(ClassKind::WeaklyModular);
    }
    satisfies_qc(g, d).relabel(ClassKind::WeaklyModular)
}

/// Meshed: every distance-2 pair v, w has a common neighbor x with
/// 2 d(u,x) <= d(u,v) + d(u,w) for every u.
pub fn is_meshed(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    for u in g.vertices() {
        for v in g.vertices() {
            for w in v + 1..g.vertex_count() {
                if d.get(v, w) != 2 {
                    continue;
                }
                let bound = d.get(u, v) + d.get(u, w);
                let ok = g
                    .neighbors(v)
                    .iter()
                    .any(|&x| g.has_edge(x, w) && 2 * d.get(u, x) <= bound);
                if !ok {
                    return ClassReport::fail(
                        ClassKind::Meshed,
                        Violation::WeakQuadrangle { u, v, w },
                    );
                }
            }
        }
    }
    ClassReport::pass(ClassKind::Meshed)
}

/// Pseudo-modularity, metric form: vertices v, w at distance 1 or 2 and
/// equal distance k >= 2 from u have a common neighbor at distance k - 1.
pub fn is_pseudo_modular_metric(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    for u in g.vertices() {
        for v in g.vertices() {
            for w in v + 1..g.vertex_count() {
                if !(1..=2).contains(&d.get(v, w)) {
                    continue;
                }
                let k = d.get(u, v);
                if k < 2 || k != d.get(u, w) {
                    continue;
                }
                if common_neighbor_at(g, d, u, v, w, k - 1).is_none() {
                    return ClassReport::fail(
                        ClassKind::PseudoModularMetric,
                        Violation::MetricTriple { u, v, w },
                    );
                }
            }
        }
    }
    ClassReport::pass(ClassKind::PseudoModularMetric)
}

/// Pseudo-modularity, ball form: any three pairwise intersecting balls
/// share a vertex. Balls pairwise intersect exactly when center
/// distances stay within radius sums, so only the triple check needs a
/// scan. Radii range over 0..=diameter; larger radii give whole-graph
/// balls and add nothing.
pub fn is_pseudo_modular_3helly(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    let n = g.vertex_count();
    let diam = d.diameter();
    let centers_radii: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..=diam).map(move |r| (v, r)))
        .collect();
    for (i, &(v1, r1)) in centers_radii.iter().enumerate() {
        for (j, &(v2, r2)) in centers_radii.iter().enumerate().skip(i) {
            if d.get(v1, v2) > r1 + r2 {
                continue;
            }
            for &(v3, r3) in &centers_radii[j..] {
                if d.get(v1, v3) > r1 + r3 || d.get(v2, v3) > r2 + r3 {
                    continue;
                }
                let hit = (0..n).any(|x| {
                    d.get(v1, x) <= r1 && d.get(v2, x) <= r2 && d.get(v3, x) <= r3
                });
                if !hit {
                    return ClassReport::fail(
                        ClassKind::PseudoModularBalls,
                        Violation::BallTriple {
                            centers: [v1, v2, v3],
                            radii: [r1, r2, r3],
                        },
                    );
                }
            }
        }
    }
    ClassReport::pass(ClassKind::PseudoModularBalls)
}

/// Bridged: weakly modular with no induced 4- or 5-cycle.
pub fn is_bridged(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    let wm = is_weakly_modular(g, d);
    if !wm.holds {
        return wm.relabel(ClassKind::Bridged);
    }
    for len in [4, 5] {
        if let Some(cycle) = find_induced_cycle(g, len).expect("supported length") {
            return ClassReport::fail(ClassKind::Bridged, Violation::InducedCycle { vertices: cycle });
        }
    }
    ClassReport::pass(ClassKind::Bridged)
}

/// Weakly bridged: weakly modular with no induced 4-cycle.
pub fn is_weakly_bridged(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    let wm = is_weakly_modular(g, d);
    if !wm.holds {
        return wm.relabel(ClassKind::WeaklyBridged);
    }
    if let Some(cycle) = find_induced_cycle(g, 4).expect("supported length") {
        return ClassReport::fail(
            ClassKind::WeaklyBridged,
            Violation::InducedCycle { vertices: cycle },
        );
    }
    ClassReport::pass(ClassKind::WeaklyBridged)
}

/// Every single-center ball of radius up to the diameter is convex.
pub fn has_convex_balls(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    let diam = d.diameter();
    for v in g.vertices() {
        for radius in 1..=diam {
            if !is_convex(d, &d.ball(v, radius)) {
                return ClassReport::fail(
                    ClassKind::ConvexBalls,
                    Violation::NonConvexBall { center: v, radius },
                );
            }
        }
    }
    ClassReport::pass(ClassKind::ConvexBalls)
}

/// Simple descent of width k: every clique of at most k vertices on a
/// sphere of radius at least 2 has a common neighbor on the sphere one
/// step in. Width 2 coincides with the triangle condition.
pub fn satisfies_k_sd(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
) -> Result<ClassReport, ClassError> {
    if k < 1 {
        return Err(ClassError::InvalidDescentWidth);
    }
    for v in g.vertices() {
        let ecc = d.eccentricity(v);
        for i in 1..ecc {
            let outer = d.sphere(v, i + 1).to_vec();
            for clique in cliques_up_to(g, &outer, k) {
                let ok = g.vertices().any(|w| {
                    d.get(v, w) == i && clique.iter().all(|&x| g.has_edge(w, x))
                });
                if !ok {
                    return Ok(ClassReport::fail(
                        ClassKind::SimpleDescent(k),
                        Violation::SphereClique { center: v, radius: i + 1, clique },
                    ));
                }
            }
        }
    }
    Ok(ClassReport::pass(ClassKind::SimpleDescent(k)))
}

/// Nonempty cliques of size at most k within `members`, in lexicographic
/// order of their vertex lists.
fn cliques_up_to(g: &Graph, members: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        g: &Graph,
        members: &[usize],
        from: usize,
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for idx in from..members.len() {
            let v = members[idx];
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                out.push(current.clone());
                if current.len() < k {
                    extend(g, members, idx + 1, k, current, out);
                }
                current.pop();
            }
        }
    }
    extend(g, members, 0, k, &mut current, &mut out);
    out.sort();
    out
}

/// All induced 4-cycles in canonical rotation: smallest vertex first,
/// then its smaller neighbor, the opposite corner, the larger neighbor.
pub fn squares(g: &Graph) -> Vec<[usize; 4]> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for subset in g.vertices().combinations(4) {
        let two_regular = subset.iter().all(|&v| {
            subset.iter().filter(|&&w| w != v && g.has_edge(v, w)).count() == 2
        });
        if !two_regular {
            continue;
        }
        let v1 = subset[0];
        let mut nbrs: Vec<usize> = subset[1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v1, w))
            .collect();
        nbrs.sort_unstable();
        let opposite = subset[1..]
            .iter()
            .copied()
            .find(|&w| !g.has_edge(v1, w))
            .expect("square has an opposite corner");
        out.push([v1, nbrs[0], opposite, nbrs[1]]);
    }
    out.sort_unstable();
    out
}

fn interval_shape_ok(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let interval = d.interval(u, v);
    let members = interval.to_vec();
    let deg_within = |x: usize| {
        members.iter().filter(|&&y| y != x && g.has_edge(x, y)).count()
    };
    let mut degrees: Vec<usize> = members.iter().map(|&x| deg_within(x)).collect();
    degrees.sort_unstable();
    match members.len() {
        4 => degrees == [2, 2, 2, 2],
        5 => degrees == [3, 3, 3, 3, 4],
        6 => degrees == [4, 4, 4, 4, 4, 4],
        _ => false,
    }
}

/// Interval condition: each distance-2 interval induces a square, a
/// pyramid, or an octahedron, recognized by vertex count and degree
/// fingerprint.
pub fn satisfies_ic(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            if d.get(u, v) == 2 && !interval_shape_ok(g, d, u, v) {
                return ClassReport::fail(
                    ClassKind::IntervalCondition,
                    Violation::IntervalShape { u, v },
                );
            }
        }
    }
    ClassReport::pass(ClassKind::IntervalCondition)
}

/// Positioning condition: for every square, both pairs of opposite
/// corners have equal distance sums to every vertex.
pub fn satisfies_pc(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    for square in squares(g) {
        let [v1, v2, v3, v4] = square;
        for u in g.vertices() {
            if d.get(u, v1) + d.get(u, v3) != d.get(u, v2) + d.get(u, v4) {
                return ClassReport::fail(
                    ClassKind::PositioningCondition,
                    Violation::SquarePosition { square, vertex: u },
                );
            }
        }
    }
    ClassReport::pass(ClassKind::PositioningCondition)
}

/// Candidate matroid basis graph: connected (given) plus the interval
/// and positioning conditions.
pub fn is_matroid_basis_graph_candidate(g: &Graph, d: &DistanceMatrix) -> ClassReport {
    let ic = satisfies_ic(g, d);
    if !ic.holds {
        return ic.relabel(ClassKind::MatroidBasisCandidate);
    }
    satisfies_pc(g, d).relabel(ClassKind::MatroidBasisCandidate)
}
