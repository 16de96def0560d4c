//! Geodesic convexity: a set is convex when it contains the interval
//! between each pair of its members, and the hull of a set is the least
//! convex superset.

use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

/// Least convex superset, computed as the fixpoint of pairwise interval
/// closure. Each newly added vertex is paired against the current set
/// until nothing changes. hull of the empty set is empty.
pub fn hull(d: &DistanceMatrix, s: &VertexSet) -> VertexSet {
    let n = d.vertex_count();
    let mut closed = s.clone();
    let mut frontier: Vec<usize> = closed.to_vec();
    while let Some(x) = frontier.pop() {
        let members: Vec<usize> = closed.to_vec();
        for y in members {
            let dxy = d.get(x, y);
            for v in 0..n {
                if !closed.contains(v) && d.get(x, v) + d.get(v, y) == dxy {
                    closed.insert(v);
                    frontier.push(v);
                }
            }
        }
    }
    closed
}

pub fn is_convex(d: &DistanceMatrix, s: &VertexSet) -> bool {
    let n = d.vertex_count();
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i..] {
            let duv = d.get(u, v);
            for x in 0..n {
                if !s.contains(x) && d.get(u, x) + d.get(x, v) == duv {
                    return false;
                }
            }
        }
    }
    true
}

/// Connected induced subgraph whose distance-2 pairs keep their
/// intervals inside the set. Weaker than convexity in general; on meshed
/// graphs the two notions agree for connected-inducing sets.
pub fn is_locally_convex(g: &Graph, d: &DistanceMatrix, s: &VertexSet) -> bool {
    if !g.induces_connected(s) {
        return false;
    }
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if d.get(u, v) == 2 && !d.interval(u, v).is_subset(s) {
                return false;
            }
        }
    }
    true
}

/// Convex set with convex complement.
pub fn is_halfspace(d: &DistanceMatrix, s: &VertexSet) -> bool {
    is_convex(d, s) && is_convex(d, &s.complement())
}
