//! Halfspace enumeration.
//!
//! The flashlight search walks vertices in index order, maintaining the
//! set already placed inside and outside the halfspace under
//! construction, and descends only into branches the separation oracle
//! certifies extendable. On graphs where the oracle is conclusive this
//! emits every halfspace with at most 2(n+1)·|output| oracle calls.

use thiserror::Error;

use crate::convexity::is_halfspace;
use crate::graph::{DistanceMatrix, Graph};
use crate::separation::{halfspace_separation, Answer};
use crate::vertex_set::VertexSet;

pub const MAX_BRUTEFORCE_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("graph has {n} vertices; exhaustive subset scan supports at most {max}")]
    TooLarge { n: usize, max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRun {
    /// Halfspaces in canonical order: cardinality, then members.
    pub halfspaces: Vec<VertexSet>,
    /// Separation queries issued.
    pub extension_calls: usize,
    /// False when some branch was pruned on an inconclusive answer; the
    /// list may then be incomplete.
    pub complete: bool,
}

fn descend(
    g: &Graph,
    d: &DistanceMatrix,
    next: usize,
    inside: &VertexSet,
    outside: &VertexSet,
    run: &mut EnumerationRun,
) {
    if next == g.vertex_count() {
        run.halfspaces.push(inside.clone());
        return;
    }
    for take in [true, false] {
        let (a, b) = if take {
            (inside.with(next), outside.clone())
        } else {
            (inside.clone(), outside.with(next))
        };
        run.extension_calls += 1;
        let extendable = halfspace_separation(g, d, &a, &b)
            .expect("inside and outside never intersect");
        match extendable.answer {
            Answer::Yes => descend(g, d, next + 1, &a, &b, run),
            Answer::No => {}
            Answer::Unknown => run.complete = false,
        }
    }
}

pub fn enumerate_flashlight(g: &Graph, d: &DistanceMatrix) -> EnumerationRun {
    let n = g.vertex_count();
    let mut run = EnumerationRun {
        halfspaces: Vec::new(),
        extension_calls: 0,
        complete: true,
    };
    descend(g, d, 0, &VertexSet::empty(n), &VertexSet::empty(n), &mut run);
    run.halfspaces.sort();
    run.halfspaces.dedup();
    run
}

/// Checks every subset directly. Ground truth for small graphs.
pub fn enumerate_bruteforce(
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<Vec<VertexSet>, EnumerationError> {
    let n = g.vertex_count();
    if n > MAX_BRUTEFORCE_VERTICES {
        return Err(EnumerationError::TooLarge { n, max: MAX_BRUTEFORCE_VERTICES });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let s = VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if is_halfspace(d, &s) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}
