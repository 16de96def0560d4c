//! Closed-form graph families used by the CLI and the test corpus.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path needs at least one vertex");
    Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one vertex");
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// d-dimensional hypercube on 2^d vertices; vertices are bit patterns,
/// edges flip one bit.
pub fn hypercube(d: u32) -> Graph {
    assert!(d >= 1 && d <= 10, "hypercube dimension out of range");
    let n = 1usize << d;
    let edges = (0..n).flat_map(move |v| {
        (0..d).filter_map(move |bit| {
            let w = v ^ (1 << bit);
            (v < w).then_some((v, w))
        })
    });
    Graph::new(n, edges).unwrap()
}

/// K_{2,2,2}: six vertices, all edges except the antipodal pairs
/// (0,3), (1,4), (2,5).
pub fn octahedron() -> Graph {
    let antipodal = |u: usize, v: usize| v == u + 3 || u == v + 3;
    let edges = (0..6).flat_map(|u| {
        (u + 1..6).filter_map(move |v| (!antipodal(u, v)).then_some((u, v)))
    });
    Graph::new(6, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(4).edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(complete(4).edge_count(), 6);
        let q3 = hypercube(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(q3.vertices().all(|v| q3.degree(v) == 3));
        let oct = octahedron();
        assert_eq!(oct.edge_count(), 12);
        assert!(oct.vertices().all(|v| oct.degree(v) == 4));
        assert!(!oct.has_edge(0, 3));
        assert!(!oct.has_edge(1, 4));
        assert!(!oct.has_edge(2, 5));
    }
}
