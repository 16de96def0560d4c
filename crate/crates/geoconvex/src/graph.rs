//! Finite simple graphs with precomputed hop distances.
//!
//! All analysis in this crate works on connected graphs. `Graph::new`
//! validates simplicity; connectivity is established the moment
//! `all_pairs_distances` succeeds, and every downstream operation takes
//! the resulting [`DistanceMatrix`] so distances are computed exactly
//! once per graph.

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("set must be nonempty")]
    EmptySet,
    #[error("induced cycle length {len} not supported (only 4 and 5)")]
    UnsupportedCycleLength { len: usize },
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple undirected graph. Edges are normalized to
    /// `(min, max)` and stored sorted; adjacency lists are sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push(w);
                }
            }
        }
        count == self.n
    }

    /// True when the subgraph induced by `s` is connected. The empty set
    /// and singletons count as connected.
    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else { return true };
        let mut seen = VertexSet::singleton(self.n, start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &w in &self.adj[v] {
                if s.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    queue.push(w);
                }
            }
        }
        seen.len() == s.len()
    }

    /// True when every two distinct vertices of `s` are adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Hop distances between all vertex pairs, row-major.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

/// BFS from every vertex. Rejects disconnected input: a pair left
/// unreached means there is no distance to report.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.vertex_count();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for &w in g.neighbors(v) {
                if row[w] == u32::MAX {
                    row[w] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.iter().any(|&x| x == u32::MAX) {
            return Err(GraphError::NotConnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    /// Geodesic interval: vertices on at least one shortest u-v path.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let duv = self.get(u, v);
        let mut s = VertexSet::empty(self.n);
        for x in 0..self.n {
            if self.get(u, x) + self.get(x, v) == duv {
                s.insert(x);
            }
        }
        s
    }

    pub fn ball(&self, v: usize, radius: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for x in 0..self.n {
            if self.get(v, x) <= radius {
                s.insert(x);
            }
        }
        s
    }

    pub fn sphere(&self, v: usize, radius: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for x in 0..self.n {
            if self.get(v, x) == radius {
                s.insert(x);
            }
        }
        s
    }

    /// Vertices within distance `radius` of some member of `xs`.
    pub fn ball_of_set(&self, xs: &VertexSet, radius: usize) -> Result<VertexSet, GraphError> {
        if xs.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut s = VertexSet::empty(self.n);
        for x in 0..self.n {
            if xs.iter().any(|v| self.get(v, x) <= radius) {
                s.insert(x);
            }
        }
        Ok(s)
    }

    pub fn set_distance(&self, a: &VertexSet, b: &VertexSet) -> Option<usize> {
        let mut best = None;
        for u in a.iter() {
            for v in b.iter() {
                let d = self.get(u, v);
                if best.map_or(true, |m| d < m) {
                    best = Some(d);
                }
            }
        }
        best
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        (0..self.n).map(|x| self.get(v, x)).max().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }
}

/// Lexicographically smallest shortest path from `a` to `b` under vertex
/// order: smallest qualifying start, then smallest next vertex at each
/// step. If the sets intersect, the path is the single smallest shared
/// vertex.
pub fn shortest_connecting_path(
    g: &Graph,
    d: &DistanceMatrix,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Vec<usize>, GraphError> {
    if a.is_empty() || b.is_empty() {
        return Err(GraphError::EmptySet);
    }
    if a.intersects(b) {
        let shared = a.intersection(b).first().unwrap();
        return Ok(vec![shared]);
    }
    let to_b = |x: usize| b.iter().map(|v| d.get(x, v)).min().unwrap();
    let total = a.iter().map(to_b).min().unwrap();
    let start = a.iter().find(|&x| to_b(x) == total).unwrap();
    let mut path = vec![start];
    let mut cur = start;
    let mut remaining = total;
    while remaining > 0 {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| to_b(w) == remaining - 1)
            .expect("some neighbor advances toward the target set");
        path.push(next);
        cur = next;
        remaining -= 1;
    }
    Ok(path)
}

/// Vertex-induced subgraph returned as a fragment: `vertices[i]` is the
/// original id of new vertex `i`. Unlike `Graph`, a fragment may be
/// disconnected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl InducedSubgraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }
}

pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
    if s.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let vertices = s.to_vec();
    let index_of = |v: usize| vertices.binary_search(&v).unwrap();
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        if s.contains(u) && s.contains(v) {
            edges.push((index_of(u), index_of(v)));
        }
    }
    Ok(InducedSubgraph { vertices, edges })
}

/// First induced cycle of the given length in lexicographic subset
/// order, or None. Only lengths 4 and 5 are supported; an induced cycle
/// is a 2-regular induced subgraph on `len` vertices.
pub fn find_induced_cycle(g: &Graph, len: usize) -> Result<Option<Vec<usize>>, GraphError> {
    if len != 4 && len != 5 {
        return Err(GraphError::UnsupportedCycleLength { len });
    }
    use itertools::Itertools;
    for subset in g.vertices().combinations(len) {
        let degrees_ok = subset.iter().all(|&v| {
            subset.iter().filter(|&&w| w != v && g.has_edge(v, w)).count() == 2
        });
        if degrees_ok {
            return Ok(Some(subset));
        }
    }
    Ok(None)
}

pub fn has_induced_cycle(g: &Graph, len: usize) -> Result<bool, GraphError> {
    Ok(find_induced_cycle(g, len)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn path3() -> (Graph, DistanceMatrix) {
        let g = generate::path(3);
        let d = all_pairs_distances(&g).unwrap();
        (g, d)
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(Graph::new(0, []).unwrap_err(), GraphError::Empty);
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop { v: 0 })));
        assert!(matches!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        ));
    }

    #[test]
    fn distances_on_small_fixtures() {
        let (_, d) = path3();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(2, 0), 2);
        assert_eq!(d.get(1, 1), 0);

        let k3 = generate::complete(3);
        let dk = all_pairs_distances(&k3).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(dk.get(u, v), usize::from(u != v));
            }
        }

        let oct = generate::octahedron();
        let doct = all_pairs_distances(&oct).unwrap();
        assert_eq!(doct.get(0, 3), 2);
        assert_eq!(doct.get(0, 1), 1);
        assert_eq!(doct.get(1, 4), 2);
        assert_eq!(doct.get(2, 5), 2);
    }

    #[test]
    fn disconnected_input_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(all_pairs_distances(&g).unwrap_err(), GraphError::NotConnected);
    }

    #[test]
    fn intervals() {
        let c4 = generate::cycle(4);
        let d = all_pairs_distances(&c4).unwrap();
        assert_eq!(d.interval(0, 2).to_vec(), vec![0, 1, 2, 3]);

        let (_, dp) = path3();
        assert_eq!(dp.interval(0, 2).to_vec(), vec![0, 1, 2]);
        assert_eq!(dp.interval(1, 1).to_vec(), vec![1]);
    }

    #[test]
    fn balls_and_spheres() {
        let c4 = generate::cycle(4);
        let d = all_pairs_distances(&c4).unwrap();
        assert_eq!(d.ball(0, 1).to_vec(), vec![0, 1, 3]);

        let oct = generate::octahedron();
        let doct = all_pairs_distances(&oct).unwrap();
        assert_eq!(doct.ball(0, 1).to_vec(), vec![0, 1, 2, 4, 5]);
        assert_eq!(doct.sphere(0, 2).to_vec(), vec![3]);
        assert_eq!(doct.sphere(0, 0).to_vec(), vec![0]);
    }

    #[test]
    fn ball_of_set_on_path() {
        let p5 = generate::path(5);
        let d = all_pairs_distances(&p5).unwrap();
        let xs = VertexSet::from_members(5, [0, 4]);
        assert_eq!(d.ball_of_set(&xs, 1).unwrap().to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(
            d.ball_of_set(&VertexSet::empty(5), 1),
            Err(GraphError::EmptySet)
        );
    }

    #[test]
    fn lexicographic_shortest_path() {
        let c4 = generate::cycle(4);
        let d = all_pairs_distances(&c4).unwrap();
        let a = VertexSet::singleton(4, 0);
        let b = VertexSet::singleton(4, 2);
        assert_eq!(shortest_connecting_path(&c4, &d, &a, &b).unwrap(), vec![0, 1, 2]);

        let b2 = VertexSet::singleton(4, 1);
        assert_eq!(shortest_connecting_path(&c4, &d, &a, &b2).unwrap(), vec![0, 1]);

        let overlapping = VertexSet::from_members(4, [0, 2]);
        assert_eq!(
            shortest_connecting_path(&c4, &d, &overlapping, &a).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn induced_fragments() {
        let c4 = generate::cycle(4);
        let frag = induced_subgraph(&c4, &VertexSet::from_members(4, [0, 1, 2])).unwrap();
        assert_eq!(frag.vertices, vec![0, 1, 2]);
        assert_eq!(frag.edges, vec![(0, 1), (1, 2)]);

        let oct = generate::octahedron();
        let tri = induced_subgraph(&oct, &VertexSet::from_members(6, [0, 1, 2])).unwrap();
        assert_eq!(tri.edges.len(), 3);

        let disconnected = induced_subgraph(&c4, &VertexSet::from_members(4, [0, 2])).unwrap();
        assert!(disconnected.edges.is_empty());
    }

    #[test]
    fn induced_cycles() {
        let c4 = generate::cycle(4);
        assert_eq!(find_induced_cycle(&c4, 4).unwrap(), Some(vec![0, 1, 2, 3]));
        assert!(!has_induced_cycle(&c4, 5).unwrap());

        let k4 = generate::complete(4);
        assert!(!has_induced_cycle(&k4, 4).unwrap());

        let c5 = generate::cycle(5);
        assert!(has_induced_cycle(&c5, 5).unwrap());
        assert!(!has_induced_cycle(&c5, 4).unwrap());

        assert_eq!(
            find_induced_cycle(&c4, 3),
            Err(GraphError::UnsupportedCycleLength { len: 3 })
        );
    }

    #[test]
    fn cliques_and_connectivity() {
        let k4 = generate::complete(4);
        assert!(k4.is_clique(&VertexSet::from_members(4, [0, 1, 3])));
        let c4 = generate::cycle(4);
        assert!(!c4.is_clique(&VertexSet::from_members(4, [0, 1, 2])));
        assert!(c4.is_clique(&VertexSet::from_members(4, [2, 3])));
        assert!(c4.is_clique(&VertexSet::empty(4)));

        assert!(c4.induces_connected(&VertexSet::from_members(4, [0, 1, 2])));
        assert!(!c4.induces_connected(&VertexSet::from_members(4, [0, 2])));
        assert!(c4.induces_connected(&VertexSet::empty(4)));
    }
}
