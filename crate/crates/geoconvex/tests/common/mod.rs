//! Shared fixtures for the integration suites: the named corpus,
//! exhaustive small-graph generation deduplicated up to isomorphism,
//! seeded random graphs, and subset-scan separation oracles.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geoconvex::generate;
use geoconvex::graph::{all_pairs_distances, DistanceMatrix, Graph};
use geoconvex::matroid::{graphic_matroid, uniform_matroid};
use geoconvex::vertex_set::VertexSet;

pub fn dist(g: &Graph) -> DistanceMatrix {
    all_pairs_distances(g).expect("fixture graphs are connected")
}

pub fn set(universe: usize, members: &[usize]) -> VertexSet {
    VertexSet::from_members(universe, members.iter().copied())
}

/// Simplicial growth: start from one vertex; each new vertex's
/// neighborhood must be a clique at the time of insertion, which keeps
/// the graph chordal at every step.
fn grow_simplicial(steps: &[&[usize]]) -> Graph {
    let n = steps.len() + 1;
    let mut edges = Vec::new();
    for (i, nbrs) in steps.iter().enumerate() {
        let v = i + 1;
        for (k, &u) in nbrs.iter().enumerate() {
            assert!(u < v, "neighbors must already exist");
            for &w in &nbrs[..k] {
                assert!(
                    edges.contains(&(w.min(u), w.max(u))),
                    "growth neighborhood {{{u},{w}}} is not a clique"
                );
            }
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Fan-like strip of triangles.
pub fn chordal_a() -> Graph {
    grow_simplicial(&[&[0], &[0, 1], &[1, 2], &[2, 3], &[3, 4]])
}

/// Thickened strip with a pendant vertex.
pub fn chordal_b() -> Graph {
    grow_simplicial(&[&[0], &[0, 1], &[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[0]])
}

/// Two triangles hanging off a path.
pub fn chordal_c() -> Graph {
    grow_simplicial(&[&[0], &[1], &[1, 2], &[0, 1], &[4]])
}

pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Graph,
}

/// The curated test corpus.
pub fn corpus() -> Vec<NamedGraph> {
    let bg = |m: geoconvex::matroid::Matroid| m.basis_graph();
    vec![
        NamedGraph { name: "K3", graph: generate::complete(3) },
        NamedGraph { name: "K4", graph: generate::complete(4) },
        NamedGraph { name: "P3", graph: generate::path(3) },
        NamedGraph { name: "P4", graph: generate::path(4) },
        NamedGraph { name: "P5", graph: generate::path(5) },
        NamedGraph { name: "P6", graph: generate::path(6) },
        NamedGraph { name: "C4", graph: generate::cycle(4) },
        NamedGraph { name: "octahedron", graph: generate::octahedron() },
        NamedGraph { name: "Q3", graph: generate::hypercube(3) },
        NamedGraph { name: "bg-U24", graph: bg(uniform_matroid(2, 4).unwrap()) },
        NamedGraph { name: "bg-U25", graph: bg(uniform_matroid(2, 5).unwrap()) },
        NamedGraph {
            name: "bg-graphic-K4",
            graph: bg(graphic_matroid(&generate::complete(4)).unwrap()),
        },
        NamedGraph { name: "chordal-a", graph: chordal_a() },
        NamedGraph { name: "chordal-b", graph: chordal_b() },
        NamedGraph { name: "chordal-c", graph: chordal_c() },
    ]
}

fn pair_index_table(n: usize) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let mut pairs = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            index[i][j] = pairs.len();
            index[j][i] = pairs.len();
            pairs.push((i, j));
        }
    }
    (pairs, index)
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut reached = 1u64;
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        for (e, &(i, j)) in pairs.iter().enumerate() {
            if mask >> e & 1 == 0 {
                continue;
            }
            let other = if i == v {
                j
            } else if j == v {
                i
            } else {
                continue;
            };
            if reached >> other & 1 == 0 {
                reached |= 1 << other;
                frontier.push(other);
            }
        }
    }
    reached.count_ones() as usize == n
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Every connected graph on exactly `n` vertices, one representative per
/// isomorphism class (canonical form: minimum edge mask over all vertex
/// relabelings).
pub fn connected_graphs_exactly(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 7, "exhaustive generation is for small n");
    if n == 1 {
        return vec![Graph::new(1, []).unwrap()];
    }
    let (pairs, index) = pair_index_table(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        if (mask.count_ones() as usize) < n - 1 || !mask_connected(n, &pairs, mask) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut remapped = 0u64;
                for (e, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> e & 1 == 1 {
                        remapped |= 1 << index[p[i]][p[j]];
                    }
                }
                remapped
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(e, _)| canon >> e & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

pub fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(connected_graphs_exactly).collect()
}

/// Seeded random connected graphs: a random spanning tree plus random
/// extra edges.
pub fn random_connected_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let mut edges = HashSet::new();
        for v in 1..n {
            let parent = rng.gen_range(0..v);
            edges.insert((parent, v));
        }
        let p: f64 = rng.gen_range(0.1..0.6);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.insert((i, j));
                }
            }
        }
        out.push(Graph::new(n, edges).unwrap());
    }
    out
}

/// All nonempty subsets of at most `max` vertices.
pub fn small_subsets(n: usize, max: usize) -> Vec<VertexSet> {
    fn extend(
        n: usize,
        max: usize,
        from: usize,
        scratch: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        for v in from..n {
            scratch.push(v);
            out.push(VertexSet::from_members(n, scratch.iter().copied()));
            if scratch.len() < max {
                extend(n, max, v + 1, scratch, out);
            }
            scratch.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, max, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether some halfspace in `halfspaces` contains all of `a` and none
/// of `b`.
pub fn oracle_separable(halfspaces: &[VertexSet], a: &VertexSet, b: &VertexSet) -> bool {
    halfspaces.iter().any(|h| a.is_subset(h) && b.is_disjoint(h))
}

/// Number of halfspaces containing all of `a` and none of `b`.
pub fn separating_count(halfspaces: &[VertexSet], a: &VertexSet, b: &VertexSet) -> u64 {
    halfspaces.iter().filter(|h| a.is_subset(h) && b.is_disjoint(h)).count() as u64
}
