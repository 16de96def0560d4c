//! Matroids given by explicit basis lists, and their basis graphs.
//!
//! Ground sets are capped at 16 elements so bases fit in a bitmask, and
//! basis lists are capped at 4096. Construction validates the basis
//! exchange property and reports the first violating triple in
//! lexicographic order, so every `Matroid` value is a genuine matroid.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ELEMENTS: usize = 16;
pub const MAX_BASES: usize = 4096;

/// Ordered pair of bases and an element of `from \ to` that no element
/// of `to \ from` can replace while staying a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub element: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set of {n} elements exceeds the limit of {MAX_ELEMENTS}")]
    TooManyElements { n: usize },
    #[error("element {element} out of range for ground set of {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("bases must share one cardinality (saw {expected} and {got})")]
    RankMismatch { expected: usize, got: usize },
    #[error("duplicate basis")]
    DuplicateBasis,
    #[error("{count} bases exceed the limit of {MAX_BASES}")]
    TooManyBases { count: usize },
    #[error("rank must satisfy 1 <= rank <= {n}, got {rank}")]
    InvalidRank { rank: usize, n: usize },
    #[error("exchange property fails: from {from:?} to {to:?} cannot move element {element}")]
    ExchangeViolation {
        from: Vec<usize>,
        to: Vec<usize>,
        element: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground_size: usize,
    rank: usize,
    /// Basis bitmasks sorted lexicographically by ascending element list.
    bases: Vec<u32>,
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// First exchange-property violation over normalized basis masks, or
/// None when the property holds. Scan order: `from` then `to` in the
/// given order, then the candidate element ascending.
fn exchange_witness_masks(bases: &[u32]) -> Option<ExchangeWitness> {
    let members: HashSet<u32> = bases.iter().copied().collect();
    for &a in bases {
        for &b in bases {
            if a == b {
                continue;
            }
            let only_a = a & !b;
            let only_b = b & !a;
            for i in 0..MAX_ELEMENTS as u32 {
                if only_a >> i & 1 == 0 {
                    continue;
                }
                let stripped = a & !(1 << i);
                let ok = (0..MAX_ELEMENTS as u32)
                    .any(|j| only_b >> j & 1 == 1 && members.contains(&(stripped | 1 << j)));
                if !ok {
                    return Some(ExchangeWitness {
                        from: mask_to_vec(a),
                        to: mask_to_vec(b),
                        element: i as usize,
                    });
                }
            }
        }
    }
    None
}

/// Checks the exchange property on a raw list of equal-size sets without
/// building a `Matroid`. Sets are normalized (sorted, then the list
/// sorted lexicographically) before the scan.
pub fn exchange_property_witness(bases: &[Vec<usize>]) -> Option<ExchangeWitness> {
    let mut masks: Vec<u32> = bases
        .iter()
        .map(|b| {
            b.iter().fold(0u32, |m, &e| {
                assert!(e < MAX_ELEMENTS, "element {e} outside ground-set cap");
                m | 1 << e
            })
        })
        .collect();
    masks.sort_by_key(|&m| mask_to_vec(m));
    exchange_witness_masks(&masks)
}

impl Matroid {
    /// Builds a matroid from explicit bases, validating ranges, rank
    /// agreement, distinctness, the size caps, and the exchange
    /// property.
    pub fn from_bases(
        ground_size: usize,
        bases: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, MatroidError> {
        if ground_size > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements { n: ground_size });
        }
        let mut masks = Vec::new();
        let mut rank = None;
        for basis in bases {
            for &e in &basis {
                if e >= ground_size {
                    return Err(MatroidError::ElementOutOfRange { element: e, n: ground_size });
                }
            }
            let mask = basis.iter().fold(0u32, |m, &e| m | 1 << e);
            let size = mask.count_ones() as usize;
            if size != basis.len() {
                // Repeated element inside one basis collapses the mask.
                return Err(MatroidError::DuplicateBasis);
            }
            match rank {
                None => rank = Some(size),
                Some(r) if r != size => {
                    return Err(MatroidError::RankMismatch { expected: r, got: size })
                }
                _ => {}
            }
            masks.push(mask);
        }
        let Some(rank) = rank else {
            return Err(MatroidError::NoBases);
        };
        if rank == 0 {
            return Err(MatroidError::InvalidRank { rank: 0, n: ground_size });
        }
        if masks.len() > MAX_BASES {
            return Err(MatroidError::TooManyBases { count: masks.len() });
        }
        masks.sort_by_key(|&m| mask_to_vec(m));
        if masks.windows(2).any(|w| w[0] == w[1]) {
            return Err(MatroidError::DuplicateBasis);
        }
        if let Some(w) = exchange_witness_masks(&masks) {
            return Err(MatroidError::ExchangeViolation {
                from: w.from,
                to: w.to,
                element: w.element,
            });
        }
        Ok(Matroid { ground_size, rank, bases: masks })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    /// Bases as sorted element lists, in the canonical lexicographic
    /// order that numbers basis-graph vertices.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&m| mask_to_vec(m)).collect()
    }

    /// Basis graph: one vertex per basis in canonical order, edges
    /// between bases differing by a single exchange. Always connected
    /// for a validated matroid; the check is kept as a guard.
    pub fn basis_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (i, &a) in self.bases.iter().enumerate() {
            for (j, &b) in self.bases.iter().enumerate().skip(i + 1) {
                if (a ^ b).count_ones() == 2 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(self.bases.len(), edges).expect("basis indices are valid vertices");
        assert!(g.is_connected(), "exchange-validated matroid has connected basis graph");
        g
    }
}

/// Uniform matroid: every `rank`-subset of `0..n` is a basis. Rank must
/// be between 1 and n.
pub fn uniform_matroid(rank: usize, n: usize) -> Result<Matroid, MatroidError> {
    if n > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements { n });
    }
    if rank < 1 || rank > n {
        return Err(MatroidError::InvalidRank { rank, n });
    }
    let bases: Vec<Vec<usize>> = (0..n).combinations(rank).collect();
    if bases.len() > MAX_BASES {
        return Err(MatroidError::TooManyBases { count: bases.len() });
    }
    Matroid::from_bases(n, bases)
}

/// Graphic matroid of a connected graph: elements are the edges in
/// their sorted order, bases are the spanning trees.
pub fn graphic_matroid(g: &Graph) -> Result<Matroid, MatroidError> {
    let m = g.edge_count();
    if m > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements { n: m });
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let bases: Vec<Vec<usize>> = (0..m)
        .combinations(n - 1)
        .filter(|subset| spans(n, subset.iter().map(|&i| edges[i])))
        .collect();
    Matroid::from_bases(m, bases)
}

/// True when the edges connect all `n` vertices; with `n - 1` edges this
/// is exactly the spanning-tree test.
fn spans(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}
