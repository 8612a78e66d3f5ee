//! Instance sources for testing and benchmarking: the two exceptional
//! families, seeded random graphs meeting the degree bound, and
//! exhaustive enumeration of small labeled graphs.
//!
//! All randomness flows through ChaCha8 seeded with `seed_from_u64`, a
//! fixed published generator, so every instance is reproducible from its
//! parameters alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Enumeration is capped here: 2^21 graphs at n = 7 is the largest sweep
/// that stays comfortable on desk hardware.
pub const ENUMERATE_MAX_VERTICES: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("clique parameter r must be at least 1")]
    BadCliqueParameter,
    #[error("random instances need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("enumeration supports at most {ENUMERATE_MAX_VERTICES} vertices, got {0}")]
    EnumerationTooLarge(usize),
}

/// Parameters of one generated instance; the display form is stable and
/// filename-safe, for stamping provenance on corpus files.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    ExceptionalA {
        r: usize,
    },
    ExceptionalB {
        r: usize,
        inner_edge_prob: f64,
        seed: u64,
    },
    RandomMinDeg {
        n: usize,
        seed: u64,
    },
    Enumerate {
        n: usize,
    },
}

impl std::fmt::Display for GenSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenSpec::ExceptionalA { r } => write!(f, "family-a-r{r}"),
            GenSpec::ExceptionalB {
                r,
                inner_edge_prob,
                seed,
            } => {
                write!(f, "family-b-r{r}-p{inner_edge_prob}-seed{seed}")
            }
            GenSpec::RandomMinDeg { n, seed } => write!(f, "random-n{n}-seed{seed}"),
            GenSpec::Enumerate { n } => write!(f, "enumerate-n{n}"),
        }
    }
}

fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two cliques on `r + 1` vertices sharing exactly vertex `r`: the
/// cut-vertex family. `n = 2r + 1`, minimum degree exactly `r`.
pub fn gen_exceptional_a(r: usize) -> Result<Graph, GenError> {
    if r < 1 {
        return Err(GenError::BadCliqueParameter);
    }
    let n = 2 * r + 1;
    let low = (0..=r).flat_map(|u| (u + 1..=r).map(move |v| (u, v)));
    let high = (r..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, low.chain(high)).expect("generated pairs are in range"))
}

/// Independent set `{0..=r}` joined to an arbitrary seeded graph on the
/// remaining `r` vertices: the oversized-independent-set family.
/// `n = 2r + 1`; the independent side pins the minimum degree at `r`.
pub fn gen_exceptional_b(r: usize, inner_edge_prob: f64, seed: u64) -> Result<Graph, GenError> {
    if r < 1 {
        return Err(GenError::BadCliqueParameter);
    }
    let n = 2 * r + 1;
    let mut rng = seeded_rng(seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for u in 0..=r {
        for v in r + 1..n {
            edges.push((u, v));
        }
    }
    for u in r + 1..n {
        for v in u + 1..n {
            if rng.gen_bool(inner_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("generated pairs are in range"))
}

/// Seeded random graph with minimum degree at least `floor(n/2)`: an
/// Erdos-Renyi draw at edge probability 0.6, then repair passes that
/// connect the lowest deficient vertex to a uniformly chosen
/// non-neighbor until the bound holds.
pub fn gen_random_min_degree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall(n));
    }
    let floor = n / 2;
    let mut rng = seeded_rng(seed);
    let mut adj = vec![vec![false; n]; n];
    let mut degree = vec![0usize; n];
    let add = |adj: &mut Vec<Vec<bool>>, degree: &mut Vec<usize>, u: usize, v: usize| {
        adj[u][v] = true;
        adj[v][u] = true;
        degree[u] += 1;
        degree[v] += 1;
    };
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.6) {
                add(&mut adj, &mut degree, u, v);
            }
        }
    }
    while let Some(v) = (0..n).find(|&v| degree[v] < floor) {
        let non_neighbors: Vec<usize> = (0..n).filter(|&w| w != v && !adj[v][w]).collect();
        let w = non_neighbors[rng.gen_range(0..non_neighbors.len())];
        add(&mut adj, &mut degree, v, w);
    }
    let edges = (0..n).flat_map(|u| {
        let row = &adj[u];
        (u + 1..n).filter(move |&v| row[v]).map(move |v| (u, v))
    });
    Ok(Graph::new(n, edges).expect("generated pairs are in range"))
}

/// Number of labeled simple graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Graph whose edge set is the `mask`-indexed subset of the vertex pairs
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...` in lexicographic order.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs
        .enumerate()
        .filter(|&(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("generated pairs are in range")
}

/// Per-vertex bit masks over the lexicographic pair order, such that
/// `(mask & incidence[v]).count_ones()` is the degree of `v`. Lets
/// enumeration filters run without materializing graphs.
pub fn pair_incidence_masks(n: usize) -> Vec<u64> {
    let mut masks = vec![0u64; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            masks[u] |= 1 << bit;
            masks[v] |= 1 << bit;
            bit += 1;
        }
    }
    masks
}

/// Streams every labeled simple graph on `n` vertices exactly once,
/// optionally skipping those below a minimum-degree threshold.
pub fn enumerate_labeled_graphs(
    n: usize,
    min_degree: Option<usize>,
) -> Result<LabeledGraphs, GenError> {
    if n > ENUMERATE_MAX_VERTICES {
        return Err(GenError::EnumerationTooLarge(n));
    }
    Ok(LabeledGraphs {
        n,
        next_mask: 0,
        end: labeled_graph_count(n),
        min_degree,
        incidence: pair_incidence_masks(n),
    })
}

pub struct LabeledGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
    min_degree: Option<usize>,
    incidence: Vec<u64>,
}

impl LabeledGraphs {
    fn mask_passes(&self, mask: u64) -> bool {
        match self.min_degree {
            None => true,
            Some(bound) => self
                .incidence
                .iter()
                .all(|&inc| (mask & inc).count_ones() as usize >= bound),
        }
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.mask_passes(mask) {
                return Some(graph_from_edge_mask(self.n, mask));
            }
        }
        None
    }
}
