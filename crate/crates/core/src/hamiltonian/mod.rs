//! Hamiltonian cycle construction for graphs with minimum degree at
//! least `floor(n/2)`.
//!
//! The solver first screens for the two graph families that are the only
//! non-Hamiltonian graphs under that degree bound (a cut vertex splitting
//! the graph into two cliques, or an independent set larger than `n/2`
//! joined to everything else). A graph passing both screens is processed
//! by repeated path growth: extend a path until maximal, close it to a
//! cycle through one of three chord-exchange rotations, and if the cycle
//! is not yet spanning, reopen it into a longer path using an edge that
//! leaves the cycle.

mod partition;
mod rotation;
mod solver;

pub use partition::{endpoint_partition, EndpointPartition, PartitionError};
pub use rotation::{make_cycle, make_type_a_cycle, make_type_b_cycle, make_type_c_cycle};
pub use solver::{extend_to_maximal_path, find_hamiltonian, precheck_exceptional, reopen_cycle};

use crate::graph::{Graph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("vertex {0} out of range")]
    OutOfRange(VertexId),
    #[error("vertex {0} repeated")]
    Repeated(VertexId),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NonAdjacent(VertexId, VertexId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {0} vertices; the solver requires at least 3")]
    GraphTooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no edge leaves the cycle")]
    NoBoundaryEdge,
}

/// Simple path, stored front to back. Consecutive vertices are adjacent
/// in the graph the path was built against, and no vertex repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    verts: Vec<VertexId>,
}

impl Path {
    /// Validates `verts` as a path of `g`.
    pub fn new(g: &Graph, verts: Vec<VertexId>) -> Result<Path, PathError> {
        if verts.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &verts {
            if v >= g.vertex_count() {
                return Err(PathError::OutOfRange(v));
            }
            if seen[v] {
                return Err(PathError::Repeated(v));
            }
            seen[v] = true;
        }
        for pair in verts.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(PathError::NonAdjacent(pair[0], pair[1]));
            }
        }
        Ok(Path { verts })
    }

    pub(crate) fn from_trusted(verts: Vec<VertexId>) -> Path {
        Path { verts }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.verts
    }

    /// True iff neither endpoint has a neighbor outside the path.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.vertex_count()];
        for &v in &self.verts {
            inside[v] = true;
        }
        let front = self.verts[0];
        let back = *self.verts.last().expect("paths are nonempty");
        g.smallest_neighbor_excluding(front, &inside).is_none()
            && g.smallest_neighbor_excluding(back, &inside).is_none()
    }
}

/// Simple cycle on at least three vertices, stored in traversal order;
/// the last vertex is adjacent to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    verts: Vec<VertexId>,
}

impl Cycle {
    pub(crate) fn from_trusted(verts: Vec<VertexId>) -> Cycle {
        debug_assert!(verts.len() >= 3);
        Cycle { verts }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.verts
    }
}

/// Machine-checkable witness attached to a NONE verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoneCertificate {
    /// Removing this vertex increases the number of components.
    CutVertex(VertexId),
    /// An independent set with more than n/2 vertices that forms a
    /// connected component of the complement.
    BigIndependentComponent(Vec<VertexId>),
    /// A maximal path on which all three rotations failed. Possible only
    /// when the input violates the minimum-degree bound.
    RotationExhausted(Path),
}

impl NoneCertificate {
    /// Re-derives the certificate's claim directly from `g`.
    ///
    /// The cut-vertex check uses the removal definition (component count
    /// increases), not the solver's low-link traversal, so a validated
    /// certificate does not depend on the code path that produced it.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        match self {
            NoneCertificate::CutVertex(v) => {
                *v < n && components_without(g, Some(*v)) > components_without(g, None)
            }
            NoneCertificate::BigIndependentComponent(set) => {
                if set.is_empty() || set.iter().any(|&v| v >= n) {
                    return false;
                }
                let mut sorted = set.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != set.len() || 2 * sorted.len() <= n {
                    return false;
                }
                let independent = sorted
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| sorted[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
                if !independent {
                    return false;
                }
                let comps = g.complement().connected_components();
                let label = comps.label(sorted[0]);
                comps.component(label) == sorted
            }
            NoneCertificate::RotationExhausted(p) => {
                Path::new(g, p.vertices().to_vec()).is_ok()
                    && p.is_maximal(g)
                    && make_type_a_cycle(g, p).is_none()
                    && make_type_b_cycle(g, p).is_none()
                    && make_type_c_cycle(g, p).is_none()
            }
        }
    }
}

/// Component count of `g` with `skip` (if any) deleted. Independent of
/// [`Graph::connected_components`]; used for certificate validation.
fn components_without(g: &Graph, skip: Option<VertexId>) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if let Some(s) = skip {
        seen[s] = true;
    }
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Result of a solve: a spanning cycle, or NONE with a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Hamiltonian(Cycle),
    None(NoneCertificate),
}

/// First reason a vertex sequence fails to be a Hamiltonian cycle of the
/// graph, in the order the conditions are checked.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleViolation {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("repeated vertex {0}")]
    RepeatedVertex(VertexId),
    #[error("missing vertex {0}")]
    MissingVertex(VertexId),
    #[error("cycle too short ({0} vertices)")]
    TooShort(usize),
    #[error("non-adjacent pair {0} {1}")]
    NonAdjacentPair(VertexId, VertexId),
}

/// Explains why `cycle` is not a Hamiltonian cycle of `g`, or `Ok(())`
/// if it is one. Checks run in a fixed order so the reported violation
/// is deterministic.
pub fn check_cycle(g: &Graph, cycle: &[VertexId]) -> Result<(), CycleViolation> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n {
            return Err(CycleViolation::VertexOutOfRange { vertex: v, n });
        }
        if seen[v] {
            return Err(CycleViolation::RepeatedVertex(v));
        }
        seen[v] = true;
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(CycleViolation::MissingVertex(missing));
    }
    // All n vertices present exactly once; only tiny graphs can still fail.
    if cycle.len() < 3 {
        return Err(CycleViolation::TooShort(cycle.len()));
    }
    for pair in cycle.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(CycleViolation::NonAdjacentPair(pair[0], pair[1]));
        }
    }
    let (first, last) = (cycle[0], cycle[cycle.len() - 1]);
    if !g.has_edge(last, first) {
        return Err(CycleViolation::NonAdjacentPair(last, first));
    }
    Ok(())
}

/// True iff `cycle` visits every vertex of `g` exactly once and every
/// consecutive pair, including last to first, is an edge.
pub fn verify_cycle(g: &Graph, cycle: &[VertexId]) -> bool {
    check_cycle(g, cycle).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle5() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn verify_accepts_cycle_order() {
        assert!(verify_cycle(&cycle5(), &[0, 1, 2, 3, 4]));
        assert!(verify_cycle(&cycle5(), &[2, 3, 4, 0, 1]));
    }

    #[test]
    fn verify_rejects_swapped_order() {
        assert_eq!(
            check_cycle(&cycle5(), &[0, 2, 1, 3, 4]),
            Err(CycleViolation::NonAdjacentPair(0, 2))
        );
    }

    #[test]
    fn verify_reports_missing_vertex() {
        assert_eq!(
            check_cycle(&Graph::complete(4), &[0, 1, 2]),
            Err(CycleViolation::MissingVertex(3))
        );
    }

    #[test]
    fn verify_reports_repeats_and_range() {
        assert_eq!(
            check_cycle(&Graph::complete(4), &[0, 1, 1, 2]),
            Err(CycleViolation::RepeatedVertex(1))
        );
        assert_eq!(
            check_cycle(&Graph::complete(4), &[0, 1, 2, 9]),
            Err(CycleViolation::VertexOutOfRange { vertex: 9, n: 4 })
        );
    }

    #[test]
    fn path_validation() {
        let g = cycle5();
        assert!(Path::new(&g, vec![3, 4, 0, 1]).is_ok());
        assert_eq!(Path::new(&g, vec![]), Err(PathError::Empty));
        assert_eq!(Path::new(&g, vec![0, 2]), Err(PathError::NonAdjacent(0, 2)));
        assert_eq!(Path::new(&g, vec![0, 1, 0]), Err(PathError::Repeated(0)));
    }

    #[test]
    fn maximality() {
        let g = cycle5();
        assert!(Path::new(&g, vec![3, 4, 0, 1, 2]).unwrap().is_maximal(&g));
        assert!(!Path::new(&g, vec![0, 1, 2]).unwrap().is_maximal(&g));
    }

    #[test]
    fn cut_vertex_certificate_validates() {
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(NoneCertificate::CutVertex(2).validate(&bowtie));
        assert!(!NoneCertificate::CutVertex(0).validate(&bowtie));
        assert!(!NoneCertificate::CutVertex(9).validate(&bowtie));
    }

    #[test]
    fn independent_component_certificate_validates() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(NoneCertificate::BigIndependentComponent(vec![2, 3, 4]).validate(&k23));
        // Too small, not a complement component, not independent.
        assert!(!NoneCertificate::BigIndependentComponent(vec![2, 3]).validate(&k23));
        assert!(!NoneCertificate::BigIndependentComponent(vec![0, 1, 2]).validate(&k23));
    }
}
