//! Classification of the interior vertices of a maximal path by their
//! adjacency to the path's endpoints. Diagnostic companion to the
//! rotations: when all three fail, the interior must avoid certain
//! consecutive patterns of these classes, which is what forces the
//! exceptional structure.

use thiserror::Error;

use super::Path;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("path is not maximal")]
    NotMaximal,
    #[error("path endpoints are adjacent")]
    AdjacentEndpoints,
    #[error("path has fewer than two vertices")]
    TooShort,
}

/// The four-way split of a maximal path's interior. Sets are sorted
/// ascending, pairwise disjoint, and together cover exactly the interior
/// vertices `x_1 ... x_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointPartition {
    /// Adjacent to the start `x_0` but not the end `x_k`.
    pub start_only: Vec<VertexId>,
    /// Adjacent to the end but not the start.
    pub end_only: Vec<VertexId>,
    /// Adjacent to both endpoints.
    pub both: Vec<VertexId>,
    /// Adjacent to neither endpoint.
    pub neither: Vec<VertexId>,
}

/// Splits the interior of a maximal path with non-adjacent endpoints by
/// endpoint adjacency. Since the path is maximal, every neighbor of an
/// endpoint is interior, so the four sets partition `x_1 ... x_{k-1}`.
pub fn endpoint_partition(g: &Graph, path: &Path) -> Result<EndpointPartition, PartitionError> {
    let x = path.vertices();
    if x.len() < 2 {
        return Err(PartitionError::TooShort);
    }
    let (start, end) = (x[0], x[x.len() - 1]);
    if g.has_edge(start, end) {
        return Err(PartitionError::AdjacentEndpoints);
    }
    if !path.is_maximal(g) {
        return Err(PartitionError::NotMaximal);
    }
    let mut partition = EndpointPartition {
        start_only: Vec::new(),
        end_only: Vec::new(),
        both: Vec::new(),
        neither: Vec::new(),
    };
    let mut interior = x[1..x.len() - 1].to_vec();
    interior.sort_unstable();
    for v in interior {
        match (g.has_edge(start, v), g.has_edge(end, v)) {
            (true, false) => partition.start_only.push(v),
            (false, true) => partition.end_only.push(v),
            (true, true) => partition.both.push(v),
            (false, false) => partition.neither.push(v),
        }
    }
    Ok(partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn bowtie_partition() {
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let p = Path::new(&bowtie, vec![0, 1, 2, 3, 4]).unwrap();
        let part = endpoint_partition(&bowtie, &p).unwrap();
        assert_eq!(part.start_only, vec![1]);
        assert_eq!(part.end_only, vec![3]);
        assert_eq!(part.both, vec![2]);
        assert_eq!(part.neither, Vec::<usize>::new());
    }

    #[test]
    fn k23_partition() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let p = Path::new(&k23, vec![2, 0, 3, 1, 4]).unwrap();
        let part = endpoint_partition(&k23, &p).unwrap();
        assert_eq!(part.start_only, Vec::<usize>::new());
        assert_eq!(part.end_only, Vec::<usize>::new());
        assert_eq!(part.both, vec![0, 1]);
        assert_eq!(part.neither, vec![3]);
    }

    #[test]
    fn rejects_adjacent_endpoints() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = Path::new(&c4, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            endpoint_partition(&c4, &p),
            Err(PartitionError::AdjacentEndpoints)
        );
    }

    #[test]
    fn rejects_non_maximal() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let p = Path::new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(endpoint_partition(&g, &p), Err(PartitionError::NotMaximal));
    }
}
