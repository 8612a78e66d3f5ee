//! Ground-truth Hamiltonicity oracle: exhaustive backtracking over
//! vertex permutations. Shares nothing with the rotation-based solver
//! except the graph type, so the two can check each other.

use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Largest vertex count the oracle accepts. Chosen so that even a fully
/// adversarial non-Hamiltonian instance exhausts its pruned permutation
/// tree in seconds.
pub const ORACLE_MAX_VERTICES: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices; the oracle accepts at most {ORACLE_MAX_VERTICES}")]
    TooLarge(usize),
}

/// Finds some Hamiltonian cycle by backtracking, or proves none exists.
///
/// Permutations are anchored at vertex 0 and direction symmetry is
/// broken by accepting only cycles whose second vertex has a smaller id
/// than their last, so each undirected cycle is visited once. Candidates
/// are tried in ascending order, making the returned cycle deterministic.
pub fn oracle_hamiltonian(g: &Graph) -> Result<Option<Vec<VertexId>>, OracleError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    if n < 3 {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    path.push(0);
    let mut visited = vec![false; n];
    visited[0] = true;
    if backtrack(g, &mut path, &mut visited) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn backtrack(g: &Graph, path: &mut Vec<VertexId>, visited: &mut [bool]) -> bool {
    let n = g.vertex_count();
    let last = *path.last().expect("path starts at vertex 0");
    if path.len() == n {
        return g.has_edge(last, 0) && path[1] < path[n - 1];
    }
    for w in g.neighbors(last) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        if backtrack(g, path, visited) {
            return true;
        }
        path.pop();
        visited[w] = false;
    }
    false
}
