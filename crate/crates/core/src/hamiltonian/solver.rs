//! Exceptional-family prechecks and the top-level solve loop.

use std::collections::VecDeque;

use super::rotation::make_cycle;
use super::{Cycle, NoneCertificate, Path, SolveError, SolveOutcome};
use crate::graph::{Graph, VertexId};

/// Screens for the two families that are non-Hamiltonian despite meeting
/// the degree bound: returns `CutVertex` if the graph has an articulation
/// point, otherwise `BigIndependentComponent` if the largest component of
/// the complement is a clique there (an independent set here) on more
/// than n/2 vertices. `None` means both screens passed.
///
/// The size test is strict: an independent set of exactly n/2 vertices
/// does not obstruct Hamiltonicity (the balanced complete bipartite graph
/// is Hamiltonian), so only strictly larger sets certify NONE.
pub fn precheck_exceptional(g: &Graph) -> Result<Option<NoneCertificate>, SolveError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(SolveError::GraphTooSmall(n));
    }
    if let Some(v) = g.find_cut_vertex() {
        return Ok(Some(NoneCertificate::CutVertex(v)));
    }
    let complement = g.complement();
    let biggest = complement.connected_components().largest_component();
    if 2 * biggest.len() > n && complement.is_clique(&biggest) {
        return Ok(Some(NoneCertificate::BigIndependentComponent(biggest)));
    }
    Ok(None)
}

/// Grows `path` until neither endpoint has a neighbor outside it. The
/// front endpoint is extended as long as possible before the back one,
/// always by the smallest eligible neighbor.
pub fn extend_to_maximal_path(g: &Graph, path: &Path) -> Path {
    let mut inside = vec![false; g.vertex_count()];
    for &v in path.vertices() {
        inside[v] = true;
    }
    let mut deque: VecDeque<VertexId> = path.vertices().iter().copied().collect();
    loop {
        let front = *deque.front().expect("paths are nonempty");
        if let Some(w) = g.smallest_neighbor_excluding(front, &inside) {
            deque.push_front(w);
            inside[w] = true;
            continue;
        }
        let back = *deque.back().expect("paths are nonempty");
        if let Some(w) = g.smallest_neighbor_excluding(back, &inside) {
            deque.push_back(w);
            inside[w] = true;
            continue;
        }
        break;
    }
    Path::from_trusted(deque.into())
}

/// Opens a non-spanning cycle back into a path one vertex longer.
///
/// Takes the lexicographically smallest pair `(u, w)` with `u` on the
/// cycle and `w` off it, drops the edge from `u` to its cycle successor,
/// and returns `w, u, pred(u), ..., succ(u)`.
///
/// Fails with `NoBoundaryEdge` when no edge leaves the cycle, which
/// cannot happen for a connected graph with vertices left to cover.
pub fn reopen_cycle(g: &Graph, cycle: &Cycle) -> Result<Path, SolveError> {
    let verts = cycle.vertices();
    let mut on_cycle = vec![false; g.vertex_count()];
    for &v in verts {
        on_cycle[v] = true;
    }
    let mut boundary: Option<(VertexId, VertexId)> = None;
    let mut sorted = verts.to_vec();
    sorted.sort_unstable();
    for u in sorted {
        if let Some(w) = g.smallest_neighbor_excluding(u, &on_cycle) {
            boundary = Some((u, w));
            break;
        }
    }
    let (u, w) = boundary.ok_or(SolveError::NoBoundaryEdge)?;
    let idx = verts
        .iter()
        .position(|&v| v == u)
        .expect("u lies on the cycle");
    let len = verts.len();
    let mut path = Vec::with_capacity(len + 1);
    path.push(w);
    // Walk backward from u so the dropped edge is the one to its successor.
    path.extend((0..len).map(|step| verts[(idx + len - step) % len]));
    Ok(Path::from_trusted(path))
}

/// Runs the whole pipeline: prechecks, then alternating path growth and
/// cycle closure until the cycle spans the graph or a rotation round
/// fails.
///
/// For any connected input on at least three vertices this terminates in
/// at most n rounds, because every reopened cycle yields a strictly
/// longer path. When the minimum degree is at least `floor(n/2)`, a NONE
/// outcome always carries a cut-vertex or independent-set certificate;
/// `RotationExhausted` can only arise for inputs below the degree bound,
/// which are processed best effort. Disconnected inputs are rejected
/// (they have no certificate shape and can strand the reopen step).
pub fn find_hamiltonian(g: &Graph) -> Result<SolveOutcome, SolveError> {
    let n = g.vertex_count();
    if let Some(cert) = precheck_exceptional(g)? {
        return Ok(SolveOutcome::None(cert));
    }
    if g.connected_components().count() != 1 {
        return Err(SolveError::Disconnected);
    }
    let mut path = extend_to_maximal_path(g, &Path::from_trusted(vec![0]));
    loop {
        let grown = path.len();
        match make_cycle(g, &path) {
            None => return Ok(SolveOutcome::None(NoneCertificate::RotationExhausted(path))),
            Some(cycle) if cycle.len() == n => return Ok(SolveOutcome::Hamiltonian(cycle)),
            Some(cycle) => {
                let reopened =
                    reopen_cycle(g, &cycle).expect("connected graph has a boundary edge");
                path = extend_to_maximal_path(g, &reopened);
                debug_assert!(path.len() > grown, "every round must grow the path");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hamiltonian::verify_cycle;

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn k23() -> Graph {
        Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn cycle5() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn precheck_flags_bowtie() {
        assert_eq!(
            precheck_exceptional(&bowtie()).unwrap(),
            Some(NoneCertificate::CutVertex(2))
        );
    }

    #[test]
    fn precheck_flags_k23() {
        assert_eq!(
            precheck_exceptional(&k23()).unwrap(),
            Some(NoneCertificate::BigIndependentComponent(vec![2, 3, 4]))
        );
    }

    #[test]
    fn precheck_passes_c5() {
        assert_eq!(precheck_exceptional(&cycle5()).unwrap(), None);
    }

    #[test]
    fn precheck_accepts_balanced_bipartite() {
        // K_{3,3}: the complement's biggest component has exactly n/2
        // vertices, which must not certify NONE.
        let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert_eq!(precheck_exceptional(&k33).unwrap(), None);
    }

    #[test]
    fn precheck_rejects_tiny() {
        let k2 = Graph::complete(2);
        assert_eq!(precheck_exceptional(&k2), Err(SolveError::GraphTooSmall(2)));
    }

    #[test]
    fn extend_covers_k4_from_single_vertex() {
        let g = Graph::complete(4);
        let p = extend_to_maximal_path(&g, &Path::new(&g, vec![0]).unwrap());
        assert_eq!(p.vertices(), &[3, 2, 1, 0]);
        assert!(p.is_maximal(&g));
    }

    #[test]
    fn extend_on_c5_matches_greedy_rule() {
        let p = extend_to_maximal_path(&cycle5(), &Path::new(&cycle5(), vec![2]).unwrap());
        assert_eq!(p.vertices(), &[3, 4, 0, 1, 2]);
    }

    #[test]
    fn extend_is_fixpoint_on_maximal() {
        let g = cycle5();
        let p = Path::new(&g, vec![3, 4, 0, 1, 2]).unwrap();
        assert_eq!(extend_to_maximal_path(&g, &p), p);
    }

    #[test]
    fn reopen_triangle_in_k4() {
        let g = Graph::complete(4);
        let c = Cycle::from_trusted(vec![0, 1, 2]);
        let p = reopen_cycle(&g, &c).unwrap();
        assert_eq!(p.vertices(), &[3, 0, 2, 1]);
    }

    #[test]
    fn reopen_prefers_smaller_cycle_vertex_over_smaller_outside_one() {
        // Candidate boundary edges are (1, 5) and (2, 0); lexicographic
        // order on (u, w) makes the smaller u win even though its w is
        // larger.
        let g = Graph::new(6, [(1, 2), (2, 3), (3, 1), (1, 5), (2, 0)]).unwrap();
        let c = Cycle::from_trusted(vec![1, 2, 3]);
        let p = reopen_cycle(&g, &c).unwrap();
        assert_eq!(p.vertices(), &[5, 1, 3, 2]);
    }

    #[test]
    fn reopen_without_boundary_edge() {
        // Two disjoint triangles; the cycle covers one whole component.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let c = Cycle::from_trusted(vec![0, 1, 2]);
        assert_eq!(reopen_cycle(&g, &c), Err(SolveError::NoBoundaryEdge));
    }

    #[test]
    fn solve_complete_graph() {
        let g = Graph::complete(5);
        match find_hamiltonian(&g).unwrap() {
            SolveOutcome::Hamiltonian(c) => assert!(verify_cycle(&g, c.vertices())),
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn solve_bowtie_returns_cut_vertex() {
        assert_eq!(
            find_hamiltonian(&bowtie()).unwrap(),
            SolveOutcome::None(NoneCertificate::CutVertex(2))
        );
    }

    #[test]
    fn solve_k23_returns_independent_set() {
        assert_eq!(
            find_hamiltonian(&k23()).unwrap(),
            SolveOutcome::None(NoneCertificate::BigIndependentComponent(vec![2, 3, 4]))
        );
    }

    #[test]
    fn solve_c5() {
        match find_hamiltonian(&cycle5()).unwrap() {
            SolveOutcome::Hamiltonian(c) => {
                assert!(verify_cycle(&cycle5(), c.vertices()));
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn solve_rejects_small_and_disconnected() {
        assert_eq!(
            find_hamiltonian(&Graph::complete(2)),
            Err(SolveError::GraphTooSmall(2))
        );
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(
            find_hamiltonian(&two_triangles),
            Err(SolveError::Disconnected)
        );
    }

    #[test]
    fn disconnected_graph_with_articulation_still_gets_cut_certificate() {
        // Bowtie plus a far triangle: the cut-vertex screen runs before
        // the connectivity check, and its certificate still validates
        // (removal raises the component count from 2 to 3).
        let g = Graph::new(
            8,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
        )
        .unwrap();
        let outcome = find_hamiltonian(&g).unwrap();
        assert_eq!(outcome, SolveOutcome::None(NoneCertificate::CutVertex(2)));
        assert!(NoneCertificate::CutVertex(2).validate(&g));
    }

    #[test]
    fn solve_is_deterministic() {
        let g = Graph::new(
            7,
            [
                (0, 1),
                (0, 3),
                (0, 5),
                (1, 2),
                (1, 4),
                (2, 3),
                (2, 6),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 0),
                (1, 6),
            ],
        )
        .unwrap();
        assert_eq!(find_hamiltonian(&g), find_hamiltonian(&g));
    }

    #[test]
    fn low_degree_graphs_processed_best_effort() {
        // Petersen graph: 3-regular on 10 vertices, well below the bound,
        // 3-connected, and its complement is connected and not complete.
        let petersen = Graph::new(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        let outcome = find_hamiltonian(&petersen).unwrap();
        match outcome {
            SolveOutcome::Hamiltonian(c) => assert!(verify_cycle(&petersen, c.vertices())),
            SolveOutcome::None(cert) => assert!(cert.validate(&petersen)),
        }
    }
}
