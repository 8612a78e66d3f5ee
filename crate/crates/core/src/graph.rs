//! Immutable simple-graph representation backed by a packed adjacency
//! bit matrix, plus the structural queries the solver needs: degrees,
//! complement, connected components, articulation points.

use thiserror::Error;

/// Vertex index into a [`Graph`]; always in `[0, n)` of the owning graph.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

/// Undirected simple graph, immutable after construction.
///
/// Adjacency is stored as a full symmetric bit matrix with one row of
/// `ceil(n/64)` words per vertex, so edge queries are O(1) and neighbor
/// iteration is O(n/64). Target graphs are dense (minimum degree around
/// n/2), so the matrix wins over adjacency lists.
///
/// Padding bits past column n-1 are kept zero, which makes derived
/// equality structural: two graphs are equal iff they have the same
/// vertex count and edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate pairs
    /// and swapped orientations are idempotent.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let words_per_row = n.div_ceil(64);
        let mut g = Graph {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        };
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, pairs).expect("generated pairs are in range")
    }

    fn set_edge(&mut self, u: VertexId, v: VertexId) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words_per_row + u / 64] |= 1 << (u % 64);
    }

    fn row(&self, v: VertexId) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let set: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        set / 2
    }

    /// O(1) adjacency test. Panics if either vertex is out of range.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word_idx: 0,
            current: self.row(v).first().copied().unwrap_or(0),
        }
    }

    /// Smallest neighbor of `v` that is not marked in `excluded`
    /// (`excluded` is indexed by vertex id).
    pub fn smallest_neighbor_excluding(&self, v: VertexId, excluded: &[bool]) -> Option<VertexId> {
        self.neighbors(v).find(|&w| !excluded[w])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Minimum degree over all vertices; `None` for the empty graph,
    /// where it is undefined.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Complement graph: `u ~ v` in the result iff `u != v` and not
    /// `u ~ v` here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            words_per_row: self.words_per_row,
            bits: vec![0; self.bits.len()],
        };
        // Mask for the last word of a row keeps padding bits zero.
        let tail_mask = if self.n.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (self.n % 64)) - 1
        };
        for v in 0..self.n {
            let src = self.row(v);
            let dst = &mut g.bits[v * g.words_per_row..(v + 1) * g.words_per_row];
            for (i, (d, s)) in dst.iter_mut().zip(src).enumerate() {
                *d = !s;
                if i + 1 == self.words_per_row {
                    *d &= tail_mask;
                }
            }
            // No self-loops.
            dst[v / 64] &= !(1 << (v % 64));
        }
        g
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Labels connected components by breadth-first search. Component
    /// indices are contiguous from 0 and ordered by the smallest vertex
    /// they contain.
    pub fn connected_components(&self) -> ComponentLabeling {
        let mut labels = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if labels[w] == usize::MAX {
                        labels[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling { labels, count }
    }

    /// Smallest articulation point, or `None` if the graph has none.
    ///
    /// A vertex is an articulation point iff removing it increases the
    /// number of connected components. Computed by one iterative
    /// depth-first traversal with low-link values over every component.
    pub fn find_cut_vertex(&self) -> Option<VertexId> {
        const UNVISITED: usize = usize::MAX;
        let n = self.n;
        let mut disc = vec![UNVISITED; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // Stack frames: (vertex, parent, next candidate neighbor id).
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();

        for root in 0..n {
            if disc[root] != UNVISITED {
                continue;
            }
            let mut root_children = 0;
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut cursor)) = stack.last_mut() {
                // Resume the neighbor scan of v at *cursor.
                let mut advanced = false;
                while *cursor < n {
                    let w = *cursor;
                    *cursor += 1;
                    if !self.has_edge(v, w) {
                        continue;
                    }
                    if disc[w] == UNVISITED {
                        if v == root {
                            root_children += 1;
                        }
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                        advanced = true;
                        break;
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                }
                if advanced {
                    continue;
                }
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        is_cut.iter().position(|&c| c)
    }

    /// True iff every pair of distinct vertices in `set` is adjacent.
    /// Duplicate entries are ignored.
    pub fn is_clique(&self, set: &[VertexId]) -> bool {
        for (idx, &u) in set.iter().enumerate() {
            for &v in &set[idx + 1..] {
                if u != v && !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Ascending iterator over the neighbors of one vertex.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
    }
}

/// Partition of the vertex set into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    labels: Vec<usize>,
    count: usize,
}

impl ComponentLabeling {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn label(&self, v: VertexId) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Vertices of component `idx`, ascending.
    pub fn component(&self, idx: usize) -> Vec<VertexId> {
        (0..self.labels.len())
            .filter(|&v| self.labels[v] == idx)
            .collect()
    }

    /// Vertex set of the largest component. Ties go to the component
    /// containing the smallest vertex, which is the one labeled first.
    pub fn largest_component(&self) -> Vec<VertexId> {
        let mut sizes = vec![0usize; self.count];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        let best = sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        self.component(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Two triangles sharing vertex 2.
    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn cycle5() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// Complete bipartite with sides {0, 1} and {2, 3, 4}.
    fn k23() -> Graph {
        Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn build_edgeless() {
        let g = Graph::new(4, []).unwrap();
        assert_eq!(g.edge_count(), 0);
        for v in 0..4 {
            assert_eq!(g.degree(v), 0);
        }
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_idempotent() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degree_examples() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.degree(0), 4);
        assert_eq!(bowtie().degree(2), 4);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(cycle5().min_degree(), Some(2));
        assert_eq!(k23().min_degree(), Some(2));
        // degrees of the bowtie are (2, 2, 4, 2, 2)
        assert_eq!(bowtie().min_degree(), Some(2));
        assert_eq!(Graph::new(0, []).unwrap().min_degree(), None);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::new(4, []).unwrap());
    }

    #[test]
    fn complement_of_labeled_c5() {
        // Non-edges of the 5-cycle 0-1-2-3-4-0 form the cycle 0-2-4-1-3-0.
        let want = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(cycle5().complement(), want);
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.count(), 2);
        assert_eq!(comps.component(0), vec![0, 1, 2]);
        assert_eq!(comps.component(1), vec![3, 4]);
        assert_eq!(comps.largest_component(), vec![0, 1, 2]);
    }

    #[test]
    fn components_of_connected_graph() {
        assert_eq!(cycle5().connected_components().count(), 1);
    }

    #[test]
    fn complement_of_k23_splits_into_cliques() {
        let comps = k23().complement().connected_components();
        assert_eq!(comps.count(), 2);
        assert_eq!(comps.largest_component(), vec![2, 3, 4]);
        assert!(k23().complement().is_clique(&[2, 3, 4]));
    }

    #[test]
    fn cut_vertex_of_bowtie() {
        assert_eq!(bowtie().find_cut_vertex(), Some(2));
    }

    #[test]
    fn cut_vertex_absent_in_cycle() {
        assert_eq!(cycle5().find_cut_vertex(), None);
    }

    #[test]
    fn cut_vertex_of_path() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.find_cut_vertex(), Some(1));
    }

    #[test]
    fn clique_checks() {
        assert!(Graph::complete(5).is_clique(&[0, 1, 2, 3, 4]));
        assert!(!cycle5().is_clique(&[0, 1, 2]));
        assert!(triangle().is_clique(&[0, 1]));
        assert!(triangle().is_clique(&[]));
    }

    #[test]
    fn neighbors_are_ascending() {
        let g = bowtie();
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0, 1, 3, 4]);
        assert_eq!(
            g.smallest_neighbor_excluding(2, &[true, false, false, false, false]),
            Some(1)
        );
    }

    #[test]
    fn wide_graph_crosses_word_boundary() {
        // Star centered at 0 with 70 leaves: row of vertex 0 spans two words.
        let n = 71;
        let g = Graph::new(n, (1..n).map(|v| (0, v))).unwrap();
        assert_eq!(g.degree(0), 70);
        assert_eq!(
            g.neighbors(0).collect::<Vec<_>>(),
            (1..n).collect::<Vec<_>>()
        );
        assert!(g.has_edge(0, 70) && !g.has_edge(1, 70));
    }

    #[test]
    fn shared_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        let g = std::sync::Arc::new(Graph::complete(40));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let g = std::sync::Arc::clone(&g);
                std::thread::spawn(move || (0..40).map(|v| g.degree(v)).sum::<usize>())
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), 40 * 39);
        }
    }

    /// Strategy: arbitrary graph with 1..=12 vertices.
    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
                let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn degrees_bounded(g in arb_graph()) {
            for v in 0..g.vertex_count() {
                prop_assert!(g.degree(v) < g.vertex_count());
            }
        }

        #[test]
        fn handshake(g in arb_graph()) {
            let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(sum, 2 * g.edge_count());
        }

        #[test]
        fn complement_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn complement_degree_sum(g in arb_graph()) {
            let h = g.complement();
            for v in 0..g.vertex_count() {
                prop_assert_eq!(g.degree(v) + h.degree(v), g.vertex_count() - 1);
            }
        }

        #[test]
        fn component_labels_cover_edges(g in arb_graph()) {
            let comps = g.connected_components();
            for (u, v) in g.edges() {
                prop_assert_eq!(comps.label(u), comps.label(v));
            }
            for v in 0..g.vertex_count() {
                prop_assert!(comps.label(v) < comps.count());
            }
        }
    }
}
