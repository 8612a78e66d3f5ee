//! The three chord-exchange rotations that close a maximal path
//! `x_0 x_1 ... x_k` into a cycle on the same vertex set.
//!
//! Each rotation scans for a fixed chord pattern and, at the first hit in
//! its stated scan order, rebuilds the vertex sequence so that every
//! consecutive pair is either a path edge or one of the chords just
//! checked. Scan orders and the A, B, C try order are fixed contracts:
//! identical inputs always produce identical cycles.

use super::{Cycle, Path};
use crate::graph::Graph;

/// Type A: chords `x_0 x_{i+1}`, `x_i x_{j+1}`, `x_j x_k` close the cycle
///
/// ```text
/// x_0 .. x_i  x_{j+1} .. x_k  x_j .. x_{i+1}  (back to x_0)
/// ```
///
/// Scans `i` in `[0, k-3]`, then `j` in `[i+1, k-1]`; `j = i` would make
/// the three segments overlap, every larger `j` keeps them disjoint. The
/// `j = i+1` column is load-bearing: dropping it leaves maximal paths
/// whose only closing chord triple sits there (the smallest is the
/// degree-2 graph 01 02 04 12 13 14 23 with path 3-2-1-0-4), which would
/// break the guarantee that rotations never exhaust under the degree
/// bound. The pair `(i, j) = (0, k-1)` degenerates to the endpoint edge
/// `x_0 x_k` plus two path edges, so a maximal path with adjacent
/// endpoints always closes here; for `k = 2` that pair sits outside the
/// scan range and is tested explicitly.
pub fn make_type_a_cycle(g: &Graph, path: &Path) -> Option<Cycle> {
    let x = path.vertices();
    let k = x.len().checked_sub(1)?;
    if k < 2 {
        return None;
    }
    if k == 2 {
        if g.has_edge(x[0], x[2]) {
            return Some(Cycle::from_trusted(vec![x[0], x[2], x[1]]));
        }
        return None;
    }
    for i in 0..=k - 3 {
        if !g.has_edge(x[0], x[i + 1]) {
            continue;
        }
        for j in i + 1..=k - 1 {
            if g.has_edge(x[i], x[j + 1]) && g.has_edge(x[j], x[k]) {
                let mut verts = Vec::with_capacity(k + 1);
                verts.extend_from_slice(&x[..=i]);
                verts.extend_from_slice(&x[j + 1..=k]);
                verts.extend(x[i + 1..=j].iter().rev());
                return Some(Cycle::from_trusted(verts));
            }
        }
    }
    None
}

/// Type B: an interior vertex `x_i` with `x_0 x_{i+1}` and `x_{i-1} x_k`
/// present gets spliced next to a consecutive pair `x_j, x_{j+1}` it is
/// adjacent to. For `j > i` the cycle is
///
/// ```text
/// x_0 .. x_{i-1}  x_k .. x_{j+1}  x_i  x_j .. x_{i+1}  (back to x_0)
/// ```
///
/// and for `j <= i-2` the mirrored form
///
/// ```text
/// x_0 .. x_j  x_i  x_{j+1} .. x_{i-1}  x_k .. x_{i+1}  (back to x_0)
/// ```
///
/// Scans `i` in `[1, k-2]`; per `i`, `j` ascending in `[i+1, k-1]` first,
/// then ascending in `[1, i-2]`. `j = i-1` and `j = i` are excluded since
/// the pair `(x_j, x_{j+1})` would include `x_i` itself.
///
/// Callers ensure the path endpoints are non-adjacent (a path with
/// adjacent endpoints already closes as Type A).
pub fn make_type_b_cycle(g: &Graph, path: &Path) -> Option<Cycle> {
    let x = path.vertices();
    let k = x.len().checked_sub(1)?;
    if k < 3 {
        return None;
    }
    for i in 1..=k - 2 {
        if !(g.has_edge(x[0], x[i + 1]) && g.has_edge(x[i - 1], x[k])) {
            continue;
        }
        for j in i + 1..=k - 1 {
            if g.has_edge(x[i], x[j]) && g.has_edge(x[i], x[j + 1]) {
                let mut verts = Vec::with_capacity(k + 1);
                verts.extend_from_slice(&x[..i]);
                verts.extend(x[j + 1..=k].iter().rev());
                verts.push(x[i]);
                verts.extend(x[i + 1..=j].iter().rev());
                return Some(Cycle::from_trusted(verts));
            }
        }
        for j in 1..i.saturating_sub(1) {
            if g.has_edge(x[i], x[j]) && g.has_edge(x[i], x[j + 1]) {
                let mut verts = Vec::with_capacity(k + 1);
                verts.extend_from_slice(&x[..=j]);
                verts.push(x[i]);
                verts.extend_from_slice(&x[j + 1..=i - 1]);
                verts.extend(x[i + 1..=k].iter().rev());
                return Some(Cycle::from_trusted(verts));
            }
        }
    }
    None
}

/// Type C: one endpoint adjacent to the vertex next to the other
/// endpoint. If `x_0 x_{k-1}` is an edge, a consecutive pair adjacent to
/// `x_k` yields
///
/// ```text
/// x_0 .. x_i  x_k  x_{i+1} .. x_{k-1}  (back to x_0)
/// ```
///
/// Failing that, if `x_k x_1` is an edge, a consecutive pair adjacent to
/// `x_0` yields the mirror
///
/// ```text
/// x_1 .. x_i  x_0  x_{i+1} .. x_k  (back to x_1)
/// ```
///
/// The second branch also runs when the first branch's guard held but
/// its scan found nothing.
pub fn make_type_c_cycle(g: &Graph, path: &Path) -> Option<Cycle> {
    let x = path.vertices();
    let k = x.len().checked_sub(1)?;
    if k < 2 {
        return None;
    }
    if g.has_edge(x[0], x[k - 1]) {
        for i in 0..=k - 2 {
            if g.has_edge(x[k], x[i]) && g.has_edge(x[k], x[i + 1]) {
                let mut verts = Vec::with_capacity(k + 1);
                verts.extend_from_slice(&x[..=i]);
                verts.push(x[k]);
                verts.extend_from_slice(&x[i + 1..=k - 1]);
                return Some(Cycle::from_trusted(verts));
            }
        }
    }
    if g.has_edge(x[k], x[1]) {
        for i in 1..=k - 1 {
            if g.has_edge(x[0], x[i]) && g.has_edge(x[0], x[i + 1]) {
                let mut verts = Vec::with_capacity(k + 1);
                verts.extend_from_slice(&x[1..=i]);
                verts.push(x[0]);
                verts.extend_from_slice(&x[i + 1..=k]);
                return Some(Cycle::from_trusted(verts));
            }
        }
    }
    None
}

/// Tries Type A, then Type B, then Type C; first success wins.
pub fn make_cycle(g: &Graph, path: &Path) -> Option<Cycle> {
    make_type_a_cycle(g, path)
        .or_else(|| make_type_b_cycle(g, path))
        .or_else(|| make_type_c_cycle(g, path))
}
