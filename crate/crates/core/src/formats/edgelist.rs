//! Plain edge-list text format for hand-written fixtures: a header line
//! `n <count>`, then one 0-based `u v` pair per line. Blank lines are
//! skipped.

use super::FormatError;
use crate::graph::Graph;

pub fn decode_edgelist(payload: &[u8]) -> Result<Graph, FormatError> {
    let text = String::from_utf8_lossy(payload);
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match (n, tokens.as_slice()) {
            (_, []) => continue,
            (None, ["n", count]) => {
                n = Some(count.parse().map_err(|_| FormatError::MalformedLine {
                    line,
                    reason: format!("bad vertex count {count:?}"),
                })?);
            }
            (None, _) => return Err(FormatError::MissingProblemLine { line }),
            (Some(n), [a, b]) => {
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| FormatError::MalformedLine {
                        line,
                        reason: format!("bad vertex {t:?}"),
                    })
                };
                let (u, v) = (parse(a)?, parse(b)?);
                for w in [u, v] {
                    if w >= n {
                        return Err(FormatError::VertexOutOfRange { line, vertex: w, n });
                    }
                }
                if u == v {
                    return Err(FormatError::MalformedLine {
                        line,
                        reason: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((u, v));
            }
            (Some(_), _) => {
                return Err(FormatError::MalformedLine {
                    line,
                    reason: "expected 'u v'".into(),
                });
            }
        }
    }
    let Some(n) = n else {
        return Err(FormatError::MissingProblemLine { line: 1 });
    };
    Ok(Graph::new(n, edges).expect("edge endpoints validated above"))
}

/// Canonical form: header, then edges sorted ascending with the smaller
/// endpoint first.
pub fn encode_edgelist(g: &Graph) -> Vec<u8> {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.into_bytes()
}
