//! DIMACS edge-format codec: `c` comment lines, one `p edge <n> <m>`
//! problem line, then `e <u> <v>` lines with 1-based endpoints.

use super::FormatError;
use crate::graph::Graph;

/// Decoded DIMACS graph plus any advisory warnings. The edge count on
/// the problem line is advisory: a mismatch warns instead of failing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimacsDecode {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn decode_dimacs(payload: &[u8]) -> Result<DimacsDecode, FormatError> {
    let text = String::from_utf8_lossy(payload);
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if declared.is_some() {
                    return Err(FormatError::MalformedLine {
                        line,
                        reason: "duplicate problem line".into(),
                    });
                }
                let bad = || FormatError::MalformedLine {
                    line,
                    reason: "expected 'p edge <n> <m>'".into(),
                };
                if tokens.next() != Some("edge") {
                    return Err(bad());
                }
                let n = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let m = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                if tokens.next().is_some() {
                    return Err(bad());
                }
                declared = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = declared else {
                    return Err(FormatError::MissingProblemLine { line });
                };
                let bad = || FormatError::MalformedLine {
                    line,
                    reason: "expected 'e <u> <v>'".into(),
                };
                let u: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let v: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                if tokens.next().is_some() {
                    return Err(bad());
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(FormatError::VertexOutOfRange { line, vertex: w, n });
                    }
                }
                if u == v {
                    return Err(FormatError::MalformedLine {
                        line,
                        reason: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(FormatError::MalformedLine {
                    line,
                    reason: format!("unknown line type {other:?}"),
                });
            }
        }
    }
    let Some((n, m)) = declared else {
        return Err(FormatError::MissingProblemLine {
            line: last_line + 1,
        });
    };
    let graph = Graph::new(n, edges).expect("edge endpoints validated above");
    let mut warnings = Vec::new();
    let distinct = graph.edge_count();
    if distinct != m {
        warnings.push(format!(
            "problem line declares {m} edges but {distinct} distinct edges were read"
        ));
    }
    Ok(DimacsDecode { graph, warnings })
}

/// Canonical DIMACS form: problem line, then edges sorted ascending,
/// 1-based with the smaller endpoint first.
pub fn encode_dimacs(g: &Graph) -> Vec<u8> {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out.into_bytes()
}
