//! graph6 codec: printable-ASCII encoding of the adjacency upper
//! triangle, six bits per byte offset by 63. The triangle is laid out
//! column by column ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian
//! within each 6-bit group, and zero-padded to a byte boundary.

use super::FormatError;
use crate::graph::Graph;

/// Largest encodable vertex count: the 4-byte size header spans
/// 18 bits; the 8-byte tier above it is not supported.
pub const GRAPH6_MAX_VERTICES: usize = 258_047;

/// Decodes one graph6 line, optionally newline-terminated.
///
/// Both the short (1-byte, n < 63) and long (4-byte) size headers are
/// accepted, even when a long header carries a small n; re-encoding
/// always produces the canonical short form.
pub fn decode_graph6(payload: &[u8]) -> Result<Graph, FormatError> {
    let line = strip_newline(payload);
    for (pos, &byte) in line.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::InvalidCharacter { pos, byte });
        }
    }
    let (n, mut pos) = decode_size(line)?;
    let needed_bits = n * n.saturating_sub(1) / 2;
    let needed_bytes = needed_bits.div_ceil(6);
    if line.len() < pos + needed_bytes {
        return Err(FormatError::TruncatedPayload {
            pos: line.len(),
            needed: needed_bits,
        });
    }
    let body = &line[pos..pos + needed_bytes];
    let mut edges = Vec::new();
    let mut bit_index = 0;
    'cols: for col in 1..n {
        for row in 0..col {
            let byte = body[bit_index / 6] - 63;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
            if bit_index == needed_bits {
                break 'cols;
            }
        }
    }
    // Padding bits in the last body byte must be zero.
    if needed_bits % 6 != 0 {
        let last = body[needed_bytes - 1] - 63;
        let pad = 6 - needed_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(FormatError::TrailingGarbage {
                pos: pos + needed_bytes - 1,
            });
        }
    }
    pos += needed_bytes;
    if pos != line.len() {
        return Err(FormatError::TrailingGarbage { pos });
    }
    Ok(Graph::new(n, edges).expect("triangle positions are in range"))
}

/// Encodes a graph as one canonical graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>, FormatError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(FormatError::Oversize {
            n,
            limit: GRAPH6_MAX_VERTICES,
        });
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + (n >> 12 & 0x3f) as u8);
        out.push(63 + (n >> 6 & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            group = group << 1 | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(out)
}

/// Decodes every nonblank line of a multi-graph file, pairing each result
/// with its 1-based line number. One bad line does not stop the batch.
pub fn decode_graph6_batch(payload: &[u8]) -> Vec<(usize, Result<Graph, FormatError>)> {
    payload
        .split(|&b| b == b'\n')
        .enumerate()
        .filter_map(|(idx, line)| {
            let line = strip_newline(line);
            if line.is_empty() {
                None
            } else {
                Some((idx + 1, decode_graph6(line)))
            }
        })
        .collect()
}

fn strip_newline(line: &[u8]) -> &[u8] {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    line.strip_suffix(b"\r").unwrap_or(line)
}

/// Returns (n, offset of the first body byte). Assumes the whole line is
/// already range-checked.
fn decode_size(line: &[u8]) -> Result<(usize, usize), FormatError> {
    match line {
        [] => Err(FormatError::TruncatedPayload { pos: 0, needed: 0 }),
        [126, 126, ..] => Err(FormatError::Oversize {
            n: GRAPH6_MAX_VERTICES + 1,
            limit: GRAPH6_MAX_VERTICES,
        }),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(FormatError::TruncatedPayload {
                    pos: line.len(),
                    needed: 0,
                });
            }
            // Values past the tier bound would need a leading 126 in the
            // size bytes, which the 8-byte arm above already catches, so
            // this n is at most GRAPH6_MAX_VERTICES.
            let n = (rest[0] as usize - 63) << 12
                | (rest[1] as usize - 63) << 6
                | (rest[2] as usize - 63);
            Ok((n, 4))
        }
        [first, ..] => Ok(((first - 63) as usize, 1)),
    }
}
