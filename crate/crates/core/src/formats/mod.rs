//! Bit-exact graph codecs: graph6, DIMACS edge format, and a plain
//! 0-based edge-list text format. Decoders never panic on malformed
//! input; every parse error carries a byte or line position.

mod dimacs;
mod edgelist;
mod graph6;

pub use dimacs::{decode_dimacs, encode_dimacs, DimacsDecode};
pub use edgelist::{decode_edgelist, encode_edgelist};
pub use graph6::{decode_graph6, decode_graph6_batch, encode_graph6, GRAPH6_MAX_VERTICES};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    // graph6
    #[error("invalid character {byte:#04x} at byte {pos}")]
    InvalidCharacter { pos: usize, byte: u8 },
    #[error("payload truncated at byte {pos}: {needed} adjacency bits expected")]
    TruncatedPayload { pos: usize, needed: usize },
    #[error("trailing garbage at byte {pos}")]
    TrailingGarbage { pos: usize },
    #[error("graph too large for graph6: {n} vertices (limit {limit})")]
    Oversize { n: usize, limit: usize },
    // DIMACS / edge list
    #[error("line {line}: missing problem line")]
    MissingProblemLine { line: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
}

/// The three interchange formats, selectable by flag or file extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Dimacs,
    EdgeList,
}

impl Format {
    /// Infers the format from a file extension: `.g6`, `.col`/`.dimacs`,
    /// `.el`.
    pub fn from_extension(path: &str) -> Option<Format> {
        let ext = path.rsplit('.').next()?;
        match ext.to_ascii_lowercase().as_str() {
            "g6" => Some(Format::Graph6),
            "col" | "dimacs" => Some(Format::Dimacs),
            "el" => Some(Format::EdgeList),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::EdgeList => "edgelist",
        }
    }
}

/// A graph serialized in one of the supported formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphText {
    pub format: Format,
    pub payload: Vec<u8>,
}

impl GraphText {
    pub fn new(format: Format, payload: Vec<u8>) -> GraphText {
        GraphText { format, payload }
    }

    /// Decodes the payload as a single graph. DIMACS warnings (an
    /// advisory edge count that disagrees) are dropped here; use
    /// [`decode_dimacs`] directly to observe them.
    pub fn decode(&self) -> Result<Graph, FormatError> {
        match self.format {
            Format::Graph6 => decode_graph6(&self.payload),
            Format::Dimacs => decode_dimacs(&self.payload).map(|d| d.graph),
            Format::EdgeList => decode_edgelist(&self.payload),
        }
    }

    /// Serializes a graph in the given format.
    pub fn encode(format: Format, g: &Graph) -> Result<GraphText, FormatError> {
        let payload = match format {
            Format::Graph6 => encode_graph6(g)?,
            Format::Dimacs => encode_dimacs(g),
            Format::EdgeList => encode_edgelist(g),
        };
        Ok(GraphText { format, payload })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    #[test]
    fn extension_inference() {
        assert_eq!(
            Format::from_extension("a/b/corpus.g6"),
            Some(Format::Graph6)
        );
        assert_eq!(Format::from_extension("x.col"), Some(Format::Dimacs));
        assert_eq!(Format::from_extension("x.DIMACS"), Some(Format::Dimacs));
        assert_eq!(Format::from_extension("x.el"), Some(Format::EdgeList));
        assert_eq!(Format::from_extension("x.txt"), None);
        assert_eq!(Format::from_extension("noext"), None);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=40).prop_flat_map(|n| {
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
        /// decode . encode is the identity and re-encoding is canonical,
        /// for all three formats.
        #[test]
        fn round_trips(g in arb_graph()) {
            for format in [Format::Graph6, Format::Dimacs, Format::EdgeList] {
                let text = GraphText::encode(format, &g).unwrap();
                let back = text.decode().unwrap();
                prop_assert_eq!(&back, &g);
                let again = GraphText::encode(format, &back).unwrap();
                prop_assert_eq!(again, text);
            }
        }
    }
}
