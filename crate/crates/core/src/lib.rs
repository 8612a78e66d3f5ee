//! Hamiltonian cycles under the relaxed Dirac bound.
//!
//! For a connected graph whose minimum degree is at least `floor(n/2)`,
//! [`hamiltonian::find_hamiltonian`] either constructs a Hamiltonian
//! cycle in polynomial time or returns a machine-checkable certificate
//! that the graph belongs to one of the two non-Hamiltonian families
//! possible under that bound: two cliques sharing a cut vertex, or an
//! independent set on more than half the vertices joined to the rest.
//!
//! The crate also ships a brute-force oracle ([`oracle`]), instance
//! generators and exhaustive small-graph enumeration ([`generators`]),
//! and graph6 / DIMACS / edge-list codecs ([`formats`]) so results can
//! be cross-checked at desk scale and exchanged with standard tooling.
//!
//! ```
//! use hamcycle::{find_hamiltonian, verify_cycle, Graph, SolveOutcome};
//!
//! // Two triangles sharing vertex 2: meets the degree bound but is not
//! // Hamiltonian, and the solver proves why.
//! let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])?;
//! match find_hamiltonian(&bowtie)? {
//!     SolveOutcome::None(cert) => assert!(cert.validate(&bowtie)),
//!     SolveOutcome::Hamiltonian(_) => unreachable!("the shared vertex is a cut vertex"),
//! }
//!
//! let wheel = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])?;
//! let SolveOutcome::Hamiltonian(cycle) = find_hamiltonian(&wheel)? else {
//!     unreachable!("wheels are Hamiltonian");
//! };
//! assert!(verify_cycle(&wheel, cycle.vertices()));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod formats;
pub mod generators;
pub mod graph;
pub mod hamiltonian;
pub mod oracle;

pub use graph::{Graph, GraphError, VertexId};
pub use hamiltonian::{find_hamiltonian, verify_cycle, NoneCertificate, SolveError, SolveOutcome};
