//! Alphabet overlap graphs G(k,d,s): words of length k over a d-letter
//! alphabet, adjacent when one's last k-s letters equal the other's first
//! k-s letters in either direction.
//!
//! The crate constructs and certifies the structures these graphs are known
//! for: Hamiltonian cycles by two independent algorithms, proper colorings
//! hitting the exact chromatic number for short tags and recursive upper
//! bounds for long ones, dominating sets of size d^t, planarity verdicts
//! with rotation-system or bipartite-subgraph certificates, and grid
//! Hamiltonian cycles for comparison. Every constructed object can be
//! re-checked by a verifier that does not trust the constructor.

pub mod coloring;
pub mod domination;
pub mod error;
pub mod graph;
pub mod hamiltonian;
pub mod planarity;
pub mod serialize;
pub mod words;

pub use error::{AoError, SizeGuard, Verdict};
pub use graph::{ExplicitGraph, ExportFormat};
pub use hamiltonian::{CycleCertificate, CycleKind, GridParams};
pub use words::{AOParams, Word};
