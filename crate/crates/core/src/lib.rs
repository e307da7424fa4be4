//! Kempe-chain reconfiguration of list colorings.
//!
//! The crate computes Kempe chains and L-valid Kempe changes, decides
//! L-colorability of degree-assignments structurally (Gallai trees and
//! blockwise uniform lists), materializes the full reconfiguration graph of
//! L-colorings as a brute-force oracle, and sweeps small graphs to check
//! degree-swappability and the supporting lemmas.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod kempe;
pub mod oracle;

pub use coloring::{Color, Coloring, ListAssignment};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use kempe::KempeMove;
