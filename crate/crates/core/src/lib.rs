//! Avoider-Enforcer positional games: exact solving, structural
//! classification, and a verification harness.
//!
//! Two players alternately claim vertices of a hypergraph until none remain.
//! Enforcer wins if Avoider's vertices contain an edge at the end, otherwise
//! Avoider wins. The game value depends on who moves last, which is fixed up
//! front; the [`oracle`] module solves arbitrary positions exactly, while
//! [`classifier`] decides rank-2 boards and linear rank-3 boards (Avoider
//! moving last) in polynomial time via the structures in [`structure`]. The
//! [`harness`] module checks the structural theory against the exact solver
//! over enumerated and randomly sampled instances.

pub mod classifier;
pub mod error;
pub mod harness;
pub mod hypergraph;
pub mod oracle;
pub mod structure;

pub use error::{Error, Result};
pub use hypergraph::{Edge, Hypergraph, VertexId};
pub use oracle::{outcome, solve, GameState, LastPlayer, Outcome, Player, Solver, Winner};
