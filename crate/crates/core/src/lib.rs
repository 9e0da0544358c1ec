//! Strong edge-coloring toolkit: exact invariants, reducible-configuration detection
//! and replay, discharging with exact rationals, and small-corpus verification.

pub mod cli;
pub mod coloring;
pub mod configurations;
pub mod discharging;
pub mod error;
pub mod graph;
pub mod harness;
pub mod metrics;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{ConflictGraph, EdgeId, Graph, Vertex};
pub use rational::Rational;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
