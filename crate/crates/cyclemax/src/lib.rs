//! Exact cycle counting and elimination machinery for dense triangle-free
//! graphs.
//!
//! The crate is organised around one question: among triangle-free graphs on
//! n vertices, how close can the cycle count get to the balanced complete
//! bipartite graph?  `graph` builds the relevant families, `cycles` counts
//! exactly, `permanent` evaluates the matrix permanents behind the sharpest
//! upper bounds, `bounds` collects the closed-form estimates, and `search`
//! wires them into staged elimination passes over candidate families.

pub mod bounds;
pub mod cycles;
pub mod graph;
pub mod io;
pub mod modular;
pub mod permanent;
pub mod search;
pub mod tables;

pub use graph::{BlowupSpec, Graph, LabeledGraph};
pub use permanent::{BlockMatrixSpec, DenseMatrix01};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("value out of supported range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("edge-count estimate only valid in the dense regime: {0}")]
    OutsideDenseRegime(String),
    #[error("incompatible bound directions: {0}")]
    BoundSense(String),
}

pub type Result<T> = std::result::Result<T, Error>;
