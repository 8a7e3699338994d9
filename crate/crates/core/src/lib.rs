pub mod basis;
pub mod canonical;
pub mod cli;
pub mod contraction;
pub mod error;
pub mod extended;
pub mod harness;
pub mod hopf;
pub mod insertion;
pub mod linear;
pub mod matrix;
pub mod wire;
mod memo;

pub use canonical::{class_of, class_of_ext, ClassKind, GraphClass};
pub use error::{Error, Result};
pub use linear::{LinComb, Rational, TensorComb};
pub use matrix::{AdjMatrix, ExtAdjMatrix, Permutation, VertexSet};
