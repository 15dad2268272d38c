//! Exact computations with comatrix corings over firm rings.
//!
//! Every module, tensor product and structure map is a finite matrix over a
//! prime field `F_p`. Balanced tensor products are quotient spaces with a
//! canonical section, and every identity is checked as a matrix equality.

pub mod algmod;
pub mod check;
pub mod cli;
pub mod comatrix;
pub mod corings;
pub mod dualring;
pub mod exactlin;
pub mod galois;
pub mod instances;
pub mod selftest;
pub mod tensorcalc;

pub use algmod::{Action, Algebra, Bimodule, FirmStructure, ValidationReport};
pub use comatrix::{ComatrixCoring, ComatrixData};
pub use corings::{Comodule, Coring, Side};
pub use exactlin::{Field, LinError, Mat, Quotient, Witness};
pub use tensorcalc::TensorSpace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("action mismatch: {0}")]
    ActionMismatch(String),
    #[error("{module} is not firm ({witness})")]
    NotFirm { module: String, witness: Witness },
    #[error("map on {space} is not balanced; relation {relation:?} is not annihilated")]
    NotBalanced { space: String, relation: Vec<u32> },
    #[error("iota is not multiplicative at basis pair ({0}, {1})")]
    NotRingHom(usize, usize),
    #[error("not a module: associativity fails at ({0}, {1}, {2})")]
    NotAModule(usize, usize, usize),
    #[error("{which} diagram of the context fails at basis vector {index}")]
    DiagramFails { which: String, index: usize },
    #[error("search space of {0} elements is too large")]
    SearchSpaceTooLarge(u128),
    #[error("search budget of {0} candidates exceeded")]
    SearchBudgetExceeded(u64),
    #[error("corings have different base algebras")]
    BaseMismatch,
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("unknown instance {0:?}")]
    UnknownInstance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
