//! Exact computations with finite-dimensional Akivis superalgebras and
//! their universal enveloping superalgebras.
//!
//! The crate covers Z2-graded algebras given by structure constants over
//! the rationals ([`SuperTable`], [`AkivisSpec`]), the identity checkers in
//! [`identity`], the worked examples in [`catalog`], the PBW model of the
//! enveloping algebra in [`envelope`], and the text formats and command
//! line front end used by the `akivis` binary.

pub mod akivis;
pub mod algebra;
pub mod basis;
pub mod catalog;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod expr;
pub mod format;
pub mod identity;
pub mod lex;
pub mod report;
pub mod scalar;
pub mod table;
pub mod vector;

pub use akivis::AkivisSpec;
pub use algebra::{Algebra, AlgebraKind};
pub use basis::{GradedBasis, Parity};
pub use envelope::{EnvElement, Envelope, MagmaTerm, Monomial, TruncationPolicy};
pub use error::{AlgebraError, Result};
pub use identity::{CheckReport, Classification};
pub use scalar::Scalar;
pub use table::SuperTable;
pub use vector::Vector;
