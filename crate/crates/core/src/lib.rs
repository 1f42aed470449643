//! Exact matching generating functions of subdivision trees, Laplacian
//! coefficients and incidence energy of trees, plus exhaustive checks of
//! extremal statements over classes of trees with bounded maximum degree.
//!
//! Polynomials and comparisons are exact (`BigInt` / `BigRational`); only the
//! spectral quantities in [`energy`] use floating point.

pub mod cli;
pub mod energy;
pub mod error;
pub mod extremal;
pub mod laplacian;
pub mod matchgen;
pub mod poly;
pub mod report;
pub mod trees;

pub use error::{Error, Result};
pub use laplacian::CoeffVector;
pub use matchgen::MatchingTriple;
pub use poly::{IntPoly, Rational};
pub use report::VerificationReport;
pub use trees::{CanonicalCode, Decomposition, RootedTree, Tree};
