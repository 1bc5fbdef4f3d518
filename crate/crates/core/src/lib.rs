//! Simsun permutations of both kinds, their statistic polynomials and the
//! identities, bijections, generating functions and root interlacing results
//! that connect them.
//!
//! Everything is exact: coefficients are arbitrary-precision integers or
//! rationals and every check is a yes/no verdict.

pub mod bijection;
pub mod error;
pub mod identities;
pub mod perm;
pub mod poly;
pub mod registry;
pub mod report;
pub mod rootcheck;
pub mod series;
pub mod simsun;
pub mod triangle;

pub use error::{Error, Result};
pub use perm::{CycleDecomposition, CycleStatRecord, Permutation, SignedPermutation, StatRecord};
pub use poly::{Poly, Rational, Var};
pub use report::IdentityReport;
pub use simsun::{Class, LabeledCycles, LabeledWord, Stat};
pub use triangle::{Engine, Family, Triangle};
