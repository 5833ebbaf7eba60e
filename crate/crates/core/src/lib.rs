//! Exact enumeration engine for even-odd descent permutations, their
//! statistics, continued-fraction generating functions, path-diagram
//! bijections and the group actions that prove gamma-positivity.

pub mod action;
pub mod cf;
pub mod error;
pub mod family;
pub mod path;
pub mod perm;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Permutation, Stat, StatVector};
pub use poly::{Coeff, Monomial, MultiPoly, PowerSeries, VarId};

use num_bigint::BigInt;

/// Polynomials with arbitrary-precision integer coefficients.
pub type Poly = poly::MultiPoly<BigInt>;
/// Truncated power series over [`Poly`].
pub type Series = poly::PowerSeries<BigInt>;
/// Gamma expansion over [`Poly`].
pub type Gamma = poly::GammaExpansion<BigInt>;
