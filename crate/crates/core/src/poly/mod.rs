//! Exact polynomial and truncated power-series arithmetic.

mod bracket;
mod coeff;
mod gamma;
mod monomial;
mod multipoly;
mod series;
mod var;

pub use bracket::{bracket_in, pq_binomial, pq_bracket, pq_bracket1, pq_int, qp_bracket1};
pub use coeff::Coeff;
pub use gamma::{gamma_extract, gamma_extract_with, GammaExpansion};
pub use monomial::Monomial;
pub use multipoly::{poly_from_histogram, MultiPoly};
pub use series::{series_invert, PowerSeries};
pub use var::VarId;
