//! Exact evaluation of Bell polynomials and the number families that appear
//! in closed forms for them, with a verifier that checks such identities
//! over rational arithmetic with no tolerance.
//!
//! The layers build on one another:
//!
//! - [`arith`]: [`Rational`] plus factorials, Pochhammer symbols, binomials
//! - [`series`]: truncated power series with `exp`, `log`, `pow`, composition
//! - [`sequences`]: Bernoulli, Euler, Catalan, central factorial numbers,
//!   generalized Bernoulli and Euler polynomials
//! - [`bell`]: partial and complete Bell polynomials, Faà di Bruno
//! - [`identities`]: both sides of each identity and the verification reports
//! - [`cli`]: the `bellcheck` command line front end

pub mod arith;
pub mod bell;
pub mod cli;
pub mod identities;
pub mod sequences;
pub mod series;

pub use arith::{ArithError, Rational};
pub use bell::{ArgSequence, BellError, PartitionVector};
pub use series::{Reindex, SeriesError, TruncatedSeries};
