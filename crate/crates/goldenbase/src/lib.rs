//! Golden-ratio-base series expansions of logarithms and inverse tangents
//! of Fibonacci and Lucas numbers.
//!
//! The library works with degree-1 series of the form
//!
//! ```text
//! C = sum_{k>=0} alpha^{-pk} sum_{j=1}^{n} a_j / (nk + j)
//! ```
//!
//! where `alpha = (1+sqrt5)/2` and the coefficients `a_j` live in the
//! quadratic field Q(sqrt5). Expansions are constructed exactly
//! ([`catalog`]), manipulated symbolically ([`pseries`]) and evaluated
//! rigorously with interval enclosures ([`bignum`]).

pub mod bignum;
pub mod catalog;
pub mod cli;
pub mod exactfield;
pub mod expr;
pub mod pseries;

pub use cli::run;
