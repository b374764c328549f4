//! Grammar calculus and exact enumeration for vector and rational parking
//! functions.
//!
//! - [`algebra`]: exact rationals and sparse Laurent polynomials.
//! - [`grammar`]: the formal derivative induced by substitution rules.
//! - [`parking`]: u-, x- and (a,b)-parking functions, lattice paths and block
//!   decompositions.
//! - [`counting`]: closed forms, inclusion-exclusion, Abel identities and
//!   q-polynomials.

pub mod algebra;
pub mod counting;
pub mod error;
pub mod grammar;
pub mod limits;
pub mod parking;

pub use algebra::{Polynomial, Rational, Var};
pub use error::{Error, Result};
pub use grammar::Grammar;
pub use limits::Limits;
