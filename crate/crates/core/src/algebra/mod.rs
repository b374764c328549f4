//! Exact arithmetic: rationals and sparse Laurent polynomials.

mod json;
mod parse;
mod polynomial;
pub mod rational;

pub use parse::{is_identifier, parse_polynomial};
pub use polynomial::{
    Assignment, Monomial, MonomialFunctional, NeutralFunctional, Polynomial, Var,
};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
