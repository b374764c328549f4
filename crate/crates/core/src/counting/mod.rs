//! Closed-form counts and the independent routes used to cross-check them.

mod combinatorics;
mod identities;
mod periodic;
mod qpoly;
mod series;

pub use combinatorics::{
    binomial, compositions, factorial, multinomial, spec_compositions, weak_compositions,
    SpecComposition,
};
pub use identities::{abel_identity_sides, abel_uniform_sides};
pub use periodic::{
    check_scaling, count_basic, count_periodic_egf, count_periodic_grammar,
    count_periodic_grammar_normalized, count_periodic_scaled, count_periodic_specsum,
    count_rational, count_u_incl_excl, periodic_grammar_value,
};
pub use qpoly::{
    q_basic, q_block_thresholds, q_bruteforce, q_classical, q_periodic, q_unit_head, QPolynomial,
    Q_VAR,
};
pub use series::exp_truncated;
