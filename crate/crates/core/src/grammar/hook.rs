use num_traits::{One, Zero};

use crate::algebra::{Monomial, MonomialFunctional, Rational, Var};

/// Evaluates the tree counters of grammar `K` with the step function: a
/// monomial with counter exponents `(j1, ..., jk)` gets weight 1 iff every
/// prefix sum `(j1 - b) + ... + (ji - b)` is nonnegative, else 0.
#[derive(Debug, Clone)]
pub struct SpecStepFunctional {
    b: i64,
    counters: Vec<Var>,
}

impl SpecStepFunctional {
    pub fn new(b: i64, counters: Vec<Var>) -> Self {
        SpecStepFunctional { b, counters }
    }

    /// Counters `t1..tk`, as used by grammar `K(k)`.
    pub fn for_k(b: i64, k: u32) -> Self {
        Self::new(b, (1..=k).map(|i| Var::new(&format!("t{i}"))).collect())
    }

    pub fn counters(&self) -> &[Var] {
        &self.counters
    }
}

fn step(x: i64) -> bool {
    x >= 0
}

impl MonomialFunctional for SpecStepFunctional {
    fn consumes(&self, var: &Var) -> bool {
        self.counters.contains(var)
    }

    fn weight(&self, monomial: &Monomial) -> Rational {
        let mut prefix = 0i64;
        for t in &self.counters {
            prefix += monomial.exponent(t) - self.b;
            if !step(prefix) {
                return Rational::zero();
            }
        }
        Rational::one()
    }
}
