use std::fmt;
use std::str::FromStr;

use super::Grammar;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The named grammars the library ships with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrammarName {
    /// Rooted trees: `A -> A^3 S`, `S -> A S^2`.
    G,
    /// Rooted trees with a distinguished root: `z -> z x y`, `x -> x y w`,
    /// `y -> y^3 w`, `w -> y w^2`.
    H,
    /// `k` copies of `z`, `x` sharing `y` and `w`.
    HPrime(u32),
    /// `H` with `a` root colours `x1..xa` and `b` edge colours `w1..wb`.
    H1(u32, u32),
    /// `k` independent copies of `H` with tree counters `t1..tk`.
    K(u32),
    /// Faà di Bruno: `f_i -> f_{i+1} g_1`, `g_i -> i g_{i+1}`.
    F,
}

impl fmt::Display for GrammarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarName::G => f.write_str("G"),
            GrammarName::H => f.write_str("H"),
            GrammarName::HPrime(k) => write!(f, "Hprime:{k}"),
            GrammarName::H1(a, b) => write!(f, "H1:{a}:{b}"),
            GrammarName::K(k) => write!(f, "K:{k}"),
            GrammarName::F => f.write_str("F"),
        }
    }
}

impl FromStr for GrammarName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| -> Result<u32> {
            t.parse()
                .map_err(|_| Error::BadParameter(format!("`{t}` in grammar name `{s}`")))
        };
        match parts.as_slice() {
            ["G"] => Ok(GrammarName::G),
            ["H"] => Ok(GrammarName::H),
            ["F"] => Ok(GrammarName::F),
            ["Hprime", k] => Ok(GrammarName::HPrime(num(k)?)),
            ["H1", a, b] => Ok(GrammarName::H1(num(a)?, num(b)?)),
            ["K", k] => Ok(GrammarName::K(num(k)?)),
            _ => Err(Error::UnknownGrammar(s.to_string())),
        }
    }
}

fn positive(what: &str, v: u32) -> Result<()> {
    if v == 0 {
        Err(Error::BadParameter(format!("{what} must be >= 1")))
    } else {
        Ok(())
    }
}

fn join_sum(prefix: &str, n: u32) -> String {
    let parts: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    format!("({})", parts.join(" + "))
}

/// Builds a named grammar. `F` is materialised up to the default derivative
/// cap; use [`faa_di_bruno_grammar`] for other orders.
pub fn builtin_grammar(name: &GrammarName) -> Result<Grammar> {
    let text = match *name {
        GrammarName::G => "A -> A^3*S\nS -> A*S^2".to_string(),
        GrammarName::H => "z -> z*x*y\nx -> x*y*w\ny -> y^3*w\nw -> y*w^2".to_string(),
        GrammarName::HPrime(k) => {
            positive("k", k)?;
            let mut t = String::from("y -> y^3*w\nw -> y*w^2\n");
            for i in 1..=k {
                t += &format!("z{i} -> z{i}*x{i}*y\nx{i} -> x{i}*y*w\n");
            }
            t
        }
        GrammarName::H1(a, b) => {
            positive("a", a)?;
            positive("b", b)?;
            let xs = join_sum("x", a);
            let ws = join_sum("w", b);
            let mut t = format!("z -> z*{xs}*y\ny -> y^3*{ws}\n");
            for i in 1..=a {
                t += &format!("x{i} -> x{i}*y*{ws}\n");
            }
            for j in 1..=b {
                t += &format!("w{j} -> w{j}*y*{ws}\n");
            }
            t
        }
        GrammarName::K(k) => {
            positive("k", k)?;
            let mut t = String::new();
            for i in 1..=k {
                t += &format!(
                    "z{i} -> z{i}*x{i}*y{i}*t{i}\n\
                     x{i} -> x{i}*y{i}*w{i}*t{i}\n\
                     y{i} -> y{i}^3*w{i}*t{i}\n\
                     w{i} -> y{i}*w{i}^2*t{i}\n\
                     t{i} -> 0\n"
                );
            }
            t
        }
        GrammarName::F => return Ok(faa_di_bruno_grammar(Limits::DEFAULT.max_order)),
    };
    Grammar::parse(&text)
}

/// Faà di Bruno rules with every index reachable within `order` derivatives
/// of `f0`: `f0..f{order-1}` and `g1..g{order-1}`.
pub fn faa_di_bruno_grammar(order: usize) -> Grammar {
    let mut t = String::new();
    for i in 0..order {
        t += &format!("f{i} -> f{}*g1\n", i + 1);
        if i >= 1 {
            t += &format!("g{i} -> {i}*g{}\n", i + 1);
        }
    }
    Grammar::parse(&t).expect("generated grammar parses")
}
