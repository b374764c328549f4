//! Rational (a,b) parking functions: threshold vectors, the +1 shift to the
//! u-form, and labelled lattice paths.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::{is_u_parking, parse_csv, write_csv, PFSeq, ThresholdVector};
use crate::algebra::{int, rat};
use crate::error::{Error, Result};

/// `u_{i+1} = 1 + floor(i a / b)` for `i = 0..len`.
pub fn ab_threshold_vector(a: u64, b: u64, len: usize) -> ThresholdVector {
    assert!(b > 0, "b must be positive");
    let u = (0..len as u64)
        .map(|i| int((1 + i * a / b) as i64))
        .collect();
    ThresholdVector::new(u).expect("floor thresholds are nondecreasing")
}

/// Prefix sums of the periodic weight vector
/// `(1, h, ..., h, 1 + h, h, ..., h, 1 + h, ...)` with `h = (a-1)/b`, of
/// length `k b`: `u_{m+1} = 1 + m h + floor(m / b)`.
pub fn periodic_threshold_vector(a: u64, b: u64, k: u64) -> ThresholdVector {
    assert!(a > 0 && b > 0, "a and b must be positive");
    let h = rat(a as i64 - 1, b as i64);
    let u = (0..k * b)
        .map(|m| int(1 + (m / b) as i64) + &h * int(m as i64))
        .collect();
    ThresholdVector::new(u).expect("periodic thresholds are nondecreasing")
}

/// `(1 x b, 2 x b, ..., d x b)`: the thresholds `1 + floor(i / b)`.
pub fn block_threshold_vector(b: u64, d: u64) -> ThresholdVector {
    assert!(b > 0, "b must be positive");
    let u = (0..d * b).map(|i| int((1 + i / b) as i64)).collect();
    ThresholdVector::new(u).expect("block thresholds are nondecreasing")
}

/// 0-indexed (a,b)-parking sequence: entry `i` is the height of the E-step
/// labelled `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ABParkingSeq(Vec<u32>);

impl ABParkingSeq {
    pub fn new(entries: Vec<u32>) -> Self {
        ABParkingSeq(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ABParkingSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for ABParkingSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(ABParkingSeq(parse_csv(s)?))
    }
}

pub fn ab_to_u_pf(c: &ABParkingSeq) -> PFSeq {
    PFSeq(c.0.iter().map(|&e| e + 1).collect())
}

pub fn u_pf_to_ab(c: &PFSeq) -> ABParkingSeq {
    ABParkingSeq(c.entries().iter().map(|&e| e - 1).collect())
}

/// True iff `c` (of length `b`) encodes a path weakly below `y = (a/b) x`.
/// For the non-coprime case pass the scaled pair `(ka, kb)`.
pub fn is_ab_parking(c: &ABParkingSeq, a: u64, b: u64) -> Result<bool> {
    if c.len() as u64 != b {
        return Err(Error::LengthMismatch {
            expected: b as usize,
            found: c.len(),
        });
    }
    is_u_parking(&ab_to_u_pf(c), &ab_threshold_vector(a, b, c.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East(usize),
}

/// A North/East lattice path whose E-steps carry labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Heights of the E-steps in path order, with their labels.
    pub fn east_steps(&self) -> Vec<(u32, usize)> {
        let mut h = 0;
        let mut out = Vec::new();
        for s in &self.steps {
            match *s {
                Step::North => h += 1,
                Step::East(l) => out.push((h, l)),
            }
        }
        out
    }

    /// Reads the height of each label back out. Labels must be a permutation
    /// of `0..#E` and increase along every run of consecutive E-steps.
    pub fn to_parking(&self) -> Result<ABParkingSeq> {
        let east = self.east_steps();
        let mut heights = vec![None; east.len()];
        for &(h, l) in &east {
            match heights.get_mut(l) {
                Some(slot @ None) => *slot = Some(h),
                _ => {
                    return Err(Error::NotAParkingFunction(format!(
                        "label {l} is repeated or out of range"
                    )))
                }
            }
        }
        for w in east.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 > w[1].1 {
                return Err(Error::NotAParkingFunction(
                    "labels must increase along consecutive E-steps".into(),
                ));
            }
        }
        Ok(ABParkingSeq(
            heights.into_iter().map(Option::unwrap).collect(),
        ))
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.steps.len().saturating_sub(1);
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::East(l) => write!(f, "E[{l}]")?,
                Step::North if i < last => f.write_str("N ")?,
                Step::North => f.write_str("N")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in path `{s}`"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut steps = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                'N' => {
                    steps.push(Step::North);
                    i += 1;
                }
                'E' => {
                    if chars.get(i + 1) != Some(&'[') {
                        return Err(bad("expected `[` after E"));
                    }
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == ']')
                        .ok_or_else(|| bad("unclosed label"))?
                        + i;
                    let label: String = chars[i + 2..close].iter().collect();
                    let label = label.parse().map_err(|_| bad("invalid label"))?;
                    steps.push(Step::East(label));
                    i = close + 1;
                }
                c => return Err(bad(&format!("unexpected `{c}`"))),
            }
        }
        Ok(LatticePath { steps })
    }
}

/// The labelled (a,b)-Dyck path of `c`: E-steps sorted by height, ties broken
/// by increasing label, then North steps up to height `a`.
pub fn dyck_path_of(c: &ABParkingSeq, a: u64, b: u64) -> Result<LatticePath> {
    if !is_ab_parking(c, a, b)? {
        return Err(Error::NotAParkingFunction(format!(
            "{c} is not a ({a},{b})-parking function"
        )));
    }
    let mut order: Vec<(u32, usize)> = c.0.iter().enumerate().map(|(l, &h)| (h, l)).collect();
    order.sort_unstable();
    let mut steps = Vec::with_capacity(c.len() + a as usize);
    let mut h = 0u32;
    for (height, label) in order {
        while h < height {
            steps.push(Step::North);
            h += 1;
        }
        steps.push(Step::East(label));
    }
    while (h as u64) < a {
        steps.push(Step::North);
        h += 1;
    }
    Ok(LatticePath { steps })
}

pub(crate) fn check_coprime(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        Err(Error::GcdViolation { a, b })
    } else {
        Ok(())
    }
}
