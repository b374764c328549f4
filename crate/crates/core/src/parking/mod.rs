//! Parking-function objects, membership tests and brute-force enumeration.
//!
//! Internally every sequence is 1-indexed: entries are positive integers and
//! a sequence `c` parks under thresholds `u` when the `i`-th smallest entry
//! is at most `u_i`. The 0-indexed (a,b) form is converted at the boundary.

mod blocks;
mod dyck;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::algebra::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub use blocks::{
    basic_block_weights, blocks_are_basic, decompose_blocks, normalize_block, BlockDecomposition,
};
pub(crate) use dyck::check_coprime;
pub use dyck::{
    ab_threshold_vector, ab_to_u_pf, block_threshold_vector, dyck_path_of, is_ab_parking,
    periodic_threshold_vector, u_pf_to_ab, ABParkingSeq, LatticePath, Step,
};

/// A sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PFSeq(Vec<u32>);

impl PFSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e == 0) {
            return Err(Error::EntryOutOfRange {
                entry: bad,
                max: u32::MAX,
            });
        }
        Ok(PFSeq(entries))
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

    pub fn sorted(&self) -> Vec<u32> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s
    }
}

impl fmt::Display for PFSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for PFSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PFSeq::new(parse_csv(s)?)
    }
}

pub(crate) fn write_csv(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_csv(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid entry `{t}` in `{s}`")))
        })
        .collect()
}

/// Nondecreasing rational thresholds `u_1 <= ... <= u_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ThresholdVector(Vec<Rational>);

impl ThresholdVector {
    pub fn new(u: Vec<Rational>) -> Result<Self> {
        if u.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadParameter(
                "thresholds must be nondecreasing".into(),
            ));
        }
        Ok(ThresholdVector(u))
    }

    pub fn from_integers(u: &[i64]) -> Result<Self> {
        Self::new(u.iter().map(|&x| int(x)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `floor(u_i)`, saturated into `i64`.
    fn floors(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|r| {
                r.floor()
                    .to_integer()
                    .to_i64()
                    .unwrap_or(if r.is_negative() { i64::MIN } else { i64::MAX })
            })
            .collect()
    }
}

impl fmt::Display for ThresholdVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ThresholdVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ThresholdVector::new(parse_rational_csv(s)?)
    }
}

pub fn parse_rational_csv(s: &str) -> Result<Vec<Rational>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Weights `x = (x_1, ..., x_n)` with `x_1 >= 1` and positive prefix sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        if let Some(first) = x.first() {
            if *first < int(1) {
                return Err(Error::BadParameter("x_1 must be >= 1".into()));
            }
        }
        let mut acc = int(0);
        for xi in &x {
            acc += xi;
            if !acc.is_positive() {
                return Err(Error::BadParameter(
                    "prefix sums of x must be positive".into(),
                ));
            }
        }
        Ok(WeightVector(x))
    }

    /// `(alpha, beta, ..., beta)` of length `n`.
    pub fn basic(alpha: Rational, beta: Rational, n: usize) -> Result<Self> {
        let mut x = vec![beta; n];
        if let Some(first) = x.first_mut() {
            *first = alpha;
        }
        Self::new(x)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix_sums(&self) -> Vec<Rational> {
        let mut acc = int(0);
        self.0
            .iter()
            .map(|xi| {
                acc += xi;
                acc.clone()
            })
            .collect()
    }

    /// Prefix sums as a threshold vector (needs nonnegative `x_2, ..., x_n`).
    pub fn thresholds(&self) -> Result<ThresholdVector> {
        ThresholdVector::new(self.prefix_sums())
    }
}

fn parks_sorted(sorted: &[u32], bounds: &[Rational]) -> bool {
    sorted
        .iter()
        .zip(bounds)
        .all(|(&c, u)| Rational::from_integer(BigInt::from(c)) <= *u)
}

/// True iff the nondecreasing rearrangement of `c` satisfies `c_(i) <= u_i`.
pub fn is_u_parking(c: &PFSeq, u: &ThresholdVector) -> Result<bool> {
    if c.len() != u.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: c.len(),
        });
    }
    Ok(parks_sorted(&c.sorted(), u.values()))
}

/// True iff `c` parks under the prefix sums of `x`.
pub fn is_x_parking(c: &PFSeq, x: &WeightVector) -> Result<bool> {
    if c.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: c.len(),
        });
    }
    Ok(parks_sorted(&c.sorted(), &x.prefix_sums()))
}

/// All u-parking functions in lexicographic order.
///
/// Depth-first over entry values; a prefix is extended only if padding it
/// with ones still parks, so every visited leaf is an answer.
pub fn enumerate_u_parking(u: &ThresholdVector, limits: &Limits) -> Result<Vec<PFSeq>> {
    let n = u.len();
    if n > limits.max_enum_len {
        return Err(Error::TooLarge {
            len: n,
            cap: limits.max_enum_len,
        });
    }
    let floors = u.floors();
    let mut out = Vec::new();
    let Some(&top) = floors.last() else {
        out.push(PFSeq::default());
        return Ok(out);
    };
    if top < 1 {
        return Ok(out);
    }
    let max = top.min(u32::MAX as i64) as u32;
    let mut prefix = Vec::with_capacity(n);
    extend(&mut prefix, n, max, &floors, &mut out);
    Ok(out)
}

fn completable(prefix: &[u32], n: usize, floors: &[i64]) -> bool {
    let mut s = Vec::with_capacity(n);
    s.extend(std::iter::repeat_n(1, n - prefix.len()));
    s.extend_from_slice(prefix);
    s.sort_unstable();
    s.iter().zip(floors).all(|(&c, &f)| (c as i64) <= f)
}

fn extend(prefix: &mut Vec<u32>, n: usize, max: u32, floors: &[i64], out: &mut Vec<PFSeq>) {
    if prefix.len() == n {
        out.push(PFSeq(prefix.clone()));
        return;
    }
    for v in 1..=max {
        prefix.push(v);
        if completable(prefix, n, floors) {
            extend(prefix, n, max, floors, out);
            prefix.pop();
        } else {
            // larger values only make the padded prefix worse
            prefix.pop();
            break;
        }
    }
}

/// Multiplicities `(j_1, ..., j_m)` of the values `1..=m` in `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Specification(Vec<usize>);

impl Specification {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

pub fn specification(c: &PFSeq, m: u32) -> Result<Specification> {
    let mut counts = vec![0usize; m as usize];
    for &e in c.entries() {
        if e > m {
            return Err(Error::EntryOutOfRange { entry: e, max: m });
        }
        counts[e as usize - 1] += 1;
    }
    Ok(Specification(counts))
}

/// Number of entries equal to 1.
pub fn ones_count(c: &PFSeq) -> usize {
    c.entries().iter().filter(|&&e| e == 1).count()
}
