//! Splitting a periodic parking function of length `k b` into `k` basic
//! blocks, and shifting each block back to the weight vector
//! `x* = (1, h, ..., h)` with `h = (a-1)/b`.
//!
//! On the sorted entries `s_(1) <= ... <= s_(kb)` block `t` starts at sorted
//! index `S = j_1 + ... + j_{t-1}` with offset `o_t = (t-1) + S h` and takes
//! the longest run satisfying `s_(S+i+1) <= o_t + 1 + i h`. The parking
//! condition forces each run to end at a strict value gap, so blocks are
//! value ranges and tied entries never straddle a boundary.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::dyck::{check_coprime, periodic_threshold_vector};
use super::{is_u_parking, is_x_parking, PFSeq, WeightVector};
use crate::algebra::{format_rational, int, rat, Rational};
use crate::counting::SpecComposition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Entries of each block, in their original relative order.
    pub blocks: Vec<PFSeq>,
    pub lengths: SpecComposition,
    /// 0-based indices into the input drawn by each block, ascending.
    pub positions: Vec<Vec<usize>>,
}

fn value(e: u32) -> Rational {
    Rational::from_integer(BigInt::from(e))
}

/// Greedy block extraction for a sequence of length `k b` that parks under
/// [`periodic_threshold_vector`]`(a, b, k)`. When `a = 1 (mod b)` those
/// thresholds coincide with the (ka,kb) ones.
pub fn decompose_blocks(c: &PFSeq, a: u64, b: u64, k: u64) -> Result<BlockDecomposition> {
    check_coprime(a, b)?;
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    let u = periodic_threshold_vector(a, b, k);
    if !is_u_parking(c, &u)? {
        return Err(Error::NotAParkingFunction(format!(
            "{c} does not park under {u}"
        )));
    }
    let h = rat(a as i64 - 1, b as i64);

    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by_key(|&i| (c.entries()[i], i));
    let sorted: Vec<Rational> = order.iter().map(|&i| value(c.entries()[i])).collect();

    let mut lengths = Vec::with_capacity(k as usize);
    let mut positions = Vec::with_capacity(k as usize);
    let mut start = 0usize;
    for t in 1..=k {
        let offset = int(t as i64 - 1) + &h * int(start as i64);
        let mut len = 0usize;
        while start + len < sorted.len()
            && sorted[start + len] <= &offset + int(1) + &h * int(len as i64)
        {
            len += 1;
        }
        let mut pos: Vec<usize> = order[start..start + len].to_vec();
        pos.sort_unstable();
        positions.push(pos);
        lengths.push(len as u64);
        start += len;
    }
    if start != c.len() {
        return Err(Error::NotAParkingFunction(format!(
            "{} entries left after {k} blocks",
            c.len() - start
        )));
    }
    let lengths = SpecComposition::new(lengths, b)?;
    let blocks = positions
        .iter()
        .map(|pos| PFSeq(pos.iter().map(|&i| c.entries()[i]).collect()))
        .collect();
    Ok(BlockDecomposition {
        blocks,
        lengths,
        positions,
    })
}

/// Subtracts `(t-1) + prefix_len * (a-1)/b` from every entry of block `t`,
/// where `prefix_len = j_1 + ... + j_{t-1}`.
pub fn normalize_block(block: &PFSeq, t: u64, prefix_len: u64, a: u64, b: u64) -> Result<PFSeq> {
    if t == 0 {
        return Err(Error::BadParameter("block index t starts at 1".into()));
    }
    let shift = int(t as i64 - 1) + rat(a as i64 - 1, b as i64) * int(prefix_len as i64);
    let mut out = Vec::with_capacity(block.len());
    for &e in block.entries() {
        let d = value(e) - &shift;
        if !d.is_integer() || !d.is_positive() {
            return Err(Error::NonIntegralShift(format_rational(&shift)));
        }
        out.push(
            d.to_integer()
                .to_u32()
                .ok_or_else(|| Error::NonIntegralShift(format_rational(&shift)))?,
        );
    }
    Ok(PFSeq(out))
}

/// `x* = (1, (a-1)/b, ..., (a-1)/b)` of length `len`.
pub fn basic_block_weights(a: u64, b: u64, len: usize) -> WeightVector {
    WeightVector::basic(int(1), rat(a as i64 - 1, b as i64), len).expect("valid basic weights")
}

/// Normalises every block of `d` and checks it against `x*`.
pub fn blocks_are_basic(d: &BlockDecomposition, a: u64, b: u64) -> Result<bool> {
    let mut prefix = 0u64;
    for (t, (block, &len)) in d.blocks.iter().zip(d.lengths.parts()).enumerate() {
        let norm = normalize_block(block, t as u64 + 1, prefix, a, b)?;
        if !is_x_parking(&norm, &basic_block_weights(a, b, norm.len()))? {
            return Ok(false);
        }
        prefix += len;
    }
    Ok(true)
}
