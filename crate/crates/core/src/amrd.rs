//! Single-error-correcting AMRD codes from a 3-row parity-check condition.
//!
//! A 3 x n parity-check matrix H of rank 3 defines an [n, n-3] code with
//! minimum rank distance >= 3 provided that for every admissible pair of
//! nonempty column subsets (P1, P2), the two column-sum vectors of H over P1
//! and P2 are independent over GF(2^N), i.e. the 2 x 3 matrix they form has
//! rank 2 (some 2 x 2 minor is nonzero). When the condition fails, the
//! failing pair converts directly into a nonzero codeword of rank at most 2.

use alloc::vec;
use num_bigint::BigUint;

use crate::code::{FieldMatrix, LinearRdCode};
use crate::error::{Error, Result};
use crate::gf2::RankVector;
use crate::rank_metric::{hamming_ball_count, sphere_volume};

/// Which subset pairs the condition quantifies over. The construction's
/// soundness argument produces disjoint supports, so `Disjoint` is the
/// default; `Distinct` additionally checks overlapping pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubsetMode {
    #[default]
    Disjoint,
    Distinct,
}

/// Outcome of the condition check over all admissible subset pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    /// First failing pair in enumeration order, as column bit masks.
    pub violating_pair: Option<(u32, u32)>,
    pub pairs_checked: u64,
}

/// Checks the column-sum independence condition on a 3 x n matrix of rank 3.
///
/// Pairs are enumerated unordered (the criterion is symmetric) and in
/// deterministic ascending mask order, so a failing report always carries
/// the same witness.
pub fn single_error_condition(h: &FieldMatrix, mode: SubsetMode) -> Result<ConditionReport> {
    let ctx = h.context();
    let n = h.cols();
    if h.rows() != 3 {
        return Err(Error::ShapeMismatch { expected: 3, got: h.rows() });
    }
    if n > ctx.degree() {
        return Err(Error::LengthExceedsDegree { len: n, degree: ctx.degree() });
    }
    if h.rank() != 3 {
        return Err(Error::RankDeficient { expected: 3, got: h.rank() });
    }
    // column sums over every nonempty subset, indexed by mask
    let total = 1u32 << n;
    let mut sums = vec![[0u16; 3]; total as usize];
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let prev = sums[(mask & (mask - 1)) as usize];
        for (row, slot) in sums[mask as usize].iter_mut().enumerate() {
            *slot = prev[row] ^ h.bits_at(row, low);
        }
    }
    let mut pairs_checked = 0u64;
    for first in 1..total {
        for second in (first + 1)..total {
            if matches!(mode, SubsetMode::Disjoint) && first & second != 0 {
                continue;
            }
            pairs_checked += 1;
            let s1 = &sums[first as usize];
            let s2 = &sums[second as usize];
            // rank 2 over the field <=> some 2x2 minor is nonzero
            let independent = (0..3).any(|i| {
                (i + 1..3).any(|j| ctx.mul_bits(s1[i], s2[j]) != ctx.mul_bits(s1[j], s2[i]))
            });
            if !independent {
                return Ok(ConditionReport {
                    holds: false,
                    violating_pair: Some((first, second)),
                    pairs_checked,
                });
            }
        }
    }
    Ok(ConditionReport { holds: true, violating_pair: None, pairs_checked })
}

/// Builds the [n, n-3] single-error-correcting AMRD code from a parity-check
/// matrix that passes [`single_error_condition`].
pub fn build_single_error_code(h: &FieldMatrix, mode: SubsetMode) -> Result<LinearRdCode> {
    let report = single_error_condition(h, mode)?;
    if !report.holds {
        return Err(Error::ConditionFailed);
    }
    LinearRdCode::from_parity(h)
}

/// Converts a failing subset pair into a nonzero codeword of rank at most 2:
/// the codeword y1 * 1_(P1) + y2 * 1_(P2) where (y1, y2) spans the left null
/// space of the 2 x 3 column-sum matrix.
pub fn witness_codeword(h: &FieldMatrix, pair: (u32, u32)) -> Result<RankVector> {
    let ctx = h.context();
    let n = h.cols();
    let (p1, p2) = pair;
    if p1 == 0 || p2 == 0 || p1 >> n != 0 || p2 >> n != 0 {
        return Err(Error::InvalidParameter("subset masks must be nonempty column sets"));
    }
    let mut s1 = [0u16; 3];
    let mut s2 = [0u16; 3];
    for j in 0..n {
        for row in 0..3 {
            if p1 >> j & 1 != 0 {
                s1[row] ^= h.bits_at(row, j);
            }
            if p2 >> j & 1 != 0 {
                s2[row] ^= h.bits_at(row, j);
            }
        }
    }
    // find nonzero (y1, y2) with y1 s1 + y2 s2 = 0
    let (y1, y2) = if s1 == [0, 0, 0] {
        (1u16, 0u16)
    } else if s2 == [0, 0, 0] {
        (0, 1)
    } else {
        // rows proportional: s2 = lambda s1 with lambda = s2_i / s1_i at any
        // nonzero coordinate of s1
        let i = (0..3).find(|&i| s1[i] != 0).expect("s1 nonzero");
        let lambda = ctx.mul_bits(s2[i], ctx.inv_bits(s1[i])?);
        debug_assert!(
            (0..3).all(|j| ctx.mul_bits(lambda, s1[j]) == s2[j]),
            "pair must be a failing witness"
        );
        (lambda, 1)
    };
    let mut coords = vec![0u16; n];
    for (j, coord) in coords.iter_mut().enumerate() {
        if p1 >> j & 1 != 0 {
            *coord ^= y1;
        }
        if p2 >> j & 1 != 0 {
            *coord ^= y2;
        }
    }
    RankVector::from_bits(ctx, coords)
}

/// Number of error vectors corrected per codeword at radius r = (n-k-1)/2,
/// in the rank metric versus the Hamming metric over the same alphabet.
/// Requires n - k odd. The rank count dominates.
pub fn rank_vs_hamming_counts(n: usize, k: usize, ext_degree: usize) -> Result<(BigUint, BigUint)> {
    if k >= n {
        return Err(Error::InvalidParameter("need k < n"));
    }
    if (n - k).is_multiple_of(2) {
        return Err(Error::InvalidParameter("n - k must be odd"));
    }
    let r = (n - k - 1) / 2;
    let rank_ball = sphere_volume(n as u64, r as u64, ext_degree as u64, 2);
    let hamming_ball = hamming_ball_count(n as u64, r as u64, ext_degree as u64);
    debug_assert!(rank_ball >= hamming_ball);
    Ok((rank_ball, hamming_ball))
}
