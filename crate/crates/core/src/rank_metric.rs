//! The rank norm, rank distance, and counting formulas for rank spaces.
//!
//! Counts are exact big integers: the ambient space V^n over GF(2^N) has
//! q^(Nn) points, which overflows machine words almost immediately. The
//! formulas keep q as a parameter even though runtime vectors are always
//! over characteristic 2.

use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::error::Result;
use crate::gf2::RankVector;

/// Rank norm r(x): GF(2)-rank of the coefficient expansion of x.
pub fn rank_norm(x: &RankVector) -> usize {
    let degree = x.context().degree();
    // columns and rows have equal rank; eliminate on the n coordinate words
    let mut rows: Vec<u64> = x.coord_bits().iter().map(|&c| c as u64).collect();
    debug_assert!(degree <= 64);
    crate::gf2::rank_of_words(&mut rows)
}

/// Rank distance d_R(x, y) = r(x - y) = r(x + y).
pub fn rank_distance(x: &RankVector, y: &RankVector) -> Result<usize> {
    Ok(rank_norm(&x.add(y)?))
}

/// Gaussian binomial [n m]_q, the number of m-dimensional subspaces of an
/// n-dimensional space over F_q. Zero when m > n.
pub fn gaussian_binomial(n: u64, m: u64, q: u64) -> BigUint {
    if m > n {
        return BigUint::ZERO;
    }
    let q = BigUint::from(q);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..m {
        num *= q.pow(n as u32) - q.pow(i as u32);
        den *= q.pow(m as u32) - q.pow(i as u32);
    }
    debug_assert!((&num % &den) == BigUint::ZERO);
    num / den
}

/// L_i(n): the number of vectors of rank exactly i in V^n over F_(q^N).
///
/// Counts N x n matrices of rank i over F_q:
/// [n i]_q * prod_(j=0..i-1) (q^N - q^j).
pub fn count_rank_exactly(n: u64, i: u64, ext_degree: u64, q: u64) -> BigUint {
    if i > n || i > ext_degree {
        return BigUint::ZERO;
    }
    let q_big = BigUint::from(q);
    let mut out = gaussian_binomial(n, i, q);
    for j in 0..i {
        out *= q_big.pow(ext_degree as u32) - q_big.pow(j as u32);
    }
    out
}

/// V(n, t): the volume of a rank-metric ball of radius t,
/// sum_(i=0..t) L_i(n).
pub fn sphere_volume(n: u64, t: u64, ext_degree: u64, q: u64) -> BigUint {
    let mut total = BigUint::ZERO;
    for i in 0..=t.min(n).min(ext_degree) {
        total += count_rank_exactly(n, i, ext_degree, q);
    }
    total
}

/// Number of vectors of Hamming weight at most r in V^n over GF(2^N):
/// sum_(i=0..r) C(n, i) (2^N - 1)^i.
pub fn hamming_ball_count(n: u64, r: u64, ext_degree: u64) -> BigUint {
    let nonzero = BigUint::from((1u64 << ext_degree) - 1);
    let mut total = BigUint::ZERO;
    for i in 0..=r.min(n) {
        total += binomial(n, i) * nonzero.pow(i as u32);
    }
    total
}

/// Ordinary binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut out = BigUint::from(1u32);
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// Binomial coefficient C(n, k) for big n.
pub fn binomial_big(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::ZERO;
    }
    let mut out = BigUint::from(1u32);
    for i in 0..k {
        out = out * (n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use alloc::vec;

    #[test]
    fn norm_zero_iff_zero() {
        let ctx = FieldContext::new(3, None).unwrap();
        for packed in 0..512u64 {
            let v = RankVector::from_packed(ctx, 3, packed);
            assert_eq!(rank_norm(&v) == 0, v.is_zero());
        }
    }

    #[test]
    fn norm_examples() {
        let ctx = FieldContext::new(4, None).unwrap();
        let repeated = RankVector::from_bits(ctx, vec![0b0110; 4]).unwrap();
        assert_eq!(rank_norm(&repeated), 1);
        let basis = RankVector::from_bits(ctx, vec![1, 2, 4, 8]).unwrap();
        assert_eq!(rank_norm(&basis), 4);
    }

    #[test]
    fn norm_axioms_exhaustive_gf8() {
        for n in [2usize, 3] {
            let ctx = FieldContext::new(3, None).unwrap();
            let total = 1u64 << (3 * n);
            for a in 0..total {
                let x = RankVector::from_packed(ctx, n, a);
                let rx = rank_norm(&x);
                assert!(rx <= n.min(3));
                assert!(rx <= x.hamming_weight());
                for b in 0..total {
                    let y = RankVector::from_packed(ctx, n, b);
                    let sum = x.add(&y).unwrap();
                    assert!(rank_norm(&sum) <= rx + rank_norm(&y));
                    assert_eq!(rank_distance(&x, &y).unwrap(), rank_distance(&y, &x).unwrap());
                }
                assert_eq!(rank_distance(&x, &x).unwrap(), 0);
                let zero = RankVector::zero(ctx, n);
                assert_eq!(rank_distance(&x, &zero).unwrap(), rx);
            }
        }
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 0, 2), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        for n in 0..=8u64 {
            for m in 0..=n {
                assert_eq!(gaussian_binomial(n, m, 2), gaussian_binomial(n, n - m, 2));
            }
        }
        assert_eq!(gaussian_binomial(3, 5, 2), BigUint::ZERO);
    }

    #[test]
    fn rank_counts_match_enumeration() {
        // brute-force oracle over all of V^3 for GF(2^3)
        let ctx = FieldContext::new(3, None).unwrap();
        let n = 3usize;
        let mut observed = [0u64; 4];
        for packed in 0..1u64 << 9 {
            let v = RankVector::from_packed(ctx, n, packed);
            observed[rank_norm(&v)] += 1;
        }
        for i in 0..=3u64 {
            assert_eq!(
                count_rank_exactly(n as u64, i, 3, 2),
                BigUint::from(observed[i as usize]),
                "rank level {i}"
            );
        }
    }

    #[test]
    fn rank_level_formulas() {
        // L_1(n) = (2^N - 1)(2^n - 1)
        for ext in 2..=6u64 {
            for n in 1..=ext {
                let expected = BigUint::from(((1u64 << ext) - 1) * ((1u64 << n) - 1));
                assert_eq!(count_rank_exactly(n, 1, ext, 2), expected);
            }
        }
        // L_2(4) = 35 (2^N - 1)(2^N - 2)
        for ext in 2..=8u64 {
            let w = (1u64 << ext) - 1;
            let expected = BigUint::from(35u64) * BigUint::from(w) * BigUint::from(w - 1);
            assert_eq!(count_rank_exactly(4, 2, ext, 2), expected);
        }
    }

    #[test]
    fn rank_counts_total_space() {
        for ext in 1..=6u64 {
            for n in 1..=ext {
                let mut total = BigUint::ZERO;
                for i in 0..=n.min(ext) {
                    total += count_rank_exactly(n, i, ext, 2);
                }
                assert_eq!(total, BigUint::from(2u32).pow((ext * n) as u32));
            }
        }
    }

    #[test]
    fn sphere_volume_values() {
        assert_eq!(sphere_volume(4, 0, 4, 2), BigUint::from(1u32));
        // 1 + L_1(4) = 1 + 15*15
        assert_eq!(sphere_volume(4, 1, 4, 2), BigUint::from(226u32));
        assert_eq!(sphere_volume(4, 4, 4, 2), BigUint::from(1u32 << 16));
        // monotone in t
        for t in 0..4u64 {
            assert!(sphere_volume(4, t, 4, 2) <= sphere_volume(4, t + 1, 4, 2));
        }
    }

    #[test]
    fn sphere_volume_matches_enumeration() {
        let ctx = FieldContext::new(4, None).unwrap();
        let count = (0..1u64 << 16)
            .filter(|&p| rank_norm(&RankVector::from_packed(ctx, 4, p)) <= 1)
            .count() as u64;
        assert_eq!(sphere_volume(4, 1, 4, 2), BigUint::from(count));
    }

    #[test]
    fn hamming_ball_values() {
        assert_eq!(hamming_ball_count(4, 0, 4), BigUint::from(1u32));
        assert_eq!(hamming_ball_count(4, 1, 4), BigUint::from(61u32));
        let ctx = FieldContext::new(4, None).unwrap();
        let count = (0..1u64 << 16)
            .filter(|&p| RankVector::from_packed(ctx, 4, p).hamming_weight() <= 1)
            .count() as u64;
        assert_eq!(hamming_ball_count(4, 1, 4), BigUint::from(count));
    }

    #[test]
    fn hamming_ball_within_rank_ball() {
        // weight <= r forces rank <= r, so the Hamming ball sits inside the
        // rank ball of equal radius
        for ext in 2..=5u64 {
            for n in 1..=ext {
                for r in 0..=n {
                    assert!(hamming_ball_count(n, r, ext) <= sphere_volume(n, r, ext, 2));
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(4, 5), BigUint::ZERO);
        assert_eq!(binomial_big(&BigUint::from(16u32), 2), BigUint::from(120u32));
    }
}
