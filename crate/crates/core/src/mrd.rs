//! Maximum rank distance codes from Frobenius generator matrices, and the
//! exact rank-weight spectrum of an MRD code.
//!
//! The generator row i holds the 2^i-th Frobenius powers of a fixed
//! GF(2)-independent generating vector; the resulting [n, k] code attains
//! d = n - k + 1. The spectrum is an alternating sum over Gaussian
//! binomials evaluated in exact signed big integers.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint, Sign};

use crate::code::{FieldMatrix, LinearRdCode};
use crate::error::{Error, Result};
use crate::field::{linearly_independent, FieldElement};
use crate::rank_metric::gaussian_binomial;

/// Builds the [n, k] code whose generator row i is the coordinatewise
/// 2^i-th power of `generators`. The generating vector must be linearly
/// independent over GF(2); the code is MRD.
pub fn gabidulin(generators: &[FieldElement], k: usize) -> Result<LinearRdCode> {
    if generators.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = generators.len();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter("dimension must satisfy 1 <= k <= n"));
    }
    if !linearly_independent(generators)? {
        return Err(Error::RankDeficient { expected: n, got: 0 });
    }
    let mut rows = Vec::with_capacity(k * n);
    for i in 0..k {
        for g in generators {
            rows.push(g.frobenius(i));
        }
    }
    LinearRdCode::new(FieldMatrix::from_elements(k, n, &rows)?)
}

/// Rank-weight spectrum A_0..A_n of an `[n, k]` MRD code over F_(q^N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumTable {
    pub n: usize,
    pub k: usize,
    /// Minimum distance n - k + 1.
    pub d: usize,
    pub q: u64,
    pub ext_degree: usize,
    /// `counts[s]` = number of codewords of rank s.
    pub counts: Vec<BigUint>,
}

impl SpectrumTable {
    /// Total number of codewords, Q^k.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Evaluates the MRD spectrum in closed form:
/// A_(d+m) = [n d+m] * sum_(j=0..m) (-1)^(m-j) [d+m d+j] q^((m-j)(m-j-1)/2) (Q^(j+1) - 1)
/// with Q = q^N, A_0 = 1, and zeros strictly between 0 and d.
pub fn mrd_spectrum(n: usize, k: usize, q: u64, ext_degree: usize) -> Result<SpectrumTable> {
    if k == 0 || k > n || n > ext_degree {
        return Err(Error::InvalidParameter("need 1 <= k <= n <= N"));
    }
    let d = n - k + 1;
    let q_big = BigInt::from(q);
    let big_q = q_big.pow(ext_degree as u32);
    let mut counts = vec![BigUint::ZERO; n + 1];
    counts[0] = BigUint::from(1u32);
    for m in 0..=(n - d) {
        let mut sum = BigInt::ZERO;
        for j in 0..=m {
            let e = m - j;
            let mut term = BigInt::from_biguint(
                Sign::Plus,
                gaussian_binomial((d + m) as u64, (d + j) as u64, q),
            );
            term *= q_big.pow((e * e.saturating_sub(1) / 2) as u32);
            term *= big_q.pow(j as u32 + 1) - 1;
            if e % 2 == 1 {
                term = -term;
            }
            sum += term;
        }
        let outer =
            BigInt::from_biguint(Sign::Plus, gaussian_binomial(n as u64, (d + m) as u64, q));
        let value = outer * sum;
        let (sign, mag) = value.into_parts();
        debug_assert!(sign != Sign::Minus, "spectrum entries are counts");
        counts[d + m] = mag;
    }
    Ok(SpectrumTable { n, k, d, q, ext_degree, counts })
}

/// The two adjacent spectrum entries (A_d, A_(d+1)) of an [n, k >= 2] MRD
/// code. Both are strictly positive, and gcd(d, d+1) = 1, so no integer
/// greater than one divides every codeword rank: the code is not divisible.
pub fn nondivisibility_witness(
    n: usize,
    k: usize,
    q: u64,
    ext_degree: usize,
) -> Result<(BigUint, BigUint)> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "k = 1 gives the [n, 1, n] code, which is divisible by n",
        ));
    }
    let table = mrd_spectrum(n, k, q, ext_degree)?;
    let a_d = table.counts[table.d].clone();
    let a_d1 = table.counts[table.d + 1].clone();
    debug_assert!(a_d > BigUint::ZERO && a_d1 > BigUint::ZERO);
    Ok((a_d, a_d1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::EnumBudget;
    use crate::field::FieldContext;
    use crate::rank_metric::rank_norm;

    fn monomial_basis(ctx: FieldContext, n: usize) -> Vec<FieldElement> {
        (0..n).map(|i| ctx.element(1 << i).unwrap()).collect()
    }

    #[test]
    fn gabidulin_4_2_is_mrd() {
        let ctx = FieldContext::new(4, None).unwrap();
        let code = gabidulin(&monomial_basis(ctx, 4), 2).unwrap();
        let report = code.classify(EnumBudget::default()).unwrap();
        assert_eq!(report.d, 3);
        assert!(report.is_mrd);
        assert!(report.is_amrd);
        assert_eq!(report.divisor, 1);
    }

    #[test]
    fn gabidulin_k1_all_ranks_full() {
        let ctx = FieldContext::new(4, None).unwrap();
        let code = gabidulin(&monomial_basis(ctx, 3), 1).unwrap();
        for w in code.codewords(EnumBudget::default()).unwrap() {
            if !w.is_zero() {
                assert_eq!(rank_norm(&w), 3);
            }
        }
        assert_eq!(code.divisor(EnumBudget::default()).unwrap(), 3);
    }

    #[test]
    fn gabidulin_k_equals_n_distance_one() {
        let ctx = FieldContext::new(4, None).unwrap();
        let code = gabidulin(&monomial_basis(ctx, 4), 4).unwrap();
        assert_eq!(code.min_rank_distance(EnumBudget::default()).unwrap(), 1);
    }

    #[test]
    fn gabidulin_rejects_dependent_generators() {
        let ctx = FieldContext::new(4, None).unwrap();
        let g = [ctx.one(), ctx.element(2).unwrap(), ctx.element(3).unwrap()];
        assert!(gabidulin(&g, 2).is_err());
        assert!(gabidulin(&monomial_basis(ctx, 3), 4).is_err());
    }

    #[test]
    fn spectrum_shape_and_totals() {
        for n in 1..=8usize {
            for k in 1..=n {
                let ext = 10usize.max(n);
                let table = mrd_spectrum(n, k, 2, ext).unwrap();
                assert_eq!(table.counts[0], BigUint::from(1u32));
                for s in 1..table.d {
                    assert_eq!(table.counts[s], BigUint::ZERO);
                }
                let expected = BigUint::from(2u32).pow((ext * k) as u32);
                assert_eq!(table.total(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn spectrum_k1_single_level() {
        // d = n: A_n = Q - 1 and nothing else
        let table = mrd_spectrum(4, 1, 2, 6).unwrap();
        assert_eq!(table.counts[4], BigUint::from((1u64 << 6) - 1));
        assert_eq!(table.total(), BigUint::from(1u64 << 6));
    }

    #[test]
    fn spectrum_matches_enumeration() {
        // brute-force oracle over the actual Gabidulin codewords
        let budget = EnumBudget::default();
        for (n, k) in [(4usize, 2usize), (3, 1), (3, 2), (4, 1), (4, 3)] {
            let ctx = FieldContext::new(4, None).unwrap();
            let code = gabidulin(&monomial_basis(ctx, n), k).unwrap();
            let observed = code.rank_distribution(budget).unwrap();
            let table = mrd_spectrum(n, k, 2, 4).unwrap();
            for (s, (count, &seen)) in table.counts.iter().zip(observed).enumerate() {
                assert_eq!(*count, BigUint::from(seen), "A_{s} for n={n} k={k}");
            }
        }
    }

    #[test]
    fn witness_positive_for_k_at_least_two() {
        let (a_d, a_d1) = nondivisibility_witness(4, 2, 2, 4).unwrap();
        assert!(a_d > BigUint::ZERO);
        assert!(a_d1 > BigUint::ZERO);
        assert!(nondivisibility_witness(4, 1, 2, 4).is_err());
    }
}
