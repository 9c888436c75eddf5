//! Fuzzy rank-distance words and membership decoding.
//!
//! A fuzzy word assigns every vector of the space the probability that it
//! is received when the base word is transmitted under a chosen error
//! model. The symmetric model depends only on the rank distance; the
//! unidirectional and asymmetric models act per coordinate on the N-bit
//! expansions, with transitions of the wrong polarity killing the whole
//! product.

use alloc::vec::Vec;

use crate::budget::EnumBudget;
use crate::code::LinearRdCode;
use crate::error::{Error, Result};
use crate::gf2::RankVector;
use crate::rank_metric::rank_distance;

/// Comparison slack for membership maximizer sets; memberships are products
/// of at most nN double-precision factors.
pub const MEMBERSHIP_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorModel {
    /// Any rank error with probability q = 1 - p per unit of rank.
    Symmetric { p: f64 },
    /// All bit transitions in a received word share one direction.
    Unidirectional { p: f64 },
    /// Only 1 -> 0 transitions occur.
    AsymmetricOneToZero { p: f64 },
    /// Only 0 -> 1 transitions occur.
    AsymmetricZeroToOne { p: f64 },
}

impl ErrorModel {
    pub fn p(&self) -> f64 {
        match *self {
            ErrorModel::Symmetric { p }
            | ErrorModel::Unidirectional { p }
            | ErrorModel::AsymmetricOneToZero { p }
            | ErrorModel::AsymmetricZeroToOne { p } => p,
        }
    }

    pub fn q(&self) -> f64 {
        1.0 - self.p()
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.p();
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter("probability must lie in [0, 1]"));
        }
        Ok(())
    }
}

fn powi(x: f64, e: usize) -> f64 {
    let mut out = 1.0;
    for _ in 0..e {
        out *= x;
    }
    out
}

/// Membership f_u(v): the probability that transmitting u yields v.
pub fn membership(u: &RankVector, v: &RankVector, model: ErrorModel) -> Result<f64> {
    model.validate()?;
    if u.context() != v.context() {
        return Err(Error::ContextMismatch);
    }
    if u.len() != v.len() {
        return Err(Error::ShapeMismatch { expected: u.len(), got: v.len() });
    }
    let p = model.p();
    let q = model.q();
    match model {
        ErrorModel::Symmetric { .. } => {
            let r = rank_distance(u, v)?;
            Ok(powi(p, u.len() - r) * powi(q, r))
        }
        _ => {
            let degree = u.context().degree();
            let mut product = 1.0;
            for j in 0..u.len() {
                let ub = u.coord_bits()[j];
                let vb = v.coord_bits()[j];
                // bitwise transition counts on the N-bit expansion
                let k1 = (ub & !vb).count_ones() as usize; // 1 -> 0
                let k2 = (vb & !ub).count_ones() as usize; // 0 -> 1
                let ones = ub.count_ones() as usize;
                if k1 != 0 && k2 != 0 {
                    return Ok(0.0);
                }
                let (d, m) = match model {
                    ErrorModel::Unidirectional { .. } => {
                        if k1 == 0 && k2 == 0 {
                            (0, ones.max(degree - ones))
                        } else if k2 == 0 {
                            (k1, ones)
                        } else {
                            (k2, degree - ones)
                        }
                    }
                    ErrorModel::AsymmetricOneToZero { .. } => (k1, ones),
                    ErrorModel::AsymmetricZeroToOne { .. } => (k2, degree - ones),
                    ErrorModel::Symmetric { .. } => unreachable!(),
                };
                debug_assert!(d <= m);
                product *= powi(p, m - d) * powi(q, d);
            }
            Ok(product)
        }
    }
}

/// A base word with its error model; memberships evaluated on demand.
#[derive(Debug, Clone)]
pub struct FuzzyWord {
    pub base: RankVector,
    pub model: ErrorModel,
}

impl FuzzyWord {
    pub fn new(base: RankVector, model: ErrorModel) -> Result<Self> {
        model.validate()?;
        Ok(FuzzyWord { base, model })
    }

    pub fn membership_of(&self, v: &RankVector) -> Result<f64> {
        membership(&self.base, v, self.model)
    }
}

/// Generalized distance between two fuzzy words: the total variation of
/// their membership functions over the whole space.
pub fn fuzzy_distance(
    a: &RankVector,
    b: &RankVector,
    model: ErrorModel,
    budget: EnumBudget,
) -> Result<f64> {
    model.validate()?;
    if a.context() != b.context() {
        return Err(Error::ContextMismatch);
    }
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch { expected: a.len(), got: b.len() });
    }
    let ctx = a.context();
    let n = a.len();
    let bits = (ctx.degree() * n) as u32;
    budget.check(bits)?;
    let mut total = 0.0;
    for packed in 0..1u64 << bits {
        let z = RankVector::from_packed(ctx, n, packed);
        let diff = membership(a, &z, model)? - membership(b, &z, model)?;
        total += if diff < 0.0 { -diff } else { diff };
    }
    Ok(total)
}

/// Minimum fuzzy distance over distinct codeword pairs.
pub fn fuzzy_min_distance(
    code: &LinearRdCode,
    model: ErrorModel,
    budget: EnumBudget,
) -> Result<f64> {
    let words: Vec<RankVector> = code.codewords(budget)?.collect();
    if words.len() < 2 {
        return Err(Error::InvalidParameter("need at least two codewords"));
    }
    let mut best = f64::INFINITY;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let d = fuzzy_distance(&words[i], &words[j], model, budget)?;
            if d < best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// Membership-maximizing codewords for a received word: every codeword c
/// whose f_c(u) is within [`MEMBERSHIP_EPSILON`] of the maximum. A singleton
/// means u decodes uniquely.
pub fn theta_decode(
    u: &RankVector,
    code: &LinearRdCode,
    model: ErrorModel,
    budget: EnumBudget,
) -> Result<Vec<RankVector>> {
    let mut best = f64::NEG_INFINITY;
    let mut scored: Vec<(f64, RankVector)> = Vec::new();
    for c in code.codewords(budget)? {
        let score = membership(&c, u, model)?;
        if score > best {
            best = score;
        }
        scored.push((score, c));
    }
    Ok(scored
        .into_iter()
        .filter(|(score, _)| *score >= best - MEMBERSHIP_EPSILON)
        .map(|(_, c)| c)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::FieldMatrix;
    use crate::field::FieldContext;
    use crate::rank_metric::rank_norm;
    use alloc::vec;

    fn close(a: f64, b: f64) -> bool {
        let d = a - b;
        (if d < 0.0 { -d } else { d }) < 1e-12
    }

    #[test]
    fn symmetric_examples() {
        let ctx = FieldContext::new(2, None).unwrap();
        let n = 3;
        let u = RankVector::from_bits(ctx, vec![1, 2, 3]).unwrap();
        let model = ErrorModel::Symmetric { p: 0.9 };
        assert!(close(membership(&u, &u, model).unwrap(), 0.9 * 0.9 * 0.9));
        // one unit of rank distance: p^(n-1) q
        let mut bumped = u.coord_bits().to_vec();
        bumped[0] ^= 1;
        let v = RankVector::from_bits(ctx, bumped).unwrap();
        if rank_distance(&u, &v).unwrap() == 1 {
            assert!(close(membership(&u, &v, model).unwrap(), powi(0.9, n - 1) * 0.1));
        }
    }

    #[test]
    fn symmetric_depends_only_on_distance() {
        let ctx = FieldContext::new(2, None).unwrap();
        let model = ErrorModel::Symmetric { p: 0.7 };
        let zero = RankVector::zero(ctx, 2);
        for a in 0..16u64 {
            let u = RankVector::from_packed(ctx, 2, a);
            for b in 0..16u64 {
                let v = RankVector::from_packed(ctx, 2, b);
                let lhs = membership(&u, &v, model).unwrap();
                let rhs = membership(&zero, &u.add(&v).unwrap(), model).unwrap();
                assert!(close(lhs, rhs));
                assert!(close(lhs, membership(&v, &u, model).unwrap()));
                assert!((0.0..=1.0).contains(&lhs));
            }
        }
    }

    #[test]
    fn asymmetric_mixed_transition_is_impossible() {
        let ctx = FieldContext::new(3, None).unwrap();
        // coordinate 0b011 -> 0b101 flips one bit each way
        let u = RankVector::from_bits(ctx, vec![0b011]).unwrap();
        let v = RankVector::from_bits(ctx, vec![0b101]).unwrap();
        for model in [
            ErrorModel::AsymmetricOneToZero { p: 0.9 },
            ErrorModel::AsymmetricZeroToOne { p: 0.9 },
            ErrorModel::Unidirectional { p: 0.9 },
        ] {
            assert_eq!(membership(&u, &v, model).unwrap(), 0.0);
        }
    }

    #[test]
    fn unidirectional_equal_coordinate_factor() {
        // k1 = k2 = 0: factor p^max(ones, N - ones)
        let ctx = FieldContext::new(4, None).unwrap();
        let u = RankVector::from_bits(ctx, vec![0b0111]).unwrap();
        let model = ErrorModel::Unidirectional { p: 0.5 };
        let f = membership(&u, &u, model).unwrap();
        assert!(close(f, powi(0.5, 3)));
    }

    #[test]
    fn asymmetric_directions() {
        let ctx = FieldContext::new(3, None).unwrap();
        let u = RankVector::from_bits(ctx, vec![0b011]).unwrap();
        let v = RankVector::from_bits(ctx, vec![0b001]).unwrap();
        // u -> v drops one bit: possible for 1->0, impossible for 0->1
        let down = membership(&u, &v, ErrorModel::AsymmetricOneToZero { p: 0.8 }).unwrap();
        assert!(close(down, 0.8 * 0.2));
        let up = membership(&u, &v, ErrorModel::AsymmetricZeroToOne { p: 0.8 }).unwrap();
        // printed model form: no excluded transition, d = 0, m = N - ones
        assert!(close(up, 0.8));
    }

    #[test]
    fn fuzzy_distance_properties() {
        let ctx = FieldContext::new(2, None).unwrap();
        let budget = EnumBudget::default();
        let model = ErrorModel::Symmetric { p: 0.9 };
        let a = RankVector::from_bits(ctx, vec![1, 2]).unwrap();
        let b = RankVector::from_bits(ctx, vec![3, 0]).unwrap();
        assert!(close(fuzzy_distance(&a, &a, model, budget).unwrap(), 0.0));
        // translation invariance
        let w = RankVector::from_bits(ctx, vec![2, 2]).unwrap();
        let lhs = fuzzy_distance(&a.add(&w).unwrap(), &b.add(&w).unwrap(), model, budget).unwrap();
        let rhs = fuzzy_distance(&a, &b, model, budget).unwrap();
        assert!(close(lhs, rhs));
        // p = 1: indicators of distinct words differ by exactly 2
        let sharp = ErrorModel::Symmetric { p: 1.0 };
        assert!(close(fuzzy_distance(&a, &b, sharp, budget).unwrap(), 2.0));
    }

    #[test]
    fn fuzzy_min_distance_repetition() {
        let ctx = FieldContext::new(2, None).unwrap();
        let code = LinearRdCode::repetition(ctx, 2).unwrap();
        let model = ErrorModel::Symmetric { p: 0.9 };
        let budget = EnumBudget::default();
        let d = fuzzy_min_distance(&code, model, budget).unwrap();
        assert!(d > 0.0);
        // independent direct-summation oracle over the 4-codeword code
        let words: Vec<RankVector> = code.codewords(budget).unwrap().collect();
        let mut expected = f64::INFINITY;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let mut total = 0.0;
                for packed in 0..16u64 {
                    let z = RankVector::from_packed(ctx, 2, packed);
                    let diff = membership(&words[i], &z, model).unwrap()
                        - membership(&words[j], &z, model).unwrap();
                    total += if diff < 0.0 { -diff } else { diff };
                }
                expected = expected.min(total);
            }
        }
        assert!(close(d, expected));
    }

    #[test]
    fn theta_decode_prefers_nearest_for_confident_channel() {
        let ctx = FieldContext::new(2, None).unwrap();
        let code = LinearRdCode::repetition(ctx, 2).unwrap();
        let budget = EnumBudget::default();
        let model = ErrorModel::Symmetric { p: 0.9 };
        for c in code.codewords(budget).unwrap() {
            let decoded = theta_decode(&c, &code, model, budget).unwrap();
            assert_eq!(decoded, vec![c]);
        }
        // reversed channel: maximizers are the farthest codewords
        let flipped = ErrorModel::Symmetric { p: 0.1 };
        let zero = RankVector::zero(ctx, 2);
        let far = theta_decode(&zero, &code, flipped, budget).unwrap();
        let max_dist = code.codewords(budget).unwrap().map(|c| rank_norm(&c)).max().unwrap();
        for c in &far {
            assert_eq!(rank_norm(c), max_dist);
        }
    }

    #[test]
    fn theta_decode_reports_ties() {
        let ctx = FieldContext::new(2, None).unwrap();
        let g = FieldMatrix::from_bits(ctx, 1, 2, vec![1, 1]).unwrap();
        let code = LinearRdCode::new(g).unwrap();
        let budget = EnumBudget::default();
        let model = ErrorModel::Symmetric { p: 0.9 };
        // a word equidistant from two codewords
        let words: Vec<RankVector> = code.codewords(budget).unwrap().collect();
        let mut found_tie = false;
        for packed in 0..16u64 {
            let u = RankVector::from_packed(ctx, 2, packed);
            let decoded = theta_decode(&u, &code, model, budget).unwrap();
            if decoded.len() == 2 {
                found_tie = true;
                let d0 = rank_distance(&u, &decoded[0]).unwrap();
                let d1 = rank_distance(&u, &decoded[1]).unwrap();
                assert_eq!(d0, d1);
            }
            assert!(!decoded.is_empty());
            let _ = &words;
        }
        assert!(found_tie);
    }

    #[test]
    fn invalid_probability_rejected() {
        let ctx = FieldContext::new(2, None).unwrap();
        let u = RankVector::zero(ctx, 2);
        assert!(membership(&u, &u, ErrorModel::Symmetric { p: 1.5 }).is_err());
    }
}
