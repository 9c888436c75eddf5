//! Linear [n, k] rank-distance codes over GF(2^N).
//!
//! A code is the row space of a full-rank k x n generator matrix, with
//! n <= N so the ambient space is a rank space. Minimum distance, the rank
//! weight distribution, the divisor and nearest-codeword decoding are all
//! exhaustive over the 2^(Nk) codewords and therefore budget-gated.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::budget::EnumBudget;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::gf2::RankVector;
use crate::rank_metric::rank_norm;

/// A dense matrix over GF(2^N), entries stored row-major as raw bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    ctx: FieldContext,
    rows: usize,
    cols: usize,
    entries: Vec<u16>,
}

impl FieldMatrix {
    pub fn from_bits(
        ctx: FieldContext,
        rows: usize,
        cols: usize,
        entries: Vec<u16>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch { expected: rows * cols, got: entries.len() });
        }
        for &e in &entries {
            if (e as u32) >> ctx.degree() != 0 {
                return Err(Error::ElementOutOfRange { bits: e as u32, degree: ctx.degree() });
            }
        }
        Ok(FieldMatrix { ctx, rows, cols, entries })
    }

    pub fn from_elements(rows: usize, cols: usize, entries: &[FieldElement]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ctx = entries[0].context();
        for e in entries {
            if e.context() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        FieldMatrix::from_bits(ctx, rows, cols, entries.iter().map(|e| e.bits()).collect())
    }

    pub fn identity(ctx: FieldContext, n: usize) -> Self {
        let mut entries = vec![0u16; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FieldMatrix { ctx, rows: n, cols: n, entries }
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn bits_at(&self, i: usize, j: usize) -> u16 {
        self.entries[i * self.cols + j]
    }

    pub fn at(&self, i: usize, j: usize) -> FieldElement {
        self.ctx.element(self.bits_at(i, j) as u32).expect("stored entry in range")
    }

    pub fn set_bits(&mut self, i: usize, j: usize, bits: u16) {
        self.entries[i * self.cols + j] = bits;
    }

    pub fn row_vector(&self, i: usize) -> RankVector {
        RankVector::from_bits(self.ctx, self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .expect("stored row in range")
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut entries = vec![0u16; self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.bits_at(i, j);
            }
        }
        FieldMatrix { ctx: self.ctx, rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch { expected: self.cols, got: other.rows });
        }
        let ctx = self.ctx;
        let mut entries = vec![0u16; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.bits_at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    entries[i * other.cols + j] ^= ctx.mul_bits(a, other.bits_at(k, j));
                }
            }
        }
        Ok(FieldMatrix { ctx, rows: self.rows, cols: other.cols, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Rank over GF(2^N) by row reduction.
    pub fn rank(&self) -> usize {
        let mut scratch = self.entries.clone();
        row_reduce(self.ctx, &mut scratch, self.rows, self.cols).len()
    }

    /// Vertically stacks two matrices with equal column count.
    pub fn stack(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch { expected: self.cols, got: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FieldMatrix { ctx: self.ctx, rows: self.rows + other.rows, cols: self.cols, entries })
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
fn row_reduce(ctx: FieldContext, entries: &mut [u16], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let found = (pivot_row..rows).find(|&r| entries[r * cols + col] != 0);
        let Some(r) = found else { continue };
        for j in 0..cols {
            entries.swap(pivot_row * cols + j, r * cols + j);
        }
        let inv = ctx.inv_bits(entries[pivot_row * cols + col]).expect("pivot nonzero");
        for j in 0..cols {
            entries[pivot_row * cols + j] = ctx.mul_bits(entries[pivot_row * cols + j], inv);
        }
        for r2 in 0..rows {
            if r2 == pivot_row {
                continue;
            }
            let factor = entries[r2 * cols + col];
            if factor != 0 {
                for j in 0..cols {
                    let sub = ctx.mul_bits(factor, entries[pivot_row * cols + j]);
                    entries[r2 * cols + j] ^= sub;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

/// Summary of a code's metric parameters and classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    /// Minimum rank distance.
    pub d: usize,
    /// Correction radius floor((d-1)/2).
    pub t: usize,
    /// d reaches the Singleton-style bound n - k + 1.
    pub is_mrd: bool,
    /// d >= n - k.
    pub is_amrd: bool,
    /// gcd of the ranks of all nonzero codewords; divisible means > 1.
    pub divisor: usize,
}

/// Result of nearest-codeword decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: RankVector,
    pub distance: usize,
    /// True iff exactly one codeword attains the minimum distance.
    pub unique: bool,
}

/// A linear [n, k] rank-distance code given by a generator matrix.
#[derive(Debug, Clone)]
pub struct LinearRdCode {
    ctx: FieldContext,
    n: usize,
    k: usize,
    generator: FieldMatrix,
    parity: OnceCell<FieldMatrix>,
    rank_counts: OnceCell<Vec<u64>>,
}

#[allow(clippy::len_without_is_empty)] // the length is the code length n
impl LinearRdCode {
    pub fn new(generator: FieldMatrix) -> Result<Self> {
        let ctx = generator.context();
        let k = generator.rows();
        let n = generator.cols();
        if k == 0 || n == 0 {
            return Err(Error::EmptyInput);
        }
        if n > ctx.degree() {
            return Err(Error::LengthExceedsDegree { len: n, degree: ctx.degree() });
        }
        if k > n {
            return Err(Error::RankDeficient { expected: k, got: n });
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::RankDeficient { expected: k, got: rank });
        }
        Ok(LinearRdCode {
            ctx,
            n,
            k,
            generator,
            parity: OnceCell::new(),
            rank_counts: OnceCell::new(),
        })
    }

    /// The solution space of a full-rank parity-check matrix: a code of
    /// dimension n - rows(h).
    pub fn from_parity(h: &FieldMatrix) -> Result<Self> {
        let ctx = h.context();
        let r = h.rows();
        let n = h.cols();
        if r == 0 || n == 0 {
            return Err(Error::EmptyInput);
        }
        if r >= n {
            return Err(Error::InvalidParameter(
                "parity-check matrix needs fewer rows than columns",
            ));
        }
        let rank = h.rank();
        if rank != r {
            return Err(Error::RankDeficient { expected: r, got: rank });
        }
        // reduce h to [I_r | B] up to column permutation, then read the
        // null-space basis [B^T | I_(n-r)] back through the permutation
        let mut reduced = (0..r * n).map(|idx| h.bits_at(idx / n, idx % n)).collect::<Vec<u16>>();
        let pivots = row_reduce(ctx, &mut reduced, r, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let k = n - r;
        let mut gen = FieldMatrix::from_bits(ctx, k, n, vec![0u16; k * n])?;
        for (gi, &fc) in free.iter().enumerate() {
            gen.set_bits(gi, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate() {
                gen.set_bits(gi, pc, reduced[pi * n + fc]);
            }
        }
        let code = LinearRdCode::new(gen)?;
        debug_assert!(code.generator.mul(&h.transpose())?.is_zero());
        Ok(code)
    }

    /// The [n, 1] repetition code generated by the all-ones row.
    pub fn repetition(ctx: FieldContext, n: usize) -> Result<Self> {
        LinearRdCode::new(FieldMatrix::from_bits(ctx, 1, n, vec![1u16; n])?)
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    /// log2 of the number of codewords, N * k.
    pub fn size_bits(&self) -> u32 {
        (self.ctx.degree() * self.k) as u32
    }

    /// Generator in standard form [I_k | A] together with the column
    /// permutation that realizes it: entry j of the permutation is the
    /// original column shown at position j. The permutation is the identity
    /// whenever the leading k x k block is already invertible.
    pub fn standard_form(&self) -> (FieldMatrix, Vec<usize>) {
        let mut reduced = self.generator.entries.clone();
        let pivots = row_reduce(self.ctx, &mut reduced, self.k, self.n);
        debug_assert_eq!(pivots.len(), self.k);
        let mut perm: Vec<usize> = pivots.clone();
        perm.extend((0..self.n).filter(|c| !pivots.contains(c)));
        let mut out = FieldMatrix::from_bits(self.ctx, self.k, self.n, vec![0u16; self.k * self.n])
            .expect("shape fixed");
        for i in 0..self.k {
            for (j, &orig) in perm.iter().enumerate() {
                out.set_bits(i, j, reduced[i * self.n + orig]);
            }
        }
        (out, perm)
    }

    /// Parity-check matrix H with G H^T = 0, rank n - k. Cached.
    pub fn parity_check(&self) -> &FieldMatrix {
        self.parity.get_or_init(|| {
            let (standard, perm) = self.standard_form();
            let r = self.n - self.k;
            let mut h = FieldMatrix::from_bits(self.ctx, r, self.n, vec![0u16; r * self.n])
                .expect("shape fixed");
            // in permuted coordinates H' = [A^T | I]; signs vanish in
            // characteristic 2
            for row in 0..r {
                for (i, &col) in perm[..self.k].iter().enumerate() {
                    h.set_bits(row, col, standard.bits_at(i, self.k + row));
                }
                h.set_bits(row, perm[self.k + row], 1);
            }
            debug_assert!(self.generator.mul(&h.transpose()).unwrap().is_zero());
            h
        })
    }

    /// True iff v satisfies every parity check.
    pub fn contains(&self, v: &RankVector) -> Result<bool> {
        if v.context() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        if v.len() != self.n {
            return Err(Error::ShapeMismatch { expected: self.n, got: v.len() });
        }
        let h = self.parity_check();
        for row in 0..h.rows() {
            let mut acc = 0u16;
            for j in 0..self.n {
                acc ^= self.ctx.mul_bits(v.coord_bits()[j], h.bits_at(row, j));
            }
            if acc != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The codeword for a packed message index (base-2^N digits).
    pub fn codeword_at(&self, message: u64) -> RankVector {
        let degree = self.ctx.degree();
        let mask = (1u64 << degree) - 1;
        let mut coords = vec![0u16; self.n];
        for i in 0..self.k {
            let m = (message >> (i * degree) & mask) as u16;
            if m == 0 {
                continue;
            }
            for (j, coord) in coords.iter_mut().enumerate() {
                *coord ^= self.ctx.mul_bits(m, self.generator.bits_at(i, j));
            }
        }
        RankVector::from_bits(self.ctx, coords).expect("codeword in range")
    }

    /// Streams all 2^(N k) codewords in message order, zero first.
    pub fn codewords(&self, budget: EnumBudget) -> Result<CodewordIter<'_>> {
        budget.check(self.size_bits())?;
        Ok(CodewordIter { code: self, next: 0, total: 1u64 << self.size_bits() })
    }

    /// Rank weight distribution: `counts[s]` = number of codewords of rank s.
    pub fn rank_distribution(&self, budget: EnumBudget) -> Result<&[u64]> {
        if let Some(counts) = self.rank_counts.get() {
            return Ok(counts);
        }
        let mut counts = vec![0u64; self.n + 1];
        for w in self.codewords(budget)? {
            counts[rank_norm(&w)] += 1;
        }
        Ok(self.rank_counts.get_or_init(|| counts))
    }

    /// Minimum rank distance d = min rank over nonzero codewords.
    pub fn min_rank_distance(&self, budget: EnumBudget) -> Result<usize> {
        let counts = self.rank_distribution(budget)?;
        let d = counts.iter().skip(1).position(|&c| c > 0).map(|p| p + 1);
        Ok(d.expect("k >= 1 so a nonzero codeword exists"))
    }

    /// gcd of the ranks of all nonzero codewords.
    pub fn divisor(&self, budget: EnumBudget) -> Result<usize> {
        let counts = self.rank_distribution(budget)?;
        let mut g = 0usize;
        for (s, &c) in counts.iter().enumerate().skip(1) {
            if c > 0 {
                g = gcd(g, s);
            }
        }
        Ok(g)
    }

    /// Full metric report: distance, MRD/AMRD flags, divisor.
    pub fn classify(&self, budget: EnumBudget) -> Result<CodeReport> {
        let d = self.min_rank_distance(budget)?;
        debug_assert!(d <= self.n - self.k + 1, "Singleton-style bound");
        Ok(CodeReport {
            n: self.n,
            k: self.k,
            d,
            t: (d - 1) / 2,
            is_mrd: d == self.n - self.k + 1,
            is_amrd: d >= self.n - self.k,
            divisor: self.divisor(budget)?,
        })
    }

    /// Brute-force nearest-codeword decoding. Returns a codeword at minimum
    /// rank distance from y; `unique` is true iff the minimizer is unique,
    /// which is guaranteed whenever the error rank is within the correction
    /// radius.
    pub fn decode_nearest(&self, y: &RankVector, budget: EnumBudget) -> Result<Decoded> {
        if y.context() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        if y.len() != self.n {
            return Err(Error::ShapeMismatch { expected: self.n, got: y.len() });
        }
        let mut best: Option<RankVector> = None;
        let mut best_dist = usize::MAX;
        let mut ties = 0u64;
        for w in self.codewords(budget)? {
            let dist = rank_norm(&w.add(y)?);
            if dist < best_dist {
                best_dist = dist;
                best = Some(w);
                ties = 1;
            } else if dist == best_dist {
                ties += 1;
            }
        }
        Ok(Decoded {
            codeword: best.expect("code nonempty"),
            distance: best_dist,
            unique: ties == 1,
        })
    }

    /// Cartesian product: codewords (c | d), generator block-diagonal.
    /// The combined length must still fit the rank space, n1 + n2 <= N.
    pub fn cartesian_product(&self, other: &LinearRdCode) -> Result<LinearRdCode> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let n = self.n + other.n;
        if n > self.ctx.degree() {
            return Err(Error::LengthExceedsDegree { len: n, degree: self.ctx.degree() });
        }
        let k = self.k + other.k;
        let mut gen = FieldMatrix::from_bits(self.ctx, k, n, vec![0u16; k * n])?;
        for i in 0..self.k {
            for j in 0..self.n {
                gen.set_bits(i, j, self.generator.bits_at(i, j));
            }
        }
        for i in 0..other.k {
            for j in 0..other.n {
                gen.set_bits(self.k + i, self.n + j, other.generator.bits_at(i, j));
            }
        }
        LinearRdCode::new(gen)
    }

    /// r-fold repetition: codewords (c | c | .. | c), an [rn, k] code whose
    /// codewords keep their rank. Requires r n <= N.
    pub fn fold_repetition(&self, r: usize) -> Result<LinearRdCode> {
        if r == 0 {
            return Err(Error::InvalidParameter("fold count must be at least 1"));
        }
        let n = self.n * r;
        if n > self.ctx.degree() {
            return Err(Error::LengthExceedsDegree { len: n, degree: self.ctx.degree() });
        }
        let mut gen = FieldMatrix::from_bits(self.ctx, self.k, n, vec![0u16; self.k * n])?;
        for i in 0..self.k {
            for copy in 0..r {
                for j in 0..self.n {
                    gen.set_bits(i, copy * self.n + j, self.generator.bits_at(i, j));
                }
            }
        }
        LinearRdCode::new(gen)
    }
}

pub struct CodewordIter<'a> {
    code: &'a LinearRdCode,
    next: u64,
    total: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = RankVector;

    fn next(&mut self) -> Option<RankVector> {
        if self.next == self.total {
            return None;
        }
        let w = self.code.codeword_at(self.next);
        self.next += 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rng::Xoshiro256;

    fn budget() -> EnumBudget {
        EnumBudget::default()
    }

    pub(crate) fn random_code(
        rng: &mut Xoshiro256,
        ctx: FieldContext,
        n: usize,
        k: usize,
    ) -> LinearRdCode {
        loop {
            let entries: Vec<u16> =
                (0..n * k).map(|_| (rng.next_u64() % ctx.order()) as u16).collect();
            if let Ok(m) = FieldMatrix::from_bits(ctx, k, n, entries) {
                if let Ok(code) = LinearRdCode::new(m) {
                    return code;
                }
            }
        }
    }

    #[test]
    fn construction_checks() {
        let ctx = FieldContext::new(5, None).unwrap();
        let mut rng = Xoshiro256::seeded(3);
        let code = random_code(&mut rng, ctx, 5, 3);
        assert_eq!((code.len(), code.dim()), (5, 3));

        // repeated row -> rank deficiency
        let row: Vec<u16> = (0..5).map(|j| j as u16 + 1).collect();
        let mut entries = row.clone();
        entries.extend(&row);
        let g = FieldMatrix::from_bits(ctx, 2, 5, entries).unwrap();
        assert!(matches!(LinearRdCode::new(g), Err(Error::RankDeficient { .. })));

        // n > N rejected
        let g = FieldMatrix::from_bits(ctx, 1, 6, vec![1; 6]).unwrap();
        assert!(matches!(LinearRdCode::new(g), Err(Error::LengthExceedsDegree { .. })));
    }

    #[test]
    fn repetition_code_shape() {
        let ctx = FieldContext::new(4, None).unwrap();
        let code = LinearRdCode::repetition(ctx, 3).unwrap();
        assert_eq!(code.dim(), 1);
        let words: Vec<RankVector> = code.codewords(budget()).unwrap().collect();
        assert_eq!(words.len(), 16);
        for w in words.iter().filter(|w| !w.is_zero()) {
            assert_eq!(rank_norm(w), 1);
        }
        assert_eq!(code.min_rank_distance(budget()).unwrap(), 1);
        assert_eq!(code.divisor(budget()).unwrap(), 1);
    }

    #[test]
    fn standard_form_identity_when_leading_block_invertible() {
        let ctx = FieldContext::new(4, None).unwrap();
        let code = LinearRdCode::repetition(ctx, 4).unwrap();
        let (std_form, perm) = code.standard_form();
        assert_eq!(perm, vec![0, 1, 2, 3]);
        assert_eq!(std_form, *code.generator());
    }

    #[test]
    fn standard_form_preserves_row_space() {
        let ctx = FieldContext::new(5, None).unwrap();
        let mut rng = Xoshiro256::seeded(17);
        for _ in 0..30 {
            let n = 2 + (rng.next_u64() % 4) as usize;
            let k = 1 + (rng.next_u64() % n as u64) as usize;
            let code = random_code(&mut rng, ctx, n, k);
            let (std_form, perm) = code.standard_form();
            // [I | A] shape
            for i in 0..k {
                for j in 0..k {
                    assert_eq!(std_form.bits_at(i, j), u16::from(i == j));
                }
            }
            // un-permute and compare row spaces by stacked rank
            let mut unperm = FieldMatrix::from_bits(ctx, k, n, vec![0; k * n]).unwrap();
            for i in 0..k {
                for (j, &orig) in perm.iter().enumerate() {
                    unperm.set_bits(i, orig, std_form.bits_at(i, j));
                }
            }
            let stacked = code.generator().stack(&unperm).unwrap();
            assert_eq!(stacked.rank(), k);
        }
    }

    #[test]
    fn parity_check_properties() {
        let ctx = FieldContext::new(5, None).unwrap();
        let mut rng = Xoshiro256::seeded(23);
        for _ in 0..30 {
            let n = 2 + (rng.next_u64() % 4) as usize;
            let k = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
            let code = random_code(&mut rng, ctx, n, k);
            let h = code.parity_check();
            assert_eq!(h.rows(), n - k);
            assert_eq!(h.rank(), n - k);
            assert!(code.generator().mul(&h.transpose()).unwrap().is_zero());
        }
    }

    #[test]
    fn parity_check_repetition_example() {
        // for G = (1 1 1), the rows (1,1,0) and (1,0,1) are parity checks
        let ctx = FieldContext::new(3, None).unwrap();
        let g = FieldMatrix::from_bits(ctx, 1, 3, vec![1, 1, 1]).unwrap();
        let h = FieldMatrix::from_bits(ctx, 2, 3, vec![1, 1, 0, 1, 0, 1]).unwrap();
        assert!(g.mul(&h.transpose()).unwrap().is_zero());
        // and the constructed parity check has the same solution space
        let code = LinearRdCode::new(g).unwrap();
        for w in code.codewords(budget()).unwrap() {
            assert!(code.contains(&w).unwrap());
        }
    }

    #[test]
    fn codeword_enumeration_is_the_solution_space() {
        let ctx = FieldContext::new(3, None).unwrap();
        let mut rng = Xoshiro256::seeded(5);
        let code = random_code(&mut rng, ctx, 3, 2);
        let words: alloc::collections::BTreeSet<Vec<u16>> =
            code.codewords(budget()).unwrap().map(|w| w.coord_bits().to_vec()).collect();
        assert_eq!(words.len(), 1 << 6);
        assert!(words.contains(&vec![0, 0, 0]));
        // every vector with zero syndrome is enumerated, and vice versa
        for packed in 0..1u64 << 9 {
            let v = RankVector::from_packed(ctx, 3, packed);
            assert_eq!(code.contains(&v).unwrap(), words.contains(v.coord_bits()));
        }
    }

    #[test]
    fn closed_under_addition_spot_check() {
        let ctx = FieldContext::new(4, None).unwrap();
        let mut rng = Xoshiro256::seeded(9);
        let code = random_code(&mut rng, ctx, 4, 2);
        let words: Vec<RankVector> = code.codewords(budget()).unwrap().collect();
        for _ in 0..50 {
            let a = &words[(rng.next_u64() % words.len() as u64) as usize];
            let b = &words[(rng.next_u64() % words.len() as u64) as usize];
            assert!(code.contains(&a.add(b).unwrap()).unwrap());
        }
    }

    #[test]
    fn full_dimension_code_has_distance_one() {
        let ctx = FieldContext::new(3, None).unwrap();
        let code = LinearRdCode::new(FieldMatrix::identity(ctx, 3)).unwrap();
        assert_eq!(code.min_rank_distance(budget()).unwrap(), 1);
    }

    #[test]
    fn singleton_bound_random_codes() {
        let mut rng = Xoshiro256::seeded(31);
        for ext in 2..=5usize {
            let ctx = FieldContext::new(ext, None).unwrap();
            for _ in 0..10 {
                let n = 1 + (rng.next_u64() % ext as u64) as usize;
                let k = 1 + (rng.next_u64() % n as u64) as usize;
                let code = random_code(&mut rng, ctx, n, k);
                let report = code.classify(budget()).unwrap();
                assert!(report.d <= n - k + 1);
                if report.is_mrd {
                    assert!(report.is_amrd);
                }
            }
        }
    }

    #[test]
    fn distance_invariant_under_standard_form() {
        let ctx = FieldContext::new(4, None).unwrap();
        let mut rng = Xoshiro256::seeded(41);
        for _ in 0..10 {
            let code = random_code(&mut rng, ctx, 4, 2);
            let (std_form, _) = code.standard_form();
            let std_code = LinearRdCode::new(std_form).unwrap();
            assert_eq!(
                code.min_rank_distance(budget()).unwrap(),
                std_code.min_rank_distance(budget()).unwrap()
            );
        }
    }

    #[test]
    fn decode_codeword_is_exact() {
        let ctx = FieldContext::new(4, None).unwrap();
        let mut rng = Xoshiro256::seeded(13);
        let code = random_code(&mut rng, ctx, 4, 2);
        for message in [0u64, 1, 77, 200] {
            let w = code.codeword_at(message);
            let decoded = code.decode_nearest(&w, budget()).unwrap();
            assert_eq!(decoded.codeword, w);
            assert_eq!(decoded.distance, 0);
            assert!(decoded.unique);
        }
    }

    #[test]
    fn cartesian_product_parameters() {
        let ctx = FieldContext::new(5, None).unwrap();
        let mut rng = Xoshiro256::seeded(51);
        let a = random_code(&mut rng, ctx, 2, 1);
        let b = random_code(&mut rng, ctx, 3, 2);
        let prod = a.cartesian_product(&b).unwrap();
        assert_eq!((prod.len(), prod.dim()), (5, 3));
        let da = a.min_rank_distance(budget()).unwrap();
        let db = b.min_rank_distance(budget()).unwrap();
        assert_eq!(prod.min_rank_distance(budget()).unwrap(), da.min(db));
        // overflow rejected
        assert!(matches!(prod.cartesian_product(&a), Err(Error::LengthExceedsDegree { .. })));
    }

    #[test]
    fn fold_repetition_preserves_ranks() {
        let ctx = FieldContext::new(4, None).unwrap();
        let mut rng = Xoshiro256::seeded(61);
        let code = random_code(&mut rng, ctx, 2, 1);
        assert_eq!(code.fold_repetition(1).unwrap().generator(), code.generator());
        let folded = code.fold_repetition(2).unwrap();
        assert_eq!((folded.len(), folded.dim()), (4, 1));
        for (w, fw) in code.codewords(budget()).unwrap().zip(folded.codewords(budget()).unwrap()) {
            assert_eq!(rank_norm(&w), rank_norm(&fw));
            assert_eq!(fw.coord_bits()[..2], *w.coord_bits());
            assert_eq!(fw.coord_bits()[2..], *w.coord_bits());
        }
        assert!(code.fold_repetition(3).is_err());
    }

    #[test]
    fn from_parity_solution_space() {
        let ctx = FieldContext::new(5, None).unwrap();
        let mut rng = Xoshiro256::seeded(71);
        for _ in 0..10 {
            let n = 3 + (rng.next_u64() % 3) as usize;
            let r = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
            let entries: Vec<u16> =
                (0..n * r).map(|_| (rng.next_u64() % ctx.order()) as u16).collect();
            let Ok(h) = FieldMatrix::from_bits(ctx, r, n, entries) else { continue };
            if h.rank() != r {
                continue;
            }
            let code = LinearRdCode::from_parity(&h).unwrap();
            assert_eq!(code.dim(), n - r);
            for w in code.codewords(budget()).unwrap() {
                // x H^T = 0 for every codeword
                for row in 0..r {
                    let mut acc = 0u16;
                    for j in 0..n {
                        acc ^= ctx.mul_bits(w.coord_bits()[j], h.bits_at(row, j));
                    }
                    assert_eq!(acc, 0);
                }
            }
        }
    }

    #[test]
    fn budget_gates_enumeration() {
        let ctx = FieldContext::new(16, None).unwrap();
        let code = LinearRdCode::new(FieldMatrix::identity(ctx, 2)).unwrap();
        // 2^32 codewords exceed the default 2^24 budget
        assert!(matches!(
            code.min_rank_distance(EnumBudget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
