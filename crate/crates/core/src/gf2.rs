//! Bit matrices over GF(2) and rank vectors over GF(2^N).
//!
//! A [`RankVector`] is a length-n tuple of field elements; [`RankVector::expand`]
//! turns it into the N x n bit matrix whose column j holds the coefficients of
//! coordinate j. Ranks of these matrices drive every metric in the crate, so
//! rows are packed one machine word each and eliminated in place.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// A dense bit matrix, at most 64 columns, one u64 per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "at most 64 columns supported");
        Gf2Matrix { rows, cols, words: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from row words; bit j of a word is the entry in column j.
    pub fn from_rows(words: Vec<u64>, cols: usize) -> Self {
        assert!(cols <= 64);
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        debug_assert!(words.iter().all(|w| w & !mask == 0));
        Gf2Matrix { rows: words.len(), cols, words }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_word(&self, i: usize) -> u64 {
        self.words[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i] >> j & 1 != 0
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.words[i] |= 1 << j;
        } else {
            self.words[i] &= !(1 << j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            let mut w = self.words[i];
            while w != 0 {
                let j = w.trailing_zeros() as usize;
                t.set(j, i, true);
                w &= w - 1;
            }
        }
        t
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(Gf2Matrix { rows: self.rows, cols: self.cols, words })
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Gf2Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = 0u64;
            let mut w = self.words[i];
            while w != 0 {
                let k = w.trailing_zeros() as usize;
                acc ^= other.words[k];
                w &= w - 1;
            }
            out.words[i] = acc;
        }
        Ok(out)
    }

    /// GF(2) rank by in-place elimination on row words.
    pub fn rank(&self) -> usize {
        rank_of_words(&mut self.words.clone())
    }
}

/// Rank of the span of the given row words. Mutates its scratch input.
pub fn rank_of_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let mut v = rows[i];
        if v == 0 {
            continue;
        }
        // reduce against established pivots, stored in the prefix
        for &p in rows[..rank].iter() {
            if v >> (63 - p.leading_zeros()) & 1 != 0 {
                v ^= p;
            }
        }
        if v != 0 {
            rows[i] = rows[rank];
            rows[rank] = v;
            // keep the pivot prefix ordered by leading bit, descending
            let mut k = rank;
            while k > 0 && rows[k - 1].leading_zeros() > rows[k].leading_zeros() {
                rows.swap(k - 1, k);
                k -= 1;
            }
            rank += 1;
        }
    }
    rank
}

/// A length-n vector over GF(2^N), the carrier of the rank norm.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankVector {
    ctx: FieldContext,
    coords: Vec<u16>,
}

impl RankVector {
    pub fn new(coords: &[FieldElement]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ctx = coords[0].context();
        for c in coords {
            if c.context() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(RankVector { ctx, coords: coords.iter().map(|c| c.bits()).collect() })
    }

    pub fn from_bits(ctx: FieldContext, coords: Vec<u16>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &c in &coords {
            if (c as u32) >> ctx.degree() != 0 {
                return Err(Error::ElementOutOfRange { bits: c as u32, degree: ctx.degree() });
            }
        }
        Ok(RankVector { ctx, coords })
    }

    pub fn zero(ctx: FieldContext, len: usize) -> Self {
        RankVector { ctx, coords: vec![0; len] }
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, j: usize) -> FieldElement {
        self.ctx.element(self.coords[j] as u32).expect("stored coordinate in range")
    }

    pub fn coord_bits(&self) -> &[u16] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinatewise sum; also the difference in characteristic 2.
    pub fn add(&self, other: &RankVector) -> Result<RankVector> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch { expected: self.len(), got: other.len() });
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a ^ b).collect();
        Ok(RankVector { ctx: self.ctx, coords })
    }

    /// The N x n bit matrix whose column j holds the coefficients of
    /// coordinate j.
    pub fn expand(&self) -> Gf2Matrix {
        let degree = self.ctx.degree();
        let mut m = Gf2Matrix::zero(degree, self.len());
        for (j, &c) in self.coords.iter().enumerate() {
            for i in 0..degree {
                if c >> i & 1 != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Packs the coordinates into one integer, coordinate j in bits
    /// [j*N, (j+1)*N). Requires n*N <= 64.
    pub fn packed(&self) -> u64 {
        let degree = self.ctx.degree();
        debug_assert!(self.len() * degree <= 64);
        let mut acc = 0u64;
        for (j, &c) in self.coords.iter().enumerate() {
            acc |= (c as u64) << (j * degree);
        }
        acc
    }

    pub fn from_packed(ctx: FieldContext, len: usize, packed: u64) -> Self {
        let degree = ctx.degree();
        debug_assert!(len * degree <= 64);
        let mask = (1u64 << degree) - 1;
        let coords = (0..len).map(|j| (packed >> (j * degree) & mask) as u16).collect();
        RankVector { ctx, coords }
    }

    /// Number of nonzero coordinates.
    pub fn hamming_weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// Concatenation (same context).
    pub fn concat(&self, other: &RankVector) -> Result<RankVector> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        Ok(RankVector { ctx: self.ctx, coords })
    }
}
