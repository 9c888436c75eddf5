//! Circulant words and circulant rank codes.
//!
//! A word is an element of `GF(2)[x]/(x^N + 1)` viewed as the N x N circulant
//! matrix whose column i holds x^i * a(x). Its norm is the matrix rank over
//! GF(2), and equals N - deg gcd(a(x), x^N + 1), which is the fast path used
//! everywhere. Codes are GF(2)-subspaces of words; a code is cyclic when the
//! span is closed under multiplication by x.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::{rank_of_words, Gf2Matrix};

pub const MAX_WORD_LEN: usize = 32;

/// Degree of a GF(2) polynomial in bit representation; -1 for the zero
/// polynomial.
fn poly_deg(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Euclid's algorithm on GF(2) polynomials packed as bit strings.
pub fn poly_gcd(mut a: u64, mut b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    while b != 0 {
        let mut r = a;
        let db = poly_deg(b);
        while r != 0 && poly_deg(r) >= db {
            r ^= b << (poly_deg(r) - db);
        }
        a = b;
        b = r;
    }
    Ok(a)
}

/// An element a(x) of `GF(2)[x]/(x^N + 1)`; bit i holds the coefficient of
/// x^i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CirculantWord {
    len: usize,
    poly: u64,
}

#[allow(clippy::len_without_is_empty)] // the length is the ring dimension N
impl CirculantWord {
    pub fn new(len: usize, poly: u64) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::UnsupportedDegree(len));
        }
        if len < 64 && poly >> len != 0 {
            return Err(Error::ElementOutOfRange { bits: poly as u32, degree: len });
        }
        Ok(CirculantWord { len, poly })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn poly(&self) -> u64 {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly == 0
    }

    /// x^N + 1 for this word length.
    pub fn ring_modulus(&self) -> u64 {
        (1u64 << self.len) | 1
    }

    /// The associated N x N circulant matrix: column i holds the
    /// coefficients of x^i * a(x) mod x^N + 1.
    pub fn matrix(&self) -> Gf2Matrix {
        let n = self.len;
        let mut m = Gf2Matrix::zero(n, n);
        let mut col = self.poly;
        for i in 0..n {
            for row in 0..n {
                if col >> row & 1 != 0 {
                    m.set(row, i, true);
                }
            }
            col = rotate_poly(col, n);
        }
        m
    }

    /// Norm via the gcd characterization: N - deg gcd(a, x^N + 1).
    pub fn norm(&self) -> usize {
        if self.poly == 0 {
            return 0;
        }
        let g = poly_gcd(self.poly, self.ring_modulus()).expect("poly nonzero");
        self.len - poly_deg(g) as usize
    }

    /// Norm via GF(2) rank of the circulant matrix; agrees with `norm`.
    pub fn norm_via_rank(&self) -> usize {
        let n = self.len;
        let mut rows: Vec<u64> = Vec::with_capacity(n);
        let mut col = self.poly;
        for _ in 0..n {
            rows.push(col);
            col = rotate_poly(col, n);
        }
        // rows here are the columns of the matrix; rank is the same
        rank_of_words(&mut rows)
    }

    pub fn add(&self, other: &CirculantWord) -> Result<CirculantWord> {
        if self.len != other.len {
            return Err(Error::ShapeMismatch { expected: self.len, got: other.len });
        }
        Ok(CirculantWord { len: self.len, poly: self.poly ^ other.poly })
    }

    /// d(u, v) = norm(u + v).
    pub fn distance(&self, other: &CirculantWord) -> Result<usize> {
        Ok(self.add(other)?.norm())
    }

    /// x * a(x) mod x^N + 1: one cyclic rotation of the coefficients.
    pub fn rotate(&self) -> CirculantWord {
        CirculantWord { len: self.len, poly: rotate_poly(self.poly, self.len) }
    }

    /// a(x) * b(x) mod x^N + 1.
    pub fn mul_mod(&self, other: &CirculantWord) -> Result<CirculantWord> {
        if self.len != other.len {
            return Err(Error::ShapeMismatch { expected: self.len, got: other.len });
        }
        let mut prod: u128 = 0;
        let a = self.poly as u128;
        for i in 0..self.len {
            if other.poly >> i & 1 != 0 {
                prod ^= a << i;
            }
        }
        // x^N = 1, so fold the high half down until it is gone
        let mask = (1u128 << self.len) - 1;
        while prod >> self.len != 0 {
            prod = (prod & mask) ^ (prod >> self.len);
        }
        Ok(CirculantWord { len: self.len, poly: prod as u64 })
    }
}

fn rotate_poly(poly: u64, len: usize) -> u64 {
    let shifted = poly << 1;
    (shifted & ((1u64 << len) - 1)) | (shifted >> len)
}

/// A GF(2)-subspace of circulant words, given by an independent basis.
#[derive(Debug, Clone)]
pub struct CirculantRankCode {
    len: usize,
    /// Basis word polynomials, GF(2)-independent.
    basis: Vec<u64>,
}

#[allow(clippy::len_without_is_empty)] // the length is the word length N
impl CirculantRankCode {
    pub fn new(basis: &[CirculantWord]) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::EmptyInput);
        }
        let len = basis[0].len;
        for w in basis {
            if w.len != len {
                return Err(Error::ShapeMismatch { expected: len, got: w.len });
            }
        }
        let mut scratch: Vec<u64> = basis.iter().map(|w| w.poly).collect();
        let rank = rank_of_words(&mut scratch);
        if rank != basis.len() {
            return Err(Error::RankDeficient { expected: basis.len(), got: rank });
        }
        Ok(CirculantRankCode { len, basis: basis.iter().map(|w| w.poly).collect() })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<CirculantWord> {
        self.basis.iter().map(|&p| CirculantWord { len: self.len, poly: p }).collect()
    }

    /// All 2^dim words of the span, in Gray-free combination order.
    pub fn words(&self) -> impl Iterator<Item = CirculantWord> + '_ {
        let total = 1u64 << self.basis.len();
        (0..total).map(move |sel| {
            let mut poly = 0u64;
            for (i, &b) in self.basis.iter().enumerate() {
                if sel >> i & 1 != 0 {
                    poly ^= b;
                }
            }
            CirculantWord { len: self.len, poly }
        })
    }

    pub fn contains(&self, word: &CirculantWord) -> Result<bool> {
        if word.len != self.len {
            return Err(Error::ShapeMismatch { expected: self.len, got: word.len });
        }
        let mut scratch: Vec<u64> = self.basis.clone();
        let rank = rank_of_words(&mut scratch);
        scratch.truncate(rank);
        scratch.push(word.poly);
        Ok(rank_of_words(&mut scratch) == rank)
    }

    /// Minimum norm over the nonzero words of the span.
    pub fn min_distance(&self) -> usize {
        self.words().filter(|w| !w.is_zero()).map(|w| w.norm()).min().expect("basis nonempty")
    }

    /// gcd of the norms of all nonzero words.
    pub fn divisor(&self) -> usize {
        let mut g = 0usize;
        for w in self.words() {
            if !w.is_zero() {
                g = crate::code::gcd(g, w.norm());
            }
        }
        g
    }

    /// True iff the span is closed under multiplication by x, i.e. the
    /// coordinate rotation of every codeword is again a codeword. Linearity
    /// makes checking the basis sufficient.
    pub fn is_cyclic(&self) -> bool {
        self.basis.iter().all(|&b| {
            let rotated = CirculantWord { len: self.len, poly: rotate_poly(b, self.len) };
            self.contains(&rotated).expect("same length")
        })
    }

    /// The ideal generated by a word: span of g, xg, .., x^(dim-1) g where
    /// dim = norm of g.
    pub fn ideal(generator: &CirculantWord) -> Result<Self> {
        if generator.is_zero() {
            return Err(Error::EmptyInput);
        }
        let dim = generator.norm();
        let mut basis = Vec::with_capacity(dim);
        let mut w = *generator;
        for _ in 0..dim {
            basis.push(w);
            w = w.rotate();
        }
        CirculantRankCode::new(&basis)
    }
}
