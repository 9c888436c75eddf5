//! Arithmetic in GF(2^N), 1 <= N <= 16, in polynomial basis.
//!
//! A context pins the extension degree and an irreducible modulus; elements
//! are N-bit coefficient vectors with bit i holding the coefficient of x^i.
//! Contexts are small `Copy` values, so every element carries its own context
//! and mixed-context operations are rejected rather than miscomputed.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Default modulus per degree: the lowest-weight irreducible polynomial with
/// nonzero constant term, ties broken by smallest coefficient integer.
const DEFAULT_MODULI: [u32; 16] = [
    0x3,     // x+1
    0x7,     // x^2+x+1
    0xB,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x83,    // x^7+x+1
    0x11B,   // x^8+x^4+x^3+x+1
    0x203,   // x^9+x+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1009,  // x^12+x^3+1
    0x201B,  // x^13+x^4+x^3+x+1
    0x4021,  // x^14+x^5+1
    0x8003,  // x^15+x+1
    0x1002B, // x^16+x^5+x^3+x+1
];

pub const MAX_DEGREE: usize = 16;

fn poly_degree(p: u32) -> usize {
    debug_assert!(p != 0);
    31 - p.leading_zeros() as usize
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Exhaustive trial division by every polynomial of degree 1..=deg/2.
fn irreducible_over_gf2(p: u32) -> core::result::Result<(), u32> {
    let deg = poly_degree(p);
    for d in 1..=deg / 2 {
        for q in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(p, q) == 0 {
                return Err(q);
            }
        }
    }
    Ok(())
}

/// GF(2^N) with an explicit irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldContext {
    degree: u8,
    modulus: u32,
}

impl FieldContext {
    /// Builds GF(2^degree). With `modulus == None` the pinned default
    /// modulus is used; a supplied modulus must have degree exactly `degree`
    /// and is verified irreducible by trial division.
    pub fn new(degree: usize, modulus: Option<u32>) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        let modulus = modulus.unwrap_or(DEFAULT_MODULI[degree - 1]);
        if modulus == 0 || poly_degree(modulus) != degree {
            return Err(Error::ModulusDegreeMismatch {
                expected: degree,
                got: if modulus == 0 { 0 } else { poly_degree(modulus) },
            });
        }
        if let Err(factor) = irreducible_over_gf2(modulus) {
            return Err(Error::ReducibleModulus { modulus, factor });
        }
        Ok(FieldContext { degree: degree as u8, modulus })
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Field size 2^N.
    pub fn order(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if bits >> self.degree != 0 {
            return Err(Error::ElementOutOfRange { bits, degree: self.degree() });
        }
        Ok(FieldElement { bits: bits as u16, ctx: *self })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { bits: 0, ctx: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { bits: 1, ctx: *self }
    }

    /// The class of x, a generator of the polynomial basis 1, x, .., x^(N-1).
    pub fn monomial(&self) -> FieldElement {
        if self.degree == 1 {
            // x reduces to a constant mod a degree-1 modulus.
            FieldElement { bits: (self.modulus & 1) as u16, ctx: *self }
        } else {
            FieldElement { bits: 2, ctx: *self }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let ctx = *self;
        (0..self.order() as u32).map(move |bits| FieldElement { bits: bits as u16, ctx })
    }

    /// Raw product of two coefficient vectors, reduced mod the modulus.
    pub(crate) fn mul_bits(&self, a: u16, b: u16) -> u16 {
        let mut acc: u32 = 0;
        let a = a as u32;
        let mut b = b as u32;
        let mut shift = 0;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        // reduce: degree of acc is at most 2N-2 < 32
        let deg = self.degree as u32;
        let modulus = self.modulus;
        let mut bit = 31u32;
        while bit >= deg {
            if acc >> bit & 1 != 0 {
                acc ^= modulus << (bit - deg);
            }
            if bit == 0 {
                break;
            }
            bit -= 1;
        }
        acc as u16
    }

    pub(crate) fn inv_bits(&self, a: u16) -> Result<u16> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // a^(2^N - 2) by square and multiply
        let mut result: u16 = 1;
        let mut base = a;
        let mut exp = self.order() - 2;
        while exp != 0 {
            if exp & 1 != 0 {
                result = self.mul_bits(result, base);
            }
            base = self.mul_bits(base, base);
            exp >>= 1;
        }
        Ok(result)
    }

    pub(crate) fn frobenius_bits(&self, a: u16, s: usize) -> u16 {
        let mut v = a;
        for _ in 0..(s % self.degree()) {
            v = self.mul_bits(v, v);
        }
        v
    }

    /// Modulus rendered as a polynomial, e.g. "x^3+x+1".
    pub fn modulus_poly_string(&self) -> String {
        poly_string(self.modulus)
    }
}

/// Renders a GF(2) polynomial given as a bit string, highest term first.
pub fn poly_string(p: u32) -> String {
    if p == 0 {
        return String::from("0");
    }
    let mut parts: Vec<String> = Vec::new();
    for i in (0..32).rev() {
        if p >> i & 1 != 0 {
            parts.push(match i {
                0 => String::from("1"),
                1 => String::from("x"),
                _ => alloc::format!("x^{i}"),
            });
        }
    }
    parts.join("+")
}

/// An element of GF(2^N): an N-bit coefficient vector plus its context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u16,
    ctx: FieldContext,
}

impl FieldElement {
    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn same_context(&self, other: &FieldElement) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Coefficientwise XOR. Subtraction coincides with addition in
    /// characteristic 2.
    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_context(other)?;
        Ok(FieldElement { bits: self.bits ^ other.bits, ctx: self.ctx })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_context(other)?;
        Ok(FieldElement { bits: self.ctx.mul_bits(self.bits, other.bits), ctx: self.ctx })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement { bits: self.ctx.inv_bits(self.bits)?, ctx: self.ctx })
    }

    /// a^(2^s), the s-fold Frobenius power. s is reduced mod N since
    /// a^(2^N) = a.
    pub fn frobenius(&self, s: usize) -> FieldElement {
        FieldElement { bits: self.ctx.frobenius_bits(self.bits, s), ctx: self.ctx }
    }

    /// Lowercase hex of the coefficient integer, bit i = coefficient of x^i.
    pub fn to_hex(&self) -> String {
        alloc::format!("{:x}", self.bits)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}

/// True iff the elements are linearly independent over GF(2), i.e. the
/// matrix of coefficient columns has full column rank.
pub fn linearly_independent(elems: &[FieldElement]) -> Result<bool> {
    if elems.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ctx = elems[0].ctx;
    for e in elems {
        if e.ctx != ctx {
            return Err(Error::ContextMismatch);
        }
    }
    // Rank of the set of N-bit rows (columns of the expansion; rank is
    // transpose-invariant).
    let mut pivots: Vec<u16> = Vec::with_capacity(elems.len());
    for e in elems {
        let mut v = e.bits;
        for &p in &pivots {
            let high = 15 - p.leading_zeros() as u16;
            if v >> high & 1 != 0 {
                v ^= p;
            }
        }
        if v == 0 {
            return Ok(false);
        }
        pivots.push(v);
        pivots.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(true)
}
