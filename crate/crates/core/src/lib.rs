//! Rank-metric coding over GF(2^N).
//!
//! Everything here measures vectors by the GF(2)-rank of their coefficient
//! expansion rather than by Hamming weight. The crate provides field
//! arithmetic in GF(2^N), bit matrices and rank vectors, linear rank-distance
//! codes with the Frobenius-matrix MRD construction and its exact rank-weight
//! spectrum, circulant rank codes (polynomials modulo x^N + 1), parity-check
//! characterization of single-error-correcting AMRD codes, constant-rank set
//! bounds A(n, r, d), (multi-)covering radii with sphere bounds, fuzzy
//! membership decoding, and heterogeneous code ensembles with componentwise
//! metrics.
//!
//! The crate is `no_std` (with `alloc`); all state is immutable value data
//! and every operation is a pure function of its inputs.

#![no_std]

extern crate alloc;

pub mod amrd;
pub mod budget;
pub mod circulant;
mod clique;
pub mod code;
pub mod error;
pub mod extremal;
pub mod field;
pub mod fuzzy;
pub mod gf2;
pub mod mcode;
pub mod mrd;
pub mod rank_metric;
pub mod rng;

pub use budget::EnumBudget;
pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement};
pub use gf2::{Gf2Matrix, RankVector};
