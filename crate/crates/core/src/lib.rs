//! Constacyclic codes of length `(q^m - 1)/r` over `GF(q)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation over immutable inputs:
//!
//! * [`galois`]: one tower `GF(p^{sm})` realising `GF(p) ⊂ GF(q) ⊂ GF(q^m)`
//!   with exponent and Zech-logarithm tables.
//! * [`qadic`]: q-adic digits, weights, valuations and q-cyclotomic cosets.
//! * [`poly`]: polynomials over the tower, minimal polynomials and the
//!   factorisation of `x^n - λ`.
//! * [`codes`]: defining sets, generator/check polynomials, duals,
//!   complements, reverse codes and self-duality tests.
//! * [`families`]: the parity-split negacyclic sets, q-weight sets, projective
//!   Reed-Muller sets and the subcode families, with closed-form parameters and
//!   BCH progression witnesses.
//! * [`distance`]: weight enumeration, low-weight search and distance
//!   certification.
#![no_std]
#![deny(unused_must_use, rust_2018_idioms)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod bch;
pub mod codes;
pub mod distance;
mod error;
pub mod families;
pub mod galois;
pub mod linalg;
pub mod poly;
pub mod qadic;

pub use error::{Error, Result};
