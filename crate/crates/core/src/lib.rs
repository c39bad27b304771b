//! Exact-arithmetic verification engine for Catalan-number identity
//! families: Touchard-type convolutions, Knuth's old sum and its
//! generalizations, Stirling-weighted forms, and binomial-transform
//! consequences.
//!
//! Everything evaluates in the exact constant field spanned by
//! `(sqrt pi)^a (ln 2)^b` over the rationals; a configurable
//! arbitrary-precision floating backend covers rational parameters off the
//! half-integer lattice.

pub mod exactnum;
pub mod identities;
pub mod numeric;
pub mod polynomials;
pub mod rng;
pub mod selftest;
pub mod sequences;
pub mod transforms;
