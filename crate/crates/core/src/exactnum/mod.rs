//! Exact arithmetic kernel: big rationals, the constant field spanned by
//! `(sqrt pi)^a (ln 2)^b`, Gamma on the half-integer lattice, and the
//! generalized binomial coefficients every identity evaluator is built from.
//!
//! All values are immutable after construction and every operation is pure;
//! the only shared state is a handful of grow-only memo tables guarded by
//! locks, so everything here may be called freely from parallel sweeps.

mod constexpr;
mod error;
mod gamma;
mod halfint;
mod rational;

pub use constexpr::{const_arith, ArithOp, ConstExpr, Monomial};
pub use error::{PoleError, PoleKind};
pub use gamma::{
    binom_lattice, binom_reciprocal_lattice, gamma_half, limit_rewrite_r_neg1, limit_rewrite_s0,
};
pub use halfint::{parse_halfint, HalfInt};
pub use rational::{
    binom_int, binom_rational_lower_int, factorial, pow2, rat, rat_int, rising_factorial,
    sign_pow, Rat,
};
