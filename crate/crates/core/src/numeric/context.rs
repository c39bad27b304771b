//! Numeric evaluation context: configured precision, shared constants, and
//! memo tables for Gamma/digamma values.
//!
//! The context is immutable after construction apart from internal caches
//! guarded by locks, so one context can serve many worker threads.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;


use super::bigfloat::BigFloat;
use super::functions;
use super::gamma;
use crate::exactnum::{ConstExpr, PoleError, Rat};

/// Guard bits carried on top of the user precision by every internal
/// operation.
const GUARD_BITS: u32 = 64;

#[derive(Debug, Clone)]
pub struct NumericConfig {
    pub precision_bits: u32,
    pub rel_tolerance: BigFloat,
}

impl NumericConfig {
    /// Default: 256 bits with relative tolerance `10^-40`.
    pub fn with_default_tolerance(precision_bits: u32) -> Result<Self, String> {
        let tol = pow10(-40, precision_bits);
        NumericConfig::new(precision_bits, tol)
    }

    pub fn new(precision_bits: u32, rel_tolerance: BigFloat) -> Result<Self, String> {
        if precision_bits < 64 {
            return Err(format!(
                "precision must be at least 64 bits, got {precision_bits}"
            ));
        }
        if precision_bits > 1 << 20 {
            return Err("precision above 2^20 bits is not supported".to_string());
        }
        // The tolerance must be attainable at this precision.
        let floor = BigFloat::rounded(BigInt::from(1), -(precision_bits as i64) + 32, 32);
        if rel_tolerance.cmp_signed(&floor) == std::cmp::Ordering::Less {
            return Err(format!(
                "tolerance is below 2^(-{precision_bits}+32); raise the precision"
            ));
        }
        Ok(NumericConfig {
            precision_bits,
            rel_tolerance,
        })
    }
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig::with_default_tolerance(256).unwrap()
    }
}

/// `c * 10^e` as a BigFloat at the given precision.
pub fn pow10(e: i64, prec: u32) -> BigFloat {
    let ten = BigInt::from(10u8);
    if e >= 0 {
        BigFloat::from_bigint(ten.pow(e as u32), prec)
    } else {
        let one = BigFloat::from_bigint(BigInt::from(1), prec);
        one.div(&BigFloat::from_bigint(ten.pow((-e) as u32), prec), prec)
    }
}

/// Parse a decimal literal like `1e-40`, `2.5e-30`, `0.125` into an exact
/// rational.
pub fn parse_decimal_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mant.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mant, ""),
    };
    if frac_part.contains(['+', '-']) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return None;
    }
    let num: BigInt = digits.parse().ok()?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10u8);
    Some(if scale >= 0 {
        Rat::from_integer(num * ten.pow(scale as u32))
    } else {
        Rat::new(num, ten.pow((-scale) as u32))
    })
}

pub struct NumCtx {
    cfg: NumericConfig,
    work: u32,
    pi: BigFloat,
    sqrt_pi: BigFloat,
    ln2: BigFloat,
    half_ln_two_pi: BigFloat,
    euler: OnceLock<BigFloat>,
    bernoulli: RwLock<Vec<Rat>>,
    gamma_cache: RwLock<HashMap<Rat, BigFloat>>,
    digamma_cache: RwLock<HashMap<Rat, BigFloat>>,
}

impl NumCtx {
    pub fn new(cfg: NumericConfig) -> Self {
        let work = cfg.precision_bits + GUARD_BITS;
        let pi = functions::pi(work);
        let sqrt_pi = pi.sqrt(work);
        let ln2 = functions::ln2(work);
        let ln_pi = functions::ln(&pi, &ln2, work);
        let half_ln_two_pi = ln_pi.add(&ln2, work).scale2(-1);
        NumCtx {
            cfg,
            work,
            pi,
            sqrt_pi,
            ln2,
            half_ln_two_pi,
            euler: OnceLock::new(),
            bernoulli: RwLock::new(Vec::new()),
            gamma_cache: RwLock::new(HashMap::new()),
            digamma_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &NumericConfig {
        &self.cfg
    }

    /// Working precision: user precision plus guard bits.
    pub fn work(&self) -> u32 {
        self.work
    }

    pub fn pi(&self) -> &BigFloat {
        &self.pi
    }

    pub fn sqrt_pi(&self) -> &BigFloat {
        &self.sqrt_pi
    }

    pub fn ln2_const(&self) -> &BigFloat {
        &self.ln2
    }

    pub(super) fn half_ln_two_pi(&self) -> &BigFloat {
        &self.half_ln_two_pi
    }

    /// Euler-Mascheroni constant, `-psi(1)`.
    pub fn euler(&self) -> &BigFloat {
        self.euler.get_or_init(|| {
            gamma::digamma_rat(self, &Rat::from_integer(1.into()))
                .expect("psi(1) is finite")
                .neg()
        })
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::zero()
    }

    pub fn one(&self) -> BigFloat {
        BigFloat::from_i64(1, self.work)
    }

    pub fn from_rat(&self, q: &Rat) -> BigFloat {
        BigFloat::from_rat(q, self.work)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.work)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.work)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.work)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.work)
    }

    pub fn exp(&self, x: &BigFloat) -> BigFloat {
        functions::exp(x, &self.ln2, self.work)
    }

    pub fn ln(&self, x: &BigFloat) -> BigFloat {
        functions::ln(x, &self.ln2, self.work)
    }

    pub fn sin_pi(&self, x: &Rat) -> BigFloat {
        functions::sin_pi(x, &self.pi, self.work)
    }

    pub fn cos_pi(&self, x: &Rat) -> BigFloat {
        functions::cos_pi(x, &self.pi, self.work)
    }

    /// Exact Bernoulli number `B_n`.
    pub fn bernoulli(&self, n: usize) -> Rat {
        {
            let cache = self.bernoulli.read().unwrap();
            if let Some(v) = cache.get(n) {
                return v.clone();
            }
        }
        let mut cache = self.bernoulli.write().unwrap();
        functions::extend_bernoulli(&mut cache, n + 16);
        cache[n].clone()
    }

    /// `Gamma(x)` at a rational argument, memoized.
    pub fn gamma(&self, x: &Rat) -> Result<BigFloat, PoleError> {
        {
            let cache = self.gamma_cache.read().unwrap();
            if let Some(v) = cache.get(x) {
                return Ok(v.clone());
            }
        }
        let v = gamma::gamma_rat(self, x)?;
        self.gamma_cache
            .write()
            .unwrap()
            .insert(x.clone(), v.clone());
        Ok(v)
    }

    /// `psi(x)` at a rational argument, memoized.
    pub fn digamma(&self, x: &Rat) -> Result<BigFloat, PoleError> {
        {
            let cache = self.digamma_cache.read().unwrap();
            if let Some(v) = cache.get(x) {
                return Ok(v.clone());
            }
        }
        let v = gamma::digamma_rat(self, x)?;
        self.digamma_cache
            .write()
            .unwrap()
            .insert(x.clone(), v.clone());
        Ok(v)
    }

    /// Harmonic value at an arbitrary rational argument:
    /// `H_x = psi(x + 1) + gamma`.
    pub fn harmonic(&self, x: &Rat) -> Result<BigFloat, PoleError> {
        let shifted = x + Rat::from_integer(1.into());
        if shifted.is_integer() && !num_traits::Signed::is_positive(&shifted) {
            return Err(PoleError::harmonic(format!("H({x})")));
        }
        Ok(self.add(&self.digamma(&shifted)?, self.euler()))
    }

    /// `binom(r, s)` as the Gamma quotient, with the same pole semantics as
    /// the exact lattice evaluator: numerator pole is an error, denominator
    /// pole alone gives zero.
    pub fn binom(&self, r: &Rat, s: &Rat) -> Result<BigFloat, PoleError> {
        let one = Rat::from_integer(1.into());
        let top = r + &one;
        if is_non_positive_int(&top) {
            return Err(PoleError::gamma(format!("Gamma({top}) in binom({r}, {s})")));
        }
        let d1 = s + &one;
        let d2 = (r - s) + &one;
        if is_non_positive_int(&d1) || is_non_positive_int(&d2) {
            return Ok(BigFloat::zero());
        }
        let den = self.mul(&self.gamma(&d1)?, &self.gamma(&d2)?);
        Ok(self.div(&self.gamma(&top)?, &den))
    }

    /// `binom(r, s)^{-1}` as the direct Gamma ratio.
    pub fn recip_binom(&self, r: &Rat, s: &Rat) -> Result<BigFloat, PoleError> {
        let one = Rat::from_integer(1.into());
        let n1 = s + &one;
        let n2 = (r - s) + &one;
        if is_non_positive_int(&n1) {
            return Err(PoleError::gamma(format!("Gamma({n1}) in 1/binom({r}, {s})")));
        }
        if is_non_positive_int(&n2) {
            return Err(PoleError::gamma(format!("Gamma({n2}) in 1/binom({r}, {s})")));
        }
        let d = r + &one;
        if is_non_positive_int(&d) {
            return Ok(BigFloat::zero());
        }
        let num = self.mul(&self.gamma(&n1)?, &self.gamma(&n2)?);
        Ok(self.div(&num, &self.gamma(&d)?))
    }

    /// Numeric image of an exact constant-field value: substitutes the
    /// high-precision `sqrt pi` and `ln 2`.
    pub fn eval_constexpr(&self, e: &ConstExpr) -> BigFloat {
        let mut acc = BigFloat::zero();
        for (&(a, b), q) in e.iter_terms() {
            let mut t = self.from_rat(q);
            let p = self.powi(&self.sqrt_pi, a);
            t = self.mul(&t, &p);
            if b == 1 {
                t = self.mul(&t, &self.ln2);
            }
            acc = self.add(&acc, &t);
        }
        acc
    }

    fn powi(&self, base: &BigFloat, e: i32) -> BigFloat {
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, base);
        }
        if e < 0 {
            acc = self.div(&self.one(), &acc);
        }
        acc
    }

    /// Relative comparison: `|lhs - rhs| <= tol * max(|lhs|, |rhs|, 1)`.
    pub fn within_tolerance(&self, lhs: &BigFloat, rhs: &BigFloat) -> bool {
        let diff = self.sub(lhs, rhs).abs();
        let mut scale = self.one();
        if lhs.abs().cmp_signed(&scale) == std::cmp::Ordering::Greater {
            scale = lhs.abs();
        }
        if rhs.abs().cmp_signed(&scale) == std::cmp::Ordering::Greater {
            scale = rhs.abs();
        }
        let bound = self.mul(&self.cfg.rel_tolerance, &scale);
        diff.cmp_signed(&bound) != std::cmp::Ordering::Greater
    }

    /// Rendering precision for reports: enough decimal digits to carry the
    /// configured precision.
    pub fn report_digits(&self) -> u32 {
        (self.cfg.precision_bits as f64 * std::f64::consts::LOG10_2) as u32 + 2
    }
}

fn is_non_positive_int(x: &Rat) -> bool {
    x.is_integer() && !num_traits::Signed::is_positive(x)
}

impl Default for NumCtx {
    fn default() -> Self {
        NumCtx::new(NumericConfig::default())
    }
}
