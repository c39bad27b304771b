//! Generators for the named sequences: Catalan numbers, central binomials,
//! Stirling numbers of the second kind, harmonic and odd harmonic numbers,
//! and the half-integer harmonic extension.
//!
//! Each sequence with two independent characterizations keeps both: the
//! production path and an oracle used by the test suite.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{
    binom_int, factorial, rat, rat_int, ConstExpr, HalfInt, PoleError, Rat,
};

static CATALAN: RwLock<Vec<Rat>> = RwLock::new(Vec::new());
static HARMONIC: RwLock<Vec<Rat>> = RwLock::new(Vec::new());
static ODD_HARMONIC: RwLock<Vec<Rat>> = RwLock::new(Vec::new());
static STIRLING_ROWS: RwLock<Vec<Vec<Rat>>> = RwLock::new(Vec::new());

fn memoized(table: &RwLock<Vec<Rat>>, n: usize, grow: impl Fn(&[Rat]) -> Rat) -> Rat {
    {
        let t = table.read().unwrap();
        if let Some(v) = t.get(n) {
            return v.clone();
        }
    }
    let mut t = table.write().unwrap();
    while t.len() <= n {
        let next = grow(&t);
        t.push(next);
    }
    t[n].clone()
}

/// The Catalan number `binom(2k, k) / (k + 1)`; always an integer.
pub fn catalan(k: u64) -> Rat {
    let v = memoized(&CATALAN, k as usize, |t| {
        let k = t.len() as i64;
        binom_int(2 * k, k) / rat_int(k + 1)
    });
    debug_assert!(v.is_integer());
    v
}

/// Central binomial coefficient `binom(2k, k)`.
pub fn central_binomial(k: u64) -> Rat {
    binom_int(2 * k as i64, k as i64)
}

/// Stirling number of the second kind via the explicit alternating sum
/// `((-1)^n / n!) sum_k (-1)^k binom(n, k) k^m`, with `0^0 = 1`.
pub fn stirling2(m: u64, n: u64) -> Rat {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let term = binom_int(n as i64, k as i64).to_integer() * int_pow(k, m);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    let v = Rat::new(acc, factorial(n));
    debug_assert!(v.is_integer());
    v
}

fn int_pow(base: u64, e: u64) -> BigInt {
    if e == 0 {
        return BigInt::one();
    }
    BigInt::from(base).pow(e as u32)
}

/// Independent Stirling oracle: the triangle recurrence
/// `{m, n} = {m-1, n-1} + n {m-1, n}`. Test use only.
pub fn stirling2_oracle(m: u64, n: u64) -> Rat {
    let m = m as usize;
    {
        let rows = STIRLING_ROWS.read().unwrap();
        if let Some(row) = rows.get(m) {
            return row.get(n as usize).cloned().unwrap_or_else(Rat::zero);
        }
    }
    let mut rows = STIRLING_ROWS.write().unwrap();
    if rows.is_empty() {
        rows.push(vec![Rat::one()]);
    }
    while rows.len() <= m {
        let prev = rows.last().unwrap().clone();
        let mm = rows.len();
        let mut row = vec![Rat::zero(); mm + 1];
        for n in 1..=mm {
            let carry = prev.get(n).cloned().unwrap_or_else(Rat::zero);
            let diag = prev.get(n - 1).cloned().unwrap_or_else(Rat::zero);
            row[n] = diag + rat_int(n as i64) * carry;
        }
        rows.push(row);
    }
    rows[m].get(n as usize).cloned().unwrap_or_else(Rat::zero)
}

/// Both sides of the generating-function characterization
/// `sum_k binom(n, k) {m, k} k! = n^m`; callers assert the components equal.
pub fn stirling_gf_check(n: u64, m: u64) -> (Rat, Rat) {
    let mut sum = Rat::zero();
    for k in 0..=n {
        sum += binom_int(n as i64, k as i64)
            * stirling2(m, k)
            * Rat::from_integer(factorial(k));
    }
    (sum, Rat::from_integer(int_pow(n, m)))
}

/// `H_n = sum_{k=1}^{n} 1/k`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rat {
    memoized(&HARMONIC, n as usize, |t| match t.len() {
        0 => Rat::zero(),
        k => t[k - 1].clone() + rat(1, k as i64),
    })
}

/// `O_n = sum_{k=1}^{n} 1/(2k-1)`, with `O_0 = 0`.
pub fn odd_harmonic(n: u64) -> Rat {
    memoized(&ODD_HARMONIC, n as usize, |t| match t.len() {
        0 => Rat::zero(),
        k => t[k - 1].clone() + rat(1, 2 * k as i64 - 1),
    })
}

/// Harmonic numbers extended to the half-integer lattice.
///
/// Integer arguments reproduce `harmonic`; half-integer arguments follow the
/// recurrence `H_x = H_{x-1} + 1/x` anchored at `H_{-1/2} = -2 ln 2`, so the
/// closed form `H_{n-1/2} = 2 O_n - 2 ln 2` stays a theorem checked by the
/// tests rather than a definition. Values lie in `Q + Q ln 2`.
pub fn harmonic_ext(x: &HalfInt) -> Result<ConstExpr, PoleError> {
    if x.is_negative_integer() {
        return Err(PoleError::harmonic(format!("H({x})")));
    }
    if let Some(n) = x.to_integer() {
        let n: u64 = n.try_into().expect("non-negative integer argument");
        return Ok(ConstExpr::from_rat(harmonic(n)));
    }
    let anchor = HalfInt::half(-1);
    let mut value = ConstExpr::term(0, 1, rat_int(-2));
    let mut arg = anchor;
    while &arg < x {
        arg = arg.succ();
        value = value.add(&ConstExpr::from_rat(arg.to_rat().recip()));
    }
    while &arg > x {
        value = value.sub(&ConstExpr::from_rat(arg.to_rat().recip()));
        arg = arg.pred();
    }
    Ok(value)
}

/// A rendered table of one named sequence, indexed from 0.
pub struct SequenceTable {
    pub name: String,
    pub values: Vec<ConstExpr>,
    pub max_index: u64,
}

/// Table names accepted by [`sequence_table`].
pub const TABLE_NAMES: &[&str] = &[
    "catalan",
    "central-binomial",
    "harmonic",
    "odd-harmonic",
    "half-harmonic",
];

/// Build the table for a named sequence up to `max_index` inclusive.
/// `half-harmonic` lists `H_{n-1/2}` starting at `n = 0` (i.e. `H_{-1/2}`).
pub fn sequence_table(name: &str, max_index: u64) -> Option<SequenceTable> {
    let gen: Box<dyn Fn(u64) -> ConstExpr> = match name {
        "catalan" => Box::new(|k| ConstExpr::from_rat(catalan(k))),
        "central-binomial" => Box::new(|k| ConstExpr::from_rat(central_binomial(k))),
        "harmonic" => Box::new(|k| ConstExpr::from_rat(harmonic(k))),
        "odd-harmonic" => Box::new(|k| ConstExpr::from_rat(odd_harmonic(k))),
        "half-harmonic" => Box::new(|k| {
            harmonic_ext(&HalfInt::half(2 * k as i64 - 1)).expect("no pole on this ray")
        }),
        _ => return None,
    };
    Some(SequenceTable {
        name: name.to_string(),
        values: (0..=max_index).map(gen).collect(),
        max_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(catalan(k as u64), rat_int(*e));
        }
    }

    #[test]
    fn catalan_ballot_form() {
        for k in 0..=40i64 {
            assert_eq!(
                catalan(k as u64),
                binom_int(2 * k, k) - binom_int(2 * k, k + 1)
            );
        }
    }

    /// Brute-force count of partitions of an m-element set into n nonempty
    /// blocks, by enumerating all block assignments.
    fn count_set_partitions(m: u32, n: u32) -> u64 {
        if m == 0 {
            return (n == 0) as u64;
        }
        let mut count = 0u64;
        let total = (n as u64).checked_pow(m).unwrap_or(0);
        'outer: for code in 0..total {
            let mut c = code;
            let mut used = vec![false; n as usize];
            let mut max_seen = 0u64;
            for _ in 0..m {
                let block = c % n as u64;
                // canonical labeling: block b may appear only after b-1
                if block > max_seen {
                    continue 'outer;
                }
                if block == max_seen {
                    max_seen += 1;
                }
                used[block as usize] = true;
                c /= n as u64;
            }
            if used.iter().all(|&u| u) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn stirling_matches_brute_force_partition_count() {
        assert_eq!(stirling2(3, 2), rat_int(3));
        assert_eq!(stirling2(4, 2), rat_int(7));
        for m in 0..=7 {
            for n in 0..=7 {
                assert_eq!(
                    stirling2(m as u64, n as u64),
                    rat_int(count_set_partitions(m, n) as i64),
                    "m = {m}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn stirling_explicit_equals_recurrence_oracle() {
        assert_eq!(stirling2_oracle(3, 2), rat_int(3));
        assert_eq!(stirling2_oracle(5, 1), rat_int(1));
        assert_eq!(stirling2_oracle(5, 5), rat_int(1));
        for m in 0..=40 {
            for n in 0..=40 {
                assert_eq!(stirling2(m, n), stirling2_oracle(m, n), "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn stirling_generating_function_identity() {
        assert_eq!(stirling_gf_check(2, 3), (rat_int(8), rat_int(8)));
        assert_eq!(stirling_gf_check(1, 5), (rat_int(1), rat_int(1)));
        assert_eq!(stirling_gf_check(3, 2), (rat_int(9), rat_int(9)));
        for n in 0..=25 {
            for m in 0..=25 {
                let (lhs, rhs) = stirling_gf_check(n, m);
                assert_eq!(lhs, rhs, "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), Rat::zero());
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(odd_harmonic(0), Rat::zero());
        assert_eq!(odd_harmonic(3), rat(23, 15));
    }

    #[test]
    fn harmonic_ext_examples() {
        let two_minus_2ln2 =
            ConstExpr::from_int(2).add(&ConstExpr::term(0, 1, rat_int(-2)));
        assert_eq!(harmonic_ext(&HalfInt::half(1)).unwrap(), two_minus_2ln2);
        assert_eq!(harmonic_ext(&HalfInt::int(0)).unwrap(), ConstExpr::zero());
        assert_eq!(harmonic_ext(&HalfInt::half(-3)).unwrap(), two_minus_2ln2);
        assert_eq!(
            harmonic_ext(&HalfInt::int(3)).unwrap(),
            ConstExpr::from_rat(rat(11, 6))
        );
        assert!(harmonic_ext(&HalfInt::int(-1)).is_err());
        assert!(harmonic_ext(&HalfInt::int(-2)).is_err());
    }

    #[test]
    fn half_integer_harmonic_closed_form() {
        // H_{n-1/2} = 2 O_n - 2 ln 2 for n in [1, 30].
        for n in 1..=30i64 {
            let lhs = harmonic_ext(&HalfInt::half(2 * n - 1)).unwrap();
            let rhs = ConstExpr::from_rat(rat_int(2) * odd_harmonic(n as u64))
                .add(&ConstExpr::term(0, 1, rat_int(-2)));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn harmonic_ext_recurrence_downward() {
        // H_x = H_{x+1} - 1/(x+1) continues below the anchor.
        for d in [-3i64, -5, -7, -9] {
            let x = HalfInt::half(d);
            let up = harmonic_ext(&x.succ()).unwrap();
            let expect = up.sub(&ConstExpr::from_rat(x.succ().to_rat().recip()));
            assert_eq!(harmonic_ext(&x).unwrap(), expect);
        }
    }

    #[test]
    fn tables_render_all_names() {
        for name in TABLE_NAMES {
            let t = sequence_table(name, 6).unwrap();
            assert_eq!(t.values.len(), 7);
            assert_eq!(t.max_index, 6);
        }
        assert!(sequence_table("nope", 3).is_none());
    }
}
