//! Number-theoretic helpers for the nullity formula.
//!
//! Everything here reduces to one fact: for even `n`, the congruence
//! `t * a == n/2 (mod n)` has `gcd(n, a)` solutions in `[0, n)` when
//! `gcd(n, a)` divides `n/2` (equivalently `v2(a) < v2(n)`) and none
//! otherwise. For odd `n` there is no `n`-th root of unity equal to `-1`,
//! so every count is zero.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent of 2 in the factorization of a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Valuation(pub u32);

impl Valuation {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 2-adic valuation of `x`.
pub fn v2(x: i64) -> Result<Valuation> {
    if x <= 0 {
        return Err(Error::Domain(format!("v2 is undefined for {x}")));
    }
    Ok(Valuation(x.trailing_zeros()))
}

/// Infallible valuation for values already known to be positive.
pub(crate) fn v2_of(x: u64) -> Valuation {
    debug_assert!(x > 0);
    Valuation(x.trailing_zeros())
}

/// `gcd(gcd(a, b), c)`, with `gcd(0, x) = x`.
pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    a.gcd(&b).gcd(&c)
}

fn positive(name: &str, x: i64) -> Result<u64> {
    if x < 1 {
        Err(Error::Domain(format!("{name} must be positive, got {x}")))
    } else {
        Ok(x as u64)
    }
}

/// Number of `t` in `[0, n)` with `t * a == n/2 (mod n)`. `n` must be even.
pub fn congruence_solution_count(a: i64, n: i64) -> Result<u64> {
    let a = positive("a", a)?;
    let n = positive("n", n)?;
    if n % 2 != 0 {
        return Err(Error::Domain(format!("modulus {n} must be even")));
    }
    Ok(half_congruence_count(n, a))
}

fn half_congruence_count(n: u64, a: u64) -> u64 {
    if n % 2 == 1 {
        return 0;
    }
    let g = n.gcd(&a);
    if (n / 2).is_multiple_of(g) {
        g
    } else {
        0
    }
}

/// `|Psi(n, y)|`: the number of `n`-th roots of unity whose `y`-th power is `-1`.
pub fn psi_cardinality(n: i64, y: i64) -> Result<u64> {
    let n = positive("n", n)?;
    let y = positive("y", y)?;
    Ok(psi(n, y))
}

pub(crate) fn psi(n: u64, y: u64) -> u64 {
    if v2_of(y) < v2_of(n) {
        n.gcd(&y)
    } else {
        0
    }
}

/// `|Psi(n, y1) ∩ Psi(n, y2)|`: roots of unity with both powers equal to `-1`.
pub fn psi_intersection_cardinality(n: i64, y1: i64, y2: i64) -> Result<u64> {
    let n = positive("n", n)?;
    let y1 = positive("y1", y1)?;
    let y2 = positive("y2", y2)?;
    Ok(psi_intersection(n, y1, y2))
}

pub(crate) fn psi_intersection(n: u64, y1: u64, y2: u64) -> u64 {
    let (a, b, m) = (v2_of(y1), v2_of(y2), v2_of(n));
    if a == b && a < m {
        gcd3(n, y1, y2)
    } else {
        0
    }
}
