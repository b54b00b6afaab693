//! Closed-form nullity of `Circ(n, {p, q})` and the derived singular/core/nut tests.
//!
//! The nullity counts the `n`-th roots of unity `zeta` with `zeta^(p+q) = -1`
//! or `zeta^(q-p) = -1`. With `s = p + q`, `d = q - p` this is
//! `|Psi(n, s)| + |Psi(n, d)| - |Psi(n, s) ∩ Psi(n, d)|`, which splits into five
//! branches on how `v2(s)` and `v2(d)` compare with `v2(n)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arithmetic::{gcd3, v2_of, Valuation};
use crate::circulant::QuarticCirculant;

/// Which branch of the nullity formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullityCase {
    /// Both valuations reach `v2(n)`: nonsingular.
    Zero,
    /// Only `v2(p+q) < v2(n)`.
    Eta1,
    /// Only `v2(q-p) < v2(n)`.
    Eta2,
    /// Both below `v2(n)` and different from each other.
    Sum,
    /// Both below `v2(n)` and equal.
    SumMinusGcd,
}

impl NullityCase {
    pub const ALL: [NullityCase; 5] = [
        NullityCase::Zero,
        NullityCase::Eta1,
        NullityCase::Eta2,
        NullityCase::Sum,
        NullityCase::SumMinusGcd,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NullityCase::Zero => "zero",
            NullityCase::Eta1 => "eta1",
            NullityCase::Eta2 => "eta2",
            NullityCase::Sum => "sum",
            NullityCase::SumMinusGcd => "sum_minus_gcd",
        }
    }

    /// Branch selected by `(v2(p+q), v2(q-p), v2(n))`.
    pub fn from_valuations(sum: Valuation, diff: Valuation, order: Valuation) -> Self {
        match (sum < order, diff < order) {
            (false, false) => NullityCase::Zero,
            (true, false) => NullityCase::Eta1,
            (false, true) => NullityCase::Eta2,
            (true, true) if sum != diff => NullityCase::Sum,
            (true, true) => NullityCase::SumMinusGcd,
        }
    }
}

impl fmt::Display for NullityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every intermediate quantity of the nullity formula together with its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NullityBreakdown {
    /// `gcd(n, p+q)`
    pub eta1: u64,
    /// `gcd(n, q-p)`
    pub eta2: u64,
    /// `gcd(n, p+q, q-p)`
    pub eta3: u64,
    /// `v2(p+q)`
    pub v2_1: Valuation,
    /// `v2(q-p)`
    pub v2_2: Valuation,
    /// `v2(n)`
    pub v2_3: Valuation,
    pub case: NullityCase,
    pub nullity: u64,
}

impl NullityBreakdown {
    /// Recomputes the nullity from the stored case and gcds.
    pub fn nullity_from_case(&self) -> u64 {
        match self.case {
            NullityCase::Zero => 0,
            NullityCase::Eta1 => self.eta1,
            NullityCase::Eta2 => self.eta2,
            NullityCase::Sum => self.eta1 + self.eta2,
            NullityCase::SumMinusGcd => self.eta1 + self.eta2 - self.eta3,
        }
    }
}

pub fn nullity(g: &QuarticCirculant) -> NullityBreakdown {
    let (n, p, q) = (g.n(), g.p(), g.q());
    let (sum, diff) = (p + q, q - p);
    let eta1 = n.gcd(&sum);
    let eta2 = n.gcd(&diff);
    let eta3 = gcd3(n, sum, diff);
    let (v2_1, v2_2, v2_3) = (v2_of(sum), v2_of(diff), v2_of(n));
    let case = NullityCase::from_valuations(v2_1, v2_2, v2_3);
    let mut breakdown = NullityBreakdown {
        eta1,
        eta2,
        eta3,
        v2_1,
        v2_2,
        v2_3,
        case,
        nullity: 0,
    };
    breakdown.nullity = breakdown.nullity_from_case();
    breakdown
}

/// Singular iff `v2(p+q) < v2(n)` or `v2(q-p) < v2(n)`.
pub fn is_singular(g: &QuarticCirculant) -> bool {
    let order = v2_of(g.n());
    v2_of(g.p() + g.q()) < order || v2_of(g.q() - g.p()) < order
}

/// Nut iff `n` is even, `p` and `q` differ in parity, and
/// `gcd(n, p+q) = gcd(n, q-p) = 1`.
pub fn is_nut(g: &QuarticCirculant) -> bool {
    let (n, p, q) = (g.n(), g.p(), g.q());
    n % 2 == 0 && (p + q) % 2 == 1 && n.gcd(&(p + q)) == 1 && n.gcd(&(q - p)) == 1
}

/// Singularity, core, nut and connectivity status of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub singular: bool,
    /// Always equal to `singular` for circulant graphs.
    pub core: bool,
    pub nut: bool,
    pub connected: bool,
    pub nullity: u64,
}

pub fn classify(g: &QuarticCirculant) -> Classification {
    let singular = is_singular(g);
    Classification {
        singular,
        core: singular,
        nut: is_nut(g),
        connected: g.is_connected(),
        nullity: nullity(g).nullity,
    }
}
