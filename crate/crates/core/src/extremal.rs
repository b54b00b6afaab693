//! Minimum and maximum nullity over all (or all connected) quartic
//! circulants of a fixed order, with attaining graphs and closed-form
//! null spaces.
//!
//! Attaining sets are produced by evaluating each row's characterization
//! predicate directly; the oracle sweep in `verify` is what checks them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{gcd3, v2_of};
use crate::circulant::{graphs_of_order, QuarticCirculant};
use crate::error::{Error, Result};
use crate::nullity::{is_nut, nullity};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    All,
    Connected,
}

impl GraphClass {
    pub const ALL: [GraphClass; 2] = [GraphClass::All, GraphClass::Connected];

    pub fn admits(self, g: &QuarticCirculant) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Connected => g.is_connected(),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::All => "all",
            GraphClass::Connected => "connected",
        })
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(GraphClass::All),
            "connected" => Ok(GraphClass::Connected),
            _ => Err(Error::Domain(format!("unknown graph class `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremumMode {
    Min,
    Max,
}

impl ExtremumMode {
    pub const ALL: [ExtremumMode; 2] = [ExtremumMode::Min, ExtremumMode::Max];
}

impl fmt::Display for ExtremumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremumMode::Min => "min",
            ExtremumMode::Max => "max",
        })
    }
}

impl FromStr for ExtremumMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(ExtremumMode::Min),
            "max" => Ok(ExtremumMode::Max),
            _ => Err(Error::Domain(format!("unknown extremum mode `{s}`"))),
        }
    }
}

/// The arithmetic type of `n` that decides the extremal value for a given
/// class and mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableRow {
    /// `n` odd: every graph is nonsingular.
    OddOrder,
    /// `n = 6`: the single graph `Circ(6, {1, 2})`.
    SixVertices,
    /// Minimum over all graphs, `n = 2^a (a >= 3)` or `n = 3 * 2^a (a >= 2)`:
    /// attained by the nut graphs.
    PowerOfTwoOrThreePowerOfTwo,
    /// Minimum over all graphs, `n = b * 2^a` with odd `b >= 5`.
    OddPartAtLeastFive,
    /// Minimum over connected graphs, `4 | n`, `n >= 8`: the nut graphs.
    MultipleOfFour,
    /// Minimum over connected graphs, `n = 2 (mod 4)`, `n >= 10`.
    TwiceOdd,
    /// Maximum, `n` even and `8 ∤ n`: `p + q = n/2`.
    EvenNotMultipleOfEight,
    /// Maximum, `8 | n`.
    MultipleOfEight,
}

impl TableRow {
    pub fn select(n: u64, class: GraphClass, mode: ExtremumMode) -> Self {
        if n % 2 == 1 {
            return TableRow::OddOrder;
        }
        match mode {
            ExtremumMode::Min if n == 6 => TableRow::SixVertices,
            ExtremumMode::Min => match class {
                GraphClass::All => {
                    let odd_part = n >> v2_of(n).value();
                    if odd_part >= 5 {
                        TableRow::OddPartAtLeastFive
                    } else {
                        TableRow::PowerOfTwoOrThreePowerOfTwo
                    }
                }
                GraphClass::Connected if n.is_multiple_of(4) => TableRow::MultipleOfFour,
                GraphClass::Connected => TableRow::TwiceOdd,
            },
            ExtremumMode::Max if n.is_multiple_of(8) => TableRow::MultipleOfEight,
            ExtremumMode::Max => TableRow::EvenNotMultipleOfEight,
        }
    }

    pub fn value(self, n: u64, class: GraphClass) -> u64 {
        match self {
            TableRow::OddOrder | TableRow::OddPartAtLeastFive | TableRow::TwiceOdd => 0,
            TableRow::SixVertices => 3,
            TableRow::PowerOfTwoOrThreePowerOfTwo | TableRow::MultipleOfFour => 1,
            TableRow::EvenNotMultipleOfEight => n / 2,
            TableRow::MultipleOfEight => match class {
                GraphClass::All => 3 * n / 4,
                GraphClass::Connected => n / 2 + 2,
            },
        }
    }

    /// Characterization of the attaining graphs in this row. Class
    /// membership is checked separately.
    pub fn characterizes(self, g: &QuarticCirculant, class: GraphClass) -> bool {
        let (n, p, q) = (g.n(), g.p(), g.q());
        match self {
            TableRow::OddOrder => true,
            TableRow::SixVertices => (p, q) == (1, 2),
            TableRow::PowerOfTwoOrThreePowerOfTwo | TableRow::MultipleOfFour => is_nut(g),
            TableRow::OddPartAtLeastFive => {
                // p = c * 2^(a-1), q = d * 2^(a-1) with c, d of equal parity.
                let unit = 1u64 << (v2_of(n).value() - 1);
                p % unit == 0 && q % unit == 0 && (p / unit + q / unit).is_multiple_of(2)
            }
            TableRow::TwiceOdd => p % 2 == 1 && q % 2 == 1 && gcd3(p, q, n) == 1,
            TableRow::EvenNotMultipleOfEight => p + q == n / 2,
            TableRow::MultipleOfEight => match class {
                GraphClass::All => 8 * p == n && 8 * q == 3 * n,
                GraphClass::Connected => p + q == n / 2 && gcd3(p, q, n) == 1,
            },
        }
    }

    fn nullspace_kind(self, class: GraphClass) -> NullSpaceKind {
        match self {
            TableRow::OddOrder | TableRow::OddPartAtLeastFive | TableRow::TwiceOdd => {
                NullSpaceKind::Trivial
            }
            TableRow::SixVertices => NullSpaceKind::SixVertexSpecial,
            TableRow::PowerOfTwoOrThreePowerOfTwo | TableRow::MultipleOfFour => {
                NullSpaceKind::AlternatingSpan
            }
            TableRow::EvenNotMultipleOfEight => NullSpaceKind::HalfShiftAntisymmetric,
            TableRow::MultipleOfEight => match class {
                GraphClass::All => NullSpaceKind::QuarterPeriodic,
                GraphClass::Connected => NullSpaceKind::HalfShiftPlusTwo,
            },
        }
    }
}

/// Family a null-space basis comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NullSpaceKind {
    /// Zero space.
    Trivial,
    /// `[1, -1, 1, -1, ...]`.
    AlternatingSpan,
    /// `v[j + n/2] = -v[j]`.
    HalfShiftAntisymmetric,
    /// `e_j - e_(n/2+j)` plus two alternating vectors on the upper half.
    HalfShiftPlusTwo,
    /// `v[j + 3n/4] = -v[j] - v[j + n/4] - v[j + n/2]`.
    QuarterPeriodic,
    /// `e_0 - e_3, e_1 - e_4, e_2 - e_5` for `Circ(6, {1, 2})`.
    SixVertexSpecial,
    /// No closed form applies; basis from exact elimination.
    OracleComputed,
}

impl fmt::Display for NullSpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NullSpaceKind::Trivial => "Trivial",
            NullSpaceKind::AlternatingSpan => "AlternatingSpan",
            NullSpaceKind::HalfShiftAntisymmetric => "HalfShiftAntisymmetric",
            NullSpaceKind::HalfShiftPlusTwo => "HalfShiftPlusTwo",
            NullSpaceKind::QuarterPeriodic => "QuarterPeriodic",
            NullSpaceKind::SixVertexSpecial => "SixVertexSpecial",
            NullSpaceKind::OracleComputed => "OracleComputed",
        };
        f.write_str(s)
    }
}

/// An exact null-space basis tagged with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NullSpaceDescriptor {
    pub kind: NullSpaceKind,
    pub basis: Vec<Vec<i64>>,
}

impl NullSpaceDescriptor {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Closed-form basis of the given kind at order `n`. `None` for
    /// `OracleComputed`, which depends on the graph.
    pub fn closed_form(kind: NullSpaceKind, n: usize) -> Option<Self> {
        let basis = match kind {
            NullSpaceKind::Trivial => Vec::new(),
            NullSpaceKind::AlternatingSpan => vec![alternating_vector(n)],
            NullSpaceKind::HalfShiftAntisymmetric | NullSpaceKind::SixVertexSpecial => {
                half_shift_pairs(n)
            }
            NullSpaceKind::HalfShiftPlusTwo => half_shift_plus_two_basis(n),
            NullSpaceKind::QuarterPeriodic => quarter_periodic_basis(n),
            NullSpaceKind::OracleComputed => return None,
        };
        Some(Self { kind, basis })
    }
}

fn unit_difference(n: usize, plus: usize, minus: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[plus] = 1;
    v[minus] = -1;
    v
}

/// `[1, -1, 1, -1, ...]` of length `n`.
pub fn alternating_vector(n: usize) -> Vec<i64> {
    (0..n).map(|j| if j % 2 == 0 { 1 } else { -1 }).collect()
}

/// `e_j - e_(j + n/2)` for `j < n/2`.
pub fn half_shift_pairs(n: usize) -> Vec<Vec<i64>> {
    let half = n / 2;
    (0..half).map(|j| unit_difference(n, j, j + half)).collect()
}

/// The `n/2 + 2` vectors spanning the null space when `8 | n`,
/// `p + q = n/2` and the graph is connected.
pub fn half_shift_plus_two_basis(n: usize) -> Vec<Vec<i64>> {
    let half = n / 2;
    let mut basis = half_shift_pairs(n);
    for offset in 0..2 {
        let mut v = vec![0; n];
        for j in 0..n / 4 {
            v[half + 2 * j + offset] = if j % 2 == 0 { 1 } else { -1 };
        }
        basis.push(v);
    }
    basis
}

/// Free coordinates `k < 3n/4`, each paired with its dependent coordinate
/// `3n/4 + (k mod n/4)`.
pub fn quarter_periodic_basis(n: usize) -> Vec<Vec<i64>> {
    let quarter = n / 4;
    (0..3 * quarter)
        .map(|k| unit_difference(n, k, 3 * quarter + k % quarter))
        .collect()
}

/// Every closed-form family `g` belongs to, in priority order.
pub fn applicable_families(g: &QuarticCirculant) -> Vec<NullSpaceKind> {
    let (n, p, q) = (g.n(), g.p(), g.q());
    let mut kinds = Vec::new();
    if n % 8 == 0 && 8 * p == n && 8 * q == 3 * n {
        kinds.push(NullSpaceKind::QuarterPeriodic);
    }
    let half_sum = 2 * (p + q) == n;
    if half_sum && n % 8 == 0 && g.is_connected() {
        kinds.push(NullSpaceKind::HalfShiftPlusTwo);
    }
    if n == 6 {
        kinds.push(NullSpaceKind::SixVertexSpecial);
    }
    if half_sum && n % 8 != 0 {
        kinds.push(NullSpaceKind::HalfShiftAntisymmetric);
    }
    if is_nut(g) {
        kinds.push(NullSpaceKind::AlternatingSpan);
    }
    if kinds.is_empty() && nullity(g).nullity == 0 {
        kinds.push(NullSpaceKind::Trivial);
    }
    kinds
}

/// Null space of one graph: the highest-priority closed form when one
/// applies, the oracle basis otherwise.
pub fn nullspace_basis(g: &QuarticCirculant) -> NullSpaceDescriptor {
    match applicable_families(g).first() {
        Some(&kind) => NullSpaceDescriptor::closed_form(kind, g.order()).expect("closed-form kind"),
        None => NullSpaceDescriptor {
            kind: NullSpaceKind::OracleComputed,
            basis: oracle::kernel(&g.adjacency_matrix()).integer_basis(),
        },
    }
}

/// Extremal nullity for one order, class and mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: u64,
    pub class: GraphClass,
    pub mode: ExtremumMode,
    pub value: u64,
    /// Lexicographically sorted `(p, q)` pairs.
    pub attaining: Vec<(u64, u64)>,
    pub table_row: TableRow,
    /// Shared null space of every attaining graph.
    pub nullspace: NullSpaceDescriptor,
}

fn checked_order(n: i64) -> Result<u64> {
    if n < 5 {
        Err(Error::OrderTooSmall { n })
    } else {
        Ok(n as u64)
    }
}

pub fn attaining_pairs(n: i64, class: GraphClass, mode: ExtremumMode) -> Result<Vec<(u64, u64)>> {
    let n = checked_order(n)?;
    let row = TableRow::select(n, class, mode);
    Ok(graphs_of_order(n)
        .filter(|g| class.admits(g) && row.characterizes(g, class))
        .map(|g| (g.p(), g.q()))
        .collect())
}

pub fn extremal_report(n: i64, class: GraphClass, mode: ExtremumMode) -> Result<ExtremalReport> {
    let attaining = attaining_pairs(n, class, mode)?;
    let n = n as u64;
    let table_row = TableRow::select(n, class, mode);
    let nullspace = NullSpaceDescriptor::closed_form(table_row.nullspace_kind(class), n as usize)
        .expect("every row has a closed form");
    Ok(ExtremalReport {
        n,
        class,
        mode,
        value: table_row.value(n, class),
        attaining,
        table_row,
        nullspace,
    })
}

pub fn min_nullity_report(n: i64, class: GraphClass) -> Result<ExtremalReport> {
    extremal_report(n, class, ExtremumMode::Min)
}

pub fn max_nullity_report(n: i64, class: GraphClass) -> Result<ExtremalReport> {
    extremal_report(n, class, ExtremumMode::Max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64, p: i64, q: i64) -> QuarticCirculant {
        QuarticCirculant::new(n, p, q).unwrap()
    }

    #[test]
    fn min_report_examples() {
        let r = min_nullity_report(16, GraphClass::All).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.table_row, TableRow::PowerOfTwoOrThreePowerOfTwo);

        let r = min_nullity_report(20, GraphClass::All).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.table_row, TableRow::OddPartAtLeastFive);
        assert!(r.attaining.contains(&(2, 6)));

        let r = min_nullity_report(10, GraphClass::Connected).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.attaining.contains(&(1, 3)));
        assert!(r.attaining.iter().all(|&(p, q)| p % 2 == 1 && q % 2 == 1));

        let r = min_nullity_report(6, GraphClass::Connected).unwrap();
        assert_eq!((r.value, r.attaining.clone()), (3, vec![(1, 2)]));
        assert_eq!(r.nullspace.kind, NullSpaceKind::SixVertexSpecial);

        assert_eq!(
            min_nullity_report(4, GraphClass::All),
            Err(Error::OrderTooSmall { n: 4 })
        );
    }

    #[test]
    fn max_report_examples() {
        let r = max_nullity_report(10, GraphClass::All).unwrap();
        assert_eq!((r.value, r.attaining), (5, vec![(1, 4), (2, 3)]));
        let r = max_nullity_report(16, GraphClass::All).unwrap();
        assert_eq!((r.value, r.attaining), (12, vec![(2, 6)]));
        let r = max_nullity_report(16, GraphClass::Connected).unwrap();
        assert_eq!((r.value, r.attaining), (10, vec![(1, 7), (3, 5)]));
        let r = max_nullity_report(7, GraphClass::Connected).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.nullspace.kind, NullSpaceKind::Trivial);
    }

    #[test]
    fn attaining_pair_examples() {
        // (1, 4) is not a nut pair: gcd(12, 3) = 3 gives it nullity 3.
        let pairs = attaining_pairs(12, GraphClass::All, ExtremumMode::Min).unwrap();
        assert_eq!(pairs, vec![(2, 3), (3, 4)]);
        assert_eq!(nullity(&g(12, 1, 4)).nullity, 3);
        assert_eq!(oracle::kernel_dimension(&g(12, 1, 4).adjacency_matrix()), 3);
        assert_eq!(
            attaining_pairs(8, GraphClass::All, ExtremumMode::Max).unwrap(),
            vec![(1, 3)]
        );
        assert_eq!(
            attaining_pairs(5, GraphClass::All, ExtremumMode::Min).unwrap(),
            vec![(1, 2)]
        );
    }

    #[test]
    fn nullspace_examples() {
        let d = nullspace_basis(&g(10, 1, 4));
        assert_eq!(d.kind, NullSpaceKind::HalfShiftAntisymmetric);
        let expected: Vec<Vec<i64>> = (0..5).map(|j| unit_difference(10, j, j + 5)).collect();
        assert_eq!(d.basis, expected);

        let d = nullspace_basis(&g(6, 1, 2));
        assert_eq!(d.kind, NullSpaceKind::SixVertexSpecial);
        assert_eq!(
            d.basis,
            vec![
                vec![1, 0, 0, -1, 0, 0],
                vec![0, 1, 0, 0, -1, 0],
                vec![0, 0, 1, 0, 0, -1],
            ]
        );

        let eight = g(8, 1, 3);
        let d = nullspace_basis(&eight);
        assert_eq!(d.kind, NullSpaceKind::QuarterPeriodic);
        assert_eq!(d.dimension(), 6);
        assert_eq!(
            applicable_families(&eight),
            vec![
                NullSpaceKind::QuarterPeriodic,
                NullSpaceKind::HalfShiftPlusTwo
            ]
        );
        let other = NullSpaceDescriptor::closed_form(NullSpaceKind::HalfShiftPlusTwo, 8).unwrap();
        assert!(oracle::same_span(&d.basis, &other.basis));

        assert_eq!(
            nullspace_basis(&g(8, 1, 2)).kind,
            NullSpaceKind::AlternatingSpan
        );
        assert_eq!(nullspace_basis(&g(7, 1, 2)).kind, NullSpaceKind::Trivial);
        let d = nullspace_basis(&g(12, 1, 2));
        assert_eq!(d.kind, NullSpaceKind::OracleComputed);
        assert_eq!(d.dimension(), 3);
    }

    #[test]
    fn table_rows_cover_small_orders() {
        use ExtremumMode::*;
        use GraphClass::*;
        assert_eq!(TableRow::select(9, All, Min), TableRow::OddOrder);
        assert_eq!(TableRow::select(6, Connected, Min), TableRow::SixVertices);
        assert_eq!(
            TableRow::select(8, All, Min),
            TableRow::PowerOfTwoOrThreePowerOfTwo
        );
        assert_eq!(
            TableRow::select(12, All, Min),
            TableRow::PowerOfTwoOrThreePowerOfTwo
        );
        assert_eq!(TableRow::select(10, All, Min), TableRow::OddPartAtLeastFive);
        assert_eq!(
            TableRow::select(24, All, Min),
            TableRow::PowerOfTwoOrThreePowerOfTwo
        );
        assert_eq!(TableRow::select(40, All, Min), TableRow::OddPartAtLeastFive);
        assert_eq!(
            TableRow::select(12, Connected, Min),
            TableRow::MultipleOfFour
        );
        assert_eq!(TableRow::select(14, Connected, Min), TableRow::TwiceOdd);
        assert_eq!(
            TableRow::select(6, All, Max),
            TableRow::EvenNotMultipleOfEight
        );
        assert_eq!(
            TableRow::select(24, Connected, Max),
            TableRow::MultipleOfEight
        );
    }

    #[test]
    fn parse_class_and_mode() {
        assert_eq!(
            "connected".parse::<GraphClass>().unwrap(),
            GraphClass::Connected
        );
        assert_eq!("max".parse::<ExtremumMode>().unwrap(), ExtremumMode::Max);
        assert!("some".parse::<GraphClass>().is_err());
    }
}
