//! Exact linear-algebra oracle, independent of the closed-form results.
//!
//! Rank and kernel come from fraction-free (Bareiss) elimination over the
//! integers. Elimination first runs in checked `i64` arithmetic and restarts
//! in `BigInt` the moment any product or difference would overflow, so no
//! result is ever computed from a wrapped value.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::{graphs_of_order, IntegerMatrix, QuarticCirculant};
use crate::error::{Error, Result};
use crate::extremal::{ExtremumMode, GraphClass};

/// Exact vector over the rationals. Coordinates are always in lowest terms
/// with positive denominators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalVector {
    coords: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn from_integers<I: Into<BigInt>>(values: impl IntoIterator<Item = I>) -> Self {
        Self {
            coords: values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// No zero coordinate. The empty vector counts as full.
    pub fn is_full(&self) -> bool {
        self.coords.iter().all(|c| !c.is_zero())
    }

    /// Integer coordinates if every denominator is one.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.to_integers()?
            .iter()
            .map(ToPrimitive::to_i64)
            .collect()
    }

    /// Scales to integers with content 1 and a positive first nonzero entry.
    pub fn normalized(&self) -> Self {
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !content.is_zero() {
            let sign =
                ints.iter().find(|x| !x.is_zero()).map_or(
                    1,
                    |x| {
                        if x.is_negative() {
                            -1
                        } else {
                            1
                        }
                    },
                );
            let divisor = content * sign;
            for x in &mut ints {
                *x = &*x / &divisor;
            }
        }
        Self::from_integers(ints)
    }
}

/// Same test on a plain integer vector.
pub fn is_full_vector(v: &[i64]) -> bool {
    v.iter().all(|&x| x != 0)
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", cells.join(", "))
    }
}

/// Rank, nullity and an exact kernel basis of a square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub dimension: usize,
    pub rank: usize,
    /// Integer vectors with content 1 and positive leading entry, one per free column.
    pub basis: Vec<RationalVector>,
}

impl KernelResult {
    /// The basis as machine integers. Panics if an entry exceeds `i64`.
    pub fn integer_basis(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .map(|v| v.to_i64().expect("kernel basis entries fit in i64"))
            .collect()
    }
}

/// How elimination picks its pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotOrder {
    /// Columns left to right, first nonzero row in each column.
    #[default]
    FirstNonzero,
    /// Columns visited in a seeded random order, pivot row drawn at random
    /// among the nonzero candidates.
    Shuffled(u64),
}

trait Entry: Clone + PartialEq + fmt::Debug {
    fn from_i64(x: i64) -> Self;
    fn is_nil(&self) -> bool;
    /// `(pivot * cur - lead * above) / prev`, exact; `None` on overflow.
    fn step(pivot: &Self, cur: &Self, lead: &Self, above: &Self, prev: &Self) -> Option<Self>;
    /// `acc + a * b`; `None` on overflow.
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self>;
    /// `-self / d` where the division is known to be exact.
    fn neg_div(&self, d: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }

    fn is_nil(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn step(pivot: &i64, cur: &i64, lead: &i64, above: &i64, prev: &i64) -> Option<i64> {
        let a = pivot.checked_mul(*cur)?;
        let b = lead.checked_mul(*above)?;
        let num = a.checked_sub(b)?;
        if num == 0 {
            return Some(0);
        }
        debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
        num.checked_div(*prev)
    }

    #[inline]
    fn mul_add(acc: &i64, a: &i64, b: &i64) -> Option<i64> {
        acc.checked_add(a.checked_mul(*b)?)
    }

    fn neg_div(&self, d: &i64) -> Option<i64> {
        debug_assert_eq!(self % d, 0, "back-substitution division must be exact");
        self.checked_div(*d)?.checked_neg()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }

    fn step(
        pivot: &BigInt,
        cur: &BigInt,
        lead: &BigInt,
        above: &BigInt,
        prev: &BigInt,
    ) -> Option<BigInt> {
        let num = pivot * cur - lead * above;
        debug_assert!(
            Zero::is_zero(&(&num % prev)),
            "Bareiss division must be exact"
        );
        Some(num / prev)
    }

    fn mul_add(acc: &BigInt, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(acc + a * b)
    }

    fn neg_div(&self, d: &BigInt) -> Option<BigInt> {
        debug_assert!(
            Zero::is_zero(&(self % d)),
            "back-substitution division must be exact"
        );
        Some(-(self / d))
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Row echelon form produced by fraction-free elimination.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    /// `(row, column)` of each pivot in elimination order.
    pivots: Vec<(usize, usize)>,
    cols: usize,
}

impl Echelon<i64> {
    fn to_big(&self) -> Echelon<BigInt> {
        Echelon {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(Entry::to_big).collect())
                .collect(),
            pivots: self.pivots.clone(),
            cols: self.cols,
        }
    }
}

impl<T: Entry> Echelon<T> {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One integer kernel vector per free column, in column order.
    ///
    /// The last Bareiss pivot is (up to sign) the determinant of the pivot
    /// block, so scaling each solution by it keeps every step integral.
    fn kernel_basis(&self) -> Option<Vec<Vec<T>>> {
        let mut is_pivot = vec![false; self.cols];
        for &(_, c) in &self.pivots {
            is_pivot[c] = true;
        }
        let scale = match self.pivots.last() {
            Some(&(r, c)) => self.rows[r][c].clone(),
            None => T::from_i64(1),
        };
        let zero = T::from_i64(0);
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut x = vec![zero.clone(); self.cols];
                x[free] = scale.clone();
                for &(r, c) in self.pivots.iter().rev() {
                    let row = &self.rows[r];
                    let mut acc = zero.clone();
                    for (j, a) in row.iter().enumerate() {
                        if j != c && !a.is_nil() && !x[j].is_nil() {
                            acc = T::mul_add(&acc, a, &x[j])?;
                        }
                    }
                    x[c] = acc.neg_div(&row[c])?;
                }
                Some(x)
            })
            .collect()
    }
}

fn eliminate_with<T: Entry>(
    source: &[Vec<i64>],
    cols: usize,
    col_order: &[usize],
    rng: &mut Option<ChaCha8Rng>,
) -> Option<Echelon<T>> {
    let mut rows: Vec<Vec<T>> = source
        .iter()
        .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
        .collect();
    let height = rows.len();
    let mut prev = T::from_i64(1);
    let mut pivots = Vec::new();
    let mut r = 0;
    for (pos, &c) in col_order.iter().enumerate() {
        if r == height {
            break;
        }
        let candidates = (r..height).filter(|&i| !rows[i][c].is_nil());
        let chosen = match rng {
            None => candidates.take(1).next(),
            Some(rng) => {
                let all: Vec<usize> = candidates.collect();
                (!all.is_empty()).then(|| all[rng.gen_range(0..all.len())])
            }
        };
        let Some(pr) = chosen else { continue };
        rows.swap(r, pr);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            // A zero lead only rescales the row by pivot / prev.
            if lead.is_nil() && pivot == prev {
                continue;
            }
            // Earlier columns are already zero below the pivot.
            for &j in &col_order[pos + 1..] {
                if row[j].is_nil() && (lead.is_nil() || pivot_row[j].is_nil()) {
                    continue;
                }
                row[j] = T::step(&pivot, &row[j], &lead, &pivot_row[j], &prev)?;
            }
            row[c] = T::from_i64(0);
        }
        pivots.push((r, c));
        prev = pivot;
        r += 1;
    }
    Some(Echelon { rows, pivots, cols })
}

enum AnyEchelon {
    Small(Echelon<i64>),
    Big(Echelon<BigInt>),
}

fn eliminate(source: &[Vec<i64>], cols: usize, order: PivotOrder) -> AnyEchelon {
    let mut col_order: Vec<usize> = (0..cols).collect();
    let mut rng = match order {
        PivotOrder::FirstNonzero => None,
        PivotOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    if let Some(rng) = rng.as_mut() {
        col_order.shuffle(rng);
    }
    // The BigInt rerun starts from the same generator state, so it makes
    // the same pivot choices.
    let mut fast_rng = rng.clone();
    match eliminate_with::<i64>(source, cols, &col_order, &mut fast_rng) {
        Some(e) => AnyEchelon::Small(e),
        None => AnyEchelon::Big(
            eliminate_with::<BigInt>(source, cols, &col_order, &mut rng)
                .expect("BigInt elimination cannot overflow"),
        ),
    }
}

fn rank_only(source: &[Vec<i64>], cols: usize) -> usize {
    match eliminate(source, cols, PivotOrder::FirstNonzero) {
        AnyEchelon::Small(e) => e.rank(),
        AnyEchelon::Big(e) => e.rank(),
    }
}

/// Content 1, positive first nonzero entry.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return v;
    }
    let negative = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let divisor = if negative { -content } else { content };
    for x in &mut v {
        *x = &*x / &divisor;
    }
    v
}

fn big_basis(e: &Echelon<BigInt>) -> Vec<Vec<BigInt>> {
    e.kernel_basis()
        .expect("BigInt back-substitution cannot overflow")
}

fn to_rows(m: &IntegerMatrix) -> Vec<Vec<i64>> {
    m.rows().map(<[i64]>::to_vec).collect()
}

/// Exact kernel with the deterministic first-nonzero pivot rule.
pub fn kernel(m: &IntegerMatrix) -> KernelResult {
    kernel_with(m, PivotOrder::FirstNonzero)
}

pub fn kernel_with(m: &IntegerMatrix, order: PivotOrder) -> KernelResult {
    let (rank, raw) = match eliminate(&to_rows(m), m.order(), order) {
        AnyEchelon::Small(e) => {
            let basis = match e.kernel_basis() {
                Some(b) => b
                    .iter()
                    .map(|v| v.iter().map(Entry::to_big).collect())
                    .collect(),
                None => big_basis(&e.to_big()),
            };
            (e.rank(), basis)
        }
        AnyEchelon::Big(e) => (e.rank(), big_basis(&e)),
    };
    KernelResult {
        dimension: m.order() - rank,
        rank,
        basis: raw
            .into_iter()
            .map(|v| RationalVector::from_integers(primitive(v)))
            .collect(),
    }
}

/// Rank without building a kernel basis.
pub fn rank(m: &IntegerMatrix) -> usize {
    rank_only(&to_rows(m), m.order())
}

pub fn kernel_dimension(m: &IntegerMatrix) -> usize {
    m.order() - rank(m)
}

/// Rank of a list of equal-length integer vectors stacked as rows.
pub fn rank_of_vectors(vectors: &[Vec<i64>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let cols = first.len();
    assert!(
        vectors.iter().all(|v| v.len() == cols),
        "stacked vectors must share a length"
    );
    rank_only(vectors, cols)
}

/// True when both families of vectors span the same space.
pub fn same_span(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let ra = rank_of_vectors(a);
    let rb = rank_of_vectors(b);
    let stacked: Vec<Vec<i64>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank_of_vectors(&stacked) == ra
}

/// Kernel dimension = 1 and the spanning vector has no zero coordinate.
pub fn nut_oracle(g: &QuarticCirculant) -> bool {
    let k = kernel(&g.adjacency_matrix());
    k.dimension == 1 && k.basis[0].is_full()
}

/// Searches the span of `basis` for a full vector using seeded random integer
/// combinations, redrawing whenever a coordinate vanishes.
pub fn full_vector_in_span(basis: &[Vec<i64>], seed: u64, attempts: usize) -> Option<Vec<i64>> {
    let len = basis.first()?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 2 * len as i64 + 1;
    for _ in 0..attempts {
        let coeffs: Vec<i64> = basis
            .iter()
            .map(|_| rng.gen_range(-bound..=bound))
            .collect();
        let v: Vec<i64> = (0..len)
            .map(|j| basis.iter().zip(&coeffs).map(|(b, c)| b[j] * c).sum())
            .collect();
        if is_full_vector(&v) {
            return Some(v);
        }
    }
    None
}

/// Extremal nullity over a class, found by computing every kernel dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceExtremum {
    pub value: u64,
    pub attaining: Vec<(u64, u64)>,
}

/// Oracle kernel dimension for every graph of order `n` in the class, in
/// lexicographic `(p, q)` order.
pub fn oracle_nullities(n: u64, class: GraphClass) -> Vec<(QuarticCirculant, u64)> {
    let graphs: Vec<QuarticCirculant> = graphs_of_order(n).filter(|g| class.admits(g)).collect();
    graphs
        .par_iter()
        .map(|g| (*g, kernel_dimension(&g.adjacency_matrix()) as u64))
        .collect()
}

pub fn brute_force_extremum(
    n: i64,
    class: GraphClass,
    mode: ExtremumMode,
) -> Result<BruteForceExtremum> {
    if n < 5 {
        return Err(Error::OrderTooSmall { n });
    }
    Ok(extremum_of(&oracle_nullities(n as u64, class), mode))
}

/// Extremum and arg-extremum set of precomputed nullities.
pub fn extremum_of(
    nullities: &[(QuarticCirculant, u64)],
    mode: ExtremumMode,
) -> BruteForceExtremum {
    let values = nullities.iter().map(|&(_, k)| k);
    let value = match mode {
        ExtremumMode::Min => values.min(),
        ExtremumMode::Max => values.max(),
    }
    .unwrap_or(0);
    let attaining = nullities
        .iter()
        .filter(|&&(_, k)| k == value)
        .map(|(g, _)| (g.p(), g.q()))
        .collect();
    BruteForceExtremum { value, attaining }
}
