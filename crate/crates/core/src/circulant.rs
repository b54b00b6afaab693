//! Quartic circulant graphs `Circ(n, {p, q})` and their adjacency data.

use std::collections::VecDeque;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arithmetic::gcd3;
use crate::error::{Error, Result};

/// A validated quartic circulant graph: order `n >= 5`, jumps `1 <= p < q < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuarticCirculant {
    n: u64,
    p: u64,
    q: u64,
}

impl QuarticCirculant {
    /// Validates the raw triple. Jumps are not normalized: `q = n/2` or a
    /// residue above `n/2` is rejected rather than folded.
    pub fn new(n: i64, p: i64, q: i64) -> Result<Self> {
        if n < 5 {
            return Err(Error::OrderTooSmall { n });
        }
        if p < 1 || p >= q || 2 * q >= n {
            return Err(Error::JumpOutOfRange { n, p, q });
        }
        Ok(Self {
            n: n as u64,
            p: p as u64,
            q: q as u64,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The four residues adjacent to vertex 0.
    pub fn neighbour_offsets(&self) -> [u64; 4] {
        [self.p, self.q, self.n - self.q, self.n - self.p]
    }

    pub fn adjacency_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::circulant(self.order(), &self.neighbour_offsets())
    }

    /// Connected iff `gcd(n, p, q) = 1`.
    pub fn is_connected(&self) -> bool {
        gcd3(self.n, self.p, self.q) == 1
    }

    /// Exact description of the eigenvalue `P(zeta)` at `zeta = exp(2 pi i t / n)`.
    pub fn eigenvalue_at_root(&self, t: u64) -> Result<RootEigenvalue> {
        if t >= self.n {
            return Err(Error::IndexOutOfRange { n: self.n, t });
        }
        let n = self.n;
        // P(zeta) vanishes iff zeta^(p+q) = -1 or zeta^(q-p) = -1.
        let hits_minus_one = |e: u64| n.is_multiple_of(2) && (t * e) % n == n / 2;
        let sum_factor_zero = hits_minus_one(self.p + self.q);
        let diff_factor_zero = hits_minus_one(self.q - self.p);
        let angle = 2.0 * PI * t as f64 / n as f64;
        let approx = 2.0 * (angle * self.p as f64).cos() + 2.0 * (angle * self.q as f64).cos();
        Ok(RootEigenvalue {
            t,
            sum_factor_zero,
            diff_factor_zero,
            approx,
        })
    }

    /// All `n` eigenvalue descriptors in root-index order.
    pub fn spectrum(&self) -> Vec<RootEigenvalue> {
        (0..self.n)
            .map(|t| self.eigenvalue_at_root(t).expect("index in range"))
            .collect()
    }
}

impl fmt::Display for QuarticCirculant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Circ({}, {{{}, {}}})", self.n, self.p, self.q)
    }
}

/// Iterates every valid `(p, q)` for order `n` in lexicographic order.
pub fn valid_pairs(n: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..n).flat_map(move |p| ((p + 1)..n).filter(move |q| 2 * q < n).map(move |q| (p, q)))
}

/// Iterates every valid graph of order `n` in lexicographic `(p, q)` order.
pub fn graphs_of_order(n: u64) -> impl Iterator<Item = QuarticCirculant> {
    valid_pairs(n).map(move |(p, q)| QuarticCirculant { n, p, q })
}

/// `P(zeta)` at one root of unity. Zero-ness is decided by congruences; `approx`
/// is a floating-point value for display only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootEigenvalue {
    pub t: u64,
    /// `zeta^(p+q) = -1`
    pub sum_factor_zero: bool,
    /// `zeta^(q-p) = -1`
    pub diff_factor_zero: bool,
    pub approx: f64,
}

impl RootEigenvalue {
    pub fn is_zero(&self) -> bool {
        self.sum_factor_zero || self.diff_factor_zero
    }
}

/// Dense square integer matrix stored row-major.
///
/// Entries are `i64`; code that eliminates on this type must either stay
/// within checked `i64` arithmetic or promote to arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Domain("matrix must be square".into()));
        }
        Ok(Self {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Symmetric 0/1 circulant with `entry(i, j) = 1` iff `(j - i) mod n` is an offset.
    /// Accepts any offset set; quartic graphs pass four residues.
    pub fn circulant(order: usize, offsets: &[u64]) -> Self {
        let mut m = Self::zeros(order);
        if order == 0 {
            return m;
        }
        for i in 0..order {
            for &s in offsets {
                let j = (i + s as usize) % order;
                m.entries[i * order + j] = 1;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact product with an integer vector. Panics on length mismatch.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i128> {
        assert_eq!(v.len(), self.order, "vector length must equal matrix order");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(&a, &x)| a as i128 * x as i128)
                    .sum()
            })
            .collect()
    }

    pub fn annihilates(&self, v: &[i64]) -> bool {
        self.mul_vec(v).iter().all(|&x| x == 0)
    }

    /// Breadth-first connectivity over nonzero off-diagonal entries.
    pub fn is_connected_bfs(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for (v, &a) in self.row(u).iter().enumerate() {
                if a != 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
