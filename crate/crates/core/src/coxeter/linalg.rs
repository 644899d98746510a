use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

use crate::arith::{AlgebraicNumber, CyclotomicField};

/// A vector of `V` in the basis of simple roots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<AlgebraicNumber>);

impl Vector {
    pub fn new(coords: Vec<AlgebraicNumber>) -> Self {
        Self(coords)
    }

    pub fn zero(field: &Arc<CyclotomicField>, n: usize) -> Self {
        Self(vec![AlgebraicNumber::zero(field); n])
    }

    /// The simple root `alpha_i`.
    pub fn basis(field: &Arc<CyclotomicField>, n: usize, i: usize) -> Self {
        let mut v = Self::zero(field, n);
        v.0[i] = AlgebraicNumber::one(field);
        v
    }

    pub fn from_integers(field: &Arc<CyclotomicField>, coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| AlgebraicNumber::from_integer(field, c)).collect())
    }

    pub fn coords(&self) -> &[AlgebraicNumber] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [AlgebraicNumber] {
        &mut self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Sign of the first nonzero coordinate. For a root this is its sign.
    pub fn leading_sign(&self) -> i8 {
        self.0.iter().find(|c| !c.is_zero()).map_or(0, |c| c.sign())
    }

    /// True iff every coordinate is `>= 0` and some coordinate is nonzero.
    pub fn is_nonnegative_nonzero(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|c| c.sign() >= 0)
    }

    /// Index of the only nonzero coordinate when it equals 1.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() || c.as_rational().is_none_or(|q| !q.is_integer() || q.to_integer() != 1.into()) {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn scale(&self, k: &AlgebraicNumber) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.to_f64()).collect()
    }

    /// Compact label: digits run together (`312`) when all coordinates are integers in `0..10`.
    pub fn label(&self) -> String {
        let digits: Option<String> = self
            .0
            .iter()
            .map(|c| {
                c.as_rational()
                    .filter(|q| q.is_integer() && !q.is_negative())
                    .and_then(|q| q.to_integer().to_u32())
                    .filter(|&d| d < 10)
                    .map(|d| char::from_digit(d, 10).unwrap())
            })
            .collect();
        digits.unwrap_or_else(|| {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(", "))
        })
    }
}

impl PartialOrd for Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by exact coordinate value.
impl Ord for Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector({})", self.label())
    }
}

/// A dense square matrix over the field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<AlgebraicNumber>,
}

impl Matrix {
    pub fn identity(field: &Arc<CyclotomicField>, n: usize) -> Self {
        let mut data = vec![AlgebraicNumber::zero(field); n * n];
        for i in 0..n {
            data[i * n + i] = AlgebraicNumber::one(field);
        }
        Self { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<AlgebraicNumber>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraicNumber {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: AlgebraicNumber) {
        self.data[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn column_sign(&self, j: usize) -> i8 {
        (0..self.n).map(|i| self.get(i, j)).find(|c| !c.is_zero()).map_or(0, |c| c.sign())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let c = self.get(i, j);
                if i == j {
                    c.as_rational().is_some_and(|q| q == num_rational::BigRational::from_integer(1.into()))
                } else {
                    c.is_zero()
                }
            })
        })
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let n = self.n;
        let field = self.data[0].field();
        Vector::new(
            (0..n)
                .map(|i| {
                    let mut acc = AlgebraicNumber::zero(field);
                    for j in 0..n {
                        let a = self.get(i, j);
                        if !a.is_zero() && !v.coords()[j].is_zero() {
                            acc += &(a * &v.coords()[j]);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let field = self.data[0].field().clone();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = AlgebraicNumber::zero(&field);
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                data.push(acc);
            }
        }
        Self { n, data }
    }

    /// `self <- self * R` where `R` is the identity except row `s`, which equals `row`.
    pub(crate) fn mul_right_row_op(&mut self, s: usize, row: &[AlgebraicNumber]) {
        let n = self.n;
        for i in 0..n {
            let m_is = self.data[i * n + s].clone();
            if m_is.is_zero() {
                continue;
            }
            for j in 0..n {
                let r = &row[j];
                if j == s {
                    self.data[i * n + j] = &m_is * r;
                } else if !r.is_zero() {
                    let add = &m_is * r;
                    self.data[i * n + j] += &add;
                }
            }
        }
    }

    /// `self <- R * self` where `R` is the identity except row `s`, which equals `row`.
    pub(crate) fn mul_left_row_op(&mut self, s: usize, row: &[AlgebraicNumber]) {
        let n = self.n;
        let field = self.data[0].field().clone();
        let mut new_row = vec![AlgebraicNumber::zero(&field); n];
        for (k, r) in row.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (j, slot) in new_row.iter_mut().enumerate() {
                let m = &self.data[k * n + j];
                if !m.is_zero() {
                    *slot += &(r * m);
                }
            }
        }
        for (j, v) in new_row.into_iter().enumerate() {
            self.data[s * n + j] = v;
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
