use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CyclotomicField;
use crate::error::{CoxError, Result};

/// An element of a [`CyclotomicField`], stored as a polynomial in `theta` of degree below
/// the field degree.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl AlgebraicNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: BigRational) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = q;
        x
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(field: &Arc<CyclotomicField>, num: i64, den: i64) -> Self {
        Self::from_rational(field, BigRational::new(num.into(), den.into()))
    }

    /// The generator `theta = 2cos(pi/L)`.
    pub fn theta(field: &Arc<CyclotomicField>) -> Self {
        Self::from_coeffs(field, vec![BigRational::zero(), BigRational::one()])
    }

    /// Builds `sum coeffs[i] theta^i`, reducing modulo the minimal polynomial.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        Self { field: field.clone(), coeffs: reduce(field, coeffs) }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn sign(&self) -> i8 {
        self.field.sign_of_coeffs(&self.coeffs)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    pub fn to_f64(&self) -> f64 {
        let t = self.field.theta_f64();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        Self { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.l() == other.field.l()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check(other)?;
        Ok(self.cmp(other))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(CoxError::FieldMismatch)
        }
    }

    fn assert_field(&self, other: &Self) {
        assert!(self.same_field(other), "algebraic numbers from different fields");
    }
}

fn reduce(field: &CyclotomicField, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let d = field.degree();
    if coeffs.len() > d {
        let table = field.reduction();
        let high: Vec<BigRational> = coeffs.drain(d..).collect();
        for (i, c) in high.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, r) in table[i].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[k] += &c * r;
                }
            }
        }
    }
    coeffs.resize(d, BigRational::zero());
    coeffs
}

impl Add<&AlgebraicNumber> for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn add(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        self.assert_field(rhs);
        AlgebraicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&AlgebraicNumber> for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn sub(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        self.assert_field(rhs);
        AlgebraicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&AlgebraicNumber> for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn mul(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        self.assert_field(rhs);
        let d = self.coeffs.len();
        if d == 1 {
            return AlgebraicNumber {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut out = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        AlgebraicNumber { field: self.field.clone(), coeffs: reduce(&self.field, out) }
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(mut self) -> AlgebraicNumber {
        for c in &mut self.coeffs {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $f(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $f(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&AlgebraicNumber> for AlgebraicNumber {
    fn add_assign(&mut self, rhs: &AlgebraicNumber) {
        self.assert_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&AlgebraicNumber> for AlgebraicNumber {
    fn sub_assign(&mut self, rhs: &AlgebraicNumber) {
        self.assert_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraicNumber {}

impl Hash for AlgebraicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, "-")?,
                (false, false) => write!(f, "+")?,
                (true, false) => {}
            }
            first = false;
            if i == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "θ")?,
                _ => write!(f, "θ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (L={})", self.field.l())
    }
}
