use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::Polynomial;
use crate::error::{CoxError, Result};

/// A rational function `num(q)/den(q)` with `den(0) = 1` and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    num: Polynomial,
    den: Polynomial,
}

impl RationalSeries {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(CoxError::Domain("denominator must have a nonzero constant term".into()));
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if num.is_zero() {
            (num, Polynomial::one())
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let c = den.coeff(0).recip();
        Ok(Self { num: num.scale(&c), den: den.scale(&c) })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    /// `p / (1 - q^k)`
    pub fn over_one_minus_power(p: Polynomial, k: usize) -> Self {
        Self::new(p, Polynomial::one_minus_power(k)).expect("1 - q^k has constant term 1")
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The first `n` power-series coefficients.
    pub fn coefficients(&self, n: usize) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        let d0 = self.den.coeff(0);
        for k in 0..n {
            let mut c = self.num.coeff(k);
            for (j, dj) in self.den.coeffs().iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    c -= dj * &out[k - j];
                }
            }
            out.push(c / &d0);
        }
        out
    }

    /// The first `n` coefficients, if they are all integers.
    pub fn integer_coefficients(&self, n: usize) -> Option<Vec<BigInt>> {
        self.coefficients(n).into_iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("product of valid denominators")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("product of valid denominators")
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("valid denominator")
    }

    /// `f(q^k)`
    pub fn substitute_power(&self, k: usize) -> Self {
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k)).expect("den(0) is preserved")
    }

    /// `q^k f(q)`
    pub fn shift(&self, k: usize) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    /// `f(q)/q`, defined when `f(0) = 0`.
    pub fn div_q(&self) -> Result<Self> {
        if !self.num.coeff(0).is_zero() {
            return Err(CoxError::Domain("series has a nonzero constant term".into()));
        }
        let coeffs = self.num.coeffs().iter().skip(1).cloned().collect();
        Ok(Self { num: Polynomial::new(coeffs), den: self.den.clone() })
    }

    /// `{"num": [...], "den": [...], "coefficients": [first n]}` with exact values as strings.
    pub fn to_json(&self, n: usize) -> Value {
        let strs = |v: &[BigRational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        json!({
            "num": strs(self.num.coeffs()),
            "den": strs(self.den.coeffs()),
            "coefficients": strs(&self.coefficients(n)),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let parse = |key: &str| -> Result<Polynomial> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| CoxError::Parse(format!("missing array `{key}`")))?;
            let coeffs = arr
                .iter()
                .map(|c| {
                    c.as_str()
                        .and_then(|s| s.parse::<BigRational>().ok())
                        .ok_or_else(|| CoxError::Parse(format!("bad coefficient {c}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Polynomial::new(coeffs))
        };
        Self::new(parse("num")?, parse("den")?)
    }
}

impl From<Polynomial> for RationalSeries {
    fn from(p: Polynomial) -> Self {
        Self::polynomial(p)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalSeries({self})")
    }
}
