use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coxeter::{Bond, CoxeterMatrix};
use crate::series::Polynomial;

/// Target width of the isolating interval after construction.
const INITIAL_PRECISION_BITS: u32 = 64;

/// The real cyclotomic field `Q(theta)` with `theta = 2cos(pi/L)`.
pub struct CyclotomicField {
    l: u64,
    minpoly: Polynomial,
    lo: BigRational,
    hi: BigRational,
    /// Sign of the minimal polynomial at `lo`.
    sign_at_lo: i8,
    /// `reduction[i]` holds the coefficients of `theta^(d+i)` reduced mod the minimal polynomial.
    reduction: Vec<Vec<BigRational>>,
}

impl CyclotomicField {
    /// Builds `Q(2cos(pi/L))`. `L = 1` gives `theta = -2`.
    pub fn new(l: u64) -> Arc<Self> {
        assert!(l >= 1, "L must be positive");
        let minpoly = if l == 1 {
            Polynomial::from_i64s(&[2, 1])
        } else {
            real_subfield_minpoly(&cyclotomic(2 * l))
        };
        let d = minpoly.degree().unwrap();
        let (lo, hi) = if d == 1 {
            let root = -minpoly.coeff(0);
            (root.clone(), root)
        } else {
            isolate_largest_root(&minpoly, INITIAL_PRECISION_BITS)
        };
        let sign_at_lo = sign_of(&minpoly.eval(&lo));
        let reduction = reduction_table(&minpoly);
        Arc::new(Self { l, minpoly, lo, hi, sign_at_lo, reduction })
    }

    /// The field suited to a Coxeter matrix: `L` is the lcm of the finite bonds `>= 4`,
    /// falling back to `L = 3` (or `L = 1`) when only bonds in `{2, 3, inf}` occur.
    pub fn for_matrix(m: &CoxeterMatrix) -> Arc<Self> {
        Self::new(field_parameter(m))
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn minpoly(&self) -> &Polynomial {
        &self.minpoly
    }

    /// Integer coefficients of the (monic) minimal polynomial, lowest degree first.
    pub fn minpoly_integers(&self) -> Vec<BigInt> {
        self.minpoly.to_integers().expect("minimal polynomial has integer coefficients")
    }

    /// The current isolating interval for `theta`.
    pub fn theta_interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn theta_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.l as f64).cos()
    }

    pub(crate) fn reduction(&self) -> &[Vec<BigRational>] {
        &self.reduction
    }

    /// Exact sign of `sum coeffs[i] theta^i`.
    pub(crate) fn sign_of_coeffs(&self, coeffs: &[BigRational]) -> i8 {
        if coeffs.iter().all(|c| c.is_zero()) {
            return 0;
        }
        if self.degree() == 1 {
            return sign_of(&coeffs[0]);
        }
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        loop {
            let (a, b) = interval_horner(coeffs, &lo, &hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            if sign_of(&self.minpoly.eval(&mid)) == self.sign_at_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicField(L={}, minpoly={})", self.l, self.minpoly)
    }
}

pub(crate) fn field_parameter(m: &CoxeterMatrix) -> u64 {
    let mut l = 1u64;
    let mut has_three = false;
    for i in 0..m.rank() {
        for j in i + 1..m.rank() {
            match m.bond(i, j) {
                Bond::Finite(3) => has_three = true,
                Bond::Finite(k) if k >= 4 => l = l.lcm(&(k as u64)),
                _ => {}
            }
        }
    }
    if l == 1 && has_three {
        3
    } else {
        l
    }
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `Phi_n` via `(x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic(n: u64) -> Polynomial {
    let mut p = Polynomial::one_minus_power(n as usize).scale(&-BigRational::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.exact_div(&cyclotomic(d));
        }
    }
    p
}

/// Given palindromic `phi` of degree `2d`, returns `psi` with `phi(x) = x^d psi(x + 1/x)`.
fn real_subfield_minpoly(phi: &Polynomial) -> Polynomial {
    let deg = phi.degree().unwrap();
    assert!(deg.is_multiple_of(2) && phi.is_palindromic());
    let d = deg / 2;
    let y = Polynomial::from_i64s(&[0, 1]);
    let mut prev = Polynomial::from_i64s(&[2]);
    let mut cur = y.clone();
    let mut psi = Polynomial::constant(phi.coeff(d));
    for j in 1..=d {
        psi = &psi + &cur.scale(&phi.coeff(d + j));
        let next = &(&y * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    psi
}

fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sturm_count(seq: &[Polynomial], x: &BigRational) -> usize {
    let values: Vec<BigRational> = seq.iter().map(|p| p.eval(x)).collect();
    Polynomial::sign_changes(&values)
}

/// Isolates the largest real root of a squarefree `p` whose roots lie in `(-3, 2)`,
/// then refines to width below `2^-bits`.
fn isolate_largest_root(p: &Polynomial, bits: u32) -> (BigRational, BigRational) {
    let seq = sturm_sequence(p);
    let two = BigRational::from_integer(2.into());
    let mut lo = BigRational::from_integer((-3).into());
    let mut hi = two.clone();
    let count_hi = sturm_count(&seq, &hi);
    while sturm_count(&seq, &lo) - count_hi > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm_count(&seq, &mid) - count_hi >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let s_lo = sign_of(&p.eval(&lo));
    while &hi - &lo > width {
        let mid = (&lo + &hi) / &two;
        if sign_of(&p.eval(&mid)) == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn reduction_table(minpoly: &Polynomial) -> Vec<Vec<BigRational>> {
    let d = minpoly.degree().unwrap();
    // theta^d = -(c_0 + ... + c_{d-1} theta^{d-1})
    let mut cur: Vec<BigRational> = (0..d).map(|i| -minpoly.coeff(i)).collect();
    let mut table = Vec::with_capacity(d);
    for _ in 0..d {
        table.push(cur.clone());
        // multiply by theta and reduce
        let top = cur[d - 1].clone();
        let mut next = vec![BigRational::zero(); d];
        next[1..d].clone_from_slice(&cur[..d - 1]);
        for i in 0..d {
            next[i] -= &top * minpoly.coeff(i);
        }
        cur = next;
    }
    table
}

fn interval_mul(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> (BigRational, BigRational) {
    let p = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let mut lo = p[0].clone();
    let mut hi = p[0].clone();
    for x in &p[1..] {
        if *x < lo {
            lo = x.clone();
        }
        if *x > hi {
            hi = x.clone();
        }
    }
    (lo, hi)
}

fn interval_horner(coeffs: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let x = (lo.clone(), hi.clone());
    let top = coeffs.last().unwrap().clone();
    let mut acc = (top.clone(), top);
    for c in coeffs.iter().rev().skip(1) {
        let m = interval_mul(&acc, &x);
        acc = (m.0 + c, m.1 + c);
    }
    acc
}
