use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::element::{shortlex, GroupElement, ReflectionRows, Word};
use super::linalg::{Matrix, Vector};
use super::matrix::{Bond, CoxeterMatrix};
use crate::arith::{AlgebraicNumber, CyclotomicField};
use crate::error::{CoxError, Result};

/// Steps allowed when descending a vector towards a simple root.
const DESCENT_CAP: usize = 100_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum NormMode {
    /// Every simple root has `B(alpha_s, alpha_s) = 1`.
    Unitary,
    /// Simple roots carry rational squared norms from Cartan data.
    Crystallographic,
}

/// A Coxeter system together with its geometric representation.
#[derive(Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    field: Arc<CyclotomicField>,
    mode: NormMode,
    gram: Vec<Vec<AlgebraicNumber>>,
    norms: Vec<BigRational>,
    rows: ReflectionRows,
}

impl std::fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CoxeterSystem({}, {:?})", self.matrix.to_json(), self.mode)
    }
}

/// `-cos(pi/m)` in the given field.
fn neg_cos_pi_over(field: &Arc<CyclotomicField>, bond: Bond) -> AlgebraicNumber {
    match bond {
        Bond::Infinite => AlgebraicNumber::from_integer(field, -1),
        Bond::Finite(1) => AlgebraicNumber::from_integer(field, -1),
        Bond::Finite(2) => AlgebraicNumber::zero(field),
        Bond::Finite(3) => AlgebraicNumber::from_ratio(field, -1, 2),
        Bond::Finite(m) => {
            let l = field.l();
            assert!(l.is_multiple_of(m as u64), "bond {m} does not divide L = {l}");
            let k = l / m as u64;
            // c_j = 2cos(j pi / L): c_0 = 2, c_1 = theta, c_{j+1} = theta c_j - c_{j-1}
            let theta = AlgebraicNumber::theta(field);
            let mut prev = AlgebraicNumber::from_integer(field, 2);
            let mut cur = theta.clone();
            for _ in 1..k {
                let next = &(&theta * &cur) - &prev;
                prev = cur;
                cur = next;
            }
            cur.mul_rational(&BigRational::new((-1).into(), 2.into()))
        }
    }
}

/// `cos^2(pi/m)` for the bonds allowed in crystallographic mode.
fn cos_sq(bond: Bond) -> Option<BigRational> {
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    match bond {
        Bond::Finite(2) => Some(r(0, 1)),
        Bond::Finite(3) => Some(r(1, 4)),
        Bond::Finite(4) => Some(r(1, 2)),
        Bond::Finite(6) => Some(r(3, 4)),
        Bond::Infinite => Some(r(1, 1)),
        _ => None,
    }
}

impl CoxeterSystem {
    /// The classical geometric representation with unit simple roots.
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let field = CyclotomicField::for_matrix(&matrix);
        let n = matrix.rank();
        let gram: Vec<Vec<AlgebraicNumber>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            AlgebraicNumber::one(&field)
                        } else {
                            neg_cos_pi_over(&field, matrix.bond(i, j))
                        }
                    })
                    .collect()
            })
            .collect();
        let norms = vec![BigRational::one(); n];
        Self::assemble(matrix, field, NormMode::Unitary, gram, norms)
    }

    pub fn from_preset(name: &str) -> Result<Self> {
        Ok(Self::new(CoxeterMatrix::preset(name)?))
    }

    /// A representation with a prescribed rational Gram matrix, which must be compatible with
    /// the bonds: `B_st <= 0` and `B_st^2 = B_ss B_tt cos^2(pi/m_st)`.
    pub fn crystallographic(matrix: CoxeterMatrix, gram: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = matrix.rank();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(CoxError::InvalidMatrix("Gram matrix has the wrong shape".into()));
        }
        for i in 0..n {
            if !gram[i][i].is_positive() {
                return Err(CoxError::InvalidMatrix(format!("norm of simple root {} is not positive", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let c2 = cos_sq(matrix.bond(i, j)).ok_or_else(|| {
                    CoxError::InvalidMatrix(format!("bond {} is not crystallographic", matrix.bond(i, j)))
                })?;
                let b = &gram[i][j];
                if *b != gram[j][i] || b.is_positive() || b * b != &gram[i][i] * &gram[j][j] * c2 {
                    return Err(CoxError::InvalidMatrix(format!(
                        "Gram entry ({}, {}) does not match bond {}",
                        i + 1,
                        j + 1,
                        matrix.bond(i, j)
                    )));
                }
            }
        }
        let field = CyclotomicField::new(3);
        let norms: Vec<BigRational> = (0..n).map(|i| gram[i][i].clone()).collect();
        let gram = gram
            .into_iter()
            .map(|r| r.into_iter().map(|q| AlgebraicNumber::from_rational(&field, q)).collect())
            .collect();
        Ok(Self::assemble(matrix, field, NormMode::Crystallographic, gram, norms))
    }

    fn assemble(
        matrix: CoxeterMatrix,
        field: Arc<CyclotomicField>,
        mode: NormMode,
        gram: Vec<Vec<AlgebraicNumber>>,
        norms: Vec<BigRational>,
    ) -> Self {
        let n = matrix.rank();
        let rows = (0..n)
            .map(|s| {
                let factor = BigRational::from_integer(2.into()) / &norms[s];
                (0..n)
                    .map(|j| {
                        let r = gram[s][j].mul_rational(&factor);
                        if j == s {
                            AlgebraicNumber::one(&field) - r
                        } else {
                            -r
                        }
                    })
                    .collect()
            })
            .collect();
        Self { matrix, field, mode, gram, norms, rows: Arc::new(rows) }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn mode(&self) -> NormMode {
        self.mode
    }

    pub fn gram(&self, i: usize, j: usize) -> &AlgebraicNumber {
        &self.gram[i][j]
    }

    /// `B(alpha_s, alpha_s)`.
    pub fn simple_norm_sq(&self, s: usize) -> &BigRational {
        &self.norms[s]
    }

    pub fn simple_root(&self, s: usize) -> Vector {
        Vector::basis(&self.field, self.rank(), s)
    }

    pub fn num(&self, n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(&self.field, n)
    }

    pub fn rational(&self, q: BigRational) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(&self.field, q)
    }

    pub fn vector(&self, coords: &[i64]) -> Vector {
        Vector::from_integers(&self.field, coords)
    }

    /// `B(alpha_s, v)`.
    pub fn pair_simple(&self, s: usize, v: &Vector) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero(&self.field);
        for (g, c) in self.gram[s].iter().zip(v.coords()) {
            if !g.is_zero() && !c.is_zero() {
                acc += &(g * c);
            }
        }
        acc
    }

    pub fn bilinear(&self, u: &Vector, v: &Vector) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero(&self.field);
        for (i, c) in u.coords().iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * &self.pair_simple(i, v));
            }
        }
        acc
    }

    pub fn norm_sq(&self, v: &Vector) -> AlgebraicNumber {
        self.bilinear(v, v)
    }

    /// `s(v) = v - 2B(alpha_s, v)/B(alpha_s, alpha_s) alpha_s`; only coordinate `s` changes.
    pub fn reflect(&self, s: usize, v: &Vector) -> Vector {
        let mut out = v.clone();
        self.reflect_in_place(s, &mut out);
        out
    }

    pub fn reflect_in_place(&self, s: usize, v: &mut Vector) {
        let mut acc = AlgebraicNumber::zero(&self.field);
        for (r, c) in self.rows[s].iter().zip(v.coords()) {
            if !r.is_zero() && !c.is_zero() {
                acc += &(r * c);
            }
        }
        v.coords_mut()[s] = acc;
    }

    /// The matrix of `sigma_s`.
    pub fn simple_matrix(&self, s: usize) -> Matrix {
        let mut m = Matrix::identity(&self.field, self.rank());
        for (j, r) in self.rows[s].iter().enumerate() {
            m.set(s, j, r.clone());
        }
        m
    }

    pub fn identity(&self) -> GroupElement {
        let id = Matrix::identity(&self.field, self.rank());
        GroupElement::from_parts(&self.rows, id.clone(), id, 0, Some(Word::empty()))
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        let m = self.simple_matrix(s);
        GroupElement::from_parts(&self.rows, m.clone(), m, 1, Some(Word::new(vec![s])))
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&l| l >= self.rank()) {
            Some(&l) => Err(CoxError::LetterOutOfRange { letter: l + 1, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// The element represented by a word, with its ShortLex normal form.
    pub fn evaluate(&self, w: &Word) -> Result<GroupElement> {
        self.check_word(w)?;
        let mut m = Matrix::identity(&self.field, self.rank());
        let mut inv = m.clone();
        for &s in w.letters() {
            m.mul_right_row_op(s, &self.rows[s]);
            inv.mul_left_row_op(s, &self.rows[s]);
        }
        Ok(self.element_from_matrices(m, inv))
    }

    /// Parses a word and evaluates it.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        self.evaluate(&Word::parse(text, self.rank())?)
    }

    fn element_from_matrices(&self, m: Matrix, inv: Matrix) -> GroupElement {
        let word = shortlex(&self.rows, &m, &inv);
        GroupElement::from_parts(&self.rows, m, inv, word.len(), Some(word))
    }

    /// `w s`, with its length computed from the descent test.
    pub fn right_multiply(&self, w: &GroupElement, s: usize) -> GroupElement {
        let len = if w.has_right_descent(s) { w.length - 1 } else { w.length + 1 };
        let mut m = w.matrix.clone();
        let mut inv = w.inverse.clone();
        m.mul_right_row_op(s, &self.rows[s]);
        inv.mul_left_row_op(s, &self.rows[s]);
        GroupElement::from_parts(&self.rows, m, inv, len, None)
    }

    /// `s w`.
    pub fn left_multiply(&self, s: usize, w: &GroupElement) -> GroupElement {
        let len = if w.has_left_descent(s) { w.length - 1 } else { w.length + 1 };
        let mut m = w.matrix.clone();
        let mut inv = w.inverse.clone();
        m.mul_left_row_op(s, &self.rows[s]);
        inv.mul_right_row_op(s, &self.rows[s]);
        GroupElement::from_parts(&self.rows, m, inv, len, None)
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.element_from_matrices(a.matrix.mul(&b.matrix), b.inverse.mul(&a.inverse))
    }

    /// Applies `w` to a vector.
    pub fn act(&self, w: &GroupElement, v: &Vector) -> Vector {
        w.matrix.apply(v)
    }

    /// `Phi(w) = {alpha_{s_1}, s_1(alpha_{s_2}), ...}` along the normal form.
    pub fn inversion_set(&self, w: &GroupElement) -> Vec<Vector> {
        let mut p = Matrix::identity(&self.field, self.rank());
        let mut out = Vec::with_capacity(w.length);
        for &s in w.word().letters() {
            out.push(p.column(s));
            p.mul_right_row_op(s, &self.rows[s]);
        }
        out
    }

    /// `u <=_R w` iff `l(w) = l(u^{-1} w) + l(u)`.
    pub fn weak_order_leq(&self, u: &GroupElement, w: &GroupElement) -> bool {
        if u.length > w.length {
            return false;
        }
        let q = self.multiply(&u.inverse(), w);
        w.length == q.length + u.length
    }

    /// Depth of a positive root: the number of descents `beta -> s(beta)` with
    /// `B(beta, alpha_s) > 0` needed to reach a simple root.
    pub fn root_depth(&self, beta: &Vector) -> Result<usize> {
        let mut v = beta.clone();
        for d in 0..DESCENT_CAP {
            if !v.is_nonnegative_nonzero() {
                return Err(CoxError::NotPositiveRoot(beta.label()));
            }
            if v.simple_index().is_some() {
                return Ok(d);
            }
            let s = (0..self.rank())
                .find(|&s| self.pair_simple(s, &v).is_positive())
                .ok_or_else(|| CoxError::NotPositiveRoot(beta.label()))?;
            self.reflect_in_place(s, &mut v);
        }
        Err(CoxError::CapExceeded { what: "root descent", cap: DESCENT_CAP })
    }

    /// A word `s_1 ... s_k` and simple index `r` with `beta = s_1 ... s_k(alpha_r)`.
    pub fn root_word(&self, beta: &Vector) -> Result<(Word, usize)> {
        let mut v = beta.clone();
        let mut letters = vec![];
        for _ in 0..DESCENT_CAP {
            if !v.is_nonnegative_nonzero() {
                return Err(CoxError::NotPositiveRoot(beta.label()));
            }
            if let Some(r) = v.simple_index() {
                return Ok((Word::new(letters), r));
            }
            let s = (0..self.rank())
                .find(|&s| self.pair_simple(s, &v).is_positive())
                .ok_or_else(|| CoxError::NotPositiveRoot(beta.label()))?;
            self.reflect_in_place(s, &mut v);
            letters.push(s);
        }
        Err(CoxError::CapExceeded { what: "root descent", cap: DESCENT_CAP })
    }

    /// The matrix of `s_beta: v -> v - 2B(beta, v)/B(beta, beta) beta`.
    fn reflection_matrix(&self, beta: &Vector) -> Option<Matrix> {
        let nb = self.norm_sq(beta).as_rational()?;
        if !nb.is_positive() {
            return None;
        }
        let factor = BigRational::from_integer(2.into()) / nb;
        let n = self.rank();
        let b_beta: Vec<AlgebraicNumber> = (0..n).map(|j| self.pair_simple(j, beta)).collect();
        let mut m = Matrix::identity(&self.field, n);
        for i in 0..n {
            let bi = beta.coords()[i].mul_rational(&factor);
            if bi.is_zero() {
                continue;
            }
            for (j, bj) in b_beta.iter().enumerate() {
                let v = m.get(i, j) - &(&bi * bj);
                m.set(i, j, v);
            }
        }
        Some(m)
    }

    /// The root of `w` when `w` is a reflection.
    pub fn is_reflection(&self, w: &GroupElement) -> Option<Vector> {
        if w.length.is_multiple_of(2) {
            return None;
        }
        let letters = w.word().letters();
        let k = letters.len() / 2;
        let mut beta = self.simple_root(letters[k]);
        for &s in letters[..k].iter().rev() {
            self.reflect_in_place(s, &mut beta);
        }
        if self.reflection_matrix(&beta).as_ref() == Some(&w.matrix) {
            return Some(beta);
        }
        // the root of a reflection is always one of its inversions
        self.inversion_set(w)
            .into_iter()
            .find(|a| self.reflection_matrix(a).as_ref() == Some(&w.matrix))
    }

    pub fn reflection_from_root(&self, beta: &Vector) -> Result<GroupElement> {
        if !beta.is_nonnegative_nonzero() {
            return Err(CoxError::NotPositiveRoot(beta.label()));
        }
        let nb = self.norm_sq(beta);
        if self.mode == NormMode::Unitary && nb != self.num(1) {
            return Err(CoxError::NotPositiveRoot(format!("{} has norm {nb}, expected 1", beta.label())));
        }
        // confirms beta is a root
        let (prefix, r) = self.root_word(beta)?;
        let m = self.reflection_matrix(beta).ok_or_else(|| CoxError::NotPositiveRoot(beta.label()))?;
        let mut word = prefix;
        word.push(r);
        let palindrome = word.palindromic_extension();
        let w = self.element_from_matrices(m.clone(), m);
        debug_assert_eq!(w, self.evaluate(&palindrome).unwrap());
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> CoxeterSystem {
        CoxeterSystem::from_preset(&format!("A{n}")).unwrap()
    }

    fn w(sys: &CoxeterSystem, s: &str) -> GroupElement {
        sys.parse_element(s).unwrap()
    }

    #[test]
    fn simple_reflections() {
        let inf = CoxeterSystem::from_preset("I2(inf)").unwrap();
        assert_eq!(inf.reflect(0, &inf.simple_root(1)), inf.vector(&[2, 1]));
        let a2 = a(2);
        assert_eq!(a2.reflect(0, &a2.simple_root(1)), a2.vector(&[1, 1]));
        for name in ["A3", "H3", "~A2", "U3", "B3", "I2(7)"] {
            let sys = CoxeterSystem::from_preset(name).unwrap();
            for s in 0..sys.rank() {
                assert_eq!(sys.reflect(s, &sys.simple_root(s)), sys.simple_root(s).neg());
                let m = sys.simple_matrix(s);
                assert!(m.mul(&m).is_identity());
                for i in 0..sys.rank() {
                    for j in 0..sys.rank() {
                        let (u, v) = (sys.simple_root(i), sys.simple_root(j));
                        assert_eq!(sys.bilinear(&m.apply(&u), &m.apply(&v)), sys.bilinear(&u, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_and_normal_form() {
        let a3 = a(3);
        assert!(w(&a3, "11").is_identity());
        let t = w(&a3, "12321");
        assert_eq!(t.length(), 5);
        assert_eq!(t.right_descents(), vec![0, 2]);
        let a2 = a(2);
        let x = w(&a2, "1212");
        assert_eq!(x.length(), 2);
        assert_eq!(x, w(&a2, "21"));
        assert_eq!(x.word().to_string(), "21");
        assert_eq!(w(&a2, "212").word().to_string(), "121");
    }

    #[test]
    fn inversion_set_example() {
        let sys = CoxeterSystem::new(CoxeterMatrix::from_codes(&[vec![1, 3, 3], vec![3, 1, 4], vec![3, 4, 1]]).unwrap());
        let p = w(&sys, "3123");
        let inv = sys.inversion_set(&p);
        assert_eq!(inv.len(), 4);
        assert_eq!(inv[0], sys.simple_root(2));
        assert_eq!(inv[1], sys.vector(&[1, 0, 1]));
        assert_eq!(inv[2], sys.reflect(2, &sys.reflect(0, &sys.simple_root(1))));
        // the last inversion is the root of t = 3123213
        let t = w(&sys, "3123213");
        assert_eq!(sys.is_reflection(&t), Some(inv[3].clone()));
    }

    #[test]
    fn weak_order() {
        let h3 = CoxeterSystem::from_preset("H3").unwrap();
        assert!(!h3.weak_order_leq(&w(&h3, "212"), &w(&h3, "12123")));
        assert!(h3.weak_order_leq(&w(&h3, "121"), &w(&h3, "12123")));
        assert!(h3.weak_order_leq(&h3.identity(), &w(&h3, "12123")));
    }

    #[test]
    fn reflections() {
        let a3 = a(3);
        assert_eq!(a3.is_reflection(&w(&a3, "12321")), Some(a3.vector(&[1, 1, 1])));
        assert_eq!(a3.is_reflection(&w(&a3, "1232")), None);
        assert_eq!(a3.is_reflection(&w(&a3, "123")), None);
        let t = a3.reflection_from_root(&a3.vector(&[1, 1, 1])).unwrap();
        assert_eq!(t, w(&a3, "12321"));
        assert_eq!(a3.reflection_from_root(&a3.simple_root(1)).unwrap(), a3.generator(1));
        assert!(a3.reflection_from_root(&a3.vector(&[1, 0, 1])).is_err());
        assert!(a3.reflection_from_root(&a3.vector(&[2, 2, 2])).is_err());
    }

    #[test]
    fn root_depths() {
        let a3 = a(3);
        assert_eq!(a3.root_depth(&a3.vector(&[1, 1, 1])).unwrap(), 2);
        let h3 = CoxeterSystem::from_preset("H3").unwrap();
        let t = w(&h3, "121232121");
        let beta = h3.is_reflection(&t).unwrap();
        assert_eq!(h3.root_depth(&beta).unwrap(), 4);
    }

    #[test]
    fn crystallographic_validation() {
        use crate::coxeter::FiniteType;
        let t = FiniteType::B(3);
        let sys = CoxeterSystem::crystallographic(CoxeterMatrix::finite(t), t.gram()).unwrap();
        assert_eq!(sys.reflect(1, &sys.simple_root(0)), sys.vector(&[1, 1, 0]));
        assert_eq!(sys.reflect(0, &sys.simple_root(1)), sys.vector(&[2, 1, 0]));
        let mut bad = t.gram();
        bad[0][1] = BigRational::from_integer((-2).into());
        bad[1][0] = bad[0][1].clone();
        assert!(CoxeterSystem::crystallographic(CoxeterMatrix::finite(t), bad).is_err());
    }
}
