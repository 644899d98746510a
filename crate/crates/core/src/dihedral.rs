//! Canonical generators of dihedral reflection subgroups `<r, t>`, computed from the
//! inversion sets of reflection prefixes, with and without root coordinates.

use std::collections::HashSet;

use crate::coxeter::{Bond, CoxeterSystem, GroupElement, Matrix, Vector, Word};
use crate::error::{CoxError, Result};
use crate::prefixes::{prefix_word_for_root, reflection_root};

#[derive(Clone, Debug)]
pub struct DihedralSubgroup {
    pub gens_input: (GroupElement, GroupElement),
    /// The canonical pair, ordered by (length, normal form).
    pub canonical: (GroupElement, GroupElement),
    pub simple_roots: Option<(Vector, Vector)>,
    /// Order of `s_1 s_2`; `None` for infinite (or, without coordinates, beyond the search bound).
    pub order: Option<usize>,
}

fn check_pair(sys: &CoxeterSystem, r: &GroupElement, t: &GroupElement) -> Result<(Vector, Vector)> {
    if r == t {
        return Err(CoxError::Domain("the two reflections must differ".into()));
    }
    Ok((reflection_root(sys, r)?, reflection_root(sys, t)?))
}

fn positive(v: Vector) -> Vector {
    if v.leading_sign() < 0 {
        v.neg()
    } else {
        v
    }
}

/// Positive roots of `<r, t>` up to depth `max_depth`. They are `+-(rt)^j alpha_r` and
/// `+-(rt)^j alpha_t`; depths grow along both ends of the dihedral root sequence, so
/// `|j| <= max_depth + max(dp alpha_r, dp alpha_t) + 2` reaches all of them.
fn subgroup_roots(
    sys: &CoxeterSystem,
    r: &GroupElement,
    t: &GroupElement,
    ar: &Vector,
    at: &Vector,
    max_depth: usize,
) -> Result<HashSet<Vector>> {
    let k = max_depth + sys.root_depth(ar)?.max(sys.root_depth(at)?) + 2;
    let rt = r.matrix().mul(t.matrix());
    let tr = t.matrix().mul(r.matrix());
    let mut out = HashSet::new();
    for base in [ar, at] {
        for m in [&rt, &tr] {
            let mut v = base.clone();
            for _ in 0..=k {
                let p = positive(v.clone());
                if sys.root_depth(&p)? <= max_depth {
                    out.insert(p);
                }
                v = m.apply(&v);
            }
        }
    }
    Ok(out)
}

/// `Phi(p) ∩ Phi_{W'}` for `W' = <r, t>`, in the inversion order of `p`.
pub fn subgroup_inversions(
    sys: &CoxeterSystem,
    p: &GroupElement,
    r: &GroupElement,
    t: &GroupElement,
) -> Result<Vec<Vector>> {
    let (ar, at) = check_pair(sys, r, t)?;
    if p.is_identity() {
        return Ok(vec![]);
    }
    let inv = sys.inversion_set(p);
    let roots = subgroup_roots(sys, r, t, &ar, &at, p.length() - 1)?;
    Ok(inv.into_iter().filter(|a| roots.contains(a)).collect())
}

fn sort_pair(a: GroupElement, b: GroupElement) -> (GroupElement, GroupElement) {
    if (a.length(), a.word()) <= (b.length(), b.word()) {
        (a, b)
    } else {
        (b, a)
    }
}

fn prefix_of(sys: &CoxeterSystem, root: &Vector) -> Result<GroupElement> {
    sys.evaluate(&prefix_word_for_root(sys, root)?)
}

/// Canonical generators via root depths.
pub fn canonical_generators(sys: &CoxeterSystem, r: &GroupElement, t: &GroupElement) -> Result<DihedralSubgroup> {
    let (ar, at) = check_pair(sys, r, t)?;
    let in_r = subgroup_inversions(sys, &prefix_of(sys, &ar)?, r, t)?;
    let in_t = subgroup_inversions(sys, &prefix_of(sys, &at)?, r, t)?;
    let (a1, a2) = if in_r.len() == 1 && in_t.len() == 1 {
        (ar, at)
    } else {
        let set = if in_r.len() > 1 { in_r } else { in_t };
        let mut by_depth: Vec<(usize, Vector)> =
            set.into_iter().map(|a| Ok((sys.root_depth(&a)?, a))).collect::<Result<_>>()?;
        by_depth.sort();
        let a1 = by_depth[0].1.clone();
        let s1 = sys.reflection_from_root(&a1)?;
        let a2 = sys.act(&s1, &by_depth[1].1);
        (a1, a2)
    };
    let s1 = sys.reflection_from_root(&a1)?;
    let s2 = sys.reflection_from_root(&a2)?;
    let b = sys.bilinear(&a1, &a2);
    let infinite = &b * &b >= &sys.norm_sq(&a1) * &sys.norm_sq(&a2);
    let order = if infinite { None } else { product_order(s1.matrix(), s2.matrix(), usize::MAX) };
    let (c1, c2) = sort_pair(s1, s2);
    let roots = if sys.reflection_from_root(&a1)? == c1 { (a1, a2) } else { (a2, a1) };
    Ok(DihedralSubgroup { gens_input: (r.clone(), t.clone()), canonical: (c1, c2), simple_roots: Some(roots), order })
}

/// Order of `ab`, searched up to `bound`.
fn product_order(a: &Matrix, b: &Matrix, bound: usize) -> Option<usize> {
    let ab = a.mul(b);
    let mut p = ab.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(&ab);
    }
    None
}

/// Search bound for orders of products of reflections: `2 lcm(finite bonds) + rank^2`.
pub fn order_bound(sys: &CoxeterSystem) -> usize {
    use num_integer::Integer;
    let m = sys.matrix();
    let mut l = 1usize;
    for i in 0..m.rank() {
        for j in 0..m.rank() {
            if let Bond::Finite(k) = m.bond(i, j) {
                l = l.lcm(&(k as usize));
            }
        }
    }
    2 * l + m.rank() * m.rank()
}

/// `T(p) = {s_1, s_1 s_2 s_1, ...}` along the normal form of `p`.
pub fn left_reflections(sys: &CoxeterSystem, p: &GroupElement) -> Result<Vec<GroupElement>> {
    let letters = p.word().letters();
    (1..=letters.len())
        .map(|i| {
            let w = Word::new(letters[..i].to_vec()).palindromic_extension();
            sys.evaluate(&w)
        })
        .collect()
}

/// Reflections of `<r, t>`: `(rt)^j r` for `|j| <= bound`.
fn subgroup_reflections(sys: &CoxeterSystem, r: &GroupElement, t: &GroupElement, bound: usize) -> HashSet<GroupElement> {
    let rt = sys.multiply(r, t);
    let tr = rt.inverse();
    let mut out = HashSet::new();
    for step in [&rt, &tr] {
        let mut x = r.clone();
        for _ in 0..=bound {
            out.insert(x.clone());
            x = sys.multiply(step, &x);
        }
    }
    out
}

/// Canonical generators using reflection lengths in place of root depths.
pub fn canonical_generators_repfree(
    sys: &CoxeterSystem,
    r: &GroupElement,
    t: &GroupElement,
) -> Result<DihedralSubgroup> {
    if r == t {
        return Err(CoxError::Domain("the two reflections must differ".into()));
    }
    let p_r = prefix_from_palindrome(sys, r)?;
    let p_t = prefix_from_palindrome(sys, t)?;
    // a reflection of length l lies at |j| <= (l - 1)/2 + max((l_r - 1)/2, (l_t - 1)/2) + 2,
    // the length analogue of the depth bound; prefix inversions have length below 2 l(p)
    let max_len = 2 * p_r.length().max(p_t.length());
    let bound = (max_len - 1) / 2 + (r.length().max(t.length()) - 1) / 2 + 2;
    let w_refl = subgroup_reflections(sys, r, t, bound);
    let in_r: Vec<GroupElement> = left_reflections(sys, &p_r)?.into_iter().filter(|u| w_refl.contains(u)).collect();
    let in_t: Vec<GroupElement> = left_reflections(sys, &p_t)?.into_iter().filter(|u| w_refl.contains(u)).collect();
    let (s1, s2) = if in_r.len() == 1 && in_t.len() == 1 {
        (r.clone(), t.clone())
    } else {
        let mut set = if in_r.len() > 1 { in_r } else { in_t };
        set.sort_by_key(|u| u.length());
        let s1 = set[0].clone();
        let s2 = sys.multiply(&sys.multiply(&s1, &set[1]), &s1);
        (s1, s2)
    };
    let order = product_order(s1.matrix(), s2.matrix(), order_bound(sys));
    Ok(DihedralSubgroup { gens_input: (r.clone(), t.clone()), canonical: sort_pair(s1, s2), simple_roots: None, order })
}

/// The prefix `s_1 ... s_{k+1}` of a reflection, from the first half of a palindromic word.
fn prefix_from_palindrome(sys: &CoxeterSystem, t: &GroupElement) -> Result<GroupElement> {
    let word = crate::prefixes::palindromic_word(sys, t)?;
    let k = word.len() / 2;
    sys.evaluate(&Word::new(word.letters()[..=k].to_vec()))
}

/// `Dom_T(t) = {t} ∪ {u in T(p_t) : <u, t> infinite}`, with infiniteness decided by the
/// order search bound.
pub fn dominance_set_repfree(sys: &CoxeterSystem, t: &GroupElement) -> Result<Vec<GroupElement>> {
    let p = prefix_from_palindrome(sys, t)?;
    let bound = order_bound(sys);
    let mut out: Vec<GroupElement> = left_reflections(sys, &p)?
        .into_iter()
        .filter(|u| u != t && product_order(u.matrix(), t.matrix(), bound).is_none())
        .collect();
    out.push(t.clone());
    Ok(out)
}
