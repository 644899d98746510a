//! Reflection prefixes: recognition, enumeration via saturated root-poset chains,
//! palindromic reduced words and dominance sets.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::coxeter::{CoxeterSystem, GroupElement, Vector, Word};
use crate::error::{CoxError, Result};

/// An element `p` with a single right descent `r` such that `p r p^{-1}` has length `2l(p) - 1`.
#[derive(Clone, Debug)]
pub struct ReflectionPrefix {
    pub element: GroupElement,
    pub reflection: GroupElement,
    pub root: Vector,
    pub descent: usize,
}

/// Recognizes reflection prefixes by the length of the palindromic extension.
pub fn is_reflection_prefix(sys: &CoxeterSystem, w: &GroupElement) -> Result<Option<ReflectionPrefix>> {
    if w.is_identity() {
        return Err(CoxError::Domain("the identity is not a reflection prefix".into()));
    }
    let descents = w.right_descents();
    let [r] = descents[..] else { return Ok(None) };
    let u = sys.right_multiply(w, r);
    let t = sys.multiply(w, &u.inverse());
    if t.length() != 2 * w.length() - 1 {
        return Ok(None);
    }
    let root = sys.act(&u, &sys.simple_root(r));
    Ok(Some(ReflectionPrefix { element: w.clone(), reflection: t, root, descent: r }))
}

/// The bilinear criterion: `B(alpha, alpha_t) > 0` for every `alpha` in `Phi(w)`,
/// where `alpha_t = -w(alpha_r)` for the first right descent `r`.
pub fn check_prefix_bilinear(sys: &CoxeterSystem, w: &GroupElement) -> bool {
    let Some(&r) = w.right_descents().first() else { return false };
    let alpha_t = sys.act(w, &sys.simple_root(r)).neg();
    sys.inversion_set(w).iter().all(|a| sys.bilinear(a, &alpha_t).is_positive())
}

/// The root of a reflection, or an error for non-reflections.
pub fn reflection_root(sys: &CoxeterSystem, t: &GroupElement) -> Result<Vector> {
    sys.is_reflection(t).ok_or_else(|| CoxError::NotReflection(t.word().to_string()))
}

/// All `t`-prefixes, one per element, sorted by normal form.
pub fn prefixes_of(sys: &CoxeterSystem, t: &GroupElement) -> Result<Vec<ReflectionPrefix>> {
    let beta = reflection_root(sys, t)?;
    let mut memo: HashMap<Vector, Vec<GroupElement>> = HashMap::new();
    let elements = chain_prefixes(sys, &beta, &mut memo);
    let mut sorted: BTreeMap<Word, GroupElement> = BTreeMap::new();
    for p in elements {
        sorted.insert(p.word().clone(), p);
    }
    Ok(sorted
        .into_values()
        .map(|p| {
            let descent = p.right_descents()[0];
            ReflectionPrefix { element: p, reflection: t.clone(), root: beta.clone(), descent }
        })
        .collect())
}

/// Prefix elements `s_1 ... s_k r` over all saturated chains from a simple root up to `beta`.
fn chain_prefixes(
    sys: &CoxeterSystem,
    beta: &Vector,
    memo: &mut HashMap<Vector, Vec<GroupElement>>,
) -> Vec<GroupElement> {
    if let Some(v) = memo.get(beta) {
        return v.clone();
    }
    let out = if let Some(r) = beta.simple_index() {
        vec![sys.generator(r)]
    } else {
        let mut seen = HashSet::new();
        let mut out = vec![];
        for s in 0..sys.rank() {
            if !sys.pair_simple(s, beta).is_positive() {
                continue;
            }
            for q in chain_prefixes(sys, &sys.reflect(s, beta), memo) {
                let p = sys.left_multiply(s, &q);
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
        }
        out
    };
    memo.insert(beta.clone(), out.clone());
    out
}

/// A prefix `s_1 ... s_k r` of the reflection with root `beta`, from a greedy descent.
pub fn prefix_word_for_root(sys: &CoxeterSystem, beta: &Vector) -> Result<Word> {
    let (mut word, r) = sys.root_word(beta)?;
    word.push(r);
    Ok(word)
}

/// A palindromic reduced word `s_1 ... s_k r s_k ... s_1` for `t`.
pub fn palindromic_word(sys: &CoxeterSystem, t: &GroupElement) -> Result<Word> {
    let beta = reflection_root(sys, t)?;
    let word = prefix_word_for_root(sys, &beta)?.palindromic_extension();
    debug_assert_eq!(word.len(), t.length());
    Ok(word)
}

/// `Dom(alpha_t)`, read off a prefix: the inversions `alpha` of `p_t` with
/// `B(alpha, alpha_t) >= |alpha| |alpha_t|`. Includes `alpha_t`, which comes last.
pub fn dominance_set(sys: &CoxeterSystem, t: &GroupElement) -> Result<Vec<Vector>> {
    let beta = reflection_root(sys, t)?;
    let p = sys.evaluate(&prefix_word_for_root(sys, &beta)?)?;
    let nb = sys.norm_sq(&beta);
    let mut out: Vec<Vector> = sys
        .inversion_set(&p)
        .into_iter()
        .filter(|a| {
            let b = sys.bilinear(a, &beta);
            !b.is_negative() && &b * &b >= &sys.norm_sq(a) * &nb
        })
        .collect();
    // alpha_t is the last inversion of p_t
    if let Some(i) = out.iter().position(|a| *a == beta) {
        let last = out.remove(i);
        out.push(last);
    }
    Ok(out)
}

/// `dp_inf(alpha_t) = |Dom(alpha_t)| - 1`.
pub fn dominance_depth(sys: &CoxeterSystem, t: &GroupElement) -> Result<usize> {
    Ok(dominance_set(sys, t)?.len() - 1)
}
