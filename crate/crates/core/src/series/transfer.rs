//! Word-count generating functions of automata, by exact elimination over `Q[q]`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, RationalSeries};
use crate::automata::Dfa;

/// Moore-minimized, trimmed copy of a DFA: `(transitions, finals, initial)`.
fn minimize(dfa: &Dfa) -> (Vec<Vec<Option<usize>>>, Vec<bool>, usize) {
    let n = dfa.len();
    let k = dfa.alphabet_size();
    let mut class: Vec<usize> = (0..n).map(|q| usize::from(dfa.is_final(q))).collect();
    let mut count = 0;
    loop {
        let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let next: Vec<usize> = (0..n)
            .map(|q| {
                let sig = (class[q], (0..k).map(|s| dfa.transition(q, s).map(|t| class[t])).collect());
                let len = ids.len();
                *ids.entry(sig).or_insert(len)
            })
            .collect();
        let new_count = ids.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    let mut trans = vec![vec![None; k]; count];
    let mut finals = vec![false; count];
    for q in 0..n {
        finals[class[q]] = dfa.is_final(q);
        for s in 0..k {
            trans[class[q]][s] = dfa.transition(q, s).map(|t| class[t]);
        }
    }
    // drop classes that cannot reach a final class
    let mut live = finals.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for q in 0..count {
            if !live[q] && trans[q].iter().flatten().any(|&t| live[t]) {
                live[q] = true;
                changed = true;
            }
        }
    }
    for row in &mut trans {
        for t in row.iter_mut() {
            if t.is_some_and(|t| !live[t]) {
                *t = None;
            }
        }
    }
    (trans, finals, class[dfa.initial()])
}

/// Strongly connected components in reverse topological order (sinks first).
fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct St<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    fn visit(st: &mut St, v: usize) {
        st.index[v] = Some(st.next);
        st.low[v] = st.next;
        st.next += 1;
        st.stack.push(v);
        st.on[v] = true;
        for &w in st.adj[v].iter() {
            match st.index[w] {
                None => {
                    visit(st, w);
                    st.low[v] = st.low[v].min(st.low[w]);
                }
                Some(i) if st.on[w] => st.low[v] = st.low[v].min(i),
                _ => {}
            }
        }
        if Some(st.low[v]) == st.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().unwrap();
                st.on[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            st.out.push(comp);
        }
    }
    let n = adj.len();
    let mut st = St { adj, index: vec![None; n], low: vec![0; n], on: vec![false; n], stack: vec![], next: 0, out: vec![] };
    for v in 0..n {
        if st.index[v].is_none() {
            visit(&mut st, v);
        }
    }
    st.out
}

/// Integer polynomials, lowest degree first, without trailing zeros.
type IntPoly = Vec<BigInt>;

fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn int_sub(a: IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a;
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    trim(a)
}

/// Exact quotient by a divisor with constant term 1, computed from the low end.
fn int_div_unit(a: &IntPoly, d: &IntPoly) -> IntPoly {
    debug_assert!(d.first().is_some_and(|c| c.is_one()));
    if a.is_empty() {
        return vec![];
    }
    let n = a.len() + 1 - d.len();
    let mut q: IntPoly = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = a[i].clone();
        for j in 1..d.len().min(i + 1) {
            c -= &d[j] * &q[i - j];
        }
        q.push(c);
    }
    let q = trim(q);
    debug_assert_eq!(int_mul(&q, d), *a, "inexact division");
    q
}

/// Determinant by fraction-free (Bareiss) elimination. Every leading principal minor of
/// `I - qM` has constant term 1, so no pivoting is needed.
fn determinant(mut a: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = a.len();
    let mut prev: IntPoly = vec![BigInt::one()];
    for k in 0..n {
        for i in k + 1..n {
            for j in k + 1..n {
                let t = int_sub(int_mul(&a[k][k], &a[i][j]), &int_mul(&a[i][k], &a[k][j]));
                a[i][j] = int_div_unit(&t, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    prev
}

/// Generating function `sum_k c_k q^k` of the accepted words of `dfa`.
pub fn dfa_series(dfa: &Dfa) -> RationalSeries {
    let (trans, finals, init) = minimize(dfa);
    let n = trans.len();
    if n == 0 {
        return RationalSeries::polynomial(Polynomial::zero());
    }
    let adj: Vec<Vec<usize>> = trans.iter().map(|row| row.iter().flatten().copied().collect()).collect();
    // det(I - qM) factors over the strongly connected components
    let mut den: IntPoly = vec![BigInt::one()];
    for comp in tarjan(&adj) {
        let pos: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let k = comp.len();
        let mut a = vec![vec![IntPoly::new(); k]; k];
        for (i, &v) in comp.iter().enumerate() {
            a[i][i] = vec![BigInt::one()];
            for &w in &adj[v] {
                if let Some(&j) = pos.get(&w) {
                    let c = a[i][j].get(1).cloned().unwrap_or_default() - 1;
                    a[i][j] = trim(vec![a[i][j].first().cloned().unwrap_or_default(), c]);
                }
            }
        }
        den = int_mul(&den, &determinant(a));
    }
    // the numerator is an adjugate row times the final vector, so it has degree below n
    let mut counts: IntPoly = Vec::with_capacity(n);
    let mut paths = vec![BigInt::zero(); n];
    paths[init] = BigInt::one();
    for _ in 0..n {
        counts.push(paths.iter().zip(&finals).filter(|(_, &f)| f).map(|(c, _)| c).sum());
        let mut next = vec![BigInt::zero(); n];
        for (v, c) in paths.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &w in &adj[v] {
                next[w] += c;
            }
        }
        paths = next;
    }
    let mut num = int_mul(&counts, &den);
    num.truncate(n);
    RationalSeries::new(Polynomial::from_bigints(&trim(num)), Polynomial::from_bigints(&den)).expect("den(0) = 1")
}

/// `Pref_T(q) = sum_k a_k q^k`, `a_k` the number of accepted words of length `k + 1`
/// (saturated chains of length `k` in the root poset).
pub fn chain_series(pref_words: &RationalSeries) -> RationalSeries {
    pref_words.div_q().expect("pref words have length at least one")
}

/// `Pal(q) = q Pref_T(q^2)` with `Pref_T` indexed by chain length.
pub fn pal_series(pref: &RationalSeries) -> RationalSeries {
    pref.substitute_power(2).shift(1)
}
