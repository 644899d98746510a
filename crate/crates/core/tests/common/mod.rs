//! Brute-force oracles shared by the integration suites and the acceptance harness.
#![allow(dead_code)]

use std::collections::HashSet;

use coxkit::affine::{AffineRoot, AffineRootDatum};
use coxkit::coxeter::{cayley_bfs, CoxeterMatrix, CoxeterSystem, GroupElement, Word};
use coxkit::roots::{classify_cover, depth_step, CoverKind};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

pub fn system(name: &str) -> CoxeterSystem {
    match name {
        "334" => CoxeterSystem::new(CoxeterMatrix::from_codes(&[vec![1, 3, 3], vec![3, 1, 4], vec![3, 4, 1]]).unwrap()),
        "33inf" => CoxeterSystem::new(CoxeterMatrix::from_codes(&[vec![1, 3, 3], vec![3, 1, 0], vec![3, 0, 1]]).unwrap()),
        _ => CoxeterSystem::from_preset(name).unwrap(),
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// All reduced words of length at most `n`, with their elements, found by extending a
/// word only by letters that increase the length.
pub fn reduced_words(sys: &CoxeterSystem, n: usize) -> Vec<(Word, GroupElement)> {
    let mut out = vec![(Word::empty(), sys.identity())];
    let mut i = 0;
    while i < out.len() {
        let (w, e) = out[i].clone();
        if w.len() < n {
            for s in 0..sys.rank() {
                let es = sys.right_multiply(&e, s);
                if es.length() == e.length() + 1 {
                    let mut ws = w.clone();
                    ws.push(s);
                    out.push((ws, es));
                }
            }
        }
        i += 1;
    }
    out
}

/// `s_1 ... s_k r` is a reflection-prefix word iff the palindrome `s_1 ... s_k r s_k ... s_1`
/// is reduced; checked by multiplying out.
pub fn palindrome_reduced(sys: &CoxeterSystem, w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    let pal = w.palindromic_extension();
    sys.evaluate(&pal).unwrap().length() == pal.len()
}

/// Number of palindromic reduced words of each length `0..=n`.
pub fn palindrome_counts(sys: &CoxeterSystem, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for (w, _) in reduced_words(sys, n.div_ceil(2)) {
        if w.is_empty() || 2 * w.len() - 1 > n {
            continue;
        }
        if palindrome_reduced(sys, &w) {
            counts[2 * w.len() - 1] += 1;
        }
    }
    counts
}

/// Reflections in the Cayley ball of radius `n`, counted by length.
pub fn reflection_census(sys: &CoxeterSystem, n: usize) -> Vec<u64> {
    let ball = cayley_bfs(sys, n, 5_000_000).unwrap();
    let mut counts = vec![0u64; n + 1];
    for w in ball.iter() {
        if w.length() % 2 == 1 && w.matrix().mul(w.matrix()).is_identity() && sys.is_reflection(w).is_some() {
            counts[w.length()] += 1;
        }
    }
    counts
}

/// Random elements of the ball of radius `n`, sampled with replacement.
pub fn sample_ball(sys: &CoxeterSystem, n: usize, count: usize, rng: &mut StdRng) -> Vec<GroupElement> {
    let ball: Vec<GroupElement> = cayley_bfs(sys, n, 1_000_000).unwrap().into_elements();
    (0..count).map(|_| ball.choose(rng).unwrap().clone()).collect()
}

/// A random reduced word of length `len` (shorter if the group runs out).
pub fn random_reduced(sys: &CoxeterSystem, len: usize, rng: &mut StdRng) -> (Word, GroupElement) {
    let mut w = Word::empty();
    let mut e = sys.identity();
    for _ in 0..len {
        let up: Vec<usize> = (0..sys.rank()).filter(|&s| !e.has_right_descent(s)).collect();
        let Some(&s) = up.choose(rng) else { break };
        e = sys.right_multiply(&e, s);
        w.push(s);
    }
    (w, e)
}

/// Long covers along a random saturated chain from a simple root up to `beta`.
pub fn long_covers_on_random_chain(sys: &CoxeterSystem, beta: &coxkit::coxeter::Vector, rng: &mut StdRng) -> usize {
    let mut v = beta.clone();
    let mut long = 0;
    while v.simple_index().is_none() {
        let down: Vec<usize> = (0..sys.rank()).filter(|&s| sys.pair_simple(s, &v).is_positive()).collect();
        let s = *down.choose(rng).unwrap();
        let lower = sys.reflect(s, &v);
        if classify_cover(sys, &lower, s).unwrap() == CoverKind::Long {
            long += 1;
        }
        v = lower;
    }
    long
}

/// Up-covers `(from, generator, to, kind)` among a set of affine roots.
pub fn covers_within(d: &AffineRootDatum, roots: &[AffineRoot]) -> Vec<(AffineRoot, usize, AffineRoot, CoverKind)> {
    let sys = d.system();
    let members: HashSet<&AffineRoot> = roots.iter().collect();
    let mut out = vec![];
    for r in roots {
        let v = d.to_vector(r);
        for s in 0..sys.rank() {
            if v == sys.simple_root(s) || depth_step(sys, &v, s).unwrap() != 1 {
                continue;
            }
            let image = d.from_vector(&sys.reflect(s, &v)).unwrap();
            if members.contains(&image) {
                out.push((r.clone(), s, image, classify_cover(sys, &v, s).unwrap()));
            }
        }
    }
    out
}
