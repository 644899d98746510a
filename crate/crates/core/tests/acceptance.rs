//! Acceptance harness: one PASS/FAIL line per criterion.
//!
//! Exits 0 after reporting unless `ACCEPTANCE_STRICT=1`, in which case any failure
//! makes the process exit 1.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use coxkit::affine::{AffineRoot, AffineRootDatum};
use coxkit::automata::{build_automaton, low_elements, small_inversion_set, AutomatonKind};
use coxkit::coxeter::{CoxeterSystem, GroupElement, Vector, Word};
use coxkit::dihedral::{canonical_generators, canonical_generators_repfree};
use coxkit::prefixes::{check_prefix_bilinear, dominance_depth, dominance_set, is_reflection_prefix, prefixes_of};
use coxkit::roots::{classify_cover, CoverKind, Root};
use coxkit::series::{chain_series, dfa_series, pal_series, Polynomial, RationalSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every criterion is exact; the only tolerance is the wall-clock budget per criterion.
const TIME_BUDGET: Duration = Duration::from_secs(60);
const LANGUAGE_LENGTH: usize = 10;
const T_SERIES_DEGREE: usize = 15;
const PAL_DEGREE: usize = 25;
const PROPERTY_CASES: usize = 200;
const DIHEDRAL_PAIRS: usize = 100;

type Outcome = Result<String, String>;
type Suite<'a> = (&'a str, &'a mut dyn FnMut(&mut rand::rngs::StdRng) -> Result<usize, String>);
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

fn ints(s: &RationalSeries, n: usize) -> Vec<BigInt> {
    s.integer_coefficients(n).expect("integer series")
}

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn element(sys: &CoxeterSystem, w: &str) -> GroupElement {
    sys.parse_element(w).unwrap()
}

fn ac1() -> Outcome {
    let sys = system("~A2");
    let red = build_automaton(&sys, 0, AutomatonKind::Red, 10_000).map_err(|e| e.to_string())?;
    ensure(red.distinct_small_sets() == 16, || format!("{} small-set states", red.distinct_small_sets()))?;
    let low = low_elements(&sys, &red, 100_000).map_err(|e| e.to_string())?;
    let got: HashSet<GroupElement> = low.values().cloned().collect();
    let listed = ["e", "1", "2", "3", "12", "21", "13", "31", "23", "32", "121", "131", "232", "1232", "2313", "3121"];
    let expected: HashSet<GroupElement> = listed.iter().map(|w| element(&sys, w)).collect();
    ensure(got == expected, || format!("low elements {:?}", low.values().map(|w| w.word().to_string()).collect::<Vec<_>>()))?;

    let pref = build_automaton(&sys, 0, AutomatonKind::Pref, 10_000).map_err(|e| e.to_string())?;
    let shaded: HashSet<Vec<usize>> =
        ["121", "131", "232"].iter().map(|w| small_inversion_set(&sys, &pref, &element(&sys, w))).collect();
    let mut words = 0;
    for (w, e) in reduced_words(&sys, 3).into_iter().filter(|(w, _)| w.len() == 3) {
        let u = e.inverse();
        let rejected = shaded.contains(&small_inversion_set(&sys, &pref, &u));
        ensure(pref.accepts(&w) != rejected, || format!("word {w} misclassified"))?;
        words += 1;
    }
    let low_len3: BTreeSet<String> =
        low.values().filter(|w| w.length() == 3).map(|w| w.word().to_string()).collect();
    ensure(low_len3.len() == 3, || format!("length-3 states {low_len3:?}"))?;
    Ok(format!("16 states, 16 low elements, {words} length-3 words classified"))
}

fn ac2() -> Outcome {
    let mut checked = 0usize;
    for name in ["A3", "H3", "~A2", "33inf", "334"] {
        let sys = system(name);
        let words = reduced_words(&sys, LANGUAGE_LENGTH);
        let mut red_counts = vec![0u64; LANGUAGE_LENGTH + 1];
        let mut pref_counts = vec![0u64; LANGUAGE_LENGTH + 1];
        let is_pref: Vec<bool> = words.iter().map(|(w, _)| palindrome_reduced(&sys, w)).collect();
        for ((w, _), &p) in words.iter().zip(&is_pref) {
            red_counts[w.len()] += 1;
            pref_counts[w.len()] += u64::from(p);
        }
        let red = build_automaton(&sys, 0, AutomatonKind::Red, 100_000).map_err(|e| e.to_string())?;
        for (w, _) in &words {
            ensure(red.accepts(w), || format!("{name}: reduced word {w} rejected by red DFA"))?;
        }
        ensure(red.count_by_length(LANGUAGE_LENGTH) == big(&red_counts).iter().map(|c| c.to_biguint().unwrap()).collect::<Vec<_>>(), || {
            format!("{name}: red DFA accepts non-reduced words")
        })?;
        for m in 0..=2 {
            let pref = build_automaton(&sys, m, AutomatonKind::Pref, 100_000).map_err(|e| e.to_string())?;
            for ((w, _), &p) in words.iter().zip(&is_pref) {
                ensure(pref.accepts(w) == p, || format!("{name}, m = {m}: word {w} expected {p}"))?;
            }
            let counts: Vec<BigInt> = pref.count_by_length(LANGUAGE_LENGTH).into_iter().map(BigInt::from).collect();
            ensure(counts == big(&pref_counts), || format!("{name}, m = {m}: pref counts {counts:?} vs {pref_counts:?}"))?;
        }
        checked += words.len();
    }
    Ok(format!("{checked} reduced words, 5 systems, m = 0, 1, 2"))
}

fn ac3() -> Outcome {
    let sys = system("A3");
    let t = element(&sys, "12321");
    let pre: Vec<String> =
        prefixes_of(&sys, &t).map_err(|e| e.to_string())?.iter().map(|p| p.element.word().to_string()).collect();
    ensure(pre == ["123", "132", "321"], || format!("prefixes {pre:?}"))?;
    let dfa = build_automaton(&sys, 0, AutomatonKind::Pref, 1000).map_err(|e| e.to_string())?;
    let c3 = &ints(&dfa_series(&dfa), 4)[3];
    ensure(*c3 == BigInt::from(4), || format!("coefficient at q^3 is {c3}"))?;
    let words: BTreeSet<String> = reduced_words(&sys, 3)
        .into_iter()
        .filter(|(w, _)| w.len() == 3 && dfa.accepts(w))
        .map(|(w, _)| w.to_string())
        .collect();
    ensure(words == BTreeSet::from(["123", "132", "312", "321"].map(String::from)), || format!("words {words:?}"))?;
    Ok("prefixes {123, 132, 321}; q^3 coefficient 4".into())
}

fn ac4() -> Outcome {
    let d = AffineRootDatum::from_name("~B3").map_err(|e| e.to_string())?;
    let ds = d.depth_series().map_err(|e| e.to_string())?;
    let o1 = &ds.orbits[0];
    let o2 = &ds.orbits[1];
    ensure(o1.polynomial == poly(&[1, 1, 2, 1, 1]) && o1.max_depth == 4, || format!("P_O1 = {}", o1.polynomial))?;
    ensure(o2.polynomial == poly(&[3, 3, 3, 3]) && o2.max_depth == 3, || format!("P_O2 = {}", o2.polynomial))?;
    ensure(ds.period == 20, || format!("M = {}", ds.period))?;
    let displayed = [4, 4, 5, 4, 4, 4, 4, 5, 4, 4, 4, 4, 5, 4, 4, 4, 4, 5, 4, 4];
    ensure(ds.numerator == poly(&displayed), || format!("numerator {}", ds.numerator))?;
    Ok("P_O1, P_O2, M = 20 and the 20-term numerator".into())
}

fn orbit_polys(name: &str) -> Result<(Vec<Polynomial>, Vec<usize>, usize), String> {
    let d = AffineRootDatum::from_name(name).map_err(|e| e.to_string())?;
    let ds = d.depth_series().map_err(|e| e.to_string())?;
    Ok((
        ds.orbits.iter().map(|o| o.polynomial.clone()).collect(),
        ds.orbits.iter().map(|o| o.max_depth).collect(),
        ds.period,
    ))
}

fn same_multiset(mut a: Vec<Polynomial>, mut b: Vec<Polynomial>) -> bool {
    let key = |p: &Polynomial| p.to_string();
    a.sort_by_key(key);
    b.sort_by_key(key);
    a == b
}

fn ac5() -> Outcome {
    let mut failures = vec![];
    for n in 2..=5usize {
        let d = AffineRootDatum::from_name(&format!("~A{n}")).map_err(|e| e.to_string())?;
        let s = d.depth_series().map_err(|e| e.to_string())?.series;
        let expected = RationalSeries::over_one_minus_power(poly(&[n as i64 + 1]), 1);
        if s != expected {
            failures.push(format!("~A{n}: {s}"));
        }
    }
    let (p, _, m) = orbit_polys("~G2")?;
    if !(p == vec![poly(&[2, 2, 2]), poly(&[1, 1, 2, 1, 1])] && m == 15) {
        failures.push(format!("~G2: {} | {} | M = {m}", p[0], p[1]));
    }
    let d = AffineRootDatum::from_name("~F4").map_err(|e| e.to_string())?;
    let ds = d.depth_series().map_err(|e| e.to_string())?;
    let three_over = RationalSeries::over_one_minus_power(poly(&[3]), 1);
    if !(ds.orbits[0].series() == three_over && ds.orbits[1].max_depth == 10 && ds.period == 88) {
        failures.push(format!("~F4: {} | M_O2 = {} | M = {}", ds.orbits[0].series(), ds.orbits[1].max_depth, ds.period));
    }
    for n in 3..=5usize {
        let ni = n as i64;
        let mut o2 = vec![0i64; 2 * n - 2];
        for i in 0..=n - 2 {
            o2[2 * i] += ni - 1 - i as i64;
            o2[2 * i + 1] += ni - 1 - i as i64;
        }
        let shown = vec![poly(&vec![1; n]), poly(&o2)];
        let (got, _, _) = orbit_polys(&format!("~B{n}"))?;
        if !same_multiset(got.clone(), shown.clone()) {
            failures.push(format!("~B{n}: computed {} | {}, displayed {} | {}", got[0], got[1], shown[0], shown[1]));
        }
        let mut o2 = vec![0i64; 2 * n - 1];
        o2[2 * n - 2] = ni - 1;
        for i in 0..=n - 2 {
            o2[2 * i] += ni - 1;
            o2[2 * i + 1] += ni;
        }
        let shown = vec![poly(&vec![2; n]), poly(&o2)];
        let (got, _, _) = orbit_polys(&format!("~C{n}"))?;
        if !same_multiset(got.clone(), shown.clone()) {
            failures.push(format!("~C{n}: computed {} | {}, displayed {} | {}", got[0], got[1], shown[0], shown[1]));
        }
    }
    if failures.is_empty() {
        Ok("~A2..~A5, ~G2, ~F4, ~B3..~B5, ~C3..~C5".into())
    } else {
        Err(failures.join("; "))
    }
}

fn ac6() -> Outcome {
    for name in ["~A2", "~C2", "~G2", "~B3"] {
        let d = AffineRootDatum::from_name(name).map_err(|e| e.to_string())?;
        let t = d.reflection_series().map_err(|e| e.to_string())?;
        let series = ints(&t, T_SERIES_DEGREE + 1);
        let census = big(&reflection_census(&system(name), T_SERIES_DEGREE));
        ensure(series == census, || format!("{name}: series {series:?} vs census {census:?}"))?;
    }
    Ok(format!("coefficients q^0..q^{T_SERIES_DEGREE} on 4 types"))
}

fn ac7() -> Outcome {
    for name in ["~A2", "U3"] {
        let sys = system(name);
        let dfa = build_automaton(&sys, 0, AutomatonKind::Pref, 10_000).map_err(|e| e.to_string())?;
        let pref = chain_series(&dfa_series(&dfa));
        let pal = ints(&pal_series(&pref), PAL_DEGREE + 1);
        let brute = big(&palindrome_counts(&sys, PAL_DEGREE));
        ensure(pal == brute, || format!("{name}: {pal:?} vs {brute:?}"))?;
    }
    Ok(format!("to degree {PAL_DEGREE} on ~A2 and U3"))
}

fn inversion_union(rng: &mut rand::rngs::StdRng) -> Result<usize, String> {
    let systems = ["~A2", "H3", "334", "33inf"];
    for i in 0..PROPERTY_CASES {
        let sys = system(systems[i % systems.len()]);
        let (w, _) = random_reduced(&sys, rng.gen_range(0..=9), rng);
        let cut = rng.gen_range(0..=w.len());
        let u = sys.evaluate(&Word::new(w.letters()[..cut].to_vec())).unwrap();
        let v = sys.evaluate(&Word::new(w.letters()[cut..].to_vec())).unwrap();
        let uv = sys.multiply(&u, &v);
        let lhs: HashSet<Vector> = sys.inversion_set(&uv).into_iter().collect();
        let phi_u = sys.inversion_set(&u);
        let moved: Vec<Vector> = sys.inversion_set(&v).iter().map(|b| sys.act(&u, b)).collect();
        let rhs: HashSet<Vector> = phi_u.iter().chain(&moved).cloned().collect();
        ensure(lhs == rhs && rhs.len() == phi_u.len() + moved.len(), || format!("inversion union fails for {w}"))?;
        ensure(uv.length() == lhs.len(), || format!("length of {w}"))?;
    }
    Ok(PROPERTY_CASES)
}

fn length_is_inversions(rng: &mut rand::rngs::StdRng) -> Result<usize, String> {
    let mut n = 0;
    for name in ["~A2", "H3", "334", "33inf", "~G2"] {
        let sys = system(name);
        for w in sample_ball(&sys, 7, PROPERTY_CASES / 5, rng) {
            ensure(w.length() == sys.inversion_set(&w).len(), || format!("{name}: {}", w.word()))?;
            n += 1;
        }
    }
    Ok(n)
}

fn random_prefixes(sys: &CoxeterSystem, count: usize, rng: &mut rand::rngs::StdRng) -> Vec<coxkit::prefixes::ReflectionPrefix> {
    let mut out = vec![];
    while out.len() < count {
        let (_, e) = random_reduced(sys, rng.gen_range(1..=8), rng);
        if let Some(p) = is_reflection_prefix(sys, &e).unwrap() {
            out.push(p);
        }
    }
    out
}

fn prefix_depth_max(rng: &mut rand::rngs::StdRng) -> Result<usize, String> {
    let mut n = 0;
    for name in ["~A2", "H3", "334", "33inf"] {
        let sys = system(name);
        for p in random_prefixes(&sys, PROPERTY_CASES / 4, rng) {
            let dt = sys.root_depth(&p.root).unwrap();
            for a in sys.inversion_set(&p.element) {
                let da = sys.root_depth(&a).unwrap();
                ensure(da < dt || (da == dt && a == p.root), || format!("{name}: prefix {}", p.element.word()))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

fn prefix_criteria_agree(rng: &mut rand::rngs::StdRng) -> Result<usize, String> {
    let mut n = 0;
    for name in ["~A2", "H3", "334", "33inf", "B3"] {
        let sys = system(name);
        let mut cases = 0;
        while cases < PROPERTY_CASES / 5 {
            let (w, e) = random_reduced(&sys, rng.gen_range(1..=8), rng);
            if e.is_identity() {
                continue;
            }
            let by_length = is_reflection_prefix(&sys, &e).unwrap().is_some();
            let by_form = check_prefix_bilinear(&sys, &e);
            let by_word = palindrome_reduced(&sys, e.word());
            ensure(by_length == by_form && by_form == by_word, || format!("{name}: {w}: {by_length} {by_form} {by_word}"))?;
            cases += 1;
        }
        n += cases;
    }
    Ok(n)
}

fn dominance_chain_count(rng: &mut rand::rngs::StdRng) -> Result<usize, String> {
    let mut n = 0;
    for name in ["~A2", "334", "33inf", "~B3"] {
        let sys = system(name);
        for p in random_prefixes(&sys, PROPERTY_CASES / 4, rng) {
            let root = Root::new(&sys, p.root.clone()).unwrap();
            let dom = dominance_depth(&sys, &p.reflection).unwrap();
            let chain = long_covers_on_random_chain(&sys, &p.root, rng);
            ensure(root.dpinf == dom && dom == chain, || {
                format!("{name}: {} dp_inf {} |Dom|-1 {dom} chain {chain}", p.root.label(), root.dpinf)
            })?;
            n += 1;
        }
    }
    Ok(n)
}

fn slice_isomorphisms(rng: &mut rand::rngs::StdRng) -> Result<usize, String> {
    let mut n = 0;
    let data: Vec<AffineRootDatum> =
        ["~A2", "~B3", "~G2"].iter().map(|t| AffineRootDatum::from_name(t).unwrap()).collect();
    let edge = |(a, s, b, _): &(AffineRoot, usize, AffineRoot, CoverKind)| (a.clone(), *s, b.clone());
    let all_short = |c: &[(AffineRoot, usize, AffineRoot, CoverKind)]| c.iter().all(|x| x.3 == CoverKind::Short);
    for d in &data {
        for o in 0..d.orbits().len() {
            let base: Vec<AffineRoot> = d.slice(o, 0).unwrap().into_iter().map(|(r, _)| r).collect();
            let base_covers = covers_within(d, &base);
            ensure(all_short(&base_covers), || format!("{}: long cover in Sigma_O", d.kind().name()))?;
            // opposite isomorphism between O+ and delta - O+
            let (up, down): (Vec<AffineRoot>, Vec<AffineRoot>) = base.iter().cloned().partition(|r| r.level == 0);
            let flip = |r: &AffineRoot| AffineRoot::new(1 - r.level, r.finite.iter().map(|c| -c).collect());
            let up_edges: HashSet<_> = covers_within(d, &up).iter().map(edge).collect();
            let down_edges: HashSet<_> = covers_within(d, &down).iter().map(|(a, s, b, _)| (flip(b), *s, flip(a))).collect();
            ensure(up_edges == down_edges, || format!("{}: O+ and delta - O+ are not opposite", d.kind().name()))?;
            n += 1;
        }
    }
    while n < PROPERTY_CASES {
        let d = data.choose(rng).unwrap();
        let o = rng.gen_range(0..d.orbits().len());
        let k = rng.gen_range(1..=12i64);
        let base: HashSet<_> = covers_within(d, &d.slice(o, 0).unwrap().into_iter().map(|(r, _)| r).collect::<Vec<_>>())
            .iter()
            .map(edge)
            .collect();
        let layer: Vec<AffineRoot> = d.slice(o, k).unwrap().into_iter().map(|(r, _)| r).collect();
        let covers = covers_within(d, &layer);
        let shift = |r: &AffineRoot| AffineRoot::new(r.level - k, r.finite.clone());
        let mapped: HashSet<_> = covers.iter().map(|(a, s, b, _)| (shift(a), *s, shift(b))).collect();
        ensure(mapped == base && all_short(&covers), || format!("{}: slice {k} of orbit {}", d.kind().name(), o + 1))?;
        // long covers between consecutive slices
        let sys = d.system();
        let nf = d.finite_rank();
        let s = rng.gen_range(0..nf);
        let alpha_s: Vec<BigRational> = (0..nf).map(|i| BigRational::from_integer(BigInt::from(i64::from(i == s)))).collect();
        let x = AffineRoot::new(k + 1, alpha_s.iter().map(|c| -c).collect());
        let xv = d.to_vector(&x);
        let y = d.from_vector(&sys.reflect(s, &xv)).unwrap();
        ensure(y == AffineRoot::new(k + 1, alpha_s.clone()), || "image of (k+1)d - alpha_s".into())?;
        ensure(classify_cover(sys, &xv, s).unwrap() == CoverKind::Long, || format!("{}: cover at (k+1)d - alpha_{}", d.kind().name(), s + 1))?;
        let w = AffineRoot::new(k, d.highest_root().to_vec());
        let wv = d.to_vector(&w);
        let z = d.from_vector(&sys.reflect(nf, &wv)).unwrap();
        ensure(z == AffineRoot::new(k + 2, d.highest_root().iter().map(|c| -c).collect()), || "image of kd + omega".into())?;
        ensure(classify_cover(sys, &wv, nf).unwrap() == CoverKind::Long, || format!("{}: cover at kd + omega", d.kind().name()))?;
        n += 1;
    }
    Ok(n)
}

fn palindromic_polynomials() -> Result<usize, String> {
    let mut names: Vec<String> = vec![];
    names.extend((2..=8).map(|n| format!("~A{n}")));
    names.extend((3..=8).map(|n| format!("~B{n}")));
    names.extend((2..=8).map(|n| format!("~C{n}")));
    names.extend((4..=8).map(|n| format!("~D{n}")));
    names.extend(["~E6", "~E7", "~E8", "~F4", "~G2"].map(String::from));
    let mut n = 0;
    for name in &names {
        let d = AffineRootDatum::from_name(name).map_err(|e| e.to_string())?;
        let ds = d.depth_series().map_err(|e| e.to_string())?;
        for o in &ds.orbits {
            ensure(o.polynomial.is_palindromic() && o.polynomial.degree() == Some(o.max_depth), || {
                format!("{name}: P_O{} = {}", o.orbit + 1, o.polynomial)
            })?;
            n += 1;
        }
        ensure(ds.numerator.is_palindromic() && ds.numerator.degree() == Some(ds.period - 1), || {
            format!("{name}: P = {}", ds.numerator)
        })?;
        n += 1;
    }
    Ok(n)
}

fn ac8() -> Outcome {
    let mut rng = rng(0xC0E7);
    let mut parts = vec![];
    let mut failures = vec![];
    let suites: [Suite; 7] = [
        ("inversion union", &mut inversion_union),
        ("length = |Phi|", &mut length_is_inversions),
        ("prefix depth strict max", &mut prefix_depth_max),
        ("prefix criteria", &mut prefix_criteria_agree),
        ("dp_inf = |Dom| - 1 = long covers on a chain", &mut dominance_chain_count),
        ("slice isomorphisms and long covers", &mut slice_isomorphisms),
        ("palindromic P_O and P (all types up to rank 8)", &mut |_| palindromic_polynomials()),
    ];
    for (name, f) in suites {
        match f(&mut rng) {
            Ok(n) => parts.push(format!("{name}: {n}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(parts.join(", "))
    } else {
        Err(failures.join("; "))
    }
}

fn ac9() -> Outcome {
    let sys = system("334");
    let (r, t) = (element(&sys, "3123213"), element(&sys, "3132313"));
    let d = canonical_generators(&sys, &r, &t).map_err(|e| e.to_string())?;
    let words = (d.canonical.0.word().to_string(), d.canonical.1.word().to_string());
    ensure(words == ("1".into(), "31213".into()), || format!("chi = {words:?}"))?;
    let mut rng = rng(0xD1E);
    let mut pairs = 0;
    for name in ["A3", "~A2", "H3"] {
        let sys = system(name);
        let refl: Vec<GroupElement> = coxkit::coxeter::cayley_bfs(&sys, 9, 100_000)
            .unwrap()
            .into_elements()
            .into_iter()
            .filter(|w| sys.is_reflection(w).is_some())
            .collect();
        let mut done = 0;
        while done < DIHEDRAL_PAIRS.div_ceil(3) {
            let r = refl.choose(&mut rng).unwrap();
            let t = refl.choose(&mut rng).unwrap();
            if r == t {
                continue;
            }
            let a = canonical_generators(&sys, r, t).map_err(|e| e.to_string())?;
            let b = canonical_generators_repfree(&sys, r, t).map_err(|e| e.to_string())?;
            ensure(a.canonical.0 == b.canonical.0 && a.canonical.1 == b.canonical.1 && a.order == b.order, || {
                format!("{name}: r = {}, t = {}", r.word(), t.word())
            })?;
            done += 1;
        }
        pairs += done;
    }
    ensure(pairs >= DIHEDRAL_PAIRS, || format!("only {pairs} pairs"))?;
    Ok(format!("chi = {{1, 31213}}; {pairs} random pairs agree"))
}

fn ac10() -> Outcome {
    let sys = system("33inf");
    let t = element(&sys, "2321232");
    let dom = dominance_set(&sys, &t).map_err(|e| e.to_string())?;
    let beta = dom.last().unwrap().clone();
    let expected: HashSet<Vector> = [sys.vector(&[0, 1, 0]), sys.vector(&[0, 2, 1]), beta.clone()].into_iter().collect();
    let got: HashSet<Vector> = dom.iter().cloned().collect();
    ensure(got == expected && dom.len() == 3, || format!("Dom = {:?}", dom.iter().map(|v| v.label()).collect::<Vec<_>>()))?;
    let root = Root::new(&sys, beta.clone()).map_err(|e| e.to_string())?;
    ensure(root.dpinf == 2, || format!("dp_inf = {}", root.dpinf))?;
    Ok(format!("Dom = {{{}, 010, 021}}, dp_inf = 2", beta.label()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 ~A2 canonical automaton, low elements and rejected states", ac1),
        ("AC2 red/pref languages against brute force, m-independence", ac2),
        ("AC3 A3 prefixes of 12321 and chain count", ac3),
        ("AC4 ~B3 closed form", ac4),
        ("AC5 orbit polynomials of the classical and exceptional families", ac5),
        ("AC6 T(q) against the reflection census", ac6),
        ("AC7 Pal(q) = q Pref_T(q^2)", ac7),
        ("AC8 property suites", ac8),
        ("AC9 canonical dihedral generators", ac9),
        ("AC10 dominance example", ac10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > TIME_BUDGET => Err(format!("{msg}; took {elapsed:.1?}, budget {TIME_BUDGET:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("[PASS] {name}: {msg} ({elapsed:.1?})"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name}: {msg} ({elapsed:.1?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
