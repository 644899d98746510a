//! Canonical automata on m-small inversion sets, recognizing reduced words (`Red`) or
//! reduced words of reflection-prefixes (`Pref`).
//!
//! A word `s_1 ... s_k` drives the state `Sigma_m(s_k ... s_1)`. Reading `s` from `X` is
//! allowed iff `alpha_s` is not in `X`, and leads to `{alpha_s} ∪ (s(X) ∩ Sigma_m)`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, GroupElement, Vector, Word};
use crate::error::{CoxError, Result};
use crate::roots::{m_small_roots, RootPoset, DEFAULT_DEPTH_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutomatonKind {
    Red,
    Pref,
}

impl AutomatonKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Self::Red),
            "pref" => Ok(Self::Pref),
            _ => Err(CoxError::Parse(format!("unknown automaton kind `{s}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Red => "red",
            Self::Pref => "pref",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutomatonState {
    /// Sorted indices into the m-small roots.
    pub small_set: Vec<usize>,
    pub accept_flag: bool,
}

#[derive(Clone, Debug)]
pub struct Dfa {
    kind: AutomatonKind,
    m: usize,
    rank: usize,
    small_roots: Vec<Vector>,
    states: Vec<AutomatonState>,
    transitions: Vec<Vec<Option<usize>>>,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn kind(&self) -> AutomatonKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alphabet_size(&self) -> usize {
        self.rank
    }

    pub fn small_roots(&self) -> &[Vector] {
        &self.small_roots
    }

    pub fn states(&self) -> &[AutomatonState] {
        &self.states
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn transition(&self, state: usize, letter: usize) -> Option<usize> {
        self.transitions[state][letter]
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    /// Number of distinct small sets (the pref automaton may carry a set with both flags).
    pub fn distinct_small_sets(&self) -> usize {
        self.states.iter().map(|s| &s.small_set).collect::<HashSet<_>>().len()
    }

    pub fn run(&self, w: &Word) -> Option<usize> {
        let mut q = self.initial();
        for &s in w.letters() {
            q = *self.transitions[q].get(s)?.as_ref()?;
        }
        Some(q)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).is_some_and(|q| self.finals[q])
    }

    /// `c_k` = number of accepted words of length `k`, for `k = 0..=n`.
    pub fn count_by_length(&self, n: usize) -> Vec<BigUint> {
        let mut cur = vec![BigUint::zero(); self.len()];
        cur[self.initial()] = BigUint::from(1u32);
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            out.push(cur.iter().zip(&self.finals).filter(|(_, &f)| f).map(|(c, _)| c).sum());
            if k == n {
                break;
            }
            let mut next = vec![BigUint::zero(); self.len()];
            for (q, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for t in self.transitions[q].iter().flatten() {
                    next[*t] += c;
                }
            }
            cur = next;
        }
        out
    }

    /// Letter-count matrix `M[i][j]` = number of letters leading from `i` to `j`.
    pub fn transfer_matrix(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.len()]; self.len()];
        for (i, row) in self.transitions.iter().enumerate() {
            for &j in row.iter().flatten() {
                m[i][j] += 1;
            }
        }
        m
    }

    pub fn state_label(&self, q: usize) -> String {
        let set: Vec<String> = self.states[q].small_set.iter().map(|&i| self.small_roots[i].label()).collect();
        format!("{{{}}}", set.join(","))
    }

    /// DOT export; edge labels are 1-based generators, non-final states are shaded.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
        out.push_str("  start [shape=point];\n  start -> q0;\n");
        for q in 0..self.len() {
            let style = if self.finals[q] { "shape=doublecircle" } else { "style=filled, fillcolor=gray80" };
            let _ = writeln!(out, "  q{q} [label=\"{q}\\n{}\", {style}];", self.state_label(q));
        }
        for (q, row) in self.transitions.iter().enumerate() {
            for (s, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", s + 1);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let states: Vec<Value> = self
            .states
            .iter()
            .zip(&self.finals)
            .map(|(s, &f)| json!({ "set": s.small_set, "final": f }))
            .collect();
        let mut transitions = Vec::new();
        for (q, row) in self.transitions.iter().enumerate() {
            for (s, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    transitions.push(json!([q, s + 1, t]));
                }
            }
        }
        let roots: Vec<String> = self.small_roots.iter().map(|r| r.label()).collect();
        json!({
            "kind": self.kind.name(),
            "m": self.m,
            "small_roots": roots,
            "states": states,
            "transitions": transitions,
            "initial": self.initial(),
        })
    }
}

struct SmallRoots {
    poset: RootPoset,
    simple: Vec<usize>,
}

impl SmallRoots {
    fn new(sys: &CoxeterSystem, m: usize, max_roots: usize) -> Result<Self> {
        let poset = m_small_roots(sys, m, DEFAULT_DEPTH_CAP, max_roots)?;
        let simple = (0..sys.rank())
            .map(|s| poset.index_of(&sys.simple_root(s)).expect("simple roots are small"))
            .collect();
        Ok(Self { poset, simple })
    }

    fn step(&self, sys: &CoxeterSystem, set: &[usize], s: usize) -> Option<(Vec<usize>, bool)> {
        if set.contains(&self.simple[s]) {
            return None;
        }
        let mut next = vec![self.simple[s]];
        let mut disjoint = true;
        let members: HashSet<usize> = set.iter().copied().collect();
        for &i in set {
            let image = sys.reflect(s, &self.poset.roots()[i].coords);
            if let Some(j) = self.poset.index_of(&image) {
                next.push(j);
                if members.contains(&j) {
                    disjoint = false;
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        Some((next, disjoint))
    }
}

/// Builds the canonical automaton over `Sigma_m`, with transitions from every state.
pub fn build_automaton(sys: &CoxeterSystem, m: usize, kind: AutomatonKind, max_roots: usize) -> Result<Dfa> {
    let small = SmallRoots::new(sys, m, max_roots)?;
    let rank = sys.rank();
    let init = AutomatonState { small_set: vec![], accept_flag: kind == AutomatonKind::Red };
    let mut index: HashMap<AutomatonState, usize> = HashMap::from([(init.clone(), 0)]);
    let mut states = vec![init];
    let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
    let mut q = 0;
    while q < states.len() {
        let mut row = vec![None; rank];
        for (s, slot) in row.iter_mut().enumerate() {
            let Some((set, disjoint)) = small.step(sys, &states[q].small_set, s) else { continue };
            let flag = kind == AutomatonKind::Red || disjoint;
            let next = AutomatonState { small_set: set, accept_flag: flag };
            let id = *index.entry(next.clone()).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            *slot = Some(id);
        }
        transitions.push(row);
        q += 1;
    }
    let finals = states.iter().map(|s| s.accept_flag).collect();
    let small_roots = small.poset.roots().iter().map(|r| r.coords.clone()).collect();
    Ok(Dfa { kind, m, rank, small_roots, states, transitions, finals })
}

/// `Sigma_m(w)` computed directly from the inversion set, as sorted indices into `Sigma_m`.
pub fn small_inversion_set(sys: &CoxeterSystem, dfa: &Dfa, w: &GroupElement) -> Vec<usize> {
    let lookup: HashMap<&Vector, usize> = dfa.small_roots.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut out: Vec<usize> = sys.inversion_set(w).iter().filter_map(|b| lookup.get(b).copied()).collect();
    out.sort_unstable();
    out
}

/// The minimal-length element realizing each small set reached by `dfa`, found by a
/// breadth-first search of the Cayley graph.
pub fn low_elements(sys: &CoxeterSystem, dfa: &Dfa, max_elements: usize) -> Result<BTreeMap<Vec<usize>, GroupElement>> {
    let wanted: HashSet<&Vec<usize>> = dfa.states.iter().map(|s| &s.small_set).collect();
    let mut found: BTreeMap<Vec<usize>, GroupElement> = BTreeMap::new();
    let id = sys.identity();
    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([(id, Vec::<usize>::new())]);
    let roots = &dfa.small_roots;
    let lookup: HashMap<&Vector, usize> = roots.iter().enumerate().map(|(i, v)| (v, i)).collect();
    while let Some((w, set)) = queue.pop_front() {
        if !found.contains_key(&set) {
            found.insert(set.clone(), w.clone());
            if found.len() == wanted.len() {
                break;
            }
        }
        for s in 0..sys.rank() {
            if w.has_left_descent(s) {
                continue;
            }
            let sw = sys.left_multiply(s, &w);
            if seen.insert(sw.clone()) {
                if seen.len() > max_elements {
                    return Err(CoxError::CapExceeded { what: "elements", cap: max_elements });
                }
                let next = step_by_lookup(sys, roots, &lookup, &set, s);
                queue.push_back((sw, next));
            }
        }
    }
    Ok(found)
}

fn step_by_lookup(sys: &CoxeterSystem, roots: &[Vector], lookup: &HashMap<&Vector, usize>, set: &[usize], s: usize) -> Vec<usize> {
    let mut next: Vec<usize> = lookup.get(&sys.simple_root(s)).copied().into_iter().collect();
    next.extend(set.iter().filter_map(|&i| lookup.get(&sys.reflect(s, &roots[i])).copied()));
    next.sort_unstable();
    next.dedup();
    next
}
