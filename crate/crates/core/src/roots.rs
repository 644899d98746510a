//! Positive roots by depth, root-poset covers, dominance and small roots.

use std::collections::HashMap;
use std::fmt::Write;

use crate::arith::AlgebraicNumber;
use crate::coxeter::{CoxeterSystem, Vector};
use crate::error::{CoxError, Result};

/// Safety cap on BFS depth for small-root enumeration.
pub const DEFAULT_DEPTH_CAP: usize = 4096;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoverKind {
    Short,
    Long,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub coords: Vector,
    pub depth: usize,
    pub dpinf: usize,
    pub norm_sq: AlgebraicNumber,
}

impl Root {
    /// Computes depth and dominance depth by descending to a simple root.
    pub fn new(sys: &CoxeterSystem, coords: Vector) -> Result<Self> {
        let norm_sq = sys.norm_sq(&coords);
        let mut v = coords.clone();
        let mut depth = 0;
        let mut dpinf = 0;
        let (word, _) = sys.root_word(&coords)?;
        for &s in word.letters() {
            // v covers s(v) through s; the cover is long iff B(v, alpha_s)^2 >= |v|^2 |alpha_s|^2
            let b = sys.pair_simple(s, &v);
            if exceeds_norm_product(sys, &b, &norm_sq, s) {
                dpinf += 1;
            }
            sys.reflect_in_place(s, &mut v);
            depth += 1;
        }
        Ok(Self { coords, depth, dpinf, norm_sq })
    }

    pub fn simple(sys: &CoxeterSystem, s: usize) -> Self {
        Self {
            coords: sys.simple_root(s),
            depth: 0,
            dpinf: 0,
            norm_sq: sys.rational(sys.simple_norm_sq(s).clone()),
        }
    }

    pub fn label(&self) -> String {
        self.coords.label()
    }
}

/// `|b| >= |beta| |alpha_s|`, decided as `b^2 >= N_beta N_s`.
fn exceeds_norm_product(sys: &CoxeterSystem, b: &AlgebraicNumber, norm_beta: &AlgebraicNumber, s: usize) -> bool {
    let prod = norm_beta.mul_rational(sys.simple_norm_sq(s));
    (b * b) >= prod
}

fn check_not_simple(sys: &CoxeterSystem, beta: &Vector, s: usize) -> Result<()> {
    if *beta == sys.simple_root(s) {
        Err(CoxError::Domain(format!("root equals alpha_{}", s + 1)))
    } else {
        Ok(())
    }
}

/// `dp(s(beta)) - dp(beta)`: `+1` if `B(beta, alpha_s) < 0`, `0` if it vanishes, `-1` otherwise.
pub fn depth_step(sys: &CoxeterSystem, beta: &Vector, s: usize) -> Result<i8> {
    check_not_simple(sys, beta, s)?;
    Ok(-sys.pair_simple(s, beta).sign())
}

/// Kind of the up-cover `beta < s(beta)`.
pub fn classify_cover(sys: &CoxeterSystem, beta: &Vector, s: usize) -> Result<CoverKind> {
    let b = sys.pair_simple(s, beta);
    if !b.is_negative() || *beta == sys.simple_root(s) {
        return Err(CoxError::Domain(format!("{} is not covered by its image under s{}", beta.label(), s + 1)));
    }
    Ok(if exceeds_norm_product(sys, &b, &sys.norm_sq(beta), s) { CoverKind::Long } else { CoverKind::Short })
}

/// `dp_inf(s(beta)) - dp_inf(beta)`.
pub fn dpinf_step(sys: &CoxeterSystem, beta: &Vector, s: usize) -> Result<i8> {
    check_not_simple(sys, beta, s)?;
    let b = sys.pair_simple(s, beta);
    if !exceeds_norm_product(sys, &b, &sys.norm_sq(beta), s) {
        Ok(0)
    } else if b.is_negative() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// `alpha <=_d beta` iff `dp(alpha) <= dp(beta)` and `B(alpha, beta) >= |alpha| |beta|`.
pub fn dominates(sys: &CoxeterSystem, alpha: &Root, beta: &Root) -> bool {
    if alpha.depth > beta.depth {
        return false;
    }
    let b = sys.bilinear(&alpha.coords, &beta.coords);
    !b.is_negative() && &b * &b >= &alpha.norm_sq * &beta.norm_sq
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    pub generator: usize,
    pub kind: CoverKind,
}

/// Positive roots (all of depth at most some bound, or all small roots) with their covers.
#[derive(Clone, Debug)]
pub struct RootPoset {
    roots: Vec<Root>,
    index: HashMap<Vector, usize>,
    covers: Vec<Cover>,
    max_depth: usize,
}

impl RootPoset {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn get(&self, v: &Vector) -> Option<&Root> {
        self.index_of(v).map(|i| &self.roots[i])
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.index.contains_key(v)
    }

    pub fn level(&self, d: usize) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(move |r| r.depth == d)
    }

    /// Number of roots at each depth.
    pub fn depth_census(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_depth + 1];
        for r in &self.roots {
            out[r.depth] += 1;
        }
        out
    }

    /// Indices of the enumerated roots dominated by `beta` (including `beta`).
    pub fn dominance_set(&self, sys: &CoxeterSystem, beta: usize) -> Vec<usize> {
        let b = &self.roots[beta];
        (0..self.roots.len()).filter(|&i| dominates(sys, &self.roots[i], b)).collect()
    }

    /// Hasse diagram in DOT: edges coloured by generator, long covers dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph roots {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for d in 0..=self.max_depth {
            let ids: Vec<String> =
                (0..self.roots.len()).filter(|&i| self.roots[i].depth == d).map(|i| format!("r{i}")).collect();
            if !ids.is_empty() {
                let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
            }
        }
        for (i, r) in self.roots.iter().enumerate() {
            let _ = writeln!(out, "  r{i} [label=\"{}\"];", r.label());
        }
        for c in &self.covers {
            let style = match c.kind {
                CoverKind::Short => "solid",
                CoverKind::Long => "dashed",
            };
            let _ = writeln!(
                out,
                "  r{} -> r{} [color=\"{}\", label=\"{}\", style={style}];",
                c.from,
                c.to,
                generator_color(c.generator),
                c.generator + 1
            );
        }
        out.push_str("}\n");
        out
    }

    /// Sorts roots by (depth, coordinates) and renumbers covers accordingly.
    fn canonicalize(mut roots: Vec<Root>, mut covers: Vec<Cover>) -> Self {
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&a, &b| (roots[a].depth, &roots[a].coords).cmp(&(roots[b].depth, &roots[b].coords)));
        let mut new_index = vec![0; roots.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut slots: Vec<Option<Root>> = roots.drain(..).map(Some).collect();
        let roots: Vec<Root> = order.iter().map(|&old| slots[old].take().unwrap()).collect();
        for c in &mut covers {
            c.from = new_index[c.from];
            c.to = new_index[c.to];
        }
        covers.sort_by_key(|c| (c.from, c.generator));
        let index = roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
        let max_depth = roots.iter().map(|r| r.depth).max().unwrap_or(0);
        Self { roots, index, covers, max_depth }
    }
}

const PALETTE: [&str; 10] =
    ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gray40", "black"];

pub fn generator_color(s: usize) -> &'static str {
    PALETTE[s % PALETTE.len()]
}

/// Breadth-first growth from the simple roots. `keep` decides which new roots survive;
/// growth stops at `max_depth` or when a level comes out empty.
fn grow(
    sys: &CoxeterSystem,
    max_depth: usize,
    max_roots: usize,
    keep: impl Fn(&Root) -> bool,
) -> Result<(Vec<Root>, Vec<Cover>, bool)> {
    let n = sys.rank();
    let mut roots: Vec<Root> = (0..n).map(|s| Root::simple(sys, s)).collect();
    let mut index: HashMap<Vector, usize> = roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
    let mut covers = vec![];
    let mut level: Vec<usize> = (0..n).collect();
    let mut depth = 0;
    while !level.is_empty() {
        if depth == max_depth {
            return Ok((roots, covers, false));
        }
        let mut next = vec![];
        for &i in &level {
            for s in 0..n {
                let beta = &roots[i];
                let b = sys.pair_simple(s, &beta.coords);
                if !b.is_negative() {
                    continue;
                }
                let long = exceeds_norm_product(sys, &b, &beta.norm_sq, s);
                let gamma = sys.reflect(s, &beta.coords);
                let kind = if long { CoverKind::Long } else { CoverKind::Short };
                let j = match index.get(&gamma) {
                    Some(&j) => {
                        debug_assert_eq!(roots[j].dpinf, beta.dpinf + long as usize, "dp_inf is chain independent");
                        j
                    }
                    None => {
                        let root = Root {
                            coords: gamma.clone(),
                            depth: depth + 1,
                            dpinf: beta.dpinf + long as usize,
                            norm_sq: beta.norm_sq.clone(),
                        };
                        if !keep(&root) {
                            continue;
                        }
                        if roots.len() >= max_roots {
                            return Err(CoxError::CapExceeded { what: "root", cap: max_roots });
                        }
                        roots.push(root);
                        index.insert(gamma, roots.len() - 1);
                        next.push(roots.len() - 1);
                        roots.len() - 1
                    }
                };
                covers.push(Cover { from: i, to: j, generator: s, kind });
            }
        }
        level = next;
        depth += 1;
    }
    Ok((roots, covers, true))
}

/// All positive roots of depth at most `max_depth`, with every cover between them.
pub fn enumerate_roots(sys: &CoxeterSystem, max_depth: usize, max_roots: usize) -> Result<RootPoset> {
    let (roots, covers, _) = grow(sys, max_depth, max_roots, |_| true)?;
    Ok(RootPoset::canonicalize(roots, covers))
}

/// `Sigma_m`: the positive roots with `dp_inf <= m`.
pub fn m_small_roots(sys: &CoxeterSystem, m: usize, depth_cap: usize, max_roots: usize) -> Result<RootPoset> {
    let (roots, covers, complete) = grow(sys, depth_cap, max_roots, |r| r.dpinf <= m)?;
    if !complete {
        return Err(CoxError::CapExceeded { what: "small-root depth", cap: depth_cap });
    }
    Ok(RootPoset::canonicalize(roots, covers))
}

/// Whether a vector has integer coordinates only.
pub fn is_integral(v: &Vector) -> bool {
    v.coords().iter().all(|c| c.as_rational().is_some_and(|q| q.is_integer()))
}
