//! Crystallographic affine root systems and the closed forms of their depth and
//! reflection-length series.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::coxeter::{Bond, CoxeterMatrix, CoxeterSystem, FiniteType, Vector};
use crate::error::{CoxError, Result};
use crate::series::{Polynomial, RationalSeries};

/// An irreducible affine type `~X_n`, by its finite type. The affine node is the last generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineType(FiniteType);

impl AffineType {
    pub fn new(finite: FiniteType) -> Self {
        Self(finite)
    }

    /// Parses `A2`, `B3`, `G2`, ... with or without a leading `~`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim().trim_start_matches('~');
        let unknown = || CoxError::UnknownPreset(format!("~{name}"));
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        FiniteType::new(letter, n).map(Self).map_err(|_| unknown())
    }

    pub fn finite_type(self) -> FiniteType {
        self.0
    }

    pub fn name(self) -> String {
        format!("~{}", self.0.name())
    }

    pub fn rank(self) -> usize {
        self.0.rank() + 1
    }

    /// Rational Gram matrix of `alpha_1, ..., alpha_n, delta - omega`.
    pub fn gram(self) -> Vec<Vec<BigRational>> {
        let g0 = self.0.gram();
        let n = self.0.rank();
        let omega = highest_root(self.0);
        let pair = |j: usize| -> BigRational { (0..n).map(|i| &omega[i] * &g0[i][j]).sum() };
        let mut g = vec![vec![BigRational::zero(); n + 1]; n + 1];
        for i in 0..n {
            g[i][..n].clone_from_slice(&g0[i]);
            let b = -pair(i);
            g[i][n] = b.clone();
            g[n][i] = b;
        }
        g[n][n] = (0..n).map(|j| &omega[j] * pair(j)).sum();
        g
    }

    pub fn coxeter_matrix(self) -> CoxeterMatrix {
        let g = self.gram();
        let n = g.len();
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let mut edges = vec![];
        for i in 0..n {
            for j in i + 1..n {
                let c2 = &g[i][j] * &g[i][j] / (&g[i][i] * &g[j][j]);
                let bond = if c2.is_zero() {
                    continue;
                } else if c2 == r(1, 4) {
                    Bond::Finite(3)
                } else if c2 == r(1, 2) {
                    Bond::Finite(4)
                } else if c2 == r(3, 4) {
                    Bond::Finite(6)
                } else if c2 == r(1, 1) {
                    Bond::Infinite
                } else {
                    unreachable!("non-crystallographic Gram entry")
                };
                edges.push((i, j, bond));
            }
        }
        CoxeterMatrix::from_edges(n, &edges).expect("catalog data is valid")
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Positive roots of a finite crystallographic type as rational coordinate vectors,
/// sorted by height, then coordinates.
fn finite_positive_roots(t: FiniteType) -> Vec<Vec<BigRational>> {
    let g = t.gram();
    let n = t.rank();
    let norms = t.norms_sq();
    let mut found: BTreeSet<(BigRational, Vec<BigRational>)> = BTreeSet::new();
    let mut frontier: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(((i == j) as i64).into())).collect())
        .collect();
    for v in &frontier {
        found.insert((v.iter().sum(), v.clone()));
    }
    while let Some(v) = frontier.pop() {
        for s in 0..n {
            let b: BigRational = (0..n).map(|j| &g[s][j] * &v[j]).sum();
            if !b.is_negative() {
                continue;
            }
            let mut w = v.clone();
            w[s] -= BigRational::from_integer(2.into()) * b / &norms[s];
            if found.insert((w.iter().sum(), w.clone())) {
                frontier.push(w);
            }
        }
    }
    found.into_iter().map(|(_, v)| v).collect()
}

fn highest_root(t: FiniteType) -> Vec<BigRational> {
    finite_positive_roots(t).pop().expect("nonempty root system")
}

/// `k delta + alpha` with `alpha` a (possibly negative) root of the finite system.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AffineRoot {
    pub level: i64,
    pub finite: Vec<BigRational>,
}

impl AffineRoot {
    pub fn new(level: i64, finite: Vec<BigRational>) -> Self {
        Self { level, finite }
    }

    /// `(k delta + alpha)` rendered like `2d+110` or `1d-011`.
    pub fn label(&self) -> String {
        let neg = self.finite.iter().any(|c| c.is_negative());
        let digits: String = self.finite.iter().map(|c| c.abs().to_string()).collect();
        match (self.level, neg) {
            (0, false) => digits,
            (0, true) => format!("-{digits}"),
            (k, false) => format!("{k}d+{digits}"),
            (k, true) => format!("{k}d-{digits}"),
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The affine root datum of an irreducible affine type.
#[derive(Clone, Debug)]
pub struct AffineRootDatum {
    kind: AffineType,
    system: CoxeterSystem,
    finite_gram: Vec<Vec<BigRational>>,
    positive_roots: Vec<Vec<BigRational>>,
    highest_root: Vec<BigRational>,
    orbits: Vec<Vec<usize>>,
}

/// Depth data of `Sigma_O = O+ and (delta - O+)`.
#[derive(Clone, Debug)]
pub struct OrbitSeriesData {
    pub orbit: usize,
    pub roots: Vec<AffineRoot>,
    pub depths: Vec<usize>,
    pub polynomial: Polynomial,
    pub max_depth: usize,
}

impl OrbitSeriesData {
    /// `Phi_O(q) = P_O(q) / (1 - q^{M_O + 1})`
    pub fn series(&self) -> RationalSeries {
        RationalSeries::over_one_minus_power(self.polynomial.clone(), self.max_depth + 1)
    }
}

/// `Phi+(q) = P(q) / (1 - q^M)`.
#[derive(Clone, Debug)]
pub struct DepthSeries {
    pub orbits: Vec<OrbitSeriesData>,
    pub numerator: Polynomial,
    pub period: usize,
    pub series: RationalSeries,
}

impl DepthSeries {
    /// `T(q) = q P(q^2) / (1 - q^{2M})`.
    pub fn reflection_series(&self) -> RationalSeries {
        self.series.substitute_power(2).shift(1)
    }
}

impl AffineRootDatum {
    pub fn new(kind: AffineType) -> Result<Self> {
        if kind.0 == FiniteType::A(1) {
            return Err(CoxError::Domain("~A1 has no closed form here; use I2(inf)".into()));
        }
        let system = CoxeterSystem::crystallographic(kind.coxeter_matrix(), kind.gram())?;
        let finite_gram = kind.0.gram();
        let positive_roots = finite_positive_roots(kind.0);
        let highest_root = positive_roots.last().unwrap().clone();
        let mut datum = Self { kind, system, finite_gram, positive_roots, highest_root, orbits: vec![] };
        datum.orbits = datum.compute_orbits();
        Ok(datum)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(AffineType::parse(name)?)
    }

    pub fn kind(&self) -> AffineType {
        self.kind
    }

    /// The affine Coxeter system in crystallographic mode.
    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn finite_rank(&self) -> usize {
        self.kind.0.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<BigRational>] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &[BigRational] {
        &self.highest_root
    }

    /// Orbits as index lists into [`Self::positive_roots`]; the first contains `alpha_1`.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn finite_bilinear(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        let n = self.finite_rank();
        let mut acc = BigRational::zero();
        for i in 0..n {
            for j in 0..n {
                acc += &a[i] * &self.finite_gram[i][j] * &b[j];
            }
        }
        acc
    }

    /// `n(a, b) = 2B(a, b)/B(b, b)`.
    pub fn cartan_integer(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        BigRational::from_integer(2.into()) * self.finite_bilinear(a, b) / self.finite_bilinear(b, b)
    }

    fn reflect_finite(&self, s: usize, v: &[BigRational]) -> Vec<BigRational> {
        let e: Vec<BigRational> =
            (0..self.finite_rank()).map(|i| BigRational::from_integer(((i == s) as i64).into())).collect();
        let c = self.cartan_integer(v, &e);
        let mut w = v.to_vec();
        w[s] -= c;
        w
    }

    fn compute_orbits(&self) -> Vec<Vec<usize>> {
        let index: HashMap<&Vec<BigRational>, usize> =
            self.positive_roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut orbit_of = vec![usize::MAX; self.positive_roots.len()];
        let mut orbits = vec![];
        for start in 0..self.positive_roots.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for s in 0..self.finite_rank() {
                    let mut w = self.reflect_finite(s, &self.positive_roots[i]);
                    if w.iter().any(|c| c.is_negative()) {
                        w = w.iter().map(|c| -c).collect();
                    }
                    let j = index[&w];
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        let simple: Vec<usize> = (0..self.finite_rank())
            .map(|s| {
                let e: Vec<BigRational> = (0..self.finite_rank())
                    .map(|i| BigRational::from_integer(((i == s) as i64).into()))
                    .collect();
                index[&e]
            })
            .collect();
        let first_simple = |o: &Vec<usize>| simple.iter().position(|i| o.contains(i));
        orbits.sort_by_key(first_simple);
        orbits
    }

    /// Squared norm of the roots in an orbit.
    pub fn orbit_norm_sq(&self, orbit: usize) -> BigRational {
        let r = &self.positive_roots[self.orbits[orbit][0]];
        self.finite_bilinear(r, r)
    }

    pub fn orbit_contains_highest_root(&self, orbit: usize) -> bool {
        self.orbits[orbit].iter().any(|&i| self.positive_roots[i] == self.highest_root)
    }

    /// Coordinates of `k delta + alpha` over `alpha_1, ..., alpha_n, delta - omega`.
    pub fn to_vector(&self, root: &AffineRoot) -> Vector {
        let n = self.finite_rank();
        let k = BigRational::from_integer(root.level.into());
        let mut coords: Vec<BigRational> =
            (0..n).map(|i| &root.finite[i] + &k * &self.highest_root[i]).collect();
        coords.push(k);
        Vector::new(coords.into_iter().map(|c| self.system.rational(c)).collect())
    }

    pub fn from_vector(&self, v: &Vector) -> Result<AffineRoot> {
        let n = self.finite_rank();
        let rat: Vec<BigRational> = v
            .coords()
            .iter()
            .map(|c| c.as_rational().ok_or_else(|| CoxError::Domain("irrational coordinate".into())))
            .collect::<Result<_>>()?;
        if !rat[n].is_integer() {
            return Err(CoxError::Domain("non-integral level".into()));
        }
        let k = rat[n].clone();
        let finite = (0..n).map(|i| &rat[i] - &k * &self.highest_root[i]).collect();
        Ok(AffineRoot::new(k.to_integer().to_i64().expect("small level"), finite))
    }

    pub fn depth(&self, root: &AffineRoot) -> Result<usize> {
        self.system.root_depth(&self.to_vector(root))
    }

    /// `Sigma_{O,k} = {k delta + alpha, (k+1) delta - alpha : alpha in O+}` with depths.
    pub fn slice(&self, orbit: usize, k: i64) -> Result<Vec<(AffineRoot, usize)>> {
        let mut out = vec![];
        for &i in &self.orbits[orbit] {
            let a = &self.positive_roots[i];
            out.push(AffineRoot::new(k, a.clone()));
            out.push(AffineRoot::new(k + 1, a.iter().map(|c| -c).collect()));
        }
        out.into_iter()
            .map(|r| {
                let d = self.depth(&r)?;
                Ok((r, d))
            })
            .collect()
    }

    pub fn orbit_series(&self, orbit: usize) -> Result<OrbitSeriesData> {
        let slice = self.slice(orbit, 0)?;
        let max_depth = slice.iter().map(|(_, d)| *d).max().unwrap_or(0);
        let mut coeffs = vec![0i64; max_depth + 1];
        for (_, d) in &slice {
            coeffs[*d] += 1;
        }
        let (roots, depths) = slice.into_iter().unzip();
        Ok(OrbitSeriesData { orbit, roots, depths, polynomial: Polynomial::from_i64s(&coeffs), max_depth })
    }

    pub fn depth_series(&self) -> Result<DepthSeries> {
        let orbits: Vec<OrbitSeriesData> =
            (0..self.orbits.len()).map(|o| self.orbit_series(o)).collect::<Result<_>>()?;
        let period = orbits.iter().fold(1usize, |m, o| m.lcm(&(o.max_depth + 1)));
        let mut numerator = Polynomial::zero();
        for o in &orbits {
            let step = o.max_depth + 1;
            let d_coeffs: Vec<i64> = (0..period).map(|i| (i % step == 0) as i64).collect();
            numerator = &numerator + &(&Polynomial::from_i64s(&d_coeffs) * &o.polynomial);
        }
        let series = RationalSeries::over_one_minus_power(numerator.clone(), period);
        Ok(DepthSeries { orbits, numerator, period, series })
    }

    pub fn reflection_series(&self) -> Result<RationalSeries> {
        Ok(self.depth_series()?.reflection_series())
    }

    /// JSON report with per-orbit and combined data plus the first `terms` coefficients.
    pub fn report(&self, terms: usize) -> Result<Value> {
        let ds = self.depth_series()?;
        let ints = |p: &Polynomial| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let orbits: Vec<Value> = ds
            .orbits
            .iter()
            .map(|o| {
                json!({
                    "orbit": o.orbit + 1,
                    "size": self.orbits[o.orbit].len(),
                    "norm_sq": self.orbit_norm_sq(o.orbit).to_string(),
                    "contains_highest_root": self.orbit_contains_highest_root(o.orbit),
                    "P": ints(&o.polynomial),
                    "M": o.max_depth,
                })
            })
            .collect();
        Ok(json!({
            "type": self.kind.name(),
            "orbits": orbits,
            "P": ints(&ds.numerator),
            "M": ds.period,
            "depth_series": ds.series.to_json(terms),
            "reflection_series": ds.reflection_series().to_json(terms),
        }))
    }
}
