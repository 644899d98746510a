use std::fmt;

use serde::{Deserialize, Serialize};

use super::catalog::FiniteType;
use crate::affine::AffineType;
use crate::error::{CoxError, Result};

/// A Coxeter bond label `m_st`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    /// Decodes the JSON convention where `0` stands for infinity.
    pub fn from_code(code: u32) -> Self {
        if code == 0 {
            Self::Infinite
        } else {
            Self::Finite(code)
        }
    }

    pub fn code(self) -> u32 {
        match self {
            Self::Finite(m) => m,
            Self::Infinite => 0,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(m) => write!(f, "{m}"),
            Self::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Bond>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<Bond>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(CoxError::InvalidMatrix("rank must be at least 1".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxError::InvalidMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            for (j, &b) in row.iter().enumerate() {
                if b != rows[j][i] {
                    return Err(CoxError::InvalidMatrix(format!("not symmetric at ({}, {})", i + 1, j + 1)));
                }
                match (i == j, b) {
                    (true, Bond::Finite(1)) => {}
                    (true, _) => {
                        return Err(CoxError::InvalidMatrix(format!("diagonal entry {} is not 1", i + 1)))
                    }
                    (false, Bond::Finite(m)) if m < 2 => {
                        return Err(CoxError::InvalidMatrix(format!(
                            "off-diagonal entry ({}, {}) is {m}",
                            i + 1,
                            j + 1
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(Self { rank, entries: rows.into_iter().flatten().collect() })
    }

    /// Rows of bond codes, `0` meaning infinity.
    pub fn from_codes(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&c| Bond::from_code(c)).collect()).collect())
    }

    /// All bonds default to 2 except the listed edges.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, Bond)]) -> Result<Self> {
        let mut rows = vec![vec![Bond::Finite(2); rank]; rank];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Bond::Finite(1);
        }
        for &(i, j, b) in edges {
            if i >= rank || j >= rank || i == j {
                return Err(CoxError::InvalidMatrix(format!("bad edge ({}, {})", i + 1, j + 1)));
            }
            rows[i][j] = b;
            rows[j][i] = b;
        }
        Self::new(rows)
    }

    /// The universal Coxeter group: every bond is infinite.
    pub fn universal(rank: usize) -> Result<Self> {
        let edges: Vec<_> =
            (0..rank).flat_map(|i| (i + 1..rank).map(move |j| (i, j, Bond::Infinite))).collect();
        Self::from_edges(rank, &edges)
    }

    pub fn dihedral(m: Bond) -> Result<Self> {
        Self::from_edges(2, &[(0, 1, m)])
    }

    pub fn finite(t: FiniteType) -> Self {
        let edges: Vec<_> = t.edges().into_iter().map(|(i, j, m)| (i, j, Bond::Finite(m))).collect();
        Self::from_edges(t.rank(), &edges).expect("catalog data is valid")
    }

    /// Parses a preset name such as `A3`, `H3`, `I2(5)`, `I2(inf)`, `U4`, `~B3`.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.trim();
        let unknown = || CoxError::UnknownPreset(name.to_string());
        if let Some(rest) = name.strip_prefix('~') {
            return Ok(AffineType::parse(rest)?.coxeter_matrix());
        }
        if let Some(arg) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let bond = match arg {
                "inf" | "oo" | "∞" => Bond::Infinite,
                _ => {
                    let m: u32 = arg.parse().map_err(|_| unknown())?;
                    if m < 2 {
                        return Err(unknown());
                    }
                    Bond::Finite(m)
                }
            };
            return Self::dihedral(bond);
        }
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        match (letter, n) {
            ('H', 3) => Self::from_edges(3, &[(0, 1, Bond::Finite(5)), (1, 2, Bond::Finite(3))]),
            ('H', 4) => Self::from_edges(
                4,
                &[(0, 1, Bond::Finite(5)), (1, 2, Bond::Finite(3)), (2, 3, Bond::Finite(3))],
            ),
            ('U', n) if n >= 1 => Self::universal(n),
            (l, n) => FiniteType::new(l, n).map(Self::finite).map_err(|_| unknown()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: MatrixJson = serde_json::from_str(text).map_err(|e| CoxError::Parse(e.to_string()))?;
        let m = Self::from_codes(&parsed.m)?;
        if m.rank != parsed.rank {
            return Err(CoxError::InvalidMatrix(format!(
                "declared rank {} but matrix has {} rows",
                parsed.rank, m.rank
            )));
        }
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        let m = (0..self.rank).map(|i| (0..self.rank).map(|j| self.bond(i, j).code()).collect()).collect();
        serde_json::to_string(&MatrixJson { rank: self.rank, m }).expect("serializable")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        self.entries[i * self.rank + j]
    }

    /// Largest finite bond label (1 for rank one).
    pub fn max_finite_bond(&self) -> u32 {
        self.entries
            .iter()
            .filter_map(|b| match b {
                Bond::Finite(m) => Some(*m),
                Bond::Infinite => None,
            })
            .max()
            .unwrap_or(1)
    }
}
