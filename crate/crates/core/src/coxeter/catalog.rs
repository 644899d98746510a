//! Dynkin data for the finite crystallographic types, numbered so that node 0 is `alpha_1`.

use num_rational::BigRational;

use crate::error::{CoxError, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FiniteType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl FiniteType {
    pub fn new(letter: char, n: usize) -> Result<Self> {
        let t = match (letter.to_ascii_uppercase(), n) {
            ('A', n) if n >= 1 => Self::A(n),
            ('B', n) if n >= 2 => Self::B(n),
            ('C', n) if n >= 2 => Self::C(n),
            ('D', n) if n >= 4 => Self::D(n),
            ('E', 6..=8) => Self::E(n),
            ('F', 4) => Self::F4,
            ('G', 2) => Self::G2,
            _ => return Err(CoxError::UnknownPreset(format!("{letter}{n}"))),
        };
        Ok(t)
    }

    pub fn rank(self) -> usize {
        match self {
            Self::A(n) | Self::B(n) | Self::C(n) | Self::D(n) | Self::E(n) => n,
            Self::F4 => 4,
            Self::G2 => 2,
        }
    }

    pub fn name(self) -> String {
        match self {
            Self::A(n) => format!("A{n}"),
            Self::B(n) => format!("B{n}"),
            Self::C(n) => format!("C{n}"),
            Self::D(n) => format!("D{n}"),
            Self::E(n) => format!("E{n}"),
            Self::F4 => "F4".into(),
            Self::G2 => "G2".into(),
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Self::A(_) | Self::D(_) | Self::E(_))
    }

    /// Edges `(i, j, m_ij)` of the Coxeter graph with `m_ij >= 3`.
    pub fn edges(self) -> Vec<(usize, usize, u32)> {
        let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
        match self {
            Self::A(n) => chain(n),
            Self::B(n) | Self::C(n) => {
                let mut e = chain(n);
                e[0].2 = 4;
                e
            }
            Self::D(n) => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1, 3));
                e
            }
            Self::E(n) => {
                let mut e = vec![(0, 2, 3), (1, 3, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
                e
            }
            Self::F4 => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            Self::G2 => vec![(0, 1, 6)],
        }
    }

    /// Squared norms of the simple roots, short roots having norm 1.
    pub fn norms_sq(self) -> Vec<BigRational> {
        let int = |k: i64| BigRational::from_integer(k.into());
        let n = self.rank();
        match self {
            Self::A(_) | Self::D(_) | Self::E(_) => vec![int(1); n],
            Self::B(_) => (0..n).map(|i| int(if i == 0 { 1 } else { 2 })).collect(),
            Self::C(_) => (0..n).map(|i| int(if i == 0 { 2 } else { 1 })).collect(),
            Self::F4 => vec![int(2), int(2), int(1), int(1)],
            Self::G2 => vec![int(3), int(1)],
        }
    }

    /// The rational Gram matrix of the simple roots for the norms of [`Self::norms_sq`].
    pub fn gram(self) -> Vec<Vec<BigRational>> {
        let norms = self.norms_sq();
        let n = self.rank();
        let mut g = vec![vec![BigRational::from_integer(0.into()); n]; n];
        for i in 0..n {
            g[i][i] = norms[i].clone();
        }
        let half = BigRational::new(1.into(), 2.into());
        for (i, j, _) in self.edges() {
            // for bonds 3, 4, 6 between roots of norms a <= b this is -b/2
            let b = -(norms[i].clone().max(norms[j].clone()) * &half);
            g[i][j] = b.clone();
            g[j][i] = b;
        }
        g
    }
}
