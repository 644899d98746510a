use std::collections::HashSet;

use super::element::GroupElement;
use super::system::CoxeterSystem;
use crate::error::{CoxError, Result};

/// All elements of length at most some radius, grouped by length.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    levels: Vec<Vec<GroupElement>>,
}

impl CayleyBall {
    pub fn levels(&self) -> &[Vec<GroupElement>] {
        &self.levels
    }

    pub fn radius(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.levels.iter().flatten()
    }

    pub fn into_elements(self) -> Vec<GroupElement> {
        self.levels.into_iter().flatten().collect()
    }
}

/// Breadth-first search of the Cayley graph up to length `max_len`, failing once more than
/// `max_elements` elements have been produced.
pub fn cayley_bfs(sys: &CoxeterSystem, max_len: usize, max_elements: usize) -> Result<CayleyBall> {
    let mut levels = vec![vec![sys.identity()]];
    let mut total = 1;
    for _ in 0..max_len {
        let mut seen = HashSet::new();
        let mut next = vec![];
        for w in levels.last().unwrap() {
            for s in 0..sys.rank() {
                if w.has_right_descent(s) {
                    continue;
                }
                let ws = sys.right_multiply(w, s);
                if seen.insert(ws.clone()) {
                    next.push(ws);
                    total += 1;
                    if total > max_elements {
                        return Err(CoxError::CapExceeded { what: "element", cap: max_elements });
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    Ok(CayleyBall { levels })
}
