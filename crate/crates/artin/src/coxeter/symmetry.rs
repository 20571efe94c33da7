//! Label-preserving vertex permutations of a Coxeter diagram.

use std::fmt;

use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};

/// A permutation of the vertices with m(p(i), p(j)) = m(i, j).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramSymmetry {
    perm: Vec<usize>,
}

impl DiagramSymmetry {
    pub fn identity(rank: usize) -> Self {
        DiagramSymmetry {
            perm: (0..rank).collect(),
        }
    }

    /// Build from an image vector, checking bijectivity and label
    /// preservation against the matrix.
    pub fn new(perm: Vec<usize>, matrix: &CoxeterMatrix) -> Result<Self> {
        let n = matrix.rank();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidBraceSpec(format!(
                "permutation has {} entries, diagram has {} vertices",
                perm.len(),
                n
            )));
        }
        for &img in &perm {
            if img >= n || seen[img] {
                return Err(Error::InvalidBraceSpec("not a permutation".to_string()));
            }
            seen[img] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if matrix.label(perm[i], perm[j]) != matrix.label(i, j) {
                    return Err(Error::InvalidBraceSpec(format!(
                        "vertex map breaks edge label at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(DiagramSymmetry { perm })
    }

    pub(crate) fn from_vec_unchecked(perm: Vec<usize>) -> Self {
        DiagramSymmetry { perm }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Function composition: `self.compose(&g)` applies g first.
    pub fn compose(&self, g: &DiagramSymmetry) -> DiagramSymmetry {
        assert_eq!(self.rank(), g.rank());
        DiagramSymmetry {
            perm: (0..self.rank()).map(|i| self.perm[g.perm[i]]).collect(),
        }
    }

    pub fn inverse(&self) -> DiagramSymmetry {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        DiagramSymmetry { perm }
    }

    pub fn pow(&self, k: i64) -> DiagramSymmetry {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = DiagramSymmetry::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Cycle notation on 1-based vertices, e.g. `(1 4)(2 3)`; identity is `id`.
    pub fn parse_cycles(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::InvalidBraceSpec(format!("bad cycle notation {s:?}: {msg}"));
        if s == "id" || s == "()" {
            return Ok(DiagramSymmetry::identity(rank));
        }
        let mut perm: Vec<usize> = (0..rank).collect();
        let mut rest = s;
        if !rest.starts_with('(') {
            return Err(bad("expected '('"));
        }
        while !rest.is_empty() {
            let Some(close) = rest.find(')') else {
                return Err(bad("unclosed cycle"));
            };
            let inner = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| bad("vertex must be a number"))?;
                if v < 1 || v > rank {
                    return Err(bad(&format!("vertex {v} out of range 1..{rank}")));
                }
                if cycle.contains(&(v - 1)) {
                    return Err(bad("repeated vertex in cycle"));
                }
                cycle.push(v - 1);
            }
            if cycle.len() < 2 {
                return Err(bad("cycle needs at least two vertices"));
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if perm[from] != from {
                    return Err(bad("vertex appears in two cycles"));
                }
                perm[from] = to;
            }
            rest = rest[close + 1..].trim_start();
            if !rest.is_empty() && !rest.starts_with('(') {
                return Err(bad("expected '(' between cycles"));
            }
        }
        Ok(DiagramSymmetry { perm })
    }
}

impl fmt::Display for DiagramSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let n = self.perm.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.perm[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.perm[cur];
            }
            write!(f, "(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All diagram symmetries, in lexicographic order of their image vectors.
/// Backtracking with per-vertex label-profile pruning; ranks here are tiny.
pub fn diagram_symmetries(matrix: &CoxeterMatrix) -> Vec<DiagramSymmetry> {
    let n = matrix.rank();
    let profile: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut row: Vec<u32> = (0..n).map(|j| matrix.label(i, j)).collect();
            row.sort_unstable();
            row
        })
        .collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        matrix: &CoxeterMatrix,
        profile: &[Vec<u32>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<DiagramSymmetry>,
    ) {
        let n = matrix.rank();
        if depth == n {
            out.push(DiagramSymmetry::from_vec_unchecked(perm.clone()));
            return;
        }
        for img in 0..n {
            if used[img] || profile[depth] != profile[img] {
                continue;
            }
            if (0..depth).any(|prev| matrix.label(perm[prev], img) != matrix.label(prev, depth)) {
                continue;
            }
            perm[depth] = img;
            used[img] = true;
            rec(matrix, profile, perm, used, depth + 1, out);
            used[img] = false;
        }
        perm[depth] = usize::MAX;
    }
    rec(matrix, &profile, &mut perm, &mut used, 0, &mut out);
    out
}
