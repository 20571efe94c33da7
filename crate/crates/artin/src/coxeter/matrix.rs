//! Coxeter matrices: validation, a text format, named constructions and
//! recognition of the finite (spherical) types.

use std::fmt;

use crate::error::{Error, Result};

/// Symmetric matrix of relation orders; 1 on the diagonal, entries >= 2
/// elsewhere. Vertices are numbered 1..rank in all user-facing text and
/// 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(parse_err(0, 0, "empty matrix"));
        }
        let mut entries = vec![0u32; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(parse_err(
                    i + 1,
                    1,
                    &format!("row {} has {} entries, expected {}", i + 1, row.len(), n),
                ));
            }
            for (j, &m) in row.iter().enumerate() {
                entries[i * n + j] = m;
            }
        }
        let m = CoxeterMatrix { n, entries };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            if self.label(i, i) != 1 {
                return Err(parse_err(0, 0, &format!("diagonal entry {} must be 1", i + 1)));
            }
            for j in 0..self.n {
                let m = self.label(i, j);
                if i != j && m < 2 {
                    return Err(parse_err(
                        0,
                        0,
                        &format!("off-diagonal entry ({}, {}) must be at least 2", i + 1, j + 1),
                    ));
                }
                if m != self.label(j, i) {
                    return Err(parse_err(0, 0, "matrix must be symmetric"));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn max_label(&self) -> u32 {
        *self.entries.iter().max().unwrap()
    }

    /// Labels 2 and odd everywhere off the diagonal.
    pub fn is_oddly_laced(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| i == j || self.label(i, j) == 2 || self.label(i, j) % 2 == 1)
        })
    }

    /// Smallest L with every 2cos(pi/m_ij) in Q(2cos(pi/L)): the lcm of the
    /// labels beyond 3, since labels 1, 2, 3 have rational cosine values.
    pub fn field_order(&self) -> u32 {
        let mut l: u32 = 0;
        let mut max_small = 1;
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.label(i, j);
                if m >= 4 {
                    l = if l == 0 { m } else { num_integer::lcm(l, m) };
                } else {
                    max_small = max_small.max(m);
                }
            }
        }
        if l == 0 {
            max_small
        } else {
            l
        }
    }

    /// Connected components of the underlying graph (edges where the label
    /// is 3 or more), each as a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in 0..self.n {
                    if !seen[w] && self.label(v, w) >= 3 {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Named construction with the vertex numbering fixed by the brace
    /// catalog (see `IrreducibleType::matrix`).
    pub fn of_type(family: char, param: usize) -> Result<Self> {
        IrreducibleType::new(family, param).map(|t| t.matrix())
    }

    /// Text format: `rank n` followed by n whitespace-separated rows, or
    /// `type X k`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            if !line.trim().is_empty() {
                lines.push((idx + 1, line.trim().to_string()));
            }
        }
        let Some((first_no, first)) = lines.first().cloned() else {
            return Err(parse_err(1, 1, "empty input"));
        };
        let head: Vec<&str> = first.split_whitespace().collect();
        match head[0] {
            "type" => {
                if head.len() != 3 {
                    return Err(parse_err(first_no, 1, "expected: type <family> <rank>"));
                }
                if lines.len() > 1 {
                    return Err(parse_err(lines[1].0, 1, "unexpected content after type line"));
                }
                let family = head[1].chars().next().unwrap();
                if head[1].len() != 1 {
                    return Err(parse_err(first_no, 6, "family must be a single letter"));
                }
                let param: usize = head[2]
                    .parse()
                    .map_err(|_| parse_err(first_no, 8, "rank must be a positive integer"))?;
                Self::of_type(family, param)
            }
            "rank" => {
                if head.len() != 2 {
                    return Err(parse_err(first_no, 1, "expected: rank <n>"));
                }
                let n: usize = head[1]
                    .parse()
                    .map_err(|_| parse_err(first_no, 6, "rank must be a positive integer"))?;
                if lines.len() != n + 1 {
                    return Err(parse_err(
                        first_no,
                        1,
                        &format!("expected {} matrix rows, found {}", n, lines.len() - 1),
                    ));
                }
                let mut rows = Vec::with_capacity(n);
                for (line_no, line) in &lines[1..] {
                    let mut row = Vec::with_capacity(n);
                    for (col, tok) in line.split_whitespace().enumerate() {
                        let m: u32 = tok.parse().map_err(|_| {
                            parse_err(*line_no, col + 1, &format!("bad entry {tok:?}"))
                        })?;
                        row.push(m);
                    }
                    rows.push(row);
                }
                Self::new(rows).map_err(|e| match e {
                    Error::Parse { message, .. } => parse_err(first_no, 1, &message),
                    other => other,
                })
            }
            other => Err(parse_err(
                first_no,
                1,
                &format!("expected 'rank' or 'type', found {other:?}"),
            )),
        }
    }

    pub fn classify(&self) -> Classification {
        let comps = self.components();
        let mut types = Vec::new();
        for comp in &comps {
            match classify_component(self, comp) {
                Some(t) => types.push(t),
                None => return Classification::NotSpherical,
            }
        }
        Classification::Spherical(types)
    }

    /// The single irreducible spherical type of a connected matrix.
    pub fn irreducible_type(&self) -> Result<IrreducibleType> {
        match self.classify() {
            Classification::Spherical(types) if types.len() == 1 => Ok(types[0]),
            Classification::Spherical(_) => Err(Error::NotIrreducibleSpherical(
                "matrix is reducible".to_string(),
            )),
            Classification::NotSpherical => Err(Error::NotIrreducibleSpherical(
                "matrix is not of finite type".to_string(),
            )),
        }
    }
}

fn parse_err(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Spherical(Vec<IrreducibleType>),
    NotSpherical,
}

/// The irreducible spherical types. Rank-2 groups are uniformly I(m) with
/// the conventions I(5) = H_2 and I(6) = G_2; label 3 stays A_2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I(u32),
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(n) => write!(f, "A_{n}"),
            IrreducibleType::B(n) => write!(f, "B_{n}"),
            IrreducibleType::D(n) => write!(f, "D_{n}"),
            IrreducibleType::E(n) => write!(f, "E_{n}"),
            IrreducibleType::F4 => write!(f, "F_4"),
            IrreducibleType::H(n) => write!(f, "H_{n}"),
            IrreducibleType::I(m) => write!(f, "I_{m}"),
        }
    }
}

impl IrreducibleType {
    pub fn new(family: char, param: usize) -> Result<Self> {
        let t = match (family, param) {
            // low-rank coincidences collapse onto their canonical names
            ('B' | 'b', 2) => IrreducibleType::I(4),
            ('D' | 'd', 3) => IrreducibleType::A(3),
            ('G' | 'g', 2) => IrreducibleType::I(6),
            ('H' | 'h', 2) => IrreducibleType::I(5),
            ('I' | 'i', 3) => IrreducibleType::A(2),
            ('A' | 'a', n) if n >= 1 => IrreducibleType::A(n),
            ('B' | 'b', n) if n >= 2 => IrreducibleType::B(n),
            ('D' | 'd', n) if n >= 4 => IrreducibleType::D(n),
            ('E' | 'e', n) if (6..=8).contains(&n) => IrreducibleType::E(n),
            ('F' | 'f', 4) => IrreducibleType::F4,
            ('H' | 'h', n) if n == 3 || n == 4 => IrreducibleType::H(n),
            ('I' | 'i', m) if m >= 4 => IrreducibleType::I(m as u32),
            _ => {
                return Err(Error::NotIrreducibleSpherical(format!(
                    "unknown type {family}_{param}"
                )))
            }
        };
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        match *self {
            IrreducibleType::A(n) | IrreducibleType::B(n) | IrreducibleType::D(n) => n,
            IrreducibleType::E(n) => n,
            IrreducibleType::F4 => 4,
            IrreducibleType::H(n) => n,
            IrreducibleType::I(_) => 2,
        }
    }

    pub fn family(&self) -> char {
        match self {
            IrreducibleType::A(_) => 'A',
            IrreducibleType::B(_) => 'B',
            IrreducibleType::D(_) => 'D',
            IrreducibleType::E(_) => 'E',
            IrreducibleType::F4 => 'F',
            IrreducibleType::H(_) => 'H',
            IrreducibleType::I(_) => 'I',
        }
    }

    /// The subscript in the canonical name; for I(m) this is the edge label
    /// m, not the rank. `new(family(), rank_parameter())` round-trips.
    pub fn rank_parameter(&self) -> usize {
        match *self {
            IrreducibleType::A(n) | IrreducibleType::B(n) | IrreducibleType::D(n) => n,
            IrreducibleType::E(n) | IrreducibleType::H(n) => n,
            IrreducibleType::F4 => 4,
            IrreducibleType::I(m) => m as usize,
        }
    }

    /// Group order of the finite Coxeter group of this type.
    pub fn group_order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match *self {
            IrreducibleType::A(n) => fact(n + 1),
            IrreducibleType::B(n) => (1u128 << n) * fact(n),
            IrreducibleType::D(n) => (1u128 << (n - 1)) * fact(n),
            IrreducibleType::E(6) => 51_840,
            IrreducibleType::E(7) => 2_903_040,
            IrreducibleType::E(8) => 696_729_600,
            IrreducibleType::E(_) => unreachable!(),
            IrreducibleType::F4 => 1_152,
            IrreducibleType::H(3) => 120,
            IrreducibleType::H(4) => 14_400,
            IrreducibleType::H(_) => unreachable!(),
            IrreducibleType::I(m) => 2 * m as u128,
        }
    }

    /// Canonical Coxeter matrix. Numbering conventions the rest of the crate
    /// relies on:
    /// A_n: the chain 1 - 2 - ... - n.
    /// B_n: the chain with the label-4 edge at (n-1, n).
    /// D_n: vertex n adjacent to 1, 2, 3; then the chain 3 - 4 - ... - (n-1).
    /// E_n: the chain 1 - ... - (n-1) with vertex n attached to 3.
    /// F_4: the chain 1 - 2 - 3 - 4 with the label-4 edge at (2, 3).
    /// H_n: the chain with the label-5 edge at (1, 2).
    /// I_m: two vertices joined by an edge labeled m.
    pub fn matrix(&self) -> CoxeterMatrix {
        let n = self.rank();
        let mut rows = vec![vec![2u32; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        let set = |rows: &mut Vec<Vec<u32>>, i: usize, j: usize, m: u32| {
            rows[i][j] = m;
            rows[j][i] = m;
        };
        match *self {
            IrreducibleType::A(_) => {
                for i in 0..n.saturating_sub(1) {
                    set(&mut rows, i, i + 1, 3);
                }
            }
            IrreducibleType::B(_) => {
                for i in 0..n - 1 {
                    set(&mut rows, i, i + 1, 3);
                }
                set(&mut rows, n - 2, n - 1, 4);
            }
            IrreducibleType::D(_) => {
                for &leaf in &[0, 1, 2] {
                    set(&mut rows, leaf, n - 1, 3);
                }
                for i in 2..n - 2 {
                    set(&mut rows, i, i + 1, 3);
                }
            }
            IrreducibleType::E(_) => {
                for i in 0..n - 2 {
                    set(&mut rows, i, i + 1, 3);
                }
                set(&mut rows, 2, n - 1, 3);
            }
            IrreducibleType::F4 => {
                set(&mut rows, 0, 1, 3);
                set(&mut rows, 1, 2, 4);
                set(&mut rows, 2, 3, 3);
            }
            IrreducibleType::H(_) => {
                set(&mut rows, 0, 1, 5);
                for i in 1..n - 1 {
                    set(&mut rows, i, i + 1, 3);
                }
            }
            IrreducibleType::I(m) => {
                set(&mut rows, 0, 1, m);
            }
        }
        CoxeterMatrix::new(rows).expect("canonical matrices are valid")
    }
}

/// Recognize one connected component, or None when it is not spherical.
fn classify_component(m: &CoxeterMatrix, comp: &[usize]) -> Option<IrreducibleType> {
    let k = comp.len();
    if k == 1 {
        return Some(IrreducibleType::A(1));
    }
    if k == 2 {
        let lbl = m.label(comp[0], comp[1]);
        return match lbl {
            3 => Some(IrreducibleType::A(2)),
            l if l >= 4 => Some(IrreducibleType::I(l)),
            _ => None,
        };
    }
    // degree within the component
    let deg =
        |v: usize| -> usize { comp.iter().filter(|&&w| w != v && m.label(v, w) >= 3).count() };
    let degrees: Vec<usize> = comp.iter().map(|&v| deg(v)).collect();
    if degrees.iter().any(|&d| d > 3) || degrees.iter().filter(|&&d| d == 3).count() > 1 {
        return None;
    }
    let branch = comp.iter().position(|&v| deg(v) == 3);
    match branch {
        None => {
            // a path; walk it from one end and read the labels
            let start = comp[degrees.iter().position(|&d| d == 1)?];
            let mut order = vec![start];
            let mut prev = None;
            while order.len() < k {
                let cur = *order.last().unwrap();
                let next = comp
                    .iter()
                    .find(|&&w| w != cur && Some(w) != prev && m.label(cur, w) >= 3)?;
                prev = Some(cur);
                order.push(*next);
            }
            let labels: Vec<u32> = order
                .windows(2)
                .map(|w| m.label(w[0], w[1]))
                .collect();
            let rev: Vec<u32> = labels.iter().rev().cloned().collect();
            let canon = if rev < labels { rev } else { labels };
            let all3 = canon.iter().all(|&l| l == 3);
            if all3 {
                return Some(IrreducibleType::A(k));
            }
            let mut sorted = canon.clone();
            sorted.sort_unstable();
            if sorted[..k - 2].iter().all(|&l| l == 3) {
                let big = sorted[k - 2];
                // single non-3 edge: its position decides the type
                if big == 4 {
                    if canon[0] == 4 || canon[k - 2] == 4 {
                        return Some(IrreducibleType::B(k));
                    }
                    if k == 4 && canon[1] == 4 {
                        return Some(IrreducibleType::F4);
                    }
                    return None;
                }
                if big == 5 && (k == 3 || k == 4) && (canon[0] == 5 || canon[k - 2] == 5) {
                    return Some(IrreducibleType::H(k));
                }
            }
            None
        }
        Some(b) => {
            // a tree with one degree-3 vertex: D or E when all labels are 3
            let center = comp[b];
            for &v in comp {
                for &w in comp {
                    if v < w {
                        let l = m.label(v, w);
                        if l != 2 && l != 3 {
                            return None;
                        }
                    }
                }
            }
            // arm lengths from the center
            let mut arms = Vec::new();
            for &nb in comp.iter().filter(|&&w| w != center && m.label(center, w) == 3) {
                let mut len = 1;
                let mut prev = center;
                let mut cur = nb;
                loop {
                    let next = comp
                        .iter()
                        .find(|&&w| w != prev && w != cur && m.label(cur, w) >= 3);
                    match next {
                        Some(&w) => {
                            if deg(cur) > 2 {
                                return None;
                            }
                            prev = cur;
                            cur = w;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            if arms.len() != 3 || arms.iter().sum::<usize>() != k - 1 {
                return None;
            }
            match arms.as_slice() {
                [1, 1, _] => Some(IrreducibleType::D(k)),
                [1, 2, 2] => Some(IrreducibleType::E(6)),
                [1, 2, 3] => Some(IrreducibleType::E(7)),
                [1, 2, 4] => Some(IrreducibleType::E(8)),
                _ => None,
            }
        }
    }
}
