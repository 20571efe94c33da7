//! Finite groups by multiplication table, their automorphisms, and the
//! correspondence between second group operations on a fixed carrier and
//! regular subgroups of the holomorph.
//!
//! The holomorph acts on the carrier by (a, f) . x = a + f(x). A subgroup
//! meets each first coordinate exactly once iff it is the graph of a
//! function phi from the carrier into the automorphism group with
//! phi_e = id and phi_{x + phi_x(y)} = phi_x phi_y; those functions are
//! exactly the second operations x o y = x + phi_x(y) we are after. The
//! enumeration below searches phi directly with that closure rule as the
//! propagation step.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Validate a full multiplication table (0-based element indices).
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry {v} out of range 0..{n}")));
                }
                mul.push(v);
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
        }
        Ok(FiniteGroup {
            n,
            mul,
            inv,
            identity,
        })
    }

    /// Parse a table from text: one row per non-empty line, whitespace
    /// separated 0-based indices, `#` starts a comment.
    pub fn parse(text: &str) -> Result<FiniteGroup> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::Parse {
                        line: ln + 1,
                        column: 1,
                        message: format!("bad table entry {t:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        FiniteGroup::from_table(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(rows).expect("modular addition is a group")
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (p, q) = (self.n, other.n);
        let rows = (0..p * q)
            .map(|x| {
                (0..p * q)
                    .map(|y| {
                        let a = self.mul(x / q, y / q);
                        let b = other.mul(x % q, y % q);
                        a * q + b
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(rows).expect("product of groups is a group")
    }

    /// Symmetric group on k letters, elements in lexicographic one-line
    /// order, product = composition (right factor applied first).
    pub fn symmetric(k: usize) -> FiniteGroup {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            let mut items: Vec<usize> = (0..k).collect();
            permute(&mut items, 0, &mut out);
            out.sort();
            out
        }
        fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
            if start == items.len() {
                out.push(items.clone());
                return;
            }
            for i in start..items.len() {
                items.swap(start, i);
                permute(items, start + 1, out);
                items.swap(start, i);
            }
        }
        let ps = perms(k);
        let index: HashMap<Vec<usize>, usize> =
            ps.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let rows = ps
            .iter()
            .map(|p| {
                ps.iter()
                    .map(|q| {
                        let comp: Vec<usize> = (0..k).map(|x| p[q[x]]).collect();
                        index[&comp]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(rows).expect("permutation composition is a group")
    }

    /// Some generating set, greedily chosen.
    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.n];
        reached[self.identity] = true;
        let mut count = 1;
        while count < self.n {
            let g = (0..self.n).find(|&x| !reached[x]).unwrap();
            gens.push(g);
            // extend the closure with the new generator
            let mut frontier: Vec<usize> = (0..self.n).filter(|&x| reached[x]).collect();
            while let Some(x) = frontier.pop() {
                for &h in &gens {
                    let y = self.mul(x, h);
                    if !reached[y] {
                        reached[y] = true;
                        count += 1;
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }

    /// All automorphisms as permutation vectors, sorted; the identity map
    /// comes first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let mut found = Vec::new();
        let mut images = vec![0usize; gens.len()];
        self.assign_images(&gens, &mut images, 0, &mut found);
        found.sort();
        found
    }

    fn assign_images(
        &self,
        gens: &[usize],
        images: &mut Vec<usize>,
        pos: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        if pos == gens.len() {
            if let Some(map) = self.close_map(gens, images) {
                found.push(map);
            }
            return;
        }
        let ord = self.element_order(gens[pos]);
        for img in 0..self.n {
            if self.element_order(img) == ord {
                images[pos] = img;
                self.assign_images(gens, images, pos + 1, found);
            }
        }
    }

    /// Grow the homomorphism determined by generator images; None on any
    /// conflict or failure of bijectivity.
    fn close_map(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        map[self.identity] = self.identity;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for (t, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let fy = self.mul(map[x], images[t]);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut seen = vec![false; self.n];
        for &v in &map {
            if v == usize::MAX || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if map[self.mul(a, b)] != self.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

/// Two group structures on one carrier obeying the interchange law
/// a o (b + c) = (a o b) - a + (a o c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBrace {
    add: FiniteGroup,
    circ: FiniteGroup,
}

impl FiniteBrace {
    pub fn new(add: FiniteGroup, circ: FiniteGroup) -> Result<FiniteBrace> {
        if add.order() != circ.order() {
            return Err(Error::NotAGroup("carrier sizes differ".into()));
        }
        if add.identity() != circ.identity() {
            return Err(Error::NotAGroup("operations have different identities".into()));
        }
        let n = add.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = circ.mul(a, add.mul(b, c));
                    let rhs = add.mul(add.mul(circ.mul(a, b), add.inv(a)), circ.mul(a, c));
                    if lhs != rhs {
                        return Err(Error::NotAGroup(format!(
                            "interchange law fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteBrace { add, circ })
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    /// lambda_x(y) = -x + (x o y)
    pub fn lambda(&self, x: usize, y: usize) -> usize {
        self.add.mul(self.add.inv(x), self.circ.mul(x, y))
    }

    pub fn lambda_map(&self, x: usize) -> Vec<usize> {
        (0..self.order()).map(|y| self.lambda(x, y)).collect()
    }

    /// Kernel of lambda: the set where both operations agree pointwise.
    pub fn socle(&self) -> Vec<usize> {
        let id: Vec<usize> = (0..self.order()).collect();
        (0..self.order())
            .filter(|&x| self.lambda_map(x) == id)
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.circ
    }

    /// The socle is always a subgroup for o; for quotients it must also be
    /// a normal additive subgroup closed under every lambda_g.
    pub fn socle_is_ideal(&self) -> bool {
        let s = self.socle();
        let in_s = {
            let mut m = vec![false; self.order()];
            for &x in &s {
                m[x] = true;
            }
            m
        };
        let closed = s
            .iter()
            .all(|&x| s.iter().all(|&y| in_s[self.add.mul(x, y)]) && in_s[self.add.inv(x)]);
        let add_normal = (0..self.order()).all(|g| {
            s.iter()
                .all(|&x| in_s[self.add.mul(self.add.mul(g, x), self.add.inv(g))])
        });
        let lambda_stable =
            (0..self.order()).all(|g| s.iter().all(|&x| in_s[self.lambda(g, x)]));
        let circ_normal = (0..self.order()).all(|g| {
            s.iter()
                .all(|&x| in_s[self.circ.mul(self.circ.mul(g, x), self.circ.inv(g))])
        });
        closed && add_normal && lambda_stable && circ_normal
    }

    /// Quotient by the socle. None when the socle fails the ideal checks or
    /// the two coset partitions disagree.
    pub fn retract(&self) -> Option<FiniteBrace> {
        if !self.socle_is_ideal() {
            return None;
        }
        let s = self.socle();
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &u in &s {
                let y = self.add.mul(x, u);
                if coset[y] != usize::MAX && coset[y] != c {
                    return None;
                }
                coset[y] = c;
                // o-cosets must coincide with +-cosets
                let z = self.circ.mul(x, u);
                if coset[z] != usize::MAX && coset[z] != c {
                    return None;
                }
                coset[z] = c;
            }
        }
        let k = reps.len();
        let table = |op: &FiniteGroup| -> Vec<Vec<usize>> {
            (0..k)
                .map(|i| (0..k).map(|j| coset[op.mul(reps[i], reps[j])]).collect())
                .collect()
        };
        let add = FiniteGroup::from_table(table(&self.add)).ok()?;
        let circ = FiniteGroup::from_table(table(&self.circ)).ok()?;
        FiniteBrace::new(add, circ).ok()
    }

    /// Orders along the iterated socle quotients, and the least k with
    /// |B^(k)| = 1 when the series terminates.
    pub fn retraction_series(&self) -> RetractionSeries {
        let mut sizes = vec![self.order()];
        let mut cur = self.clone();
        loop {
            if cur.order() == 1 {
                let degree = Some(sizes.len() - 1);
                return RetractionSeries {
                    sizes,
                    degree,
                    ideal_failure: false,
                };
            }
            if cur.socle().len() == 1 {
                return RetractionSeries {
                    sizes,
                    degree: None,
                    ideal_failure: false,
                };
            }
            match cur.retract() {
                Some(next) => {
                    sizes.push(next.order());
                    cur = next;
                }
                None => {
                    return RetractionSeries {
                        sizes,
                        degree: None,
                        ideal_failure: true,
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionSeries {
    pub sizes: Vec<usize>,
    pub degree: Option<usize>,
    pub ideal_failure: bool,
}

/// All functions phi with phi_e = id and phi_{x + phi_x(y)} = phi_x phi_y,
/// as vectors of indices into `automorphisms()`. Each is the graph of one
/// regular subgroup of the holomorph.
pub fn regular_subgroup_functions(add: &FiniteGroup) -> Vec<Vec<usize>> {
    let auts = add.automorphisms();
    let a = auts.len();
    let n = add.order();
    // composition table on automorphism indices, right factor first
    let index: HashMap<&Vec<usize>, usize> = auts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let comp: Vec<usize> = (0..a * a)
        .map(|t| {
            let (i, j) = (t / a, t % a);
            let c: Vec<usize> = (0..n).map(|x| auts[i][auts[j][x]]).collect();
            index[&c]
        })
        .collect();

    let mut phi = vec![usize::MAX; n];
    phi[add.identity()] = 0;
    debug_assert_eq!(auts[0], (0..n).collect::<Vec<_>>());
    let mut out = Vec::new();
    search_phi(add, &auts, &comp, a, &mut phi, &mut out);
    out
}

fn propagate(
    add: &FiniteGroup,
    auts: &[Vec<usize>],
    comp: &[usize],
    a: usize,
    phi: &mut [usize],
) -> bool {
    loop {
        let mut changed = false;
        for x in 0..add.order() {
            if phi[x] == usize::MAX {
                continue;
            }
            for y in 0..add.order() {
                if phi[y] == usize::MAX {
                    continue;
                }
                let z = add.mul(x, auts[phi[x]][y]);
                let need = comp[phi[x] * a + phi[y]];
                if phi[z] == usize::MAX {
                    phi[z] = need;
                    changed = true;
                } else if phi[z] != need {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search_phi(
    add: &FiniteGroup,
    auts: &[Vec<usize>],
    comp: &[usize],
    a: usize,
    phi: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let snapshot = phi.clone();
    if !propagate(add, auts, comp, a, phi) {
        *phi = snapshot;
        return;
    }
    match (0..add.order()).find(|&x| phi[x] == usize::MAX) {
        None => out.push(phi.clone()),
        Some(x) => {
            for c in 0..a {
                let saved = phi.clone();
                phi[x] = c;
                search_phi(add, auts, comp, a, phi, out);
                *phi = saved;
            }
        }
    }
    *phi = snapshot;
}

/// Build the brace x o y = x + phi_x(y) from one regular-subgroup function.
pub fn brace_from_function(add: &FiniteGroup, phi: &[usize]) -> Result<FiniteBrace> {
    let auts = add.automorphisms();
    let n = add.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| add.mul(x, auts[phi[x]][y])).collect())
        .collect();
    let circ = FiniteGroup::from_table(rows)?;
    FiniteBrace::new(add.clone(), circ)
}

/// Every second operation on the carrier of `add`, one per regular
/// subgroup of the holomorph.
pub fn enumerate_braces(add: &FiniteGroup) -> Result<Vec<FiniteBrace>> {
    regular_subgroup_functions(add)
        .iter()
        .map(|phi| brace_from_function(add, phi))
        .collect()
}

#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub braces: usize,
    /// subgroup -> brace -> subgroup returned the same function everywhere
    pub functions_recovered: bool,
    /// brace -> subgroup -> brace returned the same tables everywhere
    pub tables_recovered: bool,
    pub trivial_count: usize,
    pub socle_sizes: Vec<usize>,
    pub degrees: Vec<Option<usize>>,
}

impl RoundtripReport {
    pub fn pass(&self) -> bool {
        self.functions_recovered && self.tables_recovered && self.trivial_count == 1
    }
}

/// Run the correspondence in both directions over every brace on the
/// carrier of `add` and report what came back.
pub fn holomorph_roundtrip(add: &FiniteGroup) -> Result<RoundtripReport> {
    let auts = add.automorphisms();
    let index: HashMap<&Vec<usize>, usize> = auts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let functions = regular_subgroup_functions(add);
    let mut report = RoundtripReport {
        braces: functions.len(),
        functions_recovered: true,
        tables_recovered: true,
        trivial_count: 0,
        socle_sizes: Vec::new(),
        degrees: Vec::new(),
    };
    for phi in &functions {
        let brace = brace_from_function(add, phi)?;
        // forward: the lambda maps must be automorphisms recovering phi
        let mut recovered = Vec::with_capacity(add.order());
        for x in 0..add.order() {
            match index.get(&brace.lambda_map(x)) {
                Some(&i) => recovered.push(i),
                None => {
                    report.functions_recovered = false;
                    break;
                }
            }
        }
        if recovered.len() == add.order() && &recovered != phi {
            report.functions_recovered = false;
        }
        // backward: rebuild the table from the lambda maps alone
        let n = add.order();
        let rebuilt: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| add.mul(x, brace.lambda(x, y))).collect())
            .collect();
        let same = (0..n).all(|x| (0..n).all(|y| rebuilt[x][y] == brace.circ().mul(x, y)));
        if !same {
            report.tables_recovered = false;
        }
        if brace.is_trivial() {
            report.trivial_count += 1;
        }
        report.socle_sizes.push(brace.socle().len());
        report.degrees.push(brace.retraction_series().degree);
    }
    Ok(report)
}
