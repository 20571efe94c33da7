//! Left-weighted normal forms and lattice operations for the Artin-Tits
//! monoid and group over a finite Coxeter group.
//!
//! Simple elements are exactly the Coxeter group elements (divisors of the
//! Garside element Delta, the lift of the longest element w0). A monoid
//! element is its left-weighted factor sequence; a group element is a power
//! of Delta times a monoid element not divisible by Delta. Everything
//! reduces to descent-set bit operations and multiplication-table walks, so
//! no matrix arithmetic happens after the group table is built.

use crate::coxeter::{DiagramSymmetry, ElementId, GroupTable};
use crate::error::{Error, Result};

/// Product of simple factors in left-weighted (left-greedy) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElement {
    factors: Vec<ElementId>,
}

impl MonoidElement {
    pub fn identity() -> Self {
        MonoidElement { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[ElementId] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Delta-power times a positive part not left-divisible by Delta.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    dpow: i64,
    pos: MonoidElement,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            dpow: 0,
            pos: MonoidElement::identity(),
        }
    }

    pub fn delta_power(&self) -> i64 {
        self.dpow
    }

    pub fn positive_part(&self) -> &MonoidElement {
        &self.pos
    }

    pub fn is_identity(&self) -> bool {
        self.dpow == 0 && self.pos.is_identity()
    }

    /// In the positive cone, i.e. a monoid element.
    pub fn is_positive(&self) -> bool {
        self.dpow >= 0
    }
}

/// The normal-form engine over one group table.
pub struct Garside<'t> {
    table: &'t GroupTable,
    /// u -> u^{-1} w0, the right complement
    rc: Vec<ElementId>,
    /// u -> w0 u w0
    tau: Vec<ElementId>,
    /// vertex relabeling induced by conjugation with w0
    tau_gen: Vec<usize>,
    tau_is_identity: bool,
}

impl<'t> Garside<'t> {
    pub fn new(table: &'t GroupTable) -> Self {
        let order = table.order();
        let w0 = table.w0();
        let mut rc = Vec::with_capacity(order);
        let mut tau = Vec::with_capacity(order);
        for e in 0..order as ElementId {
            let ei = table.inverse(e);
            rc.push(table.mul(ei, w0));
            tau.push(table.mul(table.mul(w0, e), w0));
        }
        let tau_gen: Vec<usize> = (0..table.rank())
            .map(|i| {
                let img = tau[table.generator(i) as usize];
                debug_assert_eq!(table.length(img), 1);
                table.word(img)[0] as usize
            })
            .collect();
        let tau_is_identity = tau_gen.iter().enumerate().all(|(i, &j)| i == j);
        Garside {
            table,
            rc,
            tau,
            tau_gen,
            tau_is_identity,
        }
    }

    pub fn table(&self) -> &GroupTable {
        self.table
    }

    pub fn rank(&self) -> usize {
        self.table.rank()
    }

    pub fn delta_simple(&self) -> ElementId {
        self.table.w0()
    }

    /// Height of Delta, the length of w0.
    pub fn delta_height(&self) -> u64 {
        self.table.length(self.table.w0()) as u64
    }

    pub fn atom(&self, i: usize) -> MonoidElement {
        MonoidElement {
            factors: vec![self.table.generator(i)],
        }
    }

    pub fn atom_g(&self, i: usize) -> GroupElement {
        self.group_of(self.atom(i))
    }

    pub fn delta(&self) -> MonoidElement {
        MonoidElement {
            factors: vec![self.table.w0()],
        }
    }

    pub fn delta_g(&self, p: i64) -> GroupElement {
        GroupElement {
            dpow: p,
            pos: MonoidElement::identity(),
        }
    }

    pub fn simple(&self, s: ElementId) -> MonoidElement {
        if s == self.table.identity() {
            MonoidElement::identity()
        } else {
            MonoidElement { factors: vec![s] }
        }
    }

    // ----- simples -----

    /// Greatest common left divisor of two simples: strip shared left
    /// descents until none remain.
    pub fn meet_simples(&self, mut u: ElementId, mut v: ElementId) -> ElementId {
        let t = self.table;
        let mut m = t.identity();
        loop {
            let common = t.left_descents(u) & t.left_descents(v);
            if common == 0 {
                return m;
            }
            let i = common.trailing_zeros() as usize;
            u = t.left_mul(i, u);
            v = t.left_mul(i, v);
            m = t.right_mul(m, i);
        }
    }

    /// Mirror image: greatest common right divisor.
    pub fn right_meet_simples(&self, mut u: ElementId, mut v: ElementId) -> ElementId {
        let t = self.table;
        let mut m = t.identity();
        loop {
            let common = t.right_descents(u) & t.right_descents(v);
            if common == 0 {
                return m;
            }
            let i = common.trailing_zeros() as usize;
            u = t.right_mul(u, i);
            v = t.right_mul(v, i);
            m = t.left_mul(i, m);
        }
    }

    /// Least common upper bound of two simples, through the duality
    /// w -> w^{-1} w0 between left and right divisibility.
    pub fn join_simples(&self, u: ElementId, v: ElementId) -> ElementId {
        let t = self.table;
        let rm = self.right_meet_simples(self.rc[u as usize], self.rc[v as usize]);
        t.mul(t.w0(), t.inverse(rm))
    }

    /// The pair (s, t) is in normal position: every left descent of t is a
    /// right descent of s.
    pub fn left_weighted(&self, s: ElementId, u: ElementId) -> bool {
        self.table.left_descents(u) & !self.table.right_descents(s) == 0
    }

    /// s^{-1} t for a simple left divisor s of t.
    fn left_quotient_simple(&self, s: ElementId, mut u: ElementId) -> ElementId {
        let t = self.table;
        for &i in t.word(s) {
            debug_assert!(t.left_descents(u) & (1 << i) != 0, "not a left divisor");
            u = t.left_mul(i as usize, u);
        }
        u
    }

    /// s * u where the lengths add (u divides the complement of s).
    fn simple_product(&self, s: ElementId, u: ElementId) -> ElementId {
        let t = self.table;
        let out = t.mul(s, u);
        debug_assert_eq!(t.length(out), t.length(s) + t.length(u));
        out
    }

    // ----- monoid -----

    /// Left-weighted normal form of an arbitrary factor list, by local
    /// sliding passes run to a fixpoint.
    pub fn normalize(&self, mut factors: Vec<ElementId>) -> MonoidElement {
        let e = self.table.identity();
        factors.retain(|&f| f != e);
        if factors.len() < 2 {
            return MonoidElement { factors };
        }
        loop {
            let mut changed = false;
            for i in 0..factors.len() - 1 {
                let s = factors[i];
                let u = factors[i + 1];
                if u == e || self.left_weighted(s, u) {
                    continue;
                }
                let slide = self.meet_simples(self.rc[s as usize], u);
                if slide == e {
                    continue;
                }
                factors[i] = self.simple_product(s, slide);
                factors[i + 1] = self.left_quotient_simple(slide, u);
                changed = true;
            }
            factors.retain(|&f| f != e);
            if !changed {
                break;
            }
        }
        debug_assert!(factors
            .windows(2)
            .all(|w| self.left_weighted(w[0], w[1])));
        MonoidElement { factors }
    }

    pub fn is_normal(&self, m: &MonoidElement) -> bool {
        m.factors.iter().all(|&f| f != self.table.identity())
            && m.factors
                .windows(2)
                .all(|w| self.left_weighted(w[0], w[1]))
    }

    pub fn multiply(&self, a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
        let mut f = a.factors.clone();
        f.extend_from_slice(&b.factors);
        self.normalize(f)
    }

    /// Positive element from a generator word.
    pub fn monoid_of_word(&self, word: &[u8]) -> MonoidElement {
        self.normalize(
            word.iter()
                .map(|&s| self.table.generator(s as usize))
                .collect(),
        )
    }

    /// Some word for the element (concatenated factor words).
    pub fn word_of(&self, m: &MonoidElement) -> Vec<u8> {
        let mut out = Vec::new();
        for &f in &m.factors {
            out.extend_from_slice(self.table.word(f));
        }
        out
    }

    pub fn height(&self, m: &MonoidElement) -> u64 {
        m.factors
            .iter()
            .map(|&f| self.table.length(f) as u64)
            .sum()
    }

    /// s^{-1} m for a simple left divisor s of m.
    pub fn left_quotient(&self, s: ElementId, m: &MonoidElement) -> MonoidElement {
        if s == self.table.identity() {
            return m.clone();
        }
        let mut f = m.factors.clone();
        debug_assert!(!f.is_empty());
        debug_assert_eq!(self.meet_simples(s, f[0]), s, "not a divisor of the head");
        let q = self.left_quotient_simple(s, f[0]);
        if q == self.table.identity() {
            f.remove(0);
        } else {
            f[0] = q;
        }
        self.normalize(f)
    }

    /// Greatest common left divisor: peel meets of heads.
    pub fn gcd(&self, a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
        let e = self.table.identity();
        let mut a = a.clone();
        let mut b = b.clone();
        let mut acc = Vec::new();
        while !a.factors.is_empty() && !b.factors.is_empty() {
            let s = self.meet_simples(a.factors[0], b.factors[0]);
            if s == e {
                break;
            }
            acc.push(s);
            a = self.left_quotient(s, &a);
            b = self.left_quotient(s, &b);
        }
        self.normalize(acc)
    }

    /// a left-divides b.
    pub fn divides(&self, a: &MonoidElement, b: &MonoidElement) -> bool {
        &self.gcd(a, b) == a
    }

    /// a right-divides b, through the word-reversal anti-automorphism.
    pub fn right_divides(&self, a: &MonoidElement, b: &MonoidElement) -> bool {
        self.divides(&self.rev(a), &self.rev(b))
    }

    /// Least common multiple for right divisibility.
    pub fn right_join(&self, a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
        self.rev(&self.join(&self.rev(a), &self.rev(b)))
    }

    /// x^{-1} Delta^k for x dividing Delta^k.
    fn quotient_to_delta_power(&self, x: &MonoidElement, k: usize) -> MonoidElement {
        debug_assert!(x.factors.len() <= k);
        let mut m = MonoidElement {
            factors: vec![self.table.w0(); k],
        };
        for &f in &x.factors {
            m = self.left_quotient(f, &m);
        }
        m
    }

    /// Word reversal: an anti-automorphism fixing the atoms, swapping left
    /// and right divisibility.
    pub fn rev(&self, m: &MonoidElement) -> MonoidElement {
        let f: Vec<ElementId> = m
            .factors
            .iter()
            .rev()
            .map(|&s| self.table.inverse(s))
            .collect();
        self.normalize(f)
    }

    /// Conjugation by Delta on a simple.
    pub fn tau_simple(&self, s: ElementId) -> ElementId {
        self.tau[s as usize]
    }

    /// Conjugation by Delta, factor by factor; it preserves normality.
    pub fn tau_m(&self, m: &MonoidElement) -> MonoidElement {
        let factors: Vec<ElementId> =
            m.factors.iter().map(|&s| self.tau[s as usize]).collect();
        debug_assert!(factors
            .windows(2)
            .all(|w| self.left_weighted(w[0], w[1])));
        MonoidElement { factors }
    }

    fn tau_pow_m(&self, m: &MonoidElement, q: i64) -> MonoidElement {
        if self.tau_is_identity || q.rem_euclid(2) == 0 {
            m.clone()
        } else {
            self.tau_m(m)
        }
    }

    /// Least common multiple via the anti-automorphism x -> x^{-1} Delta^k
    /// that swaps the lattice operations on divisors of Delta^k.
    pub fn join(&self, a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
        if a.is_identity() {
            return b.clone();
        }
        if b.is_identity() {
            return a.clone();
        }
        let k = a.factors.len().max(b.factors.len());
        let fa = self.quotient_to_delta_power(a, k);
        let fb = self.quotient_to_delta_power(b, k);
        // right-gcd through rev
        let rg = self.rev(&self.gcd(&self.rev(&fa), &self.rev(&fb)));
        // invert the map: join = Delta^k rg^{-1} = rev(phi_k(rev(rg)))
        let z = self.rev(&self.quotient_to_delta_power(&self.rev(&rg), k));
        z
    }

    // ----- group -----

    /// Canonical group form of a positive element: extract leading Deltas.
    pub fn group_of(&self, m: MonoidElement) -> GroupElement {
        let w0 = self.table.w0();
        let lead = m.factors.iter().take_while(|&&f| f == w0).count();
        GroupElement {
            dpow: lead as i64,
            pos: MonoidElement {
                factors: m.factors[lead..].to_vec(),
            },
        }
    }

    pub fn mul_g(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        // g h = D^{p+q} tau^q(x) y
        let shifted = self.tau_pow_m(&g.pos, h.dpow);
        let prod = self.multiply(&shifted, &h.pos);
        let mut out = self.group_of(prod);
        out.dpow += g.dpow + h.dpow;
        out
    }

    pub fn inv_g(&self, g: &GroupElement) -> GroupElement {
        let k = g.pos.factors.len();
        let y = self.quotient_to_delta_power(&g.pos, k);
        let y = self.tau_pow_m(&y, -(g.dpow + k as i64));
        let mut out = self.group_of(y);
        out.dpow += -(g.dpow + k as i64);
        out
    }

    /// Left-invariant prefix order: g <= h iff g^{-1} h is positive.
    pub fn leq_g(&self, g: &GroupElement, h: &GroupElement) -> bool {
        self.mul_g(&self.inv_g(g), h).is_positive()
    }

    /// Translate into the positive cone, as a monoid element D^{shift} g.
    fn monoid_shifted(&self, g: &GroupElement, shift: i64) -> MonoidElement {
        let total = g.dpow + shift;
        assert!(total >= 0, "shift must land in the positive cone");
        let mut factors = vec![self.table.w0(); total as usize];
        factors.extend_from_slice(&g.pos.factors);
        MonoidElement { factors }
    }

    pub fn meet_g(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let shift = (-g.dpow).max(-h.dpow).max(0);
        let m = self.gcd(&self.monoid_shifted(g, shift), &self.monoid_shifted(h, shift));
        let mut out = self.group_of(m);
        out.dpow -= shift;
        out
    }

    pub fn join_g(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let shift = (-g.dpow).max(-h.dpow).max(0);
        let m = self.join(&self.monoid_shifted(g, shift), &self.monoid_shifted(h, shift));
        let mut out = self.group_of(m);
        out.dpow -= shift;
        out
    }

    /// Generator-count distance from g up to h; h must dominate g.
    pub fn relative_height(&self, g: &GroupElement, h: &GroupElement) -> Result<u64> {
        let d = self.mul_g(&self.inv_g(g), h);
        if !d.is_positive() {
            return Err(Error::NotBelow);
        }
        Ok(d.dpow as u64 * self.delta_height() + self.height(&d.pos))
    }

    /// Alternating product x y x y ... with k letters.
    pub fn braid_term(&self, x: &GroupElement, y: &GroupElement, k: u32) -> GroupElement {
        let mut out = GroupElement::identity();
        for i in 0..k {
            out = self.mul_g(&out, if i % 2 == 0 { x } else { y });
        }
        out
    }

    pub fn braid_term_m(&self, x: &MonoidElement, y: &MonoidElement, k: u32) -> MonoidElement {
        let mut out = MonoidElement::identity();
        for i in 0..k {
            out = self.multiply(&out, if i % 2 == 0 { x } else { y });
        }
        out
    }

    // ----- diagram symmetries -----

    /// Relabel generators through a diagram symmetry and renormalize. The
    /// image of a normal form is again normal factor by factor; the
    /// normalize call is the cheap proof.
    pub fn apply_symmetry_m(&self, delta: &DiagramSymmetry, m: &MonoidElement) -> MonoidElement {
        let factors: Vec<ElementId> = m
            .factors
            .iter()
            .map(|&s| self.table.apply_symmetry(delta, s))
            .collect();
        self.normalize(factors)
    }

    pub fn apply_symmetry_g(&self, delta: &DiagramSymmetry, g: &GroupElement) -> GroupElement {
        GroupElement {
            dpow: g.dpow,
            pos: self.apply_symmetry_m(delta, &g.pos),
        }
    }

    // ----- rendering and parsing -----

    /// `[s1 s2][s1]` style, Delta power first when present.
    pub fn render_g(&self, g: &GroupElement) -> String {
        if g.is_identity() {
            return "e".to_string();
        }
        let mut out = String::new();
        if g.dpow != 0 {
            out.push_str(&format!("D^{}", g.dpow));
        }
        if !g.pos.is_identity() {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&self.render_m(&g.pos));
        }
        out
    }

    pub fn render_m(&self, m: &MonoidElement) -> String {
        if m.is_identity() {
            return "e".to_string();
        }
        let mut out = String::new();
        for &f in &m.factors {
            out.push('[');
            let word = self.table.word(f);
            for (k, &s) in word.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("s{}", s + 1));
            }
            out.push(']');
        }
        out
    }

    /// Dot-separated letters: `s1.s2^-1.D.s3`; `e` is the identity.
    pub fn parse_word(&self, input: &str) -> Result<GroupElement> {
        let input = input.trim();
        let mut out = GroupElement::identity();
        if input.is_empty() || input == "e" {
            return Ok(out);
        }
        let bad = |tok: &str, msg: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("bad word token {tok:?}: {msg}"),
        };
        for tok in input.split('.') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| bad(tok, "exponent must be an integer"))?;
                    (b, exp)
                }
                None => (tok, 1),
            };
            let letter = if base == "D" {
                self.delta_g(1)
            } else if let Some(num) = base.strip_prefix('s') {
                let i: usize = num
                    .parse()
                    .map_err(|_| bad(tok, "generator must be s<k>"))?;
                if i < 1 || i > self.rank() {
                    return Err(bad(tok, &format!("generator index out of 1..{}", self.rank())));
                }
                self.atom_g(i - 1)
            } else {
                return Err(bad(tok, "expected s<k> or D"));
            };
            let letter = if exp < 0 { self.inv_g(&letter) } else { letter };
            for _ in 0..exp.unsigned_abs() {
                out = self.mul_g(&out, &letter);
            }
        }
        Ok(out)
    }

    /// Word rendering `s1.s2.s1` of a positive element.
    pub fn render_word(&self, m: &MonoidElement) -> String {
        let word = self.word_of(m);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|&s| format!("s{}", s + 1))
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn tau_generator(&self, i: usize) -> usize {
        self.tau_gen[i]
    }
}
