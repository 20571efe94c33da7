//! Exact arithmetic in the real cyclotomic field Q(theta), theta = 2cos(pi/L).
//!
//! Elements are residues modulo the minimal polynomial of theta, stored as
//! rational coefficient vectors of fixed length. Structural equality of the
//! canonical residue is field equality, so elements can key hash maps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

// Dense polynomials over Q, coefficients from constant term upward.

fn poly_trim(p: &mut Vec<Rat>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn poly_divrem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!den.is_empty(), "polynomial division by zero");
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Rat::zero(); rem.len() - den.len() + 1];
    let lead = den.last().unwrap().clone();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap() / &lead;
        for (k, dk) in den.iter().enumerate() {
            let v = dk * &c;
            rem[shift + k] -= v;
        }
        quo[shift] = c;
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() < den.len() {
            break;
        }
    }
    (quo, rem)
}

/// Cyclotomic polynomial Phi_n, computed by exact division of x^n - 1 by the
/// proper cyclotomic divisors.
fn cyclotomic(n: u32) -> Vec<Rat> {
    assert!(n >= 1);
    let mut p = vec![Rat::zero(); n as usize + 1];
    p[0] = -Rat::one();
    p[n as usize] = Rat::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divrem(&p, &cyclotomic(d));
            assert!(r.is_empty(), "cyclotomic division must be exact");
            p = q;
        }
    }
    p
}

/// C_k in the basis C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}; these satisfy
/// C_k(2cos t) = 2cos(kt).
fn c_poly(k: u32) -> Vec<Rat> {
    let mut prev = vec![rat_i(2)];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![Rat::zero(), Rat::one()];
    for _ in 1..k {
        // y*cur - prev
        let mut next = vec![Rat::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial of 2cos(pi/L) over Q, monic, constant term first.
///
/// For L >= 2 this is Phi_{2L}(z) / z^{d/2} rewritten in y = z + 1/z, of
/// degree phi(2L)/2; L = 1 is the rational point -2.
pub fn minpoly_two_cos(l: u32) -> Vec<Rat> {
    assert!(l >= 1, "order parameter must be positive");
    if l == 1 {
        return vec![rat_i(2), Rat::one()];
    }
    let phi = cyclotomic(2 * l);
    let deg = phi.len() - 1;
    debug_assert!(deg % 2 == 0);
    let half = deg / 2;
    // Phi_{2L} is palindromic for L >= 2: fold the symmetric pairs
    // z^k + z^{-k} onto C_k(y). The middle coefficient appears once.
    let mut out = vec![phi[half].clone()];
    for k in 1..=half {
        let ck = c_poly(k as u32);
        let scaled: Vec<Rat> = ck.iter().map(|c| c * &phi[half + k]).collect();
        if out.len() < scaled.len() {
            out.resize(scaled.len(), Rat::zero());
        }
        for (i, c) in scaled.iter().enumerate() {
            out[i] += c;
        }
    }
    poly_trim(&mut out);
    debug_assert!(out.last().unwrap().is_one(), "minimal polynomial must be monic");
    out
}

/// The field Q(2cos(pi/L)) with a fixed reduction basis.
///
/// One context serves a whole Coxeter matrix; all elements tagged with the
/// same L share it. L in {1, 2, 3} makes the field Q itself and every
/// operation is plain rational arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    l: u32,
    degree: usize,
    minpoly: Vec<Rat>,
}

/// A residue in the field: coefficients of 1, theta, ..., theta^{d-1}.
/// Always reduced and zero-padded to full length, so derived equality and
/// hashing agree with field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactReal {
    tag: u32,
    coeffs: Vec<Rat>,
}

impl ExactReal {
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl FieldContext {
    pub fn new(l: u32) -> Self {
        let minpoly = minpoly_two_cos(l);
        let degree = minpoly.len() - 1;
        FieldContext { l, degree, minpoly }
    }

    pub fn order_parameter(&self) -> u32 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minpoly(&self) -> &[Rat] {
        &self.minpoly
    }

    fn check(&self, a: &ExactReal) {
        assert!(
            a.tag == self.l && a.coeffs.len() == self.degree,
            "field context mismatch: element tagged L={} used under L={}",
            a.tag,
            self.l
        );
    }

    fn make(&self, mut coeffs: Vec<Rat>) -> ExactReal {
        // reduce modulo the monic minimal polynomial
        while coeffs.len() > self.degree {
            let c = coeffs.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = coeffs.len() - self.degree;
            for k in 0..self.degree {
                let v = &self.minpoly[k] * &c;
                coeffs[shift + k] -= v;
            }
        }
        coeffs.resize(self.degree, Rat::zero());
        ExactReal { tag: self.l, coeffs }
    }

    pub fn zero(&self) -> ExactReal {
        self.make(Vec::new())
    }

    pub fn one(&self) -> ExactReal {
        self.from_rational(Rat::one())
    }

    pub fn from_rational(&self, r: Rat) -> ExactReal {
        self.make(vec![r])
    }

    pub fn from_integer(&self, n: i64) -> ExactReal {
        self.from_rational(rat_i(n))
    }

    /// The generator theta = 2cos(pi/L) itself.
    pub fn theta(&self) -> ExactReal {
        if self.degree == 1 {
            self.from_rational(-self.minpoly[0].clone())
        } else {
            self.make(vec![Rat::zero(), Rat::one()])
        }
    }

    pub fn add(&self, a: &ExactReal, b: &ExactReal) -> ExactReal {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        ExactReal { tag: self.l, coeffs }
    }

    pub fn sub(&self, a: &ExactReal, b: &ExactReal) -> ExactReal {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        ExactReal { tag: self.l, coeffs }
    }

    pub fn neg(&self, a: &ExactReal) -> ExactReal {
        self.check(a);
        ExactReal {
            tag: self.l,
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &ExactReal, b: &ExactReal) -> ExactReal {
        self.check(a);
        self.check(b);
        self.make(poly_mul(&a.coeffs, &b.coeffs))
    }

    /// Add c*b into a without building intermediates; the workhorse of the
    /// reflection-matrix column updates.
    pub fn add_mul(&self, a: &ExactReal, c: &ExactReal, b: &ExactReal) -> ExactReal {
        if c.is_zero() || b.is_zero() {
            return a.clone();
        }
        self.add(a, &self.mul(c, b))
    }

    pub fn inv(&self, a: &ExactReal) -> Result<ExactReal> {
        self.check(a);
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid in Q[x]: s*a + t*minpoly = gcd, gcd a nonzero
        // constant because the modulus is irreducible.
        let mut r0 = self.minpoly.clone();
        let mut r1 = a.coeffs.clone();
        poly_trim(&mut r1);
        let mut s0: Vec<Rat> = Vec::new();
        let mut s1 = vec![Rat::one()];
        while !r1.is_empty() && r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let mut s_next = s0.clone();
            if s_next.len() < qs.len() {
                s_next.resize(qs.len(), Rat::zero());
            }
            for (i, c) in qs.iter().enumerate() {
                s_next[i] -= c;
            }
            poly_trim(&mut s_next);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_next;
        }
        assert!(
            r1.len() == 1,
            "minimal polynomial must be irreducible over Q"
        );
        let g = r1[0].clone();
        let coeffs = s1.iter().map(|c| c / &g).collect();
        Ok(self.make(coeffs))
    }

    pub fn div(&self, a: &ExactReal, b: &ExactReal) -> Result<ExactReal> {
        let bi = self.inv(b)?;
        Ok(self.mul(a, &bi))
    }

    /// 2cos(pi/m) as an element of this field.
    ///
    /// Divisors of L go through the angle-multiplication identity
    /// 2cos(k t) = C_k(2cos t); m in {1, 2, 3} is rational in any field.
    pub fn embed_two_cos(&self, m: u32) -> Result<ExactReal> {
        if m == 0 {
            return Err(Error::NotEmbeddable { m, l: self.l });
        }
        if self.l % m == 0 {
            let k = self.l / m;
            // C_k(theta) by the two-term recurrence
            let mut prev = self.from_integer(2);
            if k == 0 {
                return Ok(prev);
            }
            let mut cur = self.theta();
            for _ in 1..k {
                let next = self.sub(&self.mul(&self.theta(), &cur), &prev);
                prev = cur;
                cur = next;
            }
            return Ok(cur);
        }
        match m {
            1 => Ok(self.from_integer(-2)),
            2 => Ok(self.zero()),
            3 => Ok(self.one()),
            _ => Err(Error::NotEmbeddable { m, l: self.l }),
        }
    }

    /// Whether 2cos(pi/m) has an exact image here.
    pub fn embeds(&self, m: u32) -> bool {
        m >= 1 && (self.l % m == 0 || m <= 3)
    }

    pub fn theta_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.l as f64).cos()
    }

    /// Diagnostic float value; never used in any decision.
    pub fn to_f64(&self, a: &ExactReal) -> f64 {
        self.check(a);
        let t = self.theta_f64();
        let mut acc = 0.0;
        for c in a.coeffs.iter().rev() {
            let cf = rat_to_f64(c);
            acc = acc * t + cf;
        }
        acc
    }

    /// Exact rendering, e.g. `1 - 1/2 t + t^2`; floats only via `approx`.
    pub fn render(&self, a: &ExactReal) -> String {
        self.check(a);
        let mut parts = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mag = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let body = match (mag.is_empty(), var.is_empty()) {
                (true, _) => var.clone(),
                (false, true) => mag.clone(),
                (false, false) => format!("{mag} {var}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else if c.is_negative() {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Float rendering with 12 significant digits, marked approximate.
    pub fn approx(&self, a: &ExactReal) -> String {
        format!("~{:.11e}", self.to_f64(a))
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // good enough for diagnostics: saturating conversion through i128 falls
    // back to string parsing only for huge operands
    let n = r.numer();
    let d = r.denom();
    match (i128::try_from(n), i128::try_from(d)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let s = format!("{n}/{d}");
            let (a, b) = s.split_once('/').unwrap();
            a.parse::<f64>().unwrap_or(f64::NAN) / b.parse::<f64>().unwrap_or(f64::NAN)
        }
    }
}
