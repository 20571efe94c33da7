//! Randomized and exhaustive checks that an assignment really produces a
//! second group operation with the skew interchange law.
//!
//! Samples are drawn from a ball in the positive monoid as quotients x y^{-1},
//! so mixed-sign elements and the identity all occur. Every check is exact:
//! normal forms are compared, never hashes or floats.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::spec::BraceSpec;
use crate::error::Result;
use crate::exec::{map_indexed, ExecMode};
use crate::garside::{Garside, GroupElement};
use crate::order::PosetBall;

/// Ball radius the samplers draw from.
pub const SAMPLE_HEIGHT: u32 = 4;

#[derive(Debug, Clone)]
pub struct SampleViolation {
    pub check: &'static str,
    pub sample: usize,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct BraceVerification {
    pub samples: usize,
    pub seed: u64,
    pub violations: Vec<SampleViolation>,
    /// rendering of the first sampled pair with a o b != a b
    pub nontrivial_witness: Option<String>,
    /// samples whose left factor had trivial alpha
    pub kernel_samples: usize,
    pub moved_samples: usize,
}

impl BraceVerification {
    /// All identities held and the operation was seen to differ from the
    /// group product at least once.
    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.nontrivial_witness.is_some()
    }
}

struct SampleOutcome {
    violations: Vec<SampleViolation>,
    witness: Option<String>,
    kernel_case: bool,
}

/// Check the defining identities of the induced operation on `samples`
/// pseudorandom triples. Deterministic for a fixed seed in both execution
/// modes.
pub fn verify_brace_identity(
    spec: &BraceSpec,
    engine: &Garside,
    samples: usize,
    seed: u64,
    mode: ExecMode,
) -> Result<BraceVerification> {
    let ball = PosetBall::build(engine, SAMPLE_HEIGHT, mode)?;
    let indices: Vec<usize> = (0..samples).collect();

    let outcomes = map_indexed(mode, &indices, |&i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut draw = || {
            let x = engine.group_of(ball.node(rng.gen_range(0..ball.len() as u32)).clone());
            let y = engine.group_of(ball.node(rng.gen_range(0..ball.len() as u32)).clone());
            engine.mul_g(&x, &engine.inv_g(&y))
        };
        let a = draw();
        let b = draw();
        let c = draw();
        run_sample(spec, engine, i, &a, &b, &c)
    });

    let mut report = BraceVerification {
        samples,
        seed,
        violations: Vec::new(),
        nontrivial_witness: None,
        kernel_samples: 0,
        moved_samples: 0,
    };
    for o in outcomes {
        report.violations.extend(o.violations);
        if report.nontrivial_witness.is_none() {
            report.nontrivial_witness = o.witness;
        }
        if o.kernel_case {
            report.kernel_samples += 1;
        } else {
            report.moved_samples += 1;
        }
    }
    Ok(report)
}

fn run_sample(
    spec: &BraceSpec,
    engine: &Garside,
    sample: usize,
    a: &GroupElement,
    b: &GroupElement,
    c: &GroupElement,
) -> SampleOutcome {
    let mut violations = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        violations.push(SampleViolation {
            check,
            sample,
            detail,
        });
    };

    let ab = spec.circ(engine, a, b);
    let ac = spec.circ(engine, a, c);
    let bc_sum = engine.mul_g(b, c);

    // a o (b c) = (a o b) a^{-1} (a o c)
    let lhs = spec.circ(engine, a, &bc_sum);
    let rhs = engine.mul_g(&engine.mul_g(&ab, &engine.inv_g(a)), &ac);
    if lhs != rhs {
        fail(
            "interchange",
            format!(
                "a={} b={} c={}",
                engine.render_g(a),
                engine.render_g(b),
                engine.render_g(c)
            ),
        );
    }

    // lambda_a(b) = a^{-1} (a o b) agrees with the symmetry action
    let lam_ab = engine.mul_g(&engine.inv_g(a), &ab);
    let alpha_a = spec.alpha_of(engine, a);
    if lam_ab != engine.apply_symmetry_g(&alpha_a, b) {
        fail(
            "lambda-is-alpha",
            format!("a={} b={}", engine.render_g(a), engine.render_g(b)),
        );
    }

    // alpha of lambda_a(b) equals alpha of b
    if spec.alpha_of(engine, &lam_ab) != spec.alpha_of(engine, b) {
        fail(
            "alpha-invariance",
            format!("a={} b={}", engine.render_g(a), engine.render_g(b)),
        );
    }

    // o is associative with two-sided inverses
    if spec.circ(engine, &ab, c) != spec.circ(engine, a, &spec.circ(engine, b, c)) {
        fail(
            "associativity",
            format!(
                "a={} b={} c={}",
                engine.render_g(a),
                engine.render_g(b),
                engine.render_g(c)
            ),
        );
    }
    let a_inv = spec.circ_inv(engine, a);
    if !spec.circ(engine, a, &a_inv).is_identity() || !spec.circ(engine, &a_inv, a).is_identity() {
        fail("inverses", format!("a={}", engine.render_g(a)));
    }

    // kernel elements act trivially on the right factor, others move some atom
    let kernel_case = alpha_a.is_identity();
    if kernel_case {
        if ab != engine.mul_g(a, b) {
            fail(
                "kernel-acts-trivially",
                format!("a={} b={}", engine.render_g(a), engine.render_g(b)),
            );
        }
    } else {
        let i = (0..engine.rank())
            .find(|&i| alpha_a.apply(i) != i)
            .expect("non-identity symmetry moves a vertex");
        let atom = engine.atom_g(i);
        if spec.circ(engine, a, &atom) == engine.mul_g(a, &atom) {
            fail(
                "moved-atom",
                format!("a={} atom=s{}", engine.render_g(a), i + 1),
            );
        }
    }

    let witness = if ab != engine.mul_g(a, b) {
        Some(format!(
            "a={} b={} : a o b = {} but a b = {}",
            engine.render_g(a),
            engine.render_g(b),
            engine.render_g(&ab),
            engine.render_g(&engine.mul_g(a, b))
        ))
    } else {
        None
    };

    SampleOutcome {
        violations,
        witness,
        kernel_case,
    }
}

#[derive(Debug, Clone)]
pub struct TorusReport {
    /// edge label m of the rank-2 type
    pub m: u32,
    /// both atom o-powers hit the half twist exactly at exponent m
    pub delta_at_m: bool,
    /// the two o-power chains agree at exponent m
    pub agree_at_m: bool,
    /// least k < m where the two o-power chains collide, if any
    pub early_collision: Option<u32>,
    /// renderings of sigma_1 o-powers 1..=m
    pub chain: Vec<String>,
}

impl TorusReport {
    pub fn pass(&self) -> bool {
        self.delta_at_m && self.early_collision.is_none()
    }
}

/// In a rank-2 group with edge label m, both atoms satisfy x^{o m} = Delta
/// under the flip assignment, and the two power chains stay disjoint below m.
pub fn torus_relation_check(engine: &Garside) -> Result<TorusReport> {
    let matrix = engine.table().coxeter();
    if matrix.rank() != 2 {
        return Err(crate::error::Error::NotIrreducibleSpherical(format!(
            "torus check needs rank 2, got rank {}",
            matrix.rank()
        )));
    }
    let m = matrix.label(0, 1);
    let ty = crate::coxeter::IrreducibleType::new('I', m as usize)?;
    let spec = super::spec::catalog(ty)
        .into_iter()
        .next()
        .expect("rank-2 catalog is nonempty for m >= 3");

    let delta = engine.delta_g(1);
    let mut p1 = GroupElement::identity();
    let mut p2 = GroupElement::identity();
    let s1 = engine.atom_g(0);
    let s2 = engine.atom_g(1);
    let mut chain = Vec::new();
    let mut early = None;
    for k in 1..=m {
        p1 = spec.circ(engine, &p1, &s1);
        p2 = spec.circ(engine, &p2, &s2);
        chain.push(engine.render_g(&p1));
        if k < m && p1 == p2 && early.is_none() {
            early = Some(k);
        }
    }
    Ok(TorusReport {
        m,
        delta_at_m: p1 == delta && p2 == delta,
        agree_at_m: p1 == p2,
        early_collision: early,
        chain,
    })
}

#[derive(Debug, Clone)]
pub struct CenterReport {
    /// least power of Delta that commutes and carries trivial alpha
    pub least_central_power: Option<u32>,
    /// (power, commutes with all atoms, alpha trivial) for each power tried
    pub checked_powers: Vec<(u32, bool, bool)>,
    pub samples: usize,
    pub seed: u64,
    /// sampled elements failing o-commutation with the central power
    pub circ_violations: usize,
}

impl CenterReport {
    pub fn pass(&self) -> bool {
        self.least_central_power.is_some() && self.circ_violations == 0
    }
}

/// Find the least k <= k_max with Delta^k central for the group product and
/// alpha-trivial, then confirm Delta^k is o-central on sampled elements.
pub fn delta_center_check(
    spec: &BraceSpec,
    engine: &Garside,
    k_max: u32,
    samples: usize,
    seed: u64,
) -> Result<CenterReport> {
    let mut checked = Vec::new();
    let mut found = None;
    for k in 1..=k_max {
        let dk = engine.delta_g(k as i64);
        let commutes = (0..engine.rank()).all(|i| {
            let s = engine.atom_g(i);
            engine.mul_g(&dk, &s) == engine.mul_g(&s, &dk)
        });
        let trivial = spec.alpha_of(engine, &dk).is_identity();
        checked.push((k, commutes, trivial));
        if commutes && trivial {
            found = Some(k);
            break;
        }
    }

    let mut circ_violations = 0;
    if let Some(k) = found {
        let dk = engine.delta_g(k as i64);
        let ball = PosetBall::build(engine, SAMPLE_HEIGHT, ExecMode::Sequential)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = engine.group_of(ball.node(rng.gen_range(0..ball.len() as u32)).clone());
            let y = engine.group_of(ball.node(rng.gen_range(0..ball.len() as u32)).clone());
            let g = engine.mul_g(&x, &engine.inv_g(&y));
            if spec.circ(engine, &dk, &g) != spec.circ(engine, &g, &dk) {
                circ_violations += 1;
            }
        }
    }

    Ok(CenterReport {
        least_central_power: found,
        checked_powers: checked,
        samples,
        seed,
        circ_violations,
    })
}
