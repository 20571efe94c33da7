//! The reflection representation over Q(2cos(pi/L)). Faithfulness of this
//! representation is what lets the enumeration deduplicate group elements by
//! exact matrix equality.

use crate::coxeter::CoxeterMatrix;
use crate::error::Result;
use crate::exact::{ExactReal, FieldContext};

/// Dense square matrix over the field, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqMatrix {
    n: usize,
    entries: Vec<ExactReal>,
}

impl SqMatrix {
    pub fn identity(ctx: &FieldContext, n: usize) -> Self {
        let mut entries = vec![ctx.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = ctx.one();
        }
        SqMatrix { n, entries }
    }

    pub fn from_entries(n: usize, entries: Vec<ExactReal>) -> Self {
        assert_eq!(entries.len(), n * n);
        SqMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &ExactReal {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, ctx: &FieldContext, other: &SqMatrix) -> SqMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ctx.zero();
                for k in 0..n {
                    acc = ctx.add_mul(&acc, self.at(i, k), other.at(k, j));
                }
                entries.push(acc);
            }
        }
        SqMatrix { n, entries }
    }

    pub fn transpose(&self) -> SqMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.at(j, i).clone());
            }
        }
        SqMatrix { n, entries }
    }
}

/// Precomputed data for multiplying by one reflection generator on the
/// right. Right multiplication only touches columns: col_j += c_ij * col_i
/// for the neighbors j, and col_i flips sign. On simply-laced diagrams every
/// c_ij is 0 or 1, so the update is a handful of rational additions.
#[derive(Debug, Clone)]
pub struct GenAction {
    index: usize,
    /// (column j, coefficient 2cos(pi/m_ij)) for each j != i with m_ij >= 3
    updates: Vec<(usize, ExactReal)>,
}

impl GenAction {
    pub fn all(matrix: &CoxeterMatrix, ctx: &FieldContext) -> Result<Vec<GenAction>> {
        let n = matrix.rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut updates = Vec::new();
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = matrix.label(i, j);
                if m == 2 {
                    continue;
                }
                updates.push((j, ctx.embed_two_cos(m)?));
            }
            out.push(GenAction { index: i, updates });
        }
        Ok(out)
    }

    /// m * s_i, reusing every untouched column.
    pub fn apply_right(&self, ctx: &FieldContext, m: &SqMatrix) -> SqMatrix {
        let n = m.n;
        let i = self.index;
        let mut entries = m.entries.clone();
        for (j, c) in &self.updates {
            for r in 0..n {
                entries[r * n + *j] = ctx.add_mul(&entries[r * n + *j], c, m.at(r, i));
            }
        }
        for r in 0..n {
            entries[r * n + i] = ctx.neg(&entries[r * n + i]);
        }
        SqMatrix { n, entries }
    }
}

/// A group element of the finite Coxeter group: exact matrix, Coxeter
/// length, and one reduced word.
#[derive(Debug, Clone)]
pub struct CoxElement {
    pub matrix: SqMatrix,
    pub length: u32,
    pub word: Vec<u8>,
}

/// The generator matrices s_i: e_j -> e_j + 2cos(pi/m_ij) e_i, e_i -> -e_i.
pub fn geometric_generators(matrix: &CoxeterMatrix, ctx: &FieldContext) -> Result<Vec<CoxElement>> {
    let n = matrix.rank();
    let actions = GenAction::all(matrix, ctx)?;
    let id = SqMatrix::identity(ctx, n);
    Ok(actions
        .iter()
        .map(|a| CoxElement {
            matrix: a.apply_right(ctx, &id),
            length: 1,
            word: vec![a.index as u8],
        })
        .collect())
}

/// The symmetric bilinear form B(e_i, e_j) = -cos(pi/m_ij), B(e_i, e_i) = 1,
/// preserved by every generator. Exposed for the invariant tests.
pub fn bilinear_form(matrix: &CoxeterMatrix, ctx: &FieldContext) -> Result<SqMatrix> {
    let n = matrix.rank();
    let half = ctx.from_rational(crate::exact::Rat::new(
        num_bigint::BigInt::from(-1),
        num_bigint::BigInt::from(2),
    ));
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                entries.push(ctx.one());
            } else {
                let c = ctx.embed_two_cos(matrix.label(i, j))?;
                entries.push(ctx.mul(&half, &c));
            }
        }
    }
    Ok(SqMatrix::from_entries(n, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(family: char, n: usize) -> (CoxeterMatrix, FieldContext) {
        let m = CoxeterMatrix::of_type(family, n).unwrap();
        let ctx = FieldContext::new(m.field_order());
        (m, ctx)
    }

    #[test]
    fn generators_are_involutions() {
        for (family, n) in [('A', 3), ('B', 3), ('I', 5), ('H', 3)] {
            let (m, ctx) = setup(family, n);
            let gens = geometric_generators(&m, &ctx).unwrap();
            let id = SqMatrix::identity(&ctx, m.rank());
            for g in &gens {
                assert_eq!(g.matrix.mul(&ctx, &g.matrix), id);
            }
        }
    }

    #[test]
    fn braid_relation_in_rank_two() {
        // s1 s2 s1 = s2 s1 s2 when m_12 = 3
        let (m, ctx) = setup('A', 2);
        let g = geometric_generators(&m, &ctx).unwrap();
        let lhs = g[0].matrix.mul(&ctx, &g[1].matrix).mul(&ctx, &g[0].matrix);
        let rhs = g[1].matrix.mul(&ctx, &g[0].matrix).mul(&ctx, &g[1].matrix);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pentagon_relation() {
        // (s1 s2)^5 = 1 when m_12 = 5
        let (m, ctx) = setup('I', 5);
        let g = geometric_generators(&m, &ctx).unwrap();
        let st = g[0].matrix.mul(&ctx, &g[1].matrix);
        let mut p = st.clone();
        for _ in 1..5 {
            p = p.mul(&ctx, &st);
        }
        assert_eq!(p, SqMatrix::identity(&ctx, 2));
    }

    #[test]
    fn generators_preserve_the_form() {
        for (family, n) in [('A', 3), ('B', 3), ('F', 4), ('I', 7)] {
            let (m, ctx) = setup(family, n);
            let b = bilinear_form(&m, &ctx).unwrap();
            for g in geometric_generators(&m, &ctx).unwrap() {
                let gt_b_g = g.matrix.transpose().mul(&ctx, &b).mul(&ctx, &g.matrix);
                assert_eq!(gt_b_g, b, "{family}_{n}");
            }
        }
    }

    #[test]
    fn column_update_matches_full_multiply() {
        let (m, ctx) = setup('F', 4);
        let gens = geometric_generators(&m, &ctx).unwrap();
        let actions = GenAction::all(&m, &ctx).unwrap();
        let w = gens[0].matrix.mul(&ctx, &gens[2].matrix);
        for (a, g) in actions.iter().zip(&gens) {
            assert_eq!(a.apply_right(&ctx, &w), w.mul(&ctx, &g.matrix));
        }
    }
}
