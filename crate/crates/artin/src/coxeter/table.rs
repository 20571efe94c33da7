//! Breadth-first closure of a finite Coxeter group under its reflection
//! representation, with left/right multiplication tables, inverse table and
//! descent sets.
//!
//! Element ids are BFS discovery order (layer by layer, parent id then
//! generator index), so they are deterministic and length-monotone: the
//! identity is 0, lengths equal BFS depth.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::coxeter::geometry::{CoxElement, GenAction, SqMatrix};
use crate::coxeter::{CoxeterMatrix, DiagramSymmetry};
use crate::error::{Error, Result};
use crate::exact::FieldContext;
use crate::exec::{map_indexed, ExecMode};

pub type ElementId = u32;

pub struct GroupTable {
    matrix: CoxeterMatrix,
    ctx: FieldContext,
    elements: Vec<CoxElement>,
    right: Vec<ElementId>,
    left: Vec<ElementId>,
    inv: Vec<ElementId>,
    left_desc: Vec<u32>,
    right_desc: Vec<u32>,
    w0: ElementId,
    index: HashMap<u64, Vec<ElementId>>,
}

fn matrix_key(m: &SqMatrix) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    m.hash(&mut h);
    h.finish()
}

impl GroupTable {
    /// Enumerate the group generated by the reflection matrices.
    pub fn enumerate(matrix: &CoxeterMatrix, bound: usize) -> Result<Self> {
        Self::enumerate_with_mode(matrix, bound, ExecMode::default())
    }

    pub fn for_type(t: crate::coxeter::IrreducibleType) -> Result<Self> {
        Self::enumerate(&t.matrix(), 1_000_000)
    }

    pub fn enumerate_with_mode(
        matrix: &CoxeterMatrix,
        bound: usize,
        mode: ExecMode,
    ) -> Result<Self> {
        let ctx = FieldContext::new(matrix.field_order());
        let n = matrix.rank();
        let actions = GenAction::all(matrix, &ctx)?;

        // matrices live in the dedup map until the end; words and lengths
        // accumulate separately so nothing is stored twice
        let mut ids: HashMap<SqMatrix, ElementId> = HashMap::new();
        let mut meta: Vec<(u32, Vec<u8>)> = Vec::new();
        let mut right: Vec<ElementId> = Vec::new();
        const UNSET: ElementId = ElementId::MAX;

        let identity = SqMatrix::identity(&ctx, n);
        ids.insert(identity.clone(), 0);
        meta.push((0, Vec::new()));
        right.extend(std::iter::repeat(UNSET).take(n));

        // frontier of the current length: (id, matrix) pairs
        let mut frontier: Vec<(ElementId, SqMatrix)> = vec![(0, identity)];
        let mut depth: u32 = 0;
        while !frontier.is_empty() {
            depth += 1;
            // all products frontier x generators, in deterministic order
            let products: Vec<Vec<SqMatrix>> = map_indexed(mode, &frontier, |(_, m)| {
                actions.iter().map(|a| a.apply_right(&ctx, m)).collect()
            });
            let mut next = Vec::new();
            for ((id, _), prods) in frontier.iter().zip(products) {
                for (s, prod) in prods.into_iter().enumerate() {
                    if let Some(&known) = ids.get(&prod) {
                        right[*id as usize * n + s] = known;
                        // generators are involutions, so the edge is mutual
                        right[known as usize * n + s] = *id;
                        continue;
                    }
                    if meta.len() >= bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    let new_id = meta.len() as ElementId;
                    let mut word = meta[*id as usize].1.clone();
                    word.push(s as u8);
                    meta.push((depth, word));
                    right.extend(std::iter::repeat(UNSET).take(n));
                    right[*id as usize * n + s] = new_id;
                    right[new_id as usize * n + s] = *id;
                    ids.insert(prod.clone(), new_id);
                    next.push((new_id, prod));
                }
            }
            frontier = next;
        }
        debug_assert!(right.iter().all(|&x| x != UNSET));

        let order = meta.len();
        let mut mats: Vec<Option<SqMatrix>> = (0..order).map(|_| None).collect();
        for (m, id) in ids {
            mats[id as usize] = Some(m);
        }
        let elements: Vec<CoxElement> = meta
            .into_iter()
            .zip(mats)
            .map(|((length, word), m)| CoxElement {
                matrix: m.expect("every id was inserted exactly once"),
                length,
                word,
            })
            .collect();
        // w0: the unique element of maximal length
        let max_len = elements.iter().map(|e| e.length).max().unwrap();
        let longest: Vec<ElementId> = (0..order as ElementId)
            .filter(|&i| elements[i as usize].length == max_len)
            .collect();
        assert!(
            longest.len() == 1,
            "finite Coxeter group must have a unique longest element"
        );
        let w0 = longest[0];

        // inverses: follow the reversed word (generators are involutions)
        let mut inv = vec![0 as ElementId; order];
        for e in 0..order {
            let mut cur: ElementId = 0;
            for &s in elements[e].word.iter().rev() {
                cur = right[cur as usize * n + s as usize];
            }
            inv[e] = cur;
        }

        // left multiplication via s * u = (u^-1 * s)^-1
        let mut left = vec![0 as ElementId; order * n];
        for e in 0..order {
            for s in 0..n {
                left[e * n + s] = inv[right[inv[e] as usize * n + s] as usize];
            }
        }

        let mut left_desc = vec![0u32; order];
        let mut right_desc = vec![0u32; order];
        for e in 0..order {
            let len = elements[e].length;
            for s in 0..n {
                if elements[left[e * n + s] as usize].length < len {
                    left_desc[e] |= 1 << s;
                }
                if elements[right[e * n + s] as usize].length < len {
                    right_desc[e] |= 1 << s;
                }
            }
        }

        // collision-bucketed matrix lookup; full matrices stay in `elements`
        let mut index: HashMap<u64, Vec<ElementId>> = HashMap::new();
        for (id, e) in elements.iter().enumerate() {
            index
                .entry(matrix_key(&e.matrix))
                .or_default()
                .push(id as ElementId);
        }
        for bucket in index.values_mut() {
            bucket.sort_unstable();
        }

        Ok(GroupTable {
            matrix: matrix.clone(),
            ctx,
            elements,
            right,
            left,
            inv,
            left_desc,
            right_desc,
            w0,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn coxeter(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn element(&self, id: ElementId) -> &CoxElement {
        &self.elements[id as usize]
    }

    pub fn get(&self, id: ElementId) -> Result<&CoxElement> {
        self.elements
            .get(id as usize)
            .ok_or(Error::NotInTable(id))
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    /// Id of the generator s_i (0-based vertex index).
    pub fn generator(&self, i: usize) -> ElementId {
        // generators are discovered first, in vertex order
        (1 + i) as ElementId
    }

    pub fn w0(&self) -> ElementId {
        self.w0
    }

    pub fn length(&self, e: ElementId) -> u32 {
        self.elements[e as usize].length
    }

    pub fn word(&self, e: ElementId) -> &[u8] {
        &self.elements[e as usize].word
    }

    /// u * s_i
    pub fn right_mul(&self, e: ElementId, s: usize) -> ElementId {
        self.right[e as usize * self.rank() + s]
    }

    /// s_i * u
    pub fn left_mul(&self, s: usize, e: ElementId) -> ElementId {
        self.left[e as usize * self.rank() + s]
    }

    pub fn inverse(&self, e: ElementId) -> ElementId {
        self.inv[e as usize]
    }

    /// Bitmask of generators i with length(s_i u) < length(u).
    pub fn left_descents(&self, e: ElementId) -> u32 {
        self.left_desc[e as usize]
    }

    pub fn right_descents(&self, e: ElementId) -> u32 {
        self.right_desc[e as usize]
    }

    /// Extend e on the right by a word.
    pub fn walk_right(&self, mut e: ElementId, word: &[u8]) -> ElementId {
        for &s in word {
            e = self.right_mul(e, s as usize);
        }
        e
    }

    /// u * v through v's reduced word.
    pub fn mul(&self, u: ElementId, v: ElementId) -> ElementId {
        let mut e = u;
        for i in 0..self.elements[v as usize].word.len() {
            let s = self.elements[v as usize].word[i];
            e = self.right_mul(e, s as usize);
        }
        e
    }

    /// Find an element by its exact matrix.
    pub fn lookup(&self, m: &SqMatrix) -> Option<ElementId> {
        self.index.get(&matrix_key(m)).and_then(|bucket| {
            bucket
                .iter()
                .copied()
                .find(|&id| &self.elements[id as usize].matrix == m)
        })
    }

    /// Image of an element under a diagram symmetry: relabel a reduced word
    /// and walk it. Diagram symmetries preserve length.
    pub fn apply_symmetry(&self, delta: &DiagramSymmetry, e: ElementId) -> ElementId {
        let word: Vec<u8> = self.elements[e as usize]
            .word
            .iter()
            .map(|&s| delta.apply(s as usize) as u8)
            .collect();
        self.walk_right(0, &word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::diagram_symmetries;

    fn table(family: char, n: usize) -> GroupTable {
        GroupTable::enumerate(&CoxeterMatrix::of_type(family, n).unwrap(), 1_000_000).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(table('A', 2).order(), 6);
        assert_eq!(table('A', 3).order(), 24);
        assert_eq!(table('B', 3).order(), 48);
        assert_eq!(table('I', 5).order(), 10);
        assert_eq!(table('I', 7).order(), 14);
    }

    #[test]
    fn longest_element_lengths() {
        assert_eq!(table('A', 2).length(table('A', 2).w0()), 3);
        assert_eq!(table('A', 3).length(table('A', 3).w0()), 6);
        assert_eq!(table('I', 5).length(table('I', 5).w0()), 5);
        assert_eq!(table('B', 3).length(table('B', 3).w0()), 9);
    }

    #[test]
    fn bound_is_enforced() {
        let m = CoxeterMatrix::of_type('A', 3).unwrap();
        assert!(matches!(
            GroupTable::enumerate(&m, 10),
            Err(Error::BoundExceeded { bound: 10 })
        ));
    }

    #[test]
    fn infinite_type_exceeds_any_bound() {
        // the affine triangle never closes
        let m =
            CoxeterMatrix::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(
            GroupTable::enumerate(&m, 5_000),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn multiplication_tables_are_consistent() {
        let t = table('B', 3);
        for e in 0..t.order() as ElementId {
            for s in 0..t.rank() {
                let r = t.right_mul(e, s);
                // involutive edges
                assert_eq!(t.right_mul(r, s), e);
                let l = t.left_mul(s, e);
                assert_eq!(t.left_mul(s, l), e);
                // (u s)^-1 = s u^-1
                assert_eq!(t.inverse(r), t.left_mul(s, t.inverse(e)));
            }
            // length(u) + length(u^-1 w0) = length(w0)
            let to_w0 = t.mul(t.inverse(e), t.w0());
            assert_eq!(t.length(e) + t.length(to_w0), t.length(t.w0()));
        }
    }

    #[test]
    fn words_are_reduced_and_match_matrices() {
        let t = table('A', 3);
        let ctx = t.ctx();
        let gens =
            crate::coxeter::geometry::geometric_generators(t.coxeter(), ctx).unwrap();
        for e in 0..t.order() as ElementId {
            let el = t.element(e);
            assert_eq!(el.word.len() as u32, el.length);
            let mut m = SqMatrix::identity(ctx, t.rank());
            for &s in &el.word {
                m = m.mul(ctx, &gens[s as usize].matrix);
            }
            assert_eq!(m, el.matrix);
            assert_eq!(t.lookup(&m), Some(e));
        }
    }

    #[test]
    fn symmetries_preserve_length() {
        let t = table('D', 4);
        for delta in diagram_symmetries(t.coxeter()) {
            for e in 0..t.order() as ElementId {
                let img = t.apply_symmetry(&delta, e);
                assert_eq!(t.length(img), t.length(e));
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let m = CoxeterMatrix::of_type('B', 3).unwrap();
        let seq = GroupTable::enumerate_with_mode(&m, 1_000_000, ExecMode::Sequential).unwrap();
        let def = GroupTable::enumerate(&m, 1_000_000).unwrap();
        assert_eq!(seq.order(), def.order());
        for e in 0..seq.order() as ElementId {
            assert_eq!(seq.word(e), def.word(e));
        }
        assert_eq!(seq.w0(), def.w0());
    }
}
