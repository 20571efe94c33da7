//! Automorphism search on poset balls.
//!
//! A ball automorphism is a node bijection induced by a permutation pi of
//! the atoms through f(u * sigma_i) = f(u) * sigma_pi(i), the finite shadow
//! of the restriction-to-atoms theorem: an order automorphism fixing the
//! identity is determined by what it does to the atoms. The search tries
//! every atom permutation as a seed and forces the extension edge by edge;
//! a seed survives exactly when the relabeling is consistent on the whole
//! ball (every braid relation of height within the ball must be respected,
//! so for heights past the largest edge label only diagram symmetries
//! survive).
//!
//! Pure cover-relation bijections are a strictly weaker notion: truncation
//! always leaves interchangeable maximal nodes (two leaves over a common
//! parent set can be swapped), so they do not reflect the atom-restriction
//! theorem and are not what this search enumerates.

use super::ball::PosetBall;
use crate::coxeter::{CoxeterMatrix, DiagramSymmetry};

const UNSET: u32 = u32::MAX;

/// Lexicographically ordered permutations of 0..n.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

fn extend_seed(ball: &PosetBall, pi: &[usize]) -> Option<Vec<u32>> {
    let n = ball.len();
    let mut map = vec![UNSET; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    for &(u, a, v) in ball.edges() {
        let img_u = map[u as usize];
        debug_assert_ne!(img_u, UNSET, "edges are level-ordered");
        // the image of v is forced by the relabeled edge
        let img_v = ball.child(img_u, pi[a as usize])?;
        if map[v as usize] == UNSET {
            if used[img_v as usize] {
                return None; // not injective
            }
            map[v as usize] = img_v;
            used[img_v as usize] = true;
        } else if map[v as usize] != img_v {
            return None; // two parents disagree: a relation broke
        }
    }
    debug_assert!(ball
        .edges()
        .iter()
        .all(|&(u, _, v)| ball.has_edge(map[u as usize], map[v as usize])));
    Some(map)
}

/// All ball automorphisms, ordered by their seed permutation. The identity
/// node is the unique source of the Hasse diagram, so it is fixed whether or
/// not `fix_identity` is set; the flag is accepted for interface symmetry.
pub fn poset_automorphisms(ball: &PosetBall, fix_identity: bool) -> Vec<Vec<u32>> {
    let found: Vec<Vec<u32>> = permutations(ball.rank())
        .iter()
        .filter_map(|pi| extend_seed(ball, pi))
        .collect();
    if fix_identity {
        debug_assert!(found.iter().all(|m| m[0] == 0));
    }
    found
}

/// The permutation a ball automorphism induces on the atoms (nodes
/// `1..=rank`), as a 0-based vertex map.
pub fn atom_permutation(rank: usize, map: &[u32]) -> Vec<usize> {
    (0..rank).map(|i| map[1 + i] as usize - 1).collect()
}

/// The diagram symmetry an automorphism restricts to on atoms, if its atom
/// action is one.
pub fn atom_symmetry(matrix: &CoxeterMatrix, map: &[u32]) -> Option<DiagramSymmetry> {
    DiagramSymmetry::new(atom_permutation(matrix.rank(), map), matrix).ok()
}
