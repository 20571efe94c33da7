//! Finite truncations of the left-divisibility order on the positive monoid.

use crate::error::{Error, Result};
use crate::exec::{map_indexed, ExecMode};
use crate::garside::{Garside, MonoidElement};
use std::collections::HashMap;
use std::ops::Range;

/// Node-count guard for ball construction.
pub const DEFAULT_NODE_GUARD: usize = 5_000_000;

/// All monoid elements of height at most `h`, with the cover relations of
/// the prefix order. The presentation is homogeneous, so every cover is a
/// single right atom step and node height equals BFS depth.
///
/// The identity is node 0 and the atoms are nodes `1..=rank` in generator
/// order.
pub struct PosetBall {
    height: u32,
    nodes: Vec<MonoidElement>,
    index: HashMap<MonoidElement, u32>,
    heights: Vec<u32>,
    /// nodes of height h occupy `level_offsets[h]..level_offsets[h+1]`
    level_offsets: Vec<usize>,
    /// (lower node, atom, upper node)
    edges: Vec<(u32, u8, u32)>,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
    /// node * rank + atom -> child node, u32::MAX outside the ball
    child: Vec<u32>,
    rank: usize,
}

impl PosetBall {
    pub fn build(engine: &Garside, height: u32, mode: ExecMode) -> Result<PosetBall> {
        Self::build_bounded(engine, height, DEFAULT_NODE_GUARD, mode)
    }

    pub fn build_bounded(
        engine: &Garside,
        height: u32,
        guard: usize,
        mode: ExecMode,
    ) -> Result<PosetBall> {
        let rank = engine.rank();
        let atoms: Vec<MonoidElement> = (0..rank).map(|i| engine.atom(i)).collect();

        let mut nodes = vec![MonoidElement::identity()];
        let mut index = HashMap::new();
        index.insert(MonoidElement::identity(), 0u32);
        let mut heights = vec![0u32];
        let mut level_offsets = vec![0usize, 1];
        let mut edges: Vec<(u32, u8, u32)> = Vec::new();
        let mut frontier: Vec<u32> = vec![0];

        for level in 1..=height {
            let pairs: Vec<(u32, u8)> = frontier
                .iter()
                .flat_map(|&p| (0..rank as u8).map(move |a| (p, a)))
                .collect();
            let products = map_indexed(mode, &pairs, |&(p, a)| {
                engine.multiply(&nodes[p as usize], &atoms[a as usize])
            });
            let mut next = Vec::new();
            for (&(parent, atom), prod) in pairs.iter().zip(products) {
                let id = match index.get(&prod) {
                    Some(&id) => id,
                    None => {
                        let id = nodes.len() as u32;
                        if nodes.len() >= guard {
                            return Err(Error::BoundExceeded { bound: guard });
                        }
                        nodes.push(prod.clone());
                        heights.push(level);
                        index.insert(prod, id);
                        next.push(id);
                        id
                    }
                };
                edges.push((parent, atom, id));
            }
            level_offsets.push(nodes.len());
            frontier = next;
        }

        let mut out_adj = vec![Vec::new(); nodes.len()];
        let mut in_adj = vec![Vec::new(); nodes.len()];
        let mut child = vec![u32::MAX; nodes.len() * rank];
        for &(u, a, v) in &edges {
            out_adj[u as usize].push(v);
            in_adj[v as usize].push(u);
            child[u as usize * rank + a as usize] = v;
        }
        for l in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            l.sort_unstable();
            debug_assert!(l.windows(2).all(|w| w[0] != w[1]));
        }

        Ok(PosetBall {
            height,
            nodes,
            index,
            heights,
            level_offsets,
            edges,
            out_adj,
            in_adj,
            child,
            rank,
        })
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, i: u32) -> &MonoidElement {
        &self.nodes[i as usize]
    }

    pub fn nodes(&self) -> &[MonoidElement] {
        &self.nodes
    }

    pub fn index_of(&self, m: &MonoidElement) -> Option<u32> {
        self.index.get(m).copied()
    }

    pub fn node_height(&self, i: u32) -> u32 {
        self.heights[i as usize]
    }

    pub fn level_range(&self, h: u32) -> Range<usize> {
        self.level_offsets[h as usize]..self.level_offsets[h as usize + 1]
    }

    /// Node count per height, from 0 to the ball height.
    pub fn level_counts(&self) -> Vec<usize> {
        self.level_offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .collect()
    }

    pub fn edges(&self) -> &[(u32, u8, u32)] {
        &self.edges
    }

    pub fn out_neighbors(&self, i: u32) -> &[u32] {
        &self.out_adj[i as usize]
    }

    pub fn in_neighbors(&self, i: u32) -> &[u32] {
        &self.in_adj[i as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.out_adj[u as usize].binary_search(&v).is_ok()
    }

    /// The node of `node * sigma_atom`, if inside the ball.
    pub fn child(&self, node: u32, atom: usize) -> Option<u32> {
        match self.child[node as usize * self.rank + atom] {
            u32::MAX => None,
            v => Some(v),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// All monoid elements between `a` and `b` in prefix order, endpoints
/// included, in BFS order from `a`.
pub fn interval(engine: &Garside, a: &MonoidElement, b: &MonoidElement) -> Result<Vec<MonoidElement>> {
    if !engine.divides(a, b) {
        return Err(Error::NotBelow);
    }
    let q = monoid_quotient(engine, a, b);
    Ok(divisors(engine, &q)
        .into_iter()
        .map(|d| engine.multiply(a, &d))
        .collect())
}

/// a^{-1} b in the monoid; a must divide b.
fn monoid_quotient(engine: &Garside, a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
    let mut q = b.clone();
    for &f in a.factors() {
        q = engine.left_quotient(f, &q);
    }
    q
}

/// The down-set of `q`, in BFS order starting at the identity.
pub fn divisors(engine: &Garside, q: &MonoidElement) -> Vec<MonoidElement> {
    let rank = engine.rank();
    let mut out = vec![MonoidElement::identity()];
    let mut seen: HashMap<MonoidElement, ()> = HashMap::new();
    seen.insert(MonoidElement::identity(), ());
    let mut frontier = vec![MonoidElement::identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for i in 0..rank {
                let child = engine.multiply(m, &engine.atom(i));
                if seen.contains_key(&child) || !engine.divides(&child, q) {
                    continue;
                }
                seen.insert(child.clone(), ());
                out.push(child.clone());
                next.push(child);
            }
        }
        frontier = next;
    }
    out
}
