//! A monoid oracle built from nothing but words and braid rewrites.
//!
//! Elements of a given length are equivalence classes of positive words
//! under single-window braid moves (i j i ... <-> j i j ..., window length
//! m_ij), closed with a union-find. No normal forms, descent sets or group
//! tables are involved, so agreement with the engine checks a genuinely
//! different computation path. Positive words represent equal monoid
//! elements exactly when braid moves connect them, which makes the classes
//! a faithful copy of the monoid up to the height cutoff.
//!
//! Divisibility is read off the concatenation graph: class(w) is covered by
//! class(w a) for each letter a. Meets and bounded joins come from down-set
//! bitsets over a low-height window.

use artin::coxeter::CoxeterMatrix;

/// Dense bitset over the low-region classes.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(width: usize) -> Bits {
        Bits(vec![0; width.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

pub struct WordOracle {
    rank: usize,
    max_height: u32,
    low_height: u32,
    /// word-id offset of each length level
    offsets: Vec<usize>,
    /// word id -> dense class id, classes numbered in level order
    class_of: Vec<u32>,
    /// class id -> representative word id
    rep: Vec<usize>,
    class_height: Vec<u32>,
    /// first class id of each height level (one past the end at the back)
    level_starts: Vec<u32>,
    /// class -> low-region index, MAX outside
    low_index: Vec<u32>,
    /// per class, which low classes divide it
    down_low: Vec<Bits>,
}

fn find(parent: &mut Vec<u32>, mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

fn union(parent: &mut Vec<u32>, a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}

impl WordOracle {
    pub fn build(matrix: &CoxeterMatrix, max_height: u32, low_height: u32) -> WordOracle {
        assert!(low_height <= max_height);
        let rank = matrix.rank();
        let h = max_height as usize;

        let mut offsets = vec![0usize; h + 2];
        for l in 0..=h {
            offsets[l + 1] = offsets[l] + rank.pow(l as u32);
        }
        let total = offsets[h + 1];
        let mut parent: Vec<u32> = (0..total as u32).collect();

        // one union per applicable braid window
        let pows: Vec<usize> = (0..=h as u32).map(|p| rank.pow(p)).collect();
        let mut word = vec![0u8; h];
        for len in 2..=h {
            for idx in 0..pows[len] {
                let mut k = idx;
                for p in 0..len {
                    word[p] = (k % rank) as u8;
                    k /= rank;
                }
                for p in 0..len - 1 {
                    let (i, j) = (word[p], word[p + 1]);
                    if i == j {
                        continue;
                    }
                    let m = matrix.label(i as usize, j as usize) as usize;
                    if p + m > len {
                        continue;
                    }
                    let alternating = (0..m).all(|t| word[p + t] == if t % 2 == 0 { i } else { j });
                    if !alternating {
                        continue;
                    }
                    // rewrite the window to start with the other letter
                    let mut other = 0usize;
                    for (t, &w) in word.iter().enumerate().take(len) {
                        let letter = if t >= p && t < p + m {
                            if (t - p) % 2 == 0 {
                                j
                            } else {
                                i
                            }
                        } else {
                            w
                        };
                        other += letter as usize * pows[t];
                    }
                    union(
                        &mut parent,
                        (offsets[len] + idx) as u32,
                        (offsets[len] + other) as u32,
                    );
                }
            }
        }

        // dense class numbering in word order, which is level order
        let mut class_of = vec![u32::MAX; total];
        let mut rep = Vec::new();
        let mut class_height = Vec::new();
        let mut level_starts = vec![0u32];
        for len in 0..=h {
            for w in offsets[len]..offsets[len + 1] {
                let r = find(&mut parent, w as u32) as usize;
                if class_of[r] == u32::MAX {
                    class_of[r] = rep.len() as u32;
                    rep.push(r);
                    class_height.push(len as u32);
                }
                class_of[w] = class_of[r];
            }
            level_starts.push(rep.len() as u32);
        }
        let classes = rep.len();

        // cover edges by appending one letter to a representative
        let mut children = vec![u32::MAX; classes * rank];
        for c in 0..classes {
            let len = class_height[c] as usize;
            if len == max_height as usize {
                continue;
            }
            let idx = rep[c] - offsets[len];
            for a in 0..rank {
                let child_word = offsets[len + 1] + idx + a * rank.pow(len as u32);
                children[c * rank + a] = class_of[child_word];
            }
        }

        // down-set bitsets restricted to the low region
        let low_classes = level_starts[low_height as usize + 1] as usize;
        let mut low_index = vec![u32::MAX; classes];
        for c in 0..low_classes {
            low_index[c] = c as u32;
        }
        let mut down_low = vec![Bits::new(low_classes); classes];
        for c in 0..classes {
            if c < low_classes {
                down_low[c].set(c);
            }
            if class_height[c] as usize == h {
                continue;
            }
            for a in 0..rank {
                let child = children[c * rank + a] as usize;
                let from = down_low[c].clone();
                down_low[child].or_assign(&from);
            }
        }

        WordOracle {
            rank,
            max_height,
            low_height,
            offsets,
            class_of,
            rep,
            class_height,
            level_starts,
            low_index,
            down_low,
        }
    }

    // the two test targets sharing this module use different subsets
    #[allow(dead_code)]
    pub fn max_height(&self) -> u32 {
        self.max_height
    }

    #[allow(dead_code)]
    pub fn low_height(&self) -> u32 {
        self.low_height
    }

    #[allow(dead_code)]
    pub fn class_count(&self) -> usize {
        self.rep.len()
    }

    #[allow(dead_code)]
    pub fn classes_at(&self, height: u32) -> usize {
        let h = height as usize;
        (self.level_starts[h + 1] - self.level_starts[h]) as usize
    }

    pub fn classes_up_to(&self, height: u32) -> std::ops::Range<u32> {
        0..self.level_starts[height as usize + 1]
    }

    #[allow(dead_code)]
    pub fn height(&self, c: u32) -> u32 {
        self.class_height[c as usize]
    }

    pub fn rep_word(&self, c: u32) -> Vec<u8> {
        let len = self.class_height[c as usize] as usize;
        let mut idx = self.rep[c as usize] - self.offsets[len];
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push((idx % self.rank) as u8);
            idx /= self.rank;
        }
        out
    }

    pub fn class_of_word(&self, word: &[u8]) -> Option<u32> {
        let len = word.len();
        if len > self.max_height as usize {
            return None;
        }
        let mut idx = 0usize;
        for (p, &a) in word.iter().enumerate() {
            assert!((a as usize) < self.rank);
            idx += (a as usize) * self.rank.pow(p as u32);
        }
        Some(self.class_of[self.offsets[len] + idx])
    }

    /// Concatenation product; None when the result passes the cutoff.
    pub fn multiply(&self, a: u32, b: u32) -> Option<u32> {
        let mut word = self.rep_word(a);
        word.extend(self.rep_word(b));
        self.class_of_word(&word)
    }

    /// Is low class `a` a left divisor of `c`?
    pub fn leq(&self, a: u32, c: u32) -> bool {
        let la = self.low_index[a as usize];
        assert_ne!(la, u32::MAX, "left argument must be in the low region");
        self.down_low[c as usize].get(la as usize)
    }

    /// Greatest common left divisor of two low classes: the unique maximal
    /// element of the intersection of their divisor sets.
    pub fn gcd(&self, a: u32, b: u32) -> u32 {
        let common: Vec<u32> = self
            .classes_up_to(self.low_height)
            .filter(|&d| self.leq(d, a) && self.leq(d, b))
            .collect();
        let maximal: Vec<u32> = common
            .iter()
            .copied()
            .filter(|&d| !common.iter().any(|&e| e != d && self.leq(d, e)))
            .collect();
        assert_eq!(
            maximal.len(),
            1,
            "common divisors must have a unique maximal element"
        );
        maximal[0]
    }

    /// Least common right multiple of two low classes within the cutoff:
    /// the unique class of minimal height dividing above both, or None when
    /// no common upper bound exists up to max_height. When Some, minimality
    /// forces it to be the true join.
    pub fn join_bounded(&self, a: u32, b: u32) -> Option<u32> {
        for h in 0..=self.max_height {
            let range = self.level_starts[h as usize]..self.level_starts[h as usize + 1];
            let hits: Vec<u32> = range.filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
            if !hits.is_empty() {
                assert_eq!(hits.len(), 1, "two minimal upper bounds at height {h}");
                return Some(hits[0]);
            }
        }
        None
    }
}
