//! Rigidity of the positive cone, checked on atoms.
//!
//! (1) for every ordered atom pair x != y there is exactly one atom z with
//!     x z below the join of x and y;
//! (2) for every atom x there is at most one atom z such that x z stays
//!     outside the join of x with every atom y.
//!
//! The dual check runs the mirrored conditions for right divisibility,
//! reached through the word-reversal anti-automorphism which fixes atoms.

use crate::garside::Garside;

#[derive(Debug, Clone)]
pub struct RigidityReport {
    pub dual: bool,
    /// (i, j, count) where the successor count at (sigma_i, sigma_j) is not 1
    pub unique_successor_failures: Vec<(usize, usize, usize)>,
    /// (i, count) where more than one atom escapes every join at sigma_i
    pub escape_failures: Vec<(usize, usize)>,
}

impl RigidityReport {
    pub fn pass(&self) -> bool {
        self.unique_successor_failures.is_empty() && self.escape_failures.is_empty()
    }
}

pub fn check_rigidity(engine: &Garside, dual: bool) -> RigidityReport {
    let n = engine.rank();
    let atoms: Vec<_> = (0..n).map(|i| engine.atom(i)).collect();
    let below = |a: &_, b: &_| {
        if dual {
            engine.right_divides(a, b)
        } else {
            engine.divides(a, b)
        }
    };
    let join = |a: &_, b: &_| {
        if dual {
            engine.right_join(a, b)
        } else {
            engine.join(a, b)
        }
    };
    let step = |x: &_, z: &_| {
        if dual {
            engine.multiply(z, x)
        } else {
            engine.multiply(x, z)
        }
    };

    let mut unique_successor_failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let bound = join(&atoms[i], &atoms[j]);
            let count = (0..n)
                .filter(|&k| below(&step(&atoms[i], &atoms[k]), &bound))
                .count();
            if count != 1 {
                unique_successor_failures.push((i, j, count));
            }
        }
    }

    let mut escape_failures = Vec::new();
    for i in 0..n {
        let count = (0..n)
            .filter(|&k| {
                let xz = step(&atoms[i], &atoms[k]);
                (0..n).all(|j| !below(&xz, &join(&atoms[i], &atoms[j])))
            })
            .count();
        if count > 1 {
            escape_failures.push((i, count));
        }
    }

    RigidityReport {
        dual,
        unique_successor_failures,
        escape_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterMatrix, GroupTable};

    #[test]
    fn spherical_types_are_rigid_both_ways() {
        for (family, n) in [('A', 3), ('B', 3), ('I', 7)] {
            let t = GroupTable::enumerate(&CoxeterMatrix::of_type(family, n).unwrap(), 1_000_000)
                .unwrap();
            let g = Garside::new(&t);
            for dual in [false, true] {
                let report = check_rigidity(&g, dual);
                assert!(report.pass(), "{family}_{n} dual={dual}: {report:?}");
            }
        }
    }

    #[test]
    fn rank_one_is_vacuously_rigid() {
        let t = GroupTable::enumerate(&CoxeterMatrix::of_type('A', 1).unwrap(), 100).unwrap();
        let g = Garside::new(&t);
        let report = check_rigidity(&g, false);
        assert!(report.pass());
        assert!(report.unique_successor_failures.is_empty());
    }

    #[test]
    fn successor_atom_is_the_other_generator_in_rank_two() {
        // in I_m the unique z with sigma_1 z <= sigma_1 v sigma_2 is sigma_2
        let t = GroupTable::enumerate(&CoxeterMatrix::of_type('I', 6).unwrap(), 100).unwrap();
        let g = Garside::new(&t);
        let bound = g.join(&g.atom(0), &g.atom(1));
        assert!(g.divides(&g.multiply(&g.atom(0), &g.atom(1)), &bound));
        assert!(!g.divides(&g.multiply(&g.atom(0), &g.atom(0)), &bound));
    }
}
