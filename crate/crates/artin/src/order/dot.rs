//! DOT rendering of a poset ball's Hasse diagram.

use super::ball::PosetBall;
use crate::garside::Garside;
use std::fmt::Write;

/// Deterministic DOT digraph: nodes in ball order labeled by normal form,
/// edges labeled by the atom of the cover step.
pub fn export_dot(engine: &Garside, ball: &PosetBall) -> String {
    let mut out = String::new();
    out.push_str("digraph ball {\n");
    out.push_str("  rankdir=BT;\n");
    for i in 0..ball.len() as u32 {
        let label = engine.render_m(ball.node(i)).replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    for &(u, a, v) in ball.edges() {
        writeln!(out, "  n{u} -> n{v} [label=\"s{}\"];", a + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterMatrix, GroupTable};
    use crate::order::ball::interval;
    use crate::ExecMode;

    #[test]
    fn tiny_ball_renders_fully() {
        let t = GroupTable::enumerate(&CoxeterMatrix::of_type('A', 2).unwrap(), 100).unwrap();
        let g = Garside::new(&t);
        let ball = PosetBall::build(&g, 1, ExecMode::default()).unwrap();
        let dot = export_dot(&g, &ball);
        assert_eq!(dot.matches("[label=\"").count(), 3 + 2);
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert!(dot.contains("n0 [label=\"e\"]"));
        assert!(dot.contains("n0 -> n1 [label=\"s1\"]"));
        // deterministic
        assert_eq!(dot, export_dot(&g, &ball));
    }

    #[test]
    fn node_lines_match_ball_size() {
        let t = GroupTable::enumerate(&CoxeterMatrix::of_type('B', 3).unwrap(), 1000).unwrap();
        let g = Garside::new(&t);
        let ball = PosetBall::build(&g, 3, ExecMode::default()).unwrap();
        let dot = export_dot(&g, &ball);
        let node_lines = dot.lines().filter(|l| l.contains("[label=\"[") || l.contains("[label=\"e\"")).count();
        assert_eq!(node_lines, ball.len());
    }

    #[test]
    fn square_interval_is_two_chains() {
        // [e, Delta] in I_4: two disjoint atom chains sharing only endpoints
        let t = GroupTable::enumerate(&CoxeterMatrix::of_type('I', 4).unwrap(), 100).unwrap();
        let g = Garside::new(&t);
        let ball = PosetBall::build(&g, 4, ExecMode::default()).unwrap();
        let iv = interval(&g, &crate::garside::MonoidElement::identity(), &g.delta()).unwrap();
        assert_eq!(iv.len(), 8);
        let ids: Vec<u32> = iv.iter().map(|m| ball.index_of(m).unwrap()).collect();
        let within = |x: u32| ids.contains(&x);
        for &id in &ids {
            let m = ball.node(id);
            let h = g.height(m);
            let down = ball.in_neighbors(id).iter().filter(|&&x| within(x)).count();
            let up = ball.out_neighbors(id).iter().filter(|&&x| within(x)).count();
            match h {
                0 => assert_eq!((down, up), (0, 2)),
                4 => assert_eq!((down, up), (2, 0)),
                _ => assert_eq!((down, up), (1, 1), "interior nodes form two chains"),
            }
        }
    }
}
