#![allow(dead_code)]

pub mod oracle;

use statesurf::state::StateGraph;

/// Name and PD text of every bundled fixture, in corpus order.
pub const FIXTURES: &[(&str, &str)] = &[
    ("unknot", "O"),
    ("kink_pos", "X(1,2,2,1)"),
    ("kink_neg", "X(2,2,1,1)"),
    ("unlink_2", "O O"),
    ("hopf", "X(3,1,4,2) X(1,3,2,4)"),
    ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
    ("trefoil_mirror", "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)"),
    ("figure_eight", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"),
    ("torus_2_2", "X(4,2,3,1) X(1,3,2,4)"),
    ("torus_2_3", "X(3,6,4,1) X(1,4,2,5) X(5,2,6,3)"),
    ("torus_2_4", "X(8,4,5,1) X(1,5,2,6) X(6,2,7,3) X(3,7,4,8)"),
    ("torus_2_5", "X(5,10,6,1) X(1,6,2,7) X(7,2,8,3) X(3,8,4,9) X(9,4,10,5)"),
    ("torus_2_6", "X(12,6,7,1) X(1,7,2,8) X(8,2,9,3) X(3,9,4,10) X(10,4,11,5) X(5,11,6,12)"),
    ("torus_2_7", "X(7,14,8,1) X(1,8,2,9) X(9,2,10,3) X(3,10,4,11) X(11,4,12,5) X(5,12,6,13) X(13,6,14,7)"),
    ("granny", "X(12,3,1,4) X(10,1,11,2) X(2,11,3,12) X(7,4,8,5) X(9,6,10,7) X(5,8,6,9)"),
    ("square", "X(12,3,1,4) X(10,1,11,2) X(2,11,3,12) X(4,8,5,7) X(6,10,7,9) X(8,6,9,5)"),
    ("knot_5_1", "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)"),
    ("knot_5_2", "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)"),
    ("knot_6_1", "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)"),
    ("knot_6_2", "X(1,4,2,5) X(5,10,6,11) X(3,9,4,8) X(9,3,10,2) X(7,12,8,1) X(11,6,12,7)"),
    ("knot_6_3", "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)"),
    ("pretzel_m2_3_7", "X(24,14,1,13) X(12,2,13,1) X(23,5,24,4) X(3,23,4,22) X(21,3,22,2) X(5,15,6,14) X(15,7,16,6) X(7,17,8,16) X(17,9,18,8) X(9,19,10,18) X(19,11,20,10) X(11,21,12,20)"),
];

/// Structure-preserving map between the circles of two state graphs on the
/// same crossings, with edge `i` of one matching edge `i` of the other.
pub fn isomorphic_by_crossing(g: &StateGraph, h: &StateGraph) -> bool {
    if g.vertex_count != h.vertex_count || g.edges.len() != h.edges.len() {
        return false;
    }
    // Try to extend a vertex bijection edge by edge; both orientations of
    // each edge are tried by backtracking.
    fn extend(g: &StateGraph, h: &StateGraph, i: usize, map: &mut Vec<Option<usize>>) -> bool {
        if i == g.edges.len() {
            return true;
        }
        let (u, v) = g.edges[i].ends;
        let (x, y) = h.edges[i].ends;
        for (a, b) in [(x, y), (y, x)] {
            let saved = map.clone();
            let ok = [(u, a), (v, b)].iter().all(|&(p, q)| match map[p] {
                Some(m) => m == q,
                None if map.contains(&Some(q)) => false,
                None => {
                    map[p] = Some(q);
                    true
                }
            });
            if ok && extend(g, h, i + 1, map) {
                return true;
            }
            *map = saved;
        }
        false
    }
    let mut map = vec![None; g.vertex_count];
    extend(g, h, 0, &mut map)
}
