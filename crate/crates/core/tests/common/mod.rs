#![allow(dead_code)]

use forcing_lab::{from_graph6, Graph};

pub const ALL_LE7: &str = include_str!("../data/graphs_le7.g6");
pub const CONNECTED_LE7: &str = include_str!("../data/connected_le7.g6");

pub fn load(text: &str) -> Vec<Graph> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| from_graph6(l).unwrap_or_else(|e| panic!("corpus line {l:?}: {e}")))
        .collect()
}

pub fn all_le7() -> Vec<Graph> {
    load(ALL_LE7)
}

pub fn connected_le7() -> Vec<Graph> {
    load(CONNECTED_LE7)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Brute-force isomorphism; fine up to order 7 or so.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| a.permuted(p).edges() == b.edges())
}
