//! Color change rules and simultaneous-round propagation.
//!
//! Round `i+1` forces every white vertex that some blue vertex can force
//! under the rule, given the closure after round `i` as the blue set.

use serde::Serialize;

use crate::error::ForcingError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// A blue vertex with a unique white neighbor forces it.
    Standard,
    /// A blue vertex forces `w` when `w` is its only neighbor inside some
    /// component of the white subgraph.
    Psd,
}

impl Rule {
    pub const ALL: [Rule; 2] = [Rule::Standard, Rule::Psd];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Standard => "standard",
            Rule::Psd => "psd",
        }
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

/// Full trace of one propagation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationRecord {
    /// `rounds[i]` is the set forced in round `i + 1`.
    pub rounds: Vec<VertexSet>,
    /// `closures[0]` is the initial set; `closures[i+1] = closures[i] ∪ rounds[i]`.
    pub closures: Vec<VertexSet>,
    /// One witness force per forced vertex, per round, sorted by forced vertex.
    pub forces: Vec<Vec<Force>>,
    /// Number of rounds when the closure is all of `V`, `None` otherwise.
    pub time: Option<u32>,
}

impl PropagationRecord {
    pub fn final_closure(&self) -> VertexSet {
        *self.closures.last().expect("closures is never empty")
    }

    pub fn is_forcing(&self) -> bool {
        self.time.is_some()
    }
}

/// The full simultaneous round: every white vertex forceable from `blue`.
pub fn step(g: &Graph, blue: VertexSet, rule: Rule) -> VertexSet {
    let white = g.vertices().difference(blue);
    if white.is_empty() {
        return VertexSet::EMPTY;
    }
    let mut out = VertexSet::EMPTY;
    match rule {
        Rule::Standard => {
            for u in blue {
                if let Some(w) = g.neighbors(u).intersection(white).only() {
                    out.insert(w);
                }
            }
        }
        Rule::Psd => {
            for comp in g.components_of(white) {
                for u in blue {
                    if let Some(w) = g.neighbors(u).intersection(comp).only() {
                        out.insert(w);
                    }
                }
            }
        }
    }
    out
}

/// Witness forces for one round: for each forced vertex, the lowest-index
/// blue vertex that can force it.
pub fn step_forces(g: &Graph, blue: VertexSet, rule: Rule) -> Vec<Force> {
    let white = g.vertices().difference(blue);
    let mut forcer_of: Vec<Option<usize>> = vec![None; g.order()];
    let mut record = |u: usize, w: usize| {
        if forcer_of[w].is_none() {
            forcer_of[w] = Some(u);
        }
    };
    match rule {
        Rule::Standard => {
            for u in blue {
                if let Some(w) = g.neighbors(u).intersection(white).only() {
                    record(u, w);
                }
            }
        }
        Rule::Psd => {
            let comps = g.components_of(white);
            for u in blue {
                for &comp in &comps {
                    if let Some(w) = g.neighbors(u).intersection(comp).only() {
                        record(u, w);
                    }
                }
            }
        }
    }
    forcer_of
        .iter()
        .enumerate()
        .filter_map(|(w, f)| {
            f.map(|u| Force {
                forcer: u,
                forced: w,
            })
        })
        .collect()
}

pub fn propagate(g: &Graph, b: VertexSet, rule: Rule) -> PropagationRecord {
    let b = b.intersection(g.vertices());
    let mut closures = vec![b];
    let mut rounds = Vec::new();
    let mut forces = Vec::new();
    let mut blue = b;
    loop {
        let round = step_forces(g, blue, rule);
        if round.is_empty() {
            break;
        }
        let forced: VertexSet = round.iter().map(|f| f.forced).collect();
        blue = blue.union(forced);
        rounds.push(forced);
        closures.push(blue);
        forces.push(round);
    }
    let time = (blue == g.vertices()).then_some(rounds.len() as u32);
    PropagationRecord {
        rounds,
        closures,
        forces,
        time,
    }
}

/// Closure of `b` under repeated rounds, and the number of nonempty rounds.
pub fn closure(g: &Graph, b: VertexSet, rule: Rule) -> (VertexSet, u32) {
    let mut blue = b.intersection(g.vertices());
    let mut rounds = 0;
    loop {
        let next = step(g, blue, rule);
        if next.is_empty() {
            return (blue, rounds);
        }
        blue = blue.union(next);
        rounds += 1;
    }
}

/// `pt(G, B)` / `pt_+(G, B)`; `None` when `b` does not force.
pub fn propagation_time(g: &Graph, b: VertexSet, rule: Rule) -> Option<u32> {
    let (blue, rounds) = closure(g, b, rule);
    (blue == g.vertices()).then_some(rounds)
}

pub fn is_forcing_set(g: &Graph, b: VertexSet, rule: Rule) -> bool {
    closure(g, b, rule).0 == g.vertices()
}

/// Replaces each round-one PSD forcer in `b` by the vertex it forces.
///
/// Requires `b` to be a PSD forcing set with `G - b` connected and positive
/// propagation time. With a connected white subgraph each blue vertex forces
/// at most once in round one; when several blue vertices can force the same
/// vertex the lowest-index one is credited.
pub fn psd_reduce_set(g: &Graph, b: VertexSet) -> Result<VertexSet, ForcingError> {
    let b = b.intersection(g.vertices());
    let time = propagation_time(g, b, Rule::Psd).ok_or(ForcingError::NotForcing)?;
    if !g.is_connected_within(g.vertices().difference(b)) {
        return Err(ForcingError::DisconnectedRemainder);
    }
    if time == 0 {
        return Err(ForcingError::NothingToReduce);
    }
    let mut reduced = b;
    for f in step_forces(g, b, Rule::Psd) {
        reduced.remove(f.forcer);
        reduced.insert(f.forced);
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, sgap, wheel};

    #[test]
    fn p3_rounds() {
        let p3 = path(3).unwrap();
        assert_eq!(
            step(&p3, VertexSet::from([0]), Rule::Standard),
            VertexSet::from([1])
        );
        assert_eq!(
            step(&p3, VertexSet::from([1]), Rule::Standard),
            VertexSet::EMPTY
        );
        assert_eq!(
            step(&p3, VertexSet::from([1]), Rule::Psd),
            VertexSet::from([0, 2])
        );
    }

    #[test]
    fn sgap_path_colors_all_of_b_at_once() {
        let g = sgap(0).unwrap();
        let a = VertexSet::full(8);
        let b_part = g.vertices().difference(a);
        assert_eq!(step(&g, a, Rule::Psd), b_part);
        assert_eq!(propagation_time(&g, a, Rule::Psd), Some(1));
    }

    #[test]
    fn path_and_wheel_times() {
        assert_eq!(
            propagation_time(&path(5).unwrap(), VertexSet::from([0]), Rule::Standard),
            Some(4)
        );
        assert_eq!(
            propagation_time(&path(6).unwrap(), VertexSet::from([2, 3]), Rule::Standard),
            Some(2)
        );
        // 1-based labels 1..5 shifted to 0..4; hub is 4
        let w5 = wheel(5).unwrap();
        assert_eq!(
            propagation_time(&w5, VertexSet::from([0, 1, 4]), Rule::Standard),
            Some(1)
        );
        assert_eq!(
            propagation_time(&w5, VertexSet::from([0, 1, 2]), Rule::Standard),
            Some(2)
        );
    }

    #[test]
    fn sgap_one_swap_sets_take_two_rounds() {
        let g = sgap(0).unwrap();
        for i in 0..8 {
            for j in 8..15 {
                let x = VertexSet::full(8).without(i).with(j);
                assert_eq!(propagation_time(&g, x, Rule::Psd), Some(2), "a{i} b{j}");
            }
        }
    }

    #[test]
    fn forcing_set_basics() {
        let c5 = cycle(5).unwrap();
        assert!(is_forcing_set(&c5, VertexSet::from([0, 1]), Rule::Standard));
        assert!(!is_forcing_set(
            &c5,
            VertexSet::from([0, 2]),
            Rule::Standard
        ));
        for rule in Rule::ALL {
            assert!(is_forcing_set(&c5, c5.vertices(), rule));
            let rec = propagate(&c5, c5.vertices(), rule);
            assert_eq!(rec.time, Some(0));
            assert!(rec.rounds.is_empty());
            let rec = propagate(&c5, VertexSet::EMPTY, rule);
            assert_eq!(rec.time, None);
        }
    }

    #[test]
    fn record_is_consistent() {
        let g = sgap(0).unwrap();
        let b = g.vertices().difference(VertexSet::full(8)).with(0);
        let rec = propagate(&g, b, Rule::Psd);
        assert_eq!(rec.time, Some(7));
        for (i, round) in rec.rounds.iter().enumerate() {
            assert!(!round.is_empty());
            assert_eq!(rec.closures[i + 1], rec.closures[i].union(*round));
            let forced: VertexSet = rec.forces[i].iter().map(|f| f.forced).collect();
            assert_eq!(forced, *round);
        }
    }

    #[test]
    fn reduce_slides_path_endpoint() {
        let p5 = path(5).unwrap();
        let b2 = psd_reduce_set(&p5, VertexSet::from([0])).unwrap();
        assert_eq!(b2, VertexSet::from([1]));
        assert_eq!(propagation_time(&p5, b2, Rule::Psd), Some(3));
    }

    #[test]
    fn reduce_on_sgap_b_part_plus_a1() {
        let g = sgap(0).unwrap();
        let b = g.vertices().difference(VertexSet::full(8)).with(0);
        assert_eq!(propagation_time(&g, b, Rule::Psd), Some(7));
        let b2 = psd_reduce_set(&g, b).unwrap();
        assert_eq!(b2.len(), 8);
        assert_eq!(propagation_time(&g, b2, Rule::Psd), Some(6));
        // a_1 (vertex 0) forces a_2 (vertex 1), every b_j stays
        assert_eq!(b2, g.vertices().difference(VertexSet::full(8)).with(1));
    }

    #[test]
    fn reduce_preconditions() {
        let p3 = path(3).unwrap();
        assert_eq!(
            psd_reduce_set(&p3, VertexSet::EMPTY),
            Err(ForcingError::NotForcing)
        );
        assert_eq!(
            psd_reduce_set(&p3, VertexSet::from([1])),
            Err(ForcingError::DisconnectedRemainder)
        );
        assert_eq!(
            psd_reduce_set(&p3, p3.vertices()),
            Err(ForcingError::NothingToReduce)
        );
    }
}
