//! Exhaustive forcing-set search.
//!
//! Every routine here scans all `2^n` subsets once, storing each subset's
//! propagation time in a byte table. Forcing is monotone under supersets, so
//! a forcing set is minimal exactly when no single deletion still forces,
//! which the table answers in `O(|B|)` lookups.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::SearchError;
use crate::forcing::{propagation_time, Rule};
use crate::graph::Graph;
use crate::limits::Cap;
use crate::vertex_set::VertexSet;

const NOT_FORCING: u8 = u8::MAX;

/// Propagation time of every subset of `V(G)` under one rule.
pub struct SubsetTable {
    n: usize,
    rule: Rule,
    times: Vec<u8>,
}

impl SubsetTable {
    pub fn build(g: &Graph, rule: Rule, cap: Cap) -> Result<Self, SearchError> {
        cap.check(g.order())?;
        let n = g.order();
        let times = (0..1u64 << n)
            .into_par_iter()
            .map(
                |bits| match propagation_time(g, VertexSet::from_bits(bits), rule) {
                    Some(t) => t as u8,
                    None => NOT_FORCING,
                },
            )
            .collect();
        Ok(SubsetTable { n, rule, times })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    #[inline]
    pub fn time(&self, s: VertexSet) -> Option<u32> {
        match self.times[s.bits() as usize] {
            NOT_FORCING => None,
            t => Some(t as u32),
        }
    }

    #[inline]
    pub fn is_forcing(&self, s: VertexSet) -> bool {
        self.times[s.bits() as usize] != NOT_FORCING
    }

    #[inline]
    pub fn is_minimal(&self, s: VertexSet) -> bool {
        self.is_forcing(s) && s.iter().all(|v| !self.is_forcing(s.without(v)))
    }

    /// All subsets with their times, in numeric order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, Option<u32>)> + '_ {
        (0..self.times.len() as u64).map(|bits| {
            let s = VertexSet::from_bits(bits);
            (s, self.time(s))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Minimum,
    Minimal,
}

/// Complete list of minimum or minimal forcing sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    pub rule: Rule,
    pub kind: FamilyKind,
    /// Sorted by cardinality, then lexicographically.
    pub sets: Vec<VertexSet>,
}

impl SetFamily {
    /// `Z` (or `Z_+`) for either kind.
    pub fn min_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// `Z̄` (or `Z̄_+`) for the minimal kind.
    pub fn max_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn sizes(&self) -> BTreeSet<usize> {
        self.sets.iter().map(|s| s.len()).collect()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.contains(&s)
    }
}

/// A set of realized propagation times and its gaps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PtSet {
    pub rule: Rule,
    /// Times over minimal (true) or minimum (false) forcing sets.
    pub expanded: bool,
    pub times: BTreeSet<u32>,
    /// Integers strictly between the smallest and largest time that are not
    /// realized.
    pub gaps: Vec<u32>,
}

impl PtSet {
    pub fn new(rule: Rule, expanded: bool, times: BTreeSet<u32>) -> Self {
        let gaps = match (times.first(), times.last()) {
            (Some(&lo), Some(&hi)) => (lo..=hi).filter(|t| !times.contains(t)).collect(),
            _ => Vec::new(),
        };
        PtSet {
            rule,
            expanded,
            times,
            gaps,
        }
    }

    pub fn min(&self) -> Option<u32> {
        self.times.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.times.last().copied()
    }

    /// No gaps between the extremes.
    pub fn is_full(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.times.iter().copied().collect()
    }
}

/// Everything derivable from one subset table.
pub struct Analysis {
    table: SubsetTable,
    minimum: SetFamily,
    minimal: SetFamily,
}

impl Analysis {
    pub fn new(g: &Graph, rule: Rule, cap: Cap) -> Result<Self, SearchError> {
        let table = SubsetTable::build(g, rule, cap)?;
        let mut minimal: Vec<VertexSet> = (0..1u64 << g.order())
            .into_par_iter()
            .map(VertexSet::from_bits)
            .filter(|&s| table.is_minimal(s))
            .collect();
        minimal.sort_by(VertexSet::enumeration_cmp);
        let z = minimal.iter().map(|s| s.len()).min().unwrap_or(0);
        let minimum = minimal.iter().copied().filter(|s| s.len() == z).collect();
        Ok(Analysis {
            table,
            minimum: SetFamily {
                rule,
                kind: FamilyKind::Minimum,
                sets: minimum,
            },
            minimal: SetFamily {
                rule,
                kind: FamilyKind::Minimal,
                sets: minimal,
            },
        })
    }

    pub fn rule(&self) -> Rule {
        self.table.rule
    }

    pub fn table(&self) -> &SubsetTable {
        &self.table
    }

    pub fn minimum(&self) -> &SetFamily {
        &self.minimum
    }

    pub fn minimal(&self) -> &SetFamily {
        &self.minimal
    }

    pub fn forcing_number(&self) -> usize {
        self.minimum.min_size()
    }

    pub fn upper_forcing_number(&self) -> usize {
        self.minimal.max_size()
    }

    fn times_of(&self, fam: &SetFamily) -> BTreeSet<u32> {
        fam.sets
            .iter()
            .map(|&s| self.table.time(s).expect("family members force"))
            .collect()
    }

    /// Times realized by minimum forcing sets.
    pub fn pt_set(&self) -> PtSet {
        PtSet::new(self.rule(), false, self.times_of(&self.minimum))
    }

    /// Times realized by minimal forcing sets.
    pub fn ept_set(&self) -> PtSet {
        PtSet::new(self.rule(), true, self.times_of(&self.minimal))
    }

    pub fn fixed_pt(&self) -> Option<u32> {
        let ept = self.times_of(&self.minimal);
        (ept.len() == 1).then(|| *ept.first().unwrap())
    }

    /// True when no proper subset of `V` forces (edgeless graphs), so the
    /// only realized time is 0.
    pub fn only_full_set_forces(&self) -> bool {
        self.minimal.sets.len() == 1 && self.minimal.sets[0].len() == self.table.n
    }

    /// `min |B| + pt(G, B)` over every forcing set of this rule.
    pub fn throttling(&self) -> usize {
        self.table
            .iter()
            .filter_map(|(s, t)| t.map(|t| s.len() + t as usize))
            .min()
            .expect("V(G) always forces")
    }

    /// For each time realized by a minimal set, the first such set in
    /// enumeration order.
    pub fn witnesses(&self) -> BTreeMap<u32, VertexSet> {
        let mut out = BTreeMap::new();
        for &s in &self.minimal.sets {
            let t = self.table.time(s).expect("minimal sets force");
            out.entry(t).or_insert(s);
        }
        out
    }

    pub fn report(&self, g: &Graph) -> ForcingReport {
        ForcingReport {
            order: g.order(),
            rule: self.rule(),
            forcing_number: self.forcing_number(),
            upper_forcing_number: self.upper_forcing_number(),
            pt_set: self.pt_set(),
            ept_set: self.ept_set(),
            fixed_pt: self.fixed_pt(),
            throttling: (self.rule() == Rule::Standard).then(|| self.throttling()),
            witnesses: self.witnesses(),
            only_full_set_forces: self.only_full_set_forces(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingReport {
    pub order: usize,
    pub rule: Rule,
    pub forcing_number: usize,
    pub upper_forcing_number: usize,
    pub pt_set: PtSet,
    pub ept_set: PtSet,
    pub fixed_pt: Option<u32>,
    /// Standard rule only.
    pub throttling: Option<usize>,
    pub witnesses: BTreeMap<u32, VertexSet>,
    pub only_full_set_forces: bool,
}

pub fn forcing_report(g: &Graph, rule: Rule, cap: Cap) -> Result<ForcingReport, SearchError> {
    Ok(Analysis::new(g, rule, cap)?.report(g))
}

/// `(minimum family, minimal family)`.
pub fn enumerate_forcing_families(
    g: &Graph,
    rule: Rule,
    cap: Cap,
) -> Result<(SetFamily, SetFamily), SearchError> {
    let a = Analysis::new(g, rule, cap)?;
    Ok((a.minimum, a.minimal))
}

/// `(PT, EPT)` for the rule.
pub fn pt_sets(g: &Graph, rule: Rule, cap: Cap) -> Result<(PtSet, PtSet), SearchError> {
    let a = Analysis::new(g, rule, cap)?;
    Ok((a.pt_set(), a.ept_set()))
}

pub fn fixed_pt(g: &Graph, rule: Rule, cap: Cap) -> Result<Option<u32>, SearchError> {
    Ok(Analysis::new(g, rule, cap)?.fixed_pt())
}

/// Standard throttling number `th(G)`.
pub fn throttling(g: &Graph, cap: Cap) -> Result<usize, SearchError> {
    Ok(Analysis::new(g, Rule::Standard, cap)?.throttling())
}

/// First minimum PSD forcing set (enumeration order) whose complement
/// induces a connected subgraph.
pub fn min_psd_set_with_connected_complement(
    g: &Graph,
    cap: Cap,
) -> Result<VertexSet, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let a = Analysis::new(g, Rule::Psd, cap)?;
    let b = a
        .minimum
        .sets
        .iter()
        .copied()
        .find(|&b| g.is_connected_within(g.vertices().difference(b)))
        .ok_or(SearchError::NoConnectedRemainder)?;
    Ok(b)
}

/// True unless the graph has fixed PSD propagation time other than 1.
pub fn verify_no_fixed_psd_above_one(g: &Graph, cap: Cap) -> Result<bool, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    Ok(match Analysis::new(g, Rule::Psd, cap)?.fixed_pt() {
        Some(t) => t <= 1,
        None => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, empty, path, sgap, star, wheel};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn c6_minimal_sets_are_adjacent_pairs() {
        let (min, minimal) =
            enumerate_forcing_families(&cycle(6).unwrap(), Rule::Standard, Cap::default()).unwrap();
        let pairs: Vec<_> = (0..6).map(|i| set(&[i, (i + 1) % 6])).collect();
        let mut expected = pairs.clone();
        expected.sort_by(VertexSet::enumeration_cmp);
        assert_eq!(minimal.sets, expected);
        assert_eq!(min.sets, expected);
        assert_eq!((minimal.min_size(), minimal.max_size()), (2, 2));
    }

    #[test]
    fn sgap0_psd_numbers_and_gap() {
        let a = Analysis::new(&sgap(0).unwrap(), Rule::Psd, Cap::default()).unwrap();
        assert_eq!(a.forcing_number(), 8);
        assert_eq!(a.upper_forcing_number(), 9);
        let (pt, ept) = (a.pt_set(), a.ept_set());
        assert_eq!(pt.to_vec(), vec![1, 2, 4, 5, 6, 7]);
        assert_eq!(ept.to_vec(), vec![1, 2, 4, 5, 6, 7]);
        assert_eq!(ept.gaps, vec![3]);
        assert!(!ept.is_full());
    }

    #[test]
    fn path_and_star_time_sets() {
        // independent enumeration: EPT(P5) = {2, 4}; middle pairs need 2 rounds
        let (pt, ept) = pt_sets(&path(5).unwrap(), Rule::Standard, Cap::default()).unwrap();
        assert_eq!(pt.to_vec(), vec![4]);
        assert_eq!(ept.to_vec(), vec![2, 4]);
        assert_eq!(ept.gaps, vec![3]);

        let (_, ept) = pt_sets(&star(5).unwrap(), Rule::Standard, Cap::default()).unwrap();
        assert_eq!(ept.to_vec(), vec![2]);
    }

    #[test]
    fn fixed_times() {
        assert_eq!(
            fixed_pt(&cycle(7).unwrap(), Rule::Standard, Cap::default()).unwrap(),
            Some(3)
        );
        assert_eq!(
            fixed_pt(&wheel(5).unwrap(), Rule::Standard, Cap::default()).unwrap(),
            None
        );
        assert_eq!(
            fixed_pt(&complete(4).unwrap(), Rule::Psd, Cap::default()).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn throttling_values() {
        assert_eq!(
            throttling(&complete(5).unwrap(), Cap::default()).unwrap(),
            5
        );
        // independent brute force gives th(W5) = 4
        assert_eq!(throttling(&wheel(5).unwrap(), Cap::default()).unwrap(), 4);
    }

    #[test]
    fn connected_remainder_sets() {
        let cap = Cap::default();
        assert_eq!(
            min_psd_set_with_connected_complement(&path(5).unwrap(), cap).unwrap(),
            set(&[0])
        );
        assert_eq!(
            min_psd_set_with_connected_complement(&cycle(5).unwrap(), cap).unwrap(),
            set(&[0, 1])
        );
        let g = sgap(0).unwrap();
        let b = min_psd_set_with_connected_complement(&g, cap).unwrap();
        assert_eq!(b.len(), 8);
        assert!(g.is_connected_within(g.vertices().difference(b)));
        assert_eq!(
            min_psd_set_with_connected_complement(&empty(2).unwrap(), cap),
            Err(SearchError::Disconnected)
        );
    }

    #[test]
    fn no_fixed_psd_above_one_small() {
        let cap = Cap::default();
        assert!(verify_no_fixed_psd_above_one(&complete(4).unwrap(), cap).unwrap());
        // EPT_+(P4) = {2, 3} by brute force, so the claim is vacuous
        let (_, ept) = pt_sets(&path(4).unwrap(), Rule::Psd, cap).unwrap();
        assert_eq!(ept.to_vec(), vec![2, 3]);
        assert!(verify_no_fixed_psd_above_one(&path(4).unwrap(), cap).unwrap());
    }

    #[test]
    fn edgeless_graph_needs_everything() {
        let a = Analysis::new(&empty(3).unwrap(), Rule::Standard, Cap::default()).unwrap();
        assert!(a.only_full_set_forces());
        assert_eq!(a.ept_set().to_vec(), vec![0]);
        assert_eq!(a.forcing_number(), 3);
        let a = Analysis::new(&Graph::empty(1).unwrap(), Rule::Psd, Cap::default()).unwrap();
        assert_eq!(a.fixed_pt(), Some(0));
        assert_eq!(a.witnesses().get(&0), Some(&set(&[0])));
    }

    #[test]
    fn witnesses_realize_their_times() {
        let g = sgap(0).unwrap();
        let a = Analysis::new(&g, Rule::Psd, Cap::default()).unwrap();
        for (t, b) in a.witnesses() {
            assert!(a.minimal().contains(b));
            assert_eq!(propagation_time(&g, b, Rule::Psd), Some(t));
        }
    }
}
