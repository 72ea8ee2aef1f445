//! Standard and PSD forts, and the fort-hitting characterization of forcing
//! sets.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::SearchError;
use crate::forcing::Rule;
use crate::graph::Graph;
use crate::limits::Cap;
use crate::vertex_set::{subsets_of_size, VertexSet};

/// Nonempty `f` such that no outside vertex has exactly one neighbor in `f`.
pub fn is_standard_fort(g: &Graph, f: VertexSet) -> bool {
    let f = f.intersection(g.vertices());
    !f.is_empty()
        && g.vertices()
            .difference(f)
            .iter()
            .all(|v| g.neighbors(v).intersection(f).len() != 1)
}

/// Nonempty `f` such that no outside vertex has exactly one neighbor in any
/// single component of `G[f]`.
pub fn is_psd_fort(g: &Graph, f: VertexSet) -> bool {
    let f = f.intersection(g.vertices());
    if f.is_empty() {
        return false;
    }
    let outside = g.vertices().difference(f);
    g.components_of(f).into_iter().all(|comp| {
        outside
            .iter()
            .all(|v| g.neighbors(v).intersection(comp).len() != 1)
    })
}

pub fn is_fort(g: &Graph, f: VertexSet, rule: Rule) -> bool {
    match rule {
        Rule::Standard => is_standard_fort(g, f),
        Rule::Psd => is_psd_fort(g, f),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FortFamily {
    pub rule: Rule,
    /// Sorted by cardinality, then lexicographically.
    pub forts: Vec<VertexSet>,
    pub minimal_only: bool,
}

impl FortFamily {
    /// True iff `b` meets every member.
    pub fn is_hit_by(&self, b: VertexSet) -> bool {
        self.forts.iter().all(|f| f.intersects(b))
    }

    pub fn len(&self) -> usize {
        self.forts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forts.is_empty()
    }
}

pub fn enumerate_forts(
    g: &Graph,
    rule: Rule,
    minimal_only: bool,
    cap: Cap,
) -> Result<FortFamily, SearchError> {
    cap.check(g.order())?;
    let mut forts: Vec<VertexSet> = (1u64..1u64 << g.order())
        .into_par_iter()
        .map(VertexSet::from_bits)
        .filter(|&f| is_fort(g, f, rule))
        .collect();
    forts.sort_by(VertexSet::enumeration_cmp);
    if minimal_only {
        let mut kept: Vec<VertexSet> = Vec::new();
        for f in forts {
            if !kept.iter().any(|m| m.is_subset(f)) {
                kept.push(f);
            }
        }
        forts = kept;
    }
    Ok(FortFamily {
        rule,
        forts,
        minimal_only,
    })
}

/// True iff `b` meets every minimal fort of the rule; equivalent to `b`
/// being a forcing set.
pub fn hits_all_forts(g: &Graph, b: VertexSet, rule: Rule, cap: Cap) -> Result<bool, SearchError> {
    Ok(enumerate_forts(g, rule, true, cap)?.is_hit_by(b))
}

/// A smallest set meeting every minimal fort (first in enumeration order).
/// Its size is the forcing number, computed without any propagation.
pub fn min_fort_transversal(g: &Graph, rule: Rule, cap: Cap) -> Result<VertexSet, SearchError> {
    let family = enumerate_forts(g, rule, true, cap)?;
    let n = g.order();
    for k in 0..=n {
        if let Some(b) = subsets_of_size(n, k)
            .filter(|&b| family.is_hit_by(b))
            .min_by(VertexSet::enumeration_cmp)
        {
            return Ok(b);
        }
    }
    unreachable!("the full vertex set meets every fort")
}
