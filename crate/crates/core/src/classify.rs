//! Structural recognizers: fast joins, threshold graphs, forbidden induced
//! patterns, twins and the `Z >= n - 2` complement form.
//!
//! Fast-join recognition looks only at the shape of the complement's
//! components and never runs a propagation, so it can be checked against the
//! exhaustive search independently.

use serde::Serialize;

use crate::construction::ConstructionTree;
use crate::error::SearchError;
use crate::forcing::Rule;
use crate::generators::{diamond, paw};
use crate::graph::Graph;
use crate::limits::Cap;
use crate::search::Analysis;
use crate::vertex_set::VertexSet;

/// Shape of one connected component. `K_1` and `K_2` are reported as
/// complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ComponentShape {
    Complete {
        size: usize,
    },
    /// `left` holds the component's lowest vertex.
    CompleteBipartite {
        left: VertexSet,
        right: VertexSet,
    },
    Other,
}

impl ComponentShape {
    /// `(p, q)` with `p <= q` for a complete bipartite shape (`K_2` counts
    /// as `K_{1,1}`).
    pub fn bipartite_sides(&self) -> Option<(usize, usize)> {
        match self {
            ComponentShape::Complete { size: 2 } => Some((1, 1)),
            ComponentShape::CompleteBipartite { left, right } => {
                let (a, b) = (left.len(), right.len());
                Some((a.min(b), a.max(b)))
            }
            _ => None,
        }
    }
}

/// Shape of `G[comp]`; `comp` is assumed to induce a connected subgraph.
pub fn component_shape(g: &Graph, comp: VertexSet) -> ComponentShape {
    let k = comp.len();
    if comp
        .iter()
        .all(|v| g.neighbors(v).intersection(comp).len() == k - 1)
    {
        return ComponentShape::Complete { size: k };
    }
    let Some(seed) = comp.first() else {
        return ComponentShape::Other;
    };
    // in K_{p,q} the side of `seed` is the neighborhood of any neighbor of it
    let Some(other) = g.neighbors(seed).intersection(comp).first() else {
        return ComponentShape::Other;
    };
    let left = g.neighbors(other).intersection(comp);
    let right = comp.difference(left);
    let ok = left
        .iter()
        .all(|v| g.neighbors(v).intersection(comp) == right)
        && right
            .iter()
            .all(|v| g.neighbors(v).intersection(comp) == left);
    if ok && !left.is_empty() && !right.is_empty() {
        ComponentShape::CompleteBipartite { left, right }
    } else {
        ComponentShape::Other
    }
}

/// Shape of every component, in component order.
pub fn classify_component_shape(g: &Graph) -> Vec<(VertexSet, ComponentShape)> {
    g.components()
        .into_iter()
        .map(|c| (c, component_shape(g, c)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementComponent {
    pub vertices: VertexSet,
    #[serde(flatten)]
    pub shape: ComponentShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FastJoinVerdict {
    pub psd_fast: bool,
    pub standard_fast: bool,
    /// Components of the complement with their shapes.
    pub complement_components: Vec<ComplementComponent>,
    /// Why the PSD form fails, when it does.
    pub psd_reason: Option<String>,
    /// Why the standard form fails, when it does.
    pub standard_reason: Option<String>,
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() * 2 == g.order() * g.order().saturating_sub(1)
}

pub fn fast_join_verdict(g: &Graph) -> Result<FastJoinVerdict, SearchError> {
    if g.order() < 2 {
        return Err(SearchError::OrderTooSmall(g.order()));
    }
    let comp = g.complement();
    let complement_components: Vec<ComplementComponent> = classify_component_shape(&comp)
        .into_iter()
        .map(|(vertices, shape)| ComplementComponent { vertices, shape })
        .collect();

    if is_complete(g) {
        return Ok(FastJoinVerdict {
            psd_fast: true,
            standard_fast: true,
            complement_components,
            psd_reason: None,
            standard_reason: None,
        });
    }
    let few = (complement_components.len() < 2)
        .then(|| "complement has fewer than 2 components and G is not complete".to_string());

    let psd_reason = few.clone().or_else(|| {
        complement_components
            .iter()
            .find(|c| c.shape.bipartite_sides().is_none())
            .map(|c| {
                format!(
                    "complement component {} is not complete bipartite",
                    c.vertices
                )
            })
    });
    let standard_reason = few.or_else(|| {
        complement_components
            .iter()
            .find(|c| match &c.shape {
                ComponentShape::Complete { size } => *size < 2,
                ComponentShape::CompleteBipartite { left, right } => {
                    left.len() < 2 || right.len() < 2
                }
                ComponentShape::Other => true,
            })
            .map(|c| {
                format!(
                    "complement component {} is neither K_s (s >= 2) nor K_{{p,q}} (p, q >= 2)",
                    c.vertices
                )
            })
    });
    Ok(FastJoinVerdict {
        psd_fast: psd_reason.is_none(),
        standard_fast: standard_reason.is_none(),
        complement_components,
        psd_reason,
        standard_reason,
    })
}

pub fn is_psd_fast_join(g: &Graph) -> Result<FastJoinVerdict, SearchError> {
    fast_join_verdict(g)
}

pub fn is_standard_fast_join(g: &Graph) -> Result<FastJoinVerdict, SearchError> {
    fast_join_verdict(g)
}

/// Construction tree of a threshold graph, found by repeatedly peeling the
/// lowest vertex that is isolated or universal in what remains. `None` if
/// the peel gets stuck (or the graph is empty). Leaf labels are the
/// original vertices.
pub fn threshold_tree(g: &Graph) -> Option<ConstructionTree> {
    let mut rest = g.vertices();
    let mut peeled = Vec::new();
    while rest.len() > 1 {
        let (v, universal) = rest.iter().find_map(|v| {
            let nbrs = g.neighbors(v).intersection(rest);
            if nbrs.is_empty() {
                Some((v, false))
            } else if nbrs == rest.without(v) {
                Some((v, true))
            } else {
                None
            }
        })?;
        peeled.push((v, universal));
        rest.remove(v);
    }
    let mut tree = ConstructionTree::leaf(rest.first()?);
    for (v, universal) in peeled.into_iter().rev() {
        let leaf = ConstructionTree::leaf(v);
        tree = if universal {
            ConstructionTree::join(tree, leaf)
        } else {
            ConstructionTree::union(tree, leaf)
        };
    }
    Some(tree)
}

/// The empty graph counts as threshold.
pub fn is_threshold(g: &Graph) -> bool {
    g.order() == 0 || threshold_tree(g).is_some()
}

/// Order-4 patterns for induced-subgraph scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// `0-1-2-3`.
    P4,
    /// Path `0-1-2` plus isolated `3`.
    P3PlusK1,
    /// Edge `0-1` plus isolated `2`, `3`.
    K2PlusTwoK1,
    /// See [`crate::generators::paw`].
    Paw,
    /// See [`crate::generators::diamond`].
    Diamond,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::P4,
        Pattern::P3PlusK1,
        Pattern::K2PlusTwoK1,
        Pattern::Paw,
        Pattern::Diamond,
    ];

    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::P3PlusK1 => &[(0, 1), (1, 2)],
            Pattern::K2PlusTwoK1 => &[(0, 1)],
            Pattern::Paw => return paw(),
            Pattern::Diamond => return diamond(),
        };
        Graph::from_edges(4, edges.iter().copied()).expect("static pattern")
    }
}

fn matches_at(g: &Graph, pattern: &Graph, tuple: &[usize; 4]) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(tuple[i], tuple[j]) == pattern.has_edge(i, j)))
}

/// First ordered 4-tuple (lexicographic) inducing any of `patterns`, with
/// pattern vertex `i` mapped to `tuple[i]`.
pub fn forbidden_subgraph_scan(g: &Graph, patterns: &[Pattern]) -> Option<(Pattern, [usize; 4])> {
    scan_within(g, g.vertices(), patterns)
}

fn scan_within(
    g: &Graph,
    within: VertexSet,
    patterns: &[Pattern],
) -> Option<(Pattern, [usize; 4])> {
    let graphs: Vec<(Pattern, Graph)> = patterns.iter().map(|&p| (p, p.graph())).collect();
    let vs = within.to_vec();
    for &a in &vs {
        for &b in &vs {
            if b == a {
                continue;
            }
            for &c in &vs {
                if c == a || c == b {
                    continue;
                }
                for &d in &vs {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    let t = [a, b, c, d];
                    if let Some((p, _)) = graphs.iter().find(|(_, pg)| matches_at(g, pg, &t)) {
                        return Some((*p, t));
                    }
                }
            }
        }
    }
    None
}

/// For a join `G = G[side] ∨ G[rest]` where `G[side]` contains an induced
/// `P4`, `P3 ∪ K1` or `K2 ∪ 2K1`, the slow set `V ∖ {p, y, z}` built from
/// the first such pattern; `p` is the lowest vertex outside `side`.
pub fn join_slow_set(g: &Graph, side: VertexSet) -> Option<VertexSet> {
    let p = g.vertices().difference(side).first()?;
    let (pattern, t) = scan_within(
        g,
        side,
        &[Pattern::P4, Pattern::P3PlusK1, Pattern::K2PlusTwoK1],
    )?;
    let (y, z) = match pattern {
        // P4 (w,x,y,z) and P3 (w,x,y) + z
        Pattern::P4 | Pattern::P3PlusK1 => (t[2], t[3]),
        // K2 = (x,y), others (w,z)
        _ => (t[1], t[3]),
    };
    Some(g.vertices().without(p).without(y).without(z))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwinKind {
    /// Adjacent with `N[u] = N[v]`.
    Closed,
    /// Nonadjacent with `N(u) = N(v)`.
    Independent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Twin {
    pub u: usize,
    pub v: usize,
    pub kind: TwinKind,
}

/// All twin pairs `u < v`, in lexicographic order.
pub fn twins(g: &Graph) -> Vec<Twin> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                if g.closed_neighbors(u) == g.closed_neighbors(v) {
                    out.push(Twin {
                        u,
                        v,
                        kind: TwinKind::Closed,
                    });
                }
            } else if g.neighbors(u) == g.neighbors(v) {
                out.push(Twin {
                    u,
                    v,
                    kind: TwinKind::Independent,
                });
            }
        }
    }
    out
}

pub fn universal_vertices(g: &Graph) -> VertexSet {
    (0..g.order())
        .filter(|&v| g.degree(v) + 1 == g.order())
        .collect()
}

pub fn leaves(g: &Graph) -> VertexSet {
    (0..g.order()).filter(|&v| g.degree(v) == 1).collect()
}

/// `α(G)` by exhaustive branching.
pub fn independence_number(g: &Graph, cap: Cap) -> Result<usize, SearchError> {
    fn best(g: &Graph, cand: VertexSet) -> usize {
        let Some(v) = cand.first() else { return 0 };
        let without = best(g, cand.without(v));
        if g.neighbors(v).intersects(cand) {
            without.max(1 + best(g, cand.difference(g.closed_neighbors(v))))
        } else {
            // an isolated candidate is always worth taking
            1 + best(g, cand.without(v))
        }
    }
    cap.check(g.order())?;
    Ok(best(g, g.vertices()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominatedPair {
    pub u: usize,
    pub v: usize,
    /// `V ∖ {u, v}`, which takes exactly two rounds under either rule.
    pub slow_set: VertexSet,
}

/// First adjacent pair `(u, v)` (lexicographic) with `N[u] ⊊ N[v]`.
pub fn dominated_pair_slow_witness(g: &Graph) -> Option<DominatedPair> {
    let n = g.order();
    for u in 0..n {
        for v in g.neighbors(u) {
            let (nu, nv) = (g.closed_neighbors(u), g.closed_neighbors(v));
            if nu != nv && nu.is_subset(nv) {
                return Some(DominatedPair {
                    u,
                    v,
                    slow_set: g.vertices().without(u).without(v),
                });
            }
        }
    }
    None
}

/// True iff the complement is `(∪ K_s ∪ ∪ K_{p,q}) ∨ K_r`: after removing
/// the complement's universal vertices, every remaining component of the
/// complement is complete or complete bipartite.
pub fn z_at_least_n_minus_2_form(g: &Graph) -> bool {
    let comp = g.complement();
    let core = comp.vertices().difference(universal_vertices(&comp));
    comp.components_of(core)
        .into_iter()
        .all(|c| component_shape(&comp, c) != ComponentShape::Other)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    /// Largest propagation time of a minimal standard forcing set.
    pub upper_pt: u32,
    /// Largest propagation time of a minimal PSD forcing set.
    pub upper_pt_psd: u32,
    pub standard_fast: bool,
    pub psd_fast: bool,
    /// `upper_pt = 1` but not a standard fast join.
    pub standard_counterexample: bool,
    /// `upper_pt_psd = 1` but not a PSD fast join.
    pub psd_counterexample: bool,
}

impl ConjectureVerdict {
    pub fn is_consistent(&self) -> bool {
        !self.standard_counterexample && !self.psd_counterexample
    }
}

/// Cross-checks the upper propagation times against the fast-join forms.
pub fn conjecture_check(g: &Graph, cap: Cap) -> Result<ConjectureVerdict, SearchError> {
    conjecture_check_rules(g, cap, &Rule::ALL)
}

/// As [`conjecture_check`], computing only the listed rules (the others
/// report time 0 and no counterexample).
pub fn conjecture_check_rules(
    g: &Graph,
    cap: Cap,
    rules: &[Rule],
) -> Result<ConjectureVerdict, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    cap.check(g.order())?;
    let upper = |rule: Rule| -> Result<u32, SearchError> {
        if !rules.contains(&rule) {
            return Ok(0);
        }
        Ok(Analysis::new(g, rule, cap)?.ept_set().max().unwrap_or(0))
    };
    let upper_pt = upper(Rule::Standard)?;
    let upper_pt_psd = upper(Rule::Psd)?;
    let (standard_fast, psd_fast) = if g.order() >= 2 {
        let v = fast_join_verdict(g)?;
        (v.standard_fast, v.psd_fast)
    } else {
        (false, false)
    };
    Ok(ConjectureVerdict {
        upper_pt,
        upper_pt_psd,
        standard_fast,
        psd_fast,
        standard_counterexample: upper_pt == 1 && !standard_fast,
        psd_counterexample: upper_pt_psd == 1 && !psd_fast,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::propagation_time;
    use crate::generators::{complete, complete_bipartite, cycle, empty, path, sgap, star};

    fn union(a: &Graph, b: &Graph) -> Graph {
        a.disjoint_union(b).unwrap()
    }

    #[test]
    fn fast_join_examples() {
        let g = union(&complete(2).unwrap(), &complete(3).unwrap())
            .join(&union(&complete(1).unwrap(), &complete(4).unwrap()))
            .unwrap();
        assert!(fast_join_verdict(&g).unwrap().psd_fast);

        let g = empty(4)
            .unwrap()
            .join(&union(&complete(2).unwrap(), &complete(2).unwrap()))
            .unwrap();
        assert!(fast_join_verdict(&g).unwrap().standard_fast);

        let v = fast_join_verdict(&star(4).unwrap()).unwrap();
        assert!(!v.psd_fast && !v.standard_fast);
        assert!(v.psd_reason.is_some());

        let v = fast_join_verdict(&complete(5).unwrap()).unwrap();
        assert!(v.psd_fast && v.standard_fast);
        assert_eq!(
            fast_join_verdict(&Graph::empty(1).unwrap()),
            Err(SearchError::OrderTooSmall(1))
        );
    }

    #[test]
    fn k2_complement_components() {
        // complement 2K_2 -> G = C_4 = K_{2,2}
        let c4 = cycle(4).unwrap();
        let v = fast_join_verdict(&c4).unwrap();
        assert!(v.psd_fast);
        assert!(v.standard_fast);
        // complement K_{1,2} ∪ K_2: PSD yes, standard no (star side of size 1)
        let comp = union(&complete_bipartite(1, 2).unwrap(), &complete(2).unwrap());
        let v = fast_join_verdict(&comp.complement()).unwrap();
        assert!(v.psd_fast);
        assert!(!v.standard_fast);
    }

    #[test]
    fn shapes() {
        assert_eq!(
            component_shape(&complete(5).unwrap(), VertexSet::full(5)),
            ComponentShape::Complete { size: 5 }
        );
        let k23 = complete_bipartite(2, 3).unwrap();
        let s = component_shape(&k23, k23.vertices());
        assert_eq!(
            s,
            ComponentShape::CompleteBipartite {
                left: VertexSet::from([0, 1]),
                right: VertexSet::from([2, 3, 4])
            }
        );
        assert_eq!(s.bipartite_sides(), Some((2, 3)));
        assert_eq!(
            component_shape(&path(4).unwrap(), VertexSet::full(4)),
            ComponentShape::Other
        );
        assert_eq!(
            component_shape(&cycle(5).unwrap(), VertexSet::full(5)),
            ComponentShape::Other
        );
        let shapes = classify_component_shape(&union(&complete(1).unwrap(), &path(3).unwrap()));
        assert_eq!(shapes[0].1, ComponentShape::Complete { size: 1 });
        assert_eq!(shapes[1].1.bipartite_sides(), Some((1, 2)));
    }

    #[test]
    fn threshold_recognition() {
        assert!(!is_threshold(&path(4).unwrap()));
        assert!(!is_threshold(&cycle(4).unwrap()));
        assert!(is_threshold(&star(5).unwrap()));
        assert!(is_threshold(&complete(4).unwrap()));
        assert!(is_threshold(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn pattern_scans() {
        let (p, t) = forbidden_subgraph_scan(&cycle(5).unwrap(), &[Pattern::P4]).unwrap();
        assert_eq!(p, Pattern::P4);
        assert_eq!(t, [0, 1, 2, 3]);
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(
            forbidden_subgraph_scan(&k33, &[Pattern::P4, Pattern::Paw, Pattern::Diamond]),
            None
        );
        assert_eq!(
            forbidden_subgraph_scan(&paw(), &[Pattern::Paw]),
            Some((Pattern::Paw, [0, 1, 2, 3]))
        );
        assert_eq!(
            forbidden_subgraph_scan(&diamond(), &[Pattern::Diamond]),
            Some((Pattern::Diamond, [0, 1, 2, 3]))
        );
    }

    #[test]
    fn twin_lists() {
        let k4 = complete(4).unwrap();
        let t = twins(&k4);
        assert_eq!(t.len(), 6);
        assert!(t.iter().all(|t| t.kind == TwinKind::Closed));
        assert_eq!(independence_number(&k4, Cap::default()).unwrap(), 1);

        let k23 = complete_bipartite(2, 3).unwrap();
        let t = twins(&k23);
        assert_eq!(t.len(), 1 + 3);
        assert!(t.iter().all(|t| t.kind == TwinKind::Independent));
        assert_eq!(independence_number(&k23, Cap::default()).unwrap(), 3);

        let g = sgap(0).unwrap();
        let b_pairs = twins(&g).into_iter().filter(|t| t.u >= 8).count();
        assert_eq!(b_pairs, 21);
        assert_eq!(
            independence_number(&cycle(7).unwrap(), Cap::default()).unwrap(),
            3
        );
        assert_eq!(universal_vertices(&star(5).unwrap()), VertexSet::from([4]));
        assert_eq!(leaves(&star(5).unwrap()), VertexSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn dominated_pairs() {
        let w = dominated_pair_slow_witness(&paw()).unwrap();
        assert_eq!((w.u, w.v), (0, 2));
        for rule in Rule::ALL {
            assert_eq!(propagation_time(&paw(), w.slow_set, rule), Some(2));
        }
        assert_eq!(dominated_pair_slow_witness(&cycle(5).unwrap()), None);
        let w = dominated_pair_slow_witness(&star(5).unwrap()).unwrap();
        assert_eq!((w.u, w.v), (0, 4));
        assert_eq!(
            propagation_time(&star(5).unwrap(), w.slow_set, Rule::Standard),
            Some(2)
        );
    }

    #[test]
    fn complement_form() {
        // complement(sgap0) = complement(P8) ∪ K7; complement(P8) is neither shape
        assert!(!z_at_least_n_minus_2_form(&sgap(0).unwrap()));
        let g = union(&complete(2).unwrap(), &complete(3).unwrap())
            .join(&union(&complete(1).unwrap(), &complete(4).unwrap()))
            .unwrap();
        assert!(z_at_least_n_minus_2_form(&g));
        assert!(!z_at_least_n_minus_2_form(&cycle(6).unwrap()));
    }

    #[test]
    fn conjecture_small_cases() {
        let v = conjecture_check(&complete(5).unwrap(), Cap::default()).unwrap();
        assert!(v.is_consistent());
        assert_eq!((v.upper_pt, v.upper_pt_psd), (1, 1));
        assert_eq!(
            conjecture_check(&empty(3).unwrap(), Cap::default()),
            Err(SearchError::Disconnected)
        );
    }
}
