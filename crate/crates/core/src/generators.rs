//! Deterministically labeled graph families and seeded random builders.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::construction::ConstructionTree;
use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::MAX_ORDER;

/// A named family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n-1}` on `n` vertices.
    Star(usize),
    /// `W_n`: a cycle on `n-1` vertices plus a hub.
    Wheel(usize),
    Empty(usize),
    /// `P_{8+2k} ∨ (7+2k) K_1`.
    Sgap(usize),
}

pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Path(n) => path(n),
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => complete(n),
        FamilySpec::CompleteBipartite(p, q) => complete_bipartite(p, q),
        FamilySpec::Star(n) => star(n),
        FamilySpec::Wheel(n) => wheel(n),
        FamilySpec::Empty(n) => empty(n),
        FamilySpec::Sgap(k) => sgap(k),
    }
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

/// `P_n` with edges `i -- i+1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Ok(Graph::empty(n)?.complement())
}

/// `K_{p,q}` with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GraphError> {
    empty(p)?.join(&empty(q)?)
}

/// `K_{1,n-1}` with the center last.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidFamily(format!(
            "star needs n >= 2, got {n}"
        )));
    }
    complete_bipartite(n - 1, 1)
}

/// `W_n`: cycle on `0..n-1` plus hub `n-1`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidFamily(format!(
            "wheel needs n >= 4, got {n}"
        )));
    }
    cycle(n - 1)?.join(&empty(1)?)
}

/// The S-gap graph: path `A = 0..8+2k` in path order, independent set
/// `B = 8+2k..15+4k`, every `A`-`B` pair adjacent.
pub fn sgap(k: usize) -> Result<Graph, GraphError> {
    if 15 + 4 * k > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(15 + 4 * k));
    }
    path(8 + 2 * k)?.join(&empty(7 + 2 * k)?)
}

/// Triangle `0,1,2` with pendant `3` on vertex `2`.
pub fn paw() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).expect("static graph")
}

/// `K_4` minus the edge `0 -- 3`.
pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("static graph")
}

/// Random threshold construction tree: each step adds a fresh leaf by union
/// or join, on a random side.
pub fn random_threshold_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ConstructionTree {
    assert!(n >= 1);
    let mut t = ConstructionTree::leaf(0);
    for label in 1..n {
        let leaf = ConstructionTree::leaf(label);
        let (a, b) = if rng.gen_bool(0.5) {
            (t, leaf)
        } else {
            (leaf, t)
        };
        t = if rng.gen_bool(0.5) {
            ConstructionTree::union(a, b)
        } else {
            ConstructionTree::join(a, b)
        };
    }
    t
}

/// Random cograph construction tree with `n` leaves.
pub fn random_cograph_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ConstructionTree {
    fn build<R: Rng + ?Sized>(labels: &[usize], rng: &mut R) -> ConstructionTree {
        if labels.len() == 1 {
            return ConstructionTree::leaf(labels[0]);
        }
        let cut = rng.gen_range(1..labels.len());
        let (a, b) = (build(&labels[..cut], rng), build(&labels[cut..], rng));
        if rng.gen_bool(0.5) {
            ConstructionTree::union(a, b)
        } else {
            ConstructionTree::join(a, b)
        }
    }
    assert!(n >= 1);
    let labels: Vec<usize> = (0..n).collect();
    build(&labels, rng)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Splits `total` into at least two parts, each at least `min_part`.
fn random_composition<R: Rng + ?Sized>(total: usize, min_part: usize, rng: &mut R) -> Vec<usize> {
    assert!(total >= 2 * min_part);
    loop {
        let mut parts = Vec::new();
        let mut left = total;
        while left > 0 {
            if left < 2 * min_part || (parts.len() >= 2 && rng.gen_bool(0.3)) {
                parts.push(left);
                break;
            }
            let take = rng.gen_range(min_part..=left - min_part);
            parts.push(take);
            left -= take;
        }
        if parts.len() >= 2 && parts.iter().all(|&p| p >= min_part) {
            return parts;
        }
    }
}

fn shuffled<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// Random PSD fast join of the given order (`>= 4`): the complement is a
/// disjoint union of at least two `K_{p,q}` with `p, q >= 1`. Vertices are
/// shuffled.
pub fn random_psd_fast_join<R: Rng + ?Sized>(
    order: usize,
    rng: &mut R,
) -> Result<Graph, GraphError> {
    if order < 4 {
        return Err(GraphError::InvalidFamily(format!(
            "PSD fast join needs order >= 4, got {order}"
        )));
    }
    let mut complement = Graph::empty(0)?;
    for size in random_composition(order, 2, rng) {
        let p = rng.gen_range(1..size);
        complement = complement.disjoint_union(&complete_bipartite(p, size - p)?)?;
    }
    Ok(shuffled(&complement.complement(), rng))
}

/// Random standard fast join of the given order (`>= 4`): the complement is
/// a disjoint union of at least two components, each `K_s` (`s >= 2`) or
/// `K_{p,q}` (`p, q >= 2`). Vertices are shuffled.
pub fn random_standard_fast_join<R: Rng + ?Sized>(
    order: usize,
    rng: &mut R,
) -> Result<Graph, GraphError> {
    if order < 4 {
        return Err(GraphError::InvalidFamily(format!(
            "standard fast join needs order >= 4, got {order}"
        )));
    }
    let mut complement = Graph::empty(0)?;
    for size in random_composition(order, 2, rng) {
        let part = if size >= 4 && rng.gen_bool(0.5) {
            let p = rng.gen_range(2..=size - 2);
            complete_bipartite(p, size - p)?
        } else {
            complete(size)?
        };
        complement = complement.disjoint_union(&part)?;
    }
    Ok(shuffled(&complement.complement(), rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sgap_counts() {
        let g = sgap(0).unwrap();
        assert_eq!(g.order(), 15);
        // 7 path edges + 8 * 7 join edges
        assert_eq!(g.edge_count(), 63);
        for k in 0..4 {
            let g = sgap(k).unwrap();
            assert_eq!(g.order(), 15 + 4 * k);
            for b in 8 + 2 * k..15 + 4 * k {
                assert_eq!(g.degree(b), 8 + 2 * k);
            }
        }
        assert!(sgap(13).is_err());
    }

    #[test]
    fn small_families() {
        assert_eq!(wheel(5).unwrap().degrees(), vec![3, 3, 3, 3, 4]);
        let s = star(5).unwrap();
        assert_eq!(s.degrees(), vec![1, 1, 1, 1, 4]);
        assert_eq!(
            generate(FamilySpec::Star(5)).unwrap(),
            complete_bipartite(4, 1).unwrap()
        );
        assert!(matches!(cycle(2), Err(GraphError::InvalidFamily(_))));
        assert_eq!(path(0).unwrap().order(), 0);
        assert_eq!(paw().degrees(), vec![2, 2, 3, 1]);
        assert_eq!(diamond().edge_count(), 5);
    }

    #[test]
    fn random_builders_respect_orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for order in 4..=12 {
            assert_eq!(
                random_psd_fast_join(order, &mut rng).unwrap().order(),
                order
            );
            assert_eq!(
                random_standard_fast_join(order, &mut rng).unwrap().order(),
                order
            );
            let t = random_threshold_tree(order, &mut rng);
            assert!(t.is_threshold_tree());
            assert_eq!(t.leaf_count(), order);
            assert_eq!(random_cograph_tree(order, &mut rng).leaf_count(), order);
        }
        assert!(random_psd_fast_join(3, &mut rng).is_err());
    }
}
