//! Construction trees: rooted binary trees of disjoint unions and joins
//! over single-vertex leaves.

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionTree {
    Leaf(usize),
    Union(Box<ConstructionTree>, Box<ConstructionTree>),
    Join(Box<ConstructionTree>, Box<ConstructionTree>),
}

impl ConstructionTree {
    pub fn leaf(label: usize) -> Self {
        ConstructionTree::Leaf(label)
    }

    pub fn union(a: ConstructionTree, b: ConstructionTree) -> Self {
        ConstructionTree::Union(Box::new(a), Box::new(b))
    }

    pub fn join(a: ConstructionTree, b: ConstructionTree) -> Self {
        ConstructionTree::Join(Box::new(a), Box::new(b))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, ConstructionTree::Leaf(_))
    }

    fn children(&self) -> Option<(&ConstructionTree, &ConstructionTree)> {
        match self {
            ConstructionTree::Leaf(_) => None,
            ConstructionTree::Union(a, b) | ConstructionTree::Join(a, b) => Some((a, b)),
        }
    }

    /// Leaf labels in left-to-right order. Leaf `i` of this list becomes
    /// vertex `i` of [`ConstructionTree::to_graph`].
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            ConstructionTree::Leaf(l) => out.push(*l),
            ConstructionTree::Union(a, b) | ConstructionTree::Join(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self.children() {
            None => 1,
            Some((a, b)) => a.leaf_count() + b.leaf_count(),
        }
    }

    /// Every internal node has at least one leaf child.
    pub fn is_threshold_tree(&self) -> bool {
        match self.children() {
            None => true,
            Some((a, b)) => {
                (a.is_leaf() || b.is_leaf()) && a.is_threshold_tree() && b.is_threshold_tree()
            }
        }
    }

    /// Operation symbols bottom-up along the spine of a threshold tree
    /// (`'u'` for union, `'j'` for join). Empty for a leaf.
    pub fn spine_ops(&self) -> Vec<char> {
        let mut ops = Vec::new();
        let mut node = self;
        while let Some((a, b)) = node.children() {
            ops.push(if matches!(node, ConstructionTree::Union(..)) {
                'u'
            } else {
                'j'
            });
            node = if a.is_leaf() { b } else { a };
            if a.is_leaf() && b.is_leaf() {
                break;
            }
        }
        ops.reverse();
        ops
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        match self {
            ConstructionTree::Leaf(_) => Graph::empty(1),
            ConstructionTree::Union(a, b) => a.to_graph()?.disjoint_union(&b.to_graph()?),
            ConstructionTree::Join(a, b) => a.to_graph()?.join(&b.to_graph()?),
        }
    }
}

/// Graph built by evaluating the tree; leaf order fixes the labeling.
pub fn from_construction_tree(t: &ConstructionTree) -> Result<Graph, GraphError> {
    t.to_graph()
}
