use std::collections::BTreeSet;

use super::TreeDecomposition;
use crate::error::{domain, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    /// Leaf with an arbitrary bag; the DP enumerates all its annotations.
    Leaf,
    Introduce {
        child: usize,
        vertex: Vertex,
    },
    Forget {
        child: usize,
        vertex: Vertex,
    },
    Join {
        left: usize,
        right: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    /// Bag vertices sorted by label.
    pub bag: Vec<Vertex>,
    pub kind: NiceKind,
}

/// A rooted decomposition where every node is a leaf, introduce, forget or
/// join node. Nodes are stored children-first; the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn root_bag(&self) -> &[Vertex] {
        &self.nodes[self.root()].bag
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Checks the nice-form shape: children precede parents, join bags equal
    /// their children's, unary nodes differ from their child by exactly the
    /// named vertex.
    pub fn check_shape(&self) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(domain("nice decomposition without nodes"));
        }
        let mut used_as_child = vec![false; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            let bag: BTreeSet<Vertex> = node.bag.iter().copied().collect();
            if bag.len() != node.bag.len() {
                return Err(domain(format!("node {i} repeats a vertex")));
            }
            let mut claim = |c: usize| -> Result<BTreeSet<Vertex>> {
                if c >= i || used_as_child[c] {
                    return Err(domain(format!("node {i} has an invalid child {c}")));
                }
                used_as_child[c] = true;
                Ok(self.nodes[c].bag.iter().copied().collect())
            };
            match node.kind {
                NiceKind::Leaf => {}
                NiceKind::Introduce { child, vertex } => {
                    let mut expect = claim(child)?;
                    if !expect.insert(vertex) || expect != bag {
                        return Err(domain(format!("introduce node {i} is malformed")));
                    }
                }
                NiceKind::Forget { child, vertex } => {
                    let child_bag = claim(child)?;
                    let mut expect = child_bag.clone();
                    if !expect.remove(&vertex) || expect != bag {
                        return Err(domain(format!("forget node {i} is malformed")));
                    }
                }
                NiceKind::Join { left, right } => {
                    if claim(left)? != bag || claim(right)? != bag {
                        return Err(domain(format!("join node {i} has unequal bags")));
                    }
                }
            }
        }
        if used_as_child[..self.nodes.len() - 1].iter().any(|u| !u) {
            return Err(domain("nice decomposition is not a single tree"));
        }
        Ok(())
    }

    /// Plain decomposition view, rooted at the nice root.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.iter().copied().collect()).collect();
        let mut edges = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            match node.kind {
                NiceKind::Leaf => {}
                NiceKind::Introduce { child, .. } | NiceKind::Forget { child, .. } => edges.push((child, i)),
                NiceKind::Join { left, right } => {
                    edges.push((left, i));
                    edges.push((right, i));
                }
            }
        }
        TreeDecomposition::new(bags, edges).with_root(self.root())
    }

    /// Shape check plus validity for `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        self.check_shape().is_ok() && self.to_tree_decomposition().validate(g)
    }
}

struct Builder<'a> {
    g: &'a Graph,
    nodes: Vec<NiceNode>,
}

impl Builder<'_> {
    fn sorted(&self, set: &VertexSet) -> Vec<Vertex> {
        self.g.order_by_label(set)
    }

    fn push(&mut self, bag: &VertexSet, kind: NiceKind) -> usize {
        let bag = self.sorted(bag);
        self.nodes.push(NiceNode { bag, kind });
        self.nodes.len() - 1
    }

    /// Forgets `from \ to` then introduces `to \ from`, one vertex per node.
    fn transition(&mut self, mut at: usize, from: &VertexSet, to: &VertexSet) -> usize {
        let mut bag = from.clone();
        for v in self.sorted(&from.difference(to).copied().collect()) {
            bag.remove(&v);
            at = self.push(&bag, NiceKind::Forget { child: at, vertex: v });
        }
        for v in self.sorted(&to.difference(from).copied().collect()) {
            bag.insert(v);
            at = self.push(&bag, NiceKind::Introduce { child: at, vertex: v });
        }
        at
    }

    /// Converts the subtree of `node`; returns a nice node whose bag is `χ(node)`.
    fn build(&mut self, d: &TreeDecomposition, adj: &[Vec<usize>], node: usize, parent: usize) -> usize {
        let bag = &d.bags()[node];
        let mut tops = Vec::new();
        for &child in &adj[node] {
            if child == parent {
                continue;
            }
            let top = self.build(d, adj, child, node);
            tops.push(self.transition(top, &d.bags()[child], bag));
        }
        let mut iter = tops.into_iter();
        let Some(mut acc) = iter.next() else {
            return self.push(bag, NiceKind::Leaf);
        };
        for next in iter {
            acc = self.push(bag, NiceKind::Join { left: acc, right: next });
        }
        acc
    }
}

/// Nice form of `d` whose root bag is exactly `root_bag`.
///
/// The root is attached next to the node sharing the most vertices with
/// `root_bag`; that node's bag must contain `root_bag`, so the width never
/// grows.
pub fn make_nice(d: &TreeDecomposition, g: &Graph, root_bag: &VertexSet) -> Result<NiceTreeDecomposition> {
    if !d.validate(g) {
        return Err(domain("decomposition is not valid for the graph"));
    }
    if let Some(v) = root_bag.iter().find(|v| !g.contains(**v)) {
        return Err(domain(format!("root bag vertex {v} is not in the graph")));
    }
    let anchor = (0..d.len())
        .max_by_key(|&i| (d.bags()[i].intersection(root_bag).count(), std::cmp::Reverse(i)))
        .expect("validated decomposition has a bag");
    if !root_bag.is_subset(&d.bags()[anchor]) {
        return Err(domain("no bag contains the requested root bag"));
    }
    let adj = d.adjacency();
    let mut builder = Builder { g, nodes: Vec::new() };
    let top = builder.build(d, &adj, anchor, usize::MAX);
    builder.transition(top, &d.bags()[anchor], root_bag);
    Ok(NiceTreeDecomposition { nodes: builder.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::decompose_bounded;

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn single_bag_forget_chain() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let nice = make_nice(&TreeDecomposition::trivial(&g), &g, &set(&[0, 1])).unwrap();
        assert!(nice.validate(&g));
        assert_eq!(nice.nodes().len(), 2);
        assert!(matches!(nice.nodes()[1].kind, NiceKind::Forget { vertex: 2, .. }));
        assert_eq!(nice.root_bag(), &[0, 1]);
    }

    #[test]
    fn path_rooted_in_middle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let d = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2])], vec![(0, 1)]);
        let nice = make_nice(&d, &g, &set(&[1])).unwrap();
        assert!(nice.validate(&g));
        assert_eq!(nice.width(), 1);
        assert_eq!(nice.root_bag(), &[1]);
    }

    #[test]
    fn renicing_is_valid() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]);
        let d = decompose_bounded(&g, 1).unwrap();
        let nice = make_nice(&d, &g, &set(&[])).unwrap();
        assert!(nice.validate(&g));
        let again = make_nice(&nice.to_tree_decomposition(), &g, &set(&[])).unwrap();
        assert!(again.validate(&g));
        assert_eq!(again.width(), nice.width());
    }

    #[test]
    fn root_must_fit_in_a_bag() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let d = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2])], vec![(0, 1)]);
        assert!(make_nice(&d, &g, &set(&[0, 2])).is_err());
        assert!(make_nice(&d, &g, &set(&[9])).is_err());
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new();
        let nice = make_nice(&TreeDecomposition::trivial(&g), &g, &set(&[])).unwrap();
        assert!(nice.validate(&g));
        assert_eq!(nice.nodes().len(), 1);
    }
}
