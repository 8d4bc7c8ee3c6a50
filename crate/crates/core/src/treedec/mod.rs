//! Tree decompositions: validation, exact treewidth at small scale,
//! bounded-width construction, and conversion to nice form.

mod elimination;
mod nice;

pub(crate) use elimination::treewidth_at_most;
pub use elimination::{
    decomposition_from_order, elimination_width, exact_treewidth, min_fill_order, optimal_elimination_order,
    EXACT_LIMIT,
};
pub use nice::{make_nice, NiceKind, NiceNode, NiceTreeDecomposition};

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{domain, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// `(T, χ)` with an optional root `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    root: Option<usize>,
}

/// No decomposition of the requested width was found.
///
/// `certified` is true when the verdict came from exhaustive search and is
/// therefore a proof; otherwise it only records a heuristic failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotBounded {
    pub certified: bool,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { bags, edges, root: None }
    }

    /// A single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition::new(vec![g.vertex_set()], Vec::new())
    }

    pub fn with_root(mut self, root: usize) -> Self {
        self.root = Some(root);
        self
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Max bag size minus one.
    pub fn width(&self) -> Result<usize> {
        self.bags
            .iter()
            .map(BTreeSet::len)
            .max()
            .map(|m| m.saturating_sub(1))
            .ok_or_else(|| domain("empty decomposition has no width"))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    fn is_tree(&self) -> bool {
        let n = self.bags.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        if self.edges.iter().any(|&(a, b)| a >= n || b >= n || a == b) {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    }

    /// Checks the three axioms against `g`: every vertex and every edge is in
    /// some bag, and the bags holding any vertex form a subtree.
    pub fn validate(&self, g: &Graph) -> bool {
        if !self.is_tree() || self.root.is_some_and(|r| r >= self.bags.len()) {
            return false;
        }
        let mut occurrences: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if !g.contains(v) {
                    return false;
                }
                occurrences.entry(v).or_default().push(i);
            }
        }
        if g.vertices().any(|v| !occurrences.contains_key(&v)) {
            return false;
        }
        let edge_covered = |u: Vertex, v: Vertex| occurrences[&u].iter().any(|&i| self.bags[i].contains(&v));
        if !g.edges().all(|(u, v)| edge_covered(u, v)) {
            return false;
        }
        let adj = self.adjacency();
        occurrences.values().all(|nodes| {
            let inside: BTreeSet<usize> = nodes.iter().copied().collect();
            let mut seen = BTreeSet::from([nodes[0]]);
            let mut queue = VecDeque::from([nodes[0]]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if inside.contains(&y) && seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            seen.len() == inside.len()
        })
    }

    /// Valid for `g` and rooted at a node whose bag is exactly `boundary`.
    pub fn validate_rooted(&self, g: &Graph, boundary: &VertexSet) -> bool {
        self.validate(g) && self.root.is_some_and(|r| &self.bags[r] == boundary)
    }

    /// Adds `extra` to every bag and attaches a new root whose bag is `extra`.
    ///
    /// Turns a decomposition of `G[Y]` into one of `G[N[Y]]` rooted at
    /// `N(Y)`.
    pub fn lift_with_root(&self, extra: &VertexSet) -> TreeDecomposition {
        let mut bags: Vec<VertexSet> = self.bags.iter().map(|b| b.union(extra).copied().collect()).collect();
        let mut edges = self.edges.clone();
        let root = bags.len();
        bags.push(extra.clone());
        if root > 0 {
            edges.push((root, self.root.unwrap_or(0)));
        }
        TreeDecomposition { bags, edges, root: Some(root) }
    }

    /// Joins decompositions of vertex-disjoint graphs into one tree by chaining them.
    pub fn disjoint_union(parts: Vec<TreeDecomposition>) -> TreeDecomposition {
        let mut bags = Vec::new();
        let mut edges = Vec::new();
        let mut prev_anchor: Option<usize> = None;
        for part in parts {
            let offset = bags.len();
            bags.extend(part.bags);
            edges.extend(part.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
            if let Some(p) = prev_anchor {
                edges.push((p, offset));
            }
            prev_anchor = Some(offset);
        }
        if bags.is_empty() {
            bags.push(VertexSet::new());
        }
        TreeDecomposition { bags, edges, root: None }
    }

    /// Indented text dump, one bag per line, rooted at `root` (or node 0).
    pub fn render(&self, name: impl Fn(Vertex) -> String) -> String {
        let adj = self.adjacency();
        let start = self.root.unwrap_or(0);
        let mut out = String::new();
        let mut stack = vec![(start, usize::MAX, 0usize)];
        while let Some((x, parent, depth)) = stack.pop() {
            let items: Vec<String> = self.bags[x].iter().map(|&v| name(v)).collect();
            out.push_str(&format!("{}[{}]\n", "  ".repeat(depth), items.join(" ")));
            for &y in adj[x].iter().rev() {
                if y != parent {
                    stack.push((y, x, depth + 1));
                }
            }
        }
        out
    }
}

/// Decomposition of width at most `t`, or [`NotBounded`].
///
/// Works per connected component: components with at most [`EXACT_LIMIT`]
/// vertices are solved exactly, larger ones by min-fill elimination. A
/// verdict is certified only if every failing component was solved exactly.
pub fn decompose_bounded(g: &Graph, t: usize) -> std::result::Result<TreeDecomposition, NotBounded> {
    let mut parts = Vec::new();
    for comp in g.connected_components() {
        let h = g.induced_unchecked(&comp);
        let order = if comp.len() <= EXACT_LIMIT {
            match elimination::bounded_elimination_order(&h, t) {
                Some(order) => order,
                None => return Err(NotBounded { certified: true }),
            }
        } else {
            let order = min_fill_order(&h);
            if elimination_width(&h, &order) > t {
                return Err(NotBounded { certified: false });
            }
            order
        };
        parts.push(decomposition_from_order(&h, &order));
    }
    Ok(TreeDecomposition::disjoint_union(parts))
}

/// Valid decomposition from the min-fill heuristic, no width promise.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    let parts = g
        .connected_components()
        .into_iter()
        .map(|comp| {
            let h = g.induced_unchecked(&comp);
            let order = min_fill_order(&h);
            decomposition_from_order(&h, &order)
        })
        .collect();
    TreeDecomposition::disjoint_union(parts)
}

/// Heuristic decomposition of `g` whose root bag is `boundary`.
///
/// Decomposes `g - boundary` and adds `boundary` to every bag, so the width
/// may exceed the optimum by `|boundary|`.
pub fn rooted_decomposition(g: &Graph, boundary: &VertexSet) -> TreeDecomposition {
    heuristic_decomposition(&g.without(boundary)).lift_with_root(boundary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn validate_examples() {
        let p3 = path(3);
        assert!(TreeDecomposition::trivial(&p3).validate(&p3));
        let d = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2])], vec![(0, 1)]);
        assert!(d.validate(&p3));
        assert_eq!(d.width().unwrap(), 1);
        // edges a-b and a-c: bag {b,c} leaves a-c uncovered
        let other = Graph::from_edges(3, &[(0, 1), (0, 2)]);
        assert!(!d.validate(&other));
    }

    #[test]
    fn validate_rejects_broken_trees() {
        let p3 = path(3);
        let cyclic = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2]), set(&[1])], vec![(0, 1), (1, 2), (2, 0)]);
        assert!(!cyclic.validate(&p3));
        let split = TreeDecomposition::new(vec![set(&[0, 1]), set(&[2]), set(&[1, 2])], vec![(0, 1), (1, 2)]);
        assert!(!split.validate(&p3));
    }

    #[test]
    fn width_examples() {
        let d = TreeDecomposition::new(vec![set(&[0, 1, 2, 3])], vec![]);
        assert_eq!(d.width().unwrap(), 3);
        let d = TreeDecomposition::new(vec![set(&[0])], vec![]);
        assert_eq!(d.width().unwrap(), 0);
        assert!(TreeDecomposition::new(vec![], vec![]).width().is_err());
    }

    #[test]
    fn bounded_examples() {
        let p5 = path(5);
        let d = decompose_bounded(&p5, 1).unwrap();
        assert!(d.validate(&p5));
        assert!(d.width().unwrap() <= 1);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(decompose_bounded(&k4, 2), Err(NotBounded { certified: true }));
        let empty = Graph::new();
        assert!(decompose_bounded(&empty, 0).unwrap().validate(&empty));
    }

    #[test]
    fn lift_with_root_is_rooted() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let inner = g.induced_subgraph(&set(&[1, 3])).unwrap();
        let d = decompose_bounded(&inner, 0).unwrap();
        let lifted = d.lift_with_root(&set(&[0, 2]));
        assert!(lifted.validate_rooted(&g, &set(&[0, 2])));
    }
}
