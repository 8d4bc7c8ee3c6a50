use std::collections::{BTreeMap, BTreeSet};

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest vertex count handled by the exact subset search.
pub const EXACT_LIMIT: usize = 14;

/// Internal ceiling for exact search when callers accept the cost.
pub(crate) const EXACT_HARD_LIMIT: usize = 16;

/// Dense view of a small graph: vertices `0..n` by label, adjacency as masks.
struct Dense {
    vertices: Vec<Vertex>,
    adj: Vec<u32>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let vertices: Vec<Vertex> = g.vertices_by_label().collect();
        let pos: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = vertices.iter().map(|v| g.neighbors(*v).iter().fold(0u32, |m, u| m | 1 << pos[u])).collect();
        Dense { vertices, adj }
    }

    /// Size of `Q(S, v)`: vertices outside `S ∪ {v}` reachable from `v`
    /// through `S`.
    fn q_size(&self, s: u32, v: usize) -> usize {
        let mut visited = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut reached = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nbrs = self.adj[x] & !visited;
            visited |= nbrs;
            reached |= nbrs & !s;
            frontier |= nbrs & s;
        }
        reached.count_ones() as usize
    }

    /// `TW(S)` for every subset, with entries above `cap` clamped to `cap + 1`.
    fn subset_table(&self, cap: usize) -> Vec<u8> {
        let n = self.vertices.len();
        let full = 1usize << n;
        let clamp = (cap + 1).min(250) as u8;
        let mut tw = vec![0u8; full];
        for s in 1..full {
            let mut best = clamp;
            let mut rest = s as u32;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let without = s as u32 & !(1 << v);
                let prev = if without == 0 { 0 } else { tw[without as usize] };
                if prev >= best {
                    continue;
                }
                let q = self.q_size(without, v).min(clamp as usize) as u8;
                best = best.min(prev.max(q));
                if best == 0 {
                    break;
                }
            }
            tw[s] = best;
        }
        tw
    }

    /// Walks the table back from the full set, producing an elimination order.
    fn order_from_table(&self, tw: &[u8]) -> Vec<Vertex> {
        let n = self.vertices.len();
        let mut s = ((1usize << n) - 1) as u32;
        let mut reversed = Vec::with_capacity(n);
        while s != 0 {
            let target = tw[s as usize];
            let mut rest = s;
            let mut chosen = None;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let without = s & !(1 << v);
                let prev = if without == 0 { 0 } else { tw[without as usize] };
                let q = self.q_size(without, v).min(255) as u8;
                if prev.max(q) == target {
                    chosen = Some(v);
                    break;
                }
            }
            let v = chosen.expect("table entry has a witness");
            reversed.push(self.vertices[v]);
            s &= !(1 << v);
        }
        reversed.reverse();
        reversed
    }
}

/// Exact treewidth by dynamic programming over vertex subsets.
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    if g.n() > EXACT_LIMIT {
        return Err(Error::Unsupported(format!("exact treewidth limited to {EXACT_LIMIT} vertices, got {}", g.n())));
    }
    Ok(exact_treewidth_unchecked(g))
}

pub(crate) fn exact_treewidth_unchecked(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let dense = Dense::new(g);
    let tw = dense.subset_table(g.n());
    tw[(1usize << g.n()) - 1] as usize
}

/// An elimination order achieving the treewidth.
pub fn optimal_elimination_order(g: &Graph) -> Result<Vec<Vertex>> {
    if g.n() > EXACT_LIMIT {
        return Err(Error::Unsupported(format!("exact elimination limited to {EXACT_LIMIT} vertices")));
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let dense = Dense::new(g);
    let tw = dense.subset_table(g.n());
    Ok(dense.order_from_table(&tw))
}

/// An order of width at most `t`, if one exists. Exact; requires small graphs.
pub(crate) fn bounded_elimination_order(g: &Graph, t: usize) -> Option<Vec<Vertex>> {
    debug_assert!(g.n() <= EXACT_HARD_LIMIT);
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let dense = Dense::new(g);
    let tw = dense.subset_table(t);
    let full = (1usize << g.n()) - 1;
    if tw[full] as usize > t {
        return None;
    }
    Some(dense.order_from_table(&tw))
}

/// Exact "tw(g) <= t" for graphs up to the hard limit.
pub(crate) fn treewidth_at_most(g: &Graph, t: usize) -> bool {
    if g.n() <= t + 1 {
        return true;
    }
    g.connected_components().into_iter().all(|comp| {
        let h = g.induced_unchecked(&comp);
        if h.n() <= t + 1 {
            return true;
        }
        if t == 0 {
            return h.is_edgeless();
        }
        if t == 1 {
            return h.m() + 1 == h.n();
        }
        if h.n() <= EXACT_HARD_LIMIT {
            let dense = Dense::new(&h);
            let tw = dense.subset_table(t);
            (tw[(1usize << h.n()) - 1] as usize) <= t
        } else {
            elimination_width(&h, &min_fill_order(&h)) <= t
        }
    })
}

fn eliminate(adj: &mut BTreeMap<Vertex, BTreeSet<Vertex>>, v: Vertex) -> BTreeSet<Vertex> {
    let nbrs = adj.remove(&v).unwrap_or_default();
    for &a in &nbrs {
        let entry = adj.get_mut(&a).unwrap();
        entry.remove(&v);
        entry.extend(nbrs.iter().copied().filter(|&b| b != a));
    }
    nbrs
}

fn adjacency(g: &Graph) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
    g.vertices().map(|v| (v, g.neighbors(v).clone())).collect()
}

/// Largest neighbourhood met while eliminating in `order`.
pub fn elimination_width(g: &Graph, order: &[Vertex]) -> usize {
    let mut adj = adjacency(g);
    order.iter().map(|&v| eliminate(&mut adj, v).len()).max().unwrap_or(0)
}

/// Greedy min-fill order; ties broken by degree, then label.
pub fn min_fill_order(g: &Graph) -> Vec<Vertex> {
    let mut adj = adjacency(g);
    let mut order = Vec::with_capacity(g.n());
    while !adj.is_empty() {
        let v = *adj
            .iter()
            .min_by_key(|(&v, nbrs)| {
                let list: Vec<Vertex> = nbrs.iter().copied().collect();
                let mut fill = 0usize;
                for i in 0..list.len() {
                    for j in i + 1..list.len() {
                        if !adj[&list[i]].contains(&list[j]) {
                            fill += 1;
                        }
                    }
                }
                (fill, nbrs.len(), g.label(v))
            })
            .map(|(v, _)| v)
            .unwrap();
        eliminate(&mut adj, v);
        order.push(v);
    }
    order
}

/// Builds a decomposition from an elimination order: each vertex's bag is
/// itself plus its later neighbours in the fill graph, attached to the bag of
/// the earliest of those neighbours.
pub fn decomposition_from_order(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    if order.is_empty() {
        return TreeDecomposition::new(vec![VertexSet::new()], Vec::new());
    }
    let position: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = adjacency(g);
    let mut bags = Vec::with_capacity(order.len());
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(order.len());
    for &v in order {
        let later = eliminate(&mut adj, v);
        parent.push(later.iter().map(|u| position[u]).min());
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => edges.push((i, *p)),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    TreeDecomposition::new(bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn small_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        assert_eq!(exact_treewidth(&tree).unwrap(), 1);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(exact_treewidth(&c4).unwrap(), 2);
        assert_eq!(exact_treewidth(&complete(4)).unwrap(), 3);
        assert_eq!(exact_treewidth(&Graph::with_vertices(3)).unwrap(), 0);
        assert!(exact_treewidth(&Graph::with_vertices(15)).is_err());
    }

    #[test]
    fn optimal_order_realizes_width() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let order = optimal_elimination_order(&c5).unwrap();
        assert_eq!(elimination_width(&c5, &order), 2);
        let d = decomposition_from_order(&c5, &order);
        assert!(d.validate(&c5));
        assert_eq!(d.width().unwrap(), 2);
    }

    #[test]
    fn disconnected_orders_give_trees() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]);
        let d = decomposition_from_order(&g, &min_fill_order(&g));
        assert!(d.validate(&g));
        assert_eq!(d.width().unwrap(), 1);
    }

    #[test]
    fn at_most_fast_paths() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!treewidth_at_most(&c4, 1));
        assert!(treewidth_at_most(&c4, 2));
        assert!(treewidth_at_most(&Graph::with_vertices(4), 0));
        assert!(!treewidth_at_most(&complete(5), 3));
    }
}
