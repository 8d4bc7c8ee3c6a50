//! Region types: which states each annotation size can reach.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

use itertools::Itertools;

use crate::algebra::{state_of, ProblemAlgebra, VcState, VertexCover};
use crate::dp::count_table_auto;
use crate::error::Result;
use crate::graph::{BGraph, BStructure, Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;
use crate::treedec::{rooted_decomposition, treewidth_at_most};

/// `type_i` for `i = 0..=d`: the states reached by annotations of size `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector<S> {
    per_size: Vec<BTreeSet<S>>,
}

impl<S: Ord> TypeVector<S> {
    pub fn new(per_size: Vec<BTreeSet<S>>) -> Self {
        TypeVector { per_size }
    }

    pub fn at(&self, size: usize) -> Option<&BTreeSet<S>> {
        self.per_size.get(size)
    }

    pub fn max_size(&self) -> usize {
        self.per_size.len().saturating_sub(1)
    }
}

/// Type vector of `bg` from its count table under `alg`.
pub fn type_vector<A: ProblemAlgebra>(bg: &BGraph, alg: &A, d: usize) -> Result<TypeVector<A::State>> {
    let table = count_table_auto::<A, u64>(bg, alg, d)?;
    let mut per_size = vec![BTreeSet::new(); d + 1];
    for (s, row) in table.rows() {
        for (i, c) in row.iter().enumerate() {
            if *c > 0 {
                per_size[i].insert(s.clone());
            }
        }
    }
    Ok(TypeVector { per_size })
}

/// Typing used by the replacement loop for one treewidth bound.
pub trait RegionTyping {
    type State: Clone + Eq + Ord + Hash + Debug;

    fn t(&self) -> usize;

    fn type_vector(&self, bg: &BGraph, d: usize) -> Result<TypeVector<Self::State>>;

    fn state(&self, x: &BStructure) -> Result<Self::State>;
}

/// `t = 0`: modulators are vertex covers, typed by the vc algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct VcTyping;

impl RegionTyping for VcTyping {
    type State = VcState;

    fn t(&self) -> usize {
        0
    }

    fn type_vector(&self, bg: &BGraph, d: usize) -> Result<TypeVector<VcState>> {
        type_vector(bg, &VertexCover, d)
    }

    fn state(&self, x: &BStructure) -> Result<VcState> {
        state_of(&VertexCover, x, &rooted_decomposition(x.graph(), x.boundary()))
    }
}

/// `t ≥ 1`: states computed from the definition on the whole region.
#[derive(Clone, Copy, Debug)]
pub struct TwTyping {
    pub t: usize,
}

/// Class of `(G, B, A)` for "`tw(G - A) ≤ t`".
///
/// `shape` is the part of `G - A` attached to the unannotated boundary after
/// reductions that keep the answer for every gluing, as adjacency rows with
/// the unannotated boundary first. Dead states can never be completed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwState {
    pub annotated: IndexSet,
    pub alive: bool,
    pub shape: Vec<u64>,
}

// interior ids are the vertices not in `keep`
fn reduce(h: &mut Graph, keep: &VertexSet, t: usize) {
    loop {
        let mut changed = false;
        let interior: Vec<Vertex> = h.vertices().filter(|v| !keep.contains(v)).collect();
        for x in interior {
            let nbrs: Vec<Vertex> = h.neighbors(x).iter().copied().collect();
            match nbrs.as_slice() {
                [] | [_] => {}
                [u, w] if !h.has_edge(*u, *w) => {
                    h.remove_vertex(x);
                    h.add_edge(*u, *w).expect("neighbours are distinct and non-adjacent");
                    changed = true;
                    continue;
                }
                [_, _] if t >= 2 => {}
                _ => continue,
            }
            h.remove_vertex(x);
            changed = true;
        }
        if !changed {
            break;
        }
    }
}

const CANONICAL_INTERIOR: usize = 5;

fn shape_rows(h: &Graph, order: &[Vertex]) -> Vec<u64> {
    order
        .iter()
        .map(|&v| order.iter().enumerate().filter(|(_, &u)| h.has_edge(u, v)).fold(0u64, |m, (i, _)| m | 1 << i))
        .collect()
}

fn canonical_shape(h: &Graph, open_boundary: &[Vertex]) -> Vec<u64> {
    let interior: Vec<Vertex> = h.vertices_by_label().filter(|v| !open_boundary.contains(v)).collect();
    let mut order: Vec<Vertex> = open_boundary.to_vec();
    if interior.len() <= CANONICAL_INTERIOR {
        let mut best: Option<Vec<u64>> = None;
        for perm in interior.iter().copied().permutations(interior.len()) {
            order.truncate(open_boundary.len());
            order.extend(perm);
            let rows = shape_rows(h, &order);
            if best.as_ref().is_none_or(|b| rows < *b) {
                best = Some(rows);
            }
        }
        best.unwrap_or_default()
    } else {
        // too many to canonise; degree then label keeps it deterministic
        let mut rest = interior;
        rest.sort_by_key(|&v| (h.degree(v), h.label(v)));
        order.extend(rest);
        shape_rows(h, &order)
    }
}

impl TwTyping {
    /// State of `(g, boundary, a)` with `boundary` in index order.
    pub fn state_parts(&self, g: &Graph, boundary: &[Vertex], a: &VertexSet) -> TwState {
        let t = self.t;
        let annotated: IndexSet = boundary.iter().enumerate().filter(|(_, v)| a.contains(v)).map(|(i, _)| i).collect();
        let open: Vec<Vertex> = boundary.iter().copied().filter(|v| !a.contains(v)).collect();
        let open_set: VertexSet = open.iter().copied().collect();
        let mut rest = g.without(a);
        reduce(&mut rest, &open_set, t);
        let mut touching = VertexSet::new();
        for comp in rest.connected_components() {
            if comp.is_disjoint(&open_set) {
                if !treewidth_at_most(&rest.induced_unchecked(&comp), t) {
                    return TwState { annotated, alive: false, shape: Vec::new() };
                }
            } else {
                touching.extend(comp);
            }
        }
        let h = rest.induced_unchecked(&touching);
        if !treewidth_at_most(&h, t) {
            return TwState { annotated, alive: false, shape: Vec::new() };
        }
        TwState { annotated, alive: true, shape: canonical_shape(&h, &open) }
    }
}

impl RegionTyping for TwTyping {
    type State = TwState;

    fn t(&self) -> usize {
        self.t
    }

    fn type_vector(&self, bg: &BGraph, d: usize) -> Result<TypeVector<TwState>> {
        let g = bg.graph();
        let boundary = bg.boundary_order();
        let vertices: Vec<Vertex> = g.vertices().collect();
        let mut per_size = vec![BTreeSet::new(); d + 1];
        for (size, slot) in per_size.iter_mut().enumerate() {
            for combo in vertices.iter().copied().combinations(size) {
                let a: VertexSet = combo.into_iter().collect();
                slot.insert(self.state_parts(g, &boundary, &a));
            }
        }
        Ok(TypeVector { per_size })
    }

    fn state(&self, x: &BStructure) -> Result<TwState> {
        Ok(self.state_parts(x.graph(), &x.boundary_order(), x.annotated()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::path;

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn vc_type_zero() {
        let lone = BGraph::new(Graph::with_vertices(1), set(&[0])).unwrap();
        let tv = VcTyping.type_vector(&lone, 2).unwrap();
        let want: BTreeSet<VcState> = [VcState { annotated: IndexSet::empty(), covered: true }].into_iter().collect();
        assert_eq!(tv.at(0), Some(&want));

        let edge = BGraph::new(Graph::from_edges(3, &[(1, 2)]), set(&[0])).unwrap();
        let tv = VcTyping.type_vector(&edge, 2).unwrap();
        assert!(tv.at(0).unwrap().iter().all(|s| !s.covered));
    }

    #[test]
    fn permuted_interior_same_type() {
        // path 0-1-2-3 with B = {0, 3}; relabel the interior in reverse
        let g1 = path(4);
        let mut g2 = Graph::new();
        for (v, l) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            g2.add_vertex(v, l).unwrap();
        }
        for (u, v) in [(0, 1), (1, 2), (2, 3)] {
            g2.add_edge(u, v).unwrap();
        }
        let a = BGraph::new(g1, set(&[0, 3])).unwrap();
        let b = BGraph::new(g2, set(&[0, 3])).unwrap();
        assert_eq!(VcTyping.type_vector(&a, 3).unwrap(), VcTyping.type_vector(&b, 3).unwrap());
        let tw = TwTyping { t: 1 };
        assert_eq!(tw.type_vector(&a, 3).unwrap(), tw.type_vector(&b, 3).unwrap());
    }

    #[test]
    fn long_paths_share_forest_type() {
        let tw = TwTyping { t: 1 };
        let short = BGraph::new(path(9), set(&[0, 8])).unwrap();
        let long = BGraph::new(path(14), set(&[0, 13])).unwrap();
        assert_eq!(tw.type_vector(&short, 3).unwrap(), tw.type_vector(&long, 3).unwrap());
    }

    #[test]
    fn cycle_is_dead_for_forests() {
        let tw = TwTyping { t: 1 };
        let c4 = crate::generate::cycle(4);
        let s = tw.state_parts(&c4, &[0], &set(&[]));
        assert!(!s.alive);
        let s = tw.state_parts(&c4, &[0], &set(&[2]));
        assert!(s.alive);
    }
}
