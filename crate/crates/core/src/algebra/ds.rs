use super::{parse_flag, split_encoding, BagView, ProblemAlgebra};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;

/// Dominating set: every vertex is annotated or has an annotated neighbour.
#[derive(Clone, Copy, Debug, Default)]
pub struct DominatingSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DsState {
    pub annotated: IndexSet,
    /// Boundary positions not yet dominated inside the structure.
    pub undominated: IndexSet,
    /// Every non-boundary vertex is dominated.
    pub interior_dominated: bool,
}

impl ProblemAlgebra for DominatingSet {
    type State = DsState;

    fn name(&self) -> &'static str {
        "ds"
    }

    fn predicate(&self, g: &Graph, a: &VertexSet) -> bool {
        g.vertices().all(|v| a.contains(&v) || g.neighbors(v).iter().any(|u| a.contains(u)))
    }

    fn leaf(&self, bag: &BagView, annotated: IndexSet) -> DsState {
        let undominated = (0..bag.len())
            .filter(|&i| !annotated.contains(i) && bag.adj(i).intersection(annotated).is_empty())
            .collect();
        DsState { annotated, undominated, interior_dominated: true }
    }

    fn introduce(&self, child: &DsState, bag: &BagView, pos: usize, annotated: bool) -> DsState {
        let ann = child.annotated.insert_slot(pos, annotated);
        let self_dominated = annotated || !bag.adj(pos).intersection(ann).is_empty();
        let mut und = child.undominated.insert_slot(pos, !self_dominated);
        if annotated {
            und = und.difference(bag.adj(pos));
        }
        DsState { annotated: ann, undominated: und, interior_dominated: child.interior_dominated }
    }

    fn forget(&self, child: &DsState, _child_bag: &BagView, pos: usize) -> DsState {
        DsState {
            annotated: child.annotated.remove_slot(pos),
            undominated: child.undominated.remove_slot(pos),
            interior_dominated: child.interior_dominated && !child.undominated.contains(pos),
        }
    }

    fn join(&self, left: &DsState, right: &DsState, _bag: &BagView) -> Option<DsState> {
        (left.annotated == right.annotated).then(|| DsState {
            annotated: left.annotated,
            undominated: left.undominated.intersection(right.undominated),
            interior_dominated: left.interior_dominated && right.interior_dominated,
        })
    }

    fn annotated_boundary(&self, state: &DsState) -> IndexSet {
        state.annotated
    }

    fn combine(&self, center: &Graph, annotation: &VertexSet, boundaries: &[Vec<Vertex>], states: &[&DsState]) -> bool {
        if !states.iter().all(|s| s.interior_dominated) {
            return false;
        }
        let mut dominated: VertexSet = annotation.clone();
        for &v in annotation {
            dominated.extend(center.neighbors(v).iter().copied());
        }
        for (boundary, state) in boundaries.iter().zip(states) {
            for (i, &v) in boundary.iter().enumerate() {
                if !state.undominated.contains(i) {
                    dominated.insert(v);
                }
            }
        }
        center.vertices().all(|v| dominated.contains(&v))
    }

    fn can_accept(&self, state: &DsState) -> bool {
        state.interior_dominated
    }

    fn encode_state(&self, state: &DsState) -> String {
        format!("{}:und={}:int={}", state.annotated, state.undominated, state.interior_dominated as u8)
    }

    fn decode_state(&self, text: &str) -> Option<DsState> {
        let (annotated, fields) = split_encoding(text)?;
        match fields.as_slice() {
            [und, int] => Some(DsState {
                annotated,
                undominated: IndexSet::parse(und.strip_prefix("und=")?)?,
                interior_dominated: parse_flag(int, "int")?,
            }),
            _ => None,
        }
    }

    fn needs_external_modulator(&self) -> bool {
        true
    }
}
