use super::{parse_flag, split_encoding, BagView, ProblemAlgebra};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;

/// Vertex cover: every edge has an annotated endpoint. Also the
/// treewidth-0 modulator property.
#[derive(Clone, Copy, Debug, Default)]
pub struct VertexCover;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VcState {
    pub annotated: IndexSet,
    /// Every edge of the structure is covered.
    pub covered: bool,
}

fn bag_covered(bag: &BagView, annotated: IndexSet) -> bool {
    (0..bag.len()).all(|i| annotated.contains(i) || bag.adj(i).difference(annotated).is_empty())
}

impl ProblemAlgebra for VertexCover {
    type State = VcState;

    fn name(&self) -> &'static str {
        "vc"
    }

    fn predicate(&self, g: &Graph, a: &VertexSet) -> bool {
        g.edges().all(|(u, v)| a.contains(&u) || a.contains(&v))
    }

    fn leaf(&self, bag: &BagView, annotated: IndexSet) -> VcState {
        VcState { annotated, covered: bag_covered(bag, annotated) }
    }

    fn introduce(&self, child: &VcState, bag: &BagView, pos: usize, annotated: bool) -> VcState {
        let ann = child.annotated.insert_slot(pos, annotated);
        let fresh = annotated || bag.adj(pos).difference(ann).is_empty();
        VcState { annotated: ann, covered: child.covered && fresh }
    }

    fn forget(&self, child: &VcState, _child_bag: &BagView, pos: usize) -> VcState {
        VcState { annotated: child.annotated.remove_slot(pos), covered: child.covered }
    }

    fn join(&self, left: &VcState, right: &VcState, bag: &BagView) -> Option<VcState> {
        (left.annotated == right.annotated).then(|| VcState {
            annotated: left.annotated,
            covered: left.covered && right.covered && bag_covered(bag, left.annotated),
        })
    }

    fn annotated_boundary(&self, state: &VcState) -> IndexSet {
        state.annotated
    }

    fn combine(
        &self,
        center: &Graph,
        annotation: &VertexSet,
        _boundaries: &[Vec<Vertex>],
        states: &[&VcState],
    ) -> bool {
        states.iter().all(|s| s.covered) && self.predicate(center, annotation)
    }

    fn can_accept(&self, state: &VcState) -> bool {
        state.covered
    }

    fn encode_state(&self, state: &VcState) -> String {
        format!("{}:cov={}", state.annotated, state.covered as u8)
    }

    fn decode_state(&self, text: &str) -> Option<VcState> {
        let (annotated, fields) = split_encoding(text)?;
        match fields.as_slice() {
            [cov] => Some(VcState { annotated, covered: parse_flag(cov, "cov")? }),
            _ => None,
        }
    }

    fn modulator_multiplier(&self) -> Option<usize> {
        Some(1)
    }
}
