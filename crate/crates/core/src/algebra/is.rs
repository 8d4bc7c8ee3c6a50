use super::{parse_flag, split_encoding, BagView, ProblemAlgebra};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;

/// Independent set: no edge joins two annotated vertices.
#[derive(Clone, Copy, Debug, Default)]
pub struct IndependentSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsState {
    pub annotated: IndexSet,
    /// No edge inside the structure has both endpoints annotated.
    pub conflict_free: bool,
}

fn bag_independent(bag: &BagView, annotated: IndexSet) -> bool {
    annotated.iter().all(|i| bag.adj(i).intersection(annotated).is_empty())
}

impl ProblemAlgebra for IndependentSet {
    type State = IsState;

    fn name(&self) -> &'static str {
        "is"
    }

    fn predicate(&self, g: &Graph, a: &VertexSet) -> bool {
        g.edges().all(|(u, v)| !(a.contains(&u) && a.contains(&v)))
    }

    fn leaf(&self, bag: &BagView, annotated: IndexSet) -> IsState {
        IsState { annotated, conflict_free: bag_independent(bag, annotated) }
    }

    fn introduce(&self, child: &IsState, bag: &BagView, pos: usize, annotated: bool) -> IsState {
        let ann = child.annotated.insert_slot(pos, annotated);
        let clash = annotated && !bag.adj(pos).intersection(ann).is_empty();
        IsState { annotated: ann, conflict_free: child.conflict_free && !clash }
    }

    fn forget(&self, child: &IsState, _child_bag: &BagView, pos: usize) -> IsState {
        IsState { annotated: child.annotated.remove_slot(pos), conflict_free: child.conflict_free }
    }

    fn join(&self, left: &IsState, right: &IsState, bag: &BagView) -> Option<IsState> {
        (left.annotated == right.annotated).then(|| IsState {
            annotated: left.annotated,
            conflict_free: left.conflict_free && right.conflict_free && bag_independent(bag, left.annotated),
        })
    }

    fn annotated_boundary(&self, state: &IsState) -> IndexSet {
        state.annotated
    }

    fn combine(
        &self,
        center: &Graph,
        annotation: &VertexSet,
        _boundaries: &[Vec<Vertex>],
        states: &[&IsState],
    ) -> bool {
        states.iter().all(|s| s.conflict_free) && self.predicate(center, annotation)
    }

    fn can_accept(&self, state: &IsState) -> bool {
        state.conflict_free
    }

    fn encode_state(&self, state: &IsState) -> String {
        format!("{}:ok={}", state.annotated, state.conflict_free as u8)
    }

    fn decode_state(&self, text: &str) -> Option<IsState> {
        let (annotated, fields) = split_encoding(text)?;
        match fields.as_slice() {
            [ok] => Some(IsState { annotated, conflict_free: parse_flag(ok, "ok")? }),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn predicate_examples() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(IndependentSet.predicate(&c4, &set(&[0, 2])));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(!IndependentSet.predicate(&p3, &set(&[0, 1])));
    }

    #[test]
    fn join_sees_bag_edge_inside_annotation() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let bag = BagView::new(&g, &[0, 1]).unwrap();
        let both: IndexSet = [0, 1].into_iter().collect();
        let s = IsState { annotated: both, conflict_free: true };
        let joined = IndependentSet.join(&s, &s, &bag).unwrap();
        assert!(!joined.conflict_free);
        let other = IsState { annotated: [0].into_iter().collect(), conflict_free: true };
        assert_eq!(IndependentSet.join(&s, &other, &bag), None);
    }

    #[test]
    fn encoding_round_trip() {
        let s = IsState { annotated: IndexSet::empty(), conflict_free: false };
        assert_eq!(IndependentSet.encode_state(&s), "{}:ok=0");
        assert_eq!(IndependentSet.decode_state("{}:ok=0"), Some(s));
        assert_eq!(IndependentSet.decode_state("{}:cov=0"), None);
    }
}
