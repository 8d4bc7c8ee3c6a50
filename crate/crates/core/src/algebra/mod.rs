//! Finite-state problem algebras.
//!
//! An algebra names the equivalence class of a b-structure by a small state:
//! the index set of annotated boundary vertices plus a problem-specific
//! payload. Two b-structures with equal states behave identically under any
//! gluing, which is what both the counting DP and the extractor rely on.

mod ds;
mod is;
mod vc;

pub use ds::{DominatingSet, DsState};
pub use is::{IndependentSet, IsState};
pub use vc::{VcState, VertexCover};

use std::fmt::Debug;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::graph::{BStructure, Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;
use crate::treedec::{make_nice, NiceKind, NiceTreeDecomposition, TreeDecomposition};

/// The graph induced on one bag, positions in label order.
#[derive(Clone, Debug)]
pub struct BagView {
    vertices: Vec<Vertex>,
    adj: Vec<IndexSet>,
}

impl BagView {
    /// `bag` must already be sorted by label.
    pub fn new(g: &Graph, bag: &[Vertex]) -> Result<Self> {
        if bag.len() > IndexSet::CAPACITY {
            return Err(Error::Unsupported(format!("bag of {} vertices exceeds 64", bag.len())));
        }
        let adj = bag
            .iter()
            .map(|&v| bag.iter().enumerate().filter(|(_, &u)| g.has_edge(u, v)).map(|(i, _)| i).collect())
            .collect();
        Ok(BagView { vertices: bag.to_vec(), adj })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// Bag positions adjacent to position `i`.
    pub fn adj(&self, i: usize) -> IndexSet {
        self.adj[i]
    }

    pub fn all(&self) -> IndexSet {
        IndexSet::full(self.len())
    }
}

/// DP transitions, acceptance and combination for one vertex-certified
/// property.
///
/// Transitions receive bag graphs; states carry annotated positions in
/// label order of the current bag.
pub trait ProblemAlgebra: Send + Sync {
    type State: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn name(&self) -> &'static str;

    /// Closed-world meaning: does annotation `a` have the property in `g`?
    fn predicate(&self, g: &Graph, a: &VertexSet) -> bool;

    /// State of `(G[bag], bag, A)` where `annotated` marks `A`.
    fn leaf(&self, bag: &BagView, annotated: IndexSet) -> Self::State;

    /// Adds the vertex at position `pos` of the new `bag`.
    fn introduce(&self, child: &Self::State, bag: &BagView, pos: usize, annotated: bool) -> Self::State;

    /// Drops position `pos` of `child_bag` from the boundary.
    fn forget(&self, child: &Self::State, child_bag: &BagView, pos: usize) -> Self::State;

    /// `None` when the annotated traces differ.
    fn join(&self, left: &Self::State, right: &Self::State, bag: &BagView) -> Option<Self::State>;

    fn annotated_boundary(&self, state: &Self::State) -> IndexSet;

    /// Whether the center `(G₀, A₀)` glued with protrusions in the given
    /// states satisfies the property. `boundaries[i]` lists the center
    /// vertices of protrusion `i` in index order.
    fn combine(
        &self,
        center: &Graph,
        annotation: &VertexSet,
        boundaries: &[Vec<Vertex>],
        states: &[&Self::State],
    ) -> bool;

    /// False when no gluing containing a piece in this state can satisfy the
    /// property.
    fn can_accept(&self, _state: &Self::State) -> bool {
        true
    }

    /// Single-token canonical encoding used by the compactor format.
    fn encode_state(&self, state: &Self::State) -> String;

    fn decode_state(&self, text: &str) -> Option<Self::State>;

    /// `Some(c)` when any solution of size `k` is a treewidth-`t` modulator
    /// of size at most `c·k` (for every `t`); `None` when the property gives
    /// no such guarantee.
    fn modulator_multiplier(&self) -> Option<usize> {
        None
    }

    /// Whether pipeline runs must be given a modulator instead of deriving
    /// one from the graph.
    fn needs_external_modulator(&self) -> bool {
        false
    }
}

/// Problems selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    VertexCover,
    IndependentSet,
    DominatingSet,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::VertexCover => "vc",
            Problem::IndependentSet => "is",
            Problem::DominatingSet => "ds",
        }
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vc" => Ok(Problem::VertexCover),
            "is" => Ok(Problem::IndependentSet),
            "ds" => Ok(Problem::DominatingSet),
            other => Err(domain(format!("unknown problem {other:?}; expected vc, is or ds"))),
        }
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub fn vc_algebra() -> VertexCover {
    VertexCover
}

pub fn is_algebra() -> IndependentSet {
    IndependentSet
}

pub fn ds_algebra() -> DominatingSet {
    DominatingSet
}

/// State of `x` folded over a nice decomposition rooted at `B(x)`.
pub fn state_of_nice<A: ProblemAlgebra>(alg: &A, x: &BStructure, nice: &NiceTreeDecomposition) -> Result<A::State> {
    let g = x.graph();
    if nice.root_bag() != x.boundary_order().as_slice() {
        return Err(domain("nice decomposition is not rooted at the boundary"));
    }
    let annotated = x.annotated();
    let mut states: Vec<Option<A::State>> = Vec::with_capacity(nice.nodes().len());
    for node in nice.nodes() {
        let bag = BagView::new(g, &node.bag)?;
        let state = match node.kind {
            NiceKind::Leaf => {
                let mask = node.bag.iter().enumerate().filter(|(_, v)| annotated.contains(v)).map(|(i, _)| i).collect();
                alg.leaf(&bag, mask)
            }
            NiceKind::Introduce { child, vertex } => {
                let pos = bag.position(vertex).expect("introduced vertex in bag");
                let child_state = states[child].take().expect("child folded");
                alg.introduce(&child_state, &bag, pos, annotated.contains(&vertex))
            }
            NiceKind::Forget { child, vertex } => {
                let child_bag = BagView::new(g, &nice.nodes()[child].bag)?;
                let pos = child_bag.position(vertex).expect("forgotten vertex in child bag");
                let child_state = states[child].take().expect("child folded");
                alg.forget(&child_state, &child_bag, pos)
            }
            NiceKind::Join { left, right } => {
                let l = states[left].take().expect("child folded");
                let r = states[right].take().expect("child folded");
                alg.join(&l, &r, &bag)
                    .ok_or_else(|| Error::Internal("join of traces from one annotation disagreed".into()))?
            }
        };
        states.push(Some(state));
    }
    Ok(states.pop().flatten().expect("root state"))
}

/// State of `x` using decomposition `d`, which must be valid for `x`'s graph
/// and contain `B(x)` in some bag.
pub fn state_of<A: ProblemAlgebra>(alg: &A, x: &BStructure, d: &TreeDecomposition) -> Result<A::State> {
    let nice = make_nice(d, x.graph(), x.boundary())?;
    state_of_nice(alg, x, &nice)
}

/// Splits `prefix:rest` encodings into the annotated set and payload fields.
pub(crate) fn split_encoding(text: &str) -> Option<(IndexSet, Vec<&str>)> {
    let mut parts = text.split(':');
    let annotated = IndexSet::parse(parts.next()?)?;
    Some((annotated, parts.collect()))
}

pub(crate) fn parse_flag(field: &str, key: &str) -> Option<bool> {
    match field.strip_prefix(key)?.strip_prefix('=')? {
        "1" => Some(true),
        "0" => Some(false),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problem_names() {
        for p in [Problem::VertexCover, Problem::IndependentSet, Problem::DominatingSet] {
            assert_eq!(p.name().parse::<Problem>().unwrap(), p);
        }
        assert!("fvs".parse::<Problem>().is_err());
    }
}
