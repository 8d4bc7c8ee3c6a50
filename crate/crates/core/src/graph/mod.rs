//! Labeled simple graphs and boundaried structures.
//!
//! Every vertex carries an integer id and an explicit label. Labels are
//! injective and survive taking subgraphs, so boundary indices computed on a
//! piece agree with those computed on the whole graph.

mod bstructure;
mod parse;
mod topo;

pub use bstructure::{compatible, glue, BGraph, BStructure};
pub use parse::{parse_edge_list, parse_edge_list_named, render_edge_list};
pub use topo::contains_topological_minor;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{domain, Result};

pub type Vertex = usize;
pub type Label = u64;
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    labels: BTreeMap<Vertex, Label>,
    by_label: BTreeMap<Label, Vertex>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(Vertex, Vertex)> = self.edges().collect();
        f.debug_struct("Graph").field("vertices", &self.labels).field("edges", &edges).finish()
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with label equal to id.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v, v as Label).expect("fresh ids");
        }
        g
    }

    /// Graph on `0..n` with the given edges; panics on invalid input. For tests and generators.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v).expect("valid edge list");
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex, label: Label) -> Result<()> {
        if self.adj.contains_key(&v) {
            return Err(domain(format!("vertex {v} already present")));
        }
        if self.by_label.contains_key(&label) {
            return Err(domain(format!("label {label} already used")));
        }
        self.adj.insert(v, BTreeSet::new());
        self.labels.insert(v, label);
        self.by_label.insert(label, v);
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(domain(format!("self-loop at {u}")));
        }
        if !self.contains(u) || !self.contains(v) {
            return Err(domain(format!("edge {u}-{v} has an endpoint outside the graph")));
        }
        if !self.adj.get_mut(&u).unwrap().insert(v) {
            return Err(domain(format!("duplicate edge {u}-{v}")));
        }
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    /// Adds the edge unless it is already present.
    pub fn ensure_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if self.has_edge(u, v) {
            Ok(())
        } else {
            self.add_edge(u, v)
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
            let label = self.labels.remove(&v).unwrap();
            self.by_label.remove(&label);
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.values().all(BTreeSet::is_empty)
    }

    /// Vertex ids in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Vertex ids in increasing label order.
    pub fn vertices_by_label(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.by_label.values().copied()
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.labels[&v]
    }

    pub fn vertex_with_label(&self, label: Label) -> Option<Vertex> {
        self.by_label.get(&label).copied()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.by_label.keys().next_back().copied()
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[&v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Each edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Sorts a collection of vertices by label.
    pub fn order_by_label<'a>(&self, set: impl IntoIterator<Item = &'a Vertex>) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = set.into_iter().copied().collect();
        out.sort_by_key(|&v| self.labels[&v]);
        out
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|v| !self.contains(**v)) {
            Some(v) => Err(domain(format!("vertex {v} is not in the graph"))),
            None => Ok(()),
        }
    }

    /// `G[S]`, keeping ids and labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: &VertexSet) -> Graph {
        let mut adj = BTreeMap::new();
        let mut labels = BTreeMap::new();
        let mut by_label = BTreeMap::new();
        for &v in s {
            let nbrs: BTreeSet<Vertex> = self.adj[&v].intersection(s).copied().collect();
            adj.insert(v, nbrs);
            labels.insert(v, self.labels[&v]);
            by_label.insert(self.labels[&v], v);
        }
        Graph { adj, labels, by_label }
    }

    /// `G - S`.
    pub fn without(&self, s: &VertexSet) -> Graph {
        let keep: VertexSet = self.adj.keys().filter(|v| !s.contains(v)).copied().collect();
        self.induced_unchecked(&keep)
    }

    /// `N_G(S)`: neighbours of `S` that are not in `S`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_subset(s)?;
        Ok(self.open_neighborhood(s))
    }

    pub(crate) fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().flat_map(|v| self.adj[v].iter()).filter(|u| !s.contains(u)).copied().collect()
    }

    /// `N_G[S] = S ∪ N_G(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        let mut out = self.neighborhood(s)?;
        out.extend(s.iter().copied());
        Ok(out)
    }

    /// `∂_G(S)`: vertices of `S` with a neighbour outside `S`.
    pub fn boundary_of(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_subset(s)?;
        Ok(s.iter().filter(|v| self.adj[v].iter().any(|u| !s.contains(u))).copied().collect())
    }

    /// Components ordered by their minimum label.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut comps = Vec::new();
        for start in self.vertices_by_label() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in &self.adj[&v] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True iff `a` covers every edge.
    pub fn is_vertex_cover(&self, a: &VertexSet) -> bool {
        self.edges().all(|(u, v)| a.contains(&u) || a.contains(&v))
    }
}
