use super::{Graph, Label, Vertex, VertexSet};
use crate::error::{domain, Result};
use crate::index_set::IndexSet;

/// A graph with a boundary `B` and an annotated set `A`.
///
/// The index of a boundary vertex is its position when `B` is sorted by
/// label (0-based here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BStructure {
    graph: Graph,
    boundary: VertexSet,
    annotated: VertexSet,
}

impl BStructure {
    pub fn new(graph: Graph, boundary: VertexSet, annotated: VertexSet) -> Result<Self> {
        if let Some(v) = boundary.iter().chain(&annotated).find(|v| !graph.contains(**v)) {
            return Err(domain(format!("vertex {v} of boundary/annotation not in graph")));
        }
        if boundary.len() > IndexSet::CAPACITY {
            return Err(domain("boundary exceeds 64 vertices"));
        }
        Ok(BStructure { graph, boundary, annotated })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn boundary(&self) -> &VertexSet {
        &self.boundary
    }

    pub fn annotated(&self) -> &VertexSet {
        &self.annotated
    }

    /// Same graph and boundary, different annotation.
    pub fn with_annotation(&self, annotated: VertexSet) -> Result<Self> {
        BStructure::new(self.graph.clone(), self.boundary.clone(), annotated)
    }

    /// Boundary vertices in index order.
    pub fn boundary_order(&self) -> Vec<Vertex> {
        self.graph.order_by_label(&self.boundary)
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.boundary_order().iter().position(|&u| u == v)
    }

    /// Index set of `A ∩ B`.
    pub fn annotated_boundary(&self) -> IndexSet {
        self.boundary_order().iter().enumerate().filter(|(_, v)| self.annotated.contains(v)).map(|(i, _)| i).collect()
    }

    /// Edges of `G[B]` as index pairs `(i, j)` with `i < j`, sorted.
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        let order = self.boundary_order();
        let mut out = Vec::new();
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if self.graph.has_edge(order[i], order[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn interior(&self) -> VertexSet {
        self.graph.vertices().filter(|v| !self.boundary.contains(v)).collect()
    }
}

/// A b-structure whose annotated set is its whole vertex set, `(G, B, -)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BGraph(BStructure);

impl BGraph {
    pub fn new(graph: Graph, boundary: VertexSet) -> Result<Self> {
        let all = graph.vertex_set();
        BStructure::new(graph, boundary, all).map(BGraph)
    }

    pub fn graph(&self) -> &Graph {
        self.0.graph()
    }

    pub fn boundary(&self) -> &VertexSet {
        self.0.boundary()
    }

    pub fn boundary_order(&self) -> Vec<Vertex> {
        self.0.boundary_order()
    }

    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        self.0.boundary_edges()
    }

    pub fn interior(&self) -> VertexSet {
        self.0.interior()
    }

    pub fn as_structure(&self) -> &BStructure {
        &self.0
    }

    /// The b-structure `(G, B, A)` over this b-graph.
    pub fn annotate(&self, annotated: VertexSet) -> Result<BStructure> {
        self.0.with_annotation(annotated)
    }
}

/// `x ~ y`: equal boundary size, same annotated boundary indices, and
/// identical index-labeled boundary graphs.
pub fn compatible(x: &BStructure, y: &BStructure) -> bool {
    x.boundary.len() == y.boundary.len()
        && x.annotated_boundary() == y.annotated_boundary()
        && x.boundary_edges() == y.boundary_edges()
}

/// `x ⊕ y`: disjoint union with equal-index boundary vertices identified.
///
/// Vertices of `x` keep their ids and labels. Interior vertices of `y` get
/// fresh ids and labels above those of `x`, in `y`'s label order.
pub fn glue(x: &BStructure, y: &BStructure) -> Result<(Graph, VertexSet)> {
    if !compatible(x, y) {
        return Err(domain("gluing incompatible b-structures"));
    }
    let mut g = x.graph.clone();
    let mut annotated = x.annotated.clone();
    let xb = x.boundary_order();
    let yb = y.boundary_order();
    let mut next_id = x.graph.max_vertex().map_or(0, |v| v + 1);
    let mut next_label: Label = x.graph.max_label().map_or(0, |l| l + 1);
    let mut image = std::collections::BTreeMap::new();
    for (i, &v) in yb.iter().enumerate() {
        image.insert(v, xb[i]);
    }
    for v in y.graph.vertices_by_label() {
        if image.contains_key(&v) {
            continue;
        }
        g.add_vertex(next_id, next_label)?;
        image.insert(v, next_id);
        next_id += 1;
        next_label += 1;
    }
    for (u, v) in y.graph.edges() {
        g.ensure_edge(image[&u], image[&v])?;
    }
    annotated.extend(y.annotated.iter().map(|v| image[v]));
    Ok((g, annotated))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    fn triangle(boundary: &[Vertex], annotated: &[Vertex]) -> BStructure {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        BStructure::new(g, set(boundary), set(annotated)).unwrap()
    }

    #[test]
    fn compatibility_examples() {
        let x = triangle(&[0, 1], &[0]);
        assert!(compatible(&x, &x.clone()));
        let k2 = BStructure::new(Graph::from_edges(2, &[(0, 1)]), set(&[0, 1]), set(&[])).unwrap();
        let iso = BStructure::new(Graph::with_vertices(2), set(&[0, 1]), set(&[])).unwrap();
        assert!(!compatible(&k2, &iso));
        let first = BStructure::new(Graph::with_vertices(2), set(&[0, 1]), set(&[0])).unwrap();
        let second = BStructure::new(Graph::with_vertices(2), set(&[0, 1]), set(&[1])).unwrap();
        assert!(!compatible(&first, &second));
    }

    #[test]
    fn glue_two_triangles() {
        let x = triangle(&[0, 1], &[]);
        let (g, a) = glue(&x, &x).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        assert!(a.is_empty());
        assert_eq!(g.n(), x.graph().n() * 2 - 2);
    }

    #[test]
    fn glue_with_bare_boundary() {
        let x = triangle(&[0, 1], &[2]);
        let mut bare = Graph::with_vertices(2);
        bare.add_edge(0, 1).unwrap();
        let y = BStructure::new(bare, set(&[0, 1]), set(&[])).unwrap();
        let (g, a) = glue(&x, &y).unwrap();
        assert_eq!(&g, x.graph());
        assert_eq!(a, set(&[2]));
        assert!(glue(&x, &triangle(&[0], &[])).is_err());
    }

    #[test]
    fn index_follows_labels() {
        let mut g = Graph::new();
        g.add_vertex(0, 9).unwrap();
        g.add_vertex(1, 3).unwrap();
        g.add_vertex(2, 5).unwrap();
        let s = BStructure::new(g, set(&[0, 1, 2]), set(&[0])).unwrap();
        assert_eq!(s.boundary_order(), vec![1, 2, 0]);
        assert_eq!(s.annotated_boundary(), [2].into_iter().collect());
    }
}
