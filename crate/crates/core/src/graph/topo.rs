use super::{Graph, Vertex};
use crate::error::{Error, Result};

const MAX_PATTERN: usize = 6;
const MAX_HOST: usize = 20;

/// Whether `g` contains a subdivision of `h` as a subgraph.
///
/// Exhaustive: tries every injective placement of the branch vertices and
/// then routes the pattern edges along internally disjoint paths. Only meant
/// for validating small instances.
pub fn contains_topological_minor(g: &Graph, h: &Graph) -> Result<bool> {
    if h.n() > MAX_PATTERN || g.n() > MAX_HOST {
        return Err(Error::Unsupported(format!(
            "topological minor check limited to |V(h)| <= {MAX_PATTERN}, |V(g)| <= {MAX_HOST}"
        )));
    }
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(false);
    }
    let host: Vec<Vertex> = g.vertices().collect();
    let idx = |v: Vertex| host.iter().position(|&u| u == v).unwrap();
    let adj: Vec<Vec<usize>> = host.iter().map(|&v| g.neighbors(v).iter().map(|&u| idx(u)).collect()).collect();
    let pattern: Vec<Vertex> = h.vertices().collect();
    let pidx = |v: Vertex| pattern.iter().position(|&u| u == v).unwrap();
    let pdeg: Vec<usize> = pattern.iter().map(|&v| h.degree(v)).collect();
    let pedges: Vec<(usize, usize)> = h.edges().map(|(u, v)| (pidx(u), pidx(v))).collect();

    let mut search = Search {
        adj: &adj,
        pdeg: &pdeg,
        pedges: &pedges,
        placement: vec![usize::MAX; pattern.len()],
        used: vec![false; host.len()],
    };
    Ok(search.place(0))
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    pdeg: &'a [usize],
    pedges: &'a [(usize, usize)],
    placement: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn place(&mut self, next: usize) -> bool {
        if next == self.placement.len() {
            return self.route(0);
        }
        for v in 0..self.adj.len() {
            if self.used[v] || self.adj[v].len() < self.pdeg[next] {
                continue;
            }
            self.used[v] = true;
            self.placement[next] = v;
            if self.place(next + 1) {
                return true;
            }
            self.used[v] = false;
        }
        false
    }

    /// Routes pattern edge `e` and all later ones.
    fn route(&mut self, e: usize) -> bool {
        if e == self.pedges.len() {
            return true;
        }
        let (a, b) = self.pedges[e];
        let (from, to) = (self.placement[a], self.placement[b]);
        let mut path = Vec::new();
        self.extend_path(from, to, e, &mut path)
    }

    fn extend_path(&mut self, at: usize, target: usize, e: usize, path: &mut Vec<usize>) -> bool {
        for i in 0..self.adj[at].len() {
            let next = self.adj[at][i];
            if next == target {
                // paths have disjoint interiors, so no host edge is shared
                if self.route(e + 1) {
                    return true;
                }
                continue;
            }
            if self.used[next] {
                continue;
            }
            self.used[next] = true;
            path.push(next);
            if self.extend_path(next, target, e, path) {
                return true;
            }
            path.pop();
            self.used[next] = false;
        }
        false
    }
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

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Replaces every edge of `g` by a path of length two.
    fn subdivide(g: &Graph) -> Graph {
        let n = g.n();
        let edges: Vec<_> = g.edges().collect();
        let mut out = Graph::with_vertices(n + edges.len());
        for (i, (u, v)) in edges.into_iter().enumerate() {
            out.add_edge(u, n + i).unwrap();
            out.add_edge(n + i, v).unwrap();
        }
        out
    }

    #[test]
    fn examples() {
        assert!(contains_topological_minor(&complete(4), &complete(4)).unwrap());
        assert!(!contains_topological_minor(&cycle(6), &complete(4)).unwrap());
        assert!(contains_topological_minor(&subdivide(&complete(5)), &complete(5)).unwrap());
        assert!(contains_topological_minor(&cycle(6), &cycle(3)).unwrap());
        assert!(!contains_topological_minor(&subdivide(&complete(4)), &complete(5)).unwrap());
    }

    #[test]
    fn size_guard() {
        assert!(contains_topological_minor(&cycle(21), &cycle(3)).is_err());
        assert!(contains_topological_minor(&cycle(8), &cycle(7)).is_err());
    }

    #[test]
    fn wheel_contains_k4_but_not_k5() {
        // W5: hub 0 with rim 1..=5
        let mut edges: Vec<_> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let w = Graph::from_edges(6, &edges);
        assert!(contains_topological_minor(&w, &complete(4)).unwrap());
        assert!(!contains_topological_minor(&w, &complete(5)).unwrap());
    }
}
