//! Bounded search for replaceable regions.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::treedec::treewidth_at_most;

/// How a region search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// The budget was not exhausted (the visitor may still have stopped early).
    pub complete: bool,
    /// Connected seeds examined.
    pub examined: usize,
}

struct Search<'a, F> {
    g: &'a Graph,
    t: usize,
    d: usize,
    b: usize,
    budget: usize,
    examined: usize,
    seen: HashSet<Vec<Vertex>>,
    visit: F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&VertexSet, &VertexSet) -> ControlFlow<()>,
{
    fn consider(&mut self, region: VertexSet) -> ControlFlow<bool> {
        if region.len() <= self.b || region.len() > 2 * self.b {
            return ControlFlow::Continue(());
        }
        if !self.seen.insert(region.iter().copied().collect()) {
            return ControlFlow::Continue(());
        }
        let boundary: VertexSet =
            region.iter().copied().filter(|&v| self.g.neighbors(v).iter().any(|u| !region.contains(u))).collect();
        if boundary.len() > self.d {
            return ControlFlow::Continue(());
        }
        let interior: VertexSet = region.difference(&boundary).copied().collect();
        if treewidth_at_most(&self.g.induced_unchecked(&interior), self.t)
            && (self.visit)(&region, &boundary).is_break()
        {
            return ControlFlow::Break(true);
        }
        ControlFlow::Continue(())
    }

    // `inside` is connected; every connected superset avoiding `banned` and
    // vertices below `start` is reached exactly once. Both `S` and
    // `S ∪ N(S)` are offered as regions.
    fn grow(
        &mut self,
        inside: &mut VertexSet,
        frontier: Vec<Vertex>,
        banned: &mut VertexSet,
        start: Vertex,
    ) -> ControlFlow<bool> {
        if self.examined >= self.budget {
            return ControlFlow::Break(false);
        }
        self.examined += 1;
        self.consider(inside.clone())?;
        let outer = self.g.open_neighborhood(inside);
        if !outer.is_empty() && inside.len() + outer.len() <= 2 * self.b {
            self.consider(inside.union(&outer).copied().collect())?;
        }
        if inside.len() >= 2 * self.b {
            return ControlFlow::Continue(());
        }
        let mut added = Vec::new();
        for (i, &u) in frontier.iter().enumerate() {
            inside.insert(u);
            let mut next: Vec<Vertex> = frontier[i + 1..].to_vec();
            for &w in self.g.neighbors(u) {
                if w > start
                    && !inside.contains(&w)
                    && !banned.contains(&w)
                    && !next.contains(&w)
                    && !frontier[..i].contains(&w)
                {
                    next.push(w);
                }
            }
            let flow = self.grow(inside, next, banned, start);
            inside.remove(&u);
            if flow.is_break() {
                for v in added {
                    banned.remove(&v);
                }
                return flow;
            }
            banned.insert(u);
            added.push(u);
        }
        for v in added {
            banned.remove(&v);
        }
        ControlFlow::Continue(())
    }
}

/// Visits regions `Y` with `b < |Y| ≤ 2b`, `|∂Y| ≤ d` and
/// `tw(G[Y ∖ ∂Y]) ≤ t`, each once, as `(Y, ∂Y)`.
///
/// Candidates are connected sets `S` and their closures `S ∪ N(S)`, grown
/// from every start vertex. `budget` caps the connected sets examined.
pub fn search_regions(
    g: &Graph,
    t: usize,
    d: usize,
    b: usize,
    budget: usize,
    visit: impl FnMut(&VertexSet, &VertexSet) -> ControlFlow<()>,
) -> SearchOutcome {
    let mut search = Search { g, t, d, b, budget, examined: 0, seen: HashSet::new(), visit };
    if g.n() <= b {
        return SearchOutcome { complete: true, examined: 0 };
    }
    for start in g.vertices() {
        let mut inside: VertexSet = [start].into_iter().collect();
        let frontier: Vec<Vertex> = g.neighbors(start).iter().copied().filter(|&w| w > start).collect();
        let mut banned = VertexSet::new();
        match search.grow(&mut inside, frontier, &mut banned, start) {
            ControlFlow::Break(stopped) => {
                return SearchOutcome { complete: stopped, examined: search.examined };
            }
            ControlFlow::Continue(()) => {}
        }
    }
    SearchOutcome { complete: true, examined: search.examined }
}

/// First region meeting the size, boundary and width conditions.
pub fn find_replaceable_region(g: &Graph, t: usize, d: usize, b: usize) -> Option<VertexSet> {
    let mut found = None;
    search_regions(g, t, d, b, usize::MAX, |y, _| {
        found = Some(y.clone());
        ControlFlow::Break(())
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, path};

    fn check(g: &Graph, y: &VertexSet, t: usize, d: usize, b: usize) {
        let boundary = g.boundary_of(y).unwrap();
        assert!(boundary.len() <= d);
        assert!(y.len() > b && y.len() <= 2 * b);
        let interior: VertexSet = y.difference(&boundary).copied().collect();
        assert!(crate::treedec::exact_treewidth(&g.induced_subgraph(&interior).unwrap()).unwrap() <= t);
    }

    #[test]
    fn long_path_has_region() {
        let g = path(20);
        let y = find_replaceable_region(&g, 1, 3, 4).unwrap();
        check(&g, &y, 1, 3, 4);
        assert!(g.boundary_of(&y).unwrap().len() <= 2);
    }

    #[test]
    fn clique_has_none() {
        assert_eq!(find_replaceable_region(&complete(8), 0, 2, 2), None);
    }

    #[test]
    fn small_graph_has_none() {
        assert_eq!(find_replaceable_region(&path(4), 1, 3, 4), None);
    }

    #[test]
    fn every_visited_region_is_valid_and_distinct() {
        let g = crate::generate::random_outerplanar(14, 0.5, &mut crate::generate::rng(5));
        let mut seen = Vec::new();
        let out = search_regions(&g, 2, 4, 4, usize::MAX, |y, by| {
            assert_eq!(&g.boundary_of(y).unwrap(), by);
            seen.push(y.clone());
            ControlFlow::Continue(())
        });
        assert!(out.complete);
        for y in &seen {
            check(&g, y, 2, 4, 4);
        }
        let distinct: HashSet<_> = seen.iter().collect();
        assert_eq!(distinct.len(), seen.len());
    }
}
