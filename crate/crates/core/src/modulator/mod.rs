//! Treewidth-modulator approximation by iterated region replacement.
//!
//! While the working graph has more than `c·k` vertices, a region `Y` with
//! a small boundary and low-width interior is typed; if the catalog holds a
//! strictly smaller b-graph of the same type, `Y` is swapped for it. A
//! modulator of the final graph is lifted back through the recorded steps.

mod bounds;
mod region;
mod typing;

pub use bounds::{fallback_modulator, is_modulator, minimalize, modulator_lower_bound, vc_modulator_2approx};
pub use region::{find_replaceable_region, search_regions, SearchOutcome};
pub use typing::{type_vector, RegionTyping, TwState, TwTyping, TypeVector, VcTyping};

use std::collections::HashMap;
use std::ops::ControlFlow;

use itertools::Itertools;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{BGraph, BStructure, Graph, Label, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CatalogKey<S> {
    boundary_size: usize,
    boundary_edges: Vec<(usize, usize)>,
    types: TypeVector<S>,
}

/// Smallest b-graph seen per (boundary graph, type vector).
#[derive(Clone, Debug)]
pub struct Catalog<S> {
    entries: HashMap<CatalogKey<S>, BGraph>,
}

impl<S: Clone + Eq + std::hash::Hash + Ord> Catalog<S> {
    pub fn new() -> Self {
        Catalog { entries: HashMap::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Records `bg` under its type; returns a stored representative that is
    /// strictly smaller, if any.
    fn offer(&mut self, bg: &BGraph, types: TypeVector<S>) -> Option<BGraph> {
        let key = CatalogKey { boundary_size: bg.boundary().len(), boundary_edges: bg.boundary_edges(), types };
        match self.entries.get(&key) {
            Some(rep) if rep.graph().n() < bg.graph().n() => Some(rep.clone()),
            Some(_) => None,
            None => {
                self.entries.insert(key, bg.clone());
                None
            }
        }
    }
}

impl<S: Clone + Eq + std::hash::Hash + Ord> Default for Catalog<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// One replacement: `original` (`G_i[Y]`, `∂Y`) became `replacement`
/// (`G_{i+1}[V']`, `∂Y`).
#[derive(Clone, Debug)]
pub struct ReplacementStep {
    pub original: BGraph,
    pub replacement: BGraph,
    /// `G_{i+1}`.
    pub graph_after: Graph,
}

/// Replacement history, replayed backwards when lifting.
#[derive(Clone, Debug)]
pub struct ReplacementTrace {
    pub t: usize,
    pub d: usize,
    pub steps: Vec<ReplacementStep>,
}

impl ReplacementTrace {
    pub fn new(t: usize, d: usize) -> Self {
        ReplacementTrace { t, d, steps: Vec::new() }
    }
}

/// Successful modulator run.
#[derive(Clone, Debug)]
pub struct ModulatorReport {
    pub modulator: VertexSet,
    pub replacements: usize,
    pub final_graph_size: usize,
    pub catalog_size: usize,
    /// The loop stalled and the direct fallback modulator was used.
    pub fallback_used: bool,
    pub trace: ReplacementTrace,
}

#[derive(Clone, Debug)]
pub enum ModulatorOutcome {
    Found(ModulatorReport),
    /// No treewidth-`t` modulator of size at most `k` exists.
    NoSmallModulator {
        lower_bound: usize,
        /// The last region search ran to completion.
        search_complete: bool,
    },
}

fn swap_in(
    work: &mut Graph,
    region: &VertexSet,
    boundary: &VertexSet,
    rep: &BGraph,
    next_id: &mut Vertex,
    next_label: &mut Label,
) -> Result<VertexSet> {
    let target = work.order_by_label(boundary);
    let mut image: HashMap<Vertex, Vertex> = rep.boundary_order().into_iter().zip(target.iter().copied()).collect();
    for v in region.difference(boundary) {
        work.remove_vertex(*v);
    }
    let mut part = boundary.clone();
    for v in rep.graph().vertices_by_label() {
        if image.contains_key(&v) {
            continue;
        }
        work.add_vertex(*next_id, *next_label)?;
        image.insert(v, *next_id);
        part.insert(*next_id);
        *next_id += 1;
        *next_label += 1;
    }
    for (u, v) in rep.graph().edges() {
        if rep.boundary().contains(&u) && rep.boundary().contains(&v) {
            continue;
        }
        work.add_edge(image[&u], image[&v])?;
    }
    Ok(part)
}

/// Treewidth-`t` modulator of size at most `cfg.c · k`, or a certified
/// report that none of size `k` exists.
///
/// Errors with [`Error::Stalled`] when replacement stops shrinking the
/// graph, no certificate rules out size `k`, and the fallback modulator is
/// too large.
pub fn approx_modulator(g: &Graph, k: usize, t: usize, cfg: &Config) -> Result<ModulatorOutcome> {
    if t == 0 {
        run(g, k, &VcTyping, cfg)
    } else {
        run(g, k, &TwTyping { t }, cfg)
    }
}

fn run<T: RegionTyping>(g: &Graph, k: usize, typing: &T, cfg: &Config) -> Result<ModulatorOutcome> {
    cfg.validate()?;
    let t = typing.t();
    let limit = cfg.c * k;
    let mut work = g.clone();
    let mut trace = ReplacementTrace::new(t, cfg.d);
    let mut catalog: Catalog<T::State> = Catalog::new();
    let mut next_id = g.max_vertex().map_or(0, |v| v + 1);
    let mut next_label = g.max_label().map_or(0, |l| l + 1);
    let mut stalled = None;

    while work.n() > limit {
        let mut chosen: Option<(VertexSet, VertexSet, BGraph)> = None;
        let mut failure: Option<Error> = None;
        let outcome = search_regions(&work, t, cfg.d, cfg.b, cfg.region_budget, |y, by| {
            let bg = match BGraph::new(work.induced_unchecked(y), by.clone()) {
                Ok(bg) => bg,
                Err(e) => {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            };
            match typing.type_vector(&bg, cfg.d) {
                Ok(types) => match catalog.offer(&bg, types) {
                    Some(rep) => {
                        chosen = Some((y.clone(), by.clone(), rep));
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                },
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let Some((region, boundary, rep)) = chosen else {
            stalled = Some(outcome.complete);
            break;
        };
        let original = BGraph::new(work.induced_unchecked(&region), boundary.clone())?;
        let part = swap_in(&mut work, &region, &boundary, &rep, &mut next_id, &mut next_label)?;
        let replacement = BGraph::new(work.induced_unchecked(&part), boundary)?;
        trace.steps.push(ReplacementStep { original, replacement, graph_after: work.clone() });
    }

    let (modulator, fallback_used) = match stalled {
        Some(search_complete) => {
            let lower_bound = modulator_lower_bound(g, t);
            if lower_bound > k {
                return Ok(ModulatorOutcome::NoSmallModulator { lower_bound, search_complete });
            }
            let a = minimalize(g, &fallback_modulator(g, t), t);
            if a.len() > limit {
                return Err(Error::Stalled(format!(
                    "no shrinking replacement at {} vertices; fallback modulator has {} > {limit} vertices",
                    work.n(),
                    a.len()
                )));
            }
            (a, true)
        }
        None => {
            let final_mod = fallback_modulator(&work, t);
            let lifted = lift_with(&trace, &final_mod, typing)?;
            (minimalize(g, &lifted, t), false)
        }
    };
    if !is_modulator(g, &modulator, t) {
        return Err(Error::Internal("lifted set is not a treewidth modulator".into()));
    }
    Ok(ModulatorOutcome::Found(ModulatorReport {
        modulator,
        replacements: trace.steps.len(),
        final_graph_size: work.n(),
        catalog_size: catalog.len(),
        fallback_used,
        trace,
    }))
}

/// Maps a modulator of the last graph in `trace` back to the original.
pub fn lift_solution(trace: &ReplacementTrace, a: &VertexSet) -> Result<VertexSet> {
    if trace.t == 0 {
        lift_with(trace, a, &VcTyping)
    } else {
        lift_with(trace, a, &TwTyping { t: trace.t })
    }
}

fn lift_with<T: RegionTyping>(trace: &ReplacementTrace, a: &VertexSet, typing: &T) -> Result<VertexSet> {
    let mut a = a.clone();
    for step in trace.steps.iter().rev() {
        let part = step.replacement.graph().vertex_set();
        let boundary = step.replacement.boundary();
        if a.intersection(&part).count() > trace.d {
            // the interior is width-bounded and cut off by the boundary
            a.retain(|v| !part.contains(v));
            a.extend(boundary.iter().copied());
        }
        let inside: VertexSet = a.intersection(&part).copied().collect();
        let target = typing.state(&step.replacement.annotate(inside.clone())?)?;
        let fixed: VertexSet = inside.intersection(boundary).copied().collect();
        let interior: Vec<Vertex> = step.original.interior().into_iter().collect();
        let need = inside.len() - fixed.len();
        let mut found = None;
        for combo in interior.iter().copied().combinations(need) {
            let mut l = fixed.clone();
            l.extend(combo);
            let x = BStructure::new(step.original.graph().clone(), boundary.clone(), l.clone())?;
            if typing.state(&x)? == target {
                found = Some(l);
                break;
            }
        }
        let l = found.ok_or_else(|| Error::Internal("no annotation of the original region matches".into()))?;
        a.retain(|v| !part.contains(v));
        a.extend(l);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, path, star};
    use crate::oracle::brute_min_modulator;

    fn found(o: ModulatorOutcome) -> ModulatorReport {
        match o {
            ModulatorOutcome::Found(r) => r,
            other => panic!("expected a modulator, got {other:?}"),
        }
    }

    #[test]
    fn path_forest_modulator_is_empty() {
        let g = path(30);
        let r = found(approx_modulator(&g, 0, 1, &Config::default()).unwrap());
        assert!(r.modulator.is_empty());
        assert!(crate::treedec::decompose_bounded(&g, 1).is_ok());
    }

    #[test]
    fn path_shrinks_by_replacement() {
        let g = path(40);
        let cfg = Config { b: 5, d: 3, ..Config::default() };
        let r = found(approx_modulator(&g, 1, 1, &cfg).unwrap());
        assert!(r.replacements > 0);
        assert!(r.final_graph_size <= 4 || r.fallback_used);
        assert!(is_modulator(&g, &r.modulator, 1));
    }

    #[test]
    fn star_vertex_cover() {
        let g = star(9);
        let r = found(approx_modulator(&g, 1, 0, &Config::default()).unwrap());
        assert!(is_modulator(&g, &r.modulator, 0));
        assert!(r.modulator.len() <= 4);
        assert_eq!(brute_min_modulator(&g, 0).unwrap(), 1);
    }

    #[test]
    fn clique_chain_has_no_small_cover() {
        // two K8 sharing a vertex
        let mut g = complete(8);
        for v in 8..15 {
            g.add_vertex(v, v as u64).unwrap();
        }
        let second: Vec<Vertex> = [7].into_iter().chain(8..15).collect();
        for (i, &u) in second.iter().enumerate() {
            for &w in &second[i + 1..] {
                g.add_edge(u, w).unwrap();
            }
        }
        let cfg = Config { c: 2, ..Config::default() };
        match approx_modulator(&g, 1, 0, &cfg).unwrap() {
            ModulatorOutcome::NoSmallModulator { lower_bound, .. } => assert!(lower_bound > 1),
            other => panic!("expected no small modulator, got {other:?}"),
        }
    }

    #[test]
    fn empty_trace_lifts_identically() {
        let trace = ReplacementTrace::new(0, 5);
        let a: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(lift_solution(&trace, &a).unwrap(), a);
    }

    #[test]
    fn replacement_keeps_optimum() {
        // brooms: a spine of hubs, hub i carrying 4 + i pendant leaves
        let mut steps = 0;
        for hubs in 3..6 {
            let mut edges = Vec::new();
            let mut next = hubs;
            for h in 0..hubs {
                if h > 0 {
                    edges.push((h - 1, h));
                }
                for _ in 0..4 + h {
                    edges.push((h, next));
                    next += 1;
                }
            }
            let g = Graph::from_edges(next, &edges);
            let k = brute_vc_large(&g);
            let cfg = Config { b: 4, d: 3, c: 2, ..Config::default() };
            let rep = found(approx_modulator(&g, k, 0, &cfg).unwrap_or_else(|e| panic!("{e}")));
            let mut prev = brute_vc_large(&g);
            for step in &rep.trace.steps {
                let now = brute_vc_large(&step.graph_after);
                assert_eq!(prev, now);
                prev = now;
            }
            assert!(rep.modulator.len() <= 2 * k);
            assert!(is_modulator(&g, &rep.modulator, 0));
            steps += rep.trace.steps.len();
        }
        assert!(steps > 0);
    }

    // minimum vertex cover of a forest by leaf stripping
    fn brute_vc_large(g: &Graph) -> usize {
        let mut h = g.clone();
        let mut size = 0;
        loop {
            let Some(leaf) = h.vertices().find(|&v| h.degree(v) == 1) else { break };
            let parent = *h.neighbors(leaf).iter().next().unwrap();
            h.remove_vertex(parent);
            size += 1;
        }
        assert!(h.is_edgeless(), "input must be a forest");
        size
    }
}
