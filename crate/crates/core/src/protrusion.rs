//! Protrusion decompositions built around a treewidth modulator.
//!
//! The center `Y₀` is the modulator plus a few cut bags; the rest of the
//! graph falls into clusters of components sharing a neighbourhood in `Y₀`.
//! Each cluster `Y_i` becomes the b-graph `(G[N[Y_i]], N(Y_i), −)`.

use std::collections::BTreeMap;

use crate::algebra::ProblemAlgebra;
use crate::config::Config;
use crate::error::{domain, Error, Result};
use crate::graph::{BGraph, Graph, Vertex, VertexSet};
use crate::modulator::{
    approx_modulator, fallback_modulator, is_modulator, minimalize, vc_modulator_2approx, ModulatorOutcome,
    ModulatorReport,
};
use crate::treedec::{decompose_bounded, TreeDecomposition};

/// `(α, β, γ)`: center and piece-count bound, rooted piece width, interior width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

#[derive(Clone, Debug)]
pub struct ProtrusionDecomposition {
    pub center: VertexSet,
    pub protrusions: Vec<BGraph>,
    /// Rooted at the protrusion's boundary.
    pub decompositions: Vec<TreeDecomposition>,
    pub params: Params,
    /// Cut bags added to the modulator when building the center.
    pub cuts: usize,
}

impl ProtrusionDecomposition {
    pub fn s(&self) -> usize {
        self.protrusions.len()
    }

    /// Interiors `X_i`.
    pub fn interiors(&self) -> Vec<VertexSet> {
        self.protrusions.iter().map(BGraph::interior).collect()
    }

    /// Center line, one line per protrusion, then the decompositions.
    pub fn render(&self, g: &Graph, name: impl Fn(Vertex) -> String) -> String {
        let center = g.order_by_label(&self.center);
        let index: BTreeMap<Vertex, usize> = center.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut out =
            format!("center {} : {}\n", center.len(), center.iter().map(|&v| name(v)).collect::<Vec<_>>().join(" "));
        out.push_str(&format!(
            "params alpha={} beta={} gamma={} s={} cuts={}\n",
            self.params.alpha,
            self.params.beta,
            self.params.gamma,
            self.s(),
            self.cuts
        ));
        for (i, p) in self.protrusions.iter().enumerate() {
            let b: Vec<String> = p.boundary_order().iter().map(|v| index[v].to_string()).collect();
            let x: Vec<String> = g.order_by_label(&p.interior()).into_iter().map(&name).collect();
            out.push_str(&format!("protrusion {i} boundary [{}] interior [{}]\n", b.join(" "), x.join(" ")));
        }
        for (i, d) in self.decompositions.iter().enumerate() {
            out.push_str(&format!("decomposition {i}\n"));
            out.push_str(&d.render(&name));
        }
        out
    }
}

fn component_decompositions(g: &Graph, x: &VertexSet, t: usize) -> Result<Vec<(VertexSet, TreeDecomposition)>> {
    let rest = g.without(x);
    let mut out = Vec::new();
    for comp in rest.connected_components() {
        let d = decompose_bounded(&rest.induced_unchecked(&comp), t)
            .map_err(|_| domain(format!("not a treewidth-{t} modulator")))?;
        out.push((comp, d));
    }
    Ok(out)
}

// post-order over `d` rooted at node 0
fn post_order(d: &TreeDecomposition) -> Vec<(usize, Vec<usize>)> {
    let adj = d.adjacency();
    let mut order = Vec::with_capacity(d.len());
    let mut stack = vec![(0usize, usize::MAX, false)];
    while let Some((x, parent, done)) = stack.pop() {
        let children: Vec<usize> = adj[x].iter().copied().filter(|&y| y != parent).collect();
        if done {
            order.push((x, children));
            continue;
        }
        stack.push((x, parent, true));
        for &y in children.iter().rev() {
            stack.push((y, x, false));
        }
    }
    order
}

fn cut_component(g: &Graph, d: &TreeDecomposition, r: usize, y0: &mut VertexSet) -> usize {
    let mut cuts = 0;
    let mut open: Vec<VertexSet> = vec![VertexSet::new(); d.len()];
    for (q, children) in post_order(d) {
        let mut u: VertexSet = d.bags()[q].iter().copied().filter(|v| !y0.contains(v)).collect();
        for c in children {
            u.extend(std::mem::take(&mut open[c]).into_iter().filter(|v| !y0.contains(v)));
        }
        let seen = g.open_neighborhood(&u).intersection(y0).count();
        if seen >= r {
            y0.extend(d.bags()[q].iter().copied());
            cuts += 1;
        } else {
            open[q] = u;
        }
    }
    cuts
}

/// `Y₀ ⊇ x` such that every component `Z` of `g - Y₀` has
/// `|N(Z) ∩ x| < r` and `|N(Z) ∩ Y₀| < r + t + 1`, and the number of cut
/// bags.
///
/// Each component of `g - x` is decomposed with width `t` and walked
/// bottom-up; a bag is cut (moved into `Y₀`) at the lowest node whose
/// uncut subtree sees at least `r` vertices of the current `Y₀`.
pub fn build_y0(g: &Graph, x: &VertexSet, r: usize, t: usize) -> Result<(VertexSet, usize)> {
    if r == 0 {
        return Err(domain("r must be positive"));
    }
    if !x.iter().all(|v| g.contains(*v)) {
        return Err(domain("modulator has vertices outside the graph"));
    }
    let mut y0 = x.clone();
    let mut cuts = 0;
    for (_, d) in component_decompositions(g, x, t)? {
        cuts += cut_component(g, &d, r, &mut y0);
    }
    Ok((y0, cuts))
}

/// Components of `g - y0` grouped by their neighbourhood in `y0`, ordered
/// by smallest label.
pub fn clusters(g: &Graph, y0: &VertexSet) -> Vec<VertexSet> {
    let rest = g.without(y0);
    let mut groups: BTreeMap<Vec<Vertex>, VertexSet> = BTreeMap::new();
    for comp in rest.connected_components() {
        let key = g.order_by_label(&g.open_neighborhood(&comp));
        groups.entry(key).or_default().extend(comp);
    }
    let mut out: Vec<VertexSet> = groups.into_values().collect();
    out.sort_by_key(|c| c.iter().map(|&v| g.label(v)).min());
    out
}

// `d` restricted to `keep`, with leaves that became empty pruned
fn restrict(d: &TreeDecomposition, keep: &VertexSet) -> TreeDecomposition {
    let bags: Vec<VertexSet> = d.bags().iter().map(|b| b.intersection(keep).copied().collect()).collect();
    let adj = d.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; bags.len()];
    let mut stack: Vec<usize> = (0..bags.len()).filter(|&i| bags[i].is_empty() && degree[i] <= 1).collect();
    let mut remaining = bags.len();
    while let Some(i) = stack.pop() {
        if !alive[i] || remaining == 1 {
            continue;
        }
        alive[i] = false;
        remaining -= 1;
        for &j in &adj[i] {
            if alive[j] {
                degree[j] -= 1;
                if degree[j] <= 1 && bags[j].is_empty() {
                    stack.push(j);
                }
            }
        }
    }
    let index: Vec<Option<usize>> = alive
        .iter()
        .scan(0, |next, &a| {
            Some(a.then(|| {
                *next += 1;
                *next - 1
            }))
        })
        .collect();
    let new_bags = bags.into_iter().zip(&alive).filter(|(_, a)| **a).map(|(b, _)| b).collect();
    let edges = d.tree_edges().iter().filter_map(|&(a, b)| Some((index[a]?, index[b]?))).collect();
    TreeDecomposition::new(new_bags, edges)
}

/// Protrusion decomposition around the treewidth-`t` modulator `x`.
pub fn protrusion_decomposition(g: &Graph, x: &VertexSet, t: usize, r: usize) -> Result<ProtrusionDecomposition> {
    if r == 0 {
        return Err(domain("r must be positive"));
    }
    let parts = component_decompositions(g, x, t)?;
    let mut y0 = x.clone();
    let mut cuts = 0;
    for (_, d) in &parts {
        cuts += cut_component(g, d, r, &mut y0);
    }
    let mut protrusions = Vec::new();
    let mut decompositions = Vec::new();
    let mut beta = 0;
    let mut gamma = 0;
    for cluster in clusters(g, &y0) {
        let boundary = g.open_neighborhood(&cluster);
        let pieces: Vec<TreeDecomposition> =
            parts.iter().filter(|(comp, _)| !comp.is_disjoint(&cluster)).map(|(_, d)| restrict(d, &cluster)).collect();
        let inner = TreeDecomposition::disjoint_union(pieces);
        gamma = gamma.max(inner.width()?);
        let rooted = inner.lift_with_root(&boundary);
        beta = beta.max(rooted.width()?);
        let closed: VertexSet = cluster.union(&boundary).copied().collect();
        protrusions.push(BGraph::new(g.induced_unchecked(&closed), boundary)?);
        decompositions.push(rooted);
    }
    let alpha = protrusions.len().max(y0.len());
    Ok(ProtrusionDecomposition { center: y0, protrusions, decompositions, params: Params { alpha, beta, gamma }, cuts })
}

/// Outcome of each check made by [`validate_protrusion_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// 1: `s ≤ α`.
    pub piece_count: bool,
    /// 2: every supplied decomposition is valid with width `≤ β`.
    pub rooted_width: bool,
    /// 3: every `G_i` is a subgraph of `G`.
    pub subgraph: bool,
    /// 4: interiors pairwise disjoint.
    pub disjoint: bool,
    /// 5: `|V(G) ∖ ⋃ X_i| ≤ α`.
    pub center_size: bool,
    /// 6: `tw(G[X_i]) ≤ γ`, witnessed by the supplied decomposition.
    pub interior_width: bool,
    /// Root bags equal the boundaries.
    pub rooted: bool,
    /// `center = V(G) ∖ ⋃ X_i`, `B_i ⊆ center`, and `G_i` holds every edge
    /// of `G` at `X_i`.
    pub separated: bool,
    /// Largest supplied decomposition width.
    pub max_width: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.piece_count
            && self.rooted_width
            && self.subgraph
            && self.disjoint
            && self.center_size
            && self.interior_width
            && self.rooted
            && self.separated
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.piece_count, "1 piece count"),
            (self.rooted_width, "2 rooted width"),
            (self.subgraph, "3 subgraph"),
            (self.disjoint, "4 disjoint interiors"),
            (self.center_size, "5 center size"),
            (self.interior_width, "6 interior width"),
            (self.rooted, "rooted at boundary"),
            (self.separated, "separation"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

fn is_subgraph(h: &Graph, g: &Graph) -> bool {
    h.vertices().all(|v| g.contains(v) && g.label(v) == h.label(v)) && h.edges().all(|(u, v)| g.has_edge(u, v))
}

/// Checks conditions 1 to 6 against `pd.params`, plus rootedness and
/// separation.
pub fn validate_protrusion_decomposition(g: &Graph, pd: &ProtrusionDecomposition) -> ValidationReport {
    let Params { alpha, beta, gamma } = pd.params;
    let interiors = pd.interiors();
    let mut union = VertexSet::new();
    let mut disjoint = true;
    for x in &interiors {
        disjoint &= union.is_disjoint(x);
        union.extend(x.iter().copied());
    }
    let outside: VertexSet = g.vertex_set().difference(&union).copied().collect();
    let subgraph = pd.protrusions.iter().all(|p| is_subgraph(p.graph(), g));
    let lengths_match = pd.decompositions.len() == pd.protrusions.len();

    let mut rooted_width = lengths_match;
    let mut interior_width = lengths_match;
    let mut rooted = lengths_match;
    let mut max_width = 0;
    for (p, d) in pd.protrusions.iter().zip(&pd.decompositions) {
        let valid = d.validate(p.graph());
        let w = d.width().unwrap_or(usize::MAX);
        max_width = max_width.max(w);
        rooted_width &= valid && w <= beta;
        rooted &= d.validate_rooted(p.graph(), p.boundary());
        let x = p.interior();
        let inner = TreeDecomposition::new(
            d.bags().iter().map(|b| b.intersection(&x).copied().collect()).collect(),
            d.tree_edges().to_vec(),
        );
        let gx = p.graph().induced_unchecked(&x);
        interior_width &= inner.validate(&gx) && inner.width().is_ok_and(|iw| iw <= gamma);
    }

    let separated = pd.center == outside
        && pd.protrusions.iter().zip(&interiors).all(|(p, x)| {
            p.boundary().is_subset(&pd.center)
                && g.open_neighborhood(x).is_subset(p.boundary())
                && x.iter().all(|&v| g.neighbors(v).iter().all(|&u| p.graph().has_edge(v, u)))
        });

    ValidationReport {
        piece_count: pd.s() <= alpha,
        rooted_width,
        subgraph,
        disjoint,
        center_size: outside.len() <= alpha,
        interior_width,
        rooted,
        separated,
        max_width,
    }
}

/// Where the pipeline's modulator came from.
#[derive(Clone, Debug)]
pub enum ModulatorSource {
    /// Region replacement with the given budget `k' = multiplier · k`.
    Approximated {
        budget: usize,
        report: Box<ModulatorReport>,
    },
    /// Computed from the graph alone, with no size promise.
    Structural,
    External,
}

#[derive(Clone, Debug)]
pub struct PipelineDecomposition {
    pub decomposition: ProtrusionDecomposition,
    pub modulator: VertexSet,
    pub source: ModulatorSource,
}

/// The instance has no solution of size at most `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullReport {
    /// Certified lower bound on the smallest treewidth modulator.
    pub lower_bound: usize,
    /// Budget the bound exceeds.
    pub budget: usize,
    pub search_complete: bool,
}

#[derive(Clone, Debug)]
pub enum PipelineOutcome {
    Decomposition(Box<PipelineDecomposition>),
    Null(NullReport),
}

/// Modulator then protrusion decomposition for counting under `alg`.
///
/// When `alg` bounds solutions as modulators (`modulator_multiplier`), the
/// modulator is approximated with budget `multiplier · k` and a certified
/// failure yields [`PipelineOutcome::Null`]. Other algebras use `external`
/// if given, else a modulator computed from the graph alone (unless the
/// algebra demands an external one).
pub fn full_pipeline_decomposition<A: ProblemAlgebra>(
    g: &Graph,
    k: usize,
    alg: &A,
    cfg: &Config,
    external: Option<&VertexSet>,
) -> Result<PipelineOutcome> {
    cfg.validate()?;
    let t = cfg.t;
    let (modulator, source) = if let Some(x) = external {
        if !x.iter().all(|v| g.contains(*v)) || !is_modulator(g, x, t) {
            return Err(domain(format!("supplied set is not a treewidth-{t} modulator")));
        }
        (x.clone(), ModulatorSource::External)
    } else if let Some(m) = alg.modulator_multiplier() {
        let budget = m * k;
        match approx_modulator(g, budget, t, cfg)? {
            ModulatorOutcome::Found(report) => {
                (report.modulator.clone(), ModulatorSource::Approximated { budget, report: Box::new(report) })
            }
            ModulatorOutcome::NoSmallModulator { lower_bound, search_complete } => {
                return Ok(PipelineOutcome::Null(NullReport { lower_bound, budget, search_complete }));
            }
        }
    } else if alg.needs_external_modulator() {
        return Err(Error::Unsupported(format!("problem {} needs an external modulator", alg.name())));
    } else {
        let a = if t == 0 { vc_modulator_2approx(g) } else { fallback_modulator(g, t) };
        (minimalize(g, &a, t), ModulatorSource::Structural)
    };
    let decomposition = protrusion_decomposition(g, &modulator, t, cfg.r)?;
    Ok(PipelineOutcome::Decomposition(Box::new(PipelineDecomposition { decomposition, modulator, source })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ds_algebra, is_algebra, vc_algebra};
    use crate::generate::{complete, cycle, edgeless, path, star};

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn y0_examples() {
        let g = path(5);
        assert_eq!(build_y0(&g, &g.vertex_set(), 2, 1).unwrap(), (g.vertex_set(), 0));
        let s = star(9);
        assert_eq!(build_y0(&s, &set(&[0]), 2, 0).unwrap(), (set(&[0]), 0));
        assert!(build_y0(&cycle(4), &set(&[]), 2, 0).is_err());
    }

    #[test]
    fn y0_meets_neighbourhood_bounds() {
        let mut r = crate::generate::rng(3);
        for _ in 0..20 {
            let g = crate::generate::random_outerplanar(20, 0.6, &mut r);
            let x = VertexSet::new();
            for (rr, t) in [(2, 2), (3, 2), (4, 2)] {
                let Ok((y0, _)) = build_y0(&g, &x, rr, t) else { continue };
                for z in g.without(&y0).connected_components() {
                    let nz = g.open_neighborhood(&z);
                    assert!(nz.intersection(&x).count() < rr);
                    assert!(nz.len() < rr + t + 1);
                }
            }
        }
    }

    #[test]
    fn cluster_examples() {
        assert_eq!(clusters(&path(3), &set(&[1])), vec![set(&[0, 2])]);
        assert_eq!(clusters(&cycle(4), &set(&[0, 2])), vec![set(&[1, 3])]);
        assert!(clusters(&path(3), &set(&[0, 1, 2])).is_empty());
    }

    #[test]
    fn c4_decomposition() {
        let g = cycle(4);
        let pd = protrusion_decomposition(&g, &set(&[0, 2]), 0, 4).unwrap();
        assert_eq!(pd.center, set(&[0, 2]));
        assert_eq!(pd.s(), 1);
        assert_eq!(pd.protrusions[0].boundary(), &set(&[0, 2]));
        assert_eq!(pd.protrusions[0].interior(), set(&[1, 3]));
        assert!(validate_protrusion_decomposition(&g, &pd).is_valid());
    }

    #[test]
    fn edgeless_decomposition() {
        let g = edgeless(4);
        let pd = protrusion_decomposition(&g, &set(&[]), 0, 4).unwrap();
        assert!(pd.center.is_empty());
        assert!(validate_protrusion_decomposition(&g, &pd).is_valid());
    }

    #[test]
    fn validator_flags_tampering() {
        let g = cycle(6);
        let pd = protrusion_decomposition(&g, &set(&[0, 3]), 1, 4).unwrap();
        assert!(validate_protrusion_decomposition(&g, &pd).is_valid());

        let mut overlap = pd.clone();
        overlap.protrusions.push(overlap.protrusions[0].clone());
        overlap.decompositions.push(overlap.decompositions[0].clone());
        overlap.params.alpha += 1;
        let rep = validate_protrusion_decomposition(&g, &overlap);
        assert!(!rep.disjoint && !rep.is_valid());

        let mut small = pd.clone();
        small.params.alpha = pd.center.len() - 1;
        small.params.alpha = small.params.alpha.max(pd.s());
        let rep = validate_protrusion_decomposition(&g, &small);
        assert!(!rep.center_size && rep.disjoint);
    }

    #[test]
    fn random_graphs_validate() {
        let mut r = crate::generate::rng(8);
        for i in 0..30 {
            let g = crate::generate::random_sparse(30, 30 + i, &mut r);
            for t in 0..3 {
                let x = minimalize(&g, &fallback_modulator(&g, t), t);
                let pd = protrusion_decomposition(&g, &x, t, 4).unwrap();
                let rep = validate_protrusion_decomposition(&g, &pd);
                assert!(rep.is_valid(), "{:?}", rep.failures());
                assert!(rep.max_width <= 3 * t + 4 + 1);
            }
        }
    }

    #[test]
    fn pipeline_examples() {
        let cfg = Config::default();
        let PipelineOutcome::Decomposition(p) =
            full_pipeline_decomposition(&cycle(3), 2, &vc_algebra(), &cfg, None).unwrap()
        else {
            panic!("triangle has a cover of size 2")
        };
        assert!(p.decomposition.center.len() <= cfg.c * 2);
        assert!(validate_protrusion_decomposition(&cycle(3), &p.decomposition).is_valid());

        let strict = Config { c: 1, ..cfg.clone() };
        assert!(matches!(
            full_pipeline_decomposition(&complete(8), 1, &vc_algebra(), &strict, None).unwrap(),
            PipelineOutcome::Null(_)
        ));

        let e = edgeless(6);
        let PipelineOutcome::Decomposition(p) = full_pipeline_decomposition(&e, 0, &vc_algebra(), &cfg, None).unwrap()
        else {
            panic!("edgeless graph is its own solution")
        };
        assert!(p.decomposition.center.is_empty());

        assert!(matches!(
            full_pipeline_decomposition(&path(4), 1, &ds_algebra(), &cfg, None),
            Err(Error::Unsupported(_))
        ));
        assert!(full_pipeline_decomposition(&path(4), 2, &is_algebra(), &cfg, None).is_ok());
        assert!(full_pipeline_decomposition(&path(4), 1, &ds_algebra(), &cfg, Some(&set(&[0]))).is_err());
        assert!(full_pipeline_decomposition(&path(4), 1, &ds_algebra(), &cfg, Some(&set(&[1, 2]))).is_ok());
    }
}
