use compactor_core::config::Config;
use compactor_core::generate::{
    complete, corpus, cycle, edgeless, path, random_outerplanar, random_partial_2tree, random_sparse, random_tree, rng,
    star,
};
use compactor_core::modulator::{
    approx_modulator, fallback_modulator, is_modulator, lift_solution, vc_modulator_2approx, ModulatorOutcome,
    ModulatorReport, ReplacementTrace,
};
use compactor_core::oracle::{brute_min_modulator, brute_treewidth};
use compactor_core::protrusion::{build_y0, clusters, protrusion_decomposition, validate_protrusion_decomposition};
use compactor_core::treedec::{
    decompose_bounded, elimination_width, exact_treewidth, heuristic_decomposition, make_nice, TreeDecomposition,
};
use compactor_core::{Graph, Vertex, VertexSet};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

fn set(items: &[Vertex]) -> VertexSet {
    items.iter().copied().collect()
}

#[test]
fn exact_treewidth_matches_oracle_and_all_orders() {
    for sample in corpus(31, 150, 8) {
        let g = &sample.graph;
        let tw = exact_treewidth(g).unwrap();
        assert_eq!(tw, brute_treewidth(g).unwrap(), "{}", sample.name);
        if g.n() <= 7 {
            let vs: Vec<Vertex> = g.vertices().collect();
            let best = vs.iter().copied().permutations(vs.len()).map(|o| elimination_width(g, &o)).min().unwrap_or(0);
            assert_eq!(tw, best, "{}", sample.name);
        }
    }
    assert_eq!(exact_treewidth(&cycle(4)).unwrap(), 2);
    assert_eq!(exact_treewidth(&complete(4)).unwrap(), 3);
}

#[test]
fn bounded_decomposition_at_exact_width() {
    for sample in corpus(32, 120, 14) {
        let g = &sample.graph;
        let tw = exact_treewidth(g).unwrap();
        let d = decompose_bounded(g, tw).unwrap_or_else(|_| panic!("{}", sample.name));
        assert!(d.validate(g));
        assert!(d.width().unwrap() <= tw);
        if tw > 0 {
            assert!(decompose_bounded(g, tw - 1).is_err(), "{}", sample.name);
        }
    }
    let mut r = rng(33);
    for _ in 0..20 {
        let g = random_partial_2tree(10, 0.7, &mut r);
        let d = decompose_bounded(&g, 2).unwrap();
        assert!(d.validate(&g) && d.width().unwrap() <= 2);
        assert!(exact_treewidth(&g).unwrap() <= 2);
    }
    assert!(decompose_bounded(&complete(4), 2).is_err());
}

#[test]
fn nice_forms_validate() {
    let mut r = rng(34);
    for sample in corpus(34, 120, 14) {
        let g = &sample.graph;
        let d = heuristic_decomposition(g);
        let bag: Vec<Vertex> = d.bags().choose(&mut r).map(|b| b.iter().copied().collect()).unwrap_or_default();
        let size = r.gen_range(0..=bag.len());
        let root: VertexSet = bag.choose_multiple(&mut r, size).copied().collect();
        let nd = make_nice(&d, g, &root).unwrap();
        assert!(nd.validate(g), "{}", sample.name);
        assert!(nd.check_shape().is_ok());
        assert_eq!(nd.root_bag(), g.order_by_label(&root).as_slice());
        assert!(nd.width() <= d.width().unwrap_or(0));
        let again = make_nice(&nd.to_tree_decomposition(), g, &root).unwrap();
        assert!(again.validate(g) && again.check_shape().is_ok());
    }
    let p3 = path(3);
    let d = TreeDecomposition::new(vec![set(&[0, 1]), set(&[1, 2])], vec![(0, 1)]);
    let nd = make_nice(&d, &p3, &set(&[1])).unwrap();
    assert!(nd.validate(&p3) && nd.width() == 1);
    assert!(make_nice(&d, &p3, &set(&[0, 2])).is_err());
}

fn found(o: ModulatorOutcome) -> ModulatorReport {
    match o {
        ModulatorOutcome::Found(r) => r,
        other => panic!("expected a modulator, got {other:?}"),
    }
}

#[test]
fn modulator_examples() {
    let g = path(30);
    let r = found(approx_modulator(&g, 0, 1, &Config::default()).unwrap());
    assert!(r.modulator.is_empty());
    assert!(decompose_bounded(&g.without(&r.modulator), 1).is_ok());

    let g = star(9);
    let cfg = Config::default();
    let r = found(approx_modulator(&g, 1, 0, &cfg).unwrap());
    assert!(r.modulator.len() <= cfg.c);
    assert!(decompose_bounded(&g.without(&r.modulator), 0).is_ok());

    // two K8 glued at a vertex; minimum cover 13
    let mut g = complete(8);
    for v in 8..15 {
        g.add_vertex(v, v as u64).unwrap();
    }
    let second: Vec<Vertex> = [7].into_iter().chain(8..15).collect();
    for (u, w) in second.iter().copied().tuple_combinations() {
        g.add_edge(u, w).unwrap();
    }
    let cfg = Config { c: 2, ..Config::default() };
    assert!(matches!(approx_modulator(&g, 1, 0, &cfg).unwrap(), ModulatorOutcome::NoSmallModulator { .. }));

    assert!(vc_modulator_2approx(&edgeless(6)).is_empty());
    let c4 = vc_modulator_2approx(&cycle(4));
    assert!(c4.len() <= 4 && cycle(4).is_vertex_cover(&c4));
    assert!(vc_modulator_2approx(&path(3)).len() <= 2);
}

#[test]
fn modulators_are_valid_and_within_ratio() {
    for t in 0..=1 {
        let cfg = Config { t, ..Config::default() };
        for sample in corpus(35, 60, 14) {
            let g = &sample.graph;
            let opt = brute_min_modulator(g, t).unwrap();
            for k in 0..=4 {
                match approx_modulator(g, k, t, &cfg).unwrap() {
                    ModulatorOutcome::Found(r) => {
                        assert!(decompose_bounded(&g.without(&r.modulator), t).is_ok(), "{}", sample.name);
                        assert!(r.modulator.len() <= cfg.c * k.max(opt), "{} k={k}", sample.name);
                        assert!(r.trace.steps.len() <= g.n());
                    }
                    ModulatorOutcome::NoSmallModulator { lower_bound, .. } => {
                        assert!(opt > k && lower_bound <= opt, "{} k={k}", sample.name);
                    }
                }
            }
        }
    }
}

fn traces(t: usize, seed: u64) -> Vec<(Graph, ReplacementTrace)> {
    let cfg = Config { t, b: 3, d: 2, c: 1, ..Config::default() };
    let mut r = rng(seed);
    let mut out = Vec::new();
    for i in 0..80 {
        let n = r.gen_range(8..=14);
        let g = match i % 4 {
            0 => random_outerplanar(n, 0.4, &mut r),
            1 => random_sparse(n, n, &mut r),
            2 => random_tree(n, &mut r),
            _ => random_partial_2tree(n, 0.5, &mut r),
        };
        let k = brute_min_modulator(&g, t).unwrap();
        if let Ok(ModulatorOutcome::Found(rep)) = approx_modulator(&g, k, t, &cfg) {
            out.push((g, rep.trace));
        }
    }
    out
}

#[test]
fn replacements_preserve_optimum_and_shrink() {
    for t in 0..=1 {
        let mut steps = 0;
        for (g, trace) in traces(t, 36 + t as u64) {
            let mut before = g;
            for step in &trace.steps {
                let after = &step.graph_after;
                assert!(after.n() < before.n());
                assert_eq!(brute_min_modulator(&before, t).unwrap(), brute_min_modulator(after, t).unwrap());
                before = after.clone();
                steps += 1;
            }
        }
        assert!(steps > 10, "t={t}: only {steps} replacements");
    }
}

#[test]
fn one_step_traces_lift_to_modulators() {
    let mut r = rng(38);
    let mut lifted_count = 0;
    for t in 0..=1 {
        for (g, trace) in traces(t, 40 + t as u64) {
            let mut before = g;
            for step in &trace.steps {
                let after = &step.graph_after;
                let one = ReplacementTrace { t, d: trace.d, steps: vec![step.clone()] };
                let vs: Vec<Vertex> = after.vertices().collect();
                let mut candidates = vec![fallback_modulator(after, t), after.vertex_set()];
                for _ in 0..4 {
                    let mut a = fallback_modulator(after, t);
                    let extra = r.gen_range(0..=3.min(vs.len()));
                    a.extend(vs.choose_multiple(&mut r, extra).copied());
                    candidates.push(a);
                }
                for a in candidates {
                    assert!(is_modulator(after, &a, t));
                    let lifted = lift_solution(&one, &a).unwrap();
                    assert!(lifted.iter().all(|v| before.contains(*v)));
                    assert!(decompose_bounded(&before.without(&lifted), t).is_ok());
                    assert!(lifted.len() <= a.len());
                    lifted_count += 1;
                }
                before = after.clone();
            }
        }
    }
    assert!(lifted_count > 50);
}

#[test]
fn center_construction_examples() {
    let g = star(9);
    let x = set(&[0]);
    let (y0, _) = build_y0(&g, &x, 2, 0).unwrap();
    assert_eq!(y0, x);
    let g = cycle(5);
    let (y0, _) = build_y0(&g, &g.vertex_set(), 4, 0).unwrap();
    assert_eq!(y0, g.vertex_set());
    assert!(build_y0(&cycle(5), &VertexSet::new(), 4, 0).is_err());

    assert_eq!(clusters(&path(3), &set(&[1])), vec![set(&[0, 2])]);
    assert_eq!(clusters(&cycle(4), &set(&[0, 2])), vec![set(&[1, 3])]);
    assert!(clusters(&cycle(4), &cycle(4).vertex_set()).is_empty());

    let pd = protrusion_decomposition(&cycle(4), &set(&[0, 2]), 0, 4).unwrap();
    assert_eq!(pd.center, set(&[0, 2]));
    assert_eq!(pd.s(), 1);
    assert_eq!(pd.protrusions[0].boundary(), &set(&[0, 2]));
    assert_eq!(pd.interiors()[0], set(&[1, 3]));
}

fn check_partition(g: &Graph, pd: &compactor_core::protrusion::ProtrusionDecomposition) {
    let interiors = pd.interiors();
    let mut seen = pd.center.clone();
    for x in &interiors {
        assert!(x.iter().all(|v| seen.insert(*v)), "interiors overlap");
    }
    assert_eq!(seen, g.vertex_set());
    for bg in &pd.protrusions {
        assert!(bg.boundary().is_subset(&pd.center));
    }
    for (u, v) in g.edges() {
        let in_center = pd.center.contains(&u) && pd.center.contains(&v);
        let covered = pd.protrusions.iter().any(|bg| bg.graph().has_edge(u, v));
        assert!(in_center || covered, "edge {u}-{v} lost");
        assert!(!interiors
            .iter()
            .enumerate()
            .any(|(i, a)| { interiors.iter().enumerate().any(|(j, b)| i != j && a.contains(&u) && b.contains(&v)) }));
    }
}

#[test]
fn protrusion_decompositions_validate() {
    let mut r = rng(45);
    for i in 0..30 {
        let (g, t) =
            if i % 2 == 0 { (random_outerplanar(20, 0.5, &mut r), 1) } else { (random_sparse(30, 40, &mut r), i % 3) };
        let x = fallback_modulator(&g, t);
        let pd = protrusion_decomposition(&g, &x, t, 4).unwrap();
        let rep = validate_protrusion_decomposition(&g, &pd);
        assert!(rep.is_valid(), "{:?}", rep.failures());
        assert!(rep.max_width <= 3 * t + 4 + 1);
        check_partition(&g, &pd);
    }
    let g = edgeless(5);
    let pd = protrusion_decomposition(&g, &VertexSet::new(), 0, 4).unwrap();
    assert!(validate_protrusion_decomposition(&g, &pd).is_valid());
    check_partition(&g, &pd);
}

#[test]
fn validator_flags_broken_decompositions() {
    let g = path(7);
    let x = set(&[3]);
    let pd = protrusion_decomposition(&g, &x, 1, 4).unwrap();
    assert!(validate_protrusion_decomposition(&g, &pd).is_valid());
    let mut overlapping = pd.clone();
    overlapping.protrusions.push(pd.protrusions[0].clone());
    overlapping.decompositions.push(pd.decompositions[0].clone());
    assert!(!validate_protrusion_decomposition(&g, &overlapping).disjoint);
    let mut tight = pd.clone();
    tight.params.alpha = 0;
    assert!(!validate_protrusion_decomposition(&g, &tight).center_size);
}
