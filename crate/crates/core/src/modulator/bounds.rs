//! Cheap modulators and certified lower bounds on the optimum.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::treedec::{decompose_bounded, treewidth_at_most};

const EXACT_OBSTRUCTION: usize = 16;

/// `tw(g - a) ≤ t`, as decided by [`decompose_bounded`].
pub fn is_modulator(g: &Graph, a: &VertexSet, t: usize) -> bool {
    let rest = g.without(a);
    if t == 0 {
        return rest.is_edgeless();
    }
    decompose_bounded(&rest, t).is_ok()
}

fn maximal_matching(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut used = VertexSet::new();
    let mut matching = Vec::new();
    for u in g.vertices_by_label() {
        if used.contains(&u) {
            continue;
        }
        let partner = g.order_by_label(g.neighbors(u)).into_iter().find(|w| !used.contains(w));
        if let Some(w) = partner {
            used.insert(u);
            used.insert(w);
            matching.push((u, w));
        }
    }
    matching
}

/// Both endpoints of a maximal matching: a vertex cover of at most twice
/// the minimum size.
pub fn vc_modulator_2approx(g: &Graph) -> VertexSet {
    maximal_matching(g).into_iter().flat_map(|(u, w)| [u, w]).collect()
}

fn shortest_cycle(g: &Graph) -> Option<VertexSet> {
    let mut best: Option<VertexSet> = None;
    for root in g.vertices() {
        let mut parent = std::collections::BTreeMap::new();
        let mut depth = std::collections::BTreeMap::new();
        parent.insert(root, root);
        depth.insert(root, 0usize);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !depth.contains_key(&y) {
                    depth.insert(y, depth[&x] + 1);
                    parent.insert(y, x);
                    queue.push_back(y);
                } else if parent[&x] != y {
                    // closes a walk through root; its vertex set contains a cycle
                    let mut cyc = VertexSet::new();
                    for mut v in [x, y] {
                        cyc.insert(v);
                        while v != root {
                            v = parent[&v];
                            cyc.insert(v);
                        }
                    }
                    if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best
}

// a vertex set whose induced graph has treewidth above t, checked exactly
fn certified_obstruction(g: &Graph, t: usize) -> Option<VertexSet> {
    for comp in g.connected_components() {
        if comp.len() <= t + 1 {
            continue;
        }
        let mut pieces = Vec::new();
        if comp.len() <= EXACT_OBSTRUCTION {
            pieces.push(comp);
        } else {
            // balls small enough for the exact check
            for v in g.order_by_label(&comp) {
                let mut ball: VertexSet = [v].into_iter().collect();
                let mut queue = VecDeque::from([v]);
                while let Some(x) = queue.pop_front() {
                    for &y in g.neighbors(x) {
                        if ball.len() < EXACT_OBSTRUCTION && ball.insert(y) {
                            queue.push_back(y);
                        }
                    }
                }
                pieces.push(ball);
            }
        }
        for piece in pieces {
            let mut s = piece;
            if treewidth_at_most(&g.induced_unchecked(&s), t) {
                continue;
            }
            for v in s.clone() {
                s.remove(&v);
                if treewidth_at_most(&g.induced_unchecked(&s), t) {
                    s.insert(v);
                }
            }
            return Some(s);
        }
    }
    None
}

/// A lower bound on the smallest treewidth-`t` modulator, from vertex
/// disjoint obstructions (matching edges for `t = 0`, cycles for `t = 1`,
/// exactly checked minimal subgraphs otherwise).
pub fn modulator_lower_bound(g: &Graph, t: usize) -> usize {
    match t {
        0 => maximal_matching(g).len(),
        _ => {
            let mut h = g.clone();
            let mut count = 0;
            loop {
                let found = if t == 1 { shortest_cycle(&h) } else { certified_obstruction(&h, t) };
                let Some(s) = found else { break };
                for v in s {
                    h.remove_vertex(v);
                }
                count += 1;
            }
            count
        }
    }
}

/// A treewidth-`t` modulator with no size promise beyond `t = 0`, where it
/// is the 2-approximate vertex cover.
pub fn fallback_modulator(g: &Graph, t: usize) -> VertexSet {
    if t == 0 {
        return vc_modulator_2approx(g);
    }
    let mut a = VertexSet::new();
    loop {
        let rest = g.without(&a);
        let bad =
            rest.connected_components().into_iter().find(|c| decompose_bounded(&rest.induced_unchecked(c), t).is_err());
        let Some(comp) = bad else { return a };
        let pick = comp
            .iter()
            .copied()
            .max_by_key(|&v| (rest.degree(v), std::cmp::Reverse(rest.label(v))))
            .expect("failing component is nonempty");
        a.insert(pick);
    }
}

/// Drops vertices of `a` (highest label first) while it stays a modulator.
pub fn minimalize(g: &Graph, a: &VertexSet, t: usize) -> VertexSet {
    let mut out = a.clone();
    let mut order = g.order_by_label(a);
    order.reverse();
    for v in order {
        out.remove(&v);
        if !is_modulator(g, &out, t) {
            out.insert(v);
        }
    }
    out
}
