//! Deliberately naive reference implementations.
//!
//! Nothing here calls the DP, the decompositions, the modulator or the
//! compactor. Only graph-core and plain data types (states, tables) are
//! shared, so agreement with the pipeline is evidence rather than echo.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigUint;

use crate::algebra::{DominatingSet, DsState, IndependentSet, IsState, VcState, VertexCover};
use crate::dp::CountTable;
use crate::error::{Error, Result};
use crate::graph::{BGraph, Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;

const MAX_SUBSETS: u128 = 10_000_000;
const MAX_ANNOTATIONS: u128 = 1_000_000;
const MAX_MODULATOR_N: usize = 14;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of `k`-subsets `A` of `V(g)` with `holds(g, A)`.
pub fn brute_count(g: &Graph, k: usize, holds: impl Fn(&Graph, &VertexSet) -> bool) -> Result<BigUint> {
    let n = g.n();
    if binomial(n, k) > MAX_SUBSETS {
        return Err(Error::Unsupported(format!("C({n}, {k}) subsets exceed the oracle limit")));
    }
    if k > n {
        return Ok(BigUint::from(0u32));
    }
    let vertices: Vec<Vertex> = g.vertices().collect();
    let mut count = 0u64;
    for combo in vertices.iter().copied().combinations(k) {
        let a: VertexSet = combo.into_iter().collect();
        if holds(g, &a) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

pub fn vc_holds(g: &Graph, a: &VertexSet) -> bool {
    g.vertices().all(|u| a.contains(&u) || g.neighbors(u).iter().all(|w| a.contains(w)))
}

pub fn is_holds(g: &Graph, a: &VertexSet) -> bool {
    a.iter().all(|u| g.neighbors(*u).iter().all(|w| !a.contains(w)))
}

pub fn ds_holds(g: &Graph, a: &VertexSet) -> bool {
    g.vertices().all(|u| a.contains(&u) || g.neighbors(u).iter().any(|w| a.contains(w)))
}

/// Treewidth by memoised recursion over vertex subsets, written
/// independently of the library's elimination code.
pub fn brute_treewidth(g: &Graph) -> Result<usize> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    if n > MAX_MODULATOR_N + 2 {
        return Err(Error::Unsupported(format!("{n} vertices exceed the oracle limit")));
    }
    if n == 0 {
        return Ok(0);
    }
    let index: HashMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<u32> = vs.iter().map(|&v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << index[u])).collect();
    let mut memo: HashMap<u32, usize> = HashMap::new();
    Ok(tw_rec(&adj, n, 0, &mut memo))
}

/// Vertices outside `gone ∪ {v}` reachable from `v` through `gone`.
fn reach_through(adj: &[u32], gone: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut stack = vec![v];
    let mut out = 0u32;
    while let Some(x) = stack.pop() {
        let mut nb = adj[x] & !seen;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= 1 << u;
            if gone >> u & 1 == 1 {
                stack.push(u);
            } else {
                out |= 1 << u;
            }
        }
    }
    out
}

// smallest achievable max-degree when the vertices outside `gone` are eliminated next
fn tw_rec(adj: &[u32], n: usize, gone: u32, memo: &mut HashMap<u32, usize>) -> usize {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    if gone == full {
        return 0;
    }
    if let Some(&w) = memo.get(&gone) {
        return w;
    }
    let mut best = usize::MAX;
    for v in 0..n {
        if gone >> v & 1 == 1 {
            continue;
        }
        let deg = reach_through(adj, gone, v).count_ones() as usize;
        if deg >= best {
            continue;
        }
        let rest = tw_rec(adj, n, gone | 1 << v, memo);
        best = best.min(deg.max(rest));
    }
    memo.insert(gone, best);
    best
}

fn acyclic(g: &Graph) -> bool {
    let mut parent: BTreeMap<Vertex, Vertex> = g.vertices().map(|v| (v, v)).collect();
    fn find(p: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
        let mut r = v;
        while p[&r] != r {
            r = p[&r];
        }
        p.insert(v, r);
        r
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent.insert(a, b);
    }
    true
}

/// `tw(g) ≤ t`, decided exactly.
pub fn brute_tw_at_most(g: &Graph, t: usize) -> Result<bool> {
    match t {
        0 => Ok(g.is_edgeless()),
        1 => Ok(acyclic(g)),
        _ => {
            for comp in g.connected_components() {
                if comp.len() > t + 1 && brute_treewidth(&g.induced_subgraph(&comp)?)? > t {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Smallest `|A|` with `tw(g - A) ≤ t`.
pub fn brute_min_modulator(g: &Graph, t: usize) -> Result<usize> {
    let n = g.n();
    if n > MAX_MODULATOR_N {
        return Err(Error::Unsupported(format!("{n} vertices exceed the oracle limit")));
    }
    let vertices: Vec<Vertex> = g.vertices().collect();
    for size in 0..=n {
        for combo in vertices.iter().copied().combinations(size) {
            let a: VertexSet = combo.into_iter().collect();
            if brute_tw_at_most(&g.without(&a), t)? {
                return Ok(size);
            }
        }
    }
    Ok(n)
}

/// State of an annotated b-structure recomputed from the whole structure.
pub trait DefinitionalState {
    type State: Ord + Clone;

    fn definitional_state(&self, g: &Graph, boundary: &[Vertex], a: &VertexSet) -> Self::State;
}

fn boundary_mask(boundary: &[Vertex], keep: impl Fn(Vertex) -> bool) -> IndexSet {
    boundary.iter().enumerate().filter(|(_, &v)| keep(v)).map(|(i, _)| i).collect()
}

impl DefinitionalState for VertexCover {
    type State = VcState;

    fn definitional_state(&self, g: &Graph, boundary: &[Vertex], a: &VertexSet) -> VcState {
        VcState { annotated: boundary_mask(boundary, |v| a.contains(&v)), covered: vc_holds(g, a) }
    }
}

impl DefinitionalState for IndependentSet {
    type State = IsState;

    fn definitional_state(&self, g: &Graph, boundary: &[Vertex], a: &VertexSet) -> IsState {
        IsState { annotated: boundary_mask(boundary, |v| a.contains(&v)), conflict_free: is_holds(g, a) }
    }
}

impl DefinitionalState for DominatingSet {
    type State = DsState;

    fn definitional_state(&self, g: &Graph, boundary: &[Vertex], a: &VertexSet) -> DsState {
        let dominated = |v: Vertex| a.contains(&v) || g.neighbors(v).iter().any(|u| a.contains(u));
        DsState {
            annotated: boundary_mask(boundary, |v| a.contains(&v)),
            undominated: boundary_mask(boundary, |v| !dominated(v)),
            interior_dominated: g.vertices().filter(|v| !boundary.contains(v)).all(dominated),
        }
    }
}

/// Table of `(state, k')` counts by enumerating every annotation.
pub fn brute_state_table<D: DefinitionalState>(
    bg: &BGraph,
    alg: &D,
    k: usize,
) -> Result<CountTable<D::State, BigUint>> {
    let g = bg.graph();
    let n = g.n();
    if n >= 64 || (1u128 << n) > MAX_ANNOTATIONS {
        return Err(Error::Unsupported(format!("2^{n} annotations exceed the oracle limit")));
    }
    let boundary = bg.boundary_order();
    let vertices: Vec<Vertex> = g.vertices().collect();
    let mut counts: BTreeMap<(D::State, usize), u64> = BTreeMap::new();
    for bits in 0u64..(1u64 << n) {
        let size = bits.count_ones() as usize;
        if size > k {
            continue;
        }
        let a: VertexSet = (0..n).filter(|i| bits >> i & 1 == 1).map(|i| vertices[i]).collect();
        let s = alg.definitional_state(g, &boundary, &a);
        *counts.entry((s, size)).or_default() += 1;
    }
    let mut table = CountTable::new(boundary, k);
    for ((s, size), c) in counts {
        table.add(s, size, BigUint::from(c));
    }
    Ok(table)
}
