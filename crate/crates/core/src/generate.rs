//! Seeded generators for sparse test graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).expect("cycle closes");
    }
    g
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn edgeless(n: usize) -> Graph {
    Graph::with_vertices(n)
}

/// Uniform random recursive tree.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &edges)
}

/// Random outerplanar graph: a Hamiltonian cycle plus non-crossing chords
/// from a random polygon triangulation, each kept with probability `keep`.
pub fn random_outerplanar(n: usize, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut g = cycle(n);
    if n < 4 {
        return g;
    }
    // ear-cutting on the polygon 0..n
    let mut polygon: Vec<Vertex> = (0..n).collect();
    while polygon.len() > 3 {
        let i = rng.gen_range(0..polygon.len());
        let a = polygon[(i + polygon.len() - 1) % polygon.len()];
        let c = polygon[(i + 1) % polygon.len()];
        if !g.has_edge(a, c) && rng.gen_bool(keep) {
            g.add_edge(a, c).expect("chord is new");
        }
        polygon.remove(i);
    }
    g
}

/// Random partial 2-tree: a 2-tree on `n` vertices with each edge kept with
/// probability `keep` (spanning-tree edges always kept, so it stays connected).
pub fn random_partial_2tree(n: usize, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::with_vertices(n);
    if n < 2 {
        return g;
    }
    let mut edges: Vec<(Vertex, Vertex)> = vec![(0, 1)];
    let mut tree_edges = vec![(0, 1)];
    for v in 2..n {
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        edges.push((a, v));
        edges.push((b, v));
        tree_edges.push((a, v));
    }
    for &(u, v) in &edges {
        if tree_edges.contains(&(u, v)) || rng.gen_bool(keep) {
            g.ensure_edge(u, v).expect("valid edge");
        }
    }
    g
}

/// `G(n, m)` with `m` capped at the number of vertex pairs.
pub fn random_sparse(n: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, &pairs)
}

/// Hubs `0..hubs`, each leaf attached to one hub chosen round-robin.
/// Minimum vertex cover is `hubs` once every hub has a leaf.
pub fn hub_graph(hubs: usize, leaves: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (0..leaves).map(|i| (i % hubs.max(1), hubs + i)).collect();
    Graph::from_edges(hubs + leaves, &edges)
}

/// A named test graph.
#[derive(Clone, Debug)]
pub struct Sample {
    pub name: String,
    pub graph: Graph,
}

/// Mixed corpus of `count` graphs with `1..=max_n` vertices and at most
/// `2n` edges: paths, cycles, stars, trees, outerplanar, partial 2-trees
/// and random sparse graphs.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Sample> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = rng.gen_range(1..=max_n.max(1));
        let (name, graph) = match i % 7 {
            0 => ("path", path(n)),
            1 => ("cycle", cycle(n)),
            2 => ("star", star(n.saturating_sub(1))),
            3 => ("tree", random_tree(n, &mut rng)),
            4 => ("outerplanar", random_outerplanar(n, 0.5, &mut rng)),
            5 => ("partial2tree", random_partial_2tree(n, 0.6, &mut rng)),
            _ => {
                let m = rng.gen_range(0..=(3 * n / 2));
                ("sparse", random_sparse(n, m, &mut rng))
            }
        };
        out.push(Sample { name: format!("{name}-{i}-n{}", graph.n()), graph });
    }
    out
}
