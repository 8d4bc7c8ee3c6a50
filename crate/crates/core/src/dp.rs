//! Solution counting per algebra state over a nice tree decomposition.

use std::collections::BTreeMap;

use crate::algebra::{BagView, ProblemAlgebra};
use crate::error::{domain, Result};
use crate::graph::{BGraph, Vertex};
use crate::index_set::IndexSet;
use crate::poly::Polynomial;
use crate::treedec::{make_nice, rooted_decomposition, NiceKind, NiceTreeDecomposition};
use crate::Count;

/// `(state, k') -> count` for one b-graph, sizes `0..=k`.
///
/// Only states with some nonzero count are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable<S, C> {
    boundary: Vec<Vertex>,
    k: usize,
    entries: BTreeMap<S, Vec<C>>,
}

impl<S: Ord + Clone, C: Count> CountTable<S, C> {
    pub fn new(boundary: Vec<Vertex>, k: usize) -> Self {
        CountTable { boundary, k, entries: BTreeMap::new() }
    }

    /// Boundary in index order.
    pub fn boundary(&self) -> &[Vertex] {
        &self.boundary
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, state: &S, size: usize) -> C {
        self.entries.get(state).and_then(|v| v.get(size)).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `count` at `(state, size)`; sizes above `k` are ignored.
    pub fn add(&mut self, state: S, size: usize, count: C) {
        if size > self.k || count.is_zero() {
            return;
        }
        let row = self.entries.entry(state).or_insert_with(|| vec![C::zero(); self.k + 1]);
        row[size] = row[size].clone() + count;
    }

    pub fn states(&self) -> impl Iterator<Item = &S> {
        self.entries.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&S, &[C])> {
        self.entries.iter().map(|(s, v)| (s, v.as_slice()))
    }

    pub fn state_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of nonzero `(state, k')` entries.
    pub fn stored_values(&self) -> usize {
        self.entries.values().map(|v| v.iter().filter(|c| !c.is_zero()).count()).sum()
    }

    /// `Σ_R table[R, size]`.
    pub fn total_at(&self, size: usize) -> C {
        self.entries.values().filter_map(|v| v.get(size)).fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Coefficient `j` is `table[state, j + shift]`, for `j ∈ [0, cap]`.
    pub fn polynomial(&self, state: &S, shift: usize, cap: usize) -> Polynomial<C> {
        let coeffs = (0..=cap).map(|j| self.get(state, j + shift)).collect();
        Polynomial::from_coeffs(coeffs, cap)
    }
}

/// Free-function form of [`CountTable::polynomial`].
pub fn table_polynomial<S: Ord + Clone, C: Count>(
    tbl: &CountTable<S, C>,
    state: &S,
    shift: usize,
    cap: usize,
) -> Polynomial<C> {
    tbl.polynomial(state, shift, cap)
}

type Rows<S, C> = BTreeMap<S, Vec<C>>;

fn add_row<S: Ord, C: Count>(rows: &mut Rows<S, C>, state: S, row: &[C], shift: usize, k: usize) {
    let slot = rows.entry(state).or_insert_with(|| vec![C::zero(); k + 1]);
    for (i, c) in row.iter().enumerate() {
        if i + shift > k {
            break;
        }
        if !c.is_zero() {
            slot[i + shift] = slot[i + shift].clone() + c.clone();
        }
    }
}

type Row<'a, S, C> = (&'a S, &'a Vec<C>);

/// Counts, for every reachable state and `k' ≤ k`, the annotations of `bg`
/// of size `k'` that reach it.
///
/// `nd` must be a nice decomposition of `bg`'s graph rooted at `B(bg)`.
pub fn count_table<A: ProblemAlgebra, C: Count>(
    bg: &BGraph,
    nd: &NiceTreeDecomposition,
    alg: &A,
    k: usize,
) -> Result<CountTable<A::State, C>> {
    let g = bg.graph();
    let boundary = bg.boundary_order();
    if nd.root_bag() != boundary.as_slice() {
        return Err(domain("nice decomposition root bag differs from the boundary"));
    }
    nd.check_shape()?;
    if !nd.validate(g) {
        return Err(domain("nice decomposition is not valid for the b-graph"));
    }

    let mut tables: Vec<Option<Rows<A::State, C>>> = Vec::with_capacity(nd.nodes().len());
    for node in nd.nodes() {
        let bag = BagView::new(g, &node.bag)?;
        let mut out: Rows<A::State, C> = BTreeMap::new();
        match node.kind {
            NiceKind::Leaf => {
                let n = bag.len();
                if n >= 32 {
                    return Err(crate::Error::Unsupported(format!("leaf bag of {n} vertices")));
                }
                for bits in 0u64..(1u64 << n) {
                    let mask = IndexSet::from_bits(bits);
                    if mask.len() > k {
                        continue;
                    }
                    let mut row = vec![C::zero(); k + 1];
                    row[mask.len()] = C::one();
                    add_row(&mut out, alg.leaf(&bag, mask), &row, 0, k);
                }
            }
            NiceKind::Introduce { child, vertex } => {
                let pos = bag.position(vertex).expect("introduced vertex in bag");
                let rows = tables[child].take().expect("child table");
                for (s, row) in &rows {
                    add_row(&mut out, alg.introduce(s, &bag, pos, false), row, 0, k);
                    add_row(&mut out, alg.introduce(s, &bag, pos, true), row, 1, k);
                }
            }
            NiceKind::Forget { child, vertex } => {
                let child_bag = BagView::new(g, &nd.nodes()[child].bag)?;
                let pos = child_bag.position(vertex).expect("forgotten vertex in child bag");
                let rows = tables[child].take().expect("child table");
                for (s, row) in &rows {
                    add_row(&mut out, alg.forget(s, &child_bag, pos), row, 0, k);
                }
            }
            NiceKind::Join { left, right } => {
                let lrows = tables[left].take().expect("child table");
                let rrows = tables[right].take().expect("child table");
                let mut by_mask: BTreeMap<IndexSet, Vec<Row<'_, A::State, C>>> = BTreeMap::new();
                for (s, row) in &rrows {
                    by_mask.entry(alg.annotated_boundary(s)).or_default().push((s, row));
                }
                for (s1, row1) in &lrows {
                    let mask = alg.annotated_boundary(s1);
                    let r = mask.len();
                    let Some(partners) = by_mask.get(&mask) else { continue };
                    for (s2, row2) in partners {
                        let Some(s) = alg.join(s1, s2, &bag) else { continue };
                        // k1 + k2 = k' + r: bag annotations are counted on both sides
                        let mut row = vec![C::zero(); k + 1];
                        for (k1, a) in row1.iter().enumerate() {
                            if a.is_zero() {
                                continue;
                            }
                            for (k2, b) in row2.iter().enumerate() {
                                if b.is_zero() || k1 + k2 < r || k1 + k2 - r > k {
                                    continue;
                                }
                                let kk = k1 + k2 - r;
                                row[kk] = row[kk].clone() + a.clone() * b.clone();
                            }
                        }
                        add_row(&mut out, s, &row, 0, k);
                    }
                }
            }
        }
        out.retain(|_, row| row.iter().any(|c| !c.is_zero()));
        tables.push(Some(out));
    }

    let rows = tables.pop().flatten().unwrap_or_default();
    Ok(CountTable { boundary, k, entries: rows })
}

/// [`count_table`] over a heuristic decomposition rooted at the boundary.
pub fn count_table_auto<A: ProblemAlgebra, C: Count>(
    bg: &BGraph,
    alg: &A,
    k: usize,
) -> Result<CountTable<A::State, C>> {
    let d = rooted_decomposition(bg.graph(), bg.boundary());
    let nd = make_nice(&d, bg.graph(), bg.boundary())?;
    count_table(bg, &nd, alg, k)
}

impl<S: Ord + Clone, C: Count> CountTable<S, C> {
    /// Builds a table from explicit rows; zero rows are dropped.
    pub fn from_rows(boundary: Vec<Vertex>, k: usize, rows: impl IntoIterator<Item = (S, Vec<C>)>) -> Self {
        let mut t = CountTable::new(boundary, k);
        for (s, row) in rows {
            for (i, c) in row.into_iter().enumerate() {
                t.add(s.clone(), i, c);
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{IndependentSet, IsState, VcState, VertexCover};
    use crate::graph::{Graph, VertexSet};
    use num_bigint::BigUint;

    fn set(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn triangle_vertex_covers() {
        let bg = BGraph::new(Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]), set(&[])).unwrap();
        let t: CountTable<VcState, u64> = count_table_auto(&bg, &VertexCover, 2).unwrap();
        let ok = VcState { annotated: IndexSet::empty(), covered: true };
        assert_eq!(t.get(&ok, 2), 3);
        assert_eq!(t.get(&ok, 1), 0);
    }

    #[test]
    fn path_vertex_covers() {
        let bg = BGraph::new(Graph::from_edges(3, &[(0, 1), (1, 2)]), set(&[])).unwrap();
        let t: CountTable<VcState, u64> = count_table_auto(&bg, &VertexCover, 1).unwrap();
        let ok = VcState { annotated: IndexSet::empty(), covered: true };
        let bad = VcState { covered: false, ..ok };
        assert_eq!(t.get(&ok, 1), 1);
        assert_eq!(t.get(&bad, 1), 2);
    }

    #[test]
    fn cycle_independent_pairs_avoiding_boundary() {
        // C4 a-b-c-d, B = {a}
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let bg = BGraph::new(g, set(&[0])).unwrap();
        let t: CountTable<IsState, BigUint> = count_table_auto(&bg, &IndependentSet, 2).unwrap();
        let s = IsState { annotated: IndexSet::empty(), conflict_free: true };
        assert_eq!(t.get(&s, 2), BigUint::from(1u32));
    }

    #[test]
    fn wrong_root_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let bg = BGraph::new(g.clone(), set(&[1])).unwrap();
        let d = rooted_decomposition(&g, &set(&[]));
        let nd = make_nice(&d, &g, &set(&[])).unwrap();
        assert!(count_table::<_, u64>(&bg, &nd, &VertexCover, 2).is_err());
    }

    #[test]
    fn polynomial_reads_shifted_entries() {
        let t: CountTable<u8, u64> = CountTable::from_rows(vec![], 3, [(0u8, vec![1, 4])]);
        assert_eq!(t.polynomial(&0, 0, 1).coeffs(), &[1, 4]);
        assert_eq!(t.polynomial(&0, 1, 1).coeffs(), &[4, 0]);
        assert!(t.polynomial(&7, 0, 2).is_zero());
        assert_eq!(t.stored_values(), 2);
    }
}
