//! Condenser and extractor, and the compactor text format.
//!
//! The condenser keeps the center graph, the protrusion boundaries and one
//! count table per protrusion. The extractor sums, over annotations `A₀` of
//! the center and per-protrusion state choices accepted by
//! [`ProblemAlgebra::combine`], the number of ways to distribute the
//! remaining `k - |A₀|` vertices over the protrusion interiors.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hasher;

use itertools::Itertools;

use crate::algebra::{Problem, ProblemAlgebra};
use crate::config::Config;
use crate::dp::{count_table, CountTable};
use crate::error::{domain, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::index_set::IndexSet;
use crate::poly::Polynomial;
use crate::protrusion::{full_pipeline_decomposition, NullReport, PipelineDecomposition, PipelineOutcome};
use crate::treedec::make_nice;
use crate::{BigCount, Count};

/// Center, boundaries and tables of a non-null instance.
///
/// The center's vertices are `0..n0` with labels equal to ids, in the label
/// order of the original graph. Boundaries and table boundaries hold center
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactorBody<S, C> {
    pub center: Graph,
    pub boundaries: Vec<Vec<Vertex>>,
    pub tables: Vec<CountTable<S, C>>,
}

/// Condenser output; `body` is `None` for the null instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactorFile<S, C> {
    pub problem: String,
    pub k: usize,
    pub body: Option<CompactorBody<S, C>>,
}

/// Size measurements of a file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CompactorStats {
    pub s: usize,
    pub center_size: usize,
    pub center_edges: usize,
    /// Nonzero `(state, k')` entries over all tables.
    pub stored_values: usize,
    /// Most states in one table.
    pub max_states: usize,
}

impl CompactorStats {
    /// `max_states · (k + 1) · s`.
    pub fn bound(&self, k: usize) -> usize {
        self.max_states * (k + 1) * self.s
    }
}

impl<S: Ord + Clone, C: Count> CompactorFile<S, C> {
    pub fn null(problem: &str, k: usize) -> Self {
        CompactorFile { problem: problem.to_string(), k, body: None }
    }

    pub fn is_null(&self) -> bool {
        self.body.is_none()
    }

    pub fn stats(&self) -> CompactorStats {
        let Some(body) = &self.body else { return CompactorStats::default() };
        CompactorStats {
            s: body.tables.len(),
            center_size: body.center.n(),
            center_edges: body.center.m(),
            stored_values: body.tables.iter().map(CountTable::stored_values).sum(),
            max_states: body.tables.iter().map(CountTable::state_count).max().unwrap_or(0),
        }
    }
}

/// What the condenser saw on the way.
#[derive(Clone, Debug)]
pub struct CondenseReport {
    pub pipeline: Option<Box<PipelineDecomposition>>,
    pub null: Option<NullReport>,
    /// Original vertex of each center index.
    pub center_vertices: Vec<Vertex>,
}

/// Condenser: decomposition plus per-protrusion count tables.
pub fn condense<A: ProblemAlgebra>(
    g: &Graph,
    k: usize,
    alg: &A,
    cfg: &Config,
    external: Option<&VertexSet>,
) -> Result<CompactorFile<A::State, BigCount>> {
    condense_with_report(g, k, alg, cfg, external).map(|(f, _)| f)
}

pub fn condense_with_report<A: ProblemAlgebra>(
    g: &Graph,
    k: usize,
    alg: &A,
    cfg: &Config,
    external: Option<&VertexSet>,
) -> Result<(CompactorFile<A::State, BigCount>, CondenseReport)> {
    let pipeline = match full_pipeline_decomposition(g, k, alg, cfg, external)? {
        PipelineOutcome::Null(null) => {
            let report = CondenseReport { pipeline: None, null: Some(null), center_vertices: Vec::new() };
            return Ok((CompactorFile::null(alg.name(), k), report));
        }
        PipelineOutcome::Decomposition(p) => p,
    };
    let pd = &pipeline.decomposition;
    let order = g.order_by_label(&pd.center);
    let index: HashMap<Vertex, Vertex> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut center = Graph::with_vertices(order.len());
    for (u, v) in g.induced_unchecked(&pd.center).edges() {
        center.add_edge(index[&u], index[&v])?;
    }
    let mut boundaries = Vec::with_capacity(pd.s());
    let mut tables = Vec::with_capacity(pd.s());
    for (bg, d) in pd.protrusions.iter().zip(&pd.decompositions) {
        let nd = make_nice(d, bg.graph(), bg.boundary())?;
        let table: CountTable<A::State, BigCount> = count_table(bg, &nd, alg, k)?;
        let b: Vec<Vertex> = table.boundary().iter().map(|v| index[v]).collect();
        let rows = table.rows().map(|(s, row)| (s.clone(), row.to_vec()));
        tables.push(CountTable::from_rows(b.clone(), k, rows));
        boundaries.push(b);
    }
    let file =
        CompactorFile { problem: alg.name().to_string(), k, body: Some(CompactorBody { center, boundaries, tables }) };
    let report = CondenseReport { pipeline: Some(pipeline), null: None, center_vertices: order };
    Ok((file, report))
}

fn check_problem<A: ProblemAlgebra, S, C>(f: &CompactorFile<S, C>, alg: &A) -> Result<()> {
    if f.problem != alg.name() {
        return Err(domain(format!("file is for {}, not {}", f.problem, alg.name())));
    }
    Ok(())
}

fn trace(boundary: &[Vertex], a0: &VertexSet) -> IndexSet {
    boundary.iter().enumerate().filter(|(_, v)| a0.contains(v)).map(|(i, _)| i).collect()
}

// per protrusion: usable states with their shifted polynomials
type Candidates<'a, S, C> = Vec<(&'a S, Polynomial<C>)>;

struct Extraction<'a, A: ProblemAlgebra, C> {
    alg: &'a A,
    body: &'a CompactorBody<A::State, C>,
    // per protrusion: states by annotated trace
    by_trace: Vec<HashMap<IndexSet, Vec<&'a A::State>>>,
}

impl<'a, A: ProblemAlgebra, C: Count> Extraction<'a, A, C> {
    fn new(alg: &'a A, body: &'a CompactorBody<A::State, C>, pruned: bool) -> Self {
        let by_trace = body
            .tables
            .iter()
            .map(|t| {
                let mut m: HashMap<IndexSet, Vec<&A::State>> = HashMap::new();
                for s in t.states() {
                    if !pruned || alg.can_accept(s) {
                        m.entry(alg.annotated_boundary(s)).or_default().push(s);
                    }
                }
                m
            })
            .collect();
        Extraction { alg, body, by_trace }
    }

    fn accepts(&self, a0: &VertexSet, states: &[&A::State]) -> bool {
        self.alg.combine(&self.body.center, a0, &self.body.boundaries, states)
    }

    // candidates per protrusion with their shifted polynomials
    fn candidates(&self, a0: &VertexSet, rem: usize, pruned: bool) -> Option<Vec<Candidates<'a, A::State, C>>> {
        let mut out = Vec::with_capacity(self.body.tables.len());
        for (i, table) in self.body.tables.iter().enumerate() {
            let mask = trace(&self.body.boundaries[i], a0);
            let shift = mask.len();
            let list: Vec<(&A::State, Polynomial<C>)> = self.by_trace[i]
                .get(&mask)
                .into_iter()
                .flatten()
                .map(|&s| (s, table.polynomial(s, shift, rem)))
                .filter(|(_, p)| !pruned || !p.is_zero())
                .collect();
            if pruned && list.is_empty() {
                return None;
            }
            out.push(list);
        }
        Some(out)
    }

    fn center_sets(&self, k: usize) -> impl Iterator<Item = VertexSet> + '_ {
        let n0 = self.body.center.n();
        (0..=k.min(n0)).flat_map(move |size| (0..n0).combinations(size).map(|c| c.into_iter().collect()))
    }
}

fn product_dfs<'a, A: ProblemAlgebra, C: Count>(
    ex: &Extraction<'a, A, C>,
    a0: &VertexSet,
    cands: &[Vec<(&'a A::State, Polynomial<C>)>],
    acc: Polynomial<C>,
    chosen: &mut Vec<&'a A::State>,
    rem: usize,
) -> C {
    let i = chosen.len();
    if i == cands.len() {
        return if ex.accepts(a0, chosen) { acc.coeff(rem) } else { C::zero() };
    }
    let mut total = C::zero();
    for (s, p) in &cands[i] {
        let next = acc.mul_truncated(p);
        if next.is_zero() {
            continue;
        }
        chosen.push(s);
        total = total + product_dfs(ex, a0, cands, next, chosen, rem);
        chosen.pop();
    }
    total
}

/// Extractor: the exact count from the file alone. The null file gives 0.
pub fn extract<A: ProblemAlgebra, C: Count>(f: &CompactorFile<A::State, C>, alg: &A) -> Result<C> {
    check_problem(f, alg)?;
    let Some(body) = &f.body else { return Ok(C::zero()) };
    let ex = Extraction::new(alg, body, true);
    let mut total = C::zero();
    for a0 in ex.center_sets(f.k) {
        let rem = f.k - a0.len();
        let Some(cands) = ex.candidates(&a0, rem, true) else { continue };
        total = total + product_dfs(&ex, &a0, &cands, Polynomial::one(rem), &mut Vec::new(), rem);
    }
    Ok(total)
}

/// One term of the extractor's sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Contribution<S, C> {
    /// Center indices.
    pub a0: Vec<Vertex>,
    pub states: Vec<S>,
    /// Interior annotation size per protrusion.
    pub zeta: Vec<usize>,
    /// `Π table_i[state_i, zeta_i + |B_i ∩ A₀|]`.
    pub count: C,
}

// every ζ with Σ ζ = rem, each coordinate bounded by the table size
fn compositions(parts: usize, rem: usize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
    if prefix.len() + 1 == parts {
        prefix.push(rem);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    if parts == 0 {
        if rem == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for z in 0..=rem {
        prefix.push(z);
        compositions(parts, rem - z, out, prefix);
        prefix.pop();
    }
}

fn explicit_terms<A: ProblemAlgebra, C: Count>(
    f: &CompactorFile<A::State, C>,
    alg: &A,
    mut visit: impl FnMut(&VertexSet, &[&A::State], &[usize], C),
) -> Result<()> {
    check_problem(f, alg)?;
    let Some(body) = &f.body else { return Ok(()) };
    let ex = Extraction::new(alg, body, false);
    for a0 in ex.center_sets(f.k) {
        let rem = f.k - a0.len();
        let cands = ex.candidates(&a0, rem, false).expect("unpruned candidates are never rejected");
        let shifts: Vec<usize> = body.boundaries.iter().map(|b| trace(b, &a0).len()).collect();
        let mut zetas = Vec::new();
        compositions(body.tables.len(), rem, &mut zetas, &mut Vec::new());
        if cands.iter().any(Vec::is_empty) {
            continue;
        }
        // odometer over one state per protrusion
        let mut digits = vec![0usize; cands.len()];
        loop {
            let mapping: Vec<&A::State> = digits.iter().enumerate().map(|(i, &d)| cands[i][d].0).collect();
            if ex.accepts(&a0, &mapping) {
                for zeta in &zetas {
                    let count = mapping
                        .iter()
                        .zip(zeta)
                        .enumerate()
                        .fold(C::one(), |acc, (i, (s, &z))| acc * body.tables[i].get(s, z + shifts[i]));
                    visit(&a0, &mapping, zeta, count);
                }
            }
            let Some(pos) = (0..digits.len()).rev().find(|&i| digits[i] + 1 < cands[i].len()) else { break };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
    }
    Ok(())
}

/// Extractor by explicit enumeration of every mapping (no pruning) and every
/// vector `ζ` with `Σ ζ = k - |A₀|`.
pub fn extract_explicit<A: ProblemAlgebra, C: Count>(f: &CompactorFile<A::State, C>, alg: &A) -> Result<C> {
    let mut total = C::zero();
    explicit_terms(f, alg, |_, _, _, c| total = total.clone() + c)?;
    Ok(total)
}

/// The nonzero terms of the explicit sum, in enumeration order.
pub fn contributions<A: ProblemAlgebra, C: Count>(
    f: &CompactorFile<A::State, C>,
    alg: &A,
) -> Result<Vec<Contribution<A::State, C>>> {
    let mut out = Vec::new();
    explicit_terms(f, alg, |a0, states, zeta, count| {
        if !count.is_zero() {
            out.push(Contribution {
                a0: a0.iter().copied().collect(),
                states: states.iter().map(|&s| s.clone()).collect(),
                zeta: zeta.to_vec(),
                count,
            });
        }
    })?;
    Ok(out)
}

/// `extract(condense(g, k))`.
pub fn count_end_to_end<A: ProblemAlgebra>(
    g: &Graph,
    k: usize,
    alg: &A,
    cfg: &Config,
    external: Option<&VertexSet>,
) -> Result<BigCount> {
    extract(&condense(g, k, alg, cfg, external)?, alg)
}

const VERSION: &str = "v1";

/// 64-bit FNV-1a over line 1 and every line after the checksum line, each
/// followed by `\n`.
fn checksum<'a>(lines: impl IntoIterator<Item = &'a str>) -> String {
    let mut h = fnv::FnvHasher::default();
    for line in lines {
        h.write(line.as_bytes());
        h.write(b"\n");
    }
    format!("{:016x}", h.finish())
}

/// Text form; the grammar is in the repository README.
pub fn serialize<A: ProblemAlgebra, C: Count>(f: &CompactorFile<A::State, C>, alg: &A) -> Result<String> {
    check_problem(f, alg)?;
    let header = format!("COMPACTOR {VERSION} {} k={}", f.problem, f.k);
    let mut body: Vec<String> = Vec::new();
    match &f.body {
        None => body.push("NULL".into()),
        Some(b) => {
            let mut edges: Vec<(Vertex, Vertex)> = b.center.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            body.push(format!("CENTER {} {}", b.center.n(), edges.len()));
            body.extend(edges.iter().map(|(u, v)| format!("{u} {v}")));
            body.push(format!("PROTRUSIONS {}", b.tables.len()));
            for (i, (bd, t)) in b.boundaries.iter().zip(&b.tables).enumerate() {
                body.push(std::iter::once(format!("B {i}")).chain(bd.iter().map(|v| v.to_string())).join(" "));
                for (s, row) in t.rows() {
                    let enc = alg.encode_state(s);
                    for (size, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        body.push(format!("ENTRY {i} {enc} {size} {c}"));
                    }
                }
            }
        }
    }
    let sum = checksum(std::iter::once(header.as_str()).chain(body.iter().map(String::as_str)));
    let mut out = format!("{header}\nCHECKSUM {sum}\n");
    for line in body {
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_header(line: &str) -> Result<(Problem, usize)> {
    let parts: Vec<&str> = line.split(' ').collect();
    let ["COMPACTOR", version, problem, k] = parts.as_slice() else {
        return Err(parse_err(1, "expected `COMPACTOR <version> <problem> k=<k>`"));
    };
    if *version != VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }
    let problem: Problem = problem.parse()?;
    let k = k.strip_prefix("k=").and_then(|v| v.parse().ok()).ok_or_else(|| parse_err(1, "bad k"))?;
    Ok((problem, k))
}

/// Problem named in a file's first line.
pub fn peek_problem(text: &str) -> Result<Problem> {
    parse_header(text.lines().next().unwrap_or("")).map(|(p, _)| p)
}

fn number<T: std::str::FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    token.and_then(|t| t.parse().ok()).ok_or_else(|| parse_err(line, format!("expected {what}")))
}

struct Lines<'a> {
    items: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    // (1-based line number, line)
    fn next(&mut self) -> Result<(usize, &'a str)> {
        let line = self.items.get(self.pos).copied().ok_or_else(|| parse_err(self.pos + 1, "unexpected end"))?;
        self.pos += 1;
        Ok((self.pos, line))
    }

    fn peek(&self) -> Option<&'a str> {
        self.items.get(self.pos).copied()
    }
}

/// Parses and checks a file written by [`serialize`].
pub fn deserialize<A: ProblemAlgebra, C: Count>(text: &str, alg: &A) -> Result<CompactorFile<A::State, C>> {
    let content = text.strip_suffix('\n').ok_or_else(|| Error::Format("file must end with a newline".into()))?;
    let items: Vec<&str> = content.split('\n').collect();
    if items.len() < 3 {
        return Err(Error::Format("truncated file".into()));
    }
    let (problem, k) = parse_header(items[0])?;
    if problem.name() != alg.name() {
        return Err(domain(format!("file is for {problem}, not {}", alg.name())));
    }
    let stored = items[1].strip_prefix("CHECKSUM ").ok_or_else(|| parse_err(2, "expected `CHECKSUM <hex>`"))?;
    let computed = checksum(std::iter::once(items[0]).chain(items[2..].iter().copied()));
    if stored != computed {
        return Err(Error::Checksum { stored: stored.to_string(), computed });
    }
    let mut lines = Lines { items, pos: 2 };
    let (no, first) = lines.next()?;
    if first == "NULL" {
        if lines.peek().is_some() {
            return Err(parse_err(no + 1, "content after NULL"));
        }
        return Ok(CompactorFile::null(problem.name(), k));
    }
    let mut tok = first.split(' ');
    if tok.next() != Some("CENTER") {
        return Err(parse_err(no, "expected NULL or CENTER"));
    }
    let n0: usize = number(tok.next(), no, "center size")?;
    let m0: usize = number(tok.next(), no, "center edge count")?;
    let mut center = Graph::with_vertices(n0);
    for _ in 0..m0 {
        let (no, line) = lines.next()?;
        let mut tok = line.split(' ');
        let u: Vertex = number(tok.next(), no, "edge endpoint")?;
        let v: Vertex = number(tok.next(), no, "edge endpoint")?;
        if tok.next().is_some() || u >= n0 || v >= n0 || u >= v {
            return Err(parse_err(no, "bad center edge"));
        }
        center.add_edge(u, v).map_err(|e| parse_err(no, e.to_string()))?;
    }
    let (no, line) = lines.next()?;
    let s: usize = number(line.strip_prefix("PROTRUSIONS "), no, "`PROTRUSIONS <s>`")?;
    let mut boundaries = Vec::with_capacity(s);
    let mut tables = Vec::with_capacity(s);
    for i in 0..s {
        let (no, line) = lines.next()?;
        let mut tok = line.split(' ');
        if tok.next() != Some("B") || number::<usize>(tok.next(), no, "protrusion index")? != i {
            return Err(parse_err(no, format!("expected `B {i} ...`")));
        }
        let b: Vec<Vertex> = tok.map(|t| number(Some(t), no, "boundary index")).collect::<Result<_>>()?;
        if b.iter().any(|&v| v >= n0) || b.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(no, "boundary indices must be increasing center indices"));
        }
        let mut seen = BTreeSet::new();
        let mut rows: BTreeMap<A::State, Vec<C>> = BTreeMap::new();
        while lines.peek().is_some_and(|l| l.starts_with("ENTRY ")) {
            let (no, line) = lines.next()?;
            let tok: Vec<&str> = line.split(' ').collect();
            let [_, idx, enc, size, count] = tok.as_slice() else {
                return Err(parse_err(no, "expected `ENTRY <i> <state> <k'> <count>`"));
            };
            if number::<usize>(Some(idx), no, "protrusion index")? != i {
                return Err(parse_err(no, "entry for another protrusion"));
            }
            let state = alg.decode_state(enc).ok_or_else(|| parse_err(no, "bad state"))?;
            if alg.annotated_boundary(&state).iter().any(|p| p >= b.len()) {
                return Err(parse_err(no, "state annotates a position outside the boundary"));
            }
            let size: usize = number(Some(size), no, "k'")?;
            if size > k {
                return Err(parse_err(no, "k' above k"));
            }
            let count: C = number(Some(count), no, "count")?;
            if !seen.insert((state.clone(), size)) {
                return Err(parse_err(no, "duplicate entry"));
            }
            rows.entry(state).or_insert_with(|| vec![C::zero(); k + 1])[size] = count;
        }
        tables.push(CountTable::from_rows(b.clone(), k, rows));
        boundaries.push(b);
    }
    if lines.peek().is_some() {
        return Err(parse_err(lines.pos + 1, "trailing content"));
    }
    Ok(CompactorFile {
        problem: problem.name().to_string(),
        k,
        body: Some(CompactorBody { center, boundaries, tables }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_algebra, vc_algebra, VcState};
    use crate::generate::{complete, cycle, edgeless, path, star};

    fn vc_count(g: &Graph, k: usize) -> BigCount {
        count_end_to_end(g, k, &vc_algebra(), &Config::default(), None).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(vc_count(&cycle(3), 2), BigCount::from(3u32));
        assert_eq!(vc_count(&path(3), 1), BigCount::from(1u32));
        assert_eq!(vc_count(&edgeless(5), 2), BigCount::from(10u32));
        assert_eq!(vc_count(&star(3), 1), BigCount::from(1u32));
        assert_eq!(vc_count(&cycle(4), 2), BigCount::from(2u32));
        assert_eq!(vc_count(&edgeless(3), 0), BigCount::from(1u32));
        assert_eq!(vc_count(&path(2), 0), BigCount::from(0u32));
        let is = count_end_to_end(&cycle(4), 2, &is_algebra(), &Config::default(), None).unwrap();
        assert_eq!(is, BigCount::from(2u32));
    }

    #[test]
    fn null_file() {
        let strict = Config { c: 1, ..Config::default() };
        let f = condense(&complete(8), 1, &vc_algebra(), &strict, None).unwrap();
        assert!(f.is_null());
        assert_eq!(extract(&f, &vc_algebra()).unwrap(), BigCount::from(0u32));
        let text = serialize(&f, &vc_algebra()).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert_eq!(text.lines().nth(2), Some("NULL"));
    }

    #[test]
    fn round_trip_and_tamper() {
        let g = cycle(5);
        let f = condense(&g, 3, &vc_algebra(), &Config::default(), None).unwrap();
        let text = serialize(&f, &vc_algebra()).unwrap();
        let back: CompactorFile<VcState, BigCount> = deserialize(&text, &vc_algebra()).unwrap();
        assert_eq!(back, f);
        assert_eq!(serialize(&back, &vc_algebra()).unwrap(), text);
        let pos = text.rfind(|c: char| c.is_ascii_digit()).unwrap();
        let mut bytes = text.into_bytes();
        bytes[pos] = if bytes[pos] == b'9' { b'8' } else { bytes[pos] + 1 };
        let tampered = String::from_utf8(bytes).unwrap();
        assert!(matches!(deserialize::<_, BigCount>(&tampered, &vc_algebra()), Err(Error::Checksum { .. })));
    }

    #[test]
    fn wrong_problem_rejected() {
        let f = condense(&cycle(4), 2, &vc_algebra(), &Config::default(), None).unwrap();
        let text = serialize(&f, &vc_algebra()).unwrap();
        assert_eq!(peek_problem(&text).unwrap(), Problem::VertexCover);
        assert!(deserialize::<_, BigCount>(&text, &is_algebra()).is_err());
    }

    #[test]
    fn explicit_matches_product() {
        for g in [cycle(5), path(6), star(4), complete(4)] {
            for k in 0..4 {
                let f = condense(&g, k, &vc_algebra(), &Config::default(), None).unwrap();
                assert_eq!(extract(&f, &vc_algebra()).unwrap(), extract_explicit(&f, &vc_algebra()).unwrap());
            }
        }
    }

    #[test]
    fn compositions_cover_simplex() {
        let mut out = Vec::new();
        compositions(3, 2, &mut out, &mut Vec::new());
        assert_eq!(out.len(), 6);
        let mut none = Vec::new();
        compositions(0, 1, &mut none, &mut Vec::new());
        assert!(none.is_empty());
        compositions(0, 0, &mut none, &mut Vec::new());
        assert_eq!(none, vec![Vec::<usize>::new()]);
    }
}
