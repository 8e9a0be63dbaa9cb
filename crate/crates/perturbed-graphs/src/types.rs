//! Core combinatorial types: graphs, digraphs, tournaments, k-uniform
//! hypergraphs and bipartite graphs, together with the structural
//! validators used throughout the crate.
//!
//! Vertices are dense integer labels `0..n`. All types are immutable after
//! construction and may be shared freely across threads.

use std::collections::HashSet;

use crate::bits;
use crate::error::{Error, Result};

/// Undirected simple graph: no self-loops, no duplicate edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n.max(1));
        Graph {
            n,
            words,
            rows: vec![0; words * n],
            edge_count: 0,
        }
    }

    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::parameter(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::parameter(format!("self-loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            bits::set(&mut self.rows[u * self.words..(u + 1) * self.words], v);
            bits::set(&mut self.rows[v * self.words..(v + 1) * self.words], u);
            self.edge_count += 1;
        }
    }

    fn remove(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            bits::clear(&mut self.rows[u * self.words..(u + 1) * self.words], v);
            bits::clear(&mut self.rows[v * self.words..(v + 1) * self.words], u);
            self.edge_count -= 1;
        }
    }

    /// Toggle an edge; used by the symmetric-difference perturbation.
    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove(u, v);
        } else {
            self.insert(u, v);
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.insert(u, v);
        } else {
            self.remove(u, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(&self.rows[u * self.words..(u + 1) * self.words], v)
    }

    pub fn degree(&self, u: usize) -> usize {
        bits::count(&self.rows[u * self.words..(u + 1) * self.words])
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.rows[u * self.words..(u + 1) * self.words])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// View as a digraph with both orientations of every edge.
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for (u, v) in self.edges() {
            d.insert(u, v);
            d.insert(v, u);
        }
        d
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count)
    }
}

/// Directed graph. Self-loops are forbidden, 2-cycles are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    words: usize,
    out_rows: Vec<u64>,
    in_rows: Vec<u64>,
    arc_count: usize,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n.max(1));
        Digraph {
            n,
            words,
            out_rows: vec![0; words * n],
            in_rows: vec![0; words * n],
            arc_count: 0,
        }
    }

    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::parameter(format!(
                    "arc ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::parameter(format!("self-loop at vertex {u}")));
            }
            d.insert(u, v);
        }
        Ok(d)
    }

    /// Complete digraph: every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Self {
        let mut d = Digraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    d.insert(u, v);
                }
            }
        }
        d
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        if !self.has_arc(u, v) {
            bits::set(&mut self.out_rows[u * self.words..(u + 1) * self.words], v);
            bits::set(&mut self.in_rows[v * self.words..(v + 1) * self.words], u);
            self.arc_count += 1;
        }
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        if self.has_arc(u, v) {
            bits::clear(&mut self.out_rows[u * self.words..(u + 1) * self.words], v);
            bits::clear(&mut self.in_rows[v * self.words..(v + 1) * self.words], u);
            self.arc_count -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        bits::test(&self.out_rows[u * self.words..(u + 1) * self.words], v)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        bits::count(self.out_row(u))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        bits::count(self.in_row(v))
    }

    pub fn min_in_out_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.out_degree(v).min(self.in_degree(v)))
            .min()
            .unwrap_or(0)
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.out_row(u))
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.in_row(v))
    }

    pub(crate) fn out_row(&self, u: usize) -> &[u64] {
        &self.out_rows[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn in_row(&self, v: usize) -> &[u64] {
        &self.in_rows[v * self.words..(v + 1) * self.words]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// Subgraph induced on `keep` (deduplicated, sorted); vertex `i` of the
    /// result is `labels[i]` of the original.
    pub fn induced(&self, keep: &[usize]) -> (Digraph, Vec<usize>) {
        let mut labels: Vec<usize> = keep.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let index: std::collections::HashMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut d = Digraph::empty(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for v in self.out_neighbors(u) {
                if let Some(&j) = index.get(&v) {
                    d.insert(i, j);
                }
            }
        }
        (d, labels)
    }

    /// Union of arc sets; both digraphs must have the same vertex count.
    pub fn union(&self, other: &Digraph) -> Result<Digraph> {
        if self.n != other.n {
            return Err(Error::parameter(format!(
                "union of digraphs with n = {} and n = {}",
                self.n, other.n
            )));
        }
        let mut d = self.clone();
        for (u, v) in other.arcs() {
            d.insert(u, v);
        }
        Ok(d)
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={})", self.n, self.arc_count)
    }
}

/// A tournament: a complete graph with exactly one orientation per edge.
#[derive(Clone, PartialEq, Eq)]
pub struct Tournament {
    inner: Digraph,
}

impl Tournament {
    /// Validates that `d` is a total orientation: exactly one of `(u, v)`,
    /// `(v, u)` for every pair, hence no 2-cycles.
    pub fn from_digraph(d: Digraph) -> Result<Self> {
        let n = d.n();
        for u in 0..n {
            for v in u + 1..n {
                let fwd = d.has_arc(u, v);
                let bwd = d.has_arc(v, u);
                if fwd == bwd {
                    return Err(Error::structural(format!(
                        "pair ({u}, {v}) has {} arcs; a tournament needs exactly one",
                        if fwd { 2 } else { 0 }
                    )));
                }
            }
        }
        // Sum of indegrees counts each arc once.
        debug_assert_eq!(
            (0..n).map(|v| d.in_degree(v)).sum::<usize>(),
            n * (n.saturating_sub(1)) / 2
        );
        Ok(Tournament { inner: d })
    }

    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Tournament::from_digraph(Digraph::new(n, arcs)?)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.inner
    }

    pub fn into_digraph(self) -> Digraph {
        self.inner
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    /// True when the edge `{u, v}` is oriented from `u` to `v`.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.inner.has_arc(u, v)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inner.in_degree(v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.inner.out_degree(v)
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(n={})", self.n())
    }
}

/// k-uniform hypergraph; edges are stored in canonical sorted-vertex order
/// and the edge list is lexicographically sorted and deduplicated.
#[derive(Clone, PartialEq, Eq)]
pub struct KUniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
    index: HashSet<Vec<usize>>,
}

impl KUniformHypergraph {
    pub fn new(n: usize, k: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::parameter(format!("uniformity k = {k} must be >= 2")));
        }
        let mut canonical: Vec<Vec<usize>> = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e.len() != k || e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parameter(format!(
                    "edge {e:?} does not have exactly {k} distinct vertices"
                )));
            }
            if *e.last().unwrap() >= n {
                return Err(Error::parameter(format!(
                    "edge {e:?} out of range for n = {n}"
                )));
            }
            canonical.push(e);
        }
        canonical.sort_unstable();
        canonical.dedup();
        let index = canonical.iter().cloned().collect();
        Ok(KUniformHypergraph {
            n,
            k,
            edges: canonical,
            index,
        })
    }

    pub fn empty(n: usize, k: usize) -> Self {
        KUniformHypergraph::new(n, k, std::iter::empty()).expect("k >= 2")
    }

    /// All `C(n, k)` edges.
    pub fn complete(n: usize, k: usize) -> Self {
        let edges = k_subsets(n, k);
        KUniformHypergraph::new(n, k, edges).expect("valid complete hypergraph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Membership test; the query may be in any vertex order.
    pub fn contains_edge(&self, e: &[usize]) -> bool {
        let mut key = e.to_vec();
        key.sort_unstable();
        self.index.contains(&key)
    }

    /// Number of edges containing every vertex of `set`.
    pub fn degree_of_set(&self, set: &[usize]) -> usize {
        self.edges
            .iter()
            .filter(|e| set.iter().all(|v| e.binary_search(v).is_ok()))
            .count()
    }

    /// Minimum q-degree: the minimum over all q-subsets of the vertex set of
    /// the number of edges containing the subset. Exact by enumeration, so
    /// large vertex sets are refused.
    pub fn min_q_degree(&self, q: usize) -> Result<usize> {
        if q < 1 || q > self.k.saturating_sub(1) {
            return Err(Error::parameter(format!(
                "q = {q} out of range 1..={}",
                self.k - 1
            )));
        }
        if self.n < self.k {
            return Err(Error::parameter(format!(
                "n = {} is smaller than k = {}",
                self.n, self.k
            )));
        }
        if q >= 2 && self.n > 40 {
            return Err(Error::guard(format!(
                "min_q_degree enumerates all C({}, {q}) subsets; refusing n > 40",
                self.n
            )));
        }
        // Count subset occurrences edge-by-edge, then the minimum is zero
        // unless every q-subset was seen.
        let mut counts: std::collections::HashMap<Vec<usize>, usize> =
            std::collections::HashMap::new();
        for e in &self.edges {
            for s in k_subsets_of(e, q) {
                *counts.entry(s).or_insert(0) += 1;
            }
        }
        let total_subsets = binomial(self.n, q);
        if (counts.len() as u128) < total_subsets {
            return Ok(0);
        }
        Ok(counts.values().copied().min().unwrap_or(0))
    }

    /// Union of edge sets; requires matching `n` and `k`.
    pub fn union(&self, other: &KUniformHypergraph) -> Result<KUniformHypergraph> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::parameter(format!(
                "union of hypergraphs ({}, {}) and ({}, {})",
                self.n, self.k, other.n, other.k
            )));
        }
        let edges = self.edges.iter().chain(other.edges.iter()).cloned();
        KUniformHypergraph::new(self.n, self.k, edges)
    }
}

impl std::fmt::Debug for KUniformHypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "KUniformHypergraph(n={}, k={}, m={})",
            self.n,
            self.k,
            self.edges.len()
        )
    }
}

/// Bipartite graph on parts `0..a` and `0..b` with cross edges only.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    a: usize,
    b: usize,
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    pub fn new(a: usize, b: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj_a = vec![Vec::new(); a];
        let mut adj_b = vec![Vec::new(); b];
        let mut seen = HashSet::new();
        let mut edge_count = 0;
        for (x, y) in edges {
            if x >= a || y >= b {
                return Err(Error::parameter(format!(
                    "edge ({x}, {y}) out of range for parts of size {a} and {b}"
                )));
            }
            if seen.insert((x, y)) {
                adj_a[x].push(y);
                adj_b[y].push(x);
                edge_count += 1;
            }
        }
        for l in adj_a.iter_mut().chain(adj_b.iter_mut()) {
            l.sort_unstable();
        }
        Ok(BipartiteGraph {
            a,
            b,
            adj_a,
            adj_b,
            edge_count,
        })
    }

    pub fn complete(a: usize, b: usize) -> Self {
        BipartiteGraph::new(a, b, (0..a).flat_map(|x| (0..b).map(move |y| (x, y))))
            .expect("valid complete bipartite graph")
    }

    pub fn part_a(&self) -> usize {
        self.a
    }

    pub fn part_b(&self) -> usize {
        self.b
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj_a[x].binary_search(&y).is_ok()
    }

    pub fn neighbors_a(&self, x: usize) -> &[usize] {
        &self.adj_a[x]
    }

    pub fn neighbors_b(&self, y: usize) -> &[usize] {
        &self.adj_b[y]
    }

    pub fn degree_a(&self, x: usize) -> usize {
        self.adj_a[x].len()
    }

    pub fn degree_b(&self, y: usize) -> usize {
        self.adj_b[y].len()
    }

    /// Minimum degree on each side; `(0, 0)` conventions apply to empty parts.
    pub fn min_degrees(&self) -> (usize, usize) {
        let min_a = (0..self.a).map(|x| self.degree_a(x)).min().unwrap_or(0);
        let min_b = (0..self.b).map(|y| self.degree_b(y)).min().unwrap_or(0);
        (min_a, min_b)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_a
            .iter()
            .enumerate()
            .flat_map(|(x, l)| l.iter().map(move |&y| (x, y)))
    }

    pub fn union(&self, other: &BipartiteGraph) -> Result<BipartiteGraph> {
        if self.a != other.a || self.b != other.b {
            return Err(Error::parameter("union of mismatched bipartite graphs".to_string()));
        }
        BipartiteGraph::new(self.a, self.b, self.edges().chain(other.edges()))
    }
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BipartiteGraph(a={}, b={}, m={})",
            self.a, self.b, self.edge_count
        )
    }
}

/// True iff `order` is a permutation of all vertices of `d` and every
/// consecutive arc, cyclically, is present. Malformed input yields `false`.
pub fn validate_hamilton_cycle(d: &Digraph, order: &[usize]) -> bool {
    if order.len() != d.n() || d.n() < 2 {
        return false;
    }
    let mut seen = vec![false; d.n()];
    for &v in order {
        if v >= d.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cyclic_arcs_present(d, order)
}

/// True iff `order` lists >= 2 distinct vertices forming a directed cycle
/// in `d` (not necessarily spanning).
pub fn validate_simple_cycle(d: &Digraph, order: &[usize]) -> bool {
    if order.len() < 2 {
        return false;
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || *sorted.last().unwrap() >= d.n() {
        return false;
    }
    cyclic_arcs_present(d, order)
}

fn cyclic_arcs_present(d: &Digraph, order: &[usize]) -> bool {
    (0..order.len()).all(|i| d.has_arc(order[i], order[(i + 1) % order.len()]))
}

/// Validate a loose Hamilton cycle presented as a cyclic sequence of edges.
///
/// Each edge is an ordered vertex list whose first and last entries are the
/// junction vertices: the last vertex of an edge must equal the first vertex
/// of the next edge (cyclically), interior vertices appear nowhere else, the
/// edges all belong to `h`, and together they cover every vertex. A valid
/// cycle has exactly `n / (k - 1)` edges, which requires `(k - 1) | n`.
pub fn validate_loose_hamilton_cycle(h: &KUniformHypergraph, cycle: &[Vec<usize>]) -> bool {
    let (n, k) = (h.n(), h.k());
    if k < 3 || n % (k - 1) != 0 {
        return false;
    }
    let want = n / (k - 1);
    if cycle.len() != want || want < 2 {
        return false;
    }
    let mut appearances = vec![0usize; n];
    for (i, e) in cycle.iter().enumerate() {
        if e.len() != k || e.iter().any(|&v| v >= n) {
            return false;
        }
        if !h.contains_edge(e) {
            return false;
        }
        let next = &cycle[(i + 1) % cycle.len()];
        if *e.last().unwrap() != next[0] {
            return false;
        }
        for &v in e {
            appearances[v] += 1;
        }
    }
    // Junctions appear exactly twice (once as a last vertex, once as a first);
    // every other vertex exactly once. Coverage of all n vertices follows.
    for e in cycle {
        for (j, &v) in e.iter().enumerate() {
            let expected = if j == 0 || j == e.len() - 1 { 2 } else { 1 };
            if appearances[v] != expected {
                return false;
            }
        }
    }
    true
}

/// True iff `m` is a set of edges of `h`, pairwise disjoint, covering every
/// vertex. Requires `k | n` implicitly.
pub fn validate_perfect_matching(h: &KUniformHypergraph, m: &[Vec<usize>]) -> bool {
    let n = h.n();
    let mut covered = vec![false; n];
    for e in m {
        if !h.contains_edge(e) {
            return false;
        }
        for &v in e {
            if v >= n || covered[v] {
                return false;
            }
            covered[v] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// Binomial coefficient as u128; saturates are not needed at desk scale but
/// intermediate products use u128 to stay exact.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = (0..n).collect();
    k_subsets_of(&items, k)
}

/// All k-subsets of a sorted slice, in lexicographic order.
pub fn k_subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
