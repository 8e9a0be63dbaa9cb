//! Extremal and random dense base instances.
//!
//! The extremal families here are the tightness witnesses: unbalanced
//! complete bipartite graphs and hypergraphs, and transitive
//! cluster-tournaments. The random families guarantee a minimum (q-)degree by
//! construction, with per-vertex uniform draws, so no rejection loop is
//! needed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::{rng_from_seed, sample_distinct};
use crate::types::{binomial, k_subsets, Digraph, Graph, KUniformHypergraph, Tournament};

/// Parameters for the dense random digraph family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DenseBaseConfig {
    pub n: usize,
    /// Minimum-degree fraction in (0, 1): every in- and out-degree is at
    /// least `ceil(alpha * n)`.
    pub alpha: f64,
    pub seed: u64,
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite_graph(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        .expect("complete bipartite edges are valid")
}

/// Complete bipartite k-uniform hypergraph: parts of sizes `n` and `2kn`
/// (labels `0..n` and `n..(2k+1)n`), with every k-set meeting both parts.
pub fn complete_bipartite_hypergraph(k: usize, n: usize) -> Result<KUniformHypergraph> {
    if k < 3 {
        return Err(Error::parameter(format!("k = {k} must be >= 3")));
    }
    if n < 1 {
        return Err(Error::parameter("n must be >= 1".to_string()));
    }
    let total = (2 * k + 1) * n;
    if binomial(total, k) > 2_000_000 {
        return Err(Error::guard(format!(
            "complete bipartite hypergraph on {total} vertices enumerates C({total}, {k}) k-sets"
        )));
    }
    let edges = k_subsets(total, k)
        .into_iter()
        .filter(|e| e.iter().any(|&v| v < n) && e.iter().any(|&v| v >= n));
    KUniformHypergraph::new(total, k, edges)
}

/// Regular tournament on `2d + 1` vertices via the rotational construction:
/// vertex `i` beats `i + 1, ..., i + d` modulo `2d + 1`.
pub fn regular_tournament(d: usize) -> Tournament {
    let n = 2 * d + 1;
    let arcs = (0..n).flat_map(|i| (1..=d).map(move |j| (i, (i + j) % n)));
    Tournament::new(n, arcs).expect("rotational construction is a tournament")
}

/// `r` copies of the regular tournament on `2d + 1` vertices, with every arc
/// between copies pointing from the lower-indexed copy to the higher.
pub fn transitive_cluster_tournament(r: usize, d: usize) -> Result<Tournament> {
    if r < 1 {
        return Err(Error::parameter("cluster count r must be >= 1".to_string()));
    }
    let block = 2 * d + 1;
    let n = r * block;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for c in 0..r {
        let base = c * block;
        for i in 0..block {
            for j in 1..=d {
                arcs.push((base + i, base + (i + j) % block));
            }
        }
    }
    for ci in 0..r {
        for cj in ci + 1..r {
            for u in ci * block..(ci + 1) * block {
                for v in cj * block..(cj + 1) * block {
                    arcs.push((u, v));
                }
            }
        }
    }
    Tournament::new(n, arcs)
}

/// Random digraph with all in- and out-degrees at least `ceil(alpha * n)`:
/// every vertex draws that many uniform out-neighbours and in-neighbours,
/// and the digraph is the union of all draws.
pub fn random_min_degree_digraph(cfg: &DenseBaseConfig) -> Result<Digraph> {
    let n = cfg.n;
    if !(0.0..1.0).contains(&cfg.alpha) {
        return Err(Error::parameter(format!(
            "alpha = {} outside (0, 1)",
            cfg.alpha
        )));
    }
    let target = (cfg.alpha * n as f64).ceil() as usize;
    if n == 0 || target > n - 1 {
        return Err(Error::parameter(format!(
            "target degree {target} unreachable with n = {n}"
        )));
    }
    let mut rng = rng_from_seed(cfg.seed);
    let mut d = Digraph::empty(n);
    for v in 0..n {
        // skip v itself in the candidate indexing
        let other = |idx: u64| {
            let w = idx as usize;
            if w < v {
                w
            } else {
                w + 1
            }
        };
        for &idx in &sample_distinct(&mut rng, (n - 1) as u64, target as u64) {
            d.insert(v, other(idx));
        }
        for &idx in &sample_distinct(&mut rng, (n - 1) as u64, target as u64) {
            d.insert(other(idx), v);
        }
    }
    debug_assert!(d.min_in_out_degree() >= target);
    Ok(d)
}

/// Random k-uniform hypergraph with minimum (k-1)-degree at least
/// `ceil(alpha * n_total)`: every (k-1)-subset draws that many uniform
/// completing vertices.
pub fn random_min_qdegree_hypergraph(
    k: usize,
    n_total: usize,
    alpha: f64,
    seed: u64,
) -> Result<KUniformHypergraph> {
    if k < 2 {
        return Err(Error::parameter(format!("k = {k} must be >= 2")));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::parameter(format!("alpha = {alpha} outside (0, 1)")));
    }
    let target = (alpha * n_total as f64).ceil() as usize;
    let completions = n_total.saturating_sub(k - 1);
    if target > completions {
        return Err(Error::parameter(format!(
            "target degree {target} exceeds the {completions} completing vertices"
        )));
    }
    if binomial(n_total, k - 1) > 2_000_000 {
        return Err(Error::guard(format!(
            "random_min_qdegree_hypergraph enumerates C({n_total}, {}) subsets",
            k - 1
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for s in k_subsets(n_total, k - 1) {
        // candidates are the vertices outside s, in ascending order
        let candidates: Vec<usize> = (0..n_total).filter(|v| !s.contains(v)).collect();
        for &idx in &sample_distinct(&mut rng, candidates.len() as u64, target as u64) {
            let mut e = s.clone();
            e.push(candidates[idx as usize]);
            edges.push(e);
        }
    }
    KUniformHypergraph::new(n_total, k, edges)
}

/// Random bipartite graph where every vertex on each side has degree at
/// least `ceil(alpha * side)`: per-vertex uniform draws on both sides.
pub fn random_min_degree_bipartite(
    side: usize,
    alpha: f64,
    seed: u64,
) -> Result<crate::types::BipartiteGraph> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::parameter(format!("alpha = {alpha} outside (0, 1)")));
    }
    let target = (alpha * side as f64).ceil() as usize;
    if target > side {
        return Err(Error::parameter(format!(
            "target degree {target} exceeds side size {side}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for x in 0..side {
        for &y in &sample_distinct(&mut rng, side as u64, target as u64) {
            edges.push((x, y as usize));
        }
    }
    for y in 0..side {
        for &x in &sample_distinct(&mut rng, side as u64, target as u64) {
            edges.push((x as usize, y));
        }
    }
    crate::types::BipartiteGraph::new(side, side, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_small() {
        let g = complete_bipartite_graph(1, 1);
        assert_eq!(g.edge_count(), 1);
        let g = complete_bipartite_graph(2, 3);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(0, 4));
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn complete_bipartite_hypergraph_count() {
        // k = 3, n = 1: 7 vertices; all 3-sets except those inside the big part
        let h = complete_bipartite_hypergraph(3, 1).unwrap();
        assert_eq!(h.n(), 7);
        assert_eq!(h.edge_count(), 15);
        let expected = binomial(7, 3) - binomial(6, 3) - binomial(1, 3);
        assert_eq!(h.edge_count() as u128, expected);

        // general count: C((2k+1)n, k) - C(2kn, k) - C(n, k)
        let h = complete_bipartite_hypergraph(3, 2).unwrap();
        assert_eq!(
            h.edge_count() as u128,
            binomial(14, 3) - binomial(12, 3) - binomial(2, 3)
        );
        assert!(complete_bipartite_hypergraph(2, 3).is_err());
    }

    #[test]
    fn regular_tournament_degrees() {
        let t = regular_tournament(0);
        assert_eq!(t.n(), 1);
        // d = 1 is the directed 3-cycle
        let t = regular_tournament(1);
        assert!(t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0));
        // all indegrees and outdegrees equal d, exhaustively up to d = 20
        for d in 0..=20 {
            let t = regular_tournament(d);
            for v in 0..t.n() {
                assert_eq!(t.in_degree(v), d);
                assert_eq!(t.out_degree(v), d);
            }
        }
    }

    #[test]
    fn cluster_tournament_structure() {
        // r = 1 is the regular tournament itself
        assert_eq!(transitive_cluster_tournament(1, 2).unwrap(), regular_tournament(2));
        // r = 3, d = 0 is the transitive tournament on 3 vertices
        let t = transitive_cluster_tournament(3, 0).unwrap();
        assert!(t.beats(0, 1) && t.beats(0, 2) && t.beats(1, 2));
        // r = 2, d = 1: 9 inter-cluster arcs, all from copy 1 to copy 2
        let t = transitive_cluster_tournament(2, 1).unwrap();
        let mut inter = 0;
        for u in 0..3 {
            for v in 3..6 {
                assert!(t.beats(u, v));
                inter += 1;
            }
        }
        assert_eq!(inter, 9);
        assert!(transitive_cluster_tournament(0, 1).is_err());
    }

    #[test]
    fn random_digraph_degrees_and_determinism() {
        let cfg = DenseBaseConfig {
            n: 10,
            alpha: 0.3,
            seed: 12,
        };
        let d = random_min_degree_digraph(&cfg).unwrap();
        for v in 0..10 {
            assert!(d.in_degree(v) >= 3, "in_degree({v}) = {}", d.in_degree(v));
            assert!(d.out_degree(v) >= 3);
        }
        assert_eq!(d, random_min_degree_digraph(&cfg).unwrap());

        // ceil(alpha n) = n - 1 forces the complete digraph
        let cfg = DenseBaseConfig {
            n: 6,
            alpha: 0.8,
            seed: 3,
        };
        let d = random_min_degree_digraph(&cfg).unwrap();
        assert_eq!(d.arc_count(), 30);

        let bad = DenseBaseConfig {
            n: 5,
            alpha: 0.99,
            seed: 0,
        };
        assert!(random_min_degree_digraph(&bad).is_err());
    }

    #[test]
    fn random_hypergraph_degrees_and_determinism() {
        let h = random_min_qdegree_hypergraph(3, 9, 0.5, 7).unwrap();
        assert!(h.min_q_degree(2).unwrap() >= 5);
        assert_eq!(h, random_min_qdegree_hypergraph(3, 9, 0.5, 7).unwrap());

        // target = n - k + 1 forces the complete hypergraph
        let h = random_min_qdegree_hypergraph(3, 7, 5.0 / 7.0, 1).unwrap();
        assert_eq!(h.edge_count() as u128, binomial(7, 3));

        assert!(random_min_qdegree_hypergraph(3, 9, 0.9, 0).is_err());
    }

    #[test]
    fn random_bipartite_degrees() {
        let g = random_min_degree_bipartite(20, 0.2, 5).unwrap();
        let (ma, mb) = g.min_degrees();
        assert!(ma >= 4 && mb >= 4);
        assert_eq!(
            g,
            random_min_degree_bipartite(20, 0.2, 5).unwrap()
        );
    }

    #[test]
    fn generators_are_pure() {
        assert_eq!(
            complete_bipartite_hypergraph(3, 2).unwrap(),
            complete_bipartite_hypergraph(3, 2).unwrap()
        );
        assert_eq!(regular_tournament(4), regular_tournament(4));
    }
}
