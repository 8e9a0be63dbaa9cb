//! Random perturbation models.
//!
//! Four models are provided, each a deterministic function of the input and a
//! seeded [`PerturbSpec`]:
//!
//! * **add** — union with `m` uniformly random distinct edges/arcs drawn from
//!   all possible ones (the drawn set may overlap the input), or with each
//!   possible edge independently with probability `p`;
//! * **symmetric-difference** — toggle `m` uniformly random distinct vertex
//!   pairs;
//! * **resample** — re-decide `m` uniformly random distinct vertex pairs by
//!   independent fair coins;
//! * **tournament-flip** — re-orient `m` uniformly random distinct edges of a
//!   tournament uniformly at random (so each selected edge flips with
//!   probability 1/2), or flip each edge independently with probability `p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::{rng_from_seed, sample_distinct};
use crate::types::{binomial, Digraph, Graph, KUniformHypergraph, Tournament};
use rand::Rng;

/// Perturbation size: a fixed count of affected edges or a per-edge
/// probability. Exactly one of the two is ever set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Magnitude {
    Count(u64),
    Probability(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerturbMode {
    Add,
    SymmetricDifference,
    Resample,
    TournamentFlip,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbSpec {
    pub mode: PerturbMode,
    pub magnitude: Magnitude,
    pub seed: u64,
    /// Off by default: when set, the add model samples only edges absent
    /// from the input, so exactly `m` new edges appear.
    #[serde(default)]
    pub fresh_only: bool,
}

impl PerturbSpec {
    pub fn add_m(m: u64, seed: u64) -> Self {
        PerturbSpec {
            mode: PerturbMode::Add,
            magnitude: Magnitude::Count(m),
            seed,
            fresh_only: false,
        }
    }

    pub fn add_p(p: f64, seed: u64) -> Self {
        PerturbSpec {
            mode: PerturbMode::Add,
            magnitude: Magnitude::Probability(p),
            seed,
            fresh_only: false,
        }
    }

    pub fn with_mode(mode: PerturbMode, magnitude: Magnitude, seed: u64) -> Self {
        PerturbSpec {
            mode,
            magnitude,
            seed,
            fresh_only: false,
        }
    }

    fn checked_probability(&self) -> Result<f64> {
        match self.magnitude {
            Magnitude::Probability(p) if (0.0..=1.0).contains(&p) => Ok(p),
            Magnitude::Probability(p) => {
                Err(Error::parameter(format!("probability {p} outside [0, 1]")))
            }
            Magnitude::Count(_) => Err(Error::parameter(
                "this operation needs a probability magnitude".to_string(),
            )),
        }
    }

    fn expect_mode(&self, mode: PerturbMode) -> Result<()> {
        if self.mode == mode {
            Ok(())
        } else {
            Err(Error::parameter(format!(
                "spec mode {:?} does not match operation ({:?})",
                self.mode, mode
            )))
        }
    }
}

// ---- canonical edge universes -------------------------------------------

/// Unordered pair index: {u < v} -> v(v-1)/2 + u.
fn pair_unrank(idx: u64) -> (usize, usize) {
    // v is the largest integer with v(v-1)/2 <= idx
    let mut v = ((((8 * idx + 1) as f64).sqrt() as u64).saturating_add(1) / 2).max(1);
    while v * (v - 1) / 2 > idx {
        v -= 1;
    }
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    let u = idx - v * (v - 1) / 2;
    (u as usize, v as usize)
}

fn pair_count(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// Ordered pair index over n(n-1) non-loop pairs.
fn arc_unrank(idx: u64, n: usize) -> (usize, usize) {
    let u = (idx / (n as u64 - 1)) as usize;
    let r = (idx % (n as u64 - 1)) as usize;
    let v = if r < u { r } else { r + 1 };
    (u, v)
}

fn arc_count(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1)
}

/// Colex unranking of a k-subset of 0..n.
fn subset_unrank(mut idx: u64, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= idx
        let mut c = i - 1;
        while binomial(c + 1, i) <= idx as u128 {
            c += 1;
        }
        idx -= binomial(c, i) as u64;
        out[i - 1] = c;
    }
    out
}

fn subset_count(n: usize, k: usize) -> Result<u64> {
    let c = binomial(n, k);
    u64::try_from(c).map_err(|_| {
        Error::parameter(format!("edge universe C({n}, {k}) does not fit in 64 bits"))
    })
}

// ---- add model ------------------------------------------------------------

fn sampled_count(spec: &PerturbSpec, universe: u64, present: u64) -> Result<Vec<u64>> {
    let mut rng = rng_from_seed(spec.seed);
    match spec.magnitude {
        Magnitude::Count(m) => {
            if spec.fresh_only {
                if m > universe - present {
                    return Err(Error::parameter(format!(
                        "m = {m} exceeds the {} absent edges",
                        universe - present
                    )));
                }
                Ok(sample_distinct(&mut rng, universe - present, m))
            } else {
                if m > universe {
                    return Err(Error::parameter(format!(
                        "m = {m} exceeds the {universe} possible edges"
                    )));
                }
                Ok(sample_distinct(&mut rng, universe, m))
            }
        }
        Magnitude::Probability(_) => {
            let p = spec.checked_probability()?;
            let picked = (0..universe).filter(|_| rng.gen_bool(p)).collect();
            Ok(picked)
        }
    }
}

/// Union a graph with random extra edges.
pub fn add_random_edges_graph(g: &Graph, spec: &PerturbSpec) -> Result<Graph> {
    spec.expect_mode(PerturbMode::Add)?;
    let universe = pair_count(g.n());
    let before = g.edge_count();
    let mut out = g.clone();
    if spec.fresh_only && matches!(spec.magnitude, Magnitude::Count(_)) {
        let absent: Vec<u64> = (0..universe)
            .filter(|&i| {
                let (u, v) = pair_unrank(i);
                !g.has_edge(u, v)
            })
            .collect();
        for &slot in &sampled_count(spec, universe, before as u64)? {
            let (u, v) = pair_unrank(absent[slot as usize]);
            out.set_edge(u, v, true);
        }
    } else {
        for &idx in &sampled_count(spec, universe, before as u64)? {
            let (u, v) = pair_unrank(idx);
            out.set_edge(u, v, true);
        }
    }
    if let Magnitude::Count(m) = spec.magnitude {
        assert!(out.edge_count() as u64 >= (before as u64).max(m));
        assert!(out.edge_count() as u64 <= before as u64 + m);
    }
    Ok(out)
}

/// Union a digraph with random extra arcs, drawn from all `2 C(n, 2)`
/// ordered pairs.
pub fn add_random_arcs(d: &Digraph, spec: &PerturbSpec) -> Result<Digraph> {
    spec.expect_mode(PerturbMode::Add)?;
    let universe = arc_count(d.n());
    let before = d.arc_count();
    let mut out = d.clone();
    if spec.fresh_only && matches!(spec.magnitude, Magnitude::Count(_)) {
        let absent: Vec<u64> = (0..universe)
            .filter(|&i| {
                let (u, v) = arc_unrank(i, d.n());
                !d.has_arc(u, v)
            })
            .collect();
        for &slot in &sampled_count(spec, universe, before as u64)? {
            let (u, v) = arc_unrank(absent[slot as usize], d.n());
            out.insert(u, v);
        }
    } else {
        for &idx in &sampled_count(spec, universe, before as u64)? {
            let (u, v) = arc_unrank(idx, d.n());
            out.insert(u, v);
        }
    }
    if let Magnitude::Count(m) = spec.magnitude {
        assert!(out.arc_count() as u64 >= (before as u64).max(m));
        assert!(out.arc_count() as u64 <= before as u64 + m);
    }
    Ok(out)
}

/// Union a k-uniform hypergraph with random extra edges from all `C(n, k)`.
pub fn add_random_hyperedges(
    h: &KUniformHypergraph,
    spec: &PerturbSpec,
) -> Result<KUniformHypergraph> {
    spec.expect_mode(PerturbMode::Add)?;
    let universe = subset_count(h.n(), h.k())?;
    let before = h.edge_count();
    let new_edges: Vec<Vec<usize>> = if spec.fresh_only
        && matches!(spec.magnitude, Magnitude::Count(_))
    {
        let absent: Vec<u64> = (0..universe)
            .filter(|&i| !h.contains_edge(&subset_unrank(i, h.k())))
            .collect();
        sampled_count(spec, universe, before as u64)?
            .iter()
            .map(|&slot| subset_unrank(absent[slot as usize], h.k()))
            .collect()
    } else {
        sampled_count(spec, universe, before as u64)?
            .iter()
            .map(|&idx| subset_unrank(idx, h.k()))
            .collect()
    };
    let m_drawn = new_edges.len();
    let out = KUniformHypergraph::new(h.n(), h.k(), h.edges().iter().cloned().chain(new_edges))?;
    if let Magnitude::Count(m) = spec.magnitude {
        assert!(out.edge_count() as u64 >= (before as u64).max(m));
        assert!(out.edge_count() <= before + m_drawn);
    }
    Ok(out)
}

/// The uniform m-edge k-uniform hypergraph distribution.
pub fn uniform_hypergraph(n: usize, k: usize, m: u64, seed: u64) -> Result<KUniformHypergraph> {
    add_random_hyperedges(&KUniformHypergraph::empty(n, k), &PerturbSpec::add_m(m, seed))
}

/// The uniform m-arc digraph distribution.
pub fn uniform_digraph(n: usize, m: u64, seed: u64) -> Result<Digraph> {
    add_random_arcs(&Digraph::empty(n), &PerturbSpec::add_m(m, seed))
}

// ---- symmetric difference ---------------------------------------------------

/// Toggle `m` uniformly random distinct vertex pairs.
pub fn symmetric_difference(g: &Graph, spec: &PerturbSpec) -> Result<Graph> {
    spec.expect_mode(PerturbMode::SymmetricDifference)?;
    let universe = pair_count(g.n());
    let m = match spec.magnitude {
        Magnitude::Count(m) => m,
        Magnitude::Probability(_) => {
            return Err(Error::parameter(
                "symmetric difference takes an edge count, not a probability".to_string(),
            ))
        }
    };
    if m > universe {
        return Err(Error::parameter(format!(
            "m = {m} exceeds the {universe} vertex pairs"
        )));
    }
    let mut rng = rng_from_seed(spec.seed);
    let mut out = g.clone();
    for &idx in &sample_distinct(&mut rng, universe, m) {
        let (u, v) = pair_unrank(idx);
        out.toggle(u, v);
    }
    Ok(out)
}

// ---- resample ---------------------------------------------------------------

/// Choose `m` uniformly random distinct pairs and set each present or absent
/// by an independent fair coin.
pub fn resample(g: &Graph, spec: &PerturbSpec) -> Result<Graph> {
    spec.expect_mode(PerturbMode::Resample)?;
    let universe = pair_count(g.n());
    let m = match spec.magnitude {
        Magnitude::Count(m) => m,
        Magnitude::Probability(_) => {
            return Err(Error::parameter(
                "resample takes an edge count, not a probability".to_string(),
            ))
        }
    };
    if m > universe {
        return Err(Error::parameter(format!(
            "m = {m} exceeds the {universe} vertex pairs"
        )));
    }
    let mut rng = rng_from_seed(spec.seed);
    let picked = sample_distinct(&mut rng, universe, m);
    let mut out = g.clone();
    // coins are assigned in sorted pair order, so the outcome is independent
    // of how the sample set was produced
    for &idx in &picked {
        let (u, v) = pair_unrank(idx);
        out.set_edge(u, v, rng.gen_bool(0.5));
    }
    Ok(out)
}

// ---- tournament flip ---------------------------------------------------------

/// Re-orient random edges of a tournament.
///
/// With a count magnitude, `m` distinct edges are designated and each receives
/// a fresh uniform orientation. With a probability magnitude, each edge flips
/// independently with probability `p` (the two coincide when `m = 2 p C(n,2)`).
pub fn tournament_flip(t: &Tournament, spec: &PerturbSpec) -> Result<Tournament> {
    spec.expect_mode(PerturbMode::TournamentFlip)?;
    let n = t.n();
    let universe = pair_count(n);
    let mut rng = rng_from_seed(spec.seed);
    let mut d = t.as_digraph().clone();
    let flip = |d: &mut Digraph, u: usize, v: usize| {
        let (from, to) = if d.has_arc(u, v) { (u, v) } else { (v, u) };
        d.remove(from, to);
        d.insert(to, from);
    };
    match spec.magnitude {
        Magnitude::Count(m) => {
            if m > universe {
                return Err(Error::parameter(format!(
                    "m = {m} exceeds the {universe} edges"
                )));
            }
            for &idx in &sample_distinct(&mut rng, universe, m) {
                let (u, v) = pair_unrank(idx);
                if rng.gen_bool(0.5) {
                    flip(&mut d, u, v);
                }
            }
        }
        Magnitude::Probability(_) => {
            let p = spec.checked_probability()?;
            for idx in 0..universe {
                if rng.gen_bool(p) {
                    let (u, v) = pair_unrank(idx);
                    flip(&mut d, u, v);
                }
            }
        }
    }
    Tournament::from_digraph(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::regular_tournament;

    #[test]
    fn pair_unranking_is_bijective() {
        let n = 12;
        let mut seen = std::collections::HashSet::new();
        for idx in 0..pair_count(n) {
            let (u, v) = pair_unrank(idx);
            assert!(u < v && v < n);
            assert!(seen.insert((u, v)));
        }
        assert_eq!(seen.len() as u64, pair_count(n));
    }

    #[test]
    fn arc_unranking_is_bijective() {
        let n = 9;
        let mut seen = std::collections::HashSet::new();
        for idx in 0..arc_count(n) {
            let (u, v) = arc_unrank(idx, n);
            assert!(u != v && u < n && v < n);
            assert!(seen.insert((u, v)));
        }
        assert_eq!(seen.len() as u64, arc_count(n));
    }

    #[test]
    fn subset_unranking_is_bijective() {
        let (n, k) = (9, 3);
        let mut seen = std::collections::HashSet::new();
        for idx in 0..subset_count(n, k).unwrap() {
            let s = subset_unrank(idx, k);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(*s.last().unwrap() < n);
            assert!(seen.insert(s));
        }
        assert_eq!(seen.len() as u128, binomial(n, k));
    }

    #[test]
    fn add_zero_is_identity() {
        let g = Graph::new(5, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(add_random_edges_graph(&g, &PerturbSpec::add_m(0, 1)).unwrap(), g);
        let h = KUniformHypergraph::complete(5, 3);
        assert_eq!(
            add_random_hyperedges(&h, &PerturbSpec::add_m(0, 1)).unwrap(),
            h
        );
    }

    #[test]
    fn add_p_one_gives_complete_digraph() {
        let d = Digraph::empty(6);
        let full = add_random_arcs(&d, &PerturbSpec::add_p(1.0, 5)).unwrap();
        // all 2 C(n,2) possible arcs, 2-cycles included
        assert_eq!(full.arc_count(), 2 * 15);
    }

    #[test]
    fn add_m_too_large_is_rejected() {
        let g = Graph::empty(4);
        assert!(add_random_edges_graph(&g, &PerturbSpec::add_m(7, 0)).is_err());
        assert!(add_random_edges_graph(&g, &PerturbSpec::add_m(6, 0)).is_ok());
    }

    #[test]
    fn add_is_deterministic_under_seed() {
        let d = Digraph::empty(10);
        let a = add_random_arcs(&d, &PerturbSpec::add_m(17, 99)).unwrap();
        let b = add_random_arcs(&d, &PerturbSpec::add_m(17, 99)).unwrap();
        assert_eq!(a, b);
        let c = add_random_arcs(&d, &PerturbSpec::add_m(17, 100)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn add_fresh_only_adds_exactly_m() {
        let g = Graph::new(6, vec![(0, 1), (0, 2), (3, 4)]).unwrap();
        let mut spec = PerturbSpec::add_m(5, 11);
        spec.fresh_only = true;
        let out = add_random_edges_graph(&g, &spec).unwrap();
        assert_eq!(out.edge_count(), g.edge_count() + 5);
        for (u, v) in g.edges() {
            assert!(out.has_edge(u, v));
        }
    }

    #[test]
    fn add_m_marginal_frequency() {
        // each pair should be included with probability m/N
        let g = Graph::empty(4);
        let (m, trials) = (3u64, 10_000);
        let mut hits = 0u64;
        for seed in 0..trials {
            let out = add_random_edges_graph(&g, &PerturbSpec::add_m(m, seed)).unwrap();
            if out.has_edge(0, 1) {
                hits += 1;
            }
        }
        let p = m as f64 / 6.0;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        assert!((hits as f64 - trials as f64 * p).abs() < 3.0 * sigma);
    }

    #[test]
    fn add_p_mean_edge_count_matches_m() {
        // coupling sanity: with m = pN the add-p edge count matches m on average
        let n = 10;
        let universe = pair_count(n) as f64;
        let p = 0.4;
        let trials = 10_000u64;
        let mut total = 0u64;
        for seed in 0..trials {
            let out =
                add_random_edges_graph(&Graph::empty(n), &PerturbSpec::add_p(p, seed)).unwrap();
            total += out.edge_count() as u64;
        }
        let mean = total as f64 / trials as f64;
        let sigma_mean = (universe * p * (1.0 - p) / trials as f64).sqrt();
        assert!((mean - universe * p).abs() < 3.0 * sigma_mean);
    }

    #[test]
    fn symmetric_difference_examples() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (3, 4)]).unwrap();
        let spec = PerturbSpec::with_mode(PerturbMode::SymmetricDifference, Magnitude::Count(0), 4);
        assert_eq!(symmetric_difference(&g, &spec).unwrap(), g);

        // toggling every pair complements the graph
        let all = PerturbSpec::with_mode(
            PerturbMode::SymmetricDifference,
            Magnitude::Count(pair_count(5)),
            4,
        );
        let comp = symmetric_difference(&g, &all).unwrap();
        assert_eq!(comp.edge_count(), 10 - 3);
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(comp.has_edge(u, v), !g.has_edge(u, v));
            }
        }

        // applying the same spec twice is the identity
        let spec = PerturbSpec::with_mode(PerturbMode::SymmetricDifference, Magnitude::Count(4), 8);
        let once = symmetric_difference(&g, &spec).unwrap();
        let twice = symmetric_difference(&once, &spec).unwrap();
        assert_eq!(twice, g);
    }

    #[test]
    fn resample_examples() {
        let g = Graph::new(5, vec![(0, 1), (1, 2)]).unwrap();
        let zero = PerturbSpec::with_mode(PerturbMode::Resample, Magnitude::Count(0), 4);
        assert_eq!(resample(&g, &zero).unwrap(), g);

        // resampling every pair forgets the input entirely
        let all = PerturbSpec::with_mode(PerturbMode::Resample, Magnitude::Count(10), 21);
        let from_g = resample(&g, &all).unwrap();
        let from_complete = resample(&Graph::complete(5), &all).unwrap();
        assert_eq!(from_g, from_complete);
    }

    #[test]
    fn resample_mean_toggles() {
        let g = Graph::complete(8);
        let m = 14u64;
        let trials = 10_000u64;
        let spec_for = |seed| PerturbSpec::with_mode(PerturbMode::Resample, Magnitude::Count(m), seed);
        let mut toggles = 0u64;
        for seed in 0..trials {
            let out = resample(&g, &spec_for(seed)).unwrap();
            toggles += (g.edge_count() - out.edge_count()) as u64;
        }
        // toggles per trial ~ Bin(m, 1/2)
        let mean = toggles as f64 / trials as f64;
        let sigma_mean = (m as f64 * 0.25 / trials as f64).sqrt();
        assert!((mean - m as f64 / 2.0).abs() < 3.0 * sigma_mean);
    }

    #[test]
    fn tournament_flip_examples() {
        let t = regular_tournament(3);
        let zero = PerturbSpec::with_mode(PerturbMode::TournamentFlip, Magnitude::Count(0), 4);
        assert_eq!(tournament_flip(&t, &zero).unwrap(), t);

        // always a valid tournament
        for seed in 0..50 {
            let spec =
                PerturbSpec::with_mode(PerturbMode::TournamentFlip, Magnitude::Count(10), seed);
            let p = tournament_flip(&t, &spec).unwrap();
            assert_eq!(p.n(), t.n());
        }
    }

    #[test]
    fn tournament_flip_fraction_is_half() {
        let t = regular_tournament(9); // n = 19
        let n = t.n();
        let m = pair_count(n);
        let trials = 10_000u64;
        let mut flipped = 0u64;
        for seed in 0..trials {
            let spec =
                PerturbSpec::with_mode(PerturbMode::TournamentFlip, Magnitude::Count(m), seed);
            let p = tournament_flip(&t, &spec).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if t.beats(u, v) != p.beats(u, v) {
                        flipped += 1;
                    }
                }
            }
        }
        let total = trials as f64 * m as f64;
        let sigma = (total * 0.25).sqrt();
        assert!((flipped as f64 - total / 2.0).abs() < 3.0 * sigma);
    }
}
