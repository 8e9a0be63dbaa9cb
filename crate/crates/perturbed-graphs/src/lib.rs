//! Random perturbation of combinatorial structures.
//!
//! This crate builds dense base instances (graphs, digraphs, k-uniform
//! hypergraphs, tournaments), perturbs them with seeded random noise, and
//! decides or constructs spanning structures in the result: Hamilton cycles,
//! cycles of every length, perfect matchings and loose Hamilton cycles, and
//! highly connected tournaments. Exact exponential-time oracles provide
//! ground truth at small sizes; constructive solvers scale further and
//! certify their own output. A Monte Carlo harness sweeps perturbation
//! magnitude and reports success frequencies with Wilson confidence
//! intervals.
//!
//! Entry points:
//!
//! * [`types`] — core structures and validators
//! * [`generators`] — extremal and random dense instances
//! * [`perturb`] — the four perturbation models
//! * [`exact`] — exact solvers and matching/flow engines
//! * [`expansion`] — expansion certificates and constructive (pan)cyclicity
//! * [`pipeline`] — perfect matchings / loose Hamilton cycles in perturbed
//!   hypergraphs via the bipartite reduction
//! * [`tournaments`] — degree censuses, connectivity and arc-disjoint
//!   Hamilton cycles
//! * [`harness`] — experiment configuration, sweeps and reports
//!
//! All randomness is ChaCha8 under explicit 64-bit seeds; see [`sample`].

mod bits;

pub mod error;
pub mod exact;
pub mod expansion;
pub mod generators;
pub mod harness;
pub mod io;
pub mod perturb;
pub mod pipeline;
pub mod sample;
pub mod tournaments;
pub mod types;

pub use error::{ConstructionFailure, Error, Result};
pub use types::{BipartiteGraph, Digraph, Graph, KUniformHypergraph, Tournament};
