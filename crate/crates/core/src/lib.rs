//! Solvers and instance generators for partitioning weighted square and
//! hexagonal grid graphs into `k` contiguous, approximately balanced parts
//! with few cut edges.
//!
//! The toolkit provides:
//!
//! * [`grid`] — grid topologies, partitions, vertex orderings, and the
//!   cut/balance/perimeter metrics shared by every solver;
//! * [`striping`] — cautious striping for unweighted rectangular grids,
//!   plus closed-form perimeter lower bounds;
//! * [`dp`] — the ordering-consistent dynamic program for general weights;
//! * [`stochastic`] — discrete weight distributions, the effective-size
//!   transform, and the stochastic load-balanced partitioner;
//! * [`anneal`] — simulated-annealing refinement over contiguity-preserving
//!   moves;
//! * [`baseline`] — an unconstrained weighted k-means baseline;
//! * [`synth`] — synthetic instance generators (kernel-smoothed sparse
//!   fields and discretized GEV weight distributions).

pub mod anneal;
pub mod baseline;
pub mod dp;
pub mod grid;
pub mod stochastic;
pub mod striping;
pub mod synth;

mod error;

pub use error::{Error, Result};
