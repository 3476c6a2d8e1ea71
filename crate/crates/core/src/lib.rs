//! Exact k-partition dimension and k-metric dimension of small connected graphs.
//!
//! Every parameter is computed from the hop-count metric of a simple connected
//! graph. Brute-force solvers return a certificate alongside the value;
//! closed forms for trees and paths are cross-checked against them by the
//! test suites and by [`sweep`].

use std::fmt;

pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod metric_dim;
pub mod partition_dim;
pub mod resolve;
pub mod sweep;
pub mod tree;
pub mod vertex_partition;

pub use error::{Error, PartitionError, Result};
pub use family::{generate, random_tree, Family};
pub use graph::{cartesian_product, DistanceMatrix, Graph};
pub use metric_dim::{
    check_dim_upper_bound, dim_k_bruteforce, dim_k_bruteforce_with, is_k_metric_generator,
    pair_support, MetricSolveResult,
};
pub use partition_dim::{
    check_pd_bounds, is_k_partition_generator, is_k_partition_generator_full, max_partition_level,
    min_block_support, pair_block_support, path_partition_construction, pd_equals_n_criterion,
    pd_k_bruteforce, pd_k_bruteforce_with, PartitionSolveResult,
};
pub use resolve::{
    clique_number, dimensional_value, dimensional_value_max, distinguishing_set,
    has_nontrivial_twin, set_distance, twin_classes, DistinguishProfile,
};
pub use tree::{
    check_tree_bounds, construct_partition, exterior_major_records, script_i_k, tree_dim_k,
    tree_partition_construction, tree_profile, varsigma, MajorVertexRecord, TreeMetricProfile,
};
pub use vertex_partition::VertexPartition;

/// How a reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exhaustive search; the value is exact and minimal.
    BruteForce,
    /// Closed-form expression.
    Formula,
    /// Explicit construction; the value is an upper bound.
    Construction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute_force",
            Method::Formula => "formula",
            Method::Construction => "construction",
        })
    }
}

/// Largest orders accepted by the exhaustive solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub metric_max_n: usize,
    pub partition_max_n: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            metric_max_n: 16,
            partition_max_n: 11,
        }
    }
}

impl SearchLimits {
    pub const ENV_VAR: &'static str = "PARTDIM_MAX_N";

    /// Both limits raised (or lowered) to `n`.
    pub fn uniform(n: usize) -> Self {
        Self {
            metric_max_n: n,
            partition_max_n: n,
        }
    }

    /// Defaults, overridden by `PARTDIM_MAX_N` when it holds an integer.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Self::default, Self::uniform)
    }
}

/// Outcome of one inequality or identity evaluated on exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl BoundCheck {
    pub fn new(name: &'static str, holds: bool, detail: String) -> Self {
        Self {
            name,
            holds,
            detail,
        }
    }

    pub fn le(name: &'static str, lhs: usize, rhs: usize) -> Self {
        Self::new(name, lhs <= rhs, format!("{lhs} <= {rhs}"))
    }

    pub fn eq(name: &'static str, lhs: usize, rhs: usize) -> Self {
        Self::new(name, lhs == rhs, format!("{lhs} == {rhs}"))
    }
}
