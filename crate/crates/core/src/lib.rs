//! Counting size-`k` vertex sets with a fixed vertex-certified property on
//! sparse graphs through protrusion decompositions.
//!
//! The pipeline approximates a treewidth modulator, builds a protrusion
//! decomposition around it, tabulates per-protrusion solution counts with a
//! dynamic program over nice tree decompositions, and condenses the instance
//! into a compact file. The extractor recovers the exact count from that file
//! alone.
//!
//! Counts are generic over [`Count`]; the pipeline itself uses
//! [`BigCount`], an unbounded integer, so no step can overflow.

pub mod algebra;
pub mod compactor;
pub mod config;
pub mod dp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod index_set;
pub mod modulator;
pub mod oracle;
pub mod poly;
pub mod protrusion;
pub mod treedec;

use std::fmt::{Debug, Display};
use std::str::FromStr;

pub use error::{Error, Result};
pub use graph::{BGraph, BStructure, Graph, Vertex, VertexSet};
pub use index_set::IndexSet;

/// Exact unbounded count used throughout the pipeline.
pub type BigCount = num_bigint::BigUint;

/// Scalar type of solution counts.
///
/// Anything with exact `+`/`*`, a zero and a one, and a decimal text form.
/// Fixed-width integers satisfy it for small experiments; the pipeline uses
/// [`BigCount`].
pub trait Count: num_traits::Num + Clone + Ord + Debug + Display + FromStr + Send + Sync + 'static {}

impl<T> Count for T where T: num_traits::Num + Clone + Ord + Debug + Display + FromStr + Send + Sync + 'static {}

/// Count table with unbounded counts.
pub type CountTable<S> = dp::CountTable<S, BigCount>;

/// Truncated polynomial with unbounded coefficients.
pub type Polynomial = poly::Polynomial<BigCount>;

/// Compactor file with unbounded counts.
pub type CompactorFile<S> = compactor::CompactorFile<S, BigCount>;
