//! Degree and parts distributions of the flip graphs, the edge-count
//! statistic over ordinary partitions, and lognormal/normal fitting.

mod fit;
mod histogram;
mod partitions;

pub use fit::{compare, fit, normal_cdf, erf, DistributionFit, Family};
pub use histogram::{degree_histogram, zero_count_histogram, Histogram};
pub use partitions::{lambda_edge_statistic, parity_imbalance, partition_count, parts_histogram};
