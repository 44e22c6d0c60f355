//! Integer partitions of every dimension encoded as words of length `n - 1`
//! over the alphabet `0..=d`.
//!
//! The crate covers the whole pipeline:
//!
//! * [`words`]: the word grammar, the bijection with d-dimensional partitions
//!   and canonical enumeration,
//! * [`graphs`]: the flip graph on all words of a given length (edges join
//!   words at Hamming distance one) and its structural properties,
//! * [`graycode`]: cyclic orderings where neighbours are at most two or
//!   three flips apart,
//! * [`analysis`]: degree/parts histograms and lognormal vs normal fits,
//! * [`oracle`]: slow, independent reference implementations.

pub mod analysis;
pub mod error;
pub mod graphs;
pub mod graycode;
pub mod oracle;
pub mod words;

pub use error::{Error, Result};
pub use graphs::{Graph, Hamiltonicity, PartitionGraph, StructureReport};
pub use graycode::GrayCode;
pub use words::{DDimPartition, Dim, PartitionWord, WordSet};
