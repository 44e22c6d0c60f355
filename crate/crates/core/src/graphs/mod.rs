//! Flip graphs on partition words and the structural checks run on them.

mod export;
mod hamilton;
mod partition;
mod simple;

pub use export::{write_dot, write_edge_csv};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian_cycle, Hamiltonicity, NonHamiltonian, SearchOptions};
pub use partition::{build, build_with_budget, neighbors, Adjacency, PartitionGraph, StructureReport};
pub use simple::Graph;
