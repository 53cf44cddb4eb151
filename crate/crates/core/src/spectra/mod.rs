//! Block graphs, incidence matrices, eigenvalue formulas and exact
//! eigenvector checks.

mod graph;
mod johnson;
mod linalg;
mod vectors;

pub use graph::{block_graph, distance_partition, BlockGraph, DistancePartition};
pub use johnson::{
    block_graph_eigenvalues, first_eigen_preimage, is_johnson_eigenvector, johnson_eigenvalue, BlockGraphSpectrum,
    KSubsets,
};
pub use linalg::{incidence_matrix, null_space_basis, IncidenceMatrix, RatMatrix};
pub use vectors::{is_eigenvector, is_eigenvector_int, lift, restrict, BlockVector, LiftTarget, PointVector};
