//! Johnson graphs J_n(m, m-1) and their cliques.
//!
//! * [`combinat`]: binomials, m-subset labels, colex ranking.
//! * [`graph`]: the implicit graph, adjacency, edges and exporters.
//! * [`cliques`]: closed-form maximal cliques, classification and
//!   extension of r-cliques, clique number, clique partitions.
//! * [`oracle`]: brute-force Bron–Kerbosch and the verification harness.
//! * [`cli`]: the `johnson` command-line front end.

pub mod cli;
pub mod cliques;
pub mod combinat;
pub mod error;
pub mod graph;
pub mod oracle;

pub use cliques::{
    all_maximal_cliques, classify, clique_number, clique_partition, clique_partition_number,
    enumerate_max_cliques, enumerate_min_cliques, extend_to_maximal, intersection_of, is_clique,
    union_of, Clique, CliqueClass, CliqueClassification, CliquePartition, FamilyDescription,
    MaximalClique, PairwiseLaw,
};
pub use combinat::{binomial, rank, unrank, Combinations, SubsetRank, VertexLabel};
pub use error::{Error, Result};
pub use graph::{are_adjacent, export, Edge, ExportFormat, JohnsonParams, Regime};
pub use oracle::{materialize, verify, verify_range, DenseGraph, VerificationReport};
