//! Permutation groups, coset graphs and automorphism search for verifying
//! prime-valent symmetric Cayley graphs built from double cosets.

pub mod config;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
mod parallel;
pub mod perm;
pub mod report;
pub mod symmetry;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use graph::SymGraph;
pub use group::PermGroup;
pub use parallel::configure_threads;
pub use perm::Permutation;
