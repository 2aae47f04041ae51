//! Genus of set partitions: reductions, primitive catalogues and exact
//! generating functions.

pub mod algebra;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod perm;
pub mod pipeline;
pub mod primitive;
pub mod reduction;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{hypermap_genus, zeta, Genus, Partition, Permutation};
