//! First nonabelian cohomology of finite nilpotent groups acting on finite
//! nilpotent groups, its Sylow-wise decomposition, the correspondence with
//! complements in the semidirect product, and executable checks of the
//! conjugacy and fixed-point results that follow from it.
//!
//! Everything is table driven: groups are dense multiplication tables and
//! every algorithm is an exhaustive scan, which keeps results exact at the
//! sizes this library targets (orders up to a few thousand).

pub mod actions;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod group;
pub mod harness;
pub mod par;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
