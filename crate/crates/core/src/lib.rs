//! Multiplicative graphs of tensor powers for the classical Lie families
//! A, C, B, D, the Markov chains they carry, and their infinite-rank limits.

pub mod acceptance;
pub mod characters;
pub mod error;
pub mod format;
pub mod graph;
pub mod kernel;
pub mod root_system;
pub mod shape;

pub use error::{Error, Result};
pub use root_system::{Family, FamilyRank, WeightVec};
pub use shape::{HighestWeight, Partition};
