//! Exact computations for monodromic Hecke algebroids: Coxeter groups and
//! their endoscopic subgroups, realizations, the Hecke algebroid, light-leaf
//! combinatorics, two-colored Temperley–Lieb algebras, one-color localization
//! and monodromy labelings of Elias–Williamson graphs.

pub mod error;
pub mod graphs;
pub mod hecke;
pub mod leaves;
pub mod loc;
pub mod coxeter;
pub mod quantum;
pub mod realization;
pub mod ring;
pub mod tl;
pub mod wset;

pub use error::{Error, Result};
