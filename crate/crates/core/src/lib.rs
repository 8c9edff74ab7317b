//! Calogero–Moser families, Lusztig families, cuspidal families, symplectic leaves and
//! rigid modules for the Coxeter groups of types A, B, D and I2(m) at rational
//! parameters.
//!
//! Every classification is available along two routes: a closed combinatorial form
//! (residues, symbols, tables) and a first-principles computation with explicit exact
//! matrices and characters. The [`verify`] module runs both routes against each other.

pub mod combinatorics;
pub mod cuspidal;
pub mod error;
pub mod exactalg;
pub mod families;
pub mod fixtures;
pub mod reps;
pub mod symbols;
pub mod verify;

pub use combinatorics::{Bipartition, Partition, UnorderedBipartition};
pub use error::{Error, Result};
pub use exactalg::{CherednikParameter, CoxeterGroup, Cyclotomic, GroupRingElement, Matrix, Rational};
pub use reps::{IrrLabel, MatrixRep};
