//! Finite simplicial complexes, their lattices of flats, and boolean
//! representability.

pub mod bits;
pub mod catalog;
pub mod complex;
pub mod error;
pub mod iso;
pub mod json;
pub mod lattice;
pub mod matroid;
pub mod operators;
pub mod paving;
pub mod random;
pub mod reproduce;
pub mod t_operator;

pub use bits::Face;
pub use complex::{Complex, SetFamily};
pub use error::{Error, Result};
pub use lattice::{BooleanMatrix, ClosureSystem, MooreFamily};
