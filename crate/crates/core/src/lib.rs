//! Exact computations with finite-dimensional algebras given by quivers with
//! relations, their derived categories of perfect complexes, and lattice
//! algebras attached to finite subsets of the plane.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod families;
pub mod field;
pub mod homalg;
pub mod intmat;
pub mod invariants;
pub mod lattice;
pub mod linalg;

pub use error::Error;
pub use field::{Field, Fp, Rational};
