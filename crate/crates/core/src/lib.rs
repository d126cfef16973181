//! Exact computations around the Verlinde formula: structure algebras,
//! symmetric Frobenius star products, Hochschild cochains with Gerstenhaber
//! operations, Drinfeld doubles and their modular data.

pub mod algebra;
pub mod catalog;
pub mod doubles;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod fusion;
pub mod group;
pub mod hochschild;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod module;
pub mod roots;

pub use algebra::{BlockPartition, Decomposition, StructureAlgebra};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec};
pub use group::{CommutingPairOrbit, FiniteGroup};
pub use linalg::{Matrix, Vector};
pub use module::AlgebraModule;
