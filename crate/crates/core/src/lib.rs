//! Exact computation of Hochschild cohomology data for finite-dimensional
//! quiver algebras, specialized to the self-injective family of tree class
//! E6, with independent cross-checks (bar-complex oracle, dimension tables,
//! ring-structure verification).

pub mod algebra;
pub mod bar;
pub mod bimodule;
pub mod e6;
pub mod field;
pub mod matrix;
pub mod ring;
