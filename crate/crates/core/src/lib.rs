//! Exact-arithmetic computations with irreducible highest-weight modules of
//! simple complex Lie algebras.
//!
//! The crate builds root systems for every simple type (Bourbaki numbering,
//! rational coordinates, no floating point), evaluates the Weyl dimension
//! formula exactly, and layers several catalogs on top:
//!
//! * [`heightmin`]: the least module dimension at a fixed height of the
//!   highest weight, verified by brute force and certified by explicit
//!   injections between nilradical root sets.
//! * [`classify`]: the finite catalog of weights whose dimension is at most
//!   the square of a distinguished linear bound, plus the semiprime
//!   (`p * q`) dimension catalog.
//! * [`duality`]: self-duality and orthogonal/symplectic typing.
//!
//! All enumeration is deterministic; results are exact integers.

pub mod classify;
pub mod dims;
pub mod duality;
pub mod error;
pub mod heightmin;
pub mod poly;
pub mod report;
pub mod rootsys;
pub mod tables;

pub use error::LieError;
pub use rootsys::{DominantWeight, Family, LieType, RootSystem, RootVec};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, LieError>;
