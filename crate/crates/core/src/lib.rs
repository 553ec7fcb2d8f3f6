//! Exact computation of the reflection-type decomposition data attached to the
//! adjoint quotient of a compact semisimple Lie group of classical type.
//!
//! The crate is organized bottom-up:
//!
//! * [`rootsys`]: classical root systems in rational coordinates, the invariant
//!   form, Dynkin labels, dual roots.
//! * [`weyl`]: the Weyl group as permutations of the root set, orbits,
//!   stabilizers and coset representatives.
//! * [`subsys`]: root subsystems, their conjugacy classes and the Hasse poset.
//! * [`lattice`]: the kernel of the exponential map, the coprime ratios
//!   `p/q` per root and the root subsystem fixed by a torus point.
//! * [`relcoeff`]: signed subset sums and the reduced character coefficients
//!   of the defining relations.
//! * [`repthy`]: weight systems (Freudenthal), Weyl dimensions and the signed
//!   straightening used for tensor product coefficients.
//! * [`costrat`]: `D` coefficients and normalized `K` matrix blocks.
//! * [`golden`] and [`cli`]: checked-in reference tables and the command line.
//!
//! All arithmetic on weights and coefficients is exact.

pub mod cli;
pub mod costrat;
mod error;
pub mod golden;
pub mod lattice;
pub mod linalg;
pub mod relcoeff;
pub mod repthy;
pub mod rootsys;
pub mod subsys;
pub mod weyl;

pub use error::{Error, Result};

/// Exact rational scalar used throughout.
pub type Q = num_rational::Rational64;
