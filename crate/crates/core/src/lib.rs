//! Exact computations on homogeneous CR structures at the Lie-algebra level.
//!
//! Algebras are stored by structure constants over ℚ or ℚ(i). On top of the
//! structural toolkit ([`lie`]) sit invariant CR pairs and Levi forms
//! ([`cr`]), orbit models inside complex algebras ([`complexify`]), a catalog
//! of classical orbits ([`catalog`]) and globalization checks ([`globalize`]).

pub mod catalog;
pub mod complexify;
pub mod cr;
pub mod error;
pub mod forms;
pub mod globalize;
pub mod io;
pub mod kernel;
pub mod lie;
pub mod linalg;
pub mod parallel;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Subspace};
pub use scalar::{Qi, Scalar, Q};
