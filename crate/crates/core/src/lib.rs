//! Root systems of the simple complex Lie algebras, their Borel subalgebras,
//! and the complete enumeration of Borel ideals.
//!
//! The crate is `no_std` and needs only `alloc`. Everything is exact integer
//! arithmetic; nothing here touches floating point.
//!
//! The pipeline is:
//!
//! 1. [`RootSystem::new`] builds the Cartan matrix for a `(family, rank)` pair
//!    and closes the simple roots under simple reflections.
//! 2. [`borel`] models `g = t + sum C X_a` with a sign-free monomial bracket.
//! 3. [`ideals`] enumerates the monomial ideals of the nilradical layer by
//!    layer, starting from the highest root, and filters the abelian ones.
//! 4. [`kernel`] attaches to every monomial ideal the Cartan subspace that can
//!    be adjoined to it, giving the full ideal classification.
//! 5. [`lattice`] and [`subalgebra`] provide the inclusion lattice and
//!    normalizer/centralizer queries on monomial subalgebras.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod borel;
mod error;
pub mod ideals;
pub mod kernel;
pub mod lattice;
mod linalg;
mod root_set;
pub mod root_system;
pub mod subalgebra;

pub use borel::{BasisElement, BorelBasis};
pub use error::{Error, Result};
pub use ideals::{Enumerator, MonomialIdeal};
pub use kernel::{CartanKernelBasis, ClassifiedIdeal, IdealClassification};
pub use lattice::{DimensionCounts, IdealLattice};
pub use root_set::RootSet;
pub use root_system::{CartanMatrix, Family, Root, RootStyle, RootSystem};
pub use subalgebra::MonomialSubalgebra;
