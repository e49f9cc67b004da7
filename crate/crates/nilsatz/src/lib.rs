//! Exact symbolic computation in universal enveloping *-algebras of 2-step
//! nilpotent real Lie algebras.
//!
//! The crate provides, over the field of Gaussian rationals:
//!
//! * PBW normal-form arithmetic in the enveloping *-algebra of a 2-step
//!   nilpotent Lie algebra given by structure constants ([`enveloping`]),
//! * normal-ordered arithmetic in Weyl algebras ([`weyl`]),
//! * Pfaffian calculus over the central subalgebra ([`pfaffian`]),
//! * invariant/dual elements and the expansion of arbitrary elements over
//!   the invariant subalgebra with certificates ([`invariant`]),
//! * filtered *-algebra morphisms into Weyl algebras, their kernels, and
//!   the synthesis of such morphisms from *-characters ([`morphism`]),
//! * the even-subset poset machinery and the end-to-end Heisenberg and
//!   free 2-step workflows ([`pipeline`], [`heisenberg`]).
//!
//! All arithmetic is exact; every identity checked by the test suite is an
//! equality of normal forms, never an approximation. The crate is `no_std`
//! (with `alloc`) so the algebraic core stays free of platform concerns;
//! IO, file formats and the CLI live in the companion `nilsatz-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
// indexed loops are the clearest way to walk the small dense matrices here
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod axioms;
pub mod enveloping;
pub mod error;
pub mod expr;
pub mod heisenberg;
pub mod ideal;
pub mod invariant;
pub mod lie;
pub mod linalg;
pub mod morphism;
pub mod multiindex;
pub mod pfaffian;
pub mod pipeline;
pub mod report;
pub mod ring;
pub mod sampling;
pub mod scalar;
pub mod subset;
pub mod weyl;

pub use enveloping::{CenterPoly, EnvElement, WordFactor};
pub use error::Error;
pub use lie::TwoStepLieAlgebra;
pub use morphism::{Character, FilteredMorphism};
pub use multiindex::MultiIndex;
pub use scalar::GaussRational;
pub use subset::Subset;
pub use weyl::WeylElement;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
