//! Exact-arithmetic computations for finite-dimensional Leibniz algebras
//! given by structure constants.
//!
//! Everything runs over arbitrary-precision rationals (or Laurent polynomials
//! in one formal parameter for degeneration families), so every dimension,
//! invariant, and limit is bit-exact. The crate provides:
//!
//! * [`scalar`]: rationals and Laurent scalars with `t -> 0` limits;
//! * [`matrix`]: dense exact matrices, rank, nullspaces, span membership;
//! * [`algebra`]: structure tensors, the Leibniz identity, annihilators,
//!   central and derived series, ideal verification, basis change;
//! * [`catalog`]: constructors for the named algebras and families and the
//!   `KEY(n, param=value)` name grammar;
//! * [`cohomology`]: derivations, 2-cocycles, 2-coboundaries, quotient
//!   dimensions, and named representative cocycles;
//! * [`invariants`]: trace invariants, orbit dimensions, and degeneration
//!   necessary-condition reports;
//! * [`degeneration`]: one-parameter basis-change families, exact limits,
//!   and the built-in degeneration fixtures;
//! * [`reference`]: closed-form expected values for the catalog families.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the CLI live
//! in the companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod degeneration;
pub mod invariants;
pub mod matrix;
pub mod reference;
pub mod scalar;

pub use algebra::{Algebra, BadInverse, LeibnizDefect, StructureTensor};
pub use catalog::{CatalogError, Params};
pub use cohomology::{Cochain2, CochainSpace, CohomologyError};
pub use degeneration::{BasisChangeFamily, DegenerationFixture, FixtureError, LimitError};
pub use invariants::{DegenerationReport, InvariantValue, SampledInvariant, Verdict};
pub use matrix::Matrix;
pub use scalar::{LaurentScalar, Rational};
