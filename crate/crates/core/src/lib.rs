//! Exact multi-fan calculus.
//!
//! A simplicial multi-fan is a weighted collection of simplicial cones in a
//! lattice `N`, where the map from the abstract simplicial complex to cones
//! need not be injective and weights may be any nonzero integers. This crate
//! computes with such objects using exact big-rational and cyclotomic
//! arithmetic only:
//!
//! * [`lattice`]: Hermite/Smith normal forms, dual bases, annihilators and the
//!   finite groups `N_K / N_{K,V}` with their characters.
//! * [`fan`]: validation, degree, (pre-)completeness, projected multi-fans,
//!   star subdivision and seeded random complete fans.
//! * [`cyclotomic`]: the fields `Q(ζ_N)` and truncated Laurent series over them.
//! * [`equivariant`]: the face ring, restriction to fixed points,
//!   localization push-forward and the ordinary cohomology quotient.
//! * [`polytope`]: multi-polytopes, Duistermaat–Heckman functions, lattice
//!   point counts (brute force and character-sum formula) and volumes.
//! * [`todd`]: equivariant Todd classes, Todd genus rigidity, Ehrhart
//!   coefficients and subdivision additivity.
//! * [`morelli`]: generic Grassmann planes, wedge evaluations and the
//!   coefficients `μ(x, J)` expressing a class through the face classes.
//! * [`cli`]: fan documents and the exact JSON reports behind the `multifan`
//!   binary.

pub mod arith;
pub mod cli;
pub mod cyclotomic;
pub mod document;
pub mod equivariant;
mod error;
pub mod fan;
pub mod lattice;
mod localization;
pub mod morelli;
pub mod polytope;
pub mod todd;

pub use arith::{Int, Rat};
pub use error::{Error, Result};
pub use fan::{fixtures, MultiFan, RawCone, RawFan};
pub use lattice::{Covector, LatticeVector};
