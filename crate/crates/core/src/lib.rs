//! Finite categories, covers by subcategories, Čech nerves and their
//! Grothendieck constructions, with exact Euler characteristics and rational
//! homology of classifying spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`fincat`] holds the explicit category model (objects, morphisms,
//!   a total composition table) and functors between such categories.
//! * [`cover`] builds subcategories, ideals, filters and covers.
//! * [`cech`] enumerates the levels of the ordinary, ordered and reduced Čech
//!   nerves together with their face and degeneracy functors.
//! * [`grothendieck`] materialises the Grothendieck construction of the
//!   reduced Čech nerve and the functors relating it to the covered category.
//! * [`euler`] computes weightings, coweightings and Euler characteristics
//!   over the rationals.
//! * [`homotopy`] computes nerve chain complexes and Betti numbers.
//! * [`format`] reads and writes the plain-text category and cover files.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the `rayon`
//! feature is enabled and falls back to plain iteration otherwise.

pub mod cech;
pub mod cover;
pub mod error;
pub mod euler;
pub mod fincat;
pub mod fixtures;
pub mod format;
pub mod grothendieck;
pub mod homotopy;
pub mod linalg;
pub mod par;
pub mod rational;

pub use cech::{IndexTuple, NerveLevelPiece, Variant};
pub use cover::{Cover, Subcategory};
pub use error::{Error, Result};
pub use euler::EulerResult;
pub use fincat::{CategoryData, FinCategory, FunctorMap, ValidationReport, Violation};
pub use grothendieck::{GrMorphism, GrObject, GrReduced, OrderedGrObjectDescriptor};
pub use homotopy::{ChainComplexQ, HomologyReport, SimplexChain};
pub use linalg::QMatrix;
pub use par::Parallelism;
pub use rational::Rational;
