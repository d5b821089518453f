//! Exact regular open rational polytopes and the affine spatial logic over them.
//!
//! The crate models the structures ⟨ROQ(ℝⁿ), conv, ≤⟩: regions are finite
//! regularized Boolean combinations of open rational half-spaces, compared by
//! inclusion and tested for convexity. On top of the region algebra sit
//! deciders for the geometric relations definable in the logic, incidence
//! constructions for segment arithmetic inside a coordinate frame, fixing
//! descriptors for half-spaces and regions, and a first-order formula
//! language with a three-valued evaluator.
//!
//! Everything is exact: coordinates are arbitrary-precision rationals and no
//! operation rounds.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod fixing;
pub mod kernel;
pub mod logic;
pub mod predicates;
pub mod region;
pub mod vonstaudt;

pub use error::{Error, Result};
