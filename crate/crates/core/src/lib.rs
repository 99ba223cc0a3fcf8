//! Exact construction of the Penrose vertex pattern as a cut-and-project
//! set, and verification of its self-similarities.
//!
//! All geometry is carried out in the golden field `Q(τ)` on the
//! unit-rescaled lattice `Z⁵`, so membership, boundary incidence and scaling
//! admissibility are decided without rounding. Floats appear only in
//! conservative candidate filters whose rejections are far from any boundary.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod feasibility;
pub mod generator;
pub mod golden;
pub mod projections;
pub mod similarity;
pub mod vector;
pub mod windows;

pub use error::Error;
pub use golden::GoldenNumber;
pub use projections::{GridCoords, GridMatrix, LatticePoint, SymCirculantMatrix};
pub use vector::GoldenVector;
pub use windows::{InternalPoint, Location, PlanarCoords, WindowPentagon};
