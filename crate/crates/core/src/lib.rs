//! Color groups of coset colorings of planar lattices and of the rank-4
//! octagonal module ℤ[e^{iπ/4}].
//!
//! A full-rank submodule `M` of an ambient module colors the ambient by its
//! cosets. A point-group symmetry of the ambient permutes the colors exactly
//! when it maps `M` onto itself, and every ambient translation permutes them.
//! This crate computes those symmetries exactly, both by a direct invariance
//! check over Hermite normal forms and, for the square, hexagonal and
//! rectangular lattices, by closed-form divisibility criteria.
//!
//! Modules:
//! - [`ring`]: Gaussian, Eisenstein and octagonal integers.
//! - [`lattice`]: generator matrices, Hermite normal form, coset representatives.
//! - [`symmetry`]: point groups, stabilizers, labels, color permutations.
//! - [`modelset`]: Ammann-Beenker vertex patches by cut and project.
//! - [`render`]: SVG output of colorings.

pub mod error;
pub mod int;
pub mod lattice;
pub mod matrix;
pub mod modelset;
pub mod render;
pub mod ring;
pub mod symmetry;

pub use error::{Error, Result};
pub use lattice::{CosetRep, GenMatrix, HnfBasis};
pub use matrix::IntMatrix;
pub use ring::{PlanarPoint, RingElement, RingTag};
pub use symmetry::{
    color_permutation, is_invariant, point_group, stabilizer, Ambient, ColorGroupReport, ColorPermutation, Isometry,
    PointSymmetry, TheoremCase,
};
