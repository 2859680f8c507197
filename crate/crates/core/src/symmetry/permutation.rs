use serde::{Deserialize, Serialize};

use super::group::PointSymmetry;
use super::{is_invariant, Ambient};
use crate::error::{Error, Result};
use crate::int::{self, Int};
use crate::lattice::GenMatrix;

/// An ambient symmetry `x ↦ g(x) + t` with `g` a point-group element and `t`
/// an ambient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub point: PointSymmetry,
    pub translation: Vec<Int>,
}

impl Isometry {
    pub fn translation(ambient: Ambient, t: Vec<Int>) -> Result<Self> {
        if t.len() != ambient.rank() {
            return Err(Error::DimensionMismatch {
                expected: ambient.rank(),
                got: t.len(),
            });
        }
        Ok(Isometry {
            point: PointSymmetry::identity(ambient),
            translation: t,
        })
    }

    pub fn apply(&self, v: &[Int]) -> Result<Vec<Int>> {
        let gv = self.point.apply(v)?;
        gv.iter()
            .zip(&self.translation)
            .map(|(&a, &b)| int::add(a, b))
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        Ok(Isometry {
            point: self.point.compose(&other.point)?,
            translation: self.apply(&other.translation)?,
        })
    }
}

impl From<PointSymmetry> for Isometry {
    fn from(g: PointSymmetry) -> Self {
        let n = g.ambient().rank();
        Isometry {
            point: g,
            translation: vec![0; n],
        }
    }
}

/// `mapping[j]` is the color that color `j` is sent to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorPermutation {
    pub mapping: Vec<usize>,
}

impl ColorPermutation {
    pub fn identity(m: usize) -> Self {
        ColorPermutation {
            mapping: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ColorPermutation) -> ColorPermutation {
        ColorPermutation {
            mapping: other.mapping.iter().map(|&j| self.mapping[j]).collect(),
        }
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.mapping.len()];
        for &j in &self.mapping {
            if j >= seen.len() || std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// The permutation of colors induced by `iso` on the coloring by `m`.
/// Fails if the point part of `iso` does not fix `m`.
pub fn color_permutation(iso: &Isometry, m: &GenMatrix) -> Result<ColorPermutation> {
    if !iso.point.is_identity() && !is_invariant(&iso.point, m)? {
        return Err(Error::NotColorSymmetry(iso.point.name()));
    }
    let mapping = m
        .coset_reps()
        .iter()
        .map(|rep| Ok(m.canonical_rep(&iso.apply(&rep.coeffs)?)?.ordinal))
        .collect::<Result<Vec<_>>>()?;
    Ok(ColorPermutation { mapping })
}
