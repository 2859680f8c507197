//! Point groups, the invariance oracle for color symmetries, closed-form
//! classifiers for the square and hexagonal lattices, and induced color
//! permutations.
//!
//! A point-group element is a color symmetry of the coset coloring by `M`
//! exactly when it maps `M` onto itself; translations of the ambient are
//! always color symmetries. [`stabilizer`] is therefore the ground truth that
//! the closed-form classifiers in [`criteria`] are checked against.

mod ambient;
pub mod criteria;
mod group;
mod permutation;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use ambient::{Ambient, Aspect};
pub use criteria::{classify, classify_hex, classify_rect, classify_square};
pub use group::{conjugation_matrix, find_symmetry, multiplication_matrix, point_group, PointSymmetry};
pub use permutation::{color_permutation, ColorPermutation, Isometry};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::lattice::GenMatrix;
use crate::matrix::IntMatrix;
use crate::ring::RingElement;

/// Where a report's answer came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremCase {
    /// Direct invariance check of every point-group element.
    Oracle,
    /// Clause `(a)`–`(e)` of the square-lattice divisibility criteria.
    Square(char),
    /// Clause `(a)`–`(f)` of the hexagonal-lattice divisibility criteria.
    Hexagonal(char),
    /// `(a)` when the mirror conditions hold, `(b)` otherwise.
    Rectangular(char),
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremCase::Oracle => f.write_str("oracle"),
            TheoremCase::Square(c) => write!(f, "square({c})"),
            TheoremCase::Hexagonal(c) => write!(f, "hexagonal({c})"),
            TheoremCase::Rectangular(c) => write!(f, "rectangular({c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColorGroupReport {
    pub ambient: Ambient,
    pub index: u64,
    /// Point-group part of the color group, in [`point_group`] order.
    pub stabilizer: Vec<PointSymmetry>,
    pub label: String,
    pub theorem_case: TheoremCase,
    pub permutations: Option<BTreeMap<String, Vec<usize>>>,
}

/// Serialized form of a [`ColorGroupReport`]. Field order is part of the
/// output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub ambient: String,
    pub index: u64,
    pub stabilizer: Vec<String>,
    pub label: String,
    pub theorem_case: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub permutations: Option<BTreeMap<String, Vec<usize>>>,
}

impl ColorGroupReport {
    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            ambient: self.ambient.to_string(),
            index: self.index,
            stabilizer: self.stabilizer.iter().map(PointSymmetry::name).collect(),
            label: self.label.clone(),
            theorem_case: self.theorem_case.to_string(),
            permutations: self.permutations.clone(),
        }
    }

    pub fn stabilizer_names(&self) -> Vec<String> {
        self.stabilizer.iter().map(PointSymmetry::name).collect()
    }

    /// Fill in the color permutation of every stabilizer element.
    pub fn with_permutations(mut self, m: &GenMatrix) -> Result<Self> {
        let mut perms = BTreeMap::new();
        for g in &self.stabilizer {
            let p = color_permutation(&Isometry::from(g.clone()), m)?;
            perms.insert(g.name(), p.mapping);
        }
        self.permutations = Some(perms);
        Ok(self)
    }
}

fn check_ambient(ambient: Ambient, m: &GenMatrix) -> Result<()> {
    ambient.tag().check_same(m.tag())
}

/// Does `g` map the module of `m` onto itself?
pub fn is_invariant(g: &PointSymmetry, m: &GenMatrix) -> Result<bool> {
    if g.mat().n() != m.rank() {
        return Err(Error::DimensionMismatch {
            expected: m.rank(),
            got: g.mat().n(),
        });
    }
    m.transformed(g.mat())?.same_module(m)
}

/// The point-group part of the color group, found by testing every element.
pub fn stabilizer(ambient: Ambient, m: &GenMatrix) -> Result<ColorGroupReport> {
    check_ambient(ambient, m)?;
    let mut stab = Vec::new();
    for g in point_group(ambient) {
        if is_invariant(&g, m)? {
            stab.push(g);
        }
    }
    let label = label_plane_group(ambient, &stab)?;
    Ok(ColorGroupReport {
        ambient,
        index: m.index(),
        stabilizer: stab,
        label,
        theorem_case: TheoremCase::Oracle,
        permutations: None,
    })
}

fn superscript(k: u32) -> &'static str {
    ["⁰", "", "²", "³", "⁴", "⁵", "⁶", "⁷"][k as usize]
}

/// Name the stabilizer: a plane-group type for lattices, a presentation in
/// `a` (rotation by 45°) and `b` (real-axis mirror) for the octagonal module.
pub fn label_plane_group(ambient: Ambient, stab: &[PointSymmetry]) -> Result<String> {
    let has = |rot: u32, reflect: bool| stab.iter().any(|g| g.rot() == rot && g.is_reflection() == reflect);
    let n = ambient.rotation_order();

    let closed = stab.iter().all(|g| g.ambient() == ambient)
        && has(0, false)
        && has(n / 2, false)
        && stab.iter().all(|g| {
            stab.iter().all(|h| {
                let gh = g.compose(h).expect("same ambient");
                has(gh.rot(), gh.is_reflection())
            })
        });
    if !closed {
        return Err(Error::NotSubgroup);
    }

    let any_reflection = stab.iter().any(|g| g.is_reflection());
    let full = stab.len() == ambient.point_group_order();
    let label = match ambient {
        Ambient::Square => {
            if full {
                "p4m"
            } else if has(1, false) {
                "p4"
            } else if has(0, true) && has(2, true) {
                "pmm"
            } else if has(1, true) && has(3, true) {
                "cmm"
            } else {
                "p2"
            }
        }
        Ambient::Hexagonal => {
            if full {
                "p6m"
            } else if has(1, false) {
                "p6"
            } else if any_reflection {
                "cmm"
            } else {
                "p2"
            }
        }
        Ambient::Rectangular(_) => {
            if any_reflection {
                "pmm"
            } else {
                "p2"
            }
        }
        Ambient::Octagonal => return Ok(octagonal_label(stab)),
    };
    Ok(label.to_string())
}

fn octagonal_label(stab: &[PointSymmetry]) -> String {
    // rotation subgroup is ⟨a^r⟩ for the smallest r present
    let r = stab
        .iter()
        .filter(|g| !g.is_reflection() && g.rot() != 0)
        .map(|g| g.rot())
        .min()
        .unwrap_or(8);
    let reflection = stab.iter().filter(|g| g.is_reflection()).map(|g| g.rot()).min();
    let rot_order = 8 / r;

    let a_pow = |k: u32| match k {
        1 => "a".to_string(),
        k => format!("a{}", superscript(k)),
    };
    let mut gens = Vec::new();
    if r < 8 {
        gens.push(a_pow(r));
    }
    let group = match reflection {
        None => format!("Z{rot_order}"),
        Some(j) => {
            gens.push(if j == 0 {
                "b".to_string()
            } else {
                format!("{}b", a_pow(j))
            });
            if rot_order == 1 {
                "Z2".to_string()
            } else {
                format!("D{rot_order}")
            }
        }
    };
    if gens.is_empty() {
        gens.push("1".to_string());
    }
    format!("⟨{}⟩ ≅ {group}", gens.join(","))
}

/// Generators of `s · M`.
pub fn similar_transform(m: &GenMatrix, s: &RingElement) -> Result<GenMatrix> {
    m.tag().check_same(s.tag())?;
    if s.is_zero() {
        return Err(Error::ZeroMultiplier);
    }
    GenMatrix::new(m.tag(), multiplication_matrix(s)?.mul(m.mat())?)
}

/// `S · g · S⁻¹` where `S` is multiplication by `s`: the conjugate of `g` by
/// the rotation part of `s`. `None` when the conjugate is not an integer map,
/// i.e. not a symmetry of the ambient.
pub fn conjugate_by(g: &PointSymmetry, s: &RingElement) -> Result<Option<IntMatrix>> {
    if s.is_zero() {
        return Err(Error::ZeroMultiplier);
    }
    let sm = multiplication_matrix(s)?;
    let det = sm.det()?;
    Ok(sm.mul(g.mat())?.mul(&sm.adjugate()?)?.div_exact(det))
}

/// Every sublattice of index `m` of a rank-2 ambient, as Hermite normal
/// forms `[[a, b], [0, d]]` with `ad = m` and `0 ≤ b < a`, ordered by `a`
/// then `b`.
pub fn enumerate_sublattices(ambient: Ambient, m: u64) -> Result<Vec<GenMatrix>> {
    if ambient.rank() != 2 {
        return Err(Error::NotRankTwo(ambient.tag().name()));
    }
    let m = Int::try_from(m).map_err(|_| Error::Overflow)?;
    let mut out = Vec::new();
    for a in (1..=m).filter(|a| m % a == 0) {
        let d = m / a;
        for b in 0..a {
            out.push(GenMatrix::from_columns(ambient.tag(), &[vec![a, 0], vec![b, d]])?);
        }
    }
    Ok(out)
}
