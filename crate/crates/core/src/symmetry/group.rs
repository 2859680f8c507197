use std::fmt;

use serde::{Deserialize, Serialize};

use super::ambient::Ambient;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::ring::{PlanarPoint, RingElement, RingTag};

/// A point-group element `R^rot ∘ T_r^reflect`, where `R` is the generating
/// rotation of the ambient (by 360°/n) and `T_r` is complex conjugation.
/// As a map on the plane: `x ↦ e^{2πi·rot/n} · x` or `x ↦ e^{2πi·rot/n} · conj(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointSymmetry {
    ambient: Ambient,
    rot: u32,
    reflect: bool,
    mat: IntMatrix,
}

/// Matrix of `x ↦ s·x` on ring coordinates.
pub fn multiplication_matrix(s: &RingElement) -> Result<IntMatrix> {
    let tag = s.tag();
    let cols = (0..tag.rank())
        .map(|k| Ok(s.mul(&RingElement::basis(tag, k))?.into_coeffs()))
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_columns(&cols)
}

/// Matrix of complex conjugation on ring coordinates.
pub fn conjugation_matrix(tag: RingTag) -> IntMatrix {
    let cols: Vec<Vec<Int>> = (0..tag.rank())
        .map(|k| {
            RingElement::basis(tag, k)
                .conjugate()
                .expect("basis conjugates are small")
                .into_coeffs()
        })
        .collect();
    IntMatrix::from_columns(&cols).expect("square by construction")
}

fn generator_matrices(ambient: Ambient) -> (IntMatrix, IntMatrix) {
    match ambient {
        Ambient::Rectangular(_) => {
            let mut rot = IntMatrix::identity(2);
            rot.set(0, 0, -1);
            rot.set(1, 1, -1);
            let mut refl = IntMatrix::identity(2);
            refl.set(1, 1, -1);
            (rot, refl)
        }
        _ => {
            let unit = match ambient {
                Ambient::Square => RingElement::gaussian(0, 1),
                // e^{iπ/3} = 1 + ξ
                Ambient::Hexagonal => RingElement::eisenstein(1, 1),
                _ => RingElement::octagonal([0, 1, 0, 0]),
            };
            let rot = multiplication_matrix(&unit).expect("unit multiplication fits");
            (rot, conjugation_matrix(ambient.tag()))
        }
    }
}

impl PointSymmetry {
    pub fn new(ambient: Ambient, rot: u32, reflect: bool) -> Self {
        let n = ambient.rotation_order();
        let rot = rot % n;
        let (r, t) = generator_matrices(ambient);
        let mut mat = IntMatrix::identity(ambient.rank());
        for _ in 0..rot {
            mat = r.mul(&mat).expect("unimodular products stay small");
        }
        if reflect {
            mat = mat.mul(&t).expect("unimodular products stay small");
        }
        PointSymmetry {
            ambient,
            rot,
            reflect,
            mat,
        }
    }

    pub fn identity(ambient: Ambient) -> Self {
        Self::new(ambient, 0, false)
    }

    /// Rotation by 180°.
    pub fn half_turn(ambient: Ambient) -> Self {
        Self::new(ambient, ambient.rotation_order() / 2, false)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn rot(&self) -> u32 {
        self.rot
    }

    pub fn is_reflection(&self) -> bool {
        self.reflect
    }

    pub fn is_identity(&self) -> bool {
        self.rot == 0 && !self.reflect
    }

    pub fn mat(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn apply(&self, v: &[Int]) -> Result<Vec<Int>> {
        self.mat.mul_vec(v)
    }

    /// The same map acting on the Euclidean plane.
    pub fn apply_planar(&self, p: PlanarPoint) -> PlanarPoint {
        let y = if self.reflect { -p.y } else { p.y };
        let t = std::f64::consts::TAU * self.rot as f64 / self.ambient.rotation_order() as f64;
        let (s, c) = t.sin_cos();
        PlanarPoint::new(c * p.x - s * y, s * p.x + c * y)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &PointSymmetry) -> Result<PointSymmetry> {
        if self.ambient != other.ambient {
            return Err(Error::InvalidAmbient(format!(
                "cannot compose {} with {}",
                self.ambient, other.ambient
            )));
        }
        let n = self.ambient.rotation_order();
        // T R^b = R^{-b} T
        let rot = if self.reflect {
            (self.rot + n - other.rot) % n
        } else {
            (self.rot + other.rot) % n
        };
        Ok(PointSymmetry {
            ambient: self.ambient,
            rot,
            reflect: self.reflect ^ other.reflect,
            mat: self.mat.mul(&other.mat)?,
        })
    }

    pub fn inverse(&self) -> PointSymmetry {
        if self.reflect {
            return self.clone();
        }
        let n = self.ambient.rotation_order();
        Self::new(self.ambient, (n - self.rot) % n, false)
    }

    pub fn name(&self) -> String {
        let k = self.rot;
        let t = if self.reflect { "T_r" } else { "" };
        match self.ambient {
            Ambient::Octagonal => {
                let a = match k {
                    0 => String::new(),
                    1 => "a".to_string(),
                    _ => format!("a^{k}"),
                };
                match (a.is_empty(), self.reflect) {
                    (true, false) => "1".to_string(),
                    (_, true) => format!("{a}b"),
                    (false, false) => a,
                }
            }
            amb => {
                let n = amb.rotation_order();
                let r = if k == 0 {
                    ""
                } else if 2 * k == n {
                    "-"
                } else if amb == Ambient::Square {
                    if k == 1 {
                        "R_i"
                    } else {
                        "R_-i"
                    }
                } else {
                    ["", "R_60", "R_120", "", "R_240", "R_300"][k as usize]
                };
                match (r, t) {
                    ("", "") => "1".to_string(),
                    ("-", "") => "-1".to_string(),
                    (r, t) => format!("{r}{t}"),
                }
            }
        }
    }
}

impl fmt::Display for PointSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// All point-group elements: rotations first, then the reflections
/// `R^k T_r`, each in increasing `k`.
pub fn point_group(ambient: Ambient) -> Vec<PointSymmetry> {
    let n = ambient.rotation_order();
    [false, true]
        .into_iter()
        .flat_map(|reflect| (0..n).map(move |k| PointSymmetry::new(ambient, k, reflect)))
        .collect()
}

/// Look up a point-group element by its printed name.
pub fn find_symmetry(ambient: Ambient, name: &str) -> Result<PointSymmetry> {
    point_group(ambient)
        .into_iter()
        .find(|g| g.name() == name.trim())
        .ok_or_else(|| Error::Parse(format!("no element named {name:?} in the {ambient} point group")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect() -> Ambient {
        "rect:2".parse().unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(point_group(Ambient::Square).len(), 8);
        assert_eq!(point_group(Ambient::Hexagonal).len(), 12);
        assert_eq!(point_group(Ambient::Octagonal).len(), 16);
        let r: Vec<String> = point_group(rect()).iter().map(|g| g.name()).collect();
        assert_eq!(r, ["1", "-1", "T_r", "-T_r"]);
    }

    #[test]
    fn octagonal_generators() {
        let a = PointSymmetry::new(Ambient::Octagonal, 1, false);
        let cols = a.mat().columns();
        assert_eq!(
            cols,
            vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, 0, 0, 0]]
        );
        let b = PointSymmetry::new(Ambient::Octagonal, 0, true);
        let cols = b.mat().columns();
        assert_eq!(
            cols,
            vec![
                vec![1, 0, 0, 0],
                vec![0, 0, 0, -1],
                vec![0, 0, -1, 0],
                vec![0, -1, 0, 0]
            ]
        );
        assert_eq!(PointSymmetry::new(Ambient::Octagonal, 2, true).name(), "a^2b");
        assert_eq!(PointSymmetry::half_turn(Ambient::Octagonal).name(), "a^4");
    }

    #[test]
    fn names_are_unique_and_resolvable() {
        for amb in [Ambient::Square, Ambient::Hexagonal, Ambient::Octagonal, rect()] {
            let group = point_group(amb);
            for g in &group {
                assert_eq!(&find_symmetry(amb, &g.name()).unwrap(), g);
            }
        }
        assert!(find_symmetry(Ambient::Square, "a").is_err());
    }

    #[test]
    fn composition_matches_matrix_product_and_inverse() {
        for amb in [Ambient::Square, Ambient::Hexagonal, Ambient::Octagonal, rect()] {
            let group = point_group(amb);
            let id = PointSymmetry::identity(amb);
            for g in &group {
                let det = g.mat().det().unwrap();
                assert!(det == 1 || det == -1);
                assert_eq!(g.compose(&g.inverse()).unwrap(), id);
                for h in &group {
                    let gh = g.compose(h).unwrap();
                    // the name arithmetic must agree with an independent rebuild
                    assert_eq!(gh, PointSymmetry::new(amb, gh.rot(), gh.is_reflection()));
                }
            }
        }
    }

    #[test]
    fn half_turn_is_negation() {
        for amb in [Ambient::Square, Ambient::Hexagonal, Ambient::Octagonal, rect()] {
            let h = PointSymmetry::half_turn(amb);
            let v: Vec<Int> = (1..=amb.rank() as Int).collect();
            let neg: Vec<Int> = v.iter().map(|x| -x).collect();
            assert_eq!(h.apply(&v).unwrap(), neg);
        }
    }
}
