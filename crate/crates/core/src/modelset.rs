//! Ammann-Beenker vertex patches by cut and project.
//!
//! A point `x` of ℤ[ζ] is a vertex when its internal-space image `star(x)`
//! falls in the window, a regular octagon with edge length 1 (the image of
//! the centred unit hypercube of ℤ⁴ under the star map). With that window
//! the accepted set is the vertex set of the edge-length-1 tiling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{PlanarPoint, RingElement, RingTag, FRAC_1_SQRT_2};

/// Distance from the window boundary below which a point is treated as
/// sitting on it.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Internal-space image of an octagonal element under ζ ↦ ζ⁵ (ζ², being
/// fixed, keeps its place; ζ and ζ³ trade directions).
pub fn star(x: &RingElement) -> Result<PlanarPoint> {
    RingTag::Octagonal.check_same(x.tag())?;
    let c: Vec<f64> = x.coeffs().iter().map(|&v| v as f64).collect();
    Ok(PlanarPoint::new(
        c[0] + (c[3] - c[1]) * FRAC_1_SQRT_2,
        c[2] - (c[1] + c[3]) * FRAC_1_SQRT_2,
    ))
}

/// Convex octagonal acceptance domain `{y : n_k · (y − shift) ≤ offset}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Window {
    normals: Vec<PlanarPoint>,
    offset: f64,
    shift: PlanarPoint,
}

impl Window {
    /// The edge-length-1 regular octagon: inradius (1 + √2)/2, edge normals
    /// along the multiples of 45°.
    pub fn canonical() -> Self {
        Self::regular(0.5 * (1.0 + std::f64::consts::SQRT_2), 0.0, PlanarPoint::ORIGIN)
    }

    pub fn canonical_shifted(shift: PlanarPoint) -> Self {
        Window {
            shift,
            ..Self::canonical()
        }
    }

    /// Regular octagon with the given inradius, first edge normal at angle
    /// `phase`, translated by `shift`.
    pub fn regular(offset: f64, phase: f64, shift: PlanarPoint) -> Self {
        let normals = (0..8)
            .map(|k| {
                let t = phase + k as f64 * std::f64::consts::FRAC_PI_4;
                PlanarPoint::new(t.cos(), t.sin())
            })
            .collect();
        Window { normals, offset, shift }
    }

    pub fn shift(&self) -> PlanarPoint {
        self.shift
    }

    pub fn circumradius(&self) -> f64 {
        self.offset / (std::f64::consts::PI / 8.0).cos()
    }

    /// Largest value of `n_k · (y − shift) − offset`; negative inside.
    fn excess(&self, y: PlanarPoint) -> f64 {
        let d = PlanarPoint::new(y.x - self.shift.x, y.y - self.shift.y);
        self.normals
            .iter()
            .map(|n| n.dot(d) - self.offset)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// `Ok(true)` inside, `Ok(false)` outside, an error within
    /// [`BOUNDARY_TOL`] of an edge line that bounds the octagon.
    pub fn accepts(&self, y: PlanarPoint) -> Result<bool> {
        let e = self.excess(y);
        if e.abs() < BOUNDARY_TOL {
            return Err(Error::NonGenericWindow);
        }
        Ok(e < 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Patch {
    pub radius: f64,
    /// Lexicographic by coefficients.
    pub points: Vec<RingElement>,
}

impl Patch {
    pub fn coefficients(&self) -> Vec<[Int; 4]> {
        self.points
            .iter()
            .map(|p| {
                let c = p.coeffs();
                [c[0], c[1], c[2], c[3]]
            })
            .collect()
    }

    pub fn embedded(&self) -> Vec<PlanarPoint> {
        self.points.iter().map(RingElement::embed).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Coefficient bound for the search box. Each coefficient is a quarter of a
/// trace, `c_k = ¼ Σ_σ σ(x ζ^{-k})`, over the four embeddings of ℤ[ζ]; two
/// of them have modulus `|x|` and two `|star(x)|`, so
/// `|c_k| ≤ (|x| + |star(x)|) / 2`.
fn coefficient_bound(radius: f64, window: &Window) -> Int {
    let internal = window.circumradius() + window.shift.norm();
    ((radius + internal) / 2.0).floor() as Int + 1
}

/// All vertices within `radius` of the origin.
pub fn ab_vertices(window: &Window, radius: f64) -> Result<Patch> {
    if radius.is_nan() || radius < 0.0 || radius.is_infinite() {
        return Err(Error::Parse(format!(
            "radius must be a non-negative number, got {radius}"
        )));
    }
    let b = coefficient_bound(radius, window);
    let mut points = Vec::new();
    // nested loops emit coefficient tuples in lexicographic order
    for c0 in -b..=b {
        for c1 in -b..=b {
            for c2 in -b..=b {
                for c3 in -b..=b {
                    let x = RingElement::octagonal([c0, c1, c2, c3]);
                    if x.embed().norm() > radius + BOUNDARY_TOL {
                        continue;
                    }
                    if window.accepts(star(&x)?)? {
                        points.push(x);
                    }
                }
            }
        }
    }
    Ok(Patch { radius, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(p: PlanarPoint, x: f64, y: f64) -> bool {
        (p.x - x).abs() < 1e-12 && (p.y - y).abs() < 1e-12
    }

    #[test]
    fn star_examples() {
        let h = FRAC_1_SQRT_2;
        assert!(close(star(&RingElement::octagonal([1, 0, 0, 0])).unwrap(), 1.0, 0.0));
        assert!(close(star(&RingElement::octagonal([0, 1, 0, 0])).unwrap(), -h, -h));
        assert!(close(star(&RingElement::octagonal([0, 0, 1, 0])).unwrap(), 0.0, 1.0));
        assert!(star(&RingElement::gaussian(1, 0)).is_err());
    }

    #[test]
    fn star_of_zeta_minus_zeta_cubed() {
        // ζ⁵ − ζ¹⁵ = ζ⁵ − ζ⁷ = −√2
        let p = star(&RingElement::octagonal([0, 1, 0, -1])).unwrap();
        assert!(close(p, -std::f64::consts::SQRT_2, 0.0));
    }

    #[test]
    fn radius_zero_is_the_origin() {
        let p = ab_vertices(&Window::canonical(), 0.0).unwrap();
        assert_eq!(p.coefficients(), vec![[0, 0, 0, 0]]);
    }

    #[test]
    fn boundary_points_are_rejected() {
        // move the window so that star(0) lands on an edge line
        let w = Window::canonical();
        let shifted = Window::canonical_shifted(PlanarPoint::new(-w.offset, 0.0));
        assert_eq!(ab_vertices(&shifted, 1.0).unwrap_err(), Error::NonGenericWindow);
    }

    #[test]
    fn negative_radius_is_rejected() {
        assert!(ab_vertices(&Window::canonical(), -1.0).is_err());
        assert!(ab_vertices(&Window::canonical(), f64::NAN).is_err());
    }

    #[test]
    fn search_box_is_conservative() {
        // the box from a much larger radius finds nothing extra within 6
        let w = Window::canonical();
        let small = ab_vertices(&w, 6.0).unwrap();
        let big = ab_vertices(&w, 9.0).unwrap();
        let within: Vec<_> = big
            .points
            .into_iter()
            .filter(|x| x.embed().norm() <= 6.0 + BOUNDARY_TOL)
            .collect();
        assert_eq!(within, small.points);
    }
}
