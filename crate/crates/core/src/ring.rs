//! Exact arithmetic in the Gaussian integers ℤ[i], the Eisenstein integers
//! ℤ[ξ] (ξ = e^{2πi/3}) and the octagonal module ℤ[ζ] (ζ = e^{iπ/4}).
//!
//! Elements are stored as coefficient vectors over the standard power basis
//! of the ring. All arithmetic is checked; the floating-point embedding in
//! [`RingElement::embed`] exists for rendering only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::{self, Int};

pub(crate) const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
pub(crate) const SQRT_3_2: f64 = 0.866_025_403_784_438_6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    /// ℤ[i], basis {1, i}
    Gaussian,
    /// ℤ[ξ], basis {1, ξ}
    Eisenstein,
    /// ℤ[ζ], basis {1, ζ, ζ², ζ³}
    Octagonal,
}

impl RingTag {
    pub fn rank(self) -> usize {
        match self {
            RingTag::Gaussian | RingTag::Eisenstein => 2,
            RingTag::Octagonal => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingTag::Gaussian => "gaussian",
            RingTag::Eisenstein => "eisenstein",
            RingTag::Octagonal => "octagonal",
        }
    }

    fn prefix(self) -> char {
        match self {
            RingTag::Gaussian => 'g',
            RingTag::Eisenstein => 'e',
            RingTag::Octagonal => 'o',
        }
    }

    pub(crate) fn check_same(self, other: RingTag) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.name(), other.name()))
        }
    }
}

/// A point of the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub const ORIGIN: PlanarPoint = PlanarPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        PlanarPoint { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: PlanarPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dot(self, other: PlanarPoint) -> f64 {
        self.x * other.x + self.y * other.y
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElement {
    tag: RingTag,
    coeffs: Vec<Int>,
}

impl RingElement {
    pub fn new(tag: RingTag, coeffs: Vec<Int>) -> Result<Self> {
        if coeffs.len() != tag.rank() {
            return Err(Error::DimensionMismatch {
                expected: tag.rank(),
                got: coeffs.len(),
            });
        }
        Ok(RingElement { tag, coeffs })
    }

    pub fn gaussian(re: Int, im: Int) -> Self {
        RingElement {
            tag: RingTag::Gaussian,
            coeffs: vec![re, im],
        }
    }

    pub fn eisenstein(a: Int, b: Int) -> Self {
        RingElement {
            tag: RingTag::Eisenstein,
            coeffs: vec![a, b],
        }
    }

    pub fn octagonal(c: [Int; 4]) -> Self {
        RingElement {
            tag: RingTag::Octagonal,
            coeffs: c.to_vec(),
        }
    }

    pub fn zero(tag: RingTag) -> Self {
        RingElement {
            tag,
            coeffs: vec![0; tag.rank()],
        }
    }

    pub fn one(tag: RingTag) -> Self {
        Self::basis(tag, 0)
    }

    /// The `k`-th power-basis element.
    pub fn basis(tag: RingTag, k: usize) -> Self {
        let mut coeffs = vec![0; tag.rank()];
        coeffs[k] = 1;
        RingElement { tag, coeffs }
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Int> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.tag.check_same(other.tag)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| int::add(a, b))
            .collect::<Result<_>>()?;
        Ok(RingElement { tag: self.tag, coeffs })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<RingElement> {
        let coeffs = self.coeffs.iter().map(|&c| int::neg(c)).collect::<Result<_>>()?;
        Ok(RingElement { tag: self.tag, coeffs })
    }

    pub fn scale(&self, k: Int) -> Result<RingElement> {
        let coeffs = self.coeffs.iter().map(|&c| int::mul(c, k)).collect::<Result<_>>()?;
        Ok(RingElement { tag: self.tag, coeffs })
    }

    /// Ring product, reduced by i² = −1, ξ² = −1 − ξ or ζ⁴ = −1.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.tag.check_same(other.tag)?;
        let (a, b) = (&self.coeffs, &other.coeffs);
        let coeffs = match self.tag {
            RingTag::Gaussian => {
                // (a0 + a1 i)(b0 + b1 i)
                let re = int::sub(int::mul(a[0], b[0])?, int::mul(a[1], b[1])?)?;
                let im = int::add(int::mul(a[0], b[1])?, int::mul(a[1], b[0])?)?;
                vec![re, im]
            }
            RingTag::Eisenstein => {
                // a1 b1 ξ² = −a1 b1 − a1 b1 ξ
                let bb = int::mul(a[1], b[1])?;
                let c0 = int::sub(int::mul(a[0], b[0])?, bb)?;
                let c1 = int::sub(int::add(int::mul(a[0], b[1])?, int::mul(a[1], b[0])?)?, bb)?;
                vec![c0, c1]
            }
            RingTag::Octagonal => {
                let mut out = [0 as Int; 4];
                for i in 0..4 {
                    for j in 0..4 {
                        let p = int::mul(a[i], b[j])?;
                        let k = i + j;
                        if k < 4 {
                            out[k] = int::add(out[k], p)?;
                        } else {
                            out[k - 4] = int::sub(out[k - 4], p)?;
                        }
                    }
                }
                out.to_vec()
            }
        };
        Ok(RingElement { tag: self.tag, coeffs })
    }

    pub fn pow(&self, mut e: u32) -> Result<RingElement> {
        let mut acc = RingElement::one(self.tag);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Complex conjugate in the same basis.
    pub fn conjugate(&self) -> Result<RingElement> {
        let c = &self.coeffs;
        let coeffs = match self.tag {
            RingTag::Gaussian => vec![c[0], int::neg(c[1])?],
            // conj(ξ) = ξ² = −1 − ξ
            RingTag::Eisenstein => vec![int::sub(c[0], c[1])?, int::neg(c[1])?],
            // conj(ζ) = −ζ³, conj(ζ²) = −ζ², conj(ζ³) = −ζ
            RingTag::Octagonal => vec![c[0], int::neg(c[3])?, int::neg(c[2])?, int::neg(c[1])?],
        };
        Ok(RingElement { tag: self.tag, coeffs })
    }

    /// Field norm `a · conj(a)` for the rank-2 rings.
    pub fn norm(&self) -> Result<Int> {
        let c = &self.coeffs;
        match self.tag {
            RingTag::Gaussian => int::add(int::mul(c[0], c[0])?, int::mul(c[1], c[1])?),
            RingTag::Eisenstein => int::add(
                int::sub(int::mul(c[0], c[0])?, int::mul(c[0], c[1])?)?,
                int::mul(c[1], c[1])?,
            ),
            RingTag::Octagonal => Err(Error::OctagonalNorm),
        }
    }

    /// Planar coordinates of the element.
    pub fn embed(&self) -> PlanarPoint {
        let c: Vec<f64> = self.coeffs.iter().map(|&v| v as f64).collect();
        match self.tag {
            RingTag::Gaussian => PlanarPoint::new(c[0], c[1]),
            RingTag::Eisenstein => PlanarPoint::new(c[0] - 0.5 * c[1], SQRT_3_2 * c[1]),
            RingTag::Octagonal => PlanarPoint::new(
                c[0] + (c[1] - c[3]) * FRAC_1_SQRT_2,
                c[2] + (c[1] + c[3]) * FRAC_1_SQRT_2,
            ),
        }
    }
}

/// The second basis coefficient of `u · conj(v)`: Im(u v̄) for Gaussian
/// integers, the ξ-coefficient of u v̄ for Eisenstein integers. Zero exactly
/// when `u` and `v` are linearly dependent.
pub fn im_bar_product(u: &RingElement, v: &RingElement) -> Result<Int> {
    u.tag.check_same(v.tag)?;
    if u.tag == RingTag::Octagonal {
        return Err(Error::NotRankTwo(u.tag.name()));
    }
    Ok(u.mul(&v.conjugate()?)?.coeffs[1])
}

/// First basis coefficient of `u · conj(v)`.
pub fn re_bar_product(u: &RingElement, v: &RingElement) -> Result<Int> {
    u.tag.check_same(v.tag)?;
    if u.tag == RingTag::Octagonal {
        return Err(Error::NotRankTwo(u.tag.name()));
    }
    Ok(u.mul(&v.conjugate()?)?.coeffs[0])
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.tag.prefix())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Comma-separated decimal integers, e.g. `"3,-1"`.
pub fn parse_coeffs(s: &str) -> Result<Vec<Int>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Int>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}

impl FromStr for RingElement {
    type Err = Error;

    /// `g:a,b`, `e:a,b` or `o:c0,c1,c2,c3`.
    fn from_str(s: &str) -> Result<Self> {
        let (prefix, body) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ring prefix in {s:?}")))?;
        let tag = match prefix {
            "g" => RingTag::Gaussian,
            "e" => RingTag::Eisenstein,
            "o" => RingTag::Octagonal,
            other => return Err(Error::Parse(format!("unknown ring prefix {other:?}"))),
        };
        RingElement::new(tag, parse_coeffs(body)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: Int, b: Int) -> RingElement {
        RingElement::gaussian(a, b)
    }
    fn e(a: Int, b: Int) -> RingElement {
        RingElement::eisenstein(a, b)
    }
    fn o(c: [Int; 4]) -> RingElement {
        RingElement::octagonal(c)
    }

    #[test]
    fn addition() {
        assert_eq!(g(1, 2).add(&g(3, -2)).unwrap(), g(4, 0));
        assert_eq!(e(0, 0).add(&e(7, -3)).unwrap(), e(7, -3));
        assert_eq!(o([1, 0, 1, 0]).add(&o([0, 2, 0, 2])).unwrap(), o([1, 2, 1, 2]));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let err = g(1, 0).add(&e(1, 0)).unwrap_err();
        assert!(err.to_string().contains("ring mismatch"));
        assert!(g(1, 0).mul(&o([1, 0, 0, 0])).is_err());
    }

    #[test]
    fn multiplication() {
        assert_eq!(g(1, 2).mul(&g(-2, 1)).unwrap(), g(-4, -3));
        assert_eq!(e(2, 1).mul(&e(0, 1)).unwrap(), e(-1, 1));
        assert_eq!(o([0, 1, 0, 0]).mul(&o([0, 0, 0, 1])).unwrap(), o([-1, 0, 0, 0]));
        assert_eq!(o([0, 0, 1, 0]).mul(&o([0, 0, 0, 1])).unwrap(), o([0, -1, 0, 0]));
        assert_eq!(e(0, 1).pow(3).unwrap(), e(1, 0));
        assert_eq!(o([0, 1, 0, 0]).pow(8).unwrap(), o([1, 0, 0, 0]));
    }

    #[test]
    fn conjugation() {
        assert_eq!(g(1, 2).conjugate().unwrap(), g(1, -2));
        assert_eq!(e(-1, 1).conjugate().unwrap(), e(-2, -1));
        assert_eq!(o([0, 1, 0, 0]).conjugate().unwrap(), o([0, 0, 0, -1]));
    }

    #[test]
    fn norms() {
        assert_eq!(g(1, 2).norm().unwrap(), 5);
        assert_eq!(e(2, 1).norm().unwrap(), 3);
        assert_eq!(g(0, 0).norm().unwrap(), 0);
        assert_eq!(o([1, 0, 0, 0]).norm(), Err(Error::OctagonalNorm));
    }

    #[test]
    fn im_bar() {
        assert_eq!(im_bar_product(&g(1, 2), &g(-2, 1)).unwrap(), -5);
        assert_eq!(im_bar_product(&g(1, 0), &g(0, 1)).unwrap(), -1);
        assert_eq!(im_bar_product(&e(2, 1), &e(-1, 1)).unwrap(), -3);
        assert!(im_bar_product(&o([1, 0, 0, 0]), &o([0, 1, 0, 0])).is_err());
        assert!(im_bar_product(&g(1, 0), &e(0, 1)).is_err());
    }

    #[test]
    fn embedding() {
        let p = g(3, 0).embed();
        assert_eq!((p.x, p.y), (3.0, 0.0));
        let p = e(0, 1).embed();
        assert!((p.x + 0.5).abs() < 1e-12 && (p.y - 0.75f64.sqrt()).abs() < 1e-12);
        let p = o([0, 1, 0, 0]).embed();
        assert!((p.x - 0.5f64.sqrt()).abs() < 1e-12 && (p.y - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn overflow_propagates() {
        let big = g(Int::MAX / 2, Int::MAX / 2);
        assert_eq!(big.mul(&big), Err(Error::Overflow));
        assert_eq!(big.norm(), Err(Error::Overflow));
    }

    #[test]
    fn text_form() {
        let x: RingElement = "g:3,-1".parse().unwrap();
        assert_eq!(x, g(3, -1));
        let y: RingElement = "o:1, 0, -2, +3".parse().unwrap();
        assert_eq!(y, o([1, 0, -2, 3]));
        assert_eq!(y.to_string(), "o:1,0,-2,3");
        assert!("e:1".parse::<RingElement>().is_err());
        assert!("x:1,2".parse::<RingElement>().is_err());
        assert!("g1,2".parse::<RingElement>().is_err());
    }
}
