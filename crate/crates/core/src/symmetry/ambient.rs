use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::{self, Int};
use crate::ring::{PlanarPoint, RingTag, FRAC_1_SQRT_2, SQRT_3_2};

/// Height of a rectangular lattice ⟨1, h·i⟩, kept as a reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Aspect {
    num: Int,
    den: Int,
}

impl Aspect {
    pub fn new(num: Int, den: Int) -> Result<Self> {
        if num <= 0 || den <= 0 {
            return Err(Error::InvalidAmbient(format!("height {num}/{den} must be positive")));
        }
        let g = int::gcd(num, den);
        let (num, den) = (num / g, den / g);
        if num == den {
            return Err(Error::InvalidAmbient(
                "rectangular height 1 is the square lattice; use `square`".into(),
            ));
        }
        Ok(Aspect { num, den })
    }

    pub fn num(self) -> Int {
        self.num
    }

    pub fn den(self) -> Int {
        self.den
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Aspect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The module being colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    /// ℤ[i]
    Square,
    /// ℤ[ξ]
    Hexagonal,
    /// ⟨1, h·i⟩ with h ≠ 1; coordinates are taken in that basis.
    Rectangular(Aspect),
    /// ℤ[ζ], rank 4, dense in the plane.
    Octagonal,
}

impl Ambient {
    /// Ring whose coefficient layout the ambient's coordinates use.
    pub fn tag(self) -> RingTag {
        match self {
            Ambient::Square | Ambient::Rectangular(_) => RingTag::Gaussian,
            Ambient::Hexagonal => RingTag::Eisenstein,
            Ambient::Octagonal => RingTag::Octagonal,
        }
    }

    pub fn rank(self) -> usize {
        self.tag().rank()
    }

    /// Order of the rotation subgroup of the point group.
    pub fn rotation_order(self) -> u32 {
        match self {
            Ambient::Square => 4,
            Ambient::Hexagonal => 6,
            Ambient::Rectangular(_) => 2,
            Ambient::Octagonal => 8,
        }
    }

    pub fn point_group_order(self) -> usize {
        2 * self.rotation_order() as usize
    }

    /// Planar position of a point given in ambient coordinates.
    pub fn embed(self, coeffs: &[Int]) -> PlanarPoint {
        let c: Vec<f64> = coeffs.iter().map(|&v| v as f64).collect();
        match self {
            Ambient::Square => PlanarPoint::new(c[0], c[1]),
            Ambient::Rectangular(h) => PlanarPoint::new(c[0], h.value() * c[1]),
            Ambient::Hexagonal => PlanarPoint::new(c[0] - 0.5 * c[1], SQRT_3_2 * c[1]),
            Ambient::Octagonal => PlanarPoint::new(
                c[0] + (c[1] - c[3]) * FRAC_1_SQRT_2,
                c[2] + (c[1] + c[3]) * FRAC_1_SQRT_2,
            ),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Square => f.write_str("square"),
            Ambient::Hexagonal => f.write_str("hex"),
            Ambient::Rectangular(h) => write!(f, "rect:{h}"),
            Ambient::Octagonal => f.write_str("oct"),
        }
    }
}

impl FromStr for Ambient {
    type Err = Error;

    /// `square`, `hex`, `rect:<h>` (h an integer or `p/q`) or `oct`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "square" => return Ok(Ambient::Square),
            "hex" | "hexagonal" => return Ok(Ambient::Hexagonal),
            "oct" | "octagonal" => return Ok(Ambient::Octagonal),
            _ => {}
        }
        let Some(h) = s.strip_prefix("rect:") else {
            return Err(Error::InvalidAmbient(format!("unknown ambient {s:?}")));
        };
        let bad = |_| Error::InvalidAmbient(format!("bad height {h:?}"));
        let (num, den) = match h.split_once('/') {
            Some((n, d)) => (n.trim().parse().map_err(bad)?, d.trim().parse().map_err(bad)?),
            None => (h.trim().parse().map_err(bad)?, 1),
        };
        Ok(Ambient::Rectangular(Aspect::new(num, den)?))
    }
}
