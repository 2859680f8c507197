//! Closed-form divisibility criteria for sublattices `⟨u, v⟩` of the square
//! and hexagonal lattices.
//!
//! With `D = |Im(u v̄)|` (the ξ-coefficient for Eisenstein integers), each
//! family of reflections and the generating rotation fixes the sublattice
//! exactly when `D` divides a short list of integers built from `u` and `v`.
//! "D divides a ring element" means D divides every coefficient.

use super::group::{point_group, PointSymmetry};
use super::{Ambient, ColorGroupReport, TheoremCase};
use crate::error::{Error, Result};
use crate::int::{self, divides, Int};
use crate::lattice::GenMatrix;
use crate::ring::{im_bar_product, re_bar_product, RingElement, RingTag};

/// Divisibility facts shared by the square and hexagonal criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conditions {
    /// `D | N(u), N(v), Re(u v̄)`: invariance under the generating rotation.
    pub rotation: bool,
    /// `D | Im(u²), Im(v²), Im(uv)`.
    pub imag: bool,
    /// `D | Re(u²), Re(v²), Re(uv)`.
    pub real: bool,
    /// `D | Re(w) − Im(w)` for `w ∈ {u², v², uv}`; meaningful for Eisenstein only.
    pub difference: bool,
}

fn bar_divisor(u: &RingElement, v: &RingElement) -> Result<Int> {
    let d = im_bar_product(u, v)?;
    if d == 0 {
        return Err(Error::IndexZero);
    }
    Ok(d.abs())
}

pub fn conditions(u: &RingElement, v: &RingElement) -> Result<Conditions> {
    let d = bar_divisor(u, v)?;
    let products = [u.mul(u)?, v.mul(v)?, u.mul(v)?];
    let all = |f: &dyn Fn(&RingElement) -> Result<Int>| -> Result<bool> {
        for w in &products {
            if !divides(d, f(w)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(Conditions {
        rotation: divides(d, u.norm()?) && divides(d, v.norm()?) && divides(d, re_bar_product(u, v)?),
        imag: all(&|w| Ok(w.coeffs()[1]))?,
        real: all(&|w| Ok(w.coeffs()[0]))?,
        difference: all(&|w| int::sub(w.coeffs()[0], w.coeffs()[1]))?,
    })
}

impl Conditions {
    /// Every clause whose condition holds, in listed order. The final clause
    /// ("none of the above") fires only when no other does.
    pub fn square_clauses(&self) -> Vec<char> {
        let c = self;
        let mut out = Vec::new();
        if c.rotation && c.imag && c.real {
            out.push('a');
        }
        if c.rotation && !c.imag {
            out.push('b');
        }
        if c.imag && !c.rotation {
            out.push('c');
        }
        if c.real && !c.rotation {
            out.push('d');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }

    pub fn hex_clauses(&self) -> Vec<char> {
        let c = self;
        let mut out = Vec::new();
        if c.rotation && c.imag && c.real {
            out.push('a');
        }
        if c.rotation && !c.imag {
            out.push('b');
        }
        if c.imag && !c.rotation {
            out.push('c');
        }
        if c.real && !c.rotation {
            out.push('d');
        }
        if c.difference && !c.rotation {
            out.push('e');
        }
        if out.is_empty() {
            out.push('f');
        }
        out
    }
}

fn report(
    ambient: Ambient,
    m_index: u64,
    keep: impl Fn(&PointSymmetry) -> bool,
    label: &str,
    case: TheoremCase,
) -> ColorGroupReport {
    ColorGroupReport {
        ambient,
        index: m_index,
        stabilizer: point_group(ambient).into_iter().filter(|g| keep(g)).collect(),
        label: label.to_string(),
        theorem_case: case,
        permutations: None,
    }
}

fn require(tag: RingTag, u: &RingElement, v: &RingElement) -> Result<()> {
    tag.check_same(u.tag())?;
    tag.check_same(v.tag())
}

/// Color group of the coloring of ℤ[i] by `⟨u, v⟩`, from the divisibility
/// criteria alone.
pub fn classify_square(u: &RingElement, v: &RingElement) -> Result<ColorGroupReport> {
    require(RingTag::Gaussian, u, v)?;
    let c = conditions(u, v)?;
    let index = bar_divisor(u, v)? as u64;
    let clause = c.square_clauses()[0];
    // reflections R^k T_r: k even are the axis mirrors, k odd the diagonal ones
    let (keep, label): (fn(&PointSymmetry) -> bool, &str) = match clause {
        'a' => (|_| true, "p4m"),
        'b' => (|g| !g.is_reflection(), "p4"),
        'c' => (|g| g.rot() % 2 == 0, "pmm"),
        'd' => (|g| g.is_reflection() == (g.rot() % 2 == 1), "cmm"),
        _ => (|g| !g.is_reflection() && g.rot() % 2 == 0, "p2"),
    };
    Ok(report(Ambient::Square, index, keep, label, TheoremCase::Square(clause)))
}

/// Color group of the coloring of ℤ[ξ] by `⟨u, v⟩`, from the divisibility
/// criteria alone.
///
/// The three mirror clauses certify the three mirror pairs `{R^k T_r,
/// R^{k+3} T_r}` (rotation by 60°): the imaginary-part clause gives k = 0,
/// the real-part clause k = 2 and the difference clause k = 1.
pub fn classify_hex(u: &RingElement, v: &RingElement) -> Result<ColorGroupReport> {
    require(RingTag::Eisenstein, u, v)?;
    let c = conditions(u, v)?;
    let index = bar_divisor(u, v)? as u64;
    let clause = c.hex_clauses()[0];
    let mirror_pair = |k: u32| {
        move |g: &PointSymmetry| !g.is_reflection() && g.rot() % 3 == 0 || g.is_reflection() && g.rot() % 3 == k
    };
    let (keep, label): (Box<dyn Fn(&PointSymmetry) -> bool>, &str) = match clause {
        'a' => (Box::new(|_| true), "p6m"),
        'b' => (Box::new(|g| !g.is_reflection()), "p6"),
        'c' => (Box::new(mirror_pair(0)), "cmm"),
        'd' => (Box::new(mirror_pair(2)), "cmm"),
        'e' => (Box::new(mirror_pair(1)), "cmm"),
        _ => (Box::new(|g| !g.is_reflection() && g.rot() % 3 == 0), "p2"),
    };
    Ok(report(
        Ambient::Hexagonal,
        index,
        keep,
        label,
        TheoremCase::Hexagonal(clause),
    ))
}

/// Color group of the coloring of the rectangular lattice `⟨1, h·i⟩` by
/// `⟨u, v⟩` (coordinates in the basis {1, h·i}).
///
/// Scaling by the denominator of `h` embeds the lattice in ℤ[i] without
/// changing which sublattices are fixed by the real-axis mirror, so the
/// imaginary-part condition of the square criteria decides it.
pub fn classify_rect(ambient: Ambient, m: &GenMatrix) -> Result<ColorGroupReport> {
    let Ambient::Rectangular(h) = ambient else {
        return Err(Error::InvalidAmbient(format!("{ambient} is not rectangular")));
    };
    RingTag::Gaussian.check_same(m.tag())?;
    let to_gaussian = |col: Vec<Int>| -> Result<RingElement> {
        Ok(RingElement::gaussian(
            int::mul(col[0], h.den())?,
            int::mul(col[1], h.num())?,
        ))
    };
    let cols = m.mat().columns();
    let u = to_gaussian(cols[0].clone())?;
    let v = to_gaussian(cols[1].clone())?;
    let c = conditions(&u, &v)?;
    let (clause, label) = if c.imag { ('a', "pmm") } else { ('b', "p2") };
    let keep = move |g: &PointSymmetry| c.imag || !g.is_reflection();
    Ok(report(
        ambient,
        m.index(),
        keep,
        label,
        TheoremCase::Rectangular(clause),
    ))
}

/// Closed-form classification where one exists (square, hexagonal,
/// rectangular ambients); `None` for the octagonal module.
pub fn classify(ambient: Ambient, m: &GenMatrix) -> Result<Option<ColorGroupReport>> {
    ambient.tag().check_same(m.tag())?;
    let gens = m.generators();
    Ok(Some(match ambient {
        Ambient::Square => classify_square(&gens[0], &gens[1])?,
        Ambient::Hexagonal => classify_hex(&gens[0], &gens[1])?,
        Ambient::Rectangular(_) => classify_rect(ambient, m)?,
        Ambient::Octagonal => return Ok(None),
    }))
}
