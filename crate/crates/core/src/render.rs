//! SVG output of coset colorings.
//!
//! A [`Scene`] is the list of drawn points with their color ordinals; the SVG
//! text is a pure function of the scene and the palette, so identical inputs
//! give byte-identical documents.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::lattice::GenMatrix;
use crate::modelset::Patch;
use crate::ring::{PlanarPoint, RingTag};
use crate::symmetry::{Ambient, ColorPermutation};

pub const PIXELS_PER_UNIT: f64 = 40.0;
pub const POINT_RADIUS: f64 = 0.18;
const MARGIN_PX: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub fills: Vec<String>,
}

impl Default for Palette {
    /// Twelve distinct fills; ordinal 0 is black.
    fn default() -> Self {
        let fills = [
            "#000000", "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
            "#9a6324", "#469990", "#fabed4",
        ];
        Palette {
            fills: fills.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl Palette {
    pub fn len(&self) -> usize {
        self.fills.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fills.is_empty()
    }
}

/// Axis-aligned rectangle in plane coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Bounds {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Bounds {
            x0: x0.min(x1),
            y0: y0.min(y1),
            x1: x0.max(x1),
            y1: y0.max(y1),
        }
    }

    pub fn centered(half: f64) -> Self {
        Bounds::new(-half, -half, half, half)
    }

    pub fn contains(&self, p: PlanarPoint) -> bool {
        const EPS: f64 = 1e-9;
        p.x >= self.x0 - EPS && p.x <= self.x1 + EPS && p.y >= self.y0 - EPS && p.y <= self.y1 + EPS
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub points: Vec<(PlanarPoint, usize)>,
    pub bounds: Bounds,
    pub point_radius: f64,
    /// Number of colors of the coloring.
    pub colors: usize,
    /// Closed polygon drawn under the points, e.g. a fundamental cell.
    pub outline: Option<Vec<PlanarPoint>>,
}

impl Scene {
    fn find(&self, p: PlanarPoint, tol: f64) -> Option<usize> {
        self.points.iter().position(|(q, _)| q.dist(p) <= tol)
    }

    /// The color map `c(p) ↦ c(f(p))` over all scene points whose image is
    /// also a scene point, or `None` if some color is sent to two colors.
    pub fn induced_color_map(&self, f: impl Fn(PlanarPoint) -> PlanarPoint, tol: f64) -> Option<Vec<Option<usize>>> {
        let mut map = vec![None; self.colors];
        for &(p, c) in &self.points {
            let Some(j) = self.find(f(p), tol) else { continue };
            let image = self.points[j].1;
            match map[c] {
                None => map[c] = Some(image),
                Some(prev) if prev != image => return None,
                _ => {}
            }
        }
        Some(map)
    }

    /// Does moving every point by `f` and recoloring by `perm` reproduce the
    /// scene's own coloring at every image that lands in the scene?
    pub fn matches_under(&self, f: impl Fn(PlanarPoint) -> PlanarPoint, perm: &ColorPermutation, tol: f64) -> bool {
        self.points.iter().all(|&(p, c)| match self.find(f(p), tol) {
            Some(j) => self.points[j].1 == perm.mapping[c],
            None => true,
        })
    }

    pub fn to_svg(&self, palette: &Palette) -> Result<String> {
        if palette.len() < self.colors {
            return Err(Error::PaletteTooShort {
                needed: self.colors,
                have: palette.len(),
            });
        }
        let b = self.bounds;
        let width = (b.x1 - b.x0) * PIXELS_PER_UNIT + 2.0 * MARGIN_PX;
        let height = (b.y1 - b.y0) * PIXELS_PER_UNIT + 2.0 * MARGIN_PX;
        let px = |p: PlanarPoint| {
            (
                MARGIN_PX + (p.x - b.x0) * PIXELS_PER_UNIT,
                MARGIN_PX + (b.y1 - p.y) * PIXELS_PER_UNIT,
            )
        };

        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.3}\" height=\"{height:.3}\" viewBox=\"0 0 {width:.3} {height:.3}\">"
        );
        s.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");
        if let Some(outline) = &self.outline {
            let pts: Vec<String> = outline
                .iter()
                .map(|&p| {
                    let (x, y) = px(p);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(
                s,
                "<polygon points=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>",
                pts.join(" ")
            );
        }
        let r = self.point_radius * PIXELS_PER_UNIT;
        s.push_str("<g stroke=\"none\">\n");
        for &(p, c) in &self.points {
            let (x, y) = px(p);
            let _ = writeln!(
                s,
                "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{r:.3}\" fill=\"{}\"/>",
                palette.fills[c]
            );
        }
        s.push_str("</g>\n</svg>\n");
        Ok(s)
    }
}

fn colors_of(m: &GenMatrix) -> usize {
    m.index() as usize
}

/// Every ambient lattice point inside `bounds`, colored by its coset.
pub fn lattice_scene(ambient: Ambient, m: &GenMatrix, bounds: Bounds) -> Result<Scene> {
    if ambient.rank() != 2 {
        return Err(Error::NotRankTwo(ambient.tag().name()));
    }
    ambient.tag().check_same(m.tag())?;
    let e0 = ambient.embed(&[1, 0]);
    let e1 = ambient.embed(&[0, 1]);
    let det = e0.x * e1.y - e1.x * e0.y;
    // coefficient ranges from the box corners
    let corners = [
        (bounds.x0, bounds.y0),
        (bounds.x0, bounds.y1),
        (bounds.x1, bounds.y0),
        (bounds.x1, bounds.y1),
    ];
    let coeff = |(x, y): (f64, f64)| ((x * e1.y - y * e1.x) / det, (e0.x * y - e0.y * x) / det);
    let (mut a_lo, mut a_hi, mut b_lo, mut b_hi) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for c in corners {
        let (a, b) = coeff(c);
        a_lo = a_lo.min(a);
        a_hi = a_hi.max(a);
        b_lo = b_lo.min(b);
        b_hi = b_hi.max(b);
    }
    let mut points = Vec::new();
    for b in (b_lo.floor() as Int - 1)..=(b_hi.ceil() as Int + 1) {
        for a in (a_lo.floor() as Int - 1)..=(a_hi.ceil() as Int + 1) {
            let p = ambient.embed(&[a, b]);
            if bounds.contains(p) {
                points.push((p, m.canonical_rep(&[a, b])?.ordinal));
            }
        }
    }
    let cell = m.hnf().mat.columns();
    let o = PlanarPoint::ORIGIN;
    let u = ambient.embed(&cell[0]);
    let v = ambient.embed(&cell[1]);
    let outline = vec![o, u, PlanarPoint::new(u.x + v.x, u.y + v.y), v];
    Ok(Scene {
        points,
        bounds,
        point_radius: POINT_RADIUS,
        colors: colors_of(m),
        outline: Some(outline),
    })
}

/// Ammann-Beenker patch vertices colored by their coset of `m`.
pub fn ab_scene(m: &GenMatrix, patch: &Patch) -> Result<Scene> {
    RingTag::Octagonal.check_same(m.tag())?;
    let points = patch
        .points
        .iter()
        .map(|x| Ok((x.embed(), m.canonical_rep(x.coeffs())?.ordinal)))
        .collect::<Result<Vec<_>>>()?;
    let half = patch.radius.max(1.0) + 0.5;
    Ok(Scene {
        points,
        bounds: Bounds::centered(half),
        point_radius: POINT_RADIUS,
        colors: colors_of(m),
        outline: None,
    })
}

pub fn render_lattice_coloring(ambient: Ambient, m: &GenMatrix, bounds: Bounds, palette: &Palette) -> Result<String> {
    lattice_scene(ambient, m, bounds)?.to_svg(palette)
}

pub fn render_ab_coloring(m: &GenMatrix, patch: &Patch, palette: &Palette) -> Result<String> {
    ab_scene(m, patch)?.to_svg(palette)
}
