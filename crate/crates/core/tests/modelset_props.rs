use std::collections::BTreeSet;

use colorgroup::modelset::{ab_vertices, star, Window};
use colorgroup::{PlanarPoint, RingElement};
use proptest::prelude::*;

fn rotate(p: PlanarPoint, k: u32) -> PlanarPoint {
    let (s, c) = (k as f64 * std::f64::consts::FRAC_PI_4).sin_cos();
    PlanarPoint::new(c * p.x - s * p.y, s * p.x + c * p.y)
}

/// Lattice-rounded keys so that set comparison tolerates float noise.
fn keys(points: &[PlanarPoint]) -> BTreeSet<(i64, i64)> {
    points
        .iter()
        .map(|p| ((p.x * 1e6).round() as i64, (p.y * 1e6).round() as i64))
        .collect()
}

fn pairwise_min(points: &[PlanarPoint]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.min(p.dist(*q));
        }
    }
    best
}

#[test]
fn canonical_patch_is_eightfold_symmetric() {
    let pts = ab_vertices(&Window::canonical(), 9.0).unwrap().embedded();
    let set = keys(&pts);
    for k in 1..8 {
        let rotated: Vec<PlanarPoint> = pts.iter().map(|&p| rotate(p, k)).collect();
        assert_eq!(keys(&rotated), set, "rotation by {k}·45°");
    }
    let mirrored: Vec<PlanarPoint> = pts.iter().map(|p| PlanarPoint::new(p.x, -p.y)).collect();
    assert_eq!(keys(&mirrored), set);
}

#[test]
fn shortest_spacing_is_the_short_rhomb_diagonal() {
    let pts = ab_vertices(&Window::canonical(), 8.0).unwrap().embedded();
    let expected = 2.0 * (std::f64::consts::PI / 8.0).sin();
    assert!((pairwise_min(&pts) - expected).abs() < 1e-9);
}

#[test]
fn interior_vertices_have_an_edge_neighbour() {
    let pts = ab_vertices(&Window::canonical(), 8.0).unwrap().embedded();
    for p in pts.iter().filter(|p| p.norm() < 6.0) {
        let hit = pts.iter().any(|q| (p.dist(*q) - 1.0).abs() < 1e-9);
        assert!(hit, "{p:?}");
    }
}

#[test]
fn every_vertex_has_a_neighbour_at_most_an_edge_away() {
    let pts = ab_vertices(&Window::canonical(), 8.0).unwrap().embedded();
    for p in pts.iter().filter(|p| p.norm() < 6.0) {
        let nn = pts
            .iter()
            .filter(|q| *q != p)
            .map(|q| p.dist(*q))
            .fold(f64::INFINITY, f64::min);
        assert!(nn <= 1.0 + 1e-9, "{p:?}: {nn}");
    }
}

#[test]
fn accepted_points_have_star_images_in_the_window() {
    let w = Window::canonical();
    let patch = ab_vertices(&w, 5.0).unwrap();
    for x in &patch.points {
        assert!(w.accepts(star(x).unwrap()).unwrap());
        assert!(x.embed().norm() <= 5.0 + 1e-12);
    }
}

#[test]
fn brute_force_agrees_with_the_search_box() {
    // an independent enumeration over a generous fixed box
    let w = Window::canonical();
    let patch = ab_vertices(&w, 4.0).unwrap();
    let mut brute = Vec::new();
    for c0 in -6..=6 {
        for c1 in -6..=6 {
            for c2 in -6..=6 {
                for c3 in -6..=6 {
                    let x = RingElement::octagonal([c0, c1, c2, c3]);
                    if x.embed().norm() <= 4.0 && w.accepts(star(&x).unwrap()).unwrap() {
                        brute.push([c0, c1, c2, c3]);
                    }
                }
            }
        }
    }
    assert_eq!(patch.coefficients(), brute);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generation_is_deterministic(r in 0.0f64..6.0, sx in -0.2f64..0.2, sy in -0.2f64..0.2) {
        let w = Window::canonical_shifted(PlanarPoint::new(sx, sy));
        if let Ok(a) = ab_vertices(&w, r) {
            let b = ab_vertices(&w, r).unwrap();
            prop_assert_eq!(&a, &b);
            let c = a.coefficients();
            prop_assert!(c.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn patches_grow_monotonically(r in 0.0f64..5.0, extra in 0.0f64..3.0, sx in -0.2f64..0.2, sy in -0.2f64..0.2) {
        let w = Window::canonical_shifted(PlanarPoint::new(sx, sy));
        if let (Ok(small), Ok(big)) = (ab_vertices(&w, r), ab_vertices(&w, r + extra)) {
            let big: BTreeSet<[i64; 4]> = big.coefficients().into_iter().collect();
            prop_assert!(small.coefficients().iter().all(|c| big.contains(c)));
        }
    }

    #[test]
    fn points_are_uniformly_discrete(sx in -0.3f64..0.3, sy in -0.3f64..0.3) {
        let w = Window::canonical_shifted(PlanarPoint::new(sx, sy));
        if let Ok(p) = ab_vertices(&w, 5.0) {
            prop_assert!(pairwise_min(&p.embedded()) > 0.5);
        }
    }
}
