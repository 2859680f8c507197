#![allow(dead_code)]

use colorgroup::symmetry::enumerate_sublattices;
use colorgroup::{Ambient, GenMatrix, IntMatrix, RingElement, RingTag};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..rng.gen_range(0..8) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = IntMatrix::identity(n);
        if i == j {
            e.set(i, i, -1);
        } else {
            e.set(i, j, rng.gen_range(-2..=2));
        }
        u = u.mul(&e).unwrap();
    }
    u
}

/// A random sublattice of index ≤ `max_index`, given by scrambled generators.
pub fn random_sublattice<R: Rng>(rng: &mut R, ambient: Ambient, max_index: u64) -> GenMatrix {
    let m = rng.gen_range(1..=max_index);
    let all = enumerate_sublattices(ambient, m).unwrap();
    let base = all.choose(rng).unwrap();
    let u = unimodular(rng, 2);
    GenMatrix::new(base.tag(), base.mat().mul(&u).unwrap()).unwrap()
}

/// Random full-rank octagonal submodule with coefficients in [-5, 5].
pub fn random_octagonal<R: Rng>(rng: &mut R) -> GenMatrix {
    loop {
        let cols: Vec<Vec<i64>> = (0..4)
            .map(|_| (0..4).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        if let Ok(m) = GenMatrix::from_columns(RingTag::Octagonal, &cols) {
            return m;
        }
    }
}

/// Nonzero multiplier whose rotation part normalizes the point group:
/// k · unit, optionally times 1+i (45°) or 2+ξ (30°).
pub fn normalizing_multiplier<R: Rng>(rng: &mut R, ambient: Ambient) -> RingElement {
    let (unit, twist, order) = match ambient {
        Ambient::Square => (RingElement::gaussian(0, 1), RingElement::gaussian(1, 1), 4),
        Ambient::Hexagonal => (RingElement::eisenstein(1, 1), RingElement::eisenstein(2, 1), 6),
        _ => panic!("rank-2 ring ambients only"),
    };
    let mut s = unit
        .pow(rng.gen_range(0..order))
        .unwrap()
        .scale(rng.gen_range(1..=3))
        .unwrap();
    if rng.gen_bool(0.5) {
        s = s.mul(&twist).unwrap();
    }
    s
}
