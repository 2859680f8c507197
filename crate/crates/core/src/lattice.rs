//! Full-rank submodules of the ambient ℤ-module, kept as integer generator
//! matrices. Column `j` of a generator matrix holds the ambient-basis
//! coordinates of generator `j`.
//!
//! The canonical form is the column-style Hermite normal form: upper
//! triangular, positive diagonal, and every entry to the right of a diagonal
//! entry `d` reduced into `[0, d)`. Two generator matrices span the same
//! module iff their normal forms are identical, and the fundamental box of
//! the normal form supplies one canonical representative per coset. Those
//! representatives are the colors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::{self, Int};
use crate::matrix::IntMatrix;
use crate::ring::{RingElement, RingTag};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HnfBasis {
    pub tag: RingTag,
    pub mat: IntMatrix,
}

impl HnfBasis {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.mat.n()).map(|i| self.mat.get(i, i)).collect()
    }
}

/// Generators of a full-rank submodule. Singular generator sets cannot be
/// constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenMatrix {
    tag: RingTag,
    mat: IntMatrix,
    hnf: HnfBasis,
}

/// A color: canonical coset representative plus its ordinal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CosetRep {
    pub tag: RingTag,
    pub coeffs: Vec<Int>,
    pub ordinal: usize,
}

impl GenMatrix {
    pub fn new(tag: RingTag, mat: IntMatrix) -> Result<Self> {
        if mat.n() != tag.rank() {
            return Err(Error::DimensionMismatch {
                expected: tag.rank(),
                got: mat.n(),
            });
        }
        let hnf = HnfBasis {
            tag,
            mat: hermite_normal_form(&mat)?,
        };
        Ok(GenMatrix { tag, mat, hnf })
    }

    pub fn from_columns(tag: RingTag, cols: &[Vec<Int>]) -> Result<Self> {
        if cols.len() != tag.rank() {
            return Err(Error::DimensionMismatch {
                expected: tag.rank(),
                got: cols.len(),
            });
        }
        Self::new(tag, IntMatrix::from_columns(cols)?)
    }

    pub fn from_elements(gens: &[RingElement]) -> Result<Self> {
        let tag = gens
            .first()
            .ok_or(Error::DimensionMismatch { expected: 1, got: 0 })?
            .tag();
        for g in gens {
            tag.check_same(g.tag())?;
        }
        let cols: Vec<Vec<Int>> = gens.iter().map(|g| g.coeffs().to_vec()).collect();
        Self::from_columns(tag, &cols)
    }

    /// The whole ambient module.
    pub fn full(tag: RingTag) -> Self {
        Self::new(tag, IntMatrix::identity(tag.rank())).expect("identity is nonsingular")
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.mat.n()
    }

    pub fn mat(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn generators(&self) -> Vec<RingElement> {
        self.mat
            .columns()
            .into_iter()
            .map(|c| RingElement::new(self.tag, c).expect("column length equals rank"))
            .collect()
    }

    pub fn hnf(&self) -> &HnfBasis {
        &self.hnf
    }

    /// Number of cosets, `|det|`.
    pub fn index(&self) -> u64 {
        self.hnf
            .diagonal()
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
            .expect("index fits in u64 whenever the normal form was computed")
    }

    pub fn same_module(&self, other: &GenMatrix) -> Result<bool> {
        self.tag.check_same(other.tag)?;
        Ok(self.hnf == other.hnf)
    }

    pub fn contains(&self, v: &[Int]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&c| c == 0))
    }

    /// Fundamental-box representative of `v + M`.
    pub fn reduce(&self, v: &[Int]) -> Result<Vec<Int>> {
        let n = self.rank();
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let h = &self.hnf.mat;
        let mut w = v.to_vec();
        for k in (0..n).rev() {
            let q = w[k].div_euclid(h.get(k, k));
            if q != 0 {
                for r in 0..=k {
                    w[r] = int::sub_mul(w[r], q, h.get(r, k))?;
                }
            }
        }
        Ok(w)
    }

    /// Lexicographic position of a reduced vector among all box vectors.
    fn ordinal_of(&self, reduced: &[Int]) -> usize {
        let diag = self.hnf.diagonal();
        reduced
            .iter()
            .zip(&diag)
            .fold(0usize, |acc, (&c, &d)| acc * d as usize + c as usize)
    }

    pub fn canonical_rep(&self, v: &[Int]) -> Result<CosetRep> {
        let coeffs = self.reduce(v)?;
        let ordinal = self.ordinal_of(&coeffs);
        Ok(CosetRep {
            tag: self.tag,
            coeffs,
            ordinal,
        })
    }

    /// All colors, ordered lexicographically with the zero vector first.
    pub fn coset_reps(&self) -> Vec<CosetRep> {
        let diag = self.hnf.diagonal();
        let total = self.index() as usize;
        let mut out = Vec::with_capacity(total);
        let mut cur = vec![0 as Int; diag.len()];
        for ordinal in 0..total {
            out.push(CosetRep {
                tag: self.tag,
                coeffs: cur.clone(),
                ordinal,
            });
            // odometer, last coordinate fastest
            for k in (0..cur.len()).rev() {
                cur[k] += 1;
                if cur[k] < diag[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
        out
    }

    /// Image of the module under an integer matrix acting on ambient coordinates.
    pub fn transformed(&self, g: &IntMatrix) -> Result<GenMatrix> {
        GenMatrix::new(self.tag, g.mul(&self.mat)?)
    }
}

/// Column-style Hermite normal form of a nonsingular matrix.
pub fn hermite_normal_form(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.n();
    let mut h = m.clone();

    let swap_cols = |h: &mut IntMatrix, a: usize, b: usize| {
        if a != b {
            for r in 0..n {
                let (x, y) = (h.get(r, a), h.get(r, b));
                h.set(r, a, y);
                h.set(r, b, x);
            }
        }
    };
    // col[dst] -= q * col[src]
    let axpy = |h: &mut IntMatrix, dst: usize, q: Int, src: usize| -> Result<()> {
        for r in 0..n {
            let v = int::sub_mul(h.get(r, dst), q, h.get(r, src))?;
            h.set(r, dst, v);
        }
        Ok(())
    };

    // Clear row `r` to the left of the diagonal, bottom row first.
    for r in (0..n).rev() {
        loop {
            let pivot = (0..=r)
                .filter(|&c| h.get(r, c) != 0)
                .min_by_key(|&c| h.get(r, c).unsigned_abs());
            let Some(p) = pivot else {
                return Err(Error::DependentGenerators);
            };
            swap_cols(&mut h, p, r);
            let mut done = true;
            for c in 0..r {
                let v = h.get(r, c);
                if v != 0 {
                    let q = v.div_euclid(h.get(r, r));
                    axpy(&mut h, c, q, r)?;
                    if h.get(r, c) != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, r) < 0 {
            for i in 0..n {
                h.set(i, r, int::neg(h.get(i, r))?);
            }
        }
    }

    // Reduce entries right of each diagonal entry; lower rows first so that
    // later reductions only disturb rows above.
    for r in (0..n).rev() {
        let d = h.get(r, r);
        for c in r + 1..n {
            let q = h.get(r, c).div_euclid(d);
            if q != 0 {
                axpy(&mut h, c, q, r)?;
            }
        }
    }
    Ok(h)
}
