use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::{self, Int};

/// Small dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    n: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn from_columns(cols: &[Vec<Int>]) -> Result<Self> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Int {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[r * self.n + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Int> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.n).map(|c| self.column(c)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Int>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc: Int = 0;
                for k in 0..n {
                    acc = int::add(acc, int::mul(self.get(r, k), other.get(k, c))?)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        (0..self.n)
            .map(|r| (0..self.n).try_fold(0 as Int, |acc, k| int::add(acc, int::mul(self.get(r, k), v[k])?)))
            .collect()
    }

    /// Determinant by cofactor expansion; matrices here are at most 4×4.
    pub fn det(&self) -> Result<Int> {
        fn rec(m: &[Vec<Int>]) -> Result<Int> {
            let n = m.len();
            match n {
                0 => Ok(1),
                1 => Ok(m[0][0]),
                2 => int::sub(int::mul(m[0][0], m[1][1])?, int::mul(m[0][1], m[1][0])?),
                _ => {
                    let mut acc: Int = 0;
                    for c in 0..n {
                        if m[0][c] == 0 {
                            continue;
                        }
                        let minor: Vec<Vec<Int>> = m[1..]
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .enumerate()
                                    .filter(|&(j, _)| j != c)
                                    .map(|(_, &v)| v)
                                    .collect()
                            })
                            .collect();
                        let term = int::mul(m[0][c], rec(&minor)?)?;
                        acc = if c % 2 == 0 {
                            int::add(acc, term)?
                        } else {
                            int::sub(acc, term)?
                        };
                    }
                    Ok(acc)
                }
            }
        }
        rec(&self.rows())
    }

    /// Adjugate, so that `m · adj(m) = det(m) · I`.
    pub fn adjugate(&self) -> Result<IntMatrix> {
        let n = self.n;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let minor: Vec<Vec<Int>> = (0..n)
                    .filter(|&i| i != r)
                    .map(|i| (0..n).filter(|&j| j != c).map(|j| self.get(i, j)).collect())
                    .collect();
                let d = IntMatrix::from_rows(&minor)?.det()?;
                let v = if (r + c) % 2 == 0 { d } else { int::neg(d)? };
                adj.set(c, r, v);
            }
        }
        Ok(adj)
    }

    /// Exact division of every entry; `None` if some entry is not divisible.
    pub fn div_exact(&self, d: Int) -> Option<IntMatrix> {
        if d == 0 || self.data.iter().any(|&v| v % d != 0) {
            return None;
        }
        Some(IntMatrix {
            n: self.n,
            data: self.data.iter().map(|&v| v / d).collect(),
        })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(", "))?;
        }
        f.write_str("]")
    }
}
