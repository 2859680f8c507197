//! Checked `i64` helpers. Every exact computation in the crate goes through
//! these so that overflow surfaces as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

pub type Int = i64;

#[inline]
pub fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: Int, b: Int) -> Result<Int> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub fn neg(a: Int) -> Result<Int> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// `a - q * b`
#[inline]
pub fn sub_mul(a: Int, q: Int, b: Int) -> Result<Int> {
    sub(a, mul(q, b)?)
}

/// `d | n`, with zero dividing only zero.
pub fn divides(d: Int, n: Int) -> bool {
    if d == 0 {
        n == 0
    } else {
        n % d == 0
    }
}

pub fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as Int
}
