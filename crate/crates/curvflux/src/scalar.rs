//! Dual-mode arithmetic: every symmetric-function and Newton-tensor routine
//! is generic over a [`Scalar`], instantiated either with [`Exact`]
//! (arbitrary-precision rationals, the ground truth for identity checking)
//! or with `f64` (the working type for geometry).
//!
//! Invariants relied on elsewhere:
//! - `Exact` arithmetic never rounds, so identities that hold for it hold
//!   as polynomial identities.
//! - `f64` follows IEEE semantics; callers guard against NaN with
//!   [`Scalar::is_finite`].

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational, the exact arithmetic mode.
pub type Exact = num::BigRational;

/// Field operations common to exact rationals and `f64`.
///
/// The trait is deliberately small: ring operations via the `std::ops`
/// bounds, a handful of conversions, and an `EXACT` flag that lets generic
/// code refuse operations (like dense eigensolves) that have no exact
/// counterpart.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// True for arithmetic without rounding error.
    const EXACT: bool;

    /// Embed a machine integer.
    fn from_i64(v: i64) -> Self;

    /// Embed a ratio of machine integers (`den` must be nonzero).
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Best-effort embedding of an `f64`; panics on NaN/infinity.
    /// Only the float-backed eigenvalue path uses this.
    fn from_f64_lossy(v: f64) -> Self;

    /// Closest `f64`, used for reporting and tolerance checks.
    fn to_f64(&self) -> f64;

    /// `false` only for non-finite floats.
    fn is_finite(&self) -> bool {
        true
    }

    /// Small non-negative integer power by repeated multiplication.
    fn powu(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_f64_lossy(v: f64) -> Self {
        v
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Scalar for Exact {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Exact::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64_lossy(v: f64) -> Self {
        Exact::from_float(v).expect("cannot embed a non-finite float into a rational")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Fall back to a quotient of approximations for huge operands.
            let n = self.numer().to_f64().unwrap_or(f64::MAX);
            let d = self.denom().to_f64().unwrap_or(f64::MAX);
            n / d
        })
    }
}

/// Binomial coefficient `C(n, k)` as a scalar; zero when `k > n`.
///
/// Computed with the stepwise-exact integer recurrence, so it is exact for
/// every `n` that fits the intermediate `i128` products (far beyond the
/// dimensions this crate handles).
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for t in 0..k {
        // Prefix products of C(n, t+1) are integers, so the division is exact.
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    S::from_i64(i64::try_from(acc).expect("binomial coefficient overflows i64"))
}

/// Factorial `j!` as a scalar (exact for `j <= 20` in `i64`, which covers
/// every degree the crate works with).
pub fn factorial<S: Scalar>(j: usize) -> S {
    let mut acc: i64 = 1;
    for t in 1..=j as i64 {
        acc = acc.checked_mul(t).expect("factorial overflows i64");
    }
    S::from_i64(acc)
}
