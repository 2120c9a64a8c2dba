//! Commutative scalar rings, dense matrices over them, and Pfaffians.
//!
//! Three backends implement [`Scalar`]: [`Rational`] (arbitrary precision),
//! [`Poly`] (sparse multivariate polynomials with rational coefficients) and
//! `f64`. Every algorithm in the crate is written once against the trait.

mod matrix;
mod pfaffian;
mod poly;
mod rational;
mod symplectic;

pub use matrix::{Matrix, SkewMatrix};
pub use pfaffian::{det, exterior_power_trace, pf_combinatorial, pf_eliminate};
pub use poly::{poly_coefficient, Monomial, Poly};
pub use rational::Rational;
pub use symplectic::{is_symplectic, symplectic_inverse, symplectic_j};
pub(crate) use symplectic::symplectic_inverse_unchecked;

use std::fmt;

/// A commutative ring with unit, as used by traces and Pfaffians.
///
/// Arithmetic goes through named methods rather than operator traits so that
/// generic code never needs higher-ranked reference bounds.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether equality and zero tests are exact.
    const EXACT: bool;
    /// Whether every nonzero element is invertible.
    const FIELD: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `self / divisor` when the quotient exists in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    /// Larger is a better elimination pivot. Zero must score lowest.
    fn pivot_score(&self) -> f64;

    /// Equality up to the backend's notion of precision.
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        let mut acc = Self::zero();
        for x in items {
            acc.add_assign(x);
        }
        acc
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const FIELD: bool = true;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if *divisor == 0.0 {
            None
        } else {
            Some(self / divisor)
        }
    }
    fn pivot_score(&self) -> f64 {
        self.abs()
    }
    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-12 * (1.0 + self.abs().max(other.abs()))
    }
}
