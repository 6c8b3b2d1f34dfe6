//! Scalar fields used throughout the crate: exact rationals and exact
//! Gaussian rationals (rationals adjoined a square root of -1).

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Exact Gaussian rational scalar `re + im*i`.
pub type Gauss = Complex<Rat>;

/// Everything the jet and linear-algebra kernels need from a coefficient
/// field. Implemented by [`Rat`] and [`Gauss`].
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rat {}
impl Field for Gauss {}

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Gaussian rational from integer real and imaginary parts.
pub fn gauss(re: i64, im: i64) -> Gauss {
    Complex::new(rat(re), rat(im))
}

/// The imaginary unit.
pub fn sqrt_minus_one() -> Gauss {
    Complex::new(Rat::zero(), Rat::one())
}

/// Wire form of a rational: always `numerator/denominator`.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
