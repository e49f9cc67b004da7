//! The coefficient field: complex numbers with exact rational real and
//! imaginary parts.
//!
//! `num_rational::BigRational` keeps denominators positive and fractions in
//! lowest terms, so every scalar has a unique representation and equality is
//! structural.

use alloc::string::String;
use core::format_args;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Exact complex scalar `a + b*i` with `a, b` rational.
pub type GaussRational = Complex<BigRational>;

/// Rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(num))
}

/// Scalar with the given rational real and imaginary parts.
pub fn gauss(re: BigRational, im: BigRational) -> GaussRational {
    Complex::new(re, im)
}

/// Purely real scalar.
pub fn gauss_re(re: BigRational) -> GaussRational {
    Complex::new(re, BigRational::zero())
}

/// Purely imaginary scalar `im * i`.
pub fn gauss_im(im: BigRational) -> GaussRational {
    Complex::new(BigRational::zero(), im)
}

/// Scalar from a pair of integers: `re + im*i`.
pub fn gauss_int(re: i64, im: i64) -> GaussRational {
    Complex::new(rat_int(re), rat_int(im))
}

/// The imaginary unit.
pub fn gauss_i() -> GaussRational {
    Complex::new(BigRational::zero(), BigRational::one())
}

/// `i^k` for `k >= 0`.
pub fn gauss_i_pow(k: u32) -> GaussRational {
    match k % 4 {
        0 => GaussRational::one(),
        1 => gauss_i(),
        2 => -GaussRational::one(),
        _ => -gauss_i(),
    }
}

/// Multiplicative inverse; fails on zero instead of panicking.
pub fn checked_inv(z: &GaussRational) -> Result<GaussRational> {
    if z.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(z.inv())
    }
}

/// The real part, provided the imaginary part vanishes.
///
/// Used where hermiticity guarantees a real value and the code wants to work
/// with plain rationals afterwards.
pub fn expect_real(z: &GaussRational) -> Result<BigRational> {
    if z.im.is_zero() {
        Ok(z.re.clone())
    } else {
        Err(Error::ConstructionBug(String::from(
            "expected a real scalar but the imaginary part is nonzero",
        )))
    }
}

/// Renders `z` the way the expression grammar reads it back.
///
/// Pure real: `-3/2`; pure imaginary: `i`, `-i`, `3/4*i`; mixed parts are
/// parenthesized: `(1/2-3/4*i)`.
pub fn format_gauss(z: &GaussRational) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    if z.is_zero() {
        out.push('0');
    } else if z.im.is_zero() {
        let _ = out.write_fmt(format_args!("{}", z.re));
    } else if z.re.is_zero() {
        write_im(&mut out, &z.im);
    } else {
        out.push('(');
        let _ = out.write_fmt(format_args!("{}", z.re));
        if z.im.is_positive() {
            out.push('+');
        }
        write_im(&mut out, &z.im);
        out.push(')');
    }
    out
}

fn write_im(out: &mut String, im: &BigRational) {
    use core::fmt::Write;
    if im.is_one() {
        out.push('i');
    } else if (-im.clone()).is_one() {
        out.push_str("-i");
    } else {
        let _ = out.write_fmt(format_args!("{}*i", im));
    }
}
