//! Minimal ring/field abstraction.
//!
//! Elements do not know their ring (a polynomial cannot produce the unit of
//! its coefficient algebra out of thin air), so operations go through an
//! explicit ring object. Only what the Pfaffian recursion and exact linear
//! algebra need is modelled.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{gauss_re, GaussRational};

/// Commutative unital ring with a rational scaling action.
pub trait Ring {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Scaling by a rational; every ring here is a Q-algebra.
    fn scale_rat(&self, a: &Self::Elem, r: &BigRational) -> Self::Elem;
}

/// Ring with division by nonzero elements.
pub trait Field: Ring {
    /// `None` exactly on zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn scale_rat(&self, a: &BigRational, r: &BigRational) -> BigRational {
        a * r
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// The Gaussian rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gaussians;

impl Ring for Gaussians {
    type Elem = GaussRational;

    fn zero(&self) -> GaussRational {
        GaussRational::zero()
    }
    fn one(&self) -> GaussRational {
        GaussRational::one()
    }
    fn add(&self, a: &GaussRational, b: &GaussRational) -> GaussRational {
        a + b
    }
    fn neg(&self, a: &GaussRational) -> GaussRational {
        -a.clone()
    }
    fn mul(&self, a: &GaussRational, b: &GaussRational) -> GaussRational {
        a * b
    }
    fn is_zero(&self, a: &GaussRational) -> bool {
        a.is_zero()
    }
    fn scale_rat(&self, a: &GaussRational, r: &BigRational) -> GaussRational {
        a * gauss_re(r.clone())
    }
}

impl Field for Gaussians {
    fn inv(&self, a: &GaussRational) -> Option<GaussRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.inv())
        }
    }
}
