//! The end-to-end Heisenberg workflow: the standard filtered morphisms, the
//! minimal central polynomial of a morphism family, and membership in the
//! real ideals classified by a scalar set and a plane variety.
//!
//! Over the Heisenberg algebra (`[B_1, B_2] = C_1`) every real ideal is cut
//! out by morphisms of two shapes: `Phi_lambda` into `W_1` with
//! `B_1 -> iP`, `B_2 -> -i lambda Q`, `C_1 -> -i lambda` (so that
//! `i C_1 - lambda` generates the kernel), and scalar characters
//! `Psi_{xi,eta}` killing the center. An ideal description is a finite set
//! of nonzero `lambda`s together with a real plane variety for the
//! `Psi`-part.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enveloping::{CenterPoly, EnvElement};
use crate::error::Error;
use crate::lie::{same_algebra, TwoStepLieAlgebra};
use crate::linalg;
use crate::morphism::{in_vanishing_ideal, FilteredMorphism};
use crate::ring::Gaussians;
use crate::scalar::{expect_real, gauss_i, gauss_i_pow, gauss_im, gauss_re, GaussRational};
use crate::weyl::WeylElement;
use crate::Result;

/// `Phi_lambda` for `lambda != 0`: the Schroedinger-type morphism into `W_1`.
pub fn phi_lambda(lambda: &BigRational) -> Result<FilteredMorphism> {
    if lambda.is_zero() {
        return Err(Error::InvalidCharacter {
            reason: "Phi_lambda needs a nonzero lambda".to_string(),
        });
    }
    let h = TwoStepLieAlgebra::heisenberg();
    let p = WeylElement::p_gen(1, 0)?.scale(&gauss_i());
    let q = WeylElement::q_gen(1, 0)?.scale(&gauss_im(-lambda.clone()));
    let c = WeylElement::scalar(1, gauss_im(-lambda.clone()));
    FilteredMorphism::new(&h, 1, alloc::vec![p, q, c])
}

/// `Psi_{xi,eta}`: the scalar character `B_1 -> i xi`, `B_2 -> i eta`,
/// `C_1 -> 0` into `W_0`.
pub fn psi_point(xi: &BigRational, eta: &BigRational) -> FilteredMorphism {
    let h = TwoStepLieAlgebra::heisenberg();
    FilteredMorphism::new(
        &h,
        0,
        alloc::vec![
            WeylElement::scalar(0, gauss_im(xi.clone())),
            WeylElement::scalar(0, gauss_im(eta.clone())),
            WeylElement::zero(0),
        ],
    )
    .expect("scalar characters are always well-formed")
}

/// The minimal polynomial data of a morphism family over the Heisenberg
/// algebra: the central values, `mu = prod (iC_1 - lambda)` over all of
/// them, and `mu_x` over the nonzero ones.
#[derive(Debug, Clone)]
pub struct MuData {
    /// Sorted distinct values of `Phi(i C_1)`.
    pub lambda: Vec<BigRational>,
    pub mu: CenterPoly,
    pub mu_x: CenterPoly,
}

/// Reads off `Lambda`, `mu`, and `mu_x` from a finite morphism family; every
/// morphism must live over the Heisenberg algebra and send `C_1` to a scalar.
pub fn mu_from_morphisms(s: &[FilteredMorphism]) -> Result<MuData> {
    let h = TwoStepLieAlgebra::heisenberg();
    let mut lambda: Vec<BigRational> = Vec::new();
    for phi in s {
        if !same_algebra(phi.algebra(), &h) {
            return Err(Error::AlgebraMismatch);
        }
        let Some(c_img) = phi.c_image(0).as_scalar() else {
            return Err(Error::NonScalarCentralImage { index: 0 });
        };
        // value of Phi(i C_1)
        let val = expect_real(&(gauss_i() * c_img))?;
        if !lambda.contains(&val) {
            lambda.push(val);
        }
    }
    lambda.sort();
    let i_c1 = CenterPoly::c_gen(&h, 0)?.scale(&gauss_i());
    let factor = |l: &BigRational| -> CenterPoly {
        i_c1.add(&CenterPoly::scalar(&h, gauss_re(-l.clone())))
    };
    let mut mu = CenterPoly::one(&h);
    let mut mu_x = CenterPoly::one(&h);
    for l in &lambda {
        mu = mu.mul(&factor(l));
        if !l.is_zero() {
            mu_x = mu_x.mul(&factor(l));
        }
    }
    if !in_vanishing_ideal(s, mu.as_env()) {
        return Err(Error::ConstructionBug(
            "mu does not vanish under the family it was built from".to_string(),
        ));
    }
    Ok(MuData { lambda, mu, mu_x })
}

/// Bivariate commutative polynomial over the Gaussian rationals, used for
/// the quotient of the Heisenberg algebra by its center.
#[derive(Debug, Clone, PartialEq)]
pub struct CommPoly2 {
    terms: BTreeMap<(u32, u32), GaussRational>,
}

impl CommPoly2 {
    pub fn zero() -> Self {
        CommPoly2 { terms: BTreeMap::new() }
    }

    pub fn scalar(z: GaussRational) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), z);
        p
    }

    pub fn one() -> Self {
        Self::scalar(GaussRational::one())
    }

    pub fn x() -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0), GaussRational::one());
        p
    }

    pub fn y() -> Self {
        let mut p = Self::zero();
        p.add_term((0, 1), GaussRational::one());
        p
    }

    pub fn monomial(x_exp: u32, y_exp: u32, coeff: GaussRational) -> Self {
        let mut p = Self::zero();
        p.add_term((x_exp, y_exp), coeff);
        p
    }

    fn add_term(&mut self, key: (u32, u32), val: GaussRational) {
        if val.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(val);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + val;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &other.terms {
                out.add_term((x1 + x2, y1 + y2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(x, y)| x + y).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &GaussRational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for ((ex, ey), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..*ex {
                term *= gauss_re(x.clone());
            }
            for _ in 0..*ey {
                term *= gauss_re(y.clone());
            }
            acc += term;
        }
        acc
    }
}

/// The linear section of the quotient by the center: `X^m Y^n` goes to the
/// ordered monomial representative `B_1^m B_2^n`, coefficients untouched.
/// Not a *-morphism. Composing with [`reduce_mod_center`] twists each
/// monomial by `i^{m+n}`, since the reduction reads off the hermitian
/// coordinates.
pub fn pbw_section(p: &CommPoly2) -> EnvElement {
    let h = TwoStepLieAlgebra::heisenberg();
    let mut acc = EnvElement::zero(&h);
    for ((m, n), coeff) in p.terms() {
        let b1 = EnvElement::b_gen(&h, 0).expect("heisenberg has B1");
        let b2 = EnvElement::b_gen(&h, 1).expect("heisenberg has B2");
        let mono = b1
            .pow(m)
            .checked_mul(&b2.pow(n))
            .expect("same algebra")
            .scale(coeff);
        acc = acc.checked_add(&mono).expect("same algebra");
    }
    acc
}

/// Reduces a Heisenberg-algebra element modulo the *-ideal generated by the
/// center and substitutes the hermitian coordinates: the class of
/// `B_1^m B_2^n` becomes `i^{m+n} X^m Y^n`, so that evaluating the result
/// at `(xi, eta)` equals applying `Psi_{xi,eta}`.
pub fn reduce_mod_center(a: &EnvElement) -> Result<CommPoly2> {
    let h = TwoStepLieAlgebra::heisenberg();
    if !same_algebra(a.algebra(), &h) {
        return Err(Error::AlgebraMismatch);
    }
    let mut out = CommPoly2::zero();
    for (mono, coeff) in a.terms() {
        if mono.c.total() > 0 {
            continue;
        }
        let (m, n) = (mono.b.get(0), mono.b.get(1));
        out.add_term((m, n), coeff.clone() * gauss_i_pow(m + n));
    }
    Ok(out)
}

/// Is `target` in the ideal generated by `gens` inside the commutative
/// polynomial ring, with cofactor degrees bounded by `bound`? Sound for
/// membership; a miss proves nothing.
pub fn cpoly_in_ideal(target: &CommPoly2, gens: &[CommPoly2], bound: u32) -> bool {
    if target.is_zero() {
        return true;
    }
    // span of x^u y^v * g over all multipliers up to the bound
    let mut products: Vec<CommPoly2> = Vec::new();
    for g in gens {
        for ex in 0..=bound {
            for ey in 0..=(bound - ex) {
                let mut mult = CommPoly2::zero();
                mult.add_term((ex, ey), GaussRational::one());
                let p = mult.mul(g);
                if !p.is_zero() {
                    products.push(p);
                }
            }
        }
    }
    let mut basis: Vec<(u32, u32)> = Vec::new();
    for p in products.iter().chain(core::iter::once(target)) {
        for (k, _) in p.terms() {
            if !basis.contains(&k) {
                basis.push(k);
            }
        }
    }
    basis.sort_unstable();
    let vectorize = |p: &CommPoly2| -> Vec<GaussRational> {
        basis
            .iter()
            .map(|k| p.terms.get(k).cloned().unwrap_or_else(GaussRational::zero))
            .collect()
    };
    let vectors: Vec<Vec<GaussRational>> = products.iter().map(vectorize).collect();
    linalg::in_span(&Gaussians, &vectors, &vectorize(target))
}

/// The plane variety cutting out the `Psi`-part of a Heisenberg real ideal.
#[derive(Debug, Clone)]
pub enum Variety {
    /// A finite list of rational points; membership is fully decidable.
    Points(Vec<(BigRational, BigRational)>),
    /// The zero set of polynomial generators in the hermitian symbols
    /// `X, Y`. The caller must declare that the generators present a real
    /// ideal; only then does "vanishes on the zero set" reduce to ideal
    /// membership.
    ZeroSet { gens: Vec<CommPoly2>, declared_real: bool },
}

/// Description of a real ideal of the Heisenberg enveloping algebra:
/// the intersection of `ker Phi_lambda` over `lambda_x` and of
/// `ker Psi_{xi,eta}` over the variety.
#[derive(Debug, Clone)]
pub struct HeisenbergIdeal {
    lambda_x: Vec<BigRational>,
    variety: Variety,
}

impl HeisenbergIdeal {
    pub fn new(lambda_x: Vec<BigRational>, variety: Variety) -> Result<Self> {
        if lambda_x.iter().any(Zero::is_zero) {
            return Err(Error::InvalidCharacter {
                reason: "lambda values must be nonzero".to_string(),
            });
        }
        if let Variety::ZeroSet { gens, .. } = &variety {
            for g in gens {
                let hermitian = g
                    .terms
                    .values()
                    .all(|c| c.im.is_zero());
                if !hermitian {
                    return Err(Error::InvalidCharacter {
                        reason: "variety generators must have real coefficients".to_string(),
                    });
                }
            }
        }
        Ok(HeisenbergIdeal { lambda_x, variety })
    }

    pub fn lambda_x(&self) -> &[BigRational] {
        &self.lambda_x
    }

    pub fn variety(&self) -> &Variety {
        &self.variety
    }

    /// Membership of `a` in the described ideal.
    ///
    /// The `Phi`- and finite-point parts are exact. For a polynomial zero
    /// set the test reduces `a` modulo the center and asks the bounded
    /// commutative oracle; `bound` defaults to
    /// `2 + max generator degree + deg(a)`.
    pub fn membership(&self, a: &EnvElement, bound: Option<u32>) -> Result<bool> {
        for lambda in &self.lambda_x {
            if !phi_lambda(lambda)?.in_kernel(a) {
                return Ok(false);
            }
        }
        match &self.variety {
            Variety::Points(pts) => {
                for (xi, eta) in pts {
                    if !psi_point(xi, eta).in_kernel(a) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Variety::ZeroSet { gens, declared_real } => {
                if !declared_real {
                    return Err(Error::NotRealDeclared);
                }
                let reduced = reduce_mod_center(a)?;
                let max_gen_degree = gens.iter().map(CommPoly2::degree).max().unwrap_or(0);
                let bound = bound.unwrap_or(2 + max_gen_degree + reduced.degree());
                if cpoly_in_ideal(&reduced, gens, bound) {
                    Ok(true)
                } else {
                    Err(Error::Inconclusive {
                        context: alloc::format!(
                            "commutative membership undecided at multiplier bound {bound}"
                        ),
                    })
                }
            }
        }
    }
}
