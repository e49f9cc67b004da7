//! Random algebraic data for property checks: rationals, elements, and
//! validated structure-constant tables. Everything is driven by a caller
//! supplied RNG so runs are reproducible from a seed.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::enveloping::{CenterPoly, EnvElement};
use crate::lie::{AlgebraRef, TwoStepLieAlgebra};
use crate::multiindex::MultiIndex;
use crate::scalar::{gauss, GaussRational};
use crate::weyl::WeylElement;

/// Rational with numerator in `-max..=max` and denominator in `1..=3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max: i64) -> BigRational {
    let num = rng.random_range(-max..=max);
    let den = rng.random_range(1..=3i64);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Nonzero rational.
pub fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R, max: i64) -> BigRational {
    loop {
        let r = random_rational(rng, max);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

pub fn random_gauss<R: Rng + ?Sized>(rng: &mut R, max: i64) -> GaussRational {
    gauss(random_rational(rng, max), random_rational(rng, max))
}

fn random_multiindex<R: Rng + ?Sized>(rng: &mut R, arity: usize, max_total: u32) -> MultiIndex {
    let mut m = MultiIndex::zero(arity);
    if arity == 0 {
        return m;
    }
    let total = rng.random_range(0..=max_total);
    for _ in 0..total {
        let pos = rng.random_range(0..arity);
        m = m.bumped(pos);
    }
    m
}

/// Random enveloping-algebra element with bounded `B`- and `C`-degrees.
pub fn random_env<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &AlgebraRef,
    max_b_degree: u32,
    max_c_degree: u32,
    max_terms: usize,
) -> EnvElement {
    let mut acc = EnvElement::zero(alg);
    let terms = rng.random_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let b = random_multiindex(rng, alg.beta(), max_b_degree);
        let c = random_multiindex(rng, alg.gamma(), max_c_degree);
        let coeff = random_gauss(rng, 4);
        acc = acc
            .checked_add(&EnvElement::monomial(alg, b, c, coeff))
            .expect("same algebra");
    }
    acc
}

/// Random nonzero enveloping element.
pub fn random_nonzero_env<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &AlgebraRef,
    max_b_degree: u32,
    max_c_degree: u32,
    max_terms: usize,
) -> EnvElement {
    loop {
        let e = random_env(rng, alg, max_b_degree, max_c_degree, max_terms);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Random central polynomial.
pub fn random_center<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &AlgebraRef,
    max_degree: u32,
    max_terms: usize,
) -> CenterPoly {
    CenterPoly::try_from_env(random_env(rng, alg, 0, max_degree, max_terms))
        .expect("no B-factors generated")
}

/// Random Weyl element with bounded total degree.
pub fn random_weyl<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    max_degree: u32,
    max_terms: usize,
) -> WeylElement {
    let mut acc = WeylElement::zero(d);
    let terms = rng.random_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let q = random_multiindex(rng, d, max_degree);
        let budget = max_degree.saturating_sub(q.total());
        let p = random_multiindex(rng, d, budget);
        let coeff = random_gauss(rng, 4);
        let mut term = WeylElement::scalar(d, coeff);
        for j in 0..d {
            for _ in 0..q.get(j) {
                term = term.checked_mul(&WeylElement::q_gen(d, j).unwrap()).unwrap();
            }
        }
        for j in 0..d {
            for _ in 0..p.get(j) {
                term = term.checked_mul(&WeylElement::p_gen(d, j).unwrap()).unwrap();
            }
        }
        acc = acc.checked_add(&term).expect("same dimension");
    }
    acc
}

/// Random antisymmetric rational matrix of the given (even or odd) size.
pub fn random_antisymmetric<R: Rng + ?Sized>(rng: &mut R, n: usize, max: i64) -> Vec<Vec<BigRational>> {
    let mut a = vec![vec![BigRational::from_integer(BigInt::from(0)); n]; n];
    for r in 0..n {
        for c in (r + 1)..n {
            let v = random_rational(rng, max);
            a[r][c] = v.clone();
            a[c][r] = -v;
        }
    }
    a
}

/// Random validated 2-step algebra with the exact dimensions requested.
///
/// An odd `beta` with `gamma = 1` is rejected up front: a single
/// antisymmetric form of odd size is always degenerate, so the declared
/// center could never exhaust the actual one. Everything else is
/// rejection-sampled; dense random tables almost always pass.
pub fn random_algebra<R: Rng + ?Sized>(
    rng: &mut R,
    beta: usize,
    gamma: usize,
) -> Arc<TwoStepLieAlgebra> {
    assert!(
        beta == 0 || gamma > 0,
        "beta > 0 needs central directions to bracket into"
    );
    assert!(
        beta.is_multiple_of(2) || gamma >= 2,
        "odd beta with gamma = 1 admits no valid table"
    );
    for _ in 0..500 {
        let mut table = vec![vec![vec![BigRational::from_integer(BigInt::from(0)); gamma]; beta]; beta];
        for j in 0..beta {
            for k in (j + 1)..beta {
                for m in 0..gamma {
                    let v = random_rational(rng, 2);
                    table[j][k][m] = v.clone();
                    table[k][j][m] = -v;
                }
            }
        }
        if let Ok(alg) = TwoStepLieAlgebra::validate(beta, gamma, table) {
            return alg;
        }
    }
    panic!("failed to sample a valid algebra with beta={beta}, gamma={gamma}")
}

/// A feasible random dimension pair for [`random_algebra`].
pub fn random_dims<R: Rng + ?Sized>(rng: &mut R, max_beta: usize, max_gamma: usize) -> (usize, usize) {
    loop {
        let beta = rng.random_range(2..=max_beta);
        let gamma = rng.random_range(1..=max_gamma);
        if beta % 2 == 0 || gamma >= 2 {
            return (beta, gamma);
        }
    }
}
