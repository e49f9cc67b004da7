//! PBW normal-form arithmetic in the universal enveloping *-algebra of a
//! 2-step nilpotent Lie algebra.
//!
//! Elements are sparse maps from exponent pairs `(a, b)` to scalars, the
//! pair standing for the ordered monomial
//! `B_1^{a_1} ... B_beta^{a_beta} C_1^{b_1} ... C_gamma^{b_gamma}`.
//! By the PBW theorem these monomials are a basis, so structural equality of
//! normal forms decides equality in the algebra.
//!
//! Rewriting uses `B_k B_j = B_j B_k - [B_j, B_k]` for `k > j`; the bracket
//! is central, so every swap emits one correction term of strictly smaller
//! `B`-degree and the rewriting terminates.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::ToString;
use alloc::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::{same_algebra, AlgebraRef, TwoStepLieAlgebra};
use crate::multiindex::MultiIndex;
use crate::ring::Ring;
use crate::scalar::{gauss_re, GaussRational};
use crate::subset::Subset;
use crate::Result;

/// Exponent pair of a PBW monomial `B^a C^b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EnvMonomial {
    pub b: MultiIndex,
    pub c: MultiIndex,
}

impl EnvMonomial {
    pub fn unit(alg: &TwoStepLieAlgebra) -> Self {
        EnvMonomial {
            b: MultiIndex::zero(alg.beta()),
            c: MultiIndex::zero(alg.gamma()),
        }
    }

    pub fn degree(&self) -> u32 {
        self.b.total() + self.c.total()
    }
}

type TermMap = BTreeMap<EnvMonomial, GaussRational>;

/// Element of the universal enveloping *-algebra in PBW normal form.
///
/// Zero coefficients are never stored; operations on elements of different
/// algebras fail with [`Error::AlgebraMismatch`]. Values are immutable and
/// cheap to share.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvElement {
    alg: AlgebraRef,
    terms: TermMap,
}

fn add_to(map: &mut TermMap, key: EnvMonomial, val: GaussRational) {
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
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

/// Right-multiplies a normal form by the generator `B_j`.
///
/// `B^a C^b * B_j = B^{a+e_j} C^b + sum_{k>j, a_k>0} a_k [B_k, B_j] B^{a-e_k} C^b`.
fn right_mul_bgen(alg: &TwoStepLieAlgebra, terms: &TermMap, j: usize) -> TermMap {
    let mut out = TermMap::new();
    for (mono, coeff) in terms {
        add_to(
            &mut out,
            EnvMonomial { b: mono.b.bumped(j), c: mono.c.clone() },
            coeff.clone(),
        );
        for k in (j + 1)..alg.beta() {
            let ak = mono.b.get(k);
            if ak == 0 {
                continue;
            }
            for m in 0..alg.gamma() {
                let c_kj = alg.c(k, j, m);
                if c_kj.is_zero() {
                    continue;
                }
                let factor = gauss_re(c_kj * BigRational::from_integer(ak.into()));
                add_to(
                    &mut out,
                    EnvMonomial { b: mono.b.decremented(k), c: mono.c.bumped(m) },
                    coeff.clone() * factor,
                );
            }
        }
    }
    out
}

/// One factor of a raw (unordered) word.
#[derive(Debug, Clone, PartialEq)]
pub enum WordFactor {
    /// Generator `B_j`, 0-based.
    B(usize),
    /// Generator `C_m`, 0-based.
    C(usize),
    /// A scalar factor.
    Scalar(GaussRational),
}

impl EnvElement {
    pub fn zero(alg: &AlgebraRef) -> Self {
        EnvElement { alg: Arc::clone(alg), terms: TermMap::new() }
    }

    pub fn one(alg: &AlgebraRef) -> Self {
        Self::scalar(alg, GaussRational::one())
    }

    pub fn scalar(alg: &AlgebraRef, z: GaussRational) -> Self {
        let mut terms = TermMap::new();
        add_to(&mut terms, EnvMonomial::unit(alg), z);
        EnvElement { alg: Arc::clone(alg), terms }
    }

    pub fn b_gen(alg: &AlgebraRef, j: usize) -> Result<Self> {
        if j >= alg.beta() {
            return Err(Error::UnknownGenerator { name: gen_name('B', j) });
        }
        let mono = EnvMonomial {
            b: MultiIndex::unit(alg.beta(), j),
            c: MultiIndex::zero(alg.gamma()),
        };
        let mut terms = TermMap::new();
        terms.insert(mono, GaussRational::one());
        Ok(EnvElement { alg: Arc::clone(alg), terms })
    }

    pub fn c_gen(alg: &AlgebraRef, m: usize) -> Result<Self> {
        if m >= alg.gamma() {
            return Err(Error::UnknownGenerator { name: gen_name('C', m) });
        }
        let mono = EnvMonomial {
            b: MultiIndex::zero(alg.beta()),
            c: MultiIndex::unit(alg.gamma(), m),
        };
        let mut terms = TermMap::new();
        terms.insert(mono, GaussRational::one());
        Ok(EnvElement { alg: Arc::clone(alg), terms })
    }

    /// Single monomial `coeff * B^b C^c`.
    pub fn monomial(alg: &AlgebraRef, b: MultiIndex, c: MultiIndex, coeff: GaussRational) -> Self {
        debug_assert_eq!(b.arity(), alg.beta());
        debug_assert_eq!(c.arity(), alg.gamma());
        let mut terms = TermMap::new();
        add_to(&mut terms, EnvMonomial { b, c }, coeff);
        EnvElement { alg: Arc::clone(alg), terms }
    }

    /// `B_K^alpha`: the multiindex runs over the members of `k` ascending.
    pub fn b_monomial(alg: &AlgebraRef, k: &Subset, alpha: &MultiIndex) -> Self {
        debug_assert_eq!(alpha.arity(), k.len());
        let mut b = MultiIndex::zero(alg.beta());
        for (pos, &idx) in k.members().iter().enumerate() {
            for _ in 0..alpha.get(pos) {
                b = b.bumped(idx);
            }
        }
        Self::monomial(alg, b, MultiIndex::zero(alg.gamma()), GaussRational::one())
    }

    /// Canonical embedding of a Lie-algebra vector (coordinates over the
    /// basis `B_1..B_beta, C_1..C_gamma`). The image is antihermitian of
    /// degree at most one.
    pub fn from_lie_vector(alg: &AlgebraRef, v: &[BigRational]) -> Result<Self> {
        let n = alg.beta() + alg.gamma();
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
        let mut terms = TermMap::new();
        for (j, coord) in v.iter().enumerate() {
            if coord.is_zero() {
                continue;
            }
            let mono = if j < alg.beta() {
                EnvMonomial {
                    b: MultiIndex::unit(alg.beta(), j),
                    c: MultiIndex::zero(alg.gamma()),
                }
            } else {
                EnvMonomial {
                    b: MultiIndex::zero(alg.beta()),
                    c: MultiIndex::unit(alg.gamma(), j - alg.beta()),
                }
            };
            add_to(&mut terms, mono, gauss_re(coord.clone()));
        }
        Ok(EnvElement { alg: Arc::clone(alg), terms })
    }

    /// Normalizes a raw word of generators and scalars into PBW form.
    pub fn from_word(alg: &AlgebraRef, factors: &[WordFactor]) -> Result<Self> {
        let mut cur = TermMap::new();
        cur.insert(EnvMonomial::unit(alg), GaussRational::one());
        for f in factors {
            match f {
                WordFactor::B(j) => {
                    if *j >= alg.beta() {
                        return Err(Error::UnknownGenerator { name: gen_name('B', *j) });
                    }
                    cur = right_mul_bgen(alg, &cur, *j);
                }
                WordFactor::C(m) => {
                    if *m >= alg.gamma() {
                        return Err(Error::UnknownGenerator { name: gen_name('C', *m) });
                    }
                    cur = cur
                        .into_iter()
                        .map(|(mono, coeff)| {
                            (EnvMonomial { b: mono.b, c: mono.c.bumped(*m) }, coeff)
                        })
                        .collect();
                }
                WordFactor::Scalar(z) => {
                    if z.is_zero() {
                        cur.clear();
                    } else {
                        for coeff in cur.values_mut() {
                            *coeff = coeff.clone() * z.clone();
                        }
                    }
                }
            }
        }
        Ok(EnvElement { alg: Arc::clone(alg), terms: cur })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EnvMonomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &EnvMonomial) -> GaussRational {
        self.terms.get(mono).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(z)` iff the element is `z * 1`.
    pub fn as_scalar(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => {
                let (mono, coeff) = self.terms.iter().next().unwrap();
                (mono.degree() == 0).then(|| coeff.clone())
            }
            _ => None,
        }
    }

    /// Total degree (max over monomials of `|a| + |b|`); zero for 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(EnvMonomial::degree).max().unwrap_or(0)
    }

    /// Max `B`-degree over monomials.
    pub fn b_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.b.total()).max().unwrap_or(0)
    }

    /// Max count of `B`-factors with index outside `k`, per monomial.
    pub fn b_degree_outside(&self, k: &Subset) -> u32 {
        self.terms
            .keys()
            .map(|m| {
                (0..self.alg.beta())
                    .filter(|j| !k.contains(*j))
                    .map(|j| m.b.get(j))
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !same_algebra(&self.alg, &other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let mut terms = self.terms.clone();
        for (mono, coeff) in &other.terms {
            add_to(&mut terms, mono.clone(), coeff.clone());
        }
        Ok(EnvElement { alg: Arc::clone(&self.alg), terms })
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        EnvElement { alg: Arc::clone(&self.alg), terms }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn scale(&self, z: &GaussRational) -> Self {
        if z.is_zero() {
            return Self::zero(&self.alg);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone() * z.clone()))
            .collect();
        EnvElement { alg: Arc::clone(&self.alg), terms }
    }

    /// Associative, unital, bilinear product in PBW normal form.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !same_algebra(&self.alg, &other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = TermMap::new();
        for (mono2, coeff2) in &other.terms {
            let mut cur = self.terms.clone();
            for j in 0..self.alg.beta() {
                for _ in 0..mono2.b.get(j) {
                    cur = right_mul_bgen(&self.alg, &cur, j);
                }
            }
            for (mono, coeff) in cur {
                add_to(
                    &mut acc,
                    EnvMonomial { b: mono.b, c: mono.c.plus(&mono2.c) },
                    coeff * coeff2.clone(),
                );
            }
        }
        Ok(EnvElement { alg: Arc::clone(&self.alg), terms: acc })
    }

    /// The *-involution: antilinear, reverses products, `-1` on the image
    /// of the Lie algebra.
    pub fn star(&self) -> Self {
        let mut acc = TermMap::new();
        for (mono, coeff) in &self.terms {
            let mut base = coeff.conj();
            if mono.degree() % 2 == 1 {
                base = -base;
            }
            // Reversed B-word over the (commuting) C-part, renormalized.
            let mut cur = TermMap::new();
            cur.insert(EnvMonomial { b: MultiIndex::zero(self.alg.beta()), c: mono.c.clone() }, base);
            for j in (0..self.alg.beta()).rev() {
                for _ in 0..mono.b.get(j) {
                    cur = right_mul_bgen(&self.alg, &cur, j);
                }
            }
            for (m, c) in cur {
                add_to(&mut acc, m, c);
            }
        }
        EnvElement { alg: Arc::clone(&self.alg), terms: acc }
    }

    pub fn is_hermitian(&self) -> bool {
        self.star() == *self
    }

    pub fn is_antihermitian(&self) -> bool {
        self.star() == self.neg()
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// `(ad_self)^k (a)`: the k-fold iterated commutator.
    pub fn ad_pow(&self, a: &Self, k: u32) -> Result<Self> {
        let mut cur = a.clone();
        for _ in 0..k {
            cur = self.commutator(&cur)?;
        }
        Ok(cur)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.alg);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same algebra");
        }
        acc
    }
}

fn gen_name(kind: char, idx0: usize) -> alloc::string::String {
    let mut s = kind.to_string();
    s.push_str(&(idx0 + 1).to_string());
    s
}

impl core::ops::Add for &EnvElement {
    type Output = EnvElement;
    fn add(self, rhs: &EnvElement) -> EnvElement {
        self.checked_add(rhs).expect("algebra mismatch")
    }
}

impl core::ops::Sub for &EnvElement {
    type Output = EnvElement;
    fn sub(self, rhs: &EnvElement) -> EnvElement {
        self.checked_sub(rhs).expect("algebra mismatch")
    }
}

impl core::ops::Mul for &EnvElement {
    type Output = EnvElement;
    fn mul(self, rhs: &EnvElement) -> EnvElement {
        self.checked_mul(rhs).expect("algebra mismatch")
    }
}

impl core::ops::Neg for &EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        EnvElement::neg(self)
    }
}

/// Element of the commutative subalgebra generated by the center: a PBW
/// element with no `B`-factors.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterPoly(EnvElement);

impl CenterPoly {
    pub fn try_from_env(e: EnvElement) -> Result<Self> {
        if e.terms.keys().all(|m| m.b.is_zero()) {
            Ok(CenterPoly(e))
        } else {
            Err(Error::ConstructionBug(
                "element has B-factors, not a central polynomial".to_string(),
            ))
        }
    }

    pub fn zero(alg: &AlgebraRef) -> Self {
        CenterPoly(EnvElement::zero(alg))
    }

    pub fn one(alg: &AlgebraRef) -> Self {
        CenterPoly(EnvElement::one(alg))
    }

    pub fn scalar(alg: &AlgebraRef, z: GaussRational) -> Self {
        CenterPoly(EnvElement::scalar(alg, z))
    }

    pub fn c_gen(alg: &AlgebraRef, m: usize) -> Result<Self> {
        EnvElement::c_gen(alg, m).map(CenterPoly)
    }

    /// Linear combination of the `C_j` with the given coefficients.
    pub fn linear(alg: &AlgebraRef, coeffs: &[GaussRational]) -> Result<Self> {
        if coeffs.len() != alg.gamma() {
            return Err(Error::DimensionMismatch { expected: alg.gamma(), found: coeffs.len() });
        }
        let mut acc = EnvElement::zero(alg);
        for (m, z) in coeffs.iter().enumerate() {
            acc = acc.checked_add(&EnvElement::c_gen(alg, m)?.scale(z))?;
        }
        Ok(CenterPoly(acc))
    }

    pub fn as_env(&self) -> &EnvElement {
        &self.0
    }

    pub fn into_env(self) -> EnvElement {
        self.0
    }

    pub fn algebra(&self) -> &AlgebraRef {
        self.0.algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        CenterPoly(self.0.checked_add(&other.0).expect("algebra mismatch"))
    }

    pub fn neg(&self) -> Self {
        CenterPoly(self.0.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        CenterPoly(self.0.checked_mul(&other.0).expect("algebra mismatch"))
    }

    pub fn scale(&self, z: &GaussRational) -> Self {
        CenterPoly(self.0.scale(z))
    }

    pub fn pow(&self, k: u32) -> Self {
        CenterPoly(self.0.pow(k))
    }

    pub fn star(&self) -> Self {
        CenterPoly(self.0.star())
    }

    pub fn is_hermitian(&self) -> bool {
        self.0.is_hermitian()
    }

    /// Ring-morphism evaluation `C_j -> values[j]`.
    pub fn eval(&self, values: &[GaussRational]) -> Result<GaussRational> {
        if values.len() != self.algebra().gamma() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra().gamma(),
                found: values.len(),
            });
        }
        let mut acc = GaussRational::zero();
        for (mono, coeff) in &self.0.terms {
            let mut term = coeff.clone();
            for (m, v) in values.iter().enumerate() {
                for _ in 0..mono.c.get(m) {
                    term *= v.clone();
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exponents and coefficients over the `C`-monomial basis.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussRational)> {
        self.0.terms.iter().map(|(m, c)| (&m.c, c))
    }
}

/// Ring object for [`CenterPoly`] arithmetic (the entries of the Pfaffian
/// matrices live here).
#[derive(Debug, Clone)]
pub struct CenterRing {
    alg: AlgebraRef,
}

impl CenterRing {
    pub fn new(alg: &AlgebraRef) -> Self {
        CenterRing { alg: Arc::clone(alg) }
    }
}

impl Ring for CenterRing {
    type Elem = CenterPoly;

    fn zero(&self) -> CenterPoly {
        CenterPoly::zero(&self.alg)
    }
    fn one(&self) -> CenterPoly {
        CenterPoly::one(&self.alg)
    }
    fn add(&self, a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
        a.add(b)
    }
    fn neg(&self, a: &CenterPoly) -> CenterPoly {
        a.neg()
    }
    fn mul(&self, a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
        a.mul(b)
    }
    fn is_zero(&self, a: &CenterPoly) -> bool {
        a.is_zero()
    }
    fn scale_rat(&self, a: &CenterPoly, r: &BigRational) -> CenterPoly {
        a.scale(&gauss_re(r.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss_i, gauss_int, rat_int};

    fn h() -> AlgebraRef {
        TwoStepLieAlgebra::heisenberg()
    }

    fn f3() -> AlgebraRef {
        TwoStepLieAlgebra::free_three()
    }

    #[test]
    fn normalize_reorders_with_central_correction() {
        // Y*X = XY - Z on the Heisenberg algebra.
        let alg = h();
        let yx = EnvElement::from_word(&alg, &[WordFactor::B(1), WordFactor::B(0)]).unwrap();
        let xy = EnvElement::from_word(&alg, &[WordFactor::B(0), WordFactor::B(1)]).unwrap();
        let z = EnvElement::c_gen(&alg, 0).unwrap();
        assert_eq!(yx, &xy - &z);
    }

    #[test]
    fn central_generators_commute_in_words() {
        let alg = h();
        let cb = EnvElement::from_word(&alg, &[WordFactor::C(0), WordFactor::B(0)]).unwrap();
        let bc = EnvElement::from_word(&alg, &[WordFactor::B(0), WordFactor::C(0)]).unwrap();
        assert_eq!(cb, bc);
    }

    #[test]
    fn free_three_reordering() {
        // B3*B2 = B2*B3 - C1 from [B2, B3] = C1.
        let alg = f3();
        let lhs = EnvElement::from_word(&alg, &[WordFactor::B(2), WordFactor::B(1)]).unwrap();
        let b2b3 = EnvElement::from_word(&alg, &[WordFactor::B(1), WordFactor::B(2)]).unwrap();
        let c1 = EnvElement::c_gen(&alg, 0).unwrap();
        assert_eq!(lhs, &b2b3 - &c1);
    }

    #[test]
    fn unknown_generator_in_word() {
        let alg = h();
        let err = EnvElement::from_word(&alg, &[WordFactor::B(2)]).unwrap_err();
        assert_eq!(err, Error::UnknownGenerator { name: "B3".into() });
    }

    #[test]
    fn mul_examples() {
        let alg = h();
        let b1 = EnvElement::b_gen(&alg, 0).unwrap();
        let b2 = EnvElement::b_gen(&alg, 1).unwrap();
        let c1 = EnvElement::c_gen(&alg, 0).unwrap();
        let xy = EnvElement::from_word(&alg, &[WordFactor::B(0), WordFactor::B(1)]).unwrap();
        assert_eq!(b1.checked_mul(&b2).unwrap(), xy);
        assert_eq!(b2.checked_mul(&b1).unwrap(), &xy - &c1);
    }

    #[test]
    fn algebra_mismatch_is_reported() {
        let a = EnvElement::one(&h());
        let b = EnvElement::one(&f3());
        assert_eq!(a.checked_mul(&b), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn iota_examples() {
        let alg = h();
        let x = EnvElement::from_lie_vector(&alg, &[rat_int(1), rat_int(0), rat_int(0)]).unwrap();
        assert_eq!(x, EnvElement::b_gen(&alg, 0).unwrap());
        let zero =
            EnvElement::from_lie_vector(&alg, &[rat_int(0), rat_int(0), rat_int(0)]).unwrap();
        assert!(zero.is_zero());
        // Images of the Lie algebra are antihermitian.
        let mixed =
            EnvElement::from_lie_vector(&alg, &[rat_int(2), rat_int(-1), rat_int(3)]).unwrap();
        assert_eq!(mixed.star(), mixed.neg());
        assert!(EnvElement::from_lie_vector(&alg, &[rat_int(1)]).is_err());
    }

    #[test]
    fn star_examples() {
        let alg = h();
        let b1 = EnvElement::b_gen(&alg, 0).unwrap();
        assert_eq!(b1.star(), b1.neg());
        // (B1 B2)* = (-B2)(-B1) = B2 B1 = B1 B2 - C1
        let xy = &b1 * &EnvElement::b_gen(&alg, 1).unwrap();
        let c1 = EnvElement::c_gen(&alg, 0).unwrap();
        assert_eq!(xy.star(), &xy - &c1);
        // Involution and antimultiplicativity on a composite.
        let a = &xy + &c1.scale(&gauss_int(0, 2));
        assert_eq!(a.star().star(), a);
    }

    #[test]
    fn commutator_examples() {
        let alg = h();
        let b1 = EnvElement::b_gen(&alg, 0).unwrap();
        let b2 = EnvElement::b_gen(&alg, 1).unwrap();
        let c1 = EnvElement::c_gen(&alg, 0).unwrap();
        assert_eq!(b1.commutator(&b2).unwrap(), c1);
        // [X, Y^2] = 2 Y Z
        let y2 = b2.pow(2);
        let expect = b2.checked_mul(&c1).unwrap().scale(&gauss_int(2, 0));
        assert_eq!(b1.commutator(&y2).unwrap(), expect);
        assert!(b1.commutator(&b1).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_ladder() {
        let alg = h();
        let b1 = EnvElement::b_gen(&alg, 0).unwrap();
        let b2 = EnvElement::b_gen(&alg, 1).unwrap();
        let c1 = EnvElement::c_gen(&alg, 0).unwrap();
        for k in 0..=5u32 {
            let lhs = b1.ad_pow(&b2.pow(k), k).unwrap();
            let mut factorial = 1i64;
            for f in 2..=k as i64 {
                factorial *= f;
            }
            let rhs = c1.pow(k).scale(&gauss_int(factorial, 0));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn two_step_nilpotency_lifts() {
        let alg = f3();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    let bx = EnvElement::b_gen(&alg, x).unwrap();
                    let by = EnvElement::b_gen(&alg, y).unwrap();
                    let bz = EnvElement::b_gen(&alg, z).unwrap();
                    let inner = bx.commutator(&by).unwrap();
                    assert!(inner.commutator(&bz).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn center_poly_commutes_and_evaluates() {
        let alg = f3();
        let p = CenterPoly::c_gen(&alg, 0)
            .unwrap()
            .mul(&CenterPoly::c_gen(&alg, 1).unwrap())
            .add(&CenterPoly::scalar(&alg, gauss_i()));
        for j in 0..3 {
            let bj = EnvElement::b_gen(&alg, j).unwrap();
            assert!(p.as_env().commutator(&bj).unwrap().is_zero());
        }
        let vals = [gauss_int(2, 0), gauss_int(0, 1), gauss_int(5, 0)];
        // 2*i + i = 3i
        assert_eq!(p.eval(&vals).unwrap(), gauss_int(0, 3));
        let b = EnvElement::b_gen(&alg, 0).unwrap();
        assert!(CenterPoly::try_from_env(b).is_err());
    }

    #[test]
    fn pbw_orderings_agree() {
        // Normalizing a word equals multiplying the normal forms of any split.
        let alg = f3();
        let word = [
            WordFactor::B(2),
            WordFactor::B(0),
            WordFactor::C(1),
            WordFactor::B(1),
            WordFactor::B(2),
        ];
        let whole = EnvElement::from_word(&alg, &word).unwrap();
        for split in 0..=word.len() {
            let left = EnvElement::from_word(&alg, &word[..split]).unwrap();
            let right = EnvElement::from_word(&alg, &word[split..]).unwrap();
            assert_eq!(left.checked_mul(&right).unwrap(), whole);
        }
    }
}
