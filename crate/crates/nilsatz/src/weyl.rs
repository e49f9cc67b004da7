//! Normal-ordered arithmetic in the Weyl algebra `W_d`.
//!
//! Generators are the hermitian `P_1..P_d`, `Q_1..Q_d` with
//! `[P_k, Q_l] = -i delta_{k,l}` and all other generator pairs commuting.
//! Monomials are normal-ordered with positions left of momenta:
//! `Q^q P^p`. `W_0` is the scalars.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::ToString;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::multiindex::MultiIndex;
use crate::scalar::{gauss_im, GaussRational};
use crate::Result;

/// Exponent pair of a normal-ordered monomial `Q^q P^p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylMonomial {
    pub q: MultiIndex,
    pub p: MultiIndex,
}

impl WeylMonomial {
    pub fn unit(d: usize) -> Self {
        WeylMonomial { q: MultiIndex::zero(d), p: MultiIndex::zero(d) }
    }

    pub fn degree(&self) -> u32 {
        self.q.total() + self.p.total()
    }
}

type TermMap = BTreeMap<WeylMonomial, GaussRational>;

/// Element of `W_d` in normal order; no zero coefficients stored.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylElement {
    d: usize,
    terms: TermMap,
}

fn add_to(map: &mut TermMap, key: WeylMonomial, val: GaussRational) {
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

/// `Q^q P^p * Q_j = Q^{q+e_j} P^p - i p_j Q^q P^{p-e_j}`.
fn right_mul_q(terms: &TermMap, j: usize) -> TermMap {
    let mut out = TermMap::new();
    for (mono, coeff) in terms {
        add_to(
            &mut out,
            WeylMonomial { q: mono.q.bumped(j), p: mono.p.clone() },
            coeff.clone(),
        );
        let pj = mono.p.get(j);
        if pj > 0 {
            let factor = gauss_im(crate::scalar::rat_int(-(pj as i64)));
            add_to(
                &mut out,
                WeylMonomial { q: mono.q.clone(), p: mono.p.decremented(j) },
                coeff.clone() * factor,
            );
        }
    }
    out
}

fn right_mul_p(terms: &TermMap, j: usize) -> TermMap {
    let mut out = TermMap::new();
    for (mono, coeff) in terms {
        add_to(
            &mut out,
            WeylMonomial { q: mono.q.clone(), p: mono.p.bumped(j) },
            coeff.clone(),
        );
    }
    out
}

impl WeylElement {
    pub fn zero(d: usize) -> Self {
        WeylElement { d, terms: TermMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::scalar(d, GaussRational::one())
    }

    pub fn scalar(d: usize, z: GaussRational) -> Self {
        let mut terms = TermMap::new();
        add_to(&mut terms, WeylMonomial::unit(d), z);
        WeylElement { d, terms }
    }

    pub fn p_gen(d: usize, j: usize) -> Result<Self> {
        if j >= d {
            return Err(Error::UnknownGenerator { name: gen_name('P', j) });
        }
        let mono = WeylMonomial { q: MultiIndex::zero(d), p: MultiIndex::unit(d, j) };
        let mut terms = TermMap::new();
        terms.insert(mono, GaussRational::one());
        Ok(WeylElement { d, terms })
    }

    pub fn q_gen(d: usize, j: usize) -> Result<Self> {
        if j >= d {
            return Err(Error::UnknownGenerator { name: gen_name('Q', j) });
        }
        let mono = WeylMonomial { q: MultiIndex::unit(d, j), p: MultiIndex::zero(d) };
        let mut terms = TermMap::new();
        terms.insert(mono, GaussRational::one());
        Ok(WeylElement { d, terms })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &GaussRational)> {
        self.terms.iter()
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

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(WeylMonomial::degree).max().unwrap_or(0)
    }

    /// Every monomial has `|q| + |p| <= 1`, i.e. the element lies in the
    /// degree-one filtration space spanned by the unit and the generators.
    pub fn is_filtered_degree1(&self) -> bool {
        self.terms.keys().all(|m| m.degree() <= 1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: other.d });
        }
        let mut terms = self.terms.clone();
        for (mono, coeff) in &other.terms {
            add_to(&mut terms, mono.clone(), coeff.clone());
        }
        Ok(WeylElement { d: self.d, terms })
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        WeylElement { d: self.d, terms }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn scale(&self, z: &GaussRational) -> Self {
        if z.is_zero() {
            return Self::zero(self.d);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone() * z.clone()))
            .collect();
        WeylElement { d: self.d, terms }
    }

    /// Product with the rewriting `P_k Q_k = Q_k P_k - i`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: other.d });
        }
        let mut acc = TermMap::new();
        for (mono2, coeff2) in &other.terms {
            let mut cur = self.terms.clone();
            for j in 0..self.d {
                for _ in 0..mono2.q.get(j) {
                    cur = right_mul_q(&cur, j);
                }
            }
            for j in 0..self.d {
                for _ in 0..mono2.p.get(j) {
                    cur = right_mul_p(&cur, j);
                }
            }
            for (mono, coeff) in cur {
                add_to(&mut acc, mono, coeff * coeff2.clone());
            }
        }
        Ok(WeylElement { d: self.d, terms: acc })
    }

    /// The *-involution: `P`, `Q` are hermitian, so a monomial reverses to
    /// `P^p Q^q` (then renormalizes) with conjugated coefficient.
    pub fn star(&self) -> Self {
        let mut acc = TermMap::new();
        for (mono, coeff) in &self.terms {
            let mut cur = TermMap::new();
            cur.insert(WeylMonomial::unit(self.d), coeff.conj());
            for j in 0..self.d {
                for _ in 0..mono.p.get(j) {
                    cur = right_mul_p(&cur, j);
                }
            }
            for j in 0..self.d {
                for _ in 0..mono.q.get(j) {
                    cur = right_mul_q(&cur, j);
                }
            }
            for (m, c) in cur {
                add_to(&mut acc, m, c);
            }
        }
        WeylElement { d: self.d, terms: acc }
    }

    pub fn is_hermitian(&self) -> bool {
        self.star() == *self
    }

    pub fn is_antihermitian(&self) -> bool {
        self.star() == self.neg()
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same dimension");
        }
        acc
    }
}

fn gen_name(kind: char, idx0: usize) -> alloc::string::String {
    let mut s = kind.to_string();
    s.push_str(&(idx0 + 1).to_string());
    s
}

impl core::ops::Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.checked_add(rhs).expect("dimension mismatch")
    }
}

impl core::ops::Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.checked_sub(rhs).expect("dimension mismatch")
    }
}

impl core::ops::Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.checked_mul(rhs).expect("dimension mismatch")
    }
}

impl core::ops::Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement::neg(self)
    }
}
