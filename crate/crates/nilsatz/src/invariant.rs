//! Invariant elements, dual elements, and the expansion of arbitrary
//! enveloping-algebra elements over the invariant subalgebra.
//!
//! For an even subset `K` of the non-central basis indices:
//!
//! * `E_{K,m} = sign_K(m) sum_{k in K u {m}} Pf^k(K u {m}) B_k` for `m` not
//!   in `K` — these commute with every `B_k`, `k in K`, and their remaining
//!   commutators are Pfaffians of strictly larger even subsets;
//! * `D_{K,l} = sign_K(l) sum_{k in K \ {l}} Pf^k(K \ {l}) B_k` for `l in K`
//!   — with `[D_{K,l}, B_{l'}] = i delta_{l,l'} Pf(K)`, so iterated
//!   commutators with the duals peel `B_K`-powers off an element.
//!
//! `expand_over_invariants` rewrites `Pf(K)^r a` as `sum_alpha p_alpha
//! B_K^alpha` with every `p_alpha` a polynomial in the `E_{K,m}` and `C_j`.
//! The certificate keeps each coefficient both as that abstract polynomial
//! (the membership witness) and as its evaluated normal form. The abstract
//! polynomials are stored commutatively; evaluation multiplies generators
//! in a fixed ascending order, and the expansion only ever creates products
//! in that same order, so evaluation is faithful.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enveloping::{CenterPoly, EnvElement};
use crate::error::Error;
use crate::lie::AlgebraRef;
use crate::multiindex::MultiIndex;
use crate::pfaffian::{pf_lower, pf_set, pf_upper};
use crate::report::CheckReport;
use crate::scalar::{checked_inv, gauss_i, gauss_i_pow, gauss_re, GaussRational};
use crate::subset::Subset;
use crate::Result;

/// `E_{K,m}` for `m` outside the even subset `K`; antihermitian, linear in
/// the `B`'s with central coefficients. `E_{empty,m} = B_m`.
pub fn invariant_elem(alg: &AlgebraRef, k: &Subset, m: usize) -> Result<EnvElement> {
    k.expect_even()?;
    if k.contains(m) {
        return Err(Error::IndexInSet { index: m });
    }
    let k_ext = k.with(m);
    let mut acc = EnvElement::zero(alg);
    for &idx in k_ext.members() {
        let pf = pf_upper(alg, &k_ext, idx)?;
        let term = pf.as_env().checked_mul(&EnvElement::b_gen(alg, idx)?)?;
        acc = acc.checked_add(&term)?;
    }
    if k.sign_at(m) < 0 {
        acc = acc.neg();
    }
    Ok(acc)
}

/// `D_{K,l}` for `l` in the even subset `K`; antihermitian.
pub fn dual_elem(alg: &AlgebraRef, k: &Subset, l: usize) -> Result<EnvElement> {
    k.expect_even()?;
    if !k.contains(l) {
        return Err(Error::IndexNotInSet { index: l });
    }
    let k_red = k.without(l);
    let mut acc = EnvElement::zero(alg);
    for &idx in k_red.members() {
        let pf = pf_upper(alg, &k_red, idx)?;
        let term = pf.as_env().checked_mul(&EnvElement::b_gen(alg, idx)?)?;
        acc = acc.checked_add(&term)?;
    }
    if k.sign_at(l) < 0 {
        acc = acc.neg();
    }
    Ok(acc)
}

/// All invariant and dual elements attached to one even subset, computed
/// once. For `K` empty the invariants are the generators themselves and
/// there are no duals.
#[derive(Debug, Clone)]
pub struct InvariantFrame {
    alg: AlgebraRef,
    k: Subset,
    /// `m -> E_{K,m}` for `m` outside `K`.
    invariants: BTreeMap<usize, EnvElement>,
    /// `l -> D_{K,l}` for `l` in `K`.
    duals: BTreeMap<usize, EnvElement>,
}

impl InvariantFrame {
    pub fn new(alg: &AlgebraRef, k: &Subset) -> Result<Self> {
        k.expect_even()?;
        let mut invariants = BTreeMap::new();
        for &m in &k.complement(alg.beta()) {
            invariants.insert(m, invariant_elem(alg, k, m)?);
        }
        let mut duals = BTreeMap::new();
        for &l in k.members() {
            duals.insert(l, dual_elem(alg, k, l)?);
        }
        Ok(InvariantFrame { alg: Arc::clone(alg), k: k.clone(), invariants, duals })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn subset(&self) -> &Subset {
        &self.k
    }

    pub fn invariant(&self, m: usize) -> Option<&EnvElement> {
        self.invariants.get(&m)
    }

    pub fn dual(&self, l: usize) -> Option<&EnvElement> {
        self.duals.get(&l)
    }

    pub fn invariants(&self) -> impl Iterator<Item = (usize, &EnvElement)> {
        self.invariants.iter().map(|(&m, e)| (m, e))
    }

    pub fn duals(&self) -> impl Iterator<Item = (usize, &EnvElement)> {
        self.duals.iter().map(|(&l, d)| (l, d))
    }
}

/// Applies the iterated inner derivations with the dual elements:
/// `(ad_{D,1})^{a_1} ... (ad_{D,2d})^{a_{2d}}` (they commute, since the
/// pairwise commutators of the duals are central).
pub fn ad_dual(alg: &AlgebraRef, k: &Subset, alpha: &MultiIndex, a: &EnvElement) -> Result<EnvElement> {
    k.expect_even()?;
    if alpha.arity() != k.len() {
        return Err(Error::DimensionMismatch { expected: k.len(), found: alpha.arity() });
    }
    let mut cur = a.clone();
    for (pos, &idx) in k.members().iter().enumerate().rev() {
        let reps = alpha.get(pos);
        if reps == 0 {
            continue;
        }
        let dual = dual_elem(alg, k, idx)?;
        for _ in 0..reps {
            cur = dual.commutator(&cur)?;
        }
    }
    Ok(cur)
}

/// Monomial of an abstract invariant polynomial: exponents over the
/// `E_{K,m}` symbols (positions follow the complement of `K`, ascending)
/// and over the `C_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct InvMonomial {
    e: MultiIndex,
    c: MultiIndex,
}

/// Polynomial in the free commuting symbols `{E_{K,m}} u {C_j}` with
/// Gaussian-rational coefficients: the constructive witness that an
/// expansion coefficient lies in the invariant subalgebra.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantPoly {
    alg: AlgebraRef,
    k: Subset,
    terms: BTreeMap<InvMonomial, GaussRational>,
}

impl InvariantPoly {
    fn arity_e(alg: &AlgebraRef, k: &Subset) -> usize {
        alg.beta() - k.len()
    }

    pub fn zero(alg: &AlgebraRef, k: &Subset) -> Self {
        InvariantPoly { alg: Arc::clone(alg), k: k.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(alg: &AlgebraRef, k: &Subset, z: GaussRational) -> Self {
        let mut p = Self::zero(alg, k);
        if !z.is_zero() {
            p.terms.insert(
                InvMonomial {
                    e: MultiIndex::zero(Self::arity_e(alg, k)),
                    c: MultiIndex::zero(alg.gamma()),
                },
                z,
            );
        }
        p
    }

    pub fn one(alg: &AlgebraRef, k: &Subset) -> Self {
        Self::scalar(alg, k, GaussRational::one())
    }

    /// The symbol `E_{K,m}`; `m` is an original basis index outside `K`.
    pub fn e_symbol(alg: &AlgebraRef, k: &Subset, m: usize) -> Result<Self> {
        let comp = k.complement(alg.beta());
        let pos = comp
            .iter()
            .position(|&c| c == m)
            .ok_or(Error::IndexInSet { index: m })?;
        let mut p = Self::zero(alg, k);
        p.terms.insert(
            InvMonomial {
                e: MultiIndex::unit(comp.len(), pos),
                c: MultiIndex::zero(alg.gamma()),
            },
            GaussRational::one(),
        );
        Ok(p)
    }

    /// Embeds a central polynomial as a polynomial in the `C_j` symbols.
    pub fn from_center(k: &Subset, p: &CenterPoly) -> Self {
        let alg = p.algebra();
        let mut out = Self::zero(alg, k);
        for (c, coeff) in p.terms() {
            out.terms.insert(
                InvMonomial { e: MultiIndex::zero(Self::arity_e(alg, k)), c: c.clone() },
                coeff.clone(),
            );
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: InvMonomial, coeff: GaussRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
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
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, z: &GaussRational) -> Self {
        if z.is_zero() {
            return Self::zero(&self.alg, &self.k);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * z.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.alg, &self.k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(
                    InvMonomial { e: m1.e.plus(&m2.e), c: m1.c.plus(&m2.c) },
                    c1.clone() * c2.clone(),
                );
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.alg, &self.k);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates the witness back into the enveloping algebra, multiplying
    /// generator powers in ascending symbol order.
    pub fn eval(&self) -> Result<EnvElement> {
        let comp = self.k.complement(self.alg.beta());
        let mut cache: BTreeMap<usize, EnvElement> = BTreeMap::new();
        let mut acc = EnvElement::zero(&self.alg);
        for (mono, coeff) in &self.terms {
            let mut term = EnvElement::scalar(&self.alg, coeff.clone());
            for (pos, &m) in comp.iter().enumerate() {
                let reps = mono.e.get(pos);
                if reps == 0 {
                    continue;
                }
                let e_elem = match cache.entry(m) {
                    Entry::Occupied(o) => o.into_mut(),
                    Entry::Vacant(v) => v.insert(invariant_elem(&self.alg, &self.k, m)?),
                };
                for _ in 0..reps {
                    term = term.checked_mul(e_elem)?;
                }
            }
            for j in 0..self.alg.gamma() {
                for _ in 0..mono.c.get(j) {
                    term = term.checked_mul(&EnvElement::c_gen(&self.alg, j)?)?;
                }
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Expression string in the `E<m>` / `C<j>` symbols (1-based), matching
    /// the shared grammar.
    pub fn to_expr_string(&self) -> String {
        let comp = self.k.complement(self.alg.beta());
        let mut parts: Vec<(String, GaussRational)> = Vec::new();
        for (mono, coeff) in self.terms.iter().rev() {
            let mut body = String::new();
            for (pos, &m) in comp.iter().enumerate() {
                crate::expr::push_power(&mut body, 'E', m, mono.e.get(pos));
            }
            for j in 0..self.alg.gamma() {
                crate::expr::push_power(&mut body, 'C', j, mono.c.get(j));
            }
            parts.push((body, coeff.clone()));
        }
        crate::expr::format_terms(&parts)
    }
}

/// One expansion coefficient: the abstract witness and its normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct CertCoeff {
    pub witness: InvariantPoly,
    pub value: EnvElement,
}

/// Certificate for `Pf(K)^r a = sum_{|alpha| <= s} p_alpha B_K^alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionCert {
    pub k: Subset,
    pub r: u32,
    pub s: u32,
    pub coeffs: BTreeMap<MultiIndex, CertCoeff>,
}

impl ExpansionCert {
    /// Re-checks the reconstruction identity and that every abstract
    /// witness re-evaluates to its stored normal form.
    pub fn verify(&self, a: &EnvElement) -> bool {
        let alg = a.algebra();
        let Ok(pfk) = pf_set(alg, &self.k) else {
            return false;
        };
        let Ok(lhs) = pfk.pow(self.r).as_env().checked_mul(a) else {
            return false;
        };
        let mut rhs = EnvElement::zero(alg);
        for (alpha, cc) in &self.coeffs {
            if alpha.total() > self.s {
                return false;
            }
            match cc.witness.eval() {
                Ok(ev) if ev == cc.value => {}
                _ => return false,
            }
            let mono = EnvElement::b_monomial(alg, &self.k, alpha);
            let Ok(term) = cc.value.checked_mul(&mono) else {
                return false;
            };
            rhs = match rhs.checked_add(&term) {
                Ok(r) => r,
                Err(_) => return false,
            };
        }
        lhs == rhs
    }
}

/// Working state of the expansion: `sum_alpha p_alpha (x) B_K^alpha` with
/// abstract invariant-polynomial coefficients.
struct KExpansion {
    alg: AlgebraRef,
    k: Subset,
    terms: BTreeMap<MultiIndex, InvariantPoly>,
}

impl KExpansion {
    fn zero(alg: &AlgebraRef, k: &Subset) -> Self {
        KExpansion { alg: Arc::clone(alg), k: k.clone(), terms: BTreeMap::new() }
    }

    fn from_poly(alg: &AlgebraRef, k: &Subset, p: InvariantPoly) -> Self {
        let mut out = Self::zero(alg, k);
        out.add_term(MultiIndex::zero(k.len()), p);
        out
    }

    fn add_term(&mut self, alpha: MultiIndex, p: InvariantPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn merge(&mut self, other: KExpansion) {
        for (alpha, p) in other.terms {
            self.add_term(alpha, p);
        }
    }

    fn scale_coeffs(&self, p: &InvariantPoly) -> Self {
        let mut out = Self::zero(&self.alg, &self.k);
        for (alpha, q) in &self.terms {
            out.add_term(alpha.clone(), q.mul(p));
        }
        out
    }

    /// Right-multiplication by the in-`K` generator at `pos`; in-`K`
    /// brackets are central, so corrections stay abstract `C`-polynomials.
    fn right_mul_letter(&self, pos: usize) -> Result<Self> {
        let members = self.k.members();
        let j = members[pos];
        let mut out = Self::zero(&self.alg, &self.k);
        for (alpha, p) in &self.terms {
            out.add_term(alpha.bumped(pos), p.clone());
            for (pos2, &k2) in members.iter().enumerate().skip(pos + 1) {
                let a2 = alpha.get(pos2);
                if a2 == 0 {
                    continue;
                }
                // [B_{k2}, B_j] as an abstract C-polynomial
                let coeffs: Vec<GaussRational> = (0..self.alg.gamma())
                    .map(|m| gauss_re(self.alg.c(k2, j, m).clone()))
                    .collect();
                let bracket = CenterPoly::linear(&self.alg, &coeffs)?;
                let factor = InvariantPoly::from_center(&self.k, &bracket)
                    .scale(&gauss_re(BigRational::from_integer(a2.into())));
                out.add_term(alpha.decremented(pos2), p.mul(&factor));
            }
        }
        Ok(out)
    }

    /// Right-multiplication by another expansion. Its coefficients commute
    /// with `B_K` powers, so they move left freely.
    fn right_mul(&self, other: &KExpansion) -> Result<Self> {
        let mut out = Self::zero(&self.alg, &self.k);
        for (alpha2, p2) in &other.terms {
            let mut cur = self.scale_coeffs(p2);
            for pos in 0..self.k.len() {
                for _ in 0..alpha2.get(pos) {
                    cur = cur.right_mul_letter(pos)?;
                }
            }
            out.merge(cur);
        }
        Ok(out)
    }
}

/// Expands `a` over the invariant subalgebra of `K`:
/// `Pf(K)^r a = sum_{|alpha| <= s} p_alpha B_K^alpha` with `r` the maximal
/// number of out-of-`K` `B`-factors in any PBW monomial of `a` (and `r = 0`
/// for `K` empty, where `Pf = 1`).
///
/// Each out-of-`K` letter `B_m` is traded against one central factor
/// `Pf(K)` through `Pf(K) B_m = E_{K,m} - sign_K(m) sum_{k in K}
/// Pf^k(K u {m}) B_k`.
pub fn expand_over_invariants(k: &Subset, a: &EnvElement) -> Result<ExpansionCert> {
    k.expect_even()?;
    let alg = a.algebra();
    let comp = k.complement(alg.beta());
    let r = if k.is_empty() { 0 } else { a.b_degree_outside(k) };

    let pfk_abs = InvariantPoly::from_center(k, &pf_set(alg, k)?);

    // Substitution for each out-of-K letter.
    let mut letters: BTreeMap<usize, KExpansion> = BTreeMap::new();
    for &m in &comp {
        let mut sub = KExpansion::zero(alg, k);
        sub.add_term(MultiIndex::zero(k.len()), InvariantPoly::e_symbol(alg, k, m)?);
        let k_ext = k.with(m);
        for (pos, &kk) in k.members().iter().enumerate() {
            let pf = pf_upper(alg, &k_ext, kk)?;
            let mut p = InvariantPoly::from_center(k, &pf);
            if k.sign_at(m) > 0 {
                p = p.neg();
            }
            sub.add_term(MultiIndex::unit(k.len(), pos), p);
        }
        letters.insert(m, sub);
    }

    let mut total = KExpansion::zero(alg, k);
    for (mono, coeff) in a.terms() {
        let out_degree: u32 = comp.iter().map(|&m| mono.b.get(m)).sum();
        let pf_power = if k.is_empty() { 0 } else { r - out_degree };
        let mut lead = InvariantPoly::scalar(alg, k, coeff.clone()).mul(&pfk_abs.pow(pf_power));
        // carry the (central) C-part of the monomial
        for j in 0..alg.gamma() {
            for _ in 0..mono.c.get(j) {
                let c = InvariantPoly::from_center(k, &CenterPoly::c_gen(alg, j)?);
                lead = lead.mul(&c);
            }
        }
        let mut cur = KExpansion::from_poly(alg, k, lead);
        for j in 0..alg.beta() {
            for _ in 0..mono.b.get(j) {
                cur = match k.position(j) {
                    Some(pos) => cur.right_mul_letter(pos)?,
                    None => cur.right_mul(&letters[&j])?,
                };
            }
        }
        total.merge(cur);
    }

    let s = total.terms.keys().map(MultiIndex::total).max().unwrap_or(0);
    let mut coeffs = BTreeMap::new();
    for (alpha, witness) in total.terms {
        let value = witness.eval()?;
        coeffs.insert(alpha, CertCoeff { witness, value });
    }
    Ok(ExpansionCert { k: k.clone(), r, s, coeffs })
}

/// Expansion of an ideal element with coefficients in the ideal.
///
/// `member` must soundly decide membership in a two-sided ideal containing
/// `a`. The coefficients are recovered top degree first by applying the dual
/// derivations to `Pf(K)^{r'} a`, subtracting the already-known higher terms
/// and clearing the scalar prefactor `i^{|alpha|} alpha!`; each recovered
/// coefficient is checked against `member` before it is returned, so a
/// failure reports an unsound predicate.
pub fn extract_ideal_coeffs<F>(k: &Subset, a: &EnvElement, member: F) -> Result<ExpansionCert>
where
    F: Fn(&EnvElement) -> bool,
{
    k.expect_even()?;
    let alg = a.algebra();
    if a.is_zero() {
        return Ok(ExpansionCert { k: k.clone(), r: 0, s: 0, coeffs: BTreeMap::new() });
    }
    let exp = expand_over_invariants(k, a)?;
    let s = exp.s;
    let pfk = pf_set(alg, k)?;
    let pfk_abs = InvariantPoly::from_center(k, &pfk);
    let base = pfk.pow(exp.r).as_env().checked_mul(a)?;

    let mut order: Vec<MultiIndex> = exp.coeffs.keys().cloned().collect();
    order.sort_by(|x, y| y.total().cmp(&x.total()).then_with(|| x.cmp(y)));

    let mut coeffs: BTreeMap<MultiIndex, CertCoeff> = BTreeMap::new();
    for alpha_p in order {
        let t = alpha_p.total();
        let ad = ad_dual(alg, k, &alpha_p, &base)?;
        let mut resid = pfk.pow(s - t).as_env().checked_mul(&ad)?;
        for (alpha, cc) in &coeffs {
            let Some(diff) = alpha.minus(&alpha_p) else {
                continue;
            };
            let ff = alpha
                .falling_factorial(&alpha_p)
                .expect("alpha_p <= alpha by construction");
            let scalar = gauss_i_pow(t) * gauss_re(BigRational::from_integer(ff));
            let term = cc
                .value
                .checked_mul(&EnvElement::b_monomial(alg, k, &diff))?
                .scale(&scalar);
            resid = resid.checked_sub(&term)?;
        }
        let prefactor = gauss_i_pow(t) * gauss_re(BigRational::from_integer(alpha_p.factorial()));
        let value = resid.scale(&checked_inv(&prefactor)?);
        if !member(&value) {
            return Err(Error::MembershipViolated { alpha: alpha_p.entries().to_vec() });
        }
        debug_assert_eq!(
            value,
            pfk.pow(s)
                .as_env()
                .checked_mul(&exp.coeffs[&alpha_p].value)
                .unwrap()
        );
        let witness = exp.coeffs[&alpha_p].witness.mul(&pfk_abs.pow(s));
        coeffs.insert(alpha_p, CertCoeff { witness, value });
    }
    Ok(ExpansionCert { k: k.clone(), r: exp.r + s, s, coeffs })
}

/// Exhaustively verifies the three commutator identity families for `K`:
///
/// * `[E_{K,m}, B_h] = -i sign_K(m) Pf_h(K u {m})`,
/// * `[E_{K,m}, D_{K,l}] = 0`,
/// * `[D_{K,l}, B_{l'}] = i delta_{l,l'} Pf(K)`.
pub fn check_commutator_identities(alg: &AlgebraRef, k: &Subset) -> Result<CheckReport> {
    k.expect_even()?;
    let mut report = CheckReport::new();
    let comp = k.complement(alg.beta());
    for &m in &comp {
        let e = invariant_elem(alg, k, m)?;
        let k_ext = k.with(m);
        for h in 0..alg.beta() {
            let lhs = e.commutator(&EnvElement::b_gen(alg, h)?)?;
            let mut rhs = pf_lower(alg, &k_ext, h)?.into_env().scale(&-gauss_i());
            if k.sign_at(m) < 0 {
                rhs = rhs.neg();
            }
            report.push(
                alloc::format!("[E_{{{k},{}}},B{}] on K={k}", m + 1, h + 1),
                lhs == rhs,
            );
        }
        for &l in k.members() {
            let d = dual_elem(alg, k, l)?;
            let lhs = e.commutator(&d)?;
            report.push(
                alloc::format!("[E_{{{k},{}}},D_{{{k},{}}}] = 0", m + 1, l + 1),
                lhs.is_zero(),
            );
        }
    }
    let pfk = pf_set(alg, k)?;
    for &l in k.members() {
        let d = dual_elem(alg, k, l)?;
        for &l2 in k.members() {
            let lhs = d.commutator(&EnvElement::b_gen(alg, l2)?)?;
            let rhs = if l == l2 {
                pfk.as_env().scale(&gauss_i())
            } else {
                EnvElement::zero(alg)
            };
            report.push(
                alloc::format!("[D_{{{k},{}}},B{}] on K={k}", l + 1, l2 + 1),
                lhs == rhs,
            );
        }
    }
    Ok(report)
}
