//! Pfaffian calculus over the central subalgebra.
//!
//! `Pf(X_1,..,X_{2d}) = pf((i [X_k, X_l])_{k,l})` takes values in the
//! commutative algebra generated by the center; the factor `i` makes the
//! entries (and hence the Pfaffian) hermitian. For an even index subset `K`
//! of the non-central basis, `pf_set` evaluates this on `(B_k)_{k in K}`,
//! and `pf_upper` / `pf_lower` are the signed variants driving the expansion
//! identities:
//!
//! * `Pf^k(K') = sign_{K'}(k) Pf(K' \ {k})` for `k in K'`, `|K'|` odd,
//! * `Pf_h(K') = 0` if `h in K'`, else `-sign_{K'}(h) Pf(K' u {h})`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::enveloping::{CenterPoly, CenterRing, EnvElement};
use crate::error::Error;
use crate::lie::AlgebraRef;
use crate::report::CheckReport;
use crate::ring::{Rationals, Ring};
use crate::scalar::{gauss_i, gauss_im, gauss_re};
use crate::subset::{odd_subsets, Subset};
use crate::Result;

/// Exact Pfaffian of an antisymmetric matrix over any commutative ring,
/// by the Laplace-style expansion along the last row/column (no division).
/// The Pfaffian of the 0x0 matrix is 1.
pub fn pfaffian<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> Result<R::Elem> {
    let n = a.len();
    if n % 2 != 0 {
        return Err(Error::OddDimension { dim: n });
    }
    for (r, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: row.len() });
        }
        for c in r..n {
            if a[r][c] != ring.neg(&a[c][r]) {
                return Err(Error::NotAntisymmetric { row: r, col: c });
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let mut memo: BTreeMap<Vec<usize>, R::Elem> = BTreeMap::new();
    Ok(pf_rec(ring, a, &all, &mut memo))
}

fn pf_rec<R: Ring>(
    ring: &R,
    a: &[Vec<R::Elem>],
    idx: &[usize],
    memo: &mut BTreeMap<Vec<usize>, R::Elem>,
) -> R::Elem {
    if idx.is_empty() {
        return ring.one();
    }
    if let Some(hit) = memo.get(idx) {
        return hit.clone();
    }
    let last = *idx.last().unwrap();
    let mut acc = ring.zero();
    for (j, &row) in idx.iter().enumerate().take(idx.len() - 1) {
        let entry = &a[row][last];
        if ring.is_zero(entry) {
            continue;
        }
        let rest: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&r| r != row && r != last)
            .collect();
        let sub = pf_rec(ring, a, &rest, memo);
        let term = ring.mul(entry, &sub);
        // sign (-1)^{j+1} with j 1-based within the active index list
        acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    memo.insert(idx.to_vec(), acc.clone());
    acc
}

/// Pfaffian of a rational antisymmetric matrix.
pub fn pfaffian_rational(a: &[Vec<BigRational>]) -> Result<BigRational> {
    pfaffian(&Rationals, a)
}

/// `Pf(X_1, .., X_{2d})` for Lie-algebra vectors given over the `B` basis.
pub fn pf_vectors(alg: &AlgebraRef, vectors: &[Vec<BigRational>]) -> Result<CenterPoly> {
    let ring = CenterRing::new(alg);
    let n = vectors.len();
    let mut matrix = Vec::with_capacity(n);
    for vk in vectors {
        let mut row = Vec::with_capacity(n);
        for vl in vectors {
            let bracket = alg.bracket_vec(vk, vl)?;
            let coeffs: Vec<_> = bracket.into_iter().map(gauss_im).collect();
            // i * [X_k, X_l]
            row.push(CenterPoly::linear(alg, &coeffs)?);
        }
        matrix.push(row);
    }
    pfaffian(&ring, &matrix)
}

/// `Pf(K)` on the basis vectors indexed by the even subset `K`; `Pf(empty) = 1`.
pub fn pf_set(alg: &AlgebraRef, k: &Subset) -> Result<CenterPoly> {
    k.expect_even()?;
    if let Some(&max) = k.members().last() {
        if max >= alg.beta() {
            return Err(Error::UnknownGenerator { name: alloc::format!("B{}", max + 1) });
        }
    }
    let ring = CenterRing::new(alg);
    let members = k.members();
    let n = members.len();
    let mut matrix = Vec::with_capacity(n);
    for &kj in members {
        let mut row = Vec::with_capacity(n);
        for &kl in members {
            // i * [B_kj, B_kl] = i * sum_m c^m C_m
            let coeffs: Vec<_> = (0..alg.gamma())
                .map(|m| gauss_im(alg.c(kj, kl, m).clone()))
                .collect();
            row.push(CenterPoly::linear(alg, &coeffs)?);
        }
        matrix.push(row);
    }
    pfaffian(&ring, &matrix)
}

/// `Pf^k(K') = sign_{K'}(k) Pf(K' \ {k})` for `k` in the odd subset `K'`.
pub fn pf_upper(alg: &AlgebraRef, k_prime: &Subset, k: usize) -> Result<CenterPoly> {
    k_prime.expect_odd()?;
    if !k_prime.contains(k) {
        return Err(Error::IndexNotInSet { index: k });
    }
    let base = pf_set(alg, &k_prime.without(k))?;
    Ok(apply_sign(base, k_prime.sign_at(k)))
}

/// `Pf_h(K')`: zero if `h` is in the odd subset `K'`, else
/// `-sign_{K'}(h) Pf(K' u {h})`.
pub fn pf_lower(alg: &AlgebraRef, k_prime: &Subset, h: usize) -> Result<CenterPoly> {
    k_prime.expect_odd()?;
    if k_prime.contains(h) {
        return Ok(CenterPoly::zero(alg));
    }
    let base = pf_set(alg, &k_prime.with(h))?;
    Ok(apply_sign(base, -k_prime.sign_at(h)))
}

fn apply_sign(p: CenterPoly, sign: i32) -> CenterPoly {
    if sign >= 0 {
        p
    } else {
        p.neg()
    }
}

/// Verifies `sum_{k in K'} Pf^k(K') [B_k, B_h] = -i Pf_h(K')` for every odd
/// subset `K'` and every `h`; this is the matrix-vector reformulation of the
/// Pfaffian expansion formula and must hold identically.
pub fn check_expansion_identity(alg: &AlgebraRef) -> CheckReport {
    let mut report = CheckReport::new();
    for k_prime in odd_subsets(alg.beta()) {
        for h in 0..alg.beta() {
            let pass = expansion_identity_holds(alg, &k_prime, h);
            report.push(
                alloc::format!("pfaffian expansion at K'={k_prime}, h={}", h + 1),
                pass,
            );
        }
    }
    report
}

fn expansion_identity_holds(alg: &AlgebraRef, k_prime: &Subset, h: usize) -> bool {
    let mut lhs = EnvElement::zero(alg);
    for &k in k_prime.members() {
        let pf_k = match pf_upper(alg, k_prime, k) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let bracket: Vec<_> = (0..alg.gamma())
            .map(|m| gauss_re(alg.c(k, h, m).clone()))
            .collect();
        let bracket = match CenterPoly::linear(alg, &bracket) {
            Ok(b) => b,
            Err(_) => return false,
        };
        lhs = &lhs + &pf_k.mul(&bracket).into_env();
    }
    let rhs = match pf_lower(alg, k_prime, h) {
        Ok(p) => p.into_env().scale(&-gauss_i()),
        Err(_) => return false,
    };
    lhs == rhs
}
