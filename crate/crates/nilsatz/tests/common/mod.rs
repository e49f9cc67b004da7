//! Shared helpers for the integration and acceptance suites: independent
//! oracles (permutation-sum Pfaffian, cofactor determinant) and generators
//! for random matrices, characters, and kernel elements.
//!
//! The oracles deliberately re-derive everything from first definitions and
//! never call the library's recursive Pfaffian.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use nilsatz::enveloping::{CenterPoly, EnvElement};
use nilsatz::lie::AlgebraRef;
use nilsatz::morphism::Character;
use nilsatz::ring::Ring;
use nilsatz::sampling;
use nilsatz::scalar::{gauss_i, rat_int};
use nilsatz::subset::Subset;

/// Literal permutation-sum Pfaffian:
/// `pf(A) = (1/(2^d d!)) sum_sigma sign(sigma) prod_j A_{sigma(2j-1), sigma(2j)}`.
pub fn pfaffian_perm_sum<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> R::Elem {
    let n = a.len();
    assert_eq!(n % 2, 0, "permutation-sum Pfaffian needs even size");
    let d = n / 2;
    if d == 0 {
        return ring.one();
    }
    let mut acc = ring.zero();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1i32;
    // Heap's algorithm, tracking parity through the swaps.
    let mut c = vec![0usize; n];
    let add_term = |perm: &[usize], sign: i32, acc: &mut R::Elem| {
        let mut prod = ring.one();
        for j in 0..d {
            prod = ring.mul(&prod, &a[perm[2 * j]][perm[2 * j + 1]]);
        }
        *acc = if sign > 0 { ring.add(acc, &prod) } else { ring.sub(acc, &prod) };
    };
    add_term(&perm, sign, &mut acc);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            add_term(&perm, sign, &mut acc);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    // divide by the 2^d d! redundancy
    let mut denom = BigInt::from(1);
    for f in 1..=d {
        denom *= BigInt::from(2) * BigInt::from(f);
    }
    ring.scale_rat(&acc, &BigRational::new(BigInt::from(1), denom))
}

/// Determinant by cofactor expansion along the first remaining row; works
/// over any commutative ring and is independent of the Pfaffian code.
pub fn det_cofactor<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> R::Elem {
    let n = a.len();
    let cols: Vec<usize> = (0..n).collect();
    det_rec(ring, a, 0, &cols)
}

fn det_rec<R: Ring>(ring: &R, a: &[Vec<R::Elem>], row: usize, cols: &[usize]) -> R::Elem {
    if cols.is_empty() {
        return ring.one();
    }
    let mut acc = ring.zero();
    for (pos, &col) in cols.iter().enumerate() {
        if ring.is_zero(&a[row][col]) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let minor = det_rec(ring, a, row + 1, &rest);
        let term = ring.mul(&a[row][col], &minor);
        acc = if pos % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Random antisymmetric matrix of central polynomials.
pub fn random_center_antisymmetric<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &AlgebraRef,
    n: usize,
) -> Vec<Vec<CenterPoly>> {
    let mut m = vec![vec![CenterPoly::zero(alg); n]; n];
    for r in 0..n {
        for c in (r + 1)..n {
            let p = sampling::random_center(rng, alg, 2, 2);
            m[r][c] = p.clone();
            m[c][r] = p.neg();
        }
    }
    m
}

/// Random admissible character for `K` over `alg`: nonzero Pfaffian value
/// on `K`, vanishing Pfaffian on every proper even superset.
pub fn random_admissible_character<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &AlgebraRef,
    k: &Subset,
) -> Character {
    'outer: for _ in 0..5000 {
        // zero entries are likely, so vanishing constraints on supersets
        // (e.g. the whole center for K = empty) are reachable by sampling
        let val_c: Vec<BigRational> = (0..alg.gamma())
            .map(|_| {
                if rng.random_bool(0.5) {
                    rat_int(0)
                } else {
                    sampling::random_nonzero_rational(rng, 3)
                }
            })
            .collect();
        let mut val_e = BTreeMap::new();
        for &m in &k.complement(alg.beta()) {
            val_e.insert(m, sampling::random_rational(rng, 3));
        }
        let Ok(chi) = Character::new(alg, k.clone(), val_e, val_c) else {
            continue;
        };
        if chi.pf_value(k).unwrap() == rat_int(0) {
            continue;
        }
        for l in nilsatz::subset::proper_even_supersets(alg.beta(), k) {
            if chi.pf_value(&l).unwrap() != rat_int(0) {
                continue 'outer;
            }
        }
        return chi;
    }
    panic!("no admissible character found for K={k}");
}

/// Random element of `ker Phi` for a synthesized morphism: a sandwich sum
/// over the scalar-image generators `i E_{K,m} - phi(i E_{K,m})` and
/// `i C_j - phi(i C_j)`.
pub fn random_kernel_element<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &AlgebraRef,
    chi: &Character,
) -> EnvElement {
    let k = chi.subset();
    let mut gens: Vec<EnvElement> = Vec::new();
    for (&m, val) in chi.val_e() {
        let e = nilsatz::invariant::invariant_elem(alg, k, m).unwrap();
        let gen = e
            .scale(&gauss_i())
            .checked_sub(&EnvElement::scalar(
                alg,
                nilsatz::scalar::gauss_re(val.clone()),
            ))
            .unwrap();
        gens.push(gen);
    }
    for (j, val) in chi.val_c().iter().enumerate() {
        let c = EnvElement::c_gen(alg, j).unwrap();
        let gen = c
            .scale(&gauss_i())
            .checked_sub(&EnvElement::scalar(
                alg,
                nilsatz::scalar::gauss_re(val.clone()),
            ))
            .unwrap();
        gens.push(gen);
    }
    nilsatz::ideal::random_ideal_element(rng, alg, &gens, 2)
}
