//! Filtered *-algebra morphisms from the enveloping algebra into Weyl
//! algebras, their kernels, and the synthesis of such morphisms from
//! *-characters on the invariant subalgebra.
//!
//! A morphism is stored by its degree-at-most-one images of the Lie basis.
//! Well-definedness needs exactly: antihermitian images, filtration degree
//! one, and bracket compatibility on basis pairs; validation checks all
//! three, after which application to PBW monomials extends uniquely.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::enveloping::{CenterPoly, EnvElement};
use crate::error::Error;
use crate::invariant::invariant_elem;
use crate::lie::{same_algebra, AlgebraRef};
use crate::linalg;
use crate::pfaffian::{pf_set, pf_upper, pfaffian_rational};
use crate::ring::Rationals;
use crate::scalar::{expect_real, gauss_im, gauss_re, GaussRational};
use crate::subset::{proper_even_supersets, Subset};
use crate::Result;

/// A validated filtered *-algebra morphism into `W_d`, given by the images
/// of `B_1..B_beta, C_1..C_gamma`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilteredMorphism {
    alg: AlgebraRef,
    d: usize,
    images: Vec<crate::weyl::WeylElement>,
}

use crate::weyl::WeylElement;

impl FilteredMorphism {
    /// Validates candidate images: length `beta + gamma`, every image
    /// antihermitian and of filtration degree at most one, and bracket
    /// compatibility `[imgs[u], imgs[v]] = img([V_u, V_v])` for all pairs.
    pub fn new(alg: &AlgebraRef, d: usize, images: Vec<WeylElement>) -> Result<Self> {
        let n = alg.beta() + alg.gamma();
        if images.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: images.len() });
        }
        for (idx, img) in images.iter().enumerate() {
            if img.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: img.dim() });
            }
            if !img.is_filtered_degree1() {
                return Err(Error::NotFiltered { index: idx });
            }
            if !img.is_antihermitian() {
                return Err(Error::NotAntihermitian { index: idx });
            }
        }
        let morphism = FilteredMorphism { alg: Arc::clone(alg), d, images };
        for u in 0..n {
            for v in (u + 1)..n {
                let lhs = morphism.images[u].commutator(&morphism.images[v])?;
                let rhs = morphism.bracket_image(u, v)?;
                if lhs != rhs {
                    return Err(Error::BracketMismatch { j: u, k: v });
                }
            }
        }
        Ok(morphism)
    }

    /// Image of `[V_u, V_v]` for basis indices into `B_1.., C_1..`.
    fn bracket_image(&self, u: usize, v: usize) -> Result<WeylElement> {
        let beta = self.alg.beta();
        if u >= beta || v >= beta {
            return Ok(WeylElement::zero(self.d));
        }
        let mut acc = WeylElement::zero(self.d);
        for m in 0..self.alg.gamma() {
            let c = self.alg.c(u, v, m);
            if c.is_zero() {
                continue;
            }
            acc = acc.checked_add(&self.images[beta + m].scale(&gauss_re(c.clone())))?;
        }
        Ok(acc)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn weyl_dim(&self) -> usize {
        self.d
    }

    pub fn b_image(&self, j: usize) -> &WeylElement {
        &self.images[j]
    }

    pub fn c_image(&self, m: usize) -> &WeylElement {
        &self.images[self.alg.beta() + m]
    }

    pub fn images(&self) -> &[WeylElement] {
        &self.images
    }

    /// Applies the morphism: the PBW monomial `B^a C^b` maps to the product
    /// of the images in that order, extended linearly.
    pub fn apply(&self, a: &EnvElement) -> Result<WeylElement> {
        if !same_algebra(&self.alg, a.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = WeylElement::zero(self.d);
        for (mono, coeff) in a.terms() {
            let mut term = WeylElement::scalar(self.d, coeff.clone());
            for j in 0..self.alg.beta() {
                for _ in 0..mono.b.get(j) {
                    term = term.checked_mul(&self.images[j])?;
                }
            }
            for m in 0..self.alg.gamma() {
                for _ in 0..mono.c.get(m) {
                    term = term.checked_mul(&self.images[self.alg.beta() + m])?;
                }
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Exact kernel membership: `apply(a) = 0`.
    pub fn in_kernel(&self, a: &EnvElement) -> bool {
        self.apply(a).map(|w| w.is_zero()).unwrap_or(false)
    }
}

/// Membership in the vanishing ideal of a set of morphisms; the empty set
/// vanishes on everything.
pub fn in_vanishing_ideal(morphisms: &[FilteredMorphism], a: &EnvElement) -> bool {
    morphisms.iter().all(|phi| phi.in_kernel(a))
}

/// Does `phi` lie in the zero set of the *-ideal generated by `gens`,
/// i.e. do all generators (hence their stars too) map to zero?
pub fn zeros_membership(phi: &FilteredMorphism, gens: &[EnvElement]) -> bool {
    gens.iter().all(|g| phi.in_kernel(g))
}

/// Symplectic basis of a nondegenerate antisymmetric rational form.
///
/// Returns the rows `X_1..X_d, Y_1..Y_d` (coordinates in the input basis)
/// with `omega(X_k, X_l) = omega(Y_k, Y_l) = 0` and
/// `omega(X_k, Y_l) = -delta_{k,l}`. Pivoting picks the lowest index pair
/// with a nonzero pairing and scales the second vector by `-1/omega`, so the
/// output is deterministic and stays rational.
pub fn symplectic_basis(omega: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = omega.len();
    let pf = pfaffian_rational(omega)?;
    if pf.is_zero() {
        return Err(Error::Degenerate);
    }
    let pair = |u: &[BigRational], v: &[BigRational]| -> BigRational {
        let mut acc = BigRational::zero();
        for (r, ur) in u.iter().enumerate() {
            if ur.is_zero() {
                continue;
            }
            for (c, vc) in v.iter().enumerate() {
                if vc.is_zero() {
                    continue;
                }
                acc += ur * &omega[r][c] * vc;
            }
        }
        acc
    };
    let mut basis: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::from_integer(1.into()) } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    while !basis.is_empty() {
        let mut found = None;
        'outer: for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                if !pair(&basis[i], &basis[j]).is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = found else {
            // cannot happen for a nondegenerate form
            return Err(Error::Degenerate);
        };
        let x = basis[i].clone();
        let w = pair(&basis[i], &basis[j]);
        let scale = -w.recip();
        let y: Vec<BigRational> = basis[j].iter().map(|e| e * &scale).collect();
        let mut rest = Vec::new();
        for (idx, v) in basis.iter().enumerate() {
            if idx == i || idx == j {
                continue;
            }
            // remove the X and Y components: v' = v - omega(Y,v) X + omega(X,v) Y
            let cy = pair(&y, v);
            let cx = pair(&x, v);
            let adjusted: Vec<BigRational> = v
                .iter()
                .zip(x.iter().zip(&y))
                .map(|(vv, (xx, yy))| vv - &cy * xx + &cx * yy)
                .collect();
            rest.push(adjusted);
        }
        xs.push(x);
        ys.push(y);
        basis = rest;
    }
    xs.extend(ys);
    Ok(xs)
}

/// A *-character on the invariant subalgebra of an even subset `K`,
/// specified by the real rational values on `i*E_{K,m}` (for `m` outside
/// `K`) and `i*C_j`; the character itself maps `C_j` to `-i * val_c[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    alg: AlgebraRef,
    k: Subset,
    val_e: BTreeMap<usize, BigRational>,
    val_c: Vec<BigRational>,
}

impl Character {
    pub fn new(
        alg: &AlgebraRef,
        k: Subset,
        val_e: BTreeMap<usize, BigRational>,
        val_c: Vec<BigRational>,
    ) -> Result<Self> {
        k.expect_even()?;
        if let Some(&max) = k.members().last() {
            if max >= alg.beta() {
                return Err(Error::UnknownGenerator { name: alloc::format!("B{}", max + 1) });
            }
        }
        if val_c.len() != alg.gamma() {
            return Err(Error::InvalidCharacter {
                reason: alloc::format!(
                    "expected {} central values, found {}",
                    alg.gamma(),
                    val_c.len()
                ),
            });
        }
        let comp = k.complement(alg.beta());
        for &m in &comp {
            if !val_e.contains_key(&m) {
                return Err(Error::InvalidCharacter {
                    reason: alloc::format!("missing value for E at index {}", m + 1),
                });
            }
        }
        for &m in val_e.keys() {
            if k.contains(m) || m >= alg.beta() {
                return Err(Error::InvalidCharacter {
                    reason: alloc::format!("E-value given for invalid index {}", m + 1),
                });
            }
        }
        Ok(Character { alg: Arc::clone(alg), k, val_e, val_c })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn subset(&self) -> &Subset {
        &self.k
    }

    pub fn val_e(&self) -> &BTreeMap<usize, BigRational> {
        &self.val_e
    }

    pub fn val_c(&self) -> &[BigRational] {
        &self.val_c
    }

    /// `phi(C_j) = -i * val_c[j]` as scalars, for central evaluation.
    fn central_values(&self) -> Vec<GaussRational> {
        self.val_c.iter().map(|v| gauss_im(-v.clone())).collect()
    }

    /// Evaluates the character on a central polynomial.
    pub fn eval_center(&self, p: &CenterPoly) -> Result<GaussRational> {
        p.eval(&self.central_values())
    }

    /// `phi(Pf(L))` is real because Pfaffians are hermitian.
    pub fn pf_value(&self, l: &Subset) -> Result<BigRational> {
        expect_real(&self.eval_center(&pf_set(&self.alg, l)?)?)
    }

    /// Synthesizes a filtered *-morphism `Phi` into `W_{|K|/2}` with
    /// `Phi(p) = phi(p) 1` on the invariant subalgebra.
    ///
    /// Preconditions (checked): `phi(Pf(K)) != 0` and `phi(Pf(L)) = 0` for
    /// every even `L` strictly containing `K`. The construction builds the
    /// form `Omega = (phi(i [B_k, B_l]))`, a symplectic basis for it, the
    /// vectors `F_m`, assigns `X_k -> i P_k`, `Y_l -> i Q_l`,
    /// `F_m -> phi(E_{K,m}) 1`, `C_j -> phi(C_j) 1`, solves for the images
    /// of the `B_h`, and re-verifies everything before returning.
    pub fn to_morphism(&self) -> Result<FilteredMorphism> {
        let alg = &self.alg;
        let k = &self.k;
        let pf_k = self.pf_value(k)?;
        if pf_k.is_zero() {
            return Err(Error::PfaffianConditionFailed {
                subset: k.members().to_vec(),
                vanished: true,
            });
        }
        for l in proper_even_supersets(alg.beta(), k) {
            if !self.pf_value(&l)?.is_zero() {
                return Err(Error::PfaffianConditionFailed {
                    subset: l.members().to_vec(),
                    vanished: false,
                });
            }
        }

        let two_d = k.len();
        let d = two_d / 2;
        let members = k.members();

        // Omega_{j,j'} = phi(i [B_kj, B_kj']) = sum_m c^m val_c[m].
        let mut omega = vec![vec![BigRational::zero(); two_d]; two_d];
        for (r, &kj) in members.iter().enumerate() {
            for (c, &kl) in members.iter().enumerate() {
                let mut acc = BigRational::zero();
                for m in 0..alg.gamma() {
                    acc += alg.c(kj, kl, m) * &self.val_c[m];
                }
                omega[r][c] = acc;
            }
        }
        let t = symplectic_basis(&omega)?;

        // Rows of the new basis in B-coordinates, with their Weyl images.
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(alg.beta());
        let mut row_images: Vec<WeylElement> = Vec::with_capacity(alg.beta());
        for (idx, coords) in t.iter().enumerate() {
            let mut full = vec![BigRational::zero(); alg.beta()];
            for (pos, &member) in members.iter().enumerate() {
                full[member] = coords[pos].clone();
            }
            rows.push(full);
            let img = if idx < d {
                WeylElement::p_gen(d, idx)?
            } else {
                WeylElement::q_gen(d, idx - d)?
            };
            row_images.push(img.scale(&crate::scalar::gauss_i()));
        }
        let comp = k.complement(alg.beta());
        for &m in &comp {
            let k_ext = k.with(m);
            let mut full = vec![BigRational::zero(); alg.beta()];
            for &idx in k_ext.members() {
                let coeff = expect_real(&self.eval_center(&pf_upper(alg, &k_ext, idx)?)?)?;
                full[idx] = if k.sign_at(m) < 0 { -coeff } else { coeff };
            }
            rows.push(full);
            row_images.push(WeylElement::scalar(d, gauss_im(-self.val_e[&m].clone())));
        }

        // Express each B_h in the new basis and push through the images.
        let inverse = linalg::invert(&Rationals, &rows).ok_or_else(|| {
            Error::ConstructionBug("change-of-basis matrix is singular".to_string())
        })?;
        let mut images = Vec::with_capacity(alg.beta() + alg.gamma());
        for h in 0..alg.beta() {
            let mut img = WeylElement::zero(d);
            for (i, row_img) in row_images.iter().enumerate() {
                let coeff = &inverse[h][i];
                if coeff.is_zero() {
                    continue;
                }
                img = img.checked_add(&row_img.scale(&gauss_re(coeff.clone())))?;
            }
            images.push(img);
        }
        for j in 0..alg.gamma() {
            images.push(WeylElement::scalar(d, gauss_im(-self.val_c[j].clone())));
        }

        let morphism = FilteredMorphism::new(alg, d, images)
            .map_err(|e| Error::ConstructionBug(alloc::format!("synthesized images invalid: {e}")))?;

        // Extension property on the generators of the invariant subalgebra.
        for &m in &comp {
            let e = invariant_elem(alg, k, m)?;
            let got = morphism.apply(&e)?;
            let want = WeylElement::scalar(d, gauss_im(-self.val_e[&m].clone()));
            if got != want {
                return Err(Error::ConstructionBug(alloc::format!(
                    "image of E_{{K,{}}} is {got}, expected {want}",
                    m + 1
                )));
            }
        }
        for j in 0..alg.gamma() {
            let c = EnvElement::c_gen(alg, j)?;
            let got = morphism.apply(&c)?;
            let want = WeylElement::scalar(d, gauss_im(-self.val_c[j].clone()));
            if got != want {
                return Err(Error::ConstructionBug(alloc::format!(
                    "image of C{} is {got}, expected {want}",
                    j + 1
                )));
            }
        }
        Ok(morphism)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::TwoStepLieAlgebra;
    use crate::scalar::{gauss_i, gauss_int, rat_int};

    /// `Phi_lambda`: `B1 -> iP`, `B2 -> -i lambda Q`, `C1 -> -i lambda`, so
    /// that `i C1 - lambda` lies in the kernel.
    fn phi_lambda(lambda: i64) -> FilteredMorphism {
        let h = TwoStepLieAlgebra::heisenberg();
        let p = WeylElement::p_gen(1, 0).unwrap().scale(&gauss_i());
        let q = WeylElement::q_gen(1, 0)
            .unwrap()
            .scale(&gauss_im(rat_int(-lambda)));
        let c = WeylElement::scalar(1, gauss_im(rat_int(-lambda)));
        FilteredMorphism::new(&h, 1, vec![p, q, c]).unwrap()
    }

    fn psi(xi: i64, eta: i64) -> FilteredMorphism {
        let h = TwoStepLieAlgebra::heisenberg();
        FilteredMorphism::new(
            &h,
            0,
            vec![
                WeylElement::scalar(0, gauss_int(0, xi)),
                WeylElement::scalar(0, gauss_int(0, eta)),
                WeylElement::zero(0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn wellformed_examples() {
        let phi = phi_lambda(2);
        // [iP, -2iQ] = -2i = image of C1
        assert_eq!(
            phi.b_image(0).commutator(phi.b_image(1)).unwrap(),
            WeylElement::scalar(1, gauss_int(0, -2))
        );
        let _psi = psi(0, 0);
    }

    #[test]
    fn not_filtered_rejected() {
        let h = TwoStepLieAlgebra::heisenberg();
        let qp = WeylElement::q_gen(1, 0)
            .unwrap()
            .checked_mul(&WeylElement::p_gen(1, 0).unwrap())
            .unwrap();
        let err = FilteredMorphism::new(
            &h,
            1,
            vec![qp, WeylElement::zero(1), WeylElement::zero(1)],
        )
        .unwrap_err();
        assert_eq!(err, Error::NotFiltered { index: 0 });
    }

    #[test]
    fn not_antihermitian_rejected() {
        let h = TwoStepLieAlgebra::heisenberg();
        let p = WeylElement::p_gen(1, 0).unwrap();
        let err = FilteredMorphism::new(
            &h,
            1,
            vec![p, WeylElement::zero(1), WeylElement::zero(1)],
        )
        .unwrap_err();
        assert_eq!(err, Error::NotAntihermitian { index: 0 });
    }

    #[test]
    fn bracket_mismatch_rejected() {
        let h = TwoStepLieAlgebra::heisenberg();
        // B1 -> iP, B2 -> iQ but C1 -> 0 violates [B1,B2] = C1.
        let p = WeylElement::p_gen(1, 0).unwrap().scale(&gauss_i());
        let q = WeylElement::q_gen(1, 0).unwrap().scale(&gauss_i());
        let err = FilteredMorphism::new(&h, 1, vec![p, q, WeylElement::zero(1)]).unwrap_err();
        assert_eq!(err, Error::BracketMismatch { j: 0, k: 1 });
    }

    #[test]
    fn apply_examples() {
        let h = TwoStepLieAlgebra::heisenberg();
        let phi = phi_lambda(2);
        // i C1 - 2 is in the kernel
        let a = crate::expr::parse_env(&h, "i*C1 - 2").unwrap();
        assert!(phi.apply(&a).unwrap().is_zero());
        assert!(phi.in_kernel(&a));
        // B1 B2 -> (iP)(-2iQ) = 2PQ = 2QP - 2i
        let b1b2 = crate::expr::parse_env(&h, "B1*B2").unwrap();
        let img = phi.apply(&b1b2).unwrap();
        assert_eq!(img, crate::expr::parse_weyl(1, "2*Q1*P1 - 2*i").unwrap());
        // unit goes to unit
        assert_eq!(phi.apply(&EnvElement::one(&h)).unwrap(), WeylElement::one(1));
        // star compatibility
        assert_eq!(phi.apply(&b1b2.star()).unwrap(), img.star());
        assert!(!psi(0, 0).in_kernel(&a));
    }

    #[test]
    fn vanishing_ideal_membership() {
        let h = TwoStepLieAlgebra::heisenberg();
        let s = vec![phi_lambda(2), psi(0, 0)];
        let a = crate::expr::parse_env(&h, "C1*(i*C1 - 2)").unwrap();
        assert!(in_vanishing_ideal(&s, &a));
        assert!(in_vanishing_ideal(&[], &a));
        let b1 = EnvElement::b_gen(&h, 0).unwrap();
        assert!(!in_vanishing_ideal(&[phi_lambda(2)], &b1));
    }

    #[test]
    fn zeros_membership_examples() {
        let h = TwoStepLieAlgebra::heisenberg();
        let gen = crate::expr::parse_env(&h, "i*C1 - 2").unwrap();
        assert!(zeros_membership(&phi_lambda(2), core::slice::from_ref(&gen)));
        assert!(!zeros_membership(&psi(0, 0), core::slice::from_ref(&gen)));
        assert!(zeros_membership(&psi(0, 0), &[]));
    }

    #[test]
    fn symplectic_two_by_two() {
        let omega = vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(-1), rat_int(0)],
        ];
        let t = symplectic_basis(&omega).unwrap();
        assert_eq!(t, vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(-1)]]);
        let omega2 = vec![
            vec![rat_int(0), rat_int(-1)],
            vec![rat_int(1), rat_int(0)],
        ];
        let t2 = symplectic_basis(&omega2).unwrap();
        assert_eq!(t2, vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]]);
        let zero = vec![vec![rat_int(0); 2]; 2];
        assert_eq!(symplectic_basis(&zero), Err(Error::Degenerate));
    }

    #[test]
    fn symplectic_normal_form() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(17);
        let mut produced = 0;
        while produced < 10 {
            let omega = crate::sampling::random_antisymmetric(&mut rng, 4, 4);
            let Ok(t) = symplectic_basis(&omega) else {
                continue;
            };
            produced += 1;
            let d = 2;
            let pair = |u: &[BigRational], v: &[BigRational]| -> BigRational {
                let mut acc = BigRational::zero();
                for (r, ur) in u.iter().enumerate() {
                    for (c, vc) in v.iter().enumerate() {
                        acc += ur * &omega[r][c] * vc;
                    }
                }
                acc
            };
            for a in 0..2 * d {
                for b in 0..2 * d {
                    let want = if a < d && b == a + d {
                        rat_int(-1)
                    } else if b < d && a == b + d {
                        rat_int(1)
                    } else {
                        rat_int(0)
                    };
                    assert_eq!(pair(&t[a], &t[b]), want, "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn character_synthesis_on_free_three() {
        let f = TwoStepLieAlgebra::free_three();
        let k = Subset::new(vec![1, 2]);
        let mut val_e = BTreeMap::new();
        val_e.insert(0usize, rat_int(0));
        let chi = Character::new(&f, k, val_e, vec![rat_int(1), rat_int(0), rat_int(0)]).unwrap();
        let phi = chi.to_morphism().unwrap();
        assert_eq!(phi.weyl_dim(), 1);
        // B2 -> iP, B3 -> -iQ, B1 -> 0, C1 -> -i, C2, C3 -> 0
        assert_eq!(phi.b_image(1), &WeylElement::p_gen(1, 0).unwrap().scale(&gauss_i()));
        assert_eq!(phi.b_image(2), &WeylElement::q_gen(1, 0).unwrap().scale(&-gauss_i()));
        assert!(phi.b_image(0).is_zero());
        assert_eq!(phi.c_image(0), &WeylElement::scalar(1, gauss_int(0, -1)));
        assert!(phi.c_image(1).is_zero());
        assert!(phi.c_image(2).is_zero());
        // [Phi(B2), Phi(B3)] = -i = Phi(C1)
        assert_eq!(
            phi.b_image(1).commutator(phi.b_image(2)).unwrap(),
            WeylElement::scalar(1, gauss_int(0, -1))
        );
    }

    #[test]
    fn character_synthesis_on_heisenberg() {
        let h = TwoStepLieAlgebra::heisenberg();
        let k = Subset::new(vec![0, 1]);
        let chi = Character::new(&h, k, BTreeMap::new(), vec![rat_int(2)]).unwrap();
        let phi = chi.to_morphism().unwrap();
        assert_eq!(phi.weyl_dim(), 1);
        let a = crate::expr::parse_env(&h, "i*C1 - 2").unwrap();
        assert!(phi.in_kernel(&a));
    }

    #[test]
    fn degenerate_character_morphism() {
        // K empty, all central values zero: a d = 0 evaluation character.
        let h = TwoStepLieAlgebra::heisenberg();
        let mut val_e = BTreeMap::new();
        val_e.insert(0usize, rat_int(3));
        val_e.insert(1usize, rat_int(-1));
        let chi = Character::new(&h, Subset::empty(), val_e, vec![rat_int(0)]).unwrap();
        let phi = chi.to_morphism().unwrap();
        assert_eq!(phi.weyl_dim(), 0);
        assert_eq!(phi.b_image(0), &WeylElement::scalar(0, gauss_int(0, -3)));
        assert_eq!(phi.b_image(1), &WeylElement::scalar(0, gauss_int(0, 1)));
    }

    #[test]
    fn pfaffian_preconditions_enforced() {
        let h = TwoStepLieAlgebra::heisenberg();
        // phi(Pf(K)) = 0 for K = {1,2}
        let chi = Character::new(&h, Subset::new(vec![0, 1]), BTreeMap::new(), vec![rat_int(0)])
            .unwrap();
        assert!(matches!(
            chi.to_morphism(),
            Err(Error::PfaffianConditionFailed { vanished: true, .. })
        ));
        // K empty but phi(Pf({1,2})) != 0
        let mut val_e = BTreeMap::new();
        val_e.insert(0usize, rat_int(0));
        val_e.insert(1usize, rat_int(0));
        let chi = Character::new(&h, Subset::empty(), val_e, vec![rat_int(1)]).unwrap();
        assert!(matches!(
            chi.to_morphism(),
            Err(Error::PfaffianConditionFailed { vanished: false, .. })
        ));
    }

    #[test]
    fn invalid_characters_rejected() {
        let f = TwoStepLieAlgebra::free_three();
        // missing E value for index 1 (B1 is outside K = {2,3})
        assert!(matches!(
            Character::new(&f, Subset::new(vec![1, 2]), BTreeMap::new(), vec![rat_int(1); 3]),
            Err(Error::InvalidCharacter { .. })
        ));
        // wrong central length
        let mut val_e = BTreeMap::new();
        val_e.insert(0usize, rat_int(0));
        assert!(matches!(
            Character::new(&f, Subset::new(vec![1, 2]), val_e, vec![rat_int(1)]),
            Err(Error::InvalidCharacter { .. })
        ));
    }
}
