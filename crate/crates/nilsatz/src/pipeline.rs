//! The iterative skeleton: the even-subset poset with its topological
//! ordering, type checks of ideals against Pfaffians of larger strata, and
//! the assembled demonstration workflows.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::Rng;

use crate::enveloping::EnvElement;
use crate::ideal::Ideal;
use crate::invariant::{check_commutator_identities, invariant_elem};
use crate::lie::{AlgebraRef, TwoStepLieAlgebra};
use crate::morphism::{in_vanishing_ideal, Character};
use crate::pfaffian::pf_set;
use crate::report::CheckReport;
use crate::scalar::{gauss_i, rat_int};
use crate::subset::{even_subsets, proper_even_supersets, Subset};
use crate::Result;

/// All even-cardinality subsets of `{1..beta}` ordered by inclusion; the
/// minimum is the empty set and there are `2^{beta-1}` elements for
/// `beta >= 1`.
#[derive(Debug, Clone)]
pub struct EvenSubsetPoset {
    beta: usize,
    elements: Vec<Subset>,
}

impl EvenSubsetPoset {
    pub fn new(beta: usize) -> Self {
        EvenSubsetPoset { beta, elements: even_subsets(beta) }
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// A linear extension of inclusion: `kappa_m` proper subset of
    /// `kappa_n` implies `m < n`. Sorting by (cardinality, lexicographic)
    /// gives a deterministic such order starting at the empty set.
    pub fn toposort(&self) -> Vec<Subset> {
        self.elements.clone()
    }
}

/// Is the ideal of type `K`, i.e. does it contain `Pf(L)` for every even
/// `L` strictly above `K`? Decidable for vanishing ideals; for generated
/// ideals the bounded oracle may report [`Error::Inconclusive`].
pub fn type_check(alg: &AlgebraRef, ideal: &Ideal, k: &Subset, bound: u32) -> Result<bool> {
    for l in proper_even_supersets(alg.beta(), k) {
        let pf = pf_set(alg, &l)?;
        if !ideal.contains(pf.as_env(), bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The free-three demonstration: the distinguished central element, its
/// identification with the invariant elements of the three maximal even
/// subsets, and one synthesized morphism per subset.
pub fn f3_demo() -> Result<CheckReport> {
    let f = TwoStepLieAlgebra::free_three();
    let mut report = CheckReport::new();

    // Xi = B1 C1 + B2 C2 + B3 C3 is central.
    let mut xi = EnvElement::zero(&f);
    for j in 0..3 {
        let t = EnvElement::b_gen(&f, j)?.checked_mul(&EnvElement::c_gen(&f, j)?)?;
        xi = xi.checked_add(&t)?;
    }
    for j in 0..3 {
        let comm = xi.commutator(&EnvElement::b_gen(&f, j)?)?;
        report.push(alloc::format!("[Xi, B{}] = 0", j + 1), comm.is_zero());
    }

    // i Xi = E_{{2,3},1} = -E_{{1,3},2} = E_{{1,2},3}.
    let i_xi = xi.scale(&gauss_i());
    let e1 = invariant_elem(&f, &Subset::new(alloc::vec![1, 2]), 0)?;
    report.push("i*Xi = E_{{2,3},1}".into(), e1 == i_xi);
    let e2 = invariant_elem(&f, &Subset::new(alloc::vec![0, 2]), 1)?;
    report.push("-i*Xi = E_{{1,3},2}".into(), e2 == i_xi.neg());
    let e3 = invariant_elem(&f, &Subset::new(alloc::vec![0, 1]), 2)?;
    report.push("i*Xi = E_{{1,2},3}".into(), e3 == i_xi);

    // One synthesized morphism per maximal even subset, from the sample
    // character with phi(i C_j) = 1 exactly on the Pfaffian direction.
    for (k, central) in [
        (Subset::new(alloc::vec![1, 2]), 0usize),
        (Subset::new(alloc::vec![0, 2]), 1),
        (Subset::new(alloc::vec![0, 1]), 2),
    ] {
        let mut val_c = alloc::vec![rat_int(0); 3];
        val_c[central] = rat_int(1);
        let mut val_e = BTreeMap::new();
        for &m in &k.complement(3) {
            val_e.insert(m, rat_int(0));
        }
        let character = Character::new(&f, k.clone(), val_e, val_c)?;
        match character.to_morphism() {
            Ok(phi) => {
                report.push(
                    alloc::format!("morphism synthesized for K={k} is well-formed"),
                    true,
                );
                // Its kernel contains i*C_central - 1 by construction.
                let gen = EnvElement::c_gen(&f, central)?
                    .scale(&gauss_i())
                    .checked_sub(&EnvElement::one(&f))?;
                report.push(
                    alloc::format!("i*C{} - 1 in kernel for K={k}", central + 1),
                    phi.in_kernel(&gen),
                );
            }
            Err(e) => {
                report.push(alloc::format!("morphism synthesis for K={k}: {e}"), false);
            }
        }
        // The commutator identity suite for this subset.
        let ids = check_commutator_identities(&f, &k)?;
        report.push(
            alloc::format!("commutator identities exhaustive on K={k}"),
            ids.all_pass(),
        );
    }
    Ok(report)
}

/// Full identity suite for one algebra: Pfaffian expansion identities,
/// commutator identities for every even subset, and randomized algebra
/// axioms with the given seed material.
pub fn run_identity_checks<R: Rng + ?Sized>(
    alg: &AlgebraRef,
    rng: &mut R,
    cases: usize,
    max_degree: u32,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let pf = crate::pfaffian::check_expansion_identity(alg);
    report.push(
        alloc::format!("pfaffian expansion identities ({} cases)", pf.len()),
        pf.all_pass(),
    );
    for k in even_subsets(alg.beta()) {
        let ids = check_commutator_identities(alg, &k)?;
        report.push(
            alloc::format!("commutator identities on K={k} ({} cases)", ids.len()),
            ids.all_pass(),
        );
    }
    report.merge(crate::axioms::env_axioms(alg, rng, cases, max_degree));
    report.merge(crate::axioms::weyl_axioms(2, rng, cases, max_degree));
    Ok(report)
}

/// Constructs, for testing workflows, a finite pool of Heisenberg morphisms
/// of both shapes.
pub fn heisenberg_pool() -> Vec<crate::morphism::FilteredMorphism> {
    let mut pool = Vec::new();
    for l in [1i64, 2, 3, -1] {
        pool.push(crate::heisenberg::phi_lambda(&rat_int(l)).unwrap());
    }
    for (xi, eta) in [(0i64, 0i64), (1, 1), (2, -1)] {
        pool.push(crate::heisenberg::psi_point(&rat_int(xi), &rat_int(eta)));
    }
    pool
}

/// Did every element of `accepted_by_s` stay accepted after re-deriving the
/// morphism set from probe generators? This is the finite shadow of the
/// antitone Galois connection between morphism sets and ideals.
pub fn galois_sanity(
    s: &[crate::morphism::FilteredMorphism],
    probes: &[EnvElement],
    pool: &[crate::morphism::FilteredMorphism],
    samples: &[EnvElement],
) -> bool {
    let s_prime: Vec<_> = pool
        .iter()
        .filter(|phi| crate::morphism::zeros_membership(phi, probes))
        .cloned()
        .collect();
    samples
        .iter()
        .filter(|a| in_vanishing_ideal(s, a))
        .all(|a| in_vanishing_ideal(&s_prime, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_env;
    use crate::ideal::ideal_quotient_test;
    use crate::scalar::rat_int;
    use rand::SeedableRng;

    #[test]
    fn toposort_small() {
        let p = EvenSubsetPoset::new(2);
        assert_eq!(p.toposort(), alloc::vec![Subset::empty(), Subset::new(alloc::vec![0, 1])]);
        let p0 = EvenSubsetPoset::new(0);
        assert_eq!(p0.toposort(), alloc::vec![Subset::empty()]);
        let p3 = EvenSubsetPoset::new(3);
        assert_eq!(p3.len(), 4);
        assert_eq!(p3.toposort()[0], Subset::empty());
    }

    #[test]
    fn toposort_is_linear_extension() {
        for beta in 0..=6 {
            let order = EvenSubsetPoset::new(beta).toposort();
            for m in 0..order.len() {
                for n in 0..order.len() {
                    if order[m].is_proper_subset_of(&order[n]) {
                        assert!(m < n, "beta={beta}: {} before {}", order[m], order[n]);
                    }
                }
            }
            if beta >= 1 {
                assert_eq!(order.len(), 1 << (beta - 1));
            }
        }
    }

    #[test]
    fn type_check_examples() {
        let h = TwoStepLieAlgebra::heisenberg();
        // V({Psi_{0,0}}) contains Pf({1,2}) = i C1 (maps to 0): type empty.
        let psi = crate::heisenberg::psi_point(&rat_int(0), &rat_int(0));
        let ideal = Ideal::Vanishing(alloc::vec![psi]);
        assert!(type_check(&h, &ideal, &Subset::empty(), 2).unwrap());
        // V({Phi_2}) does not: Phi_2(i C1) = 2.
        let phi2 = crate::heisenberg::phi_lambda(&rat_int(2)).unwrap();
        let ideal2 = Ideal::Vanishing(alloc::vec![phi2]);
        assert!(!type_check(&h, &ideal2, &Subset::empty(), 2).unwrap());
        // Maximal K: empty conjunction.
        assert!(type_check(&h, &ideal2, &Subset::new(alloc::vec![0, 1]), 2).unwrap());
    }

    #[test]
    fn quotient_test_examples() {
        let h = TwoStepLieAlgebra::heisenberg();
        let phi2 = crate::heisenberg::phi_lambda(&rat_int(2)).unwrap();
        let psi = crate::heisenberg::psi_point(&rat_int(0), &rat_int(0));
        let s = alloc::vec![phi2.clone(), psi];
        let j = alloc::vec![parse_env(&h, "i*C1 - 2").unwrap()];
        let b1 = EnvElement::b_gen(&h, 0).unwrap();
        let outcome = ideal_quotient_test(&s, &j, &b1, 2).unwrap();
        assert!(outcome.holds);
        // a = 1 with J generated inside V(S): also in the quotient.
        let one = EnvElement::one(&h);
        let j_inside = alloc::vec![parse_env(&h, "i*C1*(i*C1 - 2)").unwrap()];
        assert!(ideal_quotient_test(&s, &j_inside, &one, 2).unwrap().holds);
        // V({Phi_2}) : <<1>> does not contain B1; witness returned.
        let outcome = ideal_quotient_test(
            &alloc::vec![phi2],
            &alloc::vec![EnvElement::one(&h)],
            &b1,
            1,
        )
        .unwrap();
        assert!(!outcome.holds);
        assert!(outcome.witness.is_some());
    }

    #[test]
    fn f3_demo_passes() {
        let report = f3_demo().unwrap();
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn galois_sanity_on_heisenberg() {
        let h = TwoStepLieAlgebra::heisenberg();
        let phi2 = crate::heisenberg::phi_lambda(&rat_int(2)).unwrap();
        let s = alloc::vec![phi2];
        let probes = alloc::vec![parse_env(&h, "i*C1 - 2").unwrap()];
        let pool = heisenberg_pool();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let gens = alloc::vec![parse_env(&h, "i*C1 - 2").unwrap()];
        let samples: Vec<EnvElement> = (0..20)
            .map(|_| crate::ideal::random_ideal_element(&mut rng, &h, &gens, 2))
            .collect();
        assert!(galois_sanity(&s, &probes, &pool, &samples));
    }

    #[test]
    fn galois_sanity_on_free_three() {
        let f = TwoStepLieAlgebra::free_three();
        // S = one synthesized morphism; probes generate its kernel far
        // enough that every pool member vanishing on them kills the samples.
        let k = Subset::new(alloc::vec![1, 2]);
        let character = |c1: i64| {
            let mut val_c = alloc::vec![rat_int(0); 3];
            val_c[0] = rat_int(c1);
            let mut val_e = BTreeMap::new();
            val_e.insert(0usize, rat_int(0));
            Character::new(&f, k.clone(), val_e, val_c).unwrap()
        };
        let s = alloc::vec![character(1).to_morphism().unwrap()];
        let probes = alloc::vec![
            parse_env(&f, "i*C1 - 1").unwrap(),
            parse_env(&f, "C2").unwrap(),
            parse_env(&f, "C3").unwrap(),
            invariant_elem(&f, &k, 0).unwrap().scale(&gauss_i()),
        ];
        let mut pool: Vec<crate::morphism::FilteredMorphism> = [1i64, 2, -1]
            .into_iter()
            .map(|c1| character(c1).to_morphism().unwrap())
            .collect();
        // A second extension of the same character (extensions are not
        // unique): B2 -> -iQ, B3 -> -iP also realizes [B2,B3] = C1 -> -i.
        {
            use crate::weyl::WeylElement;
            let images = alloc::vec![
                WeylElement::zero(1),
                WeylElement::q_gen(1, 0).unwrap().scale(&-gauss_i()),
                WeylElement::p_gen(1, 0).unwrap().scale(&-gauss_i()),
                WeylElement::scalar(1, -gauss_i()),
                WeylElement::zero(1),
                WeylElement::zero(1),
            ];
            pool.push(crate::morphism::FilteredMorphism::new(&f, 1, images).unwrap());
        }
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(8);
        let samples: Vec<EnvElement> = (0..20)
            .map(|_| crate::ideal::random_ideal_element(&mut rng, &f, &probes, 2))
            .collect();
        assert!(galois_sanity(&s, &probes, &pool, &samples));
    }

    #[test]
    fn identity_suite_on_heisenberg() {
        let h = TwoStepLieAlgebra::heisenberg();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(0);
        let report = run_identity_checks(&h, &mut rng, 30, 3).unwrap();
        assert!(report.all_pass(), "{report}");
    }
}
