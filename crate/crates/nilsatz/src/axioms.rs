//! Randomized checks of the algebra laws: associativity, unit laws, and the
//! *-involution axioms, exact on every sampled input.

use rand::Rng;

use crate::enveloping::EnvElement;
use crate::lie::AlgebraRef;
use crate::report::CheckReport;
use crate::sampling::{random_env, random_gauss, random_weyl};
use crate::weyl::WeylElement;

/// Laws of the enveloping algebra on random triples of bounded degree.
pub fn env_axioms<R: Rng + ?Sized>(
    alg: &AlgebraRef,
    rng: &mut R,
    cases: usize,
    max_degree: u32,
) -> CheckReport {
    let mut report = CheckReport::new();
    let mut assoc = true;
    let mut star_mul = true;
    let mut star_antilinear = true;
    let mut unit = true;
    for _ in 0..cases {
        let a = random_env(rng, alg, max_degree, 1, 3);
        let b = random_env(rng, alg, max_degree, 1, 3);
        let c = random_env(rng, alg, max_degree, 1, 3);
        let ab = a.checked_mul(&b).unwrap();
        assoc &= ab.checked_mul(&c).unwrap()
            == a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        star_mul &= ab.star() == b.star().checked_mul(&a.star()).unwrap();
        let z = random_gauss(rng, 4);
        let w = random_gauss(rng, 4);
        let combo = a.scale(&z).checked_add(&b.scale(&w)).unwrap();
        star_antilinear &= combo.star()
            == a.star()
                .scale(&z.conj())
                .checked_add(&b.star().scale(&w.conj()))
                .unwrap();
        let one = EnvElement::one(alg);
        unit &= a.checked_mul(&one).unwrap() == a && one.checked_mul(&a).unwrap() == a;
    }
    report.push(alloc::format!("enveloping associativity ({cases} cases)"), assoc);
    report.push(alloc::format!("enveloping star reverses products ({cases} cases)"), star_mul);
    report.push(alloc::format!("enveloping star antilinear ({cases} cases)"), star_antilinear);
    report.push(alloc::format!("enveloping unit laws ({cases} cases)"), unit);
    report
}

/// Laws of the Weyl algebra on random triples of bounded degree, plus the
/// nonvanishing of random sums of squares (the algebraic face of the
/// faithfulness of the Schroedinger representation).
pub fn weyl_axioms<R: Rng + ?Sized>(
    d: usize,
    rng: &mut R,
    cases: usize,
    max_degree: u32,
) -> CheckReport {
    let mut report = CheckReport::new();
    let mut assoc = true;
    let mut star_mul = true;
    let mut unit = true;
    let mut sos = true;
    for _ in 0..cases {
        let a = random_weyl(rng, d, max_degree, 3);
        let b = random_weyl(rng, d, max_degree, 3);
        let c = random_weyl(rng, d, max_degree, 3);
        let ab = a.checked_mul(&b).unwrap();
        assoc &= ab.checked_mul(&c).unwrap()
            == a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        star_mul &= ab.star() == b.star().checked_mul(&a.star()).unwrap();
        let one = WeylElement::one(d);
        unit &= a.checked_mul(&one).unwrap() == a && one.checked_mul(&a).unwrap() == a;

        // sum_j b_j^* b_j = 0 forces every b_j = 0
        let k = rng.random_range(1..=3);
        let mut sum = WeylElement::zero(d);
        let mut any_nonzero = false;
        for _ in 0..k {
            let bj = random_weyl(rng, d, 2, 2);
            any_nonzero |= !bj.is_zero();
            sum = sum
                .checked_add(&bj.star().checked_mul(&bj).unwrap())
                .unwrap();
        }
        if any_nonzero {
            sos &= !sum.is_zero();
        }
    }
    report.push(alloc::format!("weyl associativity ({cases} cases)"), assoc);
    report.push(alloc::format!("weyl star reverses products ({cases} cases)"), star_mul);
    report.push(alloc::format!("weyl unit laws ({cases} cases)"), unit);
    report.push(alloc::format!("weyl sums of squares nonzero ({cases} cases)"), sos);
    report
}
