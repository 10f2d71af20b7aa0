use proptest::prelude::*;
use spreal_core::canonical::{build, spec_from_jordan, EvenNilMode, Policy};
use spreal_core::corpus::{conjugated_build, default_eigenvalues, hamiltonian_structures};
use spreal_core::jordan::{JordanBlock, JordanStructure};
use spreal_core::reality::{
    classify_strong, skew_reverser, skew_reverser_with, strong_reverser, verify_reverser,
    ReverserKind, StrongOutcome,
};
use spreal_core::structure::{expanding_sum, symplectic_form};
use spreal_core::{Error, GaussianRational, Matrix};

fn structures() -> Vec<JordanStructure> {
    hamiltonian_structures(&default_eigenvalues(), 8)
}

/// Strong reality read off the multiset: odd-size nilpotent blocks are
/// unconstrained, every other block needs even multiplicity.
fn strongly_real_by_parity(js: &JordanStructure) -> bool {
    js.iter().all(|(b, m)| (b.lambda.is_zero() && b.size % 2 == 1) || m % 2 == 0)
}

/// Repeated even nilpotent chains are paired through isotropic vectors found
/// by bounded search, which may come up empty.
fn may_need_extension(js: &JordanStructure) -> bool {
    js.iter().any(|(b, m)| b.lambda.is_zero() && b.size % 2 == 0 && m >= 3)
}

fn strong_or_extension(x: &Matrix, js: &JordanStructure) -> Option<StrongOutcome> {
    match strong_reverser(x) {
        Ok(outcome) => Some(outcome),
        Err(Error::FieldExtensionRequired(_)) if may_need_extension(js) => None,
        Err(e) => panic!("{e}"),
    }
}

fn reverses(g: &Matrix, x: &Matrix) -> bool {
    g.mul(x) == x.mul(g).neg()
}

fn symplectic(g: &Matrix) -> bool {
    let j = symplectic_form(g.rows() / 2);
    g.transpose().mul(&j).mul(g) == j
}

fn structure_index() -> impl Strategy<Value = prop::sample::Index> {
    any::<prop::sample::Index>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reversers_differ_by_centralizer(index in structure_index(), seed in 0u64..1000) {
        let all = structures();
        let js = index.get(&all);
        let x = conjugated_build(&spec_from_jordan(js, Policy::Prop24).unwrap(), seed);
        let g1 = skew_reverser(&x).unwrap().reverser;
        let g2 = match strong_or_extension(&x, js) {
            Some(StrongOutcome::Certified(c)) => c.reverser,
            _ => match skew_reverser_with(&x, EvenNilMode::PreferPairs) {
                Ok(c) => c.reverser,
                Err(Error::FieldExtensionRequired(_)) if may_need_extension(js) => return Ok(()),
                Err(e) => panic!("{e}"),
            },
        };
        prop_assert!(reverses(&g1, &x) && reverses(&g2, &x));
        let c = g1.mul(&g2.inverse().unwrap());
        prop_assert_eq!(c.mul(&x), x.mul(&c));
    }

    #[test]
    fn skew_certificates_verify(index in structure_index(), seed in 0u64..1000, policy in prop_oneof![Just(Policy::Prop24), Just(Policy::ReverserFriendly)]) {
        let all = structures();
        let x = conjugated_build(&spec_from_jordan(index.get(&all), policy).unwrap(), seed);
        let cert = skew_reverser(&x).unwrap();
        let g = &cert.reverser;
        prop_assert!(symplectic(g) && reverses(g, &x));
        prop_assert!(g.mul(g).neg().is_identity());
        prop_assert!(verify_reverser(&x, g, ReverserKind::SkewInvolution).unwrap().all());
    }

    #[test]
    fn strong_reverser_follows_parity(index in structure_index(), seed in 0u64..1000) {
        let all = structures();
        let js = index.get(&all);
        let x = conjugated_build(&spec_from_jordan(js, Policy::Prop24).unwrap(), seed);
        match strong_or_extension(&x, js) {
            None => {}
            Some(StrongOutcome::Certified(cert)) => {
                prop_assert!(strongly_real_by_parity(js));
                let g = &cert.reverser;
                prop_assert!(symplectic(g) && reverses(g, &x) && g.mul(g).is_identity());
            }
            Some(StrongOutcome::NotStronglyReal(report)) => {
                prop_assert!(!strongly_real_by_parity(js));
                prop_assert!(!report.violations.is_empty());
            }
        }
    }

    #[test]
    fn involutions_combine_under_expanding_sum(a in structure_index(), b in structure_index(), seed in 0u64..1000) {
        let strong: Vec<JordanStructure> = structures()
            .into_iter()
            .filter(|js| js.order() <= 4 && strongly_real_by_parity(js))
            .collect();
        let build_one = |i: &prop::sample::Index, s: u64| {
            conjugated_build(&spec_from_jordan(i.get(&strong), Policy::ReverserFriendly).unwrap(), s)
        };
        let (x1, x2) = (build_one(&a, seed), build_one(&b, seed ^ 9));
        let reverser = |x: &Matrix| match strong_reverser(x).unwrap() {
            StrongOutcome::Certified(c) => c.reverser,
            StrongOutcome::NotStronglyReal(r) => panic!("parity says strongly real: {r:?}"),
        };
        let g = expanding_sum(&reverser(&x1), &reverser(&x2)).unwrap();
        let x = expanding_sum(&x1, &x2).unwrap();
        prop_assert!(symplectic(&g) && g.mul(&g).is_identity() && reverses(&g, &x));
    }

    #[test]
    fn paired_eigenvalue_parity(re in -3i64..=3, im in -3i64..=3, k in 1usize..=3, m in 1usize..=4) {
        prop_assume!(re != 0 || im != 0);
        let lambda = GaussianRational::from_integers(re, im);
        let js = JordanStructure::from_triples([(lambda.clone(), k, m), (-&lambda, k, m)]);
        let report = classify_strong(&js).unwrap();
        prop_assert_eq!(report.verdict, m % 2 == 0);
        if m % 2 == 1 {
            let mut expected = vec![(JordanBlock::new(lambda.clone(), k), m), (JordanBlock::new(-&lambda, k), m)];
            expected.sort_by(|a, b| a.0.cmp(&b.0));
            prop_assert_eq!(report.violations, expected);
        }
    }
}

#[test]
fn classification_matches_parity_on_canonical_forms() {
    for js in structures() {
        let report = classify_strong(&js).unwrap();
        assert_eq!(report.verdict, strongly_real_by_parity(&js), "{js:?}");
        let x = build(&spec_from_jordan(&js, Policy::ReverserFriendly).unwrap());
        assert_eq!(matches!(strong_reverser(&x).unwrap(), StrongOutcome::Certified(_)), report.verdict);
    }
}
