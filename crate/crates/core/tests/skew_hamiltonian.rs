use std::collections::BTreeMap;

use proptest::prelude::*;
use spreal_core::corpus::{default_eigenvalues, skew_hamiltonian_structures, symplectic_conjugate};
use spreal_core::jordan::{jordan_structure, JordanStructure};
use spreal_core::skew_hamiltonian::{
    build_skew, is_similar_to_negative, negation_involution, skew_canonical_transform, NegationOutcome,
    SkewBlock, SkewCanonicalSpec,
};
use spreal_core::structure::{expanding_sum, is_skew_hamiltonian, symplectic_form, symplectic_inverse};
use spreal_core::Matrix;

fn structures() -> Vec<JordanStructure> {
    skew_hamiltonian_structures(&default_eigenvalues(), 8)
}

/// Each skew-Hamiltonian Jordan block appears twice; the canonical form
/// takes one `J(λ,k) ⊕ J(λ,k)ᵀ` per pair.
fn canonical(js: &JordanStructure) -> Matrix {
    let blocks = js
        .iter()
        .flat_map(|(b, m)| (0..m / 2).map(move |_| SkewBlock { lambda: b.lambda.clone(), k: b.size }))
        .collect();
    build_skew(&SkewCanonicalSpec::new(blocks))
}

fn negation_symmetric(js: &JordanStructure) -> bool {
    let counts: BTreeMap<String, usize> =
        js.iter().map(|(b, m)| (format!("{}|{}", b.lambda, b.size), m)).collect();
    js.iter()
        .all(|(b, m)| counts.get(&format!("{}|{}", -&b.lambda, b.size)) == Some(&m))
}

fn negation_involution_of(x: &Matrix) -> Option<Matrix> {
    match negation_involution(x).unwrap() {
        NegationOutcome::Certified(c) => Some(c.reverser),
        NegationOutcome::NotSimilarToNegative(_) => None,
    }
}

fn checks_out(g: &Matrix, x: &Matrix) -> bool {
    let j = symplectic_form(g.rows() / 2);
    g.transpose().mul(&j).mul(g) == j && g.mul(g).is_identity() && g.mul(x) == x.mul(g).neg()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_transform_verifies(index in any::<prop::sample::Index>(), seed in 0u64..1000) {
        let all = structures();
        let x = symplectic_conjugate(&canonical(index.get(&all)), seed);
        prop_assert!(is_skew_hamiltonian(&x).unwrap());
        let (s, spec) = skew_canonical_transform(&x).unwrap();
        prop_assert_eq!(symplectic_inverse(&s).mul(&x).mul(&s), build_skew(&spec));
        prop_assert_eq!(s.mul(&symplectic_inverse(&s)), Matrix::identity(x.rows()));
    }

    #[test]
    fn negation_follows_multiset(index in any::<prop::sample::Index>(), seed in 0u64..1000) {
        let all = structures();
        let js = index.get(&all);
        let x = symplectic_conjugate(&canonical(js), seed);
        let similar = is_similar_to_negative(&x).unwrap();
        prop_assert_eq!(similar, negation_symmetric(js));
        match negation_involution_of(&x) {
            Some(g) => prop_assert!(similar && checks_out(&g, &x)),
            None => {
                prop_assert!(!similar);
                prop_assert_ne!(jordan_structure(&x).unwrap(), jordan_structure(&x.neg()).unwrap());
            }
        }
    }

    #[test]
    fn involutions_combine_under_expanding_sum(a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), seed in 0u64..1000) {
        let symmetric: Vec<JordanStructure> =
            skew_hamiltonian_structures(&default_eigenvalues(), 4).into_iter().filter(negation_symmetric).collect();
        let x1 = symplectic_conjugate(&canonical(a.get(&symmetric)), seed);
        let x2 = symplectic_conjugate(&canonical(b.get(&symmetric)), seed ^ 5);
        let g = expanding_sum(&negation_involution_of(&x1).unwrap(), &negation_involution_of(&x2).unwrap()).unwrap();
        prop_assert!(checks_out(&g, &expanding_sum(&x1, &x2).unwrap()));
    }
}
