//! Enumeration of Jordan structures and canonical specs over a finite
//! eigenvalue set, plus seeded symplectic conjugates, for test corpora.

use crate::canonical::{build, spec_from_jordan, CanonicalSpec, Policy};
use crate::field::GaussianRational;
use crate::jordan::JordanStructure;
use crate::matrix::Matrix;
use crate::random::random_symplectic;
use crate::structure::symplectic_inverse;

/// `0, ±1, ±2, ±i`.
pub fn default_eigenvalues() -> Vec<GaussianRational> {
    [(0, 0), (1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1), (0, -1)]
        .iter()
        .map(|&(a, b)| GaussianRational::from_integers(a, b))
        .collect()
}

/// An indivisible summand of a Jordan structure: blocks `(λ, size)` with
/// multiplicities, and the order they occupy.
#[derive(Clone, Debug)]
struct Atom {
    blocks: Vec<(GaussianRational, usize, usize)>,
    order: usize,
}

fn multisets(atoms: &[Atom], max_order: usize) -> Vec<JordanStructure> {
    fn go(
        atoms: &[Atom],
        room: usize,
        acc: &mut Vec<(GaussianRational, usize, usize)>,
        out: &mut Vec<JordanStructure>,
    ) {
        let Some((first, rest)) = atoms.split_first() else {
            if !acc.is_empty() {
                out.push(JordanStructure::from_triples(acc.iter().cloned()));
            }
            return;
        };
        let mut copies = 0;
        loop {
            go(rest, room - copies * first.order, acc, out);
            if (copies + 1) * first.order > room {
                break;
            }
            copies += 1;
            acc.extend(first.blocks.iter().cloned());
        }
        for _ in 0..copies * first.blocks.len() {
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(atoms, max_order, &mut Vec::new(), &mut out);
    out
}

/// Every valid Hamiltonian Jordan structure of order at most `max_order`
/// with eigenvalues in `eigs`.
pub fn hamiltonian_structures(eigs: &[GaussianRational], max_order: usize) -> Vec<JordanStructure> {
    let mut atoms = Vec::new();
    for lambda in eigs {
        for size in 1..=max_order / 2 {
            if lambda.is_zero() {
                if size % 2 == 1 {
                    atoms.push(Atom {
                        blocks: vec![(lambda.clone(), size, 2)],
                        order: 2 * size,
                    });
                }
            } else if lambda.is_positive_representative() && eigs.contains(&-lambda) {
                atoms.push(Atom {
                    blocks: vec![(lambda.clone(), size, 1), (-lambda, size, 1)],
                    order: 2 * size,
                });
            }
        }
        if lambda.is_zero() {
            for size in (2..=max_order).step_by(2) {
                atoms.push(Atom {
                    blocks: vec![(lambda.clone(), size, 1)],
                    order: size,
                });
            }
        }
    }
    multisets(&atoms, max_order)
}

/// Every valid skew-Hamiltonian Jordan structure of order at most
/// `max_order` with eigenvalues in `eigs`.
pub fn skew_hamiltonian_structures(eigs: &[GaussianRational], max_order: usize) -> Vec<JordanStructure> {
    let atoms: Vec<Atom> = eigs
        .iter()
        .flat_map(|lambda| {
            (1..=max_order / 2).map(move |size| Atom {
                blocks: vec![(lambda.clone(), size, 2)],
                order: 2 * size,
            })
        })
        .collect();
    multisets(&atoms, max_order)
}

/// Canonical specs of every valid structure under both policies, without
/// duplicates.
pub fn canonical_specs(eigs: &[GaussianRational], max_order: usize) -> Vec<CanonicalSpec> {
    let mut out: Vec<CanonicalSpec> = Vec::new();
    for js in hamiltonian_structures(eigs, max_order) {
        for policy in [Policy::Prop24, Policy::ReverserFriendly] {
            let spec = spec_from_jordan(&js, policy).expect("enumerated structures are valid");
            if !out.iter().any(|s| s.blocks == spec.blocks) {
                out.push(spec);
            }
        }
    }
    out
}

/// `S₀ · X · S₀⁻¹` with `S₀ = random_symplectic(n, seed)`.
pub fn symplectic_conjugate(x: &Matrix, seed: u64) -> Matrix {
    let s0 = random_symplectic(x.rows() / 2, seed);
    s0.mul(x).mul(&symplectic_inverse(&s0))
}

/// `build(spec)` conjugated by a seeded random symplectic matrix.
pub fn conjugated_build(spec: &CanonicalSpec, seed: u64) -> Matrix {
    symplectic_conjugate(&build(spec), seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{is_valid_hamiltonian_structure, is_valid_skew_hamiltonian_structure};

    #[test]
    fn small_counts() {
        let eigs = default_eigenvalues();
        // Order 2: (0,1)×2, (0,2), and three ±λ pairs.
        assert_eq!(hamiltonian_structures(&eigs, 2).len(), 5);
        // Order 2 skew: seven eigenvalues, one block pair each.
        assert_eq!(skew_hamiltonian_structures(&eigs, 2).len(), 7);
    }

    #[test]
    fn enumerated_structures_are_valid_and_distinct() {
        let eigs = default_eigenvalues();
        let hs = hamiltonian_structures(&eigs, 8);
        assert!(hs.iter().all(|js| is_valid_hamiltonian_structure(js) && js.order() <= 8));
        for (i, a) in hs.iter().enumerate() {
            assert!(hs[i + 1..].iter().all(|b| a != b));
        }
        let ss = skew_hamiltonian_structures(&eigs, 8);
        assert!(ss.iter().all(|js| is_valid_skew_hamiltonian_structure(js) && js.order() <= 8));
    }
}
