//! Symplectic Jordan forms of Hamiltonian matrices and an explicit symplectic
//! similarity onto them.

pub mod decompose;
pub mod quadratic;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::jordan::{is_valid_hamiltonian_structure, jordan_block, JordanStructure};
use crate::matrix::Matrix;
use crate::structure::{expanding_sum_all, is_symplectic, symplectic_inverse};

pub use decompose::{
    block_order, decompose_hamiltonian, decompose_skew_hamiltonian, DecomposeOptions,
    Decomposition, EvenNilMode, ModelBlock, Normalization, Piece,
};

/// A canonical Hamiltonian block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalBlock {
    /// `J(λ, k) ⊕ −J(λ, k)ᵀ`, order `2k`.
    Pair { lambda: GaussianRational, k: usize },
    /// `Λ₂ₗ = (J(0, l), I; 0, −J(0, l)ᵀ)`, order `2l`.
    EvenNil { l: usize },
}

impl CanonicalBlock {
    pub fn half_order(&self) -> usize {
        self.to_model().half_order()
    }

    pub fn matrix(&self) -> Matrix {
        self.to_model().matrix()
    }

    pub fn to_model(&self) -> ModelBlock {
        match self {
            Self::Pair { lambda, k } => ModelBlock::Pair { lambda: lambda.clone(), k: *k },
            Self::EvenNil { l } => ModelBlock::EvenNil { l: *l, scale: GaussianRational::one() },
        }
    }

    /// `None` for scaled even-nilpotent or skew-Hamiltonian blocks.
    pub fn from_model(block: &ModelBlock) -> Option<Self> {
        match block {
            ModelBlock::Pair { lambda, k } => Some(Self::Pair { lambda: lambda.clone(), k: *k }),
            ModelBlock::EvenNil { l, scale } if scale.is_one() => Some(Self::EvenNil { l: *l }),
            _ => None,
        }
    }
}

/// How even-size nilpotent Jordan blocks are realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Policy {
    /// One `Λ₂ₗ` per block `J(0, 2l)`.
    Prop24,
    /// Blocks `J(0, 2l)` of multiplicity `2t + r` become `t` copies of
    /// `J(0,2l) ⊕ −J(0,2l)ᵀ` and `r` copies of `Λ₂ₗ`.
    ReverserFriendly,
}

impl Policy {
    pub fn options(self) -> DecomposeOptions {
        DecomposeOptions {
            even_nil: match self {
                Policy::Prop24 => EvenNilMode::Singles,
                Policy::ReverserFriendly => EvenNilMode::PreferPairs,
            },
            normalization: Normalization::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSpec {
    pub blocks: Vec<CanonicalBlock>,
    pub policy: Policy,
}

impl CanonicalSpec {
    /// Orders the blocks canonically.
    pub fn new(mut blocks: Vec<CanonicalBlock>, policy: Policy) -> Self {
        blocks.sort_by(|a, b| block_order(&a.to_model(), &b.to_model()));
        Self { blocks, policy }
    }

    pub fn half_order(&self) -> usize {
        self.blocks.iter().map(CanonicalBlock::half_order).sum()
    }
}

/// `⊞` of the blocks in spec order.
pub fn build(spec: &CanonicalSpec) -> Matrix {
    let mats: Vec<Matrix> = spec.blocks.iter().map(CanonicalBlock::matrix).collect();
    expanding_sum_all(&mats).expect("canonical blocks have even order")
}

/// `Δ₂ₗ = (J(0, l), E_ll; 0, −J(0, l)ᵀ)`.
pub fn build_delta(l: usize) -> Matrix {
    assert!(l >= 1, "l must be positive");
    let j = jordan_block(&GaussianRational::zero(), l);
    Matrix::from_fn(2 * l, 2 * l, |r, c| match (r < l, c < l) {
        (true, true) => j[(r, c)].clone(),
        (true, false) if r == l - 1 && c == 2 * l - 1 => GaussianRational::one(),
        (false, false) => -&j[(c - l, r - l)],
        _ => GaussianRational::zero(),
    })
}

/// The canonical spec realizing a valid Hamiltonian Jordan structure.
///
/// For `λ ≠ 0` the pair `{λ, −λ}` is represented by the member with
/// positive real part (or, on the imaginary axis, nonnegative imaginary
/// part).
pub fn spec_from_jordan(js: &JordanStructure, policy: Policy) -> Result<CanonicalSpec> {
    if !is_valid_hamiltonian_structure(js) {
        return Err(Error::InvalidHamiltonianStructure);
    }
    let mut blocks = Vec::new();
    for (b, m) in js.iter() {
        let (lambda, size) = (&b.lambda, b.size);
        if !lambda.is_zero() {
            if lambda.is_positive_representative() {
                blocks.extend((0..m).map(|_| CanonicalBlock::Pair { lambda: lambda.clone(), k: size }));
            }
        } else if size % 2 == 1 {
            blocks.extend((0..m / 2).map(|_| CanonicalBlock::Pair { lambda: lambda.clone(), k: size }));
        } else {
            let l = size / 2;
            let (pairs, singles) = match policy {
                Policy::Prop24 => (0, m),
                Policy::ReverserFriendly => (m / 2, m % 2),
            };
            blocks.extend((0..pairs).map(|_| CanonicalBlock::Pair { lambda: lambda.clone(), k: size }));
            blocks.extend((0..singles).map(|_| CanonicalBlock::EvenNil { l }));
        }
    }
    Ok(CanonicalSpec::new(blocks, policy))
}

/// A symplectic `S` with `S⁻¹·X·S = build(spec)` for the policy's spec.
pub fn symplectic_transform(x: &Matrix, policy: Policy) -> Result<(Matrix, CanonicalSpec)> {
    let d = decompose_hamiltonian(x, policy.options())?;
    let blocks = d
        .blocks()
        .map(|b| CanonicalBlock::from_model(b).expect("exact normalization yields canonical blocks"))
        .collect();
    let spec = CanonicalSpec { blocks, policy };
    let s = d.transform();
    debug_assert!(is_symplectic(&s).unwrap_or(false));
    debug_assert_eq!(symplectic_inverse(&s).mul(x).mul(&s), build(&spec));
    Ok((s, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::jordan_structure;
    use crate::random::random_symplectic;
    use crate::structure::is_hamiltonian;

    fn g(a: i64) -> GaussianRational {
        GaussianRational::from(a)
    }

    fn pair(lambda: i64, k: usize) -> CanonicalBlock {
        CanonicalBlock::Pair { lambda: g(lambda), k }
    }

    fn verify(x: &Matrix, s: &Matrix, spec: &CanonicalSpec) {
        assert!(is_symplectic(s).unwrap());
        assert_eq!(symplectic_inverse(s).mul(x).mul(s), build(spec));
    }

    #[test]
    fn build_examples() {
        let spec = |b| CanonicalSpec::new(vec![b], Policy::Prop24);
        assert_eq!(
            build(&spec(CanonicalBlock::EvenNil { l: 1 })),
            Matrix::from_i64(&[&[0, 1], &[0, 0]])
        );
        assert_eq!(build(&spec(pair(1, 1))), Matrix::diag(&[g(1), g(-1)]));
        let p03 = build(&spec(pair(0, 3)));
        assert_eq!(p03.rows(), 6);
        assert!(is_hamiltonian(&p03).unwrap());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(build_delta(1), Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(
            jordan_structure(&build_delta(2)).unwrap(),
            JordanStructure::from_triples([(g(0), 4, 1)])
        );
        for l in 1..=3 {
            let (s, spec) = symplectic_transform(&build_delta(l), Policy::Prop24).unwrap();
            assert_eq!(spec.blocks, vec![CanonicalBlock::EvenNil { l }]);
            verify(&build_delta(l), &s, &spec);
        }
    }

    #[test]
    fn spec_examples() {
        let js = JordanStructure::from_triples([(g(0), 2, 1)]);
        assert_eq!(
            spec_from_jordan(&js, Policy::Prop24).unwrap().blocks,
            vec![CanonicalBlock::EvenNil { l: 1 }]
        );
        let js = JordanStructure::from_triples([(g(0), 2, 2)]);
        assert_eq!(
            spec_from_jordan(&js, Policy::ReverserFriendly).unwrap().blocks,
            vec![pair(0, 2)]
        );
        let js = JordanStructure::from_triples([(g(2), 1, 1), (g(-2), 1, 1), (g(0), 3, 2)]);
        assert_eq!(
            spec_from_jordan(&js, Policy::Prop24).unwrap().blocks,
            vec![pair(0, 3), pair(2, 1)]
        );
        let bad = JordanStructure::from_triples([(g(0), 3, 1)]);
        assert_eq!(
            spec_from_jordan(&bad, Policy::Prop24),
            Err(Error::InvalidHamiltonianStructure)
        );
    }

    #[test]
    fn canonical_input_is_fixed() {
        let spec = CanonicalSpec::new(vec![pair(1, 2), CanonicalBlock::EvenNil { l: 2 }], Policy::Prop24);
        let x = build(&spec);
        let (s, got) = symplectic_transform(&x, Policy::Prop24).unwrap();
        assert_eq!(got, spec);
        verify(&x, &s, &got);
    }

    #[test]
    fn conjugated_pair_block() {
        for seed in 0..4 {
            let spec = CanonicalSpec::new(vec![pair(1, 2)], Policy::Prop24);
            let s0 = random_symplectic(2, seed);
            let x = s0.mul(&build(&spec)).mul(&symplectic_inverse(&s0));
            let (s, got) = symplectic_transform(&x, Policy::Prop24).unwrap();
            assert_eq!(got, spec);
            verify(&x, &s, &got);
        }
    }

    #[test]
    fn doubled_lambda_becomes_pair() {
        let spec = CanonicalSpec::new(
            vec![CanonicalBlock::EvenNil { l: 2 }, CanonicalBlock::EvenNil { l: 2 }],
            Policy::Prop24,
        );
        let x = build(&spec);
        let (s, got) = symplectic_transform(&x, Policy::ReverserFriendly).unwrap();
        assert_eq!(got.blocks, vec![pair(0, 4)]);
        verify(&x, &s, &got);
    }
}
