//! Skew-Hamiltonian matrices: symplectic canonical form, similarity to the
//! negative, and symplectic involutions conjugating `X` to `−X`.

use crate::canonical::{block_order, decompose_skew_hamiltonian, Decomposition, ModelBlock, Piece};
use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::jordan::{jordan_structure, JordanStructure};
use crate::matrix::Matrix;
use crate::reality::{sigma, ReverserCertificate, ReverserKind};
use crate::structure::{
    direct_sum, direct_sum_all, expanding_sum_all, is_skew_hamiltonian, symplectic_inverse,
    Structure,
};

/// `J(λ, k) ⊕ J(λ, k)ᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBlock {
    pub lambda: GaussianRational,
    pub k: usize,
}

impl SkewBlock {
    fn to_model(&self) -> ModelBlock {
        ModelBlock::Skew {
            lambda: self.lambda.clone(),
            k: self.k,
        }
    }

    pub fn matrix(&self) -> Matrix {
        self.to_model().matrix()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCanonicalSpec {
    pub blocks: Vec<SkewBlock>,
}

impl SkewCanonicalSpec {
    /// Orders the blocks canonically.
    pub fn new(mut blocks: Vec<SkewBlock>) -> Self {
        blocks.sort_by(|a, b| block_order(&a.to_model(), &b.to_model()));
        Self { blocks }
    }
}

/// `⊞` of the blocks in spec order.
pub fn build_skew(spec: &SkewCanonicalSpec) -> Matrix {
    let mats: Vec<Matrix> = spec.blocks.iter().map(SkewBlock::matrix).collect();
    expanding_sum_all(&mats).expect("blocks have even order")
}

fn spec_of(d: &Decomposition) -> SkewCanonicalSpec {
    let blocks = d
        .blocks()
        .map(|b| match b {
            ModelBlock::Skew { lambda, k } => SkewBlock {
                lambda: lambda.clone(),
                k: *k,
            },
            other => unreachable!("skew-Hamiltonian decomposition produced {other:?}"),
        })
        .collect();
    SkewCanonicalSpec { blocks }
}

/// A symplectic `S` with `S⁻¹·X·S = build_skew(spec)`.
pub fn skew_canonical_transform(x: &Matrix) -> Result<(Matrix, SkewCanonicalSpec)> {
    let d = decompose_skew_hamiltonian(x)?;
    Ok((d.transform(), spec_of(&d)))
}

/// Whether `X` is similar to `−X`: the Jordan multiset is symmetric under
/// `λ ↦ −λ`.
pub fn is_similar_to_negative(x: &Matrix) -> Result<bool> {
    Ok(negation_symmetric(&skew_structure(x)?))
}

fn skew_structure(x: &Matrix) -> Result<JordanStructure> {
    if !is_skew_hamiltonian(x)? {
        return Err(Error::NotSkewHamiltonian);
    }
    jordan_structure(x)
}

fn negation_symmetric(js: &JordanStructure) -> bool {
    js.negated() == *js
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NegationOutcome {
    Certified(ReverserCertificate),
    /// Carries the Jordan structure whose `λ ↦ −λ` image differs from it.
    NotSimilarToNegative(JordanStructure),
}

/// `h = (0, I; I, 0)` of order `2k`.
fn swap(k: usize) -> Matrix {
    Matrix::from_fn(2 * k, 2 * k, |i, j| {
        if i + k == j || j + k == i {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    })
}

/// The involution for `(J(λ,k) ⊕ J(λ,k)ᵀ) ⊞ (J(−λ,k) ⊕ J(−λ,k)ᵀ)`.
///
/// `T = diag(I, σ, I, σ)` carries that block to `Q ⊕ Qᵀ` with
/// `Q = J(λ,k) ⊕ −J(λ,k)`, where `diag(h, h)` negates it.
fn paired_involution(k: usize) -> Matrix {
    let id = Matrix::identity(k);
    let s = sigma(k);
    let t = direct_sum_all([&id, &s, &id, &s]).expect("square");
    let h = swap(k);
    let g = direct_sum(&h, &h).expect("square");
    // T is its own inverse.
    t.mul(&g).mul(&t)
}

/// A symplectic involution `g` with `g·X·g⁻¹ = −X`, when `X` is similar to
/// `−X`.
pub fn negation_involution(x: &Matrix) -> Result<NegationOutcome> {
    let js = skew_structure(x)?;
    if !negation_symmetric(&js) {
        return Ok(NegationOutcome::NotSimilarToNegative(js));
    }
    let d = decompose_skew_hamiltonian(x)?;
    let mut pool: Vec<Option<Piece>> = d.pieces.into_iter().map(Some).collect();
    let mut ordered = Vec::new();
    let mut local = Vec::new();
    for i in 0..pool.len() {
        let Some(piece) = pool[i].take() else {
            continue;
        };
        let ModelBlock::Skew { lambda, k } = piece.block.clone() else {
            unreachable!("skew-Hamiltonian decomposition");
        };
        if lambda.is_zero() {
            let s = sigma(k);
            local.push(direct_sum(&s, &s).expect("square"));
            ordered.push(piece);
            continue;
        }
        let partner = ModelBlock::Skew { lambda: -&lambda, k };
        let j = pool
            .iter()
            .position(|p| p.as_ref().is_some_and(|p| p.block == partner))
            .expect("negation-symmetric structure pairs every block");
        let other = pool[j].take().expect("present");
        let (first, second) = if lambda.is_positive_representative() {
            (piece, other)
        } else {
            (other, piece)
        };
        local.push(paired_involution(k));
        ordered.push(first);
        ordered.push(second);
    }
    let d = Decomposition { pieces: ordered };
    let s = d.transform();
    let g = s
        .mul(&expanding_sum_all(&local).expect("even order"))
        .mul(&symplectic_inverse(&s));
    Ok(NegationOutcome::Certified(ReverserCertificate::issue(
        x,
        g,
        ReverserKind::Involution,
        Structure::SkewHamiltonian,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::jordan_block;
    use crate::structure::is_symplectic;

    fn g(a: i64) -> GaussianRational {
        GaussianRational::from(a)
    }

    #[test]
    fn canonical_identity() {
        let (s, spec) = skew_canonical_transform(&Matrix::identity(2)).unwrap();
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(spec.blocks, vec![SkewBlock { lambda: g(1), k: 1 }]);
    }

    #[test]
    fn canonical_transform_verifies() {
        let x = SkewBlock { lambda: g(0), k: 2 }.matrix();
        let (s, spec) = skew_canonical_transform(&x).unwrap();
        assert!(is_symplectic(&s).unwrap());
        assert_eq!(symplectic_inverse(&s).mul(&x).mul(&s), build_skew(&spec));
    }

    #[test]
    fn similarity_examples() {
        let j = jordan_block(&g(0), 2);
        let p0 = direct_sum(&j, &j.transpose()).unwrap();
        assert!(is_similar_to_negative(&p0).unwrap());
        assert!(!is_similar_to_negative(&Matrix::identity(2)).unwrap());
        let q = Matrix::diag(&[g(1), g(-1), g(1), g(-1)]);
        assert!(is_similar_to_negative(&q).unwrap());
        assert_eq!(
            is_similar_to_negative(&Matrix::from_i64(&[&[0, 1], &[0, 0]])),
            Err(Error::NotSkewHamiltonian)
        );
    }

    #[test]
    fn worked_involutions() {
        let j = jordan_block(&g(0), 2);
        let p0 = direct_sum(&j, &j.transpose()).unwrap();
        let NegationOutcome::Certified(c) = negation_involution(&p0).unwrap() else {
            panic!("P0 is similar to its negative");
        };
        assert_eq!(c.reverser, Matrix::diag(&[g(1), g(-1), g(1), g(-1)]));

        let q = Matrix::diag(&[g(1), g(-1), g(1), g(-1)]);
        let NegationOutcome::Certified(c) = negation_involution(&q).unwrap() else {
            panic!("Q ⊕ Qᵀ is similar to its negative");
        };
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(c.reverser, direct_sum(&h, &h).unwrap());

        assert!(matches!(
            negation_involution(&Matrix::identity(2)).unwrap(),
            NegationOutcome::NotSimilarToNegative(_)
        ));
    }
}
