//! Reversers of Hamiltonian matrices: symplectic skew-involutions for every
//! Hamiltonian matrix, symplectic involutions for strongly real ones, and
//! exact verification of both.

use crate::canonical::{
    decompose_hamiltonian, DecomposeOptions, Decomposition, EvenNilMode, ModelBlock,
    Normalization, Policy,
};
use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::jordan::{is_valid_hamiltonian_structure, jordan_structure, JordanBlock, JordanStructure};
use crate::matrix::Matrix;
use crate::structure::{
    direct_sum, expanding_sum_all, is_symplectic, symplectic_inverse, Structure,
};

/// `σ = diag(1, −1, 1, …)`.
pub fn sigma(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| match (i == j, i % 2) {
        (false, _) => GaussianRational::zero(),
        (true, 0) => GaussianRational::one(),
        (true, _) => GaussianRational::from(-1),
    })
}

/// The exchange matrix: ones on the antidiagonal.
pub fn tau(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        if i + j + 1 == n {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    })
}

fn quadrants(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    let (p, q) = (a.rows(), d.rows());
    Matrix::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
        (true, true) => a[(i, j)].clone(),
        (true, false) => b[(i, j - p)].clone(),
        (false, true) => c[(i - p, j)].clone(),
        (false, false) => d[(i - p, j - p)].clone(),
    })
}

/// `diag(σ·i, −σ·i)`, a skew-involution reversing `Λ₂ₗ` (and every scaled
/// variant `(J(0,l), c·I; 0, −J(0,l)ᵀ)`).
pub fn skew_reverser_even_nil(l: usize) -> Matrix {
    let si = sigma(l).scalar_mul(&GaussianRational::i());
    direct_sum(&si, &si.neg()).expect("square")
}

/// `(0, τ; −τ, 0)`, a skew-involution reversing `J(λ,k) ⊕ −J(λ,k)ᵀ` for
/// every `λ`.
pub fn skew_reverser_pair(_lambda: &GaussianRational, k: usize) -> Matrix {
    let t = tau(k);
    quadrants(&Matrix::zeros(k, k), &t, &t.neg(), &Matrix::zeros(k, k))
}

/// Involution reversers.
///
/// For `λ = 0`: `diag(σ, σ)` of order `2k`, reversing `J(0,k) ⊕ −J(0,k)ᵀ`.
/// For `λ ≠ 0`: `(0, h; −h, 0)` with `h = (0, τ; −τ, 0)`, of order `4k`,
/// reversing `(J(λ,k) ⊕ −J(λ,k)ᵀ) ⊞ (J(λ,k) ⊕ −J(λ,k)ᵀ)`.
pub fn involution_reverser_pair_block(lambda: &GaussianRational, k: usize) -> Matrix {
    if lambda.is_zero() {
        let s = sigma(k);
        return direct_sum(&s, &s).expect("square");
    }
    let h = skew_reverser_pair(lambda, k);
    let z = Matrix::zeros(2 * k, 2 * k);
    quadrants(&z, &h, &h.neg(), &z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReverserKind {
    /// `g² = I`.
    Involution,
    /// `g² = −I`.
    SkewInvolution,
}

/// Results of the four exact certificate checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Checks {
    /// `gᵀ J g = J`.
    pub symplectic: bool,
    /// `g² = I` or `g² = −I`, per the kind.
    pub order: bool,
    /// `g` invertible and `g X = −X g`.
    pub reversal: bool,
    /// The subject has the claimed structure.
    pub subject: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.symplectic && self.order && self.reversal && self.subject
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverserCertificate {
    pub subject: Matrix,
    pub reverser: Matrix,
    pub kind: ReverserKind,
    pub structure: Structure,
    pub checks: Checks,
}

impl ReverserCertificate {
    /// Verifies `g` against `x` and returns a certificate only if every
    /// check passes.
    pub(crate) fn issue(x: &Matrix, g: Matrix, kind: ReverserKind, structure: Structure) -> Self {
        let checks = verify_with_structure(x, &g, kind, structure).expect("conformable by construction");
        assert!(checks.all(), "constructed reverser failed verification: {checks:?}");
        Self {
            subject: x.clone(),
            reverser: g,
            kind,
            structure,
            checks,
        }
    }
}

/// Verifies all four checks exactly for a Hamiltonian subject.
pub fn verify_reverser(x: &Matrix, g: &Matrix, kind: ReverserKind) -> Result<Checks> {
    verify_with_structure(x, g, kind, Structure::Hamiltonian)
}

/// As [`verify_reverser`] with an explicit subject structure.
pub fn verify_with_structure(
    x: &Matrix,
    g: &Matrix,
    kind: ReverserKind,
    structure: Structure,
) -> Result<Checks> {
    let conformable = x.is_square()
        && g.is_square()
        && x.rows() == g.rows()
        && x.rows().is_multiple_of(2)
        && x.rows() > 0;
    if !conformable {
        return Err(Error::DimensionMismatch(format!(
            "subject {}x{} and reverser {}x{} must be square of equal even order",
            x.rows(),
            x.cols(),
            g.rows(),
            g.cols()
        )));
    }
    let g2 = g.mul(g);
    let order = match kind {
        ReverserKind::Involution => g2.is_identity(),
        ReverserKind::SkewInvolution => g2.neg().is_identity(),
    };
    let reversal = g.inverse().is_ok() && g.mul(x) == x.mul(g).neg();
    Ok(Checks {
        symplectic: is_symplectic(g)?,
        order,
        reversal,
        subject: structure.holds(x)?,
    })
}

/// `S · (⊞ gᵢ) · S⁻¹`.
fn conjugate_back(d: &Decomposition, local: &[Matrix]) -> Matrix {
    let s = d.transform();
    let g = expanding_sum_all(local).expect("reversers have even order");
    s.mul(&g).mul(&symplectic_inverse(&s))
}

/// A skew-involution reverser for any Hamiltonian matrix with spectrum in
/// ℚ(i).
///
/// Even nilpotent chains are normalized only up to a scalar, which the
/// block reverser `diag(σi, −σi)` tolerates, so no square roots are needed.
pub fn skew_reverser(x: &Matrix) -> Result<ReverserCertificate> {
    skew_reverser_with(x, EvenNilMode::Singles)
}

/// As [`skew_reverser`], choosing how self-paired even nilpotent chains are
/// grouped. Different modes generally give different reversers.
pub fn skew_reverser_with(x: &Matrix, mode: EvenNilMode) -> Result<ReverserCertificate> {
    let d = decompose_hamiltonian(
        x,
        DecomposeOptions {
            even_nil: mode,
            normalization: Normalization::Scaled,
        },
    )?;
    let local: Vec<Matrix> = d
        .blocks()
        .map(|b| match b {
            ModelBlock::Pair { lambda, k } => skew_reverser_pair(lambda, *k),
            ModelBlock::EvenNil { l, .. } => skew_reverser_even_nil(*l),
            ModelBlock::Skew { .. } => unreachable!("Hamiltonian decomposition"),
        })
        .collect();
    let g = conjugate_back(&d, &local);
    Ok(ReverserCertificate::issue(x, g, ReverserKind::SkewInvolution, Structure::Hamiltonian))
}

/// Verdict of the strong-reality classification with the offending blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongRealityReport {
    pub verdict: bool,
    pub violations: Vec<(JordanBlock, usize)>,
}

/// A Hamiltonian matrix is strongly real exactly when every nilpotent block
/// of even size and every block with nonzero eigenvalue has even
/// multiplicity.
pub fn classify_strong(js: &JordanStructure) -> Result<StrongRealityReport> {
    if !is_valid_hamiltonian_structure(js) {
        return Err(Error::InvalidHamiltonianStructure);
    }
    let violations: Vec<(JordanBlock, usize)> = js
        .iter()
        .filter(|(b, m)| {
            let needs_even = !b.lambda.is_zero() || b.size % 2 == 0;
            needs_even && m % 2 == 1
        })
        .map(|(b, m)| (b.clone(), m))
        .collect();
    Ok(StrongRealityReport {
        verdict: violations.is_empty(),
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongOutcome {
    Certified(ReverserCertificate),
    NotStronglyReal(StrongRealityReport),
}

/// An involution reverser when one exists, otherwise the failing report.
pub fn strong_reverser(x: &Matrix) -> Result<StrongOutcome> {
    if !crate::structure::is_hamiltonian(x)? {
        return Err(Error::NotHamiltonian);
    }
    let report = classify_strong(&jordan_structure(x)?)?;
    if !report.verdict {
        return Ok(StrongOutcome::NotStronglyReal(report));
    }
    let d = decompose_hamiltonian(x, Policy::ReverserFriendly.options())?;
    let blocks: Vec<&ModelBlock> = d.blocks().collect();
    let mut local = Vec::new();
    let mut i = 0;
    while i < blocks.len() {
        match blocks[i] {
            ModelBlock::Pair { lambda, k } if lambda.is_zero() => {
                local.push(involution_reverser_pair_block(lambda, *k));
                i += 1;
            }
            ModelBlock::Pair { lambda, k } => {
                assert_eq!(blocks.get(i + 1), Some(&blocks[i]), "nonzero blocks come in equal pairs");
                local.push(involution_reverser_pair_block(lambda, *k));
                i += 2;
            }
            other => unreachable!("strongly real decomposition produced {other:?}"),
        }
    }
    let g = conjugate_back(&d, &local);
    Ok(StrongOutcome::Certified(ReverserCertificate::issue(
        x,
        g,
        ReverserKind::Involution,
        Structure::Hamiltonian,
    )))
}
