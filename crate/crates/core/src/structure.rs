//! The symplectic form `J₂ₙ`, block sums, and the structural predicates
//! (symplectic, Hamiltonian, skew-Hamiltonian, involution, skew-involution).

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::matrix::Matrix;

/// `J₂ₙ = [[0, Iₙ], [−Iₙ, 0]]`.
pub fn symplectic_form(n: usize) -> Matrix {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = GaussianRational::one();
        j[(n + i, i)] = GaussianRational::from(-1);
    }
    j
}

/// Half-order `n` of an even-order square matrix.
pub fn half_order(m: &Matrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NonSquareInput {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() % 2 == 1 {
        return Err(Error::OddOrderInput(m.rows()));
    }
    Ok(m.rows() / 2)
}

/// `A ⊕ B`, the block-diagonal sum.
pub fn direct_sum(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    for m in [a, b] {
        if !m.is_square() {
            return Err(Error::NonSquareInput {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    let (p, q) = (a.rows(), b.rows());
    let mut out = Matrix::zeros(p + q, p + q);
    for i in 0..p {
        for j in 0..p {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..q {
        for j in 0..q {
            out[(p + i, p + j)] = b[(i, j)].clone();
        }
    }
    Ok(out)
}

/// Direct sum of a sequence of square matrices.
pub fn direct_sum_all<'a>(blocks: impl IntoIterator<Item = &'a Matrix>) -> Result<Matrix> {
    blocks
        .into_iter()
        .try_fold(Matrix::zeros(0, 0), |acc, b| direct_sum(&acc, b))
}

/// `A ⊞ B`: each operand is cut into four equal quadrants and the sums are
/// taken quadrant by quadrant, `(A₁⊕B₁, A₂⊕B₂; A₃⊕B₃, A₄⊕B₄)`.
pub fn expanding_sum(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let m = half_order(a)?;
    let n = half_order(b)?;
    let h = m + n;
    let mut out = Matrix::zeros(2 * h, 2 * h);
    for (qi, qj) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for i in 0..m {
            for j in 0..m {
                out[(qi * h + i, qj * h + j)] = a[(qi * m + i, qj * m + j)].clone();
            }
        }
        for i in 0..n {
            for j in 0..n {
                out[(qi * h + m + i, qj * h + m + j)] = b[(qi * n + i, qj * n + j)].clone();
            }
        }
    }
    Ok(out)
}

/// Left fold of `⊞` over a sequence; `⊞` is associative.
pub fn expanding_sum_all<'a>(blocks: impl IntoIterator<Item = &'a Matrix>) -> Result<Matrix> {
    blocks
        .into_iter()
        .try_fold(Matrix::zeros(0, 0), |acc, b| expanding_sum(&acc, b))
}

/// `gᵀ J g = J`.
pub fn is_symplectic(g: &Matrix) -> Result<bool> {
    let n = half_order(g)?;
    let j = symplectic_form(n);
    Ok(g.transpose().mul(&j).mul(g) == j)
}

/// `Xᵀ J = −J X`.
pub fn is_hamiltonian(x: &Matrix) -> Result<bool> {
    let n = half_order(x)?;
    let j = symplectic_form(n);
    Ok(x.transpose().mul(&j) == j.mul(x).neg())
}

/// `Xᵀ J = J X`.
pub fn is_skew_hamiltonian(x: &Matrix) -> Result<bool> {
    let n = half_order(x)?;
    let j = symplectic_form(n);
    Ok(x.transpose().mul(&j) == j.mul(x))
}

/// `g² = I`.
pub fn is_involution(g: &Matrix) -> Result<bool> {
    half_order(g)?;
    Ok(g.mul(g).is_identity())
}

/// `g² = −I`.
pub fn is_skew_involution(g: &Matrix) -> Result<bool> {
    half_order(g)?;
    Ok(g.mul(g).neg().is_identity())
}

/// The structure a subject matrix is certified against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    Hamiltonian,
    SkewHamiltonian,
}

impl Structure {
    pub fn holds(self, x: &Matrix) -> Result<bool> {
        match self {
            Structure::Hamiltonian => is_hamiltonian(x),
            Structure::SkewHamiltonian => is_skew_hamiltonian(x),
        }
    }
}

/// Inverse of a symplectic matrix, `g⁻¹ = −J gᵀ J`. The caller guarantees `g`
/// is symplectic.
pub fn symplectic_inverse(g: &Matrix) -> Matrix {
    let j = symplectic_form(g.rows() / 2);
    j.mul(&g.transpose()).mul(&j).neg()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_identities() {
        let j2 = symplectic_form(1);
        assert_eq!(j2.mul(&j2), Matrix::identity(2).neg());
        let j4 = symplectic_form(2);
        assert_eq!(j4.transpose(), j4.neg());
        assert_eq!(j4.inverse().unwrap(), j4.neg());
    }

    #[test]
    fn sums() {
        assert_eq!(
            direct_sum(&Matrix::identity(2), &Matrix::identity(3)).unwrap(),
            Matrix::identity(5)
        );
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[5, 6], &[7, 8]]);
        assert_eq!(
            expanding_sum(&a, &b).unwrap(),
            Matrix::from_i64(&[&[1, 0, 2, 0], &[0, 5, 0, 6], &[3, 0, 4, 0], &[0, 7, 0, 8]])
        );
        assert_eq!(
            expanding_sum(&Matrix::identity(2), &Matrix::identity(2)).unwrap(),
            Matrix::identity(4)
        );
        assert_eq!(
            expanding_sum(&symplectic_form(1), &symplectic_form(1)).unwrap(),
            symplectic_form(2)
        );
        assert_eq!(
            expanding_sum(&Matrix::identity(3), &Matrix::identity(2)),
            Err(Error::OddOrderInput(3))
        );
        assert!(matches!(
            direct_sum(&Matrix::zeros(1, 2), &Matrix::identity(1)),
            Err(Error::NonSquareInput { .. })
        ));
    }

    #[test]
    fn predicates() {
        let g = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let g_it = g.transpose().inverse().unwrap();
        let s = direct_sum(&g, &g_it).unwrap();
        assert!(is_symplectic(&s).unwrap());
        assert!(is_hamiltonian(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(is_skew_hamiltonian(&Matrix::identity(2)).unwrap());
        assert!(!is_hamiltonian(&Matrix::identity(2)).unwrap());
        assert!(is_skew_involution(&symplectic_form(2)).unwrap());
        assert!(is_involution(&Matrix::identity(4)).unwrap());
        assert_eq!(is_symplectic(&Matrix::identity(3)), Err(Error::OddOrderInput(3)));
        assert_eq!(symplectic_inverse(&s), s.inverse().unwrap());
    }
}
