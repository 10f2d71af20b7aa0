//! Seeded generators for the test corpus.
//!
//! Everything here is deterministic in the seed: the same `(n, seed)` always
//! yields the same matrix on every platform (ChaCha8 stream).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::GaussianRational;
use crate::matrix::Matrix;
use crate::structure::{direct_sum, symplectic_form};

/// Number of generator factors in [`random_symplectic`].
pub const DEFAULT_GENERATORS: usize = 4;

/// One factor of a random symplectic product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticGenerator {
    /// `diag(g, g⁻ᵀ)` with `g` unit upper triangular.
    UpperBlock(Matrix),
    /// `diag(g, g⁻ᵀ)` with `g` unit lower triangular.
    LowerBlock(Matrix),
    /// `(I, B; 0, I)` with `B` symmetric.
    Shear(Matrix),
    /// `J₂ₙ`.
    Form,
}

impl SymplecticGenerator {
    pub fn to_matrix(&self, n: usize) -> Matrix {
        match self {
            Self::UpperBlock(g) | Self::LowerBlock(g) => {
                let g_inv_t = g.inverse().expect("unit triangular").transpose();
                direct_sum(g, &g_inv_t).expect("square blocks")
            }
            Self::Shear(b) => {
                let mut m = Matrix::identity(2 * n);
                for i in 0..n {
                    for j in 0..n {
                        m[(i, n + j)] = b[(i, j)].clone();
                    }
                }
                m
            }
            Self::Form => symplectic_form(n),
        }
    }
}

/// A small Gaussian rational: numerators in `[−3, 3]`, denominators in `[1, 3]`.
fn small_entry(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re_num = rng.gen_range(-3i64..=3);
    let re_den = rng.gen_range(1i64..=3);
    let (im_num, im_den) = if rng.gen_bool(0.25) {
        (rng.gen_range(-3i64..=3), rng.gen_range(1i64..=3))
    } else {
        (0, 1)
    };
    GaussianRational::from_fractions(re_num, re_den, im_num, im_den)
}

fn sparse_entry(rng: &mut ChaCha8Rng) -> GaussianRational {
    if rng.gen_bool(0.5) {
        small_entry(rng)
    } else {
        GaussianRational::zero()
    }
}

/// Draws `count` generator factors for `Sp(2n)`.
pub fn symplectic_generators(n: usize, seed: u64, count: usize) -> Vec<SymplecticGenerator> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| match rng.gen_range(0..7) {
            0 | 1 => {
                let mut g = Matrix::identity(n);
                for i in 0..n {
                    for j in i + 1..n {
                        g[(i, j)] = sparse_entry(&mut rng);
                    }
                }
                SymplecticGenerator::UpperBlock(g)
            }
            2 | 3 => {
                let mut g = Matrix::identity(n);
                for i in 0..n {
                    for j in 0..i {
                        g[(i, j)] = sparse_entry(&mut rng);
                    }
                }
                SymplecticGenerator::LowerBlock(g)
            }
            4 | 5 => {
                let mut b = Matrix::zeros(n, n);
                for i in 0..n {
                    for j in i..n {
                        let v = sparse_entry(&mut rng);
                        b[(i, j)] = v.clone();
                        b[(j, i)] = v;
                    }
                }
                SymplecticGenerator::Shear(b)
            }
            _ => SymplecticGenerator::Form,
        })
        .collect()
}

/// A seeded element of `Sp(2n, ℚ(i))`: the product of
/// [`DEFAULT_GENERATORS`] random generator factors.
pub fn random_symplectic(n: usize, seed: u64) -> Matrix {
    random_symplectic_with(n, seed, DEFAULT_GENERATORS)
}

/// As [`random_symplectic`] with an explicit number of factors; zero factors
/// gives the identity.
pub fn random_symplectic_with(n: usize, seed: u64, count: usize) -> Matrix {
    assert!(n >= 1, "half-order must be positive");
    symplectic_generators(n, seed, count)
        .iter()
        .fold(Matrix::identity(2 * n), |acc, g| acc.mul(&g.to_matrix(n)))
}

/// A seeded invertible `m × m` matrix (product of unit lower and upper
/// triangular factors), for similarity tests outside the symplectic group.
pub fn random_invertible(m: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_1e55);
    let mut lower = Matrix::identity(m);
    let mut upper = Matrix::identity(m);
    for i in 0..m {
        for j in 0..i {
            lower[(i, j)] = sparse_entry(&mut rng);
            upper[(j, i)] = sparse_entry(&mut rng);
        }
    }
    lower.mul(&upper)
}

/// A seeded `m × m` matrix with small entries, about half of them zero.
pub fn random_matrix(m: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0a11_0c47);
    Matrix::from_fn(m, m, |_, _| sparse_entry(&mut rng))
}

/// A seeded Hamiltonian matrix `(A, B; C, −Aᵀ)` with `B`, `C` symmetric.
pub fn random_hamiltonian(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4a3d_17a0);
    let a = Matrix::from_fn(n, n, |_, _| sparse_entry(&mut rng));
    let mut b = Matrix::zeros(n, n);
    let mut c = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = sparse_entry(&mut rng);
            b[(i, j)] = v.clone();
            b[(j, i)] = v;
            let w = sparse_entry(&mut rng);
            c[(i, j)] = w.clone();
            c[(j, i)] = w;
        }
    }
    Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a[(i, j)].clone(),
        (true, false) => b[(i, j - n)].clone(),
        (false, true) => c[(i - n, j)].clone(),
        (false, false) => -&a[(j - n, i - n)],
    })
}
