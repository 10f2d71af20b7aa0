//! Exact Jordan structure: eigenvalues in ℚ(i) plus the rank-sequence
//! multiplicity formula.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::field::GaussianRational;
use crate::matrix::Matrix;
use crate::poly;

/// `J(λ, k)`: one Jordan block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JordanBlock {
    pub lambda: GaussianRational,
    pub size: usize,
}

impl JordanBlock {
    pub fn new(lambda: GaussianRational, size: usize) -> Self {
        assert!(size >= 1, "Jordan blocks have positive size");
        Self { lambda, size }
    }

    pub fn to_matrix(&self) -> Matrix {
        jordan_block(&self.lambda, self.size)
    }
}

impl Ord for JordanBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lambda
            .lex_cmp(&other.lambda)
            .then(self.size.cmp(&other.size))
    }
}

impl PartialOrd for JordanBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for JordanBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({}, {})", self.lambda, self.size)
    }
}

/// Multiset of Jordan blocks, iterated in `(re λ, im λ, size)` order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct JordanStructure {
    blocks: BTreeMap<JordanBlock, usize>,
}

impl JordanStructure {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a structure from `(λ, size, multiplicity)` triples; repeated
    /// keys accumulate.
    pub fn from_triples(
        triples: impl IntoIterator<Item = (GaussianRational, usize, usize)>,
    ) -> Self {
        let mut js = Self::new();
        for (lambda, size, mult) in triples {
            js.insert(JordanBlock::new(lambda, size), mult);
        }
        js
    }

    pub fn insert(&mut self, block: JordanBlock, mult: usize) {
        if mult > 0 {
            *self.blocks.entry(block).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, lambda: &GaussianRational, size: usize) -> usize {
        self.blocks
            .get(&JordanBlock::new(lambda.clone(), size))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&JordanBlock, usize)> {
        self.blocks.iter().map(|(b, m)| (b, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total matrix order `Σ size · multiplicity`.
    pub fn order(&self) -> usize {
        self.iter().map(|(b, m)| b.size * m).sum()
    }

    /// The structure of `−A` given that of `A`.
    pub fn negated(&self) -> Self {
        Self::from_triples(self.iter().map(|(b, m)| (-&b.lambda, b.size, m)))
    }

    /// The block-diagonal Jordan matrix, blocks repeated by multiplicity.
    pub fn to_matrix(&self) -> Matrix {
        let blocks: Vec<Matrix> = self
            .iter()
            .flat_map(|(b, m)| std::iter::repeat_n(b.to_matrix(), m))
            .collect();
        crate::structure::direct_sum_all(&blocks).expect("Jordan blocks are square")
    }
}

impl fmt::Debug for JordanStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.blocks.iter()).finish()
    }
}

/// `J(λ, m)`: `λ` on the diagonal, ones on the superdiagonal.
pub fn jordan_block(lambda: &GaussianRational, m: usize) -> Matrix {
    Matrix::from_fn(m, m, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    })
}

pub use poly::eigenvalues;

/// Distinct eigenvalues with algebraic multiplicity, in `(re, im)` order.
pub fn distinct_eigenvalues(a: &Matrix) -> Result<Vec<(GaussianRational, usize)>> {
    let mut out: Vec<(GaussianRational, usize)> = Vec::new();
    for ev in eigenvalues(a)? {
        match out.last_mut() {
            Some((last, m)) if *last == ev => *m += 1,
            _ => out.push((ev, 1)),
        }
    }
    Ok(out)
}

/// Jordan structure from `mult(λ,k) = r_{k−1} − 2r_k + r_{k+1}`,
/// `r_j = rank((A − λI)ʲ)`.
pub fn jordan_structure(a: &Matrix) -> Result<JordanStructure> {
    let n = a.rows();
    let mut js = JordanStructure::new();
    for (lambda, alg) in distinct_eigenvalues(a)? {
        let shifted = a.shift(&lambda);
        let mut ranks = vec![n];
        let mut power = Matrix::identity(n);
        for _ in 0..=alg {
            power = power.mul(&shifted);
            ranks.push(power.rank());
        }
        for k in 1..=alg {
            let mult = ranks[k - 1] + ranks[k + 1] - 2 * ranks[k];
            js.insert(JordanBlock::new(lambda.clone(), k), mult);
        }
    }
    Ok(js)
}

/// Realizable by a Hamiltonian matrix: `±λ` blocks balance for `λ ≠ 0`, and
/// odd-size nilpotent blocks come in pairs.
pub fn is_valid_hamiltonian_structure(js: &JordanStructure) -> bool {
    !js.is_empty()
        && js.iter().all(|(b, m)| {
            if b.lambda.is_zero() {
                b.size % 2 == 0 || m % 2 == 0
            } else {
                js.multiplicity(&-&b.lambda, b.size) == m
            }
        })
}

/// Realizable by a skew-Hamiltonian matrix: every block has even multiplicity.
pub fn is_valid_skew_hamiltonian_structure(js: &JordanStructure) -> bool {
    !js.is_empty() && js.iter().all(|(_, m)| m % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::direct_sum;

    fn g(a: i64) -> GaussianRational {
        GaussianRational::from(a)
    }

    #[test]
    fn block_examples() {
        assert_eq!(jordan_block(&g(0), 2), Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(jordan_block(&g(7), 1), Matrix::from_i64(&[&[7]]));
        let ji = jordan_block(&GaussianRational::i(), 3);
        assert_eq!(ji[(1, 1)], GaussianRational::i());
        assert_eq!(ji[(1, 2)], g(1));
        assert_eq!(ji[(0, 2)], g(0));
    }

    #[test]
    fn structure_examples() {
        let j = jordan_block(&g(0), 2);
        let pair = direct_sum(&j, &j.transpose().neg()).unwrap();
        assert_eq!(
            jordan_structure(&pair).unwrap(),
            JordanStructure::from_triples([(g(0), 2, 2)])
        );
        assert_eq!(
            jordan_structure(&Matrix::diag(&[g(1), g(-1)])).unwrap(),
            JordanStructure::from_triples([(g(1), 1, 1), (g(-1), 1, 1)])
        );
        let lambda4 = Matrix::from_i64(&[&[0, 1, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, -1, 0]]);
        assert_eq!(
            jordan_structure(&lambda4).unwrap(),
            JordanStructure::from_triples([(g(0), 4, 1)])
        );
        assert_eq!(eigenvalues(&lambda4).unwrap(), vec![g(0); 4]);
    }

    #[test]
    fn validity_examples() {
        let h = |t: &[(i64, usize, usize)]| {
            JordanStructure::from_triples(t.iter().map(|&(l, k, m)| (g(l), k, m)))
        };
        assert!(!is_valid_hamiltonian_structure(&h(&[(0, 3, 1)])));
        assert!(is_valid_hamiltonian_structure(&h(&[(0, 2, 1)])));
        assert!(is_valid_hamiltonian_structure(&h(&[(0, 3, 2)])));
        assert!(!is_valid_hamiltonian_structure(&h(&[(1, 1, 1)])));
        assert!(is_valid_hamiltonian_structure(&h(&[(1, 1, 1), (-1, 1, 1)])));
        assert!(is_valid_skew_hamiltonian_structure(&h(&[(1, 1, 2)])));
        assert!(!is_valid_skew_hamiltonian_structure(&h(&[(1, 1, 1)])));
    }

    #[test]
    fn iteration_order_is_lexicographic() {
        let js = JordanStructure::from_triples([
            (GaussianRational::i(), 1, 1),
            (g(1), 2, 1),
            (g(-1), 1, 1),
            (g(1), 1, 3),
        ]);
        let keys: Vec<_> = js.iter().map(|(b, _)| (b.lambda.clone(), b.size)).collect();
        assert_eq!(
            keys,
            vec![(g(-1), 1), (GaussianRational::i(), 1), (g(1), 1), (g(1), 2)]
        );
        assert_eq!(js.order(), 1 + 2 + 1 + 3);
    }
}
