//! Splits a Hamiltonian or skew-Hamiltonian matrix into symplectically
//! orthogonal cyclic pieces, each carried to a model block by an explicit
//! basis.
//!
//! Every piece is generated by one or two vectors. For generators `u, v` and a
//! nilpotent operator `N` of index `k` the form
//! `h(u, v)ⱼ = ω(u, N^(k−1−j) v)` is a truncated power series in `x` with
//! `h(u, N v) = x·h(u, v)`. The Gram matrix of the chain basis is a function
//! of the `h` values between generators, so matching those values against a
//! model block makes `K_actual · K_model⁻¹` symplectic and intertwining.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::jordan::{distinct_eigenvalues, jordan_block};
use crate::matrix::Matrix;
use crate::poly::Series;
use crate::structure::{direct_sum, expanding_sum_all, is_hamiltonian, is_skew_hamiltonian};

use super::quadratic;

type Vector = Vec<GaussianRational>;

/// A block of a structured decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelBlock {
    /// `J(λ, k) ⊕ −J(λ, k)ᵀ`, Hamiltonian.
    Pair { lambda: GaussianRational, k: usize },
    /// `(J(0, l), c·I; 0, −J(0, l)ᵀ)`, Hamiltonian; `c = 1` is `Λ₂ₗ`.
    EvenNil { l: usize, scale: GaussianRational },
    /// `J(λ, k) ⊕ J(λ, k)ᵀ`, skew-Hamiltonian.
    Skew { lambda: GaussianRational, k: usize },
}

impl ModelBlock {
    pub fn half_order(&self) -> usize {
        match self {
            Self::Pair { k, .. } | Self::Skew { k, .. } => *k,
            Self::EvenNil { l, .. } => *l,
        }
    }

    /// Size of the Jordan block(s) the piece carries.
    pub fn jordan_size(&self) -> usize {
        match self {
            Self::Pair { k, .. } | Self::Skew { k, .. } => *k,
            Self::EvenNil { l, .. } => 2 * l,
        }
    }

    pub fn eigenvalue(&self) -> GaussianRational {
        match self {
            Self::Pair { lambda, .. } | Self::Skew { lambda, .. } => lambda.clone(),
            Self::EvenNil { .. } => GaussianRational::zero(),
        }
    }

    pub fn matrix(&self) -> Matrix {
        match self {
            Self::Pair { lambda, k } => {
                let j = jordan_block(lambda, *k);
                direct_sum(&j, &j.transpose().neg()).expect("square")
            }
            Self::Skew { lambda, k } => {
                let j = jordan_block(lambda, *k);
                direct_sum(&j, &j.transpose()).expect("square")
            }
            Self::EvenNil { l, scale } => {
                let l = *l;
                let j = jordan_block(&GaussianRational::zero(), l);
                Matrix::from_fn(2 * l, 2 * l, |r, c| match (r < l, c < l) {
                    (true, true) => j[(r, c)].clone(),
                    (true, false) if c - l == r => scale.clone(),
                    (false, false) => -&j[(c - l, r - l)],
                    _ => GaussianRational::zero(),
                })
            }
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Self::Pair { .. } | Self::Skew { .. } => 0,
            Self::EvenNil { .. } => 1,
        }
    }
}

/// Canonical block order: nilpotent blocks first, then `(re λ, im λ)`, then
/// Jordan size, pair blocks before even-nilpotent blocks of the same size.
pub fn block_order(a: &ModelBlock, b: &ModelBlock) -> Ordering {
    let (la, lb) = (a.eigenvalue(), b.eigenvalue());
    (!la.is_zero())
        .cmp(&!lb.is_zero())
        .then_with(|| la.lex_cmp(&lb))
        .then(a.jordan_size().cmp(&b.jordan_size()))
        .then(a.kind_rank().cmp(&b.kind_rank()))
}

/// How self-paired even nilpotent chains are grouped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvenNilMode {
    /// One `Λ₂ₗ` piece per chain.
    Singles,
    /// Hyperbolic pairs of chains become `J(0,2l) ⊕ −J(0,2l)ᵀ`; a leftover
    /// chain becomes `Λ₂ₗ`.
    PreferPairs,
}

/// Whether single even nilpotent pieces must hit `Λ₂ₗ` exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Scale exactly 1; may need square roots outside ℚ(i).
    Exact,
    /// Any nonzero scale; never leaves ℚ(i).
    Scaled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub even_nil: EvenNilMode,
    pub normalization: Normalization,
}

/// One block together with its basis columns `e₁…e_h, f₁…f_h` in the
/// ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub block: ModelBlock,
    pub basis: Matrix,
}

/// Pieces of a full decomposition; assembling them with `⊞` gives a
/// symplectic `S` with `S⁻¹·X·S = model()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    pub fn blocks(&self) -> impl Iterator<Item = &ModelBlock> {
        self.pieces.iter().map(|p| &p.block)
    }

    /// The symplectic change of basis, pieces laid out as in `⊞`.
    pub fn transform(&self) -> Matrix {
        let n: usize = self.pieces.iter().map(|p| p.block.half_order()).sum();
        let mut s = Matrix::zeros(2 * n, 2 * n);
        let mut off = 0;
        for piece in &self.pieces {
            let h = piece.block.half_order();
            for r in 0..2 * n {
                for i in 0..h {
                    s[(r, off + i)] = piece.basis[(r, i)].clone();
                    s[(r, n + off + i)] = piece.basis[(r, h + i)].clone();
                }
            }
            off += h;
        }
        s
    }

    /// `⊞` of the block matrices in piece order.
    pub fn model(&self) -> Matrix {
        let mats: Vec<Matrix> = self.pieces.iter().map(|p| p.block.matrix()).collect();
        expanding_sum_all(&mats).expect("blocks have even order")
    }
}

fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![GaussianRational::zero(); d];
    v[i] = GaussianRational::one();
    v
}

/// `ω(u, v) = uᵀ J v`.
fn omega(u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    let n = u.len() / 2;
    let mut s = GaussianRational::zero();
    for i in 0..n {
        if !u[i].is_zero() && !v[n + i].is_zero() {
            s += &(&u[i] * &v[n + i]);
        }
        if !u[n + i].is_zero() && !v[i].is_zero() {
            s -= &(&u[n + i] * &v[i]);
        }
    }
    s
}

/// `Aᵀ J B` for column blocks `A`, `B`.
fn omega_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    let (ca, cb) = (
        (0..a.cols()).map(|j| a.column(j)).collect::<Vec<_>>(),
        (0..b.cols()).map(|j| b.column(j)).collect::<Vec<_>>(),
    );
    Matrix::from_fn(a.cols(), b.cols(), |i, j| omega(&ca[i], &cb[j]))
}

/// `[v, N v, …, N^(k−1) v]`.
fn chain(op: &Matrix, v: &[GaussianRational], k: usize) -> Vec<Vector> {
    let mut out = Vec::with_capacity(k);
    let mut cur = v.to_vec();
    for i in 0..k {
        if i > 0 {
            cur = op.apply(&cur);
        }
        out.push(cur.clone());
    }
    out
}

fn h_form(u: &[GaussianRational], v: &[GaussianRational], op: &Matrix, k: usize) -> Series {
    let ch = chain(op, v, k);
    Series::new((0..k).map(|j| omega(u, &ch[k - 1 - j])).collect())
}

/// `p(N)·v`.
fn act(p: &Series, op: &Matrix, v: &[GaussianRational]) -> Vector {
    let mut out = vec![GaussianRational::zero(); v.len()];
    for (c, w) in p.coeffs.iter().zip(chain(op, v, p.len())) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(&w) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    out
}

fn add(u: &[GaussianRational], v: &[GaussianRational]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn krylov(gens: &[(Vector, &Matrix)], k: usize) -> Matrix {
    let cols: Vec<Vector> = gens
        .iter()
        .flat_map(|(g, op)| chain(op, g, k))
        .collect();
    Matrix::from_columns(cols[0].len(), &cols)
}

/// The generator data of a model block: target form value and inverse
/// chain basis.
struct Model {
    tau: Series,
    krylov_inv: Matrix,
}

impl Model {
    fn new(block: &ModelBlock) -> Self {
        let c = block.matrix();
        let h = block.half_order();
        let (tau, kmat) = match block {
            ModelBlock::Pair { lambda, k } if !lambda.is_zero() => {
                let plus = c.shift(lambda);
                let minus = c.shift(&-lambda);
                let (e, f) = (unit(2 * h, k - 1), unit(2 * h, *k));
                let tau = h_form(&e, &f, &minus, *k);
                (tau, krylov(&[(e, &plus), (f, &minus)], *k))
            }
            ModelBlock::Pair { lambda, k } | ModelBlock::Skew { lambda, k } => {
                let op = c.shift(lambda);
                let (e, f) = (unit(2 * h, k - 1), unit(2 * h, *k));
                let tau = h_form(&e, &f, &op, *k);
                (tau, krylov(&[(e, &op), (f, &op)], *k))
            }
            ModelBlock::EvenNil { l, .. } => {
                let f = unit(2 * h, *l);
                let tau = h_form(&f, &f, &c, 2 * l);
                (tau, krylov(&[(f, &c)], 2 * l))
            }
        };
        Self {
            tau,
            krylov_inv: kmat.inverse().expect("model generators are cyclic"),
        }
    }
}

fn field_extension(what: &str, k: usize) -> Error {
    Error::FieldExtensionRequired(format!(
        "{what} for nilpotent chains of length {k} needs a square root outside Q(i)"
    ))
}

/// Nilpotency index of `op` on the column span of `u`, and `op^(k−1)·u`.
fn nilpotency(op: &Matrix, u: &Matrix) -> (usize, Matrix) {
    let mut k = 0;
    let mut p = u.clone();
    let mut top = u.clone();
    while !p.is_zero() {
        top = p.clone();
        p = op.mul(&p);
        k += 1;
    }
    (k, top)
}

fn first_nonzero(g: &Matrix, strictly_upper: bool) -> (usize, usize) {
    for a in 0..g.rows() {
        let start = if strictly_upper { a + 1 } else { 0 };
        for b in start..g.cols() {
            if !g[(a, b)].is_zero() {
                return (a, b);
            }
        }
    }
    unreachable!("the symplectic form is nondegenerate on every remaining piece")
}

fn combine(u: &Matrix, z: &[GaussianRational]) -> Vector {
    u.apply(z)
}

/// Self-paired generalized eigenspace: `N = X − λ` with `ω(Nu, v) = s·ω(u, Nv)`.
struct SelfPaired<'a> {
    op: &'a Matrix,
    lambda: GaussianRational,
    /// `s`: −1 for Hamiltonian (λ = 0), +1 for skew-Hamiltonian.
    star: i64,
    opts: DecomposeOptions,
}

impl SelfPaired<'_> {
    fn run(&self, mut u: Matrix, out: &mut Vec<Piece>) -> Result<()> {
        let hamiltonian = self.star == -1;
        while u.cols() > 0 {
            let (k, top) = nilpotency(self.op, &u);
            let g = omega_matrix(&u, &top);
            let symmetric = hamiltonian && k % 2 == 0;
            let (block, gens) = if !symmetric {
                let (a, b) = first_nonzero(&g, true);
                let block = if hamiltonian {
                    ModelBlock::Pair { lambda: GaussianRational::zero(), k }
                } else {
                    ModelBlock::Skew { lambda: self.lambda.clone(), k }
                };
                let model = Model::new(&block);
                let gens = self.hyperbolic(u.column(a), u.column(b), &model.tau, k);
                (block, gens)
            } else {
                self.symmetric_piece(&u, &g, k)?
            };
            let model = Model::new(&block);
            let pairs: Vec<(Vector, &Matrix)> = gens.into_iter().map(|v| (v, self.op)).collect();
            let kmat = krylov(&pairs, k);
            out.push(Piece {
                basis: kmat.mul(&model.krylov_inv),
                block,
            });
            u = u.mul(&omega_matrix(&kmat, &u).kernel());
        }
        Ok(())
    }

    fn symmetric_piece(&self, u: &Matrix, g: &Matrix, k: usize) -> Result<(ModelBlock, Vec<Vector>)> {
        let l = k / 2;
        let exact = self.opts.normalization == Normalization::Exact;
        if self.opts.even_nil == EvenNilMode::PreferPairs && quadratic::diagonalize(g).len() >= 2 {
            match quadratic::find_hyperbolic_pair(g) {
                Some((p, q)) => {
                    let block = ModelBlock::Pair { lambda: GaussianRational::zero(), k };
                    let model = Model::new(&block);
                    let gens = self.hyperbolic(combine(u, &p), combine(u, &q), &model.tau, k);
                    return Ok((block, gens));
                }
                None if exact => return Err(field_extension("pairing chains hyperbolically", k)),
                None => {}
            }
        }
        let unit_block = ModelBlock::EvenNil { l, scale: GaussianRational::one() };
        let unit_tau = Model::new(&unit_block).tau;
        let (block, z) = if exact {
            let z = quadratic::find_square_class(g, &unit_tau.coeffs[0])
                .ok_or_else(|| field_extension("normalizing a single chain", k))?;
            (unit_block, z)
        } else {
            let z = any_anisotropic(g);
            let a0 = quadratic::value(g, &z, &z);
            let scale = a0.div(&unit_tau.coeffs[0]).expect("nonzero model value");
            (ModelBlock::EvenNil { l, scale }, z)
        };
        let tau = Model::new(&block).tau;
        let v = combine(u, &z);
        let a = h_form(&v, &v, self.op, k);
        let theta = tau.mul(&a.inv()?);
        let root = theta.coeffs[0]
            .sqrt_if_square()
            .ok_or_else(|| field_extension("normalizing a single chain", k))?;
        let q = theta.sqrt_with(root);
        Ok((block, vec![act(&q, self.op, &v)]))
    }

    /// Normalizes `(u, v)` with `h(u,u)₀ = h(v,v)₀ = 0 ≠ h(u,v)₀` to
    /// `h(u,u) = h(v,v) = 0`, `h(u,v) = τ`.
    fn hyperbolic(&self, mut u: Vector, mut v: Vector, tau: &Series, k: usize) -> Vec<Vector> {
        let two_inv = GaussianRational::from(2).inv().expect("2 ≠ 0");
        loop {
            let a = h_form(&u, &u, self.op, k);
            if a.is_zero() {
                break;
            }
            let c = h_form(&u, &v, self.op, k);
            let r = a.mul(&c.inv().expect("top pairing is nonzero")).scale(&-&two_inv);
            u = add(&u, &act(&r, self.op, &v));
        }
        let b = h_form(&v, &v, self.op, k);
        if !b.is_zero() {
            let c = h_form(&u, &v, self.op, k);
            let sigma = b
                .mul(&c.inv().expect("top pairing is nonzero"))
                .scale(&-&two_inv)
                .substitute_sign(self.star);
            v = add(&v, &act(&sigma, self.op, &u));
        }
        let c = h_form(&u, &v, self.op, k);
        let rho = tau.mul(&c.inv().expect("top pairing is nonzero"));
        vec![u.clone(), act(&rho, self.op, &v)]
    }
}

/// A coordinate vector with nonzero value under a nonzero symmetric form.
fn any_anisotropic(g: &Matrix) -> Vector {
    let d = g.rows();
    if let Some(a) = (0..d).find(|&a| !g[(a, a)].is_zero()) {
        return unit(d, a);
    }
    let (a, b) = first_nonzero(g, true);
    add(&unit(d, a), &unit(d, b))
}

/// Pairs the generalized eigenspaces of `λ` and `−λ`, `λ ≠ 0`, into
/// `J(λ,k) ⊕ −J(λ,k)ᵀ` pieces.
fn split_dual_pair(x: &Matrix, lambda: &GaussianRational, mult: usize, out: &mut Vec<Piece>) {
    let plus = x.shift(lambda);
    let minus = x.shift(&-lambda);
    let mut up = plus.pow(mult as u32).kernel();
    let mut um = minus.pow(mult as u32).kernel();
    while up.cols() > 0 {
        let (k, _) = nilpotency(&plus, &up);
        let top = minus.pow(k as u32 - 1).mul(&um);
        let g = omega_matrix(&up, &top);
        let (a, b) = first_nonzero(&g, false);
        let block = ModelBlock::Pair { lambda: lambda.clone(), k };
        let model = Model::new(&block);
        let u = up.column(a);
        let v = um.column(b);
        let c = h_form(&u, &v, &minus, k);
        let v = act(&model.tau.mul(&c.inv().expect("top pairing is nonzero")), &minus, &v);
        let e = krylov(&[(u, &plus)], k);
        let f = krylov(&[(v, &minus)], k);
        let kmat = e.hstack(&f);
        out.push(Piece {
            basis: kmat.mul(&model.krylov_inv),
            block,
        });
        up = up.mul(&omega_matrix(&f, &up).kernel());
        um = um.mul(&omega_matrix(&e, &um).kernel());
    }
}

/// Decomposes a Hamiltonian matrix with spectrum in ℚ(i).
pub fn decompose_hamiltonian(x: &Matrix, opts: DecomposeOptions) -> Result<Decomposition> {
    if !is_hamiltonian(x)? {
        return Err(Error::NotHamiltonian);
    }
    let mut pieces = Vec::new();
    for (lambda, mult) in distinct_eigenvalues(x)? {
        if lambda.is_zero() {
            let op = x.clone();
            let space = op.pow(mult as u32).kernel();
            SelfPaired { op: &op, lambda, star: -1, opts }.run(space, &mut pieces)?;
        } else if lambda.is_positive_representative() {
            split_dual_pair(x, &lambda, mult, &mut pieces);
        }
    }
    pieces.sort_by(|a, b| block_order(&a.block, &b.block));
    Ok(Decomposition { pieces })
}

/// Decomposes a skew-Hamiltonian matrix with spectrum in ℚ(i) into
/// `J(λ,k) ⊕ J(λ,k)ᵀ` pieces.
pub fn decompose_skew_hamiltonian(x: &Matrix) -> Result<Decomposition> {
    if !is_skew_hamiltonian(x)? {
        return Err(Error::NotSkewHamiltonian);
    }
    let opts = DecomposeOptions {
        even_nil: EvenNilMode::Singles,
        normalization: Normalization::Exact,
    };
    let mut pieces = Vec::new();
    for (lambda, mult) in distinct_eigenvalues(x)? {
        let op = x.shift(&lambda);
        let space = op.pow(mult as u32).kernel();
        SelfPaired { op: &op, lambda, star: 1, opts }.run(space, &mut pieces)?;
    }
    pieces.sort_by(|a, b| block_order(&a.block, &b.block));
    Ok(Decomposition { pieces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_symplectic, symplectic_inverse};

    fn check(x: &Matrix, d: &Decomposition) {
        let s = d.transform();
        assert!(is_symplectic(&s).unwrap());
        assert_eq!(symplectic_inverse(&s).mul(x).mul(&s), d.model());
    }

    const SCALED: DecomposeOptions = DecomposeOptions {
        even_nil: EvenNilMode::Singles,
        normalization: Normalization::Scaled,
    };

    #[test]
    fn model_blocks_are_structured() {
        let g = |a: i64| GaussianRational::from(a);
        for block in [
            ModelBlock::Pair { lambda: g(2), k: 3 },
            ModelBlock::EvenNil { l: 3, scale: g(-5) },
        ] {
            assert!(is_hamiltonian(&block.matrix()).unwrap());
        }
        assert!(is_skew_hamiltonian(&ModelBlock::Skew { lambda: g(1), k: 2 }.matrix()).unwrap());
    }

    #[test]
    fn zero_matrix() {
        let x = Matrix::zeros(4, 4);
        let d = decompose_hamiltonian(&x, SCALED).unwrap();
        assert_eq!(d.pieces.len(), 2);
        check(&x, &d);
    }

    #[test]
    fn nilpotent_two_by_two() {
        let x = Matrix::from_i64(&[&[0, 3], &[0, 0]]);
        let d = decompose_hamiltonian(&x, SCALED).unwrap();
        check(&x, &d);
        let exact = DecomposeOptions { normalization: Normalization::Exact, ..SCALED };
        // 3 is not a square in Q(i).
        assert!(matches!(
            decompose_hamiltonian(&x, exact),
            Err(Error::FieldExtensionRequired(_))
        ));
        let y = Matrix::from_i64(&[&[0, -4], &[0, 0]]);
        check(&y, &decompose_hamiltonian(&y, exact).unwrap());
    }

    #[test]
    fn diagonal_pairs() {
        let x = Matrix::diag(&[1, 2, -1, -2].map(GaussianRational::from));
        let d = decompose_hamiltonian(&x, SCALED).unwrap();
        check(&x, &d);
    }

    #[test]
    fn skew_identity() {
        let x = Matrix::identity(2);
        let d = decompose_skew_hamiltonian(&x).unwrap();
        assert_eq!(d.transform(), Matrix::identity(2));
        check(&x, &d);
    }
}
