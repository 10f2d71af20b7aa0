//! Symmetric bilinear forms over ℚ(i), given by their Gram matrix.
//!
//! These helpers locate vectors of a prescribed square class and isotropic
//! (hyperbolic) pairs. Vectors are coordinate columns against the Gram
//! matrix's basis.

use std::sync::OnceLock;

use malachite_base::num::arithmetic::traits::{DivExact, Lcm};

use crate::field::{GaussianRational, Rational};
use crate::gaussint::{divides, to_gaussian_rational, GaussianInteger};
use crate::matrix::Matrix;

type Vector = Vec<GaussianRational>;

/// `B(x, y) = xᵀ G y`.
pub fn value(g: &Matrix, x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
    let gy = g.apply(y);
    dot(x, &gy)
}

fn dot(x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
    let mut s = GaussianRational::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            s += &(a * b);
        }
    }
    s
}

fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![GaussianRational::zero(); d];
    v[i] = GaussianRational::one();
    v
}

fn axpy(y: &[GaussianRational], a: &GaussianRational, x: &[GaussianRational]) -> Vector {
    y.iter().zip(x).map(|(yi, xi)| yi + &(a * xi)).collect()
}

/// An orthogonal basis `(zᵢ, dᵢ = B(zᵢ, zᵢ) ≠ 0)` of a complement of the
/// radical.
pub fn diagonalize(g: &Matrix) -> Vec<(Vector, GaussianRational)> {
    let d = g.rows();
    let mut pool: Vec<Vector> = (0..d).map(|i| unit(d, i)).collect();
    let mut out = Vec::new();
    loop {
        let pick = pool
            .iter()
            .position(|w| !value(g, w, w).is_zero())
            .map(|i| pool.remove(i))
            .or_else(|| {
                // All remaining vectors are isotropic; a nonzero cross value
                // gives a non-isotropic sum.
                for i in 0..pool.len() {
                    for j in i + 1..pool.len() {
                        if !value(g, &pool[i], &pool[j]).is_zero() {
                            let w = axpy(&pool[i], &GaussianRational::one(), &pool[j]);
                            pool.remove(i);
                            return Some(w);
                        }
                    }
                }
                None
            });
        let Some(z) = pick else {
            return out;
        };
        let dz = value(g, &z, &z);
        let dz_inv = dz.inv().expect("non-isotropic pick");
        let gz = g.apply(&z);
        pool = pool
            .into_iter()
            .map(|w| {
                let c = -&(&dot(&w, &gz) * &dz_inv);
                axpy(&w, &c, &z)
            })
            .collect();
        out.push((z, dz));
    }
}

/// Largest norm of the Gaussian primes whose squares are divided out of
/// diagonal entries.
const PRIME_NORM_LIMIT: u64 = 2000;

/// Largest coordinate magnitude tried by [`represent`].
const SEARCH_RADIUS: i64 = 2;

/// Number of alternative bases tried before giving up.
const BASIS_VARIANTS: usize = 8;

/// Gaussian primes of norm at most [`PRIME_NORM_LIMIT`], one per associate
/// class.
fn small_gaussian_primes() -> &'static [GaussianInteger] {
    static PRIMES: OnceLock<Vec<GaussianInteger>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = PRIME_NORM_LIMIT;
        let is_prime = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        let gi = |a: u64, b: u64| GaussianInteger {
            real: a.into(),
            imaginary: b.into(),
        };
        let mut out = Vec::new();
        for p in (2..=limit).filter(|&p| is_prime(p)) {
            match p % 4 {
                2 => out.push(gi(1, 1)),
                3 if p * p <= limit => out.push(gi(p, 0)),
                1 => {
                    let a = (1..).find(|a| {
                        let r = p - a * a;
                        let b = r.isqrt();
                        b * b == r
                    });
                    let a = a.expect("p ≡ 1 mod 4 is a sum of two squares");
                    let b = (p - a * a).isqrt();
                    out.push(gi(a, b));
                    out.push(gi(b, a));
                }
                _ => {}
            }
        }
        out
    })
}

/// `(c, d·c²)` with the second entry a Gaussian integer stripped of the
/// squares of small primes.
fn reduce_square_class(d: &GaussianRational) -> (GaussianRational, GaussianRational) {
    let den = Rational::from(d.re().denominator_ref().lcm(d.im().denominator_ref()));
    let mut c = GaussianRational::from_rational(den);
    let mut e = GaussianInteger::try_from(&(d.inner() * &(c.inner() * c.inner())))
        .expect("denominators cleared");
    for p in small_gaussian_primes() {
        let p2 = p * p;
        while divides(&p2, &e) {
            e = (&e).div_exact(&p2);
            c = c.div(&to_gaussian_rational(p)).expect("nonzero prime");
        }
    }
    (c, to_gaussian_rational(&e))
}

/// Gaussian integers with both parts in `[−r, r]`, by increasing size.
fn grid(r: i64) -> Vec<GaussianRational> {
    let mut pts: Vec<(i64, i64)> = (-r..=r).flat_map(|a| (-r..=r).map(move |b| (a, b))).collect();
    pts.sort_by_key(|&(a, b)| (a.abs().max(b.abs()), a * a + b * b));
    pts.into_iter().map(|(a, b)| GaussianRational::from_integers(a, b)).collect()
}

/// A vector `v` with `B(v, v) / target` a nonzero square, by bounded search,
/// together with `B(v, v)`.
///
/// Entries are first reduced modulo squares. One coordinate is then solved
/// for by a square root while the others, and the scale `s` of the target,
/// run over small Gaussian integers.
fn represent(diag: &[(Vector, GaussianRational)], target: &GaussianRational) -> Option<(Vector, GaussianRational)> {
    if diag.is_empty() || target.is_zero() {
        return None;
    }
    let reduced: Vec<(Vector, GaussianRational)> = diag
        .iter()
        .map(|(z, d)| {
            let (c, e) = reduce_square_class(d);
            (z.iter().map(|x| x * &c).collect(), e)
        })
        .collect();
    let (_, t) = reduce_square_class(target);
    let m = reduced.len().min(3);
    for radius in 1..=SEARCH_RADIUS {
        let pts = grid(radius);
        let scales: Vec<&GaussianRational> = pts.iter().filter(|s| !s.is_zero() && s.is_positive_representative()).collect();
        for j in 0..m {
            let (zj, ej) = &reduced[j];
            let others: Vec<usize> = (0..m).filter(|&i| i != j).collect();
            let total = pts.len().pow(others.len() as u32);
            for s in &scales {
                let ts2 = &(&t * *s) * *s;
                for code in 0..total {
                    let mut c = code;
                    let mut rest = ts2.clone();
                    let mut xs = Vec::with_capacity(others.len());
                    for &i in &others {
                        let x = &pts[c % pts.len()];
                        c /= pts.len();
                        if !x.is_zero() {
                            rest -= &(&(x * x) * &reduced[i].1);
                        }
                        xs.push(x);
                    }
                    let Some(y) = rest.div(ej).expect("nonzero diagonal").sqrt_if_square() else {
                        continue;
                    };
                    let mut v = zj.iter().map(|a| a * &y).collect::<Vector>();
                    for (&i, x) in others.iter().zip(xs) {
                        if !x.is_zero() {
                            v = axpy(&v, x, &reduced[i].0);
                        }
                    }
                    return Some((v, ts2));
                }
            }
        }
    }
    None
}

/// A nonzero isotropic vector in the nondegenerate part, if one is found.
pub fn find_isotropic(diag: &[(Vector, GaussianRational)]) -> Option<Vector> {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (zi, di) = &diag[i];
            let (zj, dj) = &diag[j];
            let ratio = (-di).div(dj).expect("nonzero diagonal");
            if let Some(alpha) = ratio.sqrt_if_square() {
                return Some(axpy(zi, &alpha, zj));
            }
        }
    }
    if diag.len() < 3 {
        return None;
    }
    // w + s·z with B(w, w) = −s²·B(z, z).
    let (rest, last) = diag.split_at(diag.len() - 1);
    let (z, d) = &last[0];
    let (w, bw) = represent(rest, &-d)?;
    let s = (-&bw).div(d).expect("nonzero diagonal").sqrt_if_square()?;
    Some(axpy(&w, &s, z))
}

/// Given isotropic `p` outside the radical, an isotropic `q` with
/// `B(p, q) ≠ 0`.
pub fn hyperbolic_partner(g: &Matrix, p: &[GaussianRational]) -> Vector {
    let d = g.rows();
    let gp = g.apply(p);
    let j = (0..d)
        .find(|&j| !gp[j].is_zero())
        .expect("isotropic vector lies outside the radical");
    let z = unit(d, j);
    let bpz = gp[j].clone();
    let bzz = g[(j, j)].clone();
    let c = -&bzz.div(&(&bpz + &bpz)).expect("nonzero pairing");
    axpy(&z, &c, p)
}

/// A hyperbolic pair `(p, q)`: both isotropic with `B(p, q) ≠ 0`.
pub fn find_hyperbolic_pair(g: &Matrix) -> Option<(Vector, Vector)> {
    let d = g.rows();
    // Two isotropic basis vectors that already pair.
    for a in 0..d {
        if !g[(a, a)].is_zero() {
            continue;
        }
        for b in a + 1..d {
            if g[(b, b)].is_zero() && !g[(a, b)].is_zero() {
                return Some((unit(d, a), unit(d, b)));
            }
        }
    }
    let p = in_some_basis(g, |h| find_isotropic(&diagonalize(h)))?;
    let q = hyperbolic_partner(g, &p);
    Some((p, q))
}

/// Unimodular changes of basis: the identity, then permutations mixed with
/// shears by small Gaussian integers.
fn basis_variants(d: usize) -> impl Iterator<Item = Matrix> {
    let shears = [(1, 0), (0, 1), (1, 1), (-1, 1), (2, 1), (1, -2), (1, 2)];
    (0..BASIS_VARIANTS).map(move |k| {
        if k == 0 || d < 2 {
            return Matrix::identity(d);
        }
        let (a, b) = shears[(k - 1) % shears.len()];
        let shift = k % d;
        Matrix::from_fn(d, d, |i, j| {
            let src = (i + shift) % d;
            if j == src {
                GaussianRational::one()
            } else if j == (src + 1) % d && j > src {
                GaussianRational::from_integers(a, b)
            } else {
                GaussianRational::zero()
            }
        })
    })
}

/// Runs `search` on `g` in each basis variant and maps a hit back.
fn in_some_basis(g: &Matrix, search: impl Fn(&Matrix) -> Option<Vector>) -> Option<Vector> {
    basis_variants(g.rows()).find_map(|p| {
        let h = p.transpose().mul(g).mul(&p);
        search(&h).map(|v| p.apply(&v))
    })
}

/// A vector `z` with `B(z, z) / target` a nonzero square.
pub fn find_square_class(g: &Matrix, target: &GaussianRational) -> Option<Vector> {
    let d = g.rows();
    let in_class = |v: &GaussianRational| {
        !v.is_zero() && v.div(target).expect("nonzero target").is_square()
    };
    if let Some(a) = (0..d).find(|&a| in_class(&g[(a, a)])) {
        return Some(unit(d, a));
    }
    let diag = diagonalize(g);
    if let Some((z, _)) = diag.iter().find(|(_, dz)| in_class(dz)) {
        return Some(z.clone());
    }
    // A hyperbolic plane represents every value.
    if diag.len() >= 2 {
        if let Some((p, q)) = find_hyperbolic_pair(g) {
            let bpq = value(g, &p, &q);
            let beta = target.div(&(&bpq + &bpq)).expect("nonzero pairing");
            return Some(axpy(&p, &beta, &q));
        }
    }
    in_some_basis(g, |h| represent(&diagonalize(h), target).map(|(v, _)| v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64) -> GaussianRational {
        GaussianRational::from(a)
    }

    #[test]
    fn diagonalize_hyperbolic_plane() {
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let diag = diagonalize(&h);
        assert_eq!(diag.len(), 2);
        assert!(value(&h, &diag[0].0, &diag[1].0).is_zero());
    }

    #[test]
    fn radical_is_dropped() {
        let m = Matrix::diag(&[g(3), g(0), g(5)]);
        assert_eq!(diagonalize(&m).len(), 2);
    }

    #[test]
    fn square_class_via_plane() {
        // ⟨2, 2⟩ contains no vector of value 1 on the axes, but
        // −2·2 is a square in ℚ(i), so the plane is hyperbolic.
        let m = Matrix::diag(&[g(2), g(2)]);
        let z = find_square_class(&m, &g(1)).unwrap();
        assert!(value(&m, &z, &z).is_square());
    }

    #[test]
    fn hyperbolic_pair_of_diagonal_form() {
        let m = Matrix::diag(&[g(1), g(1), g(3), g(3)]);
        let (p, q) = find_hyperbolic_pair(&m).unwrap();
        assert!(value(&m, &p, &p).is_zero());
        assert!(value(&m, &q, &q).is_zero());
        assert!(!value(&m, &p, &q).is_zero());
    }

    #[test]
    fn anisotropic_line_has_no_pair() {
        assert_eq!(find_hyperbolic_pair(&Matrix::diag(&[g(2)])), None);
        assert_eq!(find_square_class(&Matrix::diag(&[g(2)]), &g(1)), None);
    }
}
