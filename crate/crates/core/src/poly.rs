//! Polynomials over ℚ(i): characteristic polynomials, exact root search,
//! and truncated power series used by the symplectic normalization.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::gaussint::{associates, clear_denominators, gaussian_divisors, to_gaussian_rational};
use crate::matrix::Matrix;

/// Coefficients in increasing degree; `coeffs[k]` multiplies `xᵏ`.
pub type Poly = Vec<GaussianRational>;

/// `det(x·I − A)` by the Faddeev–LeVerrier recurrence.
pub fn characteristic_polynomial(a: &Matrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::NonSquareInput {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
        m = a.mul(&m).shift(&-&coeffs[n - k + 1]);
        let am = a.mul(&m);
        let kk = GaussianRational::from(k as i64);
        coeffs[n - k] = -am.trace().div(&kk).expect("k > 0");
    }
    Ok(coeffs)
}

pub fn evaluate(p: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    p.iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
}

/// Divides `p` by `(x − r)`, assuming `r` is a root.
fn deflate(p: &[GaussianRational], r: &GaussianRational) -> Poly {
    let d = p.len() - 1;
    let mut q = vec![GaussianRational::zero(); d];
    let mut carry = GaussianRational::zero();
    for k in (0..d).rev() {
        carry = &p[k + 1] + &(&carry * r);
        q[k] = carry.clone();
    }
    q
}

/// All roots of `p` with multiplicity, sorted by `(re, im)`, provided `p`
/// splits over ℚ(i).
///
/// Candidates are `u·a/b` with `a` a Gaussian-integer divisor of the constant
/// term and `b` one of the leading coefficient (after clearing
/// denominators), `u` a unit. Every root found is deflated out; any
/// nonlinear remainder means the spectrum leaves ℚ(i).
pub fn roots(p: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    let mut p: Poly = p.to_vec();
    while p.len() > 1 && p.last().is_some_and(GaussianRational::is_zero) {
        p.pop();
    }
    let mut out = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        out.push(GaussianRational::zero());
        p.remove(0);
    }
    if p.len() > 1 {
        let ints = clear_denominators(&p);
        let a0 = ints[0].clone();
        let an = ints.last().expect("nonempty").clone();
        let mut seen = HashSet::new();
        'outer: for den in gaussian_divisors(&an) {
            let den_q = to_gaussian_rational(&den);
            for num in gaussian_divisors(&a0) {
                for unit in associates(&num) {
                    let cand = to_gaussian_rational(&unit).div(&den_q).expect("nonzero divisor");
                    if !seen.insert(cand.clone()) {
                        continue;
                    }
                    while p.len() > 1 && evaluate(&p, &cand).is_zero() {
                        p = deflate(&p, &cand);
                        out.push(cand.clone());
                    }
                    if p.len() == 1 {
                        break 'outer;
                    }
                }
            }
        }
    }
    if p.len() > 1 {
        return Err(Error::SpectrumNotInField);
    }
    out.sort_by(GaussianRational::lex_cmp);
    Ok(out)
}

/// Exact eigenvalues with algebraic multiplicity, sorted by `(re, im)`.
pub fn eigenvalues(a: &Matrix) -> Result<Vec<GaussianRational>> {
    roots(&characteristic_polynomial(a)?)
}

/// A power series truncated at `xᵏ`; `coeffs.len() == k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub coeffs: Vec<GaussianRational>,
}

impl Series {
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        Self { coeffs }
    }

    pub fn constant(c: GaussianRational, len: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); len];
        if len > 0 {
            coeffs[0] = c;
        }
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    pub fn add(&self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let k = self.len();
        let mut out = vec![GaussianRational::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(k - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Series::new(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Series> {
        let k = self.len();
        let c0 = self.coeffs[0].inv()?;
        let mut out = vec![GaussianRational::zero(); k];
        out[0] = c0.clone();
        for j in 1..k {
            let mut s = GaussianRational::zero();
            for i in 1..=j {
                s += &(&self.coeffs[i] * &out[j - i]);
            }
            out[j] = -(&s * &c0);
        }
        Ok(Series::new(out))
    }

    /// `p(x) ↦ p(sign·x)`.
    pub fn substitute_sign(&self, sign: i64) -> Series {
        if sign == 1 {
            return self.clone();
        }
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Square root with the given root of the constant term.
    pub fn sqrt_with(&self, root0: GaussianRational) -> Series {
        let k = self.len();
        let mut q = vec![GaussianRational::zero(); k];
        let two_q0_inv = (&root0 + &root0).inv().expect("nonzero constant root");
        q[0] = root0;
        for j in 1..k {
            let mut s = self.coeffs[j].clone();
            for i in 1..j {
                s -= &(&q[i] * &q[j - i]);
            }
            q[j] = &s * &two_q0_inv;
        }
        Series::new(q)
    }
}
