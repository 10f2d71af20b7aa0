//! Gaussian integers ℤ[i], used for fraction-free elimination and for the
//! divisor search behind exact root finding.

use malachite_base::num::arithmetic::traits::{AbsSquared, CheckedSqrt, DivRem, FloorSqrt, Lcm};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

pub use malachite_nz::gaussian_integer::GaussianInteger;

use crate::field::GaussianRational;

fn gi(re: Integer, im: Integer) -> GaussianInteger {
    GaussianInteger { real: re, imaginary: im }
}

/// Whether `d` divides `z` in ℤ[i]. `d` must be nonzero.
pub fn divides(d: &GaussianInteger, z: &GaussianInteger) -> bool {
    z.div_rem(d).1 == GaussianInteger::ZERO
}

/// Associates of `z`: multiplication by the units 1, i, −1, −i.
pub fn associates(z: &GaussianInteger) -> [GaussianInteger; 4] {
    [
        z.clone(),
        gi(-&z.imaginary, z.real.clone()),
        gi(-&z.real, -&z.imaginary),
        gi(z.imaginary.clone(), -&z.real),
    ]
}

pub fn to_gaussian_rational(z: &GaussianInteger) -> GaussianRational {
    GaussianRational::from(malachite_q::gaussian_rational::GaussianRational::from(z))
}

/// Scales a row of Gaussian rationals by the lcm of its denominators so that
/// every entry becomes a Gaussian integer.
pub fn clear_denominators(row: &[GaussianRational]) -> Vec<GaussianInteger> {
    let mut l = Natural::ONE;
    for x in row {
        l = l.lcm(x.re().denominator_ref());
        l = l.lcm(x.im().denominator_ref());
    }
    let l = Integer::from(l);
    row.iter()
        .map(|x| {
            let scaled = x.inner() * &malachite_q::gaussian_rational::GaussianRational::from(&l);
            GaussianInteger::try_from(scaled).expect("denominators cleared")
        })
        .collect()
}

/// Positive divisors of `n`, by trial division. `n` must be nonzero.
pub fn integer_divisors(n: &Natural) -> Vec<Natural> {
    let factors: Vec<(Natural, u32)> = match u128::try_from(n) {
        Ok(small) => factor_u128(small)
            .into_iter()
            .map(|(p, e)| (Natural::from(p), e))
            .collect(),
        Err(_) => factor_big(n.clone()),
    };
    let mut divs = vec![Natural::ONE];
    for (p, e) in factors {
        let current = divs.clone();
        let mut pk = Natural::ONE;
        for _ in 0..e {
            pk *= &p;
            divs.extend(current.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn factor_big(mut n: Natural) -> Vec<(Natural, u32)> {
    let mut out = Vec::new();
    let mut p = Natural::from(2u32);
    while &p * &p <= n {
        if &n % &p == 0u32 {
            let mut e = 0;
            while &n % &p == 0u32 {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == 2u32 { Natural::ONE } else { Natural::from(2u32) };
    }
    if n > 1u32 {
        out.push((n, 1));
    }
    out
}

/// All Gaussian-integer divisors of `z` up to units, each in first-quadrant
/// form (`re > 0, im ≥ 0`).
pub fn gaussian_divisors(z: &GaussianInteger) -> Vec<GaussianInteger> {
    assert!(*z != GaussianInteger::ZERO, "zero has no finite divisor set");
    let mut out = Vec::new();
    let norm = Natural::try_from(z.abs_squared()).expect("norms are nonnegative");
    for m in integer_divisors(&norm) {
        // d = x + iy with x² + y² = m, x > 0, y ≥ 0.
        let bound = (&m).floor_sqrt();
        let mut x = Natural::ONE;
        while x <= bound {
            let rest = &m - &x * &x;
            if let Some(y) = rest.checked_sqrt() {
                let d = gi(Integer::from(&x), Integer::from(y));
                if divides(&d, z) {
                    out.push(d);
                }
            }
            x += Natural::ONE;
        }
    }
    out
}
