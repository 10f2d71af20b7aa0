//! Exact scalars: rationals and Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{
    Abs, AbsSquared, CheckedSqrt, Conjugate, Pow, Reciprocal,
};
use malachite_base::num::basic::traits::{One, Zero, I};
use malachite_nz::integer::Integer;
use malachite_q::gaussian_rational::GaussianRational as Inner;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = malachite_q::Rational;

/// An element of the field ℚ(i).
///
/// Both components are reduced rationals, so derived equality is structural
/// equality of field elements.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational(Inner);

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self(Inner { real: re, imaginary: im })
    }

    pub fn from_rational(re: Rational) -> Self {
        Self::new(re, Rational::ZERO)
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self::new(Rational::from(re), Rational::from(im))
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`. Panics on a zero denominator.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            Rational::from_signeds(re_num, re_den),
            Rational::from_signeds(im_num, im_den),
        )
    }

    pub fn zero() -> Self {
        Self(Inner::ZERO)
    }

    pub fn one() -> Self {
        Self(Inner::ONE)
    }

    pub fn i() -> Self {
        Self(Inner::I)
    }

    pub fn re(&self) -> &Rational {
        &self.0.real
    }

    pub fn im(&self) -> &Rational {
        &self.0.imaginary
    }

    pub(crate) fn inner(&self) -> &Inner {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Inner::ZERO
    }

    pub fn is_one(&self) -> bool {
        self.0 == Inner::ONE
    }

    pub fn conj(&self) -> Self {
        Self((&self.0).conjugate())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        (&self.0).abs_squared()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self((&self.0).reciprocal()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.re() * r, self.im() * r)
    }

    /// Lexicographic comparison on `(re, im)`; the deterministic ordering used
    /// for eigenvalues and canonical blocks.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.re().cmp(other.re()).then_with(|| self.im().cmp(other.im()))
    }

    /// True when `self` is the preferred member of `{λ, −λ}`:
    /// `re > 0`, or `re = 0` and `im ≥ 0`.
    pub fn is_positive_representative(&self) -> bool {
        *self.re() > 0u32 || (*self.re() == 0u32 && *self.im() >= 0u32)
    }

    /// Returns `x` with `x² = self` if such an `x` exists in ℚ(i).
    ///
    /// The root returned satisfies `re(x) > 0`, or `re(x) = 0` and `im(x) ≥ 0`.
    pub fn sqrt_if_square(&self) -> Option<Self> {
        (&self.0).checked_sqrt().map(Self)
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_if_square().is_some()
    }

    pub fn pow(&self, e: u32) -> Self {
        Self((&self.0).pow(u64::from(e)))
    }
}

/// Non-negative rational square root, if the argument is a rational square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    r.checked_sqrt()
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_integers(v, 0)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<Inner> for GaussianRational {
    fn from(z: Inner) -> Self {
        Self(z)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                GaussianRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                GaussianRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                GaussianRational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                GaussianRational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-self.0)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-&self.0)
    }
}

/// Formats a rational as `[-]digits[/digits]`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `[-]digits[/digits]`. Non-reduced input is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer = Integer::from_str(num).map_err(|_| bad())?;
    let denom = match den {
        None => Integer::ONE,
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let d = Integer::from_str(d).map_err(|_| bad())?;
            if d == 0u32 {
                return Err(bad());
            }
            d
        }
    };
    Ok(Rational::from_integers(numer, denom))
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        match (*re == 0u32, *im == 0u32) {
            (_, true) => write!(f, "{}", format_rational(re)),
            (true, false) => write!(f, "{}i", format_rational(im)),
            (false, false) => {
                let sign = if *im < 0u32 { '-' } else { '+' };
                write!(f, "{} {} {}i", format_rational(re), sign, format_rational(&im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
