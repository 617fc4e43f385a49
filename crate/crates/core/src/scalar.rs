//! The scalar field: exact arbitrary-precision rationals.
//!
//! `Rational` is always in canonical form (reduced, positive denominator),
//! so structural equality is numeric equality. It serializes as `"p/q"`,
//! or `"p"` when the denominator is one.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` reduced. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Parses `"p"`, `"-p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Argument(format!("not a rational number: `{text}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Argument(format!("zero denominator in `{text}`")));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Canonical string form used in JSON and CSV output.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A commutative ring containing the rationals. Implemented by
/// [`Rational`] and [`crate::Poly`], so combinatorial formulas can be
/// evaluated verbatim over polynomial moments.
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn scale(&self, r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl Ring for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}
