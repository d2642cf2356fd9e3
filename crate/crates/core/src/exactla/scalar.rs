//! Scalar rings used by the dense matrix kernel.
//!
//! Everything in the crate is exact: the ground field is [`Rational`], and the
//! same matrix code runs over Laurent polynomials and truncated power series
//! through the [`Ring`] trait.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Commutative ring with identity.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring where every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse. Callers guarantee `self` is nonzero.
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"`, dropping `/q` when `q = 1`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        let den = BigInt::from_str(den.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("{s:?}: zero denominator")));
        }
        Ok(Rational::new(num, den))
    } else {
        let num = BigInt::from_str(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        Ok(Rational::from_integer(num))
    }
}

/// Rational `d`-th root when it exists, choosing the positive root for even `d`.
pub fn rational_root(value: &Rational, d: u32) -> Option<Rational> {
    if d == 0 {
        return None;
    }
    if value.is_negative() && d.is_multiple_of(2) {
        return None;
    }
    let root_int = |x: &BigInt| -> Option<BigInt> {
        let r = x.abs().nth_root(d);
        (num_traits::pow(r.clone(), d as usize) == x.abs()).then_some(r)
    };
    let num = root_int(value.numer())?;
    let den = root_int(value.denom())?;
    let root = Rational::new(num, den);
    Some(if value.is_negative() { -root } else { root })
}

/// Integer power with a possibly negative exponent.
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("2/-4").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&ratio(3, 2)), "3/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(rational_root(&ratio(8, 27), 3), Some(ratio(2, 3)));
        assert_eq!(rational_root(&ratio(-8, 27), 3), Some(ratio(-2, 3)));
        assert_eq!(rational_root(&ratio(-4, 9), 2), None);
        assert_eq!(rational_root(&rat(2), 2), None);
        assert_eq!(rational_pow(&rat(2), -3), ratio(1, 8));
    }
}
