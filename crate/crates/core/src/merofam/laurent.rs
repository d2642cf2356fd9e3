use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{compound, rational_pow, ring_determinant, Field, Matrix, Rational, RationalMatrix, Ring};

/// A Laurent polynomial `Σ c_e z^e` with rational coefficients and finite
/// support; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn monomial(e: i64, c: Rational) -> Self {
        Self::from_terms([(e, c)])
    }

    /// `z^e`.
    pub fn z(e: i64) -> Self {
        Self::monomial(e, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    fn add_term(&mut self, e: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `ord`, failing on the zero polynomial.
    pub fn try_ord(&self) -> Result<i64> {
        self.ord().ok_or(Error::ZeroPolynomial)
    }

    /// `z^k · self`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect() }
    }

    /// Drops every term of exponent `≥ bound`.
    pub fn truncate(&self, bound: i64) -> Self {
        LaurentPoly { terms: self.terms.range(..bound).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// `z ↦ z^p`.
    pub fn substitute_power(&self, p: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e * p, c.clone())).collect() }
    }

    /// `z ↦ c·z`.
    pub fn substitute_scalar(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.mul(&rational_pow(c, *e)))))
    }

    /// Inverse of a power series with nonzero constant term, modulo `z^prec`.
    pub fn series_inverse(&self, prec: i64) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() || self.ord() != Some(0) {
            return Err(Error::Singular);
        }
        let inv0 = c0.inv();
        let mut out: Vec<Rational> = Vec::with_capacity(prec.max(0) as usize);
        for t in 0..prec {
            let mut acc = if t == 0 { Rational::one() } else { Rational::zero() };
            if t > 0 {
                for (e, c) in self.terms.range(1..=t) {
                    acc = acc.sub(&c.mul(&out[(t - e) as usize]));
                }
            }
            out.push(acc.mul(&inv0));
        }
        Ok(Self::from_terms(out.into_iter().enumerate().map(|(e, c)| (e as i64, c))))
    }

    /// `self · rhs` keeping only exponents `< bound`.
    pub fn mul_truncated(&self, rhs: &Self, bound: i64) -> Self {
        let mut out = LaurentPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if a + b >= bound {
                    break;
                }
                out.add_term(a + b, &x.mul(y));
            }
        }
        out
    }

    /// Power `self^e` of a series with nonzero constant term, for any integer
    /// `e`, modulo `z^prec`.
    pub fn series_pow(&self, e: i64, prec: i64) -> Result<Self> {
        let base = if e < 0 { self.series_inverse(prec)? } else { self.truncate(prec) };
        let mut acc = LaurentPoly::constant(Rational::one()).truncate(prec);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_truncated(&sq, prec);
            }
            sq = sq.mul_truncated(&sq, prec);
            k >>= 1;
        }
        Ok(acc)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn one() -> Self {
        LaurentPoly::z(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &x.mul(y));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A square matrix of Laurent polynomials: a meromorphic family `γ(z)`.
pub type LaurentMatrix = Matrix<LaurentPoly>;

/// Lifts a constant matrix.
pub fn constant_family(a: &RationalMatrix) -> LaurentMatrix {
    a.map(|x| LaurentPoly::constant(x.clone()))
}

/// `diag(z^{−m_1}, …, z^{−m_n})`.
pub fn diagonal_family(m: &[i64]) -> LaurentMatrix {
    let diag: Vec<LaurentPoly> = m.iter().map(|&e| LaurentPoly::z(-e)).collect();
    Matrix::diagonal(&diag)
}

/// The coefficient matrix of `z^e`.
pub fn coefficient(gamma: &LaurentMatrix, e: i64) -> RationalMatrix {
    Matrix::from_fn(gamma.rows(), gamma.cols(), |i, j| gamma[(i, j)].coeff(e))
}

/// `z^k · γ`.
pub fn shift_family(gamma: &LaurentMatrix, k: i64) -> LaurentMatrix {
    gamma.map(|p| p.shift(k))
}

/// Pole order of a single polynomial: `−ord`.
pub fn ord_poly(p: &LaurentPoly) -> Result<i64> {
    p.try_ord()
}

/// Pole order of a matrix: the maximum over nonzero entries of `−ord`.
pub fn ord(gamma: &LaurentMatrix) -> Result<i64> {
    gamma.entries().iter().filter_map(LaurentPoly::ord).map(|o| -o).max().ok_or(Error::ZeroPolynomial)
}

/// Lowest and highest exponent over all entries.
pub fn exponent_range(gamma: &LaurentMatrix) -> Option<(i64, i64)> {
    let lo = gamma.entries().iter().filter_map(LaurentPoly::ord).min()?;
    let hi = gamma.entries().iter().filter_map(LaurentPoly::degree).max()?;
    Some((lo, hi))
}

pub fn determinant(gamma: &LaurentMatrix) -> Result<LaurentPoly> {
    if !gamma.is_square() {
        return Err(Error::dims("meromorphic families are square"));
    }
    Ok(ring_determinant(gamma))
}

/// Checks that `γ` is square with a determinant that is not identically zero.
pub fn check_family(gamma: &LaurentMatrix) -> Result<()> {
    if gamma.rows() == 0 {
        return Err(Error::Empty("matrix family"));
    }
    if determinant(gamma)?.is_zero() {
        return Err(Error::SingularFamily);
    }
    Ok(())
}

/// `λ^j_cha(γ(z))` with Laurent entries.
pub fn lambda_family(gamma: &LaurentMatrix, j: usize) -> LaurentMatrix {
    compound(gamma, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn arithmetic_and_ord() {
        let p = poly(&[(-1, 1), (2, 3)]);
        let q = poly(&[(1, 1)]);
        assert_eq!(p.mul(&q), poly(&[(0, 1), (3, 3)]));
        assert_eq!(p.sub(&p), LaurentPoly::zero());
        assert_eq!(p.ord(), Some(-1));
        assert_eq!(LaurentPoly::zero().ord(), None);
        assert_eq!(ord_poly(&poly(&[(3, 1)])).unwrap(), 3);
        assert_eq!(ord_poly(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn matrix_pole_order() {
        let g: LaurentMatrix = Matrix::diagonal(&[poly(&[(-2, 1)]), poly(&[(1, 1)])]);
        assert_eq!(ord(&g).unwrap(), 2);
        assert_eq!(ord(&constant_family(&RationalMatrix::identity(3))).unwrap(), 0);
        assert_eq!(determinant(&g).unwrap(), poly(&[(-1, 1)]));
    }

    #[test]
    fn series_inverse_and_powers() {
        let u = poly(&[(0, 1), (1, 1)]);
        let inv = u.series_inverse(5).unwrap();
        assert_eq!(inv, poly(&[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)]));
        assert_eq!(u.mul_truncated(&inv, 5), LaurentPoly::one());
        assert_eq!(u.series_pow(2, 10).unwrap(), poly(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(u.series_pow(-2, 3).unwrap(), poly(&[(0, 1), (1, -2), (2, 3)]));
        assert!(poly(&[(1, 1)]).series_inverse(3).is_err());
    }

    #[test]
    fn substitutions() {
        let p = poly(&[(-1, 1), (2, 1)]);
        assert_eq!(p.substitute_power(3), poly(&[(-3, 1), (6, 1)]));
        assert_eq!(p.substitute_scalar(&rat(2)), LaurentPoly::from_terms([(-1, ratio(1, 2)), (2, rat(4))]));
        assert_eq!(p.truncate(0), poly(&[(-1, 1)]));
    }
}
