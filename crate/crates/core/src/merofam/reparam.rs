use crate::error::{Error, Result};
use crate::exactla::{Rational, Ring};

use super::laurent::{exponent_range, LaurentMatrix, LaurentPoly};

/// A change of the parameter `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reparametrization {
    /// `z ↦ z + c_2 z^2 + c_3 z^3 + …`, listing `c_2, c_3, …`.
    Formal(Vec<Rational>),
    /// `z ↦ z^p` with `p ≥ 1`.
    Power(u32),
    /// `z ↦ c z` with `c ≠ 0`.
    Scalar(Rational),
}

/// Applies a reparametrization, keeping enough terms for every quantity
/// built from products of at most `n` entries (minors, limits, `ℒ`).
pub fn reparametrize(gamma: &LaurentMatrix, kind: &Reparametrization) -> Result<LaurentMatrix> {
    reparametrize_to_degree(gamma, kind, gamma.rows())
}

/// Applies a reparametrization, exact for products of up to `degree` entries.
///
/// Formal substitutions produce infinite series; each entry is cut at
/// `degree · e_max − (degree − 1) · e_min + 1`, where `e_min`, `e_max` are the
/// extreme exponents of `γ`. A product of `degree` entries has its lowest term
/// at most at `degree · e_max`, while a dropped term contributes only from
/// above the cut plus `(degree − 1) · e_min`.
pub fn reparametrize_to_degree(
    gamma: &LaurentMatrix,
    kind: &Reparametrization,
    degree: usize,
) -> Result<LaurentMatrix> {
    match kind {
        Reparametrization::Power(p) => {
            if *p == 0 {
                return Err(Error::InvalidReparametrization("power must be at least 1".into()));
            }
            Ok(gamma.map(|x| x.substitute_power(*p as i64)))
        }
        Reparametrization::Scalar(c) => {
            if c.is_zero() {
                return Err(Error::InvalidReparametrization("scalar must be nonzero".into()));
            }
            Ok(gamma.map(|x| x.substitute_scalar(c)))
        }
        Reparametrization::Formal(coeffs) => {
            let Some((lo, hi)) = exponent_range(gamma) else {
                return Ok(gamma.clone());
            };
            let d = degree.max(1) as i64;
            let cut = d * hi - (d - 1) * lo + 1;
            let u = LaurentPoly::from_terms(
                std::iter::once((0, Rational::one()))
                    .chain(coeffs.iter().enumerate().map(|(i, c)| (i as i64 + 1, c.clone()))),
            );
            let mut out = Vec::with_capacity(gamma.entries().len());
            for entry in gamma.entries() {
                let mut acc = LaurentPoly::zero();
                for (e, c) in entry.terms() {
                    if e >= cut {
                        continue;
                    }
                    let factor = u.series_pow(e, cut - e)?;
                    acc = acc.add(&factor.shift(e).scale(c));
                }
                out.push(acc);
            }
            LaurentMatrix::new(gamma.rows(), gamma.cols(), out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::hinge::{Hinge, OrbitLabel};
    use crate::merofam::{constant_family, diagonal_family, exponents, limit_glued, limit_hinge};

    #[test]
    fn power_scales_exponents() {
        let g = diagonal_family(&[0, -1]);
        let g2 = reparametrize(&g, &Reparametrization::Power(2)).unwrap();
        let (e, h) = limit_hinge(&g2).unwrap();
        assert_eq!(e.m, vec![0, -2]);
        assert_eq!(h, Hinge::canonical(&OrbitLabel::new(vec![1, 1]).unwrap()));
    }

    #[test]
    fn scalar_rescales_terms() {
        let g = diagonal_family(&[0, -1]);
        let c = rat(2);
        let gc = reparametrize(&g, &Reparametrization::Scalar(c.clone())).unwrap();
        let (e, h) = limit_hinge(&g).unwrap();
        let (_, hc) = limit_hinge(&gc).unwrap();
        for (j, &k) in e.k.iter().enumerate() {
            let factor = crate::exactla::rational_pow(&c, -k);
            assert_eq!(hc.term(j), &h.term(j).scale(&factor).unwrap());
        }
    }

    #[test]
    fn formal_keeps_limits() {
        let a = crate::exactla::RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let mut g = constant_family(&a);
        g[(1, 0)] = LaurentPoly::z(1);
        let kind = Reparametrization::Formal(vec![rat(1)]);
        let g2 = reparametrize(&g, &kind).unwrap();
        assert_eq!(limit_glued(&g).unwrap(), limit_glued(&g2).unwrap());
        assert_eq!(exponents(&g).unwrap(), exponents(&g2).unwrap());
        assert!(reparametrize(&g, &Reparametrization::Power(0)).is_err());
        assert!(reparametrize(&g, &Reparametrization::Scalar(rat(0))).is_err());
    }
}
