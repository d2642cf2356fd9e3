use crate::error::{Error, Result};
use crate::exactla::{maximal_row_minors, normalize_projective, pluecker, Matrix, Rational, RationalMatrix, Ring};
use crate::exterior::ExteriorOperator;
use crate::hinge::{validate_hinge, GluedFamily, Hinge};
use crate::relations::LinearRelation;

use super::exponents::{exponents, ExponentData};
use super::laurent::{check_family, coefficient, lambda_family, shift_family, LaurentMatrix, LaurentPoly};

/// `[I; z^k γ]` as `n` columns of length `2n`.
fn graph_columns(gamma: &LaurentMatrix, k: i64) -> Vec<Vec<LaurentPoly>> {
    let n = gamma.rows();
    (0..n)
        .map(|j| {
            let mut col: Vec<LaurentPoly> =
                (0..n).map(|i| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect();
            col.extend((0..n).map(|i| gamma[(i, j)].shift(k)));
            col
        })
        .collect()
}

fn column_ord(col: &[LaurentPoly]) -> i64 {
    col.iter().filter_map(LaurentPoly::ord).min().expect("graph columns are nonzero")
}

/// `lim_{z→0} z^k graph(γ(z))` in the Grassmannian of `n`-dimensional subspaces
/// of `V ⊕ V`.
///
/// Columns of `[I; z^k γ]` are normalized to order zero and evaluated at `0`;
/// while the values are dependent, the highest-index column taking part in a
/// dependency is replaced by that combination, renormalized. Each step lowers
/// the least order of the maximal minors, which is bounded below by zero.
pub fn limit_relation(gamma: &LaurentMatrix, k: i64) -> Result<LinearRelation> {
    check_family(gamma)?;
    let n = gamma.rows();
    let mut cols: Vec<Vec<LaurentPoly>> = graph_columns(gamma, k)
        .into_iter()
        .map(|c| {
            let o = column_ord(&c);
            c.iter().map(|p| p.shift(-o)).collect()
        })
        .collect();
    loop {
        let values = RationalMatrix::from_fn(2 * n, n, |i, j| cols[j][i].coeff(0));
        let dependencies = values.kernel_basis();
        let Some(c) = dependencies.first() else {
            let vectors: Vec<Vec<Rational>> = (0..n).map(|j| values.col(j)).collect();
            return LinearRelation::from_vectors(n, n, &vectors);
        };
        let j = (0..n).rev().find(|&j| !c[j].is_zero()).expect("kernel vectors are nonzero");
        let mut combo = vec![LaurentPoly::zero(); 2 * n];
        for (t, col) in cols.iter().enumerate() {
            if c[t].is_zero() {
                continue;
            }
            for (acc, p) in combo.iter_mut().zip(col) {
                *acc = acc.add(&p.scale(&c[t]));
            }
        }
        let o = column_ord(&combo);
        debug_assert!(o > 0, "a dependency of the values vanishes at zero");
        cols[j] = combo.iter().map(|p| p.shift(-o)).collect();
    }
}

/// The limit predicted by the maximal minors of `[I; z^k γ]`: their lowest
/// coefficients, normalized.
pub fn pluecker_limit(gamma: &LaurentMatrix, k: i64) -> Vec<Rational> {
    let n = gamma.rows();
    let cols = graph_columns(gamma, k);
    let tall = Matrix::from_fn(2 * n, n, |i, j| cols[j][i].clone());
    let minors = maximal_row_minors(&tall);
    let mu = minors.iter().filter_map(LaurentPoly::ord).min().expect("the top minor is 1");
    normalize_projective(minors.iter().map(|p| p.coeff(mu)).collect())
}

/// Normalized Plücker vector of a relation, for comparison with
/// [`pluecker_limit`].
pub fn relation_pluecker(r: &LinearRelation) -> Vec<Rational> {
    pluecker(r.space())
}

/// The exponents and the hinge `(P_1, …, P_τ)` with
/// `P_j = lim z^{k_j} graph(γ(z))`.
pub fn limit_hinge(gamma: &LaurentMatrix) -> Result<(ExponentData, Hinge)> {
    let e = exponents(gamma)?;
    let terms = e.k.iter().map(|&k| limit_relation(gamma, k)).collect::<Result<Vec<_>>>()?;
    for (p, &alpha) in terms.iter().zip(&e.alpha) {
        if p.rank() != alpha {
            return Err(Error::internal(format!("limit term has rank {} instead of {alpha}", p.rank())));
        }
    }
    let h = validate_hinge(terms).map_err(|err| Error::internal(format!("limit is not a hinge: {err}")))?;
    Ok((e, h))
}

/// `ℒ^j = lim z^{m_1+…+m_j} λ^j_cha(γ(z))`, the constant term.
pub fn limit_glued(gamma: &LaurentMatrix) -> Result<GluedFamily> {
    let e = exponents(gamma)?;
    let n = e.n();
    let blocks = (0..=n)
        .map(|j| {
            let scaled = shift_family(&lambda_family(gamma, j), e.partial_sum(j));
            ExteriorOperator::new(j, j, coefficient(&scaled, 0))
        })
        .collect();
    GluedFamily::new(n, blocks)
}

/// Whether `z^k graph(γ)` has a limit of positive rank.
pub fn limit_rank(gamma: &LaurentMatrix, k: i64) -> Result<usize> {
    Ok(limit_relation(gamma, k)?.rank())
}

/// `lim γ(z)` when the family is holomorphic and invertible at zero.
pub fn value_at_zero(gamma: &LaurentMatrix) -> Option<RationalMatrix> {
    if gamma.entries().iter().any(|p| p.ord().is_some_and(|o| o < 0)) {
        return None;
    }
    let g = coefficient(gamma, 0);
    (g.rank() == g.rows()).then_some(g)
}

/// Whether `lim z^k graph(γ)` is a sum of a horizontal and a vertical
/// subspace; this happens exactly for `k` outside the exponent values.
pub fn is_rank_zero_limit(gamma: &LaurentMatrix, k: i64) -> Result<bool> {
    Ok(limit_relation(gamma, k)?.is_rank_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::hinge::{glue, OrbitLabel};
    use crate::merofam::factor::{default_precision, factorize};
    use crate::merofam::laurent::{constant_family, diagonal_family};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn diag_one_z_limits() {
        let g = diagonal_family(&[0, -1]);
        let p0 = limit_relation(&g, 0).unwrap();
        assert_eq!(p0, LinearRelation::from_vectors(2, 2, &[v(&[1, 0, 1, 0]), v(&[0, 1, 0, 0])]).unwrap());
        let p1 = limit_relation(&g, -1).unwrap();
        assert_eq!(p1, LinearRelation::from_vectors(2, 2, &[v(&[0, 0, 1, 0]), v(&[0, 1, 0, 1])]).unwrap());
        let (e, h) = limit_hinge(&g).unwrap();
        assert_eq!(e.m, vec![0, -1]);
        assert_eq!(h, Hinge::canonical(&OrbitLabel::new(vec![1, 1]).unwrap()));
        assert!(is_rank_zero_limit(&g, 1).unwrap());
        assert!(is_rank_zero_limit(&g, -2).unwrap());
    }

    #[test]
    fn holomorphic_limit_is_value() {
        let a = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let g = constant_family(&a);
        assert_eq!(limit_relation(&g, 0).unwrap(), LinearRelation::graph(&a));
        assert_eq!(limit_glued(&g).unwrap(), GluedFamily::from_group(&a).unwrap());
    }

    #[test]
    fn diagonal_gives_canonical_hinge() {
        let m = [2, 2, 0, -1];
        let g = diagonal_family(&m);
        let (e, h) = limit_hinge(&g).unwrap();
        assert_eq!(e.alpha, vec![2, 1, 1]);
        assert_eq!(h, Hinge::canonical(&OrbitLabel::new(vec![2, 1, 1]).unwrap()));
        assert_eq!(limit_glued(&g).unwrap(), glue(&h));
    }

    #[test]
    fn framed_family_two_paths() {
        let left = RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let right = RationalMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 0], &[0, 3, 1]]);
        let mut g = &(&constant_family(&left) * &diagonal_family(&[1, 0, 0])) * &constant_family(&right);
        g[(0, 2)] = g[(0, 2)].add(&LaurentPoly::z(1));
        let (e, h) = limit_hinge(&g).unwrap();
        assert_eq!(limit_glued(&g).unwrap(), glue(&h));
        let f = factorize(&g, default_precision(&g).unwrap()).unwrap();
        assert_eq!(f.m, e.m);
        let alpha = OrbitLabel::new(e.alpha.clone()).unwrap();
        assert_eq!(Hinge::canonical(&alpha).act(&f.a0(), &f.b0()).unwrap(), h);
        for &k in &e.k {
            assert_eq!(relation_pluecker(&limit_relation(&g, k).unwrap()), pluecker_limit(&g, k));
        }
    }
}
