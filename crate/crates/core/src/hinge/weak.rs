use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::exterior::{lambda_gamma, ExteriorOperator};
use crate::relations::{compose_relations, GaMorphism, LinearRelation};

/// A chain `(R_1, …, R_s)` of `n`-dimensional relations with
/// `Ker R_j ⊇ Dom R_{j+1}` and `Im R_j ⊆ Indef R_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHinge {
    n: usize,
    terms: Vec<LinearRelation>,
}

impl WeakHinge {
    pub fn new(terms: Vec<LinearRelation>) -> Result<Self> {
        let first = terms.first().ok_or(Error::Empty("weak hinge"))?;
        let n = first.dim_v();
        if terms.iter().any(|r| r.dim_v() != n || !r.in_gamma()) {
            return Err(Error::NotInGamma);
        }
        for (j, pair) in terms.windows(2).enumerate() {
            if !pair[1].domain().is_subspace_of(pair[0].kernel()) || !pair[0].image().is_subspace_of(pair[1].indef()) {
                return Err(Error::WeakHinge(j + 1));
            }
        }
        Ok(WeakHinge { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[LinearRelation] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `λ^m(R_j)` for every term and degree, indexed `[j][m]`.
    pub fn term_lambdas(&self) -> Vec<Vec<ExteriorOperator>> {
        self.terms.iter().map(|r| lambda_gamma(r).expect("weak hinge terms lie in Γ(V)")).collect()
    }
}

/// `λ^m(ℛ)`: the first nonzero `λ^m(R_j)`, or zero.
pub fn weak_lambda_m(r: &WeakHinge, m: usize) -> Result<ExteriorOperator> {
    if m > r.n {
        return Err(Error::DegreeTooLarge { k: m, n: r.n });
    }
    Ok(r.term_lambdas()
        .into_iter()
        .map(|mut l| l.swap_remove(m))
        .find(|op| !op.is_zero())
        .unwrap_or_else(|| ExteriorOperator::new(m, m, zero_block(r.n, m))))
}

fn zero_block(n: usize, m: usize) -> RationalMatrix {
    let d = crate::exactla::binomial(n, m);
    RationalMatrix::zeros(d, d)
}

/// The product `𝒯ℛ`: every non-null `T_i ∘ R_j`, ordered by
/// `(dim Indef, dim Im)` and with repeated relations removed.
///
/// The secondary key separates a rank-zero term from a positive-rank term
/// sharing its indefiniteness (e.g. `Q_0` and `P_1` of a completed hinge).
pub fn weak_product(t: &WeakHinge, r: &WeakHinge) -> Result<WeakHinge> {
    if t.n != r.n {
        return Err(Error::dims("weak hinges of different dimension"));
    }
    let mut products = Vec::new();
    for ti in &t.terms {
        for rj in &r.terms {
            if let GaMorphism::Relation(p) = compose_relations(ti, rj)? {
                products.push(p);
            }
        }
    }
    products.sort_by_key(|p| (p.indef().dim(), p.image().dim()));
    products.dedup();
    WeakHinge::new(products)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Subspace;
    use crate::hinge::{Hinge, OrbitLabel};

    #[test]
    fn group_case() {
        let g = RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let h = RationalMatrix::from_i64(&[&[2, 0], &[1, 1]]);
        let wg = WeakHinge::new(vec![LinearRelation::graph(&g)]).unwrap();
        let wh = WeakHinge::new(vec![LinearRelation::graph(&h)]).unwrap();
        let p = weak_product(&wg, &wh).unwrap();
        assert_eq!(p.terms(), &[LinearRelation::graph(&(&g * &h))]);
    }

    #[test]
    fn completed_canonical_square() {
        let c = Hinge::canonical(&OrbitLabel::new(vec![1, 1]).unwrap()).completed_weak();
        let p = weak_product(&c, &c).unwrap();
        assert!(p.terms().iter().all(LinearRelation::in_gamma));
        // 𝒫_{1,1} is idempotent
        assert_eq!(p, c);
    }

    #[test]
    fn product_with_zero_operator_keeps_full_domain_terms() {
        let zero = WeakHinge::new(vec![LinearRelation::direct_sum(&Subspace::full(2), &Subspace::zero(2))]).unwrap();
        let c = Hinge::canonical(&OrbitLabel::new(vec![1, 1]).unwrap()).completed_weak();
        let p = weak_product(&c, &zero).unwrap();
        assert!(p.terms().iter().all(|r| r.domain().is_full()));
        assert_eq!(p, zero);
        assert_eq!(weak_lambda_m(&p, 0).unwrap().matrix, RationalMatrix::from_i64(&[&[1]]));
        assert!(weak_lambda_m(&p, 1).unwrap().is_zero());
    }

    #[test]
    fn containment_is_checked() {
        let a = LinearRelation::graph(&RationalMatrix::identity(2));
        assert_eq!(WeakHinge::new(vec![a.clone(), a]), Err(Error::WeakHinge(1)));
    }
}
