//! Exterior powers: `λ_cha` of matrices and the operators `λ(S)` of linear
//! relations.
//!
//! The basis of `Λ^k` is `e_{i_1} ∧ … ∧ e_{i_k}` with `i_1 < … < i_k`, ordered
//! lexicographically on the index sets.

use crate::error::{Error, Result};
use crate::exactla::{binomial, compound, Rational, RationalMatrix, Ring, WedgeBasis};
use crate::relations::{GaMorphism, LinearRelation};

/// A linear map `Λ^{k_in} V → Λ^{k_out} W` in lexicographic wedge bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExteriorOperator {
    pub k_in: usize,
    pub k_out: usize,
    pub matrix: RationalMatrix,
}

impl ExteriorOperator {
    pub fn new(k_in: usize, k_out: usize, matrix: RationalMatrix) -> Self {
        ExteriorOperator { k_in, k_out, matrix }
    }

    pub fn zero(dim_v: usize, k_in: usize, dim_w: usize, k_out: usize) -> Self {
        Self::new(k_in, k_out, RationalMatrix::zeros(binomial(dim_w, k_out), binomial(dim_v, k_in)))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &ExteriorOperator) -> Result<ExteriorOperator> {
        if self.k_in != rhs.k_out {
            return Err(Error::dims(format!(
                "cannot compose degree {} -> {} after {} -> {}",
                self.k_in, self.k_out, rhs.k_in, rhs.k_out
            )));
        }
        Ok(Self::new(rhs.k_in, self.k_out, self.matrix.try_mul(&rhs.matrix)?))
    }

    pub fn scale(&self, c: &Rational) -> ExteriorOperator {
        Self::new(self.k_in, self.k_out, self.matrix.scale(c))
    }
}

/// `Λ^k A`: the entry at `(J, I)` is the minor of `a` on rows `J`, columns `I`.
pub fn lambda_cha(a: &RationalMatrix, k: usize) -> Result<ExteriorOperator> {
    if k > a.cols() || k > a.rows() {
        // Λ^k of the smaller side is zero-dimensional; only the square case
        // may reject a degree above n.
        if a.is_square() {
            return Err(Error::DegreeTooLarge { k, n: a.cols() });
        }
        return Ok(ExteriorOperator::zero(a.cols(), k, a.rows(), k));
    }
    Ok(ExteriorOperator::new(k, k, compound(a, k)))
}

/// `λ_cha(A)` in every degree `0..=n`.
pub fn lambda_cha_all(a: &RationalMatrix) -> Vec<ExteriorOperator> {
    (0..=a.cols().min(a.rows())).map(|k| lambda_cha(a, k).expect("degree within range")).collect()
}

/// The operator `λ(S) : Λ(V) → Λ(W)` of a relation, stored per source degree.
///
/// Source degree `k` maps to `k + shift` with `shift = dim S − dim V`; blocks
/// whose target degree falls outside `0..=dim W` are `None` (such blocks are
/// zero maps into a zero space).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaFamily {
    pub dim_v: usize,
    pub dim_w: usize,
    pub shift: isize,
    pub blocks: Vec<Option<ExteriorOperator>>,
}

impl LambdaFamily {
    pub fn block(&self, k: usize) -> Option<&ExteriorOperator> {
        self.blocks.get(k).and_then(Option::as_ref)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().all(ExteriorOperator::is_zero)
    }

    fn zero(dim_v: usize, dim_w: usize, shift: isize) -> Self {
        let blocks = (0..=dim_v)
            .map(|k| target_degree(k, shift, dim_w).map(|k_out| ExteriorOperator::zero(dim_v, k, dim_w, k_out)))
            .collect();
        LambdaFamily { dim_v, dim_w, shift, blocks }
    }
}

fn target_degree(k: usize, shift: isize, dim_w: usize) -> Option<usize> {
    let t = k as isize + shift;
    (0..=dim_w as isize).contains(&t).then_some(t as usize)
}

/// `λ(S)` computed from the canonical form of `S`.
///
/// In the adapted bases, `f_1∧…∧f_α∧g_I ↦ F_1∧…∧F_μ∧G_I` and every other basis
/// wedge goes to zero; the result is transported to the standard bases by
/// `λ_cha` of the change-of-basis matrices.
pub fn lambda_relation(s: &LinearRelation) -> LambdaFamily {
    let (dv, dw) = (s.dim_v(), s.dim_w());
    let shift = s.dim() as isize - dv as isize;
    let form = s.canonical_form();
    let (alpha, beta, mu) = (form.off_domain.len(), form.domain.len(), form.indef.len());
    let to_adapted = form.source_basis().inverse().expect("adapted basis of V is a basis");
    let from_adapted = form.target_basis();
    let blocks = (0..=dv)
        .map(|k| {
            let k_out = target_degree(k, shift, dw)?;
            let src = WedgeBasis::new(dv, k);
            let dst = WedgeBasis::new(dw, k_out);
            let mut d = RationalMatrix::zeros(dst.dim(), src.dim());
            if k >= alpha && k - alpha <= beta {
                for (col, set) in src.sets().iter().enumerate() {
                    let head_ok = (0..alpha).all(|i| set.get(i) == Some(&i));
                    let tail_ok = set[alpha..].iter().all(|&i| i < alpha + beta);
                    if head_ok && tail_ok {
                        let image: Vec<usize> = (0..mu).chain(set[alpha..].iter().map(|&i| i - alpha + mu)).collect();
                        let row = dst.index_of(&image).expect("image wedge lies in the target basis");
                        d[(row, col)] = Rational::one();
                    }
                }
            }
            let m = compound(&from_adapted, k_out)
                .try_mul(&d)
                .and_then(|x| x.try_mul(&compound(&to_adapted, k)))
                .expect("wedge dimensions agree");
            Some(ExteriorOperator::new(k, k_out, m))
        })
        .collect();
    LambdaFamily { dim_v: dv, dim_w: dw, shift, blocks }
}

/// `λ` of a morphism; the null morphism gives the zero operator in every
/// degree, with the degree shift of `Γ(V)` (zero) when `dim V = dim W`.
pub fn lambda_morphism(p: &GaMorphism) -> LambdaFamily {
    match p {
        GaMorphism::Relation(r) => lambda_relation(r),
        GaMorphism::Null { dim_v, dim_w } => LambdaFamily::zero(*dim_v, *dim_w, *dim_w as isize - *dim_v as isize),
    }
}

/// The degree-`m` block `λ^m(P) : Λ^m V → Λ^m V` of `P ∈ Γ(V)`.
pub fn lambda_m(p: &LinearRelation, m: usize) -> Result<ExteriorOperator> {
    if !p.in_gamma() {
        return Err(Error::NotInGamma);
    }
    if m > p.dim_v() {
        return Err(Error::DegreeTooLarge { k: m, n: p.dim_v() });
    }
    Ok(lambda_relation(p).blocks[m].clone().expect("Γ(V) preserves degrees"))
}

/// `λ^m` of every degree for `P ∈ Γ(V)`.
pub fn lambda_gamma(p: &LinearRelation) -> Result<Vec<ExteriorOperator>> {
    if !p.in_gamma() {
        return Err(Error::NotInGamma);
    }
    Ok(lambda_relation(p).blocks.into_iter().map(|b| b.expect("Γ(V) preserves degrees")).collect())
}

/// The scalar `c` with `lhs_k = c · rhs_k` for every `k`, if one exists.
///
/// `c = 0` is returned when `lhs` vanishes identically.
pub fn common_ratio(lhs: &[RationalMatrix], rhs: &[RationalMatrix]) -> Option<Rational> {
    if lhs.len() != rhs.len() {
        return None;
    }
    if lhs.iter().all(RationalMatrix::is_zero) {
        return Some(Rational::zero());
    }
    let mut found: Option<Rational> = None;
    for (l, r) in lhs.iter().zip(rhs) {
        if l.is_zero() && r.is_zero() {
            continue;
        }
        let c = l.proportionality(r)?;
        match &found {
            Some(prev) if *prev != c => return None,
            _ => found = Some(c),
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, Subspace};

    #[test]
    fn lambda_cha_examples() {
        let id = RationalMatrix::identity(3);
        for k in 0..=3 {
            assert_eq!(lambda_cha(&id, k).unwrap().matrix, RationalMatrix::identity(binomial(3, k)));
        }
        let d = RationalMatrix::diagonal(&[rat(2), rat(3)]);
        assert_eq!(lambda_cha(&d, 2).unwrap().matrix, RationalMatrix::from_i64(&[&[6]]));
        let a = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(lambda_cha(&a, 1).unwrap().matrix, a);
        assert!(matches!(lambda_cha(&a, 3), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn lambda_of_graph_is_lambda_cha() {
        let a = RationalMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 0]]);
        let fam = lambda_relation(&LinearRelation::graph(&a));
        assert_eq!(fam.shift, 0);
        for k in 0..=3 {
            assert_eq!(fam.block(k).unwrap(), &lambda_cha(&a, k).unwrap());
        }
        let sing = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let fam = lambda_relation(&LinearRelation::graph(&sing));
        for k in 0..=2 {
            assert_eq!(fam.block(k).unwrap(), &lambda_cha(&sing, k).unwrap());
        }
    }

    #[test]
    fn lambda_of_rank_zero_relation() {
        let s = LinearRelation::direct_sum(&Subspace::full(2), &Subspace::zero(2));
        let fam = lambda_relation(&s);
        assert_eq!(fam.block(0).unwrap().matrix, RationalMatrix::from_i64(&[&[1]]));
        assert!(fam.block(1).unwrap().is_zero());
        assert!(fam.block(2).unwrap().is_zero());
        let null = lambda_morphism(&GaMorphism::Null { dim_v: 2, dim_w: 2 });
        assert!(null.is_zero());
    }

    #[test]
    fn lambda_m_support() {
        // P_2 of the canonical hinge of type (1,1): span{0⊕e1, e2⊕e2}
        let p = LinearRelation::from_vectors(
            2,
            2,
            &[vec![rat(0), rat(0), rat(1), rat(0)], vec![rat(0), rat(1), rat(0), rat(1)]],
        )
        .unwrap();
        assert!(lambda_m(&p, 0).unwrap().is_zero());
        let l1 = lambda_m(&p, 1).unwrap();
        assert_eq!(l1.rank(), 1);
        assert_eq!(l1.matrix, RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert!(!lambda_m(&p, 2).unwrap().is_zero());
        let not_gamma = LinearRelation::direct_sum(&Subspace::full(2), &Subspace::full(2));
        assert_eq!(lambda_m(&not_gamma, 1), Err(Error::NotInGamma));
    }

    #[test]
    fn common_ratio_cases() {
        let a = RationalMatrix::from_i64(&[&[1, 2]]);
        let z = RationalMatrix::zeros(1, 2);
        assert_eq!(common_ratio(&[a.scale(&rat(3)), z.clone()], &[a.clone(), z.clone()]), Some(rat(3)));
        assert_eq!(common_ratio(std::slice::from_ref(&z), std::slice::from_ref(&a)), Some(rat(0)));
        assert_eq!(common_ratio(&[a.clone(), a.clone()], &[a.clone(), a.scale(&rat(2))]), None);
    }
}
