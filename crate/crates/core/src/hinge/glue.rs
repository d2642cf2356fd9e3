use crate::error::{Error, Result};
use crate::exactla::{binomial, Rational, RationalMatrix, Ring};
use crate::exterior::{lambda_cha, lambda_gamma, ExteriorOperator};

use super::{Hinge, WeakHinge};

/// An element `(A_0, …, A_n)` of `∏ Mat(Λ^m V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedFamily {
    n: usize,
    blocks: Vec<ExteriorOperator>,
}

impl GluedFamily {
    pub fn new(n: usize, blocks: Vec<ExteriorOperator>) -> Result<Self> {
        if blocks.len() != n + 1 {
            return Err(Error::dims(format!("expected {} blocks, got {}", n + 1, blocks.len())));
        }
        for (m, b) in blocks.iter().enumerate() {
            let d = binomial(n, m);
            if b.k_in != m || b.k_out != m || b.matrix.rows() != d || b.matrix.cols() != d {
                return Err(Error::dims(format!("block {m} must be a {d} × {d} operator on Λ^{m}")));
            }
        }
        Ok(GluedFamily { n, blocks })
    }

    /// `(λ_cha^0(g), …, λ_cha^n(g))`.
    pub fn from_group(g: &RationalMatrix) -> Result<Self> {
        let n = g.rows();
        if !g.is_square() {
            return Err(Error::dims("group element must be square"));
        }
        Self::new(n, (0..=n).map(|m| lambda_cha(g, m)).collect::<Result<_>>()?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[ExteriorOperator] {
        &self.blocks
    }

    pub fn block(&self, m: usize) -> &ExteriorOperator {
        &self.blocks[m]
    }

    pub fn matrices(&self) -> Vec<RationalMatrix> {
        self.blocks.iter().map(|b| b.matrix.clone()).collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.blocks.iter().all(|b| !b.is_zero())
    }

    /// `λ_cha(g1) · 𝒜 · λ_cha(g2)` degreewise.
    pub fn act(&self, g1: &RationalMatrix, g2: &RationalMatrix) -> Result<Self> {
        let left = Self::from_group(g1)?;
        let right = Self::from_group(g2)?;
        glued_product(&glued_product(&left, self)?, &right)
    }
}

/// The embedding `ℒ`: `λ(P_1) = λ_cha(A)` for `P_1 = graph(A)`, each next
/// `λ(P_{j+1})` scaled to agree with `λ(P_j)` in the overlap degree
/// `dim Im P_j`; `ℒ^m` is the nonzero scaled term in degree `m`.
pub fn glue(h: &Hinge) -> GluedFamily {
    let n = h.n();
    let a = h.term(0).operator().expect("the first hinge term is an operator");
    let mut scaled: Vec<Vec<ExteriorOperator>> =
        vec![(0..=n).map(|m| lambda_cha(&a, m).expect("degree within range")).collect()];
    for j in 1..h.len() {
        let raw = lambda_gamma(h.term(j)).expect("hinge terms lie in Γ(V)");
        let d = h.term(j).indef().dim();
        let c = scaled[j - 1][d]
            .matrix
            .proportionality(&raw[d].matrix)
            .expect("adjacent hinge terms agree up to scalar in the overlap degree");
        scaled.push(raw.iter().map(|op| op.scale(&c)).collect());
    }
    let blocks = (0..=n)
        .map(|m| {
            scaled
                .iter()
                .map(|term| &term[m])
                .find(|op| !op.is_zero())
                .cloned()
                .expect("some hinge term is nonzero in every degree")
        })
        .collect();
    GluedFamily { n, blocks }
}

/// Whether `family` is well glued over `r`: each term carries one nonzero
/// scalar `c_j` with `A_m = c_j λ^m(R_j)` throughout its support, blocks outside
/// all supports vanish, and an operator first term forces `A = λ_cha(R_1)`.
pub fn well_glued(family: &GluedFamily, r: &WeakHinge) -> bool {
    if family.n != r.n() {
        return false;
    }
    let lambdas = r.term_lambdas();
    let mut covered = vec![false; family.n + 1];
    for term in &lambdas {
        let mut c: Option<Rational> = None;
        for (m, op) in term.iter().enumerate() {
            if op.is_zero() {
                continue;
            }
            covered[m] = true;
            let Some(ratio) = family.blocks[m].matrix.proportionality(&op.matrix) else {
                return false;
            };
            if ratio.is_zero() || c.as_ref().is_some_and(|prev| *prev != ratio) {
                return false;
            }
            c = Some(ratio);
        }
    }
    if (0..=family.n).any(|m| !covered[m] && !family.blocks[m].is_zero()) {
        return false;
    }
    if let Some(a) = r.terms()[0].operator() {
        let top = r.terms()[0].image().dim();
        if (0..=top).any(|m| family.blocks[m] != lambda_cha(&a, m).expect("degree within range")) {
            return false;
        }
    }
    true
}

/// The degreewise product `A_m · B_m`.
pub fn glued_product(a: &GluedFamily, b: &GluedFamily) -> Result<GluedFamily> {
    if a.n != b.n {
        return Err(Error::dims("glued families of different dimension"));
    }
    let blocks = a.blocks.iter().zip(&b.blocks).map(|(x, y)| x.compose(y)).collect::<Result<_>>()?;
    Ok(GluedFamily { n: a.n, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, WedgeBasis};
    use crate::hinge::{weak_product, OrbitLabel};

    #[test]
    fn glue_of_group_is_lambda_cha() {
        let g = RationalMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let h = Hinge::from_group(&g).unwrap();
        assert_eq!(glue(&h), GluedFamily::from_group(&g).unwrap());
    }

    #[test]
    fn glue_of_canonical_is_zero_one_diagonal() {
        let alpha = OrbitLabel::new(vec![2, 1, 1]).unwrap();
        let fam = glue(&Hinge::canonical(&alpha));
        let u = alpha.partial_sums();
        for m in 0..=4 {
            let basis = WedgeBasis::new(4, m);
            let diag: Vec<Rational> = basis
                .sets()
                .iter()
                .map(|set| {
                    let fixed = (0..alpha.len()).any(|j| {
                        u[j] <= m
                            && m <= u[j + 1]
                            && set[..u[j]].iter().copied().eq(0..u[j])
                            && set[u[j]..].iter().all(|&l| l < u[j + 1])
                    });
                    rat(fixed as i64)
                })
                .collect();
            assert_eq!(fam.block(m).matrix, RationalMatrix::diagonal(&diag));
        }
        assert!(well_glued(&fam, &Hinge::canonical(&alpha).completed_weak()));
    }

    #[test]
    fn identity_is_neutral() {
        let alpha = OrbitLabel::new(vec![1, 2]).unwrap();
        let g = RationalMatrix::from_i64(&[&[1, 0, 1], &[1, 1, 0], &[0, 0, 1]]);
        let h = Hinge::canonical(&alpha).act(&g, &RationalMatrix::identity(3)).unwrap();
        let fam = glue(&h);
        let id = glue(&Hinge::identity(3));
        assert_eq!(glued_product(&fam, &id).unwrap(), fam);
        assert_eq!(glued_product(&id, &fam).unwrap(), fam);
    }

    #[test]
    fn product_lies_over_weak_product() {
        let h = Hinge::canonical(&OrbitLabel::new(vec![1, 1]).unwrap());
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let k = h.act(&swap, &swap).unwrap();
        let prod = glued_product(&glue(&h), &glue(&k)).unwrap();
        let under = weak_product(&h.completed_weak(), &k.completed_weak()).unwrap();
        assert_eq!(under.len(), 2);
        assert!(prod.block(1).is_zero());
        assert!(well_glued(&prod, &under));
    }
}
