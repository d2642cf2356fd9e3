use crate::error::{Error, Result};

use super::laurent::{check_family, lambda_family, ord, LaurentMatrix};

/// Exponents `m_1 ≥ … ≥ m_n` of a family together with the distinct values
/// `k_1 > … > k_τ` and their multiplicities `α_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentData {
    pub m: Vec<i64>,
    pub k: Vec<i64>,
    pub alpha: Vec<usize>,
}

impl ExponentData {
    /// Builds the associated numbers from a non-increasing exponent vector.
    pub fn from_exponents(m: Vec<i64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::Empty("exponent vector"));
        }
        if m.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("exponents {m:?} are not non-increasing")));
        }
        let mut k: Vec<i64> = Vec::new();
        let mut alpha: Vec<usize> = Vec::new();
        for &x in &m {
            if k.last() == Some(&x) {
                *alpha.last_mut().unwrap() += 1;
            } else {
                k.push(x);
                alpha.push(1);
            }
        }
        Ok(ExponentData { m, k, alpha })
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    /// `m_1 + … + m_j`.
    pub fn partial_sum(&self, j: usize) -> i64 {
        self.m[..j].iter().sum()
    }

    /// Positive gcd of the exponents (zero when every exponent is zero).
    pub fn gcd(&self) -> i64 {
        self.m.iter().fold(0i64, |g, &x| num_integer::gcd(g, x))
    }
}

/// `m_j = ord λ^j_cha(γ) − ord λ^{j−1}_cha(γ)`, with `ord` the pole order.
pub fn exponents(gamma: &LaurentMatrix) -> Result<ExponentData> {
    check_family(gamma)?;
    let n = gamma.rows();
    let mut prev = 0;
    let mut m = Vec::with_capacity(n);
    for j in 1..=n {
        let o = ord(&lambda_family(gamma, j))?;
        m.push(o - prev);
        prev = o;
    }
    ExponentData::from_exponents(m).map_err(|_| Error::internal("exterior pole orders are not concave"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Matrix, RationalMatrix};
    use crate::merofam::laurent::{constant_family, diagonal_family, LaurentPoly};

    #[test]
    fn diagonal_exponents() {
        let e = exponents(&diagonal_family(&[2, 1, -1])).unwrap();
        assert_eq!(e.m, vec![2, 1, -1]);
        assert_eq!(e.k, vec![2, 1, -1]);
        assert_eq!(e.alpha, vec![1, 1, 1]);
    }

    #[test]
    fn jordan_block_exponents() {
        let g: LaurentMatrix = Matrix::from_rows(
            vec![vec![LaurentPoly::z(-1), LaurentPoly::z(0)], vec![LaurentPoly::default(), LaurentPoly::z(-1)]],
            2,
        )
        .unwrap();
        let e = exponents(&g).unwrap();
        assert_eq!(e.m, vec![1, 1]);
        assert_eq!((e.k.clone(), e.alpha.clone()), (vec![1], vec![2]));
    }

    #[test]
    fn holomorphic_invertible_has_zero_exponents() {
        let g = constant_family(&RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]));
        assert_eq!(exponents(&g).unwrap().m, vec![0, 0]);
        let sing = constant_family(&RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(exponents(&sing), Err(Error::SingularFamily));
    }

    #[test]
    fn gcd_of_exponents() {
        assert_eq!(ExponentData::from_exponents(vec![4, 0, -2]).unwrap().gcd(), 2);
        assert_eq!(ExponentData::from_exponents(vec![0, 0]).unwrap().gcd(), 0);
        assert!(ExponentData::from_exponents(vec![0, 1]).is_err());
    }
}
