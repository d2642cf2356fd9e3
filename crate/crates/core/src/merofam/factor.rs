use crate::error::{Error, Result};
use crate::exactla::{Matrix, RationalMatrix, Ring};

use super::exponents::exponents;
use super::laurent::{
    check_family, coefficient, determinant, exponent_range, ord, shift_family, LaurentMatrix, LaurentPoly,
};

/// Jets `a(z)`, `b(z)` with `γ(z) = a(z) · diag(z^{−m_i}) · b(z)` modulo the
/// working precision.
///
/// With `M = z^{m_1} γ`, the stored data satisfy
/// `a · diag(z^{m_1 − m_i}) · b ≡ M (mod z^N)`; `a` and `b` are polynomials of
/// degree below `N` and are invertible at `z = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub m: Vec<i64>,
    pub precision: i64,
    pub a: LaurentMatrix,
    pub b: LaurentMatrix,
}

impl Factorization {
    pub fn a0(&self) -> RationalMatrix {
        coefficient(&self.a, 0)
    }

    pub fn b0(&self) -> RationalMatrix {
        coefficient(&self.b, 0)
    }

    /// `m_1 − m_n`.
    pub fn spread(&self) -> i64 {
        self.m[0] - self.m[self.m.len() - 1]
    }

    /// Whether `a · diag(z^{m_1−m_i}) · b ≡ z^{m_1} γ (mod z^N)`.
    pub fn reassembles(&self, gamma: &LaurentMatrix) -> bool {
        let n = self.m.len();
        let diag: Vec<LaurentPoly> = self.m.iter().map(|&mi| LaurentPoly::z(self.m[0] - mi)).collect();
        let prod = (&(&self.a * &Matrix::diagonal(&diag)) * &self.b).map(|p| p.truncate(self.precision));
        let target = shift_family(gamma, self.m[0]).map(|p| p.truncate(self.precision));
        prod.rows() == n && prod == target
    }

    /// Whether two factorizations of the same family agree on the jets both
    /// determine, i.e. modulo `z^{N − (m_1 − m_n)}` for the smaller `N`.
    pub fn agrees_with(&self, other: &Factorization) -> bool {
        if self.m != other.m {
            return false;
        }
        let bound = self.precision.min(other.precision) - self.spread();
        let cut = |x: &LaurentMatrix| x.map(|p| p.truncate(bound));
        cut(&self.a) == cut(&other.a) && cut(&self.b) == cut(&other.b)
    }
}

/// `(m_1 − m_n) + 1 + (max exponent − min exponent of γ)`.
pub fn default_precision(gamma: &LaurentMatrix) -> Result<i64> {
    let e = exponents(gamma)?;
    let (lo, hi) = exponent_range(gamma).ok_or(Error::ZeroPolynomial)?;
    Ok(e.m[0] - e.m[e.n() - 1] + 1 + (hi - lo))
}

/// Gauss elimination over truncated power series: repeatedly take an entry of
/// minimal order in the remaining block as pivot, clear its column and row with
/// series multipliers, and record the inverse elementary operations.
pub fn factorize(gamma: &LaurentMatrix, precision: i64) -> Result<Factorization> {
    check_family(gamma)?;
    let n = gamma.rows();
    let top = ord(gamma)?;
    let big_n = precision;
    // Σ d_i = ord det M bounds every pivot order
    let required = determinant(gamma)?.try_ord()? + n as i64 * top + 1;
    let exhausted = || Error::PrecisionExhausted { given: big_n.max(0) as usize, required: required as usize };
    if big_n < 1 {
        return Err(exhausted());
    }
    let mut m = shift_family(gamma, top).map(|p| p.truncate(big_n));
    let mut l_inv: LaurentMatrix = Matrix::identity(n);
    let mut r_inv: LaurentMatrix = Matrix::identity(n);
    let mut units = Vec::with_capacity(n);
    let mut orders = Vec::with_capacity(n);
    for s in 0..n {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in s..n {
            for j in s..n {
                if let Some(o) = m[(i, j)].ord() {
                    if best.is_none_or(|(b, _, _)| o < b) {
                        best = Some((o, i, j));
                    }
                }
            }
        }
        let (p, pi, pj) = best.ok_or_else(exhausted)?;
        m.swap_rows(s, pi);
        swap_cols(&mut l_inv, s, pi);
        swap_cols(&mut m, s, pj);
        r_inv.swap_rows(s, pj);

        let unit = m[(s, s)].shift(-p);
        let inv = unit.series_inverse(big_n - p)?;
        let quotient = |x: &LaurentPoly| x.shift(-p).mul_truncated(&inv, big_n - p);
        for r in s + 1..n {
            if m[(r, s)].is_zero() {
                continue;
            }
            let q = quotient(&m[(r, s)]);
            for c in s..n {
                let v = m[(r, c)].sub(&q.mul_truncated(&m[(s, c)], big_n));
                m[(r, c)] = v;
            }
            for i in 0..n {
                let v = l_inv[(i, s)].add(&q.mul_truncated(&l_inv[(i, r)], big_n));
                l_inv[(i, s)] = v;
            }
        }
        for c in s + 1..n {
            if m[(s, c)].is_zero() {
                continue;
            }
            let q = quotient(&m[(s, c)]);
            m[(s, c)] = LaurentPoly::zero();
            for j in 0..n {
                let v = r_inv[(s, j)].add(&q.mul_truncated(&r_inv[(c, j)], big_n));
                r_inv[(s, j)] = v;
            }
        }
        units.push(unit.truncate(big_n - p));
        orders.push(p);
    }
    if orders[n - 1] >= big_n {
        return Err(exhausted());
    }
    let a = Matrix::from_fn(n, n, |i, j| l_inv[(i, j)].mul_truncated(&units[j], big_n));
    let m_vec = orders.iter().map(|d| top - d).collect();
    Ok(Factorization { m: m_vec, precision: big_n, a, b: r_inv })
}

/// Factorizes at `precision` and at `precision + 5`, requiring agreement.
pub fn factorize_stable(gamma: &LaurentMatrix, precision: i64) -> Result<Factorization> {
    let f = factorize(gamma, precision)?;
    let g = factorize(gamma, precision + 5)?;
    if !f.agrees_with(&g) {
        return Err(Error::internal("factorization changed under a precision increase"));
    }
    Ok(f)
}

fn swap_cols(x: &mut LaurentMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..x.rows() {
        let tmp = x[(i, a)].clone();
        x[(i, a)] = x[(i, b)].clone();
        x[(i, b)] = tmp;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::merofam::laurent::diagonal_family;

    fn jordan() -> LaurentMatrix {
        Matrix::from_rows(
            vec![vec![LaurentPoly::z(-1), LaurentPoly::z(0)], vec![LaurentPoly::zero(), LaurentPoly::z(-1)]],
            2,
        )
        .unwrap()
    }

    #[test]
    fn diagonal_needs_no_transformation() {
        let g = diagonal_family(&[2, 0, -1]);
        let f = factorize(&g, default_precision(&g).unwrap()).unwrap();
        assert_eq!(f.m, vec![2, 0, -1]);
        assert_eq!(f.a, Matrix::identity(3));
        assert_eq!(f.b, Matrix::identity(3));
    }

    #[test]
    fn jordan_block() {
        let g = jordan();
        let n = default_precision(&g).unwrap();
        let f = factorize_stable(&g, n).unwrap();
        assert_eq!(f.m, vec![1, 1]);
        assert!(f.a0().determinant().unwrap() != rat(0));
        assert!(f.b0().determinant().unwrap() != rat(0));
        assert!(f.reassembles(&g));
    }

    #[test]
    fn low_precision_is_reported() {
        let g = diagonal_family(&[3, 0]);
        assert!(matches!(factorize(&g, 2), Err(Error::PrecisionExhausted { given: 2, required: 4 })));
        assert!(factorize(&g, 4).is_ok());
    }

    #[test]
    fn mixed_entries() {
        let g: LaurentMatrix = Matrix::from_rows(
            vec![
                vec![LaurentPoly::z(-1), LaurentPoly::from_terms([(0, rat(1)), (1, rat(2))])],
                vec![LaurentPoly::from_terms([(-2, rat(1)), (0, rat(3))]), LaurentPoly::z(1)],
            ],
            2,
        )
        .unwrap();
        let e = exponents(&g).unwrap();
        let f = factorize_stable(&g, default_precision(&g).unwrap()).unwrap();
        assert_eq!(f.m, e.m);
        assert!(f.reassembles(&g));
    }
}
