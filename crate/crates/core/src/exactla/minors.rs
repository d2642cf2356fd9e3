//! Index sets, minors, and compound matrices.

use std::collections::HashMap;

use itertools::Itertools;

use super::matrix::Matrix;
use super::scalar::Ring;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Basis `e_{i_1} ∧ … ∧ e_{i_k}` (`i_1 < … < i_k`) of `Λ^k` of an `n`-dimensional
/// space, lexicographically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBasis {
    n: usize,
    k: usize,
    sets: Vec<Vec<usize>>,
}

impl WedgeBasis {
    pub fn new(n: usize, k: usize) -> Self {
        WedgeBasis { n, k, sets: subsets(n, k) }
    }

    pub fn dim(&self) -> usize {
        self.sets.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn set(&self, idx: usize) -> &[usize] {
        &self.sets[idx]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Position of a strictly increasing index set.
    pub fn index_of(&self, set: &[usize]) -> Option<usize> {
        self.sets.binary_search_by(|s| s.as_slice().cmp(set)).ok()
    }
}

fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// Every `k×k` minor of `m`, keyed by (row mask, column mask).
///
/// Built level by level with Laplace expansion along the lowest row, so it only
/// needs ring operations and works over Laurent polynomials as well as fields.
fn minors_table<T: Ring>(m: &Matrix<T>, k: usize) -> HashMap<(u64, u64), T> {
    assert!(m.rows() <= 64 && m.cols() <= 64, "minor tables support at most 64 rows/cols");
    let mut level: HashMap<(u64, u64), T> = HashMap::new();
    level.insert((0, 0), T::one());
    for j in 1..=k {
        let row_sets = subsets(m.rows(), j);
        let col_sets = subsets(m.cols(), j);
        let mut next = HashMap::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            let r0 = rs[0];
            let rest = mask(&rs[1..]);
            for cs in &col_sets {
                let cmask = mask(cs);
                let mut acc = T::zero();
                for (t, &c) in cs.iter().enumerate() {
                    let a = &m[(r0, c)];
                    if a.is_zero() {
                        continue;
                    }
                    let sub = &level[&(rest, cmask & !(1u64 << c))];
                    if sub.is_zero() {
                        continue;
                    }
                    let term = a.mul(sub);
                    acc = if t % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                next.insert((mask(rs), cmask), acc);
            }
        }
        level = next;
    }
    level
}

/// `k`-th compound matrix: entry `(J, I)` is the minor with rows `J` and
/// columns `I`, both index sets in lexicographic order.
pub fn compound<T: Ring>(m: &Matrix<T>, k: usize) -> Matrix<T> {
    let table = minors_table(m, k);
    let row_sets = subsets(m.rows(), k);
    let col_sets = subsets(m.cols(), k);
    Matrix::from_fn(row_sets.len(), col_sets.len(), |i, j| table[&(mask(&row_sets[i]), mask(&col_sets[j]))].clone())
}

/// Determinant over any commutative ring.
pub fn ring_determinant<T: Ring>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let all = (1u64 << n) - 1;
    if n == 0 {
        return T::one();
    }
    minors_table(m, n).remove(&(all, all)).expect("full minor present")
}

/// All maximal minors of the column span of a tall matrix: one per `cols`-subset
/// of rows, in lexicographic order.
pub fn maximal_row_minors<T: Ring>(m: &Matrix<T>) -> Vec<T> {
    assert!(m.rows() >= m.cols(), "matrix must be tall");
    let k = m.cols();
    let table = minors_table(m, k);
    let cmask = mask(&(0..k).collect::<Vec<_>>());
    subsets(m.rows(), k).iter().map(|rs| table[&(mask(rs), cmask)].clone()).collect()
}
