use super::matrix::RationalMatrix;
use super::minors::maximal_row_minors;
use super::scalar::{Field, Rational, Ring};
use crate::error::{Error, Result};

/// A linear subspace of `ℚ^ambient`, stored as its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when the
/// structs compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row span of `m`.
    pub fn row_span(m: &RationalMatrix) -> Self {
        let (r, pivots) = m.rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace { ambient: m.cols(), basis: r.select(&rows, &cols), pivots }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        let m = RationalMatrix::from_rows(vectors.to_vec(), ambient)?;
        Ok(Self::row_span(&m))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: RationalMatrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of the standard basis vectors `e_i`, `i ∈ idx`.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = idx.iter().map(|&i| unit(ambient, i)).collect();
        Self::span(ambient, &vectors).expect("unit vectors have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis so that it vanishes on every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x = Ring::sub(x, &f.mul(b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Ring::is_zero)
    }

    /// Coefficients of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::dims(format!(
                "subspaces of dimension-{} and dimension-{} spaces",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_span(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // a·A + b·B = 0  ⇒  a·A ∈ A ∩ B
        let stacked = self.basis.vstack(&other.basis);
        let da = self.dim();
        let vectors: Vec<Vec<Rational>> =
            stacked.transpose().kernel_basis().into_iter().map(|coef| combine(&coef[..da], &self.basis)).collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Standard basis vectors completing the stored basis to a basis of the
    /// whole space (the non-pivot coordinates).
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }

    /// Vectors from `sup`'s basis that extend a basis of `self` to a basis of `sup`.
    pub fn extension_within(&self, sup: &Subspace) -> Vec<Vec<Rational>> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in sup.basis_vectors() {
            if !acc.contains(&v) {
                acc = Subspace::row_span(
                    &acc.basis.vstack(&RationalMatrix::from_rows(vec![v.clone()], self.ambient).unwrap()),
                );
                out.push(v);
            }
        }
        out
    }

    /// Image under the coordinate projection onto `range`.
    pub fn project(&self, range: std::ops::Range<usize>) -> Subspace {
        Subspace::row_span(&self.basis.select_cols(&range.collect::<Vec<_>>()))
    }

    /// Embeds into a larger space, placing coordinates at `offset..offset+ambient`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= ambient, "embedding does not fit");
        let vectors: Vec<Vec<Rational>> = self
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut w = vec![Rational::zero(); ambient];
                w[offset..offset + self.ambient].clone_from_slice(&v);
                w
            })
            .collect();
        Subspace::span(ambient, &vectors).expect("embedded vectors have the ambient length")
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// `Σ coef_i · rows_i`.
pub fn combine(coef: &[Rational], rows: &RationalMatrix) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); rows.cols()];
    for (c, i) in coef.iter().zip(0..rows.rows()) {
        if c.is_zero() {
            continue;
        }
        for (x, r) in out.iter_mut().zip(rows.row(i)) {
            *x = Ring::add(x, &c.mul(r));
        }
    }
    out
}

/// Reduced row echelon form with pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    m.rref()
}

/// `{v : m·v = 0}`.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    Subspace::span(m.cols(), &m.kernel_basis()).expect("kernel vectors have the column length")
}

/// Column span of `m`.
pub fn column_span(m: &RationalMatrix) -> Subspace {
    Subspace::row_span(&m.transpose())
}

/// Normalized Plücker vector: all `k×k` minors of the basis in lexicographic
/// column-set order, scaled so the first nonzero coordinate is 1.
pub fn pluecker(s: &Subspace) -> Vec<Rational> {
    normalize_projective(maximal_row_minors(&s.basis.transpose()))
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize_projective(mut v: Vec<Rational>) -> Vec<Rational> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.inv();
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    #[test]
    fn kernel_examples() {
        let k = kernel(&RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert_eq!(k, Subspace::coordinate(2, &[1]));
        assert!(kernel(&RationalMatrix::from_i64(&[&[2, 1], &[1, 1]])).is_zero());
        let k = kernel(&RationalMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.basis_vectors(), vec![vec![rat(1), rat(-1)]]);
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::coordinate(2, &[0]);
        let e2 = Subspace::coordinate(2, &[1]);
        assert!(e1.sum(&e2).unwrap().is_full());
        let diag = Subspace::span(2, &[vec![rat(1), rat(1)]]).unwrap();
        assert!(e1.intersect(&diag).unwrap().is_zero());
        assert_eq!(diag.intersect(&diag).unwrap(), diag);
        assert!(e1.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn pluecker_examples() {
        let s = Subspace::coordinate(4, &[0, 1]);
        assert_eq!(pluecker(&s), vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)]);
        let d = Subspace::span(2, &[vec![rat(3), rat(3)]]).unwrap();
        assert_eq!(pluecker(&d), vec![rat(1), rat(1)]);
        let a = Subspace::span(2, &[vec![ratio(1, 2), rat(1)]]).unwrap();
        assert_eq!(pluecker(&a), vec![rat(1), rat(2)]);
    }

    #[test]
    fn extension_and_coordinates() {
        let line = Subspace::span(3, &[vec![rat(1), rat(1), rat(0)]]).unwrap();
        let plane = Subspace::coordinate(3, &[0, 1]);
        let ext = line.extension_within(&plane);
        assert_eq!(ext.len(), 1);
        assert_eq!(plane.coordinates(&[rat(2), rat(5), rat(0)]), Some(vec![rat(2), rat(5)]));
        assert_eq!(plane.coordinates(&[rat(0), rat(0), rat(1)]), None);
    }
}
