//! Linear relations `P : V ⇉ W` (subspaces of `V ⊕ W`) and their category with
//! a formal null morphism.
//!
//! Coordinates of `V ⊕ W` put the `dim_v` coordinates of `V` first.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{combine, unit, Field, Rational, RationalMatrix, Ring, Subspace};

/// A subspace of `V ⊕ W` with its kernel, image, domain and indefiniteness
/// cached at construction.
#[derive(Clone)]
pub struct LinearRelation {
    dim_v: usize,
    dim_w: usize,
    space: Subspace,
    kernel: Subspace,
    image: Subspace,
    domain: Subspace,
    indef: Subspace,
}

impl PartialEq for LinearRelation {
    fn eq(&self, other: &Self) -> bool {
        self.dim_v == other.dim_v && self.dim_w == other.dim_w && self.space == other.space
    }
}

impl Eq for LinearRelation {}

impl fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearRelation")
            .field("dim_v", &self.dim_v)
            .field("dim_w", &self.dim_w)
            .field("basis", self.space.basis())
            .finish()
    }
}

/// Attribute subspaces and numbers of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attributes {
    pub kernel: Subspace,
    pub image: Subspace,
    pub domain: Subspace,
    pub indef: Subspace,
    pub dim: usize,
    pub rank: usize,
}

impl LinearRelation {
    pub fn new(dim_v: usize, dim_w: usize, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != dim_v + dim_w {
            return Err(Error::dims(format!(
                "subspace of a {}-dimensional space cannot be a relation {dim_v} => {dim_w}",
                space.ambient_dim()
            )));
        }
        let basis = space.basis();
        let v_cols: Vec<usize> = (0..dim_v).collect();
        let w_cols: Vec<usize> = (dim_v..dim_v + dim_w).collect();
        let bv = basis.select_cols(&v_cols);
        let bw = basis.select_cols(&w_cols);
        let domain = Subspace::row_span(&bv);
        let image = Subspace::row_span(&bw);
        // c·B_W = 0 picks the vectors of P lying in V ⊕ 0, and symmetrically.
        let left_kernel_image = |kill: &RationalMatrix, keep: &RationalMatrix, ambient: usize| {
            let vectors: Vec<Vec<Rational>> =
                kill.transpose().kernel_basis().iter().map(|c| combine(c, keep)).collect();
            Subspace::span(ambient, &vectors).expect("combined vectors have the block length")
        };
        let kernel = left_kernel_image(&bw, &bv, dim_v);
        let indef = left_kernel_image(&bv, &bw, dim_w);
        debug_assert_eq!(domain.dim() - kernel.dim(), image.dim() - indef.dim(), "rank identity");
        Ok(LinearRelation { dim_v, dim_w, space, kernel, image, domain, indef })
    }

    pub fn from_vectors(dim_v: usize, dim_w: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        Self::new(dim_v, dim_w, Subspace::span(dim_v + dim_w, vectors)?)
    }

    /// `{v ⊕ a·v}` for `a : V → W` given as a `dim_w × dim_v` matrix.
    pub fn graph(a: &RationalMatrix) -> Self {
        let (dim_w, dim_v) = (a.rows(), a.cols());
        let vectors: Vec<Vec<Rational>> = (0..dim_v)
            .map(|i| {
                let mut v = unit(dim_v, i);
                v.extend(a.col(i));
                v
            })
            .collect();
        Self::from_vectors(dim_v, dim_w, &vectors).expect("graph vectors have the right length")
    }

    /// The rank-zero relation `x ⊕ y` with `x ⊂ V`, `y ⊂ W`.
    pub fn direct_sum(x: &Subspace, y: &Subspace) -> Self {
        let (dim_v, dim_w) = (x.ambient_dim(), y.ambient_dim());
        let ambient = dim_v + dim_w;
        let space =
            x.embed(ambient, 0).sum(&y.embed(ambient, dim_v)).expect("embedded subspaces share the ambient space");
        Self::new(dim_v, dim_w, space).expect("ambient dimension is dim_v + dim_w")
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn indef(&self) -> &Subspace {
        &self.indef
    }

    /// `dim P − dim Ker P − dim Indef P`.
    pub fn rank(&self) -> usize {
        self.dim() - self.kernel.dim() - self.indef.dim()
    }

    pub fn attributes(&self) -> Attributes {
        Attributes {
            kernel: self.kernel.clone(),
            image: self.image.clone(),
            domain: self.domain.clone(),
            indef: self.indef.clone(),
            dim: self.dim(),
            rank: self.rank(),
        }
    }

    /// Whether this is an `n`-dimensional relation `V ⇉ V`.
    pub fn in_gamma(&self) -> bool {
        self.dim_v == self.dim_w && self.dim() == self.dim_v
    }

    /// The same subspace read as a relation `W ⇉ V`.
    pub fn pseudoinverse(&self) -> Self {
        let vectors: Vec<Vec<Rational>> = self
            .space
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut w = v[self.dim_v..].to_vec();
                w.extend_from_slice(&v[..self.dim_v]);
                w
            })
            .collect();
        Self::from_vectors(self.dim_w, self.dim_v, &vectors).expect("swapped blocks keep the length")
    }

    /// `{v ⊕ c·w : v ⊕ w ∈ P}`.
    pub fn scale(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let vectors: Vec<Vec<Rational>> = self
            .space
            .basis_vectors()
            .into_iter()
            .map(|mut v| {
                for x in v[self.dim_v..].iter_mut() {
                    *x = x.mul(c);
                }
                v
            })
            .collect();
        Self::from_vectors(self.dim_v, self.dim_w, &vectors)
    }

    /// The operator `A` when the relation is `graph(A)`.
    pub fn operator(&self) -> Option<RationalMatrix> {
        if !self.domain.is_full() || !self.indef.is_zero() {
            return None;
        }
        let cols: Vec<Vec<Rational>> =
            (0..self.dim_v).map(|i| self.follow(&unit(self.dim_v, i)).expect("domain is all of V")).collect();
        Some(RationalMatrix::from_rows(cols, self.dim_w).expect("image vectors have length dim_w").transpose())
    }

    /// Some `w` with `v ⊕ w ∈ P`, when `v ∈ Dom P`.
    pub fn follow(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let basis = self.space.basis();
        let v_cols: Vec<usize> = (0..self.dim_v).collect();
        let w_cols: Vec<usize> = (self.dim_v..self.dim_v + self.dim_w).collect();
        let coef = basis.select_cols(&v_cols).transpose().solve(v)?;
        Some(combine(&coef, &basis.select_cols(&w_cols)))
    }

    /// Whether the relation is `Ker P ⊕ Indef P`, i.e. has rank zero.
    pub fn is_rank_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Bases realizing the normal form `span{0 ⊕ F, g ⊕ G, h ⊕ 0}`.
    ///
    /// The kernel basis is extended to a domain basis by adding domain rows that
    /// are not yet spanned; each partner `G_j` is reduced modulo `Indef P`, which
    /// makes it unique; the complements of `Dom P` and `Im P` are filled with
    /// standard basis vectors at non-pivot coordinates.
    pub fn canonical_form(&self) -> RelationCanonicalForm {
        let kernel = self.kernel.basis_vectors();
        let domain = self.kernel.extension_within(&self.domain);
        let off_domain = self.domain.complement_coordinates().into_iter().map(|i| unit(self.dim_v, i)).collect();
        let indef = self.indef.basis_vectors();
        let image = domain.iter().map(|g| self.indef.reduce(&self.follow(g).expect("g lies in the domain"))).collect();
        let off_image = self.image.complement_coordinates().into_iter().map(|i| unit(self.dim_w, i)).collect();
        RelationCanonicalForm {
            dim_v: self.dim_v,
            dim_w: self.dim_w,
            off_domain,
            domain,
            kernel,
            indef,
            image,
            off_image,
        }
    }

    /// The scalar `c` with `other = c·self`, if one exists.
    ///
    /// Rank-zero relations are fixed by every scaling; for them `Some(1)` is
    /// returned when the relations are equal.
    pub fn scale_ratio(&self, other: &LinearRelation) -> Option<Rational> {
        if self.dim_v != other.dim_v
            || self.dim_w != other.dim_w
            || self.kernel != other.kernel
            || self.indef != other.indef
            || self.domain != other.domain
            || self.image != other.image
        {
            return None;
        }
        if self.is_rank_zero() {
            return (self == other).then(Rational::one);
        }
        let form = self.canonical_form();
        let g = &form.domain[0];
        let ours = &form.image[0];
        let theirs = self.indef.reduce(&other.follow(g)?);
        let k = ours.iter().position(|x| !x.is_zero())?;
        let c = theirs[k].div(&ours[k]);
        if c.is_zero() {
            return None;
        }
        (self.scale(&c).ok()? == *other).then_some(c)
    }
}

/// Bases of `V` and `W` adapted to a relation.
///
/// `V` has basis `off_domain, domain, kernel` (complement of `Dom`, a lift of
/// `Dom / Ker`, a basis of `Ker`); `W` has basis `indef, image, off_image`. The
/// relation is spanned by `0 ⊕ indef_k`, `domain_j ⊕ image_j` and `kernel_i ⊕ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCanonicalForm {
    pub dim_v: usize,
    pub dim_w: usize,
    pub off_domain: Vec<Vec<Rational>>,
    pub domain: Vec<Vec<Rational>>,
    pub kernel: Vec<Vec<Rational>>,
    pub indef: Vec<Vec<Rational>>,
    pub image: Vec<Vec<Rational>>,
    pub off_image: Vec<Vec<Rational>>,
}

impl RelationCanonicalForm {
    /// Matrix with columns `off_domain, domain, kernel`.
    pub fn source_basis(&self) -> RationalMatrix {
        let cols: Vec<Vec<Rational>> =
            self.off_domain.iter().chain(&self.domain).chain(&self.kernel).cloned().collect();
        RationalMatrix::from_rows(cols, self.dim_v).expect("basis vectors of V").transpose()
    }

    /// Matrix with columns `indef, image, off_image`.
    pub fn target_basis(&self) -> RationalMatrix {
        let cols: Vec<Vec<Rational>> = self.indef.iter().chain(&self.image).chain(&self.off_image).cloned().collect();
        RationalMatrix::from_rows(cols, self.dim_w).expect("basis vectors of W").transpose()
    }

    pub fn reconstruct(&self) -> LinearRelation {
        let zero_v = vec![Rational::zero(); self.dim_v];
        let zero_w = vec![Rational::zero(); self.dim_w];
        let join = |a: &[Rational], b: &[Rational]| -> Vec<Rational> { a.iter().chain(b).cloned().collect() };
        let mut vectors: Vec<Vec<Rational>> = self.indef.iter().map(|f| join(&zero_v, f)).collect();
        vectors.extend(self.domain.iter().zip(&self.image).map(|(g, big_g)| join(g, big_g)));
        vectors.extend(self.kernel.iter().map(|h| join(h, &zero_w)));
        LinearRelation::from_vectors(self.dim_v, self.dim_w, &vectors)
            .expect("canonical vectors have length dim_v + dim_w")
    }
}

/// A morphism of the category of linear relations: a relation or the formal
/// null element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaMorphism {
    Relation(LinearRelation),
    Null { dim_v: usize, dim_w: usize },
}

impl GaMorphism {
    pub fn dims(&self) -> (usize, usize) {
        match self {
            GaMorphism::Relation(r) => (r.dim_v, r.dim_w),
            GaMorphism::Null { dim_v, dim_w } => (*dim_v, *dim_w),
        }
    }

    pub fn is_null(&self) -> bool {
        matches!(self, GaMorphism::Null { .. })
    }

    pub fn relation(&self) -> Option<&LinearRelation> {
        match self {
            GaMorphism::Relation(r) => Some(r),
            GaMorphism::Null { .. } => None,
        }
    }
}

impl From<LinearRelation> for GaMorphism {
    fn from(r: LinearRelation) -> Self {
        GaMorphism::Relation(r)
    }
}

/// `q ∘ p` (`p` acts first) in the category with null.
pub fn compose(q: &GaMorphism, p: &GaMorphism) -> Result<GaMorphism> {
    let (pv, pw) = p.dims();
    let (qv, qw) = q.dims();
    if pw != qv {
        return Err(Error::dims(format!("cannot compose {qv} => {qw} after {pv} => {pw}")));
    }
    match (q, p) {
        (GaMorphism::Relation(q), GaMorphism::Relation(p)) => compose_relations(q, p),
        _ => Ok(GaMorphism::Null { dim_v: pv, dim_w: qw }),
    }
}

/// `q ∘ p` for two relations: null unless `Im P + Dom Q = W` and
/// `Indef P ∩ Ker Q = 0`, otherwise the set-theoretic product.
pub fn compose_relations(q: &LinearRelation, p: &LinearRelation) -> Result<GaMorphism> {
    if p.dim_w != q.dim_v {
        return Err(Error::dims(format!("cannot compose {} => {} after {} => {}", q.dim_v, q.dim_w, p.dim_v, p.dim_w)));
    }
    let null = GaMorphism::Null { dim_v: p.dim_v, dim_w: q.dim_w };
    if !p.image.sum(&q.domain)?.is_full() || !p.indef.intersect(&q.kernel)?.is_zero() {
        return Ok(null);
    }
    Ok(GaMorphism::Relation(relation_product(q, p)))
}

/// `{v ⊕ y : ∃w, v ⊕ w ∈ P, w ⊕ y ∈ Q}` without the null test.
pub fn relation_product(q: &LinearRelation, p: &LinearRelation) -> LinearRelation {
    let (dv, dw, dy) = (p.dim_v, p.dim_w, q.dim_w);
    let pb = p.space.basis();
    let qb = q.space.basis();
    let pv = pb.select_cols(&(0..dv).collect::<Vec<_>>());
    let pw = pb.select_cols(&(dv..dv + dw).collect::<Vec<_>>());
    let qw = qb.select_cols(&(0..dw).collect::<Vec<_>>());
    let qy = qb.select_cols(&(dw..dw + dy).collect::<Vec<_>>());
    // a·P_W = b·Q_W
    let stacked = pw.vstack(&qw.scale(&Rational::one().neg()));
    let np = pb.rows();
    let vectors: Vec<Vec<Rational>> = stacked
        .transpose()
        .kernel_basis()
        .iter()
        .map(|c| {
            let mut v = combine(&c[..np], &pv);
            v.extend(combine(&c[np..], &qy));
            v
        })
        .collect();
    LinearRelation::from_vectors(dv, dy, &vectors).expect("product vectors have length dim_v + dim_y")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn v_plus_zero(n: usize) -> LinearRelation {
        LinearRelation::direct_sum(&Subspace::full(n), &Subspace::zero(n))
    }

    fn zero_plus_v(n: usize) -> LinearRelation {
        LinearRelation::direct_sum(&Subspace::zero(n), &Subspace::full(n))
    }

    #[test]
    fn graph_examples() {
        let id = LinearRelation::graph(&RationalMatrix::identity(2));
        assert_eq!(
            id.space().basis_vectors(),
            vec![vec![rat(1), rat(0), rat(1), rat(0)], vec![rat(0), rat(1), rat(0), rat(1)]]
        );
        assert_eq!(LinearRelation::graph(&RationalMatrix::zeros(2, 2)), v_plus_zero(2));

        let nil = LinearRelation::graph(&RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(nil.kernel(), &Subspace::coordinate(2, &[0]));
        assert_eq!(nil.image(), &Subspace::coordinate(2, &[0]));
        assert!(nil.domain().is_full());
        assert!(nil.indef().is_zero());
        assert_eq!(nil.rank(), 1);
    }

    #[test]
    fn attributes_examples() {
        let a = LinearRelation::graph(&RationalMatrix::identity(3)).attributes();
        assert!(a.kernel.is_zero() && a.indef.is_zero() && a.image.is_full() && a.domain.is_full());
        assert_eq!(a.rank, 3);

        let z = v_plus_zero(2).attributes();
        assert!(z.kernel.is_full() && z.image.is_zero());
        assert_eq!(z.rank, 0);

        // one vector of each kind: 0 ⊕ e1, e2 ⊕ e2, e3 ⊕ 0
        let r = LinearRelation::from_vectors(
            3,
            3,
            &[
                vec![rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)],
                vec![rat(0), rat(1), rat(0), rat(0), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)],
            ],
        )
        .unwrap();
        assert_eq!((r.rank(), r.dim()), (1, 3));
    }

    #[test]
    fn compose_examples() {
        let a = RationalMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = RationalMatrix::from_i64(&[&[0, 1], &[3, 1]]);
        let ga = GaMorphism::from(LinearRelation::graph(&a));
        let gb = GaMorphism::from(LinearRelation::graph(&b));
        assert_eq!(compose(&gb, &ga).unwrap(), GaMorphism::from(LinearRelation::graph(&(&b * &a))));

        let p = GaMorphism::from(v_plus_zero(2));
        let q = GaMorphism::from(zero_plus_v(2));
        assert!(compose(&q, &p).unwrap().is_null());

        let null = GaMorphism::Null { dim_v: 2, dim_w: 2 };
        assert!(compose(&ga, &null).unwrap().is_null());
        assert!(compose(&null, &ga).unwrap().is_null());

        let wrong = GaMorphism::from(LinearRelation::graph(&RationalMatrix::zeros(3, 3)));
        assert!(compose(&wrong, &ga).is_err());
    }

    #[test]
    fn pseudoinverse_and_scale() {
        let d = LinearRelation::graph(&RationalMatrix::diagonal(&[rat(2), rat(3)]));
        assert_eq!(d.pseudoinverse(), LinearRelation::graph(&RationalMatrix::diagonal(&[ratio(1, 2), ratio(1, 3)])));
        assert_eq!(d.scale(&rat(1)).unwrap(), d);
        assert_eq!(v_plus_zero(2).scale(&rat(7)).unwrap(), v_plus_zero(2));
        assert_eq!(d.scale(&rat(0)), Err(Error::ZeroScalar));
        let a = RationalMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        assert_eq!(
            LinearRelation::graph(&a).scale(&ratio(-3, 2)).unwrap(),
            LinearRelation::graph(&a.scale(&ratio(-3, 2)))
        );
    }

    #[test]
    fn gamma_membership() {
        assert!(LinearRelation::graph(&RationalMatrix::from_i64(&[&[0, 5], &[0, 0]])).in_gamma());
        let full = LinearRelation::direct_sum(&Subspace::full(2), &Subspace::full(2));
        assert!(!full.in_gamma());
        let line = LinearRelation::direct_sum(&Subspace::coordinate(2, &[0]), &Subspace::zero(2));
        assert!(!line.in_gamma());
    }

    #[test]
    fn canonical_form_examples() {
        let id = LinearRelation::graph(&RationalMatrix::identity(2)).canonical_form();
        assert!(id.off_domain.is_empty() && id.kernel.is_empty() && id.indef.is_empty());
        assert_eq!(id.domain, vec![unit(2, 0), unit(2, 1)]);
        assert_eq!(id.image, vec![unit(2, 0), unit(2, 1)]);

        let z = v_plus_zero(2).canonical_form();
        assert_eq!(z.kernel.len(), 2);
        assert!(z.domain.is_empty() && z.off_domain.is_empty());
        assert_eq!(z.reconstruct(), v_plus_zero(2));
    }

    #[test]
    fn scale_ratio_recovers_scalar() {
        let a = LinearRelation::graph(&RationalMatrix::from_i64(&[&[1, 1], &[0, 0]]));
        let b = a.scale(&ratio(5, 3)).unwrap();
        assert_eq!(a.scale_ratio(&b), Some(ratio(5, 3)));
        assert_eq!(a.scale_ratio(&a), Some(rat(1)));
        let other = LinearRelation::graph(&RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert_eq!(a.scale_ratio(&other), None);
    }
}
