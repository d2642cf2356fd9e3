//! Hinges: chains of relations in `Γ(V)` compactifying `GL_n`, their orbits
//! under `GL_n × GL_n`, the alternative for `λ^m`, weak hinges and products,
//! and the glued normalization `ℒ`.

mod glue;
mod weak;

pub use glue::{glue, glued_product, well_glued, GluedFamily};
pub use weak::{weak_lambda_m, weak_product, WeakHinge};

use std::fmt;

use crate::error::{Error, HingeAxiom, Result};
use crate::exactla::{unit, Rational, RationalMatrix, Subspace};
use crate::exterior::{lambda_gamma, ExteriorOperator};
use crate::relations::{relation_product, LinearRelation};

/// A composition `α = (α_1, …, α_k)` of `n` with positive parts; the orbit
/// `𝒪[α]` consists of hinges with `rk P_j = α_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel(Vec<usize>);

impl OrbitLabel {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty("orbit label"));
        }
        if parts.contains(&0) {
            return Err(Error::Parse("orbit label parts must be positive".into()));
        }
        Ok(OrbitLabel(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// `u_1, …, u_{k+1}` with `u_j = α_1 + … + α_{j−1}` (so `u_1 = 0`, `u_{k+1} = n`).
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = vec![0];
        for &a in &self.0 {
            acc.push(acc.last().unwrap() + a);
        }
        acc
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `n`, i.e. all orbit labels; there are `2^{n−1}` of them.
pub fn compositions(n: usize) -> Vec<OrbitLabel> {
    if n == 0 {
        return Vec::new();
    }
    // bit i of the mask cuts between positions i and i+1
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            OrbitLabel(parts)
        })
        .collect()
}

/// A chain `(P_1, …, P_k)` satisfying the hinge axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hinge {
    n: usize,
    terms: Vec<LinearRelation>,
}

/// Checks every hinge axiom and returns the hinge.
pub fn validate_hinge(terms: Vec<LinearRelation>) -> Result<Hinge> {
    let fail = |axiom, index| Err(Error::HingeAxiom { axiom, index });
    let Some(first) = terms.first() else {
        return fail(HingeAxiom::Length, 0);
    };
    let n = first.dim_v();
    for (j, p) in terms.iter().enumerate() {
        if p.dim_v() != n || !p.in_gamma() {
            return fail(HingeAxiom::TermDimension, j + 1);
        }
    }
    for (j, pair) in terms.windows(2).enumerate() {
        if pair[0].kernel() != pair[1].domain() {
            return fail(HingeAxiom::KernelMeetsDomain, j + 1);
        }
    }
    for (j, pair) in terms.windows(2).enumerate() {
        if pair[0].image() != pair[1].indef() {
            return fail(HingeAxiom::ImageMeetsIndef, j + 1);
        }
    }
    if !first.domain().is_full() {
        return fail(HingeAxiom::FirstDomainFull, 1);
    }
    let k = terms.len();
    if !terms[k - 1].image().is_full() {
        return fail(HingeAxiom::LastImageFull, k);
    }
    if let Some(j) = terms.iter().position(LinearRelation::is_rank_zero) {
        return fail(HingeAxiom::PositiveRank, j + 1);
    }
    if k > n {
        return fail(HingeAxiom::Length, k);
    }
    Ok(Hinge { n, terms })
}

/// Which case of the alternative holds for `λ^m` of a hinge (0-based term
/// indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternative {
    /// Exactly one term has `λ^m(P_j) ≠ 0`.
    Unique(usize),
    /// `λ^m(P_j)` and `λ^m(P_{j+1})` are the only nonzero terms; both have
    /// rank one and are proportional to each other and to `λ^m(Q_j)`.
    Pair(usize),
}

impl Hinge {
    pub fn new(terms: Vec<LinearRelation>) -> Result<Self> {
        validate_hinge(terms)
    }

    /// The one-term hinge `graph(g)` of an invertible `g`.
    pub fn from_group(g: &RationalMatrix) -> Result<Self> {
        if !g.is_square() {
            return Err(Error::dims("group element must be square"));
        }
        if g.rank() < g.rows() {
            return Err(Error::Singular);
        }
        validate_hinge(vec![LinearRelation::graph(g)])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_group(&RationalMatrix::identity(n)).expect("the identity is invertible")
    }

    /// The hinge determined by a decreasing kernel flag, an increasing image
    /// flag and maps between consecutive quotients.
    ///
    /// `kernels = [K_0 = V, K_1, …, K_k = 0]`, `images = [I_0 = 0, I_1, …, I_k = V]`,
    /// and `maps[j−1]` is an `n × n` matrix `a_j` sending `K_{j−1}` into `I_j` and
    /// `K_j` into `I_{j−1}`; then `P_j = {v ⊕ (a_j v + y) : v ∈ K_{j−1}, y ∈ I_{j−1}}`.
    /// The induced maps `K_{j−1}/K_j → I_j/I_{j−1}` must be invertible, which the
    /// final validation enforces.
    pub fn from_flags(kernels: &[Subspace], images: &[Subspace], maps: &[RationalMatrix]) -> Result<Self> {
        let k = maps.len();
        if kernels.len() != k + 1 || images.len() != k + 1 {
            return Err(Error::dims("flags must have one more member than there are maps"));
        }
        if k == 0 {
            return Err(Error::Empty("flag data"));
        }
        let n = kernels[0].ambient_dim();
        let mut terms = Vec::with_capacity(k);
        for j in 1..=k {
            let a = &maps[j - 1];
            if a.rows() != n || a.cols() != n {
                return Err(Error::dims("flag maps must be n × n"));
            }
            let (dom, ker) = (&kernels[j - 1], &kernels[j]);
            let (prev, next) = (&images[j - 1], &images[j]);
            if !ker.is_subspace_of(dom) || !prev.is_subspace_of(next) {
                return Err(Error::dims(format!("flags are not nested at step {j}")));
            }
            for v in dom.basis_vectors() {
                if !next.contains(&a.apply(&v)) {
                    return Err(Error::dims(format!("map {j} does not send K_{} into I_{j}", j - 1)));
                }
            }
            for v in ker.basis_vectors() {
                if !prev.contains(&a.apply(&v)) {
                    return Err(Error::dims(format!("map {j} does not send K_{j} into I_{}", j - 1)));
                }
            }
            let zero = vec![Rational::from_integer(0.into()); n];
            let mut vectors: Vec<Vec<Rational>> = dom
                .basis_vectors()
                .into_iter()
                .map(|v| {
                    let mut x = v.clone();
                    x.extend(a.apply(&v));
                    x
                })
                .collect();
            vectors.extend(prev.basis_vectors().into_iter().map(|y| {
                let mut x = zero.clone();
                x.extend(y);
                x
            }));
            terms.push(LinearRelation::from_vectors(n, n, &vectors)?);
        }
        validate_hinge(terms)
    }

    /// The canonical hinge `𝒫_α`: `P_j` is spanned by `0 ⊕ e_σ` for `σ ≤ u_j`,
    /// `e_τ ⊕ e_τ` for `u_j < τ ≤ u_{j+1}` and `e_μ ⊕ 0` for `μ > u_{j+1}`.
    pub fn canonical(alpha: &OrbitLabel) -> Self {
        let n = alpha.n();
        let u = alpha.partial_sums();
        let terms = (0..alpha.len())
            .map(|j| {
                let vectors: Vec<Vec<Rational>> = (0..n)
                    .map(|i| {
                        let e = unit(n, i);
                        let zero = vec![Rational::from_integer(0.into()); n];
                        if i < u[j] {
                            [zero, e].concat()
                        } else if i < u[j + 1] {
                            [e.clone(), e].concat()
                        } else {
                            [e, zero].concat()
                        }
                    })
                    .collect();
                LinearRelation::from_vectors(n, n, &vectors).expect("vectors of length 2n")
            })
            .collect();
        validate_hinge(terms).expect("canonical hinges satisfy the axioms")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[LinearRelation] {
        &self.terms
    }

    pub fn term(&self, j: usize) -> &LinearRelation {
        &self.terms[j]
    }

    pub fn into_terms(self) -> Vec<LinearRelation> {
        self.terms
    }

    /// `(rk P_1, …, rk P_k)`.
    pub fn orbit_label(&self) -> OrbitLabel {
        OrbitLabel(self.terms.iter().map(LinearRelation::rank).collect())
    }

    /// `g1 · 𝒫 · g2`, applied termwise as `graph(g1) ∘ P_j ∘ graph(g2)`.
    pub fn act(&self, g1: &RationalMatrix, g2: &RationalMatrix) -> Result<Hinge> {
        for g in [g1, g2] {
            if g.rows() != self.n || g.cols() != self.n {
                return Err(Error::dims("group elements must be n × n"));
            }
            if g.rank() < self.n {
                return Err(Error::Singular);
            }
        }
        let (left, right) = (LinearRelation::graph(g1), LinearRelation::graph(g2));
        let terms = self.terms.iter().map(|p| relation_product(&left, &relation_product(p, &right))).collect();
        validate_hinge(terms)
    }

    /// `(Q_0, P_1, Q_1, …, P_k, Q_k)` with `Q_0 = V ⊕ 0`, `Q_j = Ker P_j ⊕ Im P_j`
    /// and `Q_k = 0 ⊕ V`.
    pub fn completed(&self) -> Vec<LinearRelation> {
        let n = self.n;
        let mut out = vec![LinearRelation::direct_sum(&Subspace::full(n), &Subspace::zero(n))];
        for p in &self.terms {
            out.push(p.clone());
            out.push(LinearRelation::direct_sum(p.kernel(), p.image()));
        }
        out
    }

    /// The completed hinge as a weak hinge.
    pub fn completed_weak(&self) -> WeakHinge {
        WeakHinge::new(self.completed()).expect("completed hinges are weak hinges")
    }

    /// Equality in `Hinge*`: termwise equality up to independent nonzero scalars.
    pub fn projectively_equal(&self, other: &Hinge) -> bool {
        self.n == other.n
            && self.len() == other.len()
            && self.terms.iter().zip(&other.terms).all(|(p, q)| p.scale_ratio(q).is_some())
    }

    /// `λ^m(P_j)` for every term and degree, indexed `[j][m]`.
    pub fn term_lambdas(&self) -> Vec<Vec<ExteriorOperator>> {
        self.terms.iter().map(|p| lambda_gamma(p).expect("hinge terms lie in Γ(V)")).collect()
    }

    /// Determines which case of the alternative holds in degree `m`, verifying
    /// the rank and proportionality claims of the two-term case.
    pub fn alternative(&self, m: usize) -> Result<Alternative> {
        if m > self.n {
            return Err(Error::DegreeTooLarge { k: m, n: self.n });
        }
        let lambdas = self.term_lambdas();
        alternative_from(&self.completed(), &lambdas, m)
    }

    /// `λ^m(𝒫)`: the nonzero term of the alternative (the earlier one in the
    /// two-term case), defined up to a scalar.
    pub fn lambda_m(&self, m: usize) -> Result<ExteriorOperator> {
        let lambdas = self.term_lambdas();
        match alternative_from(&self.completed(), &lambdas, m)? {
            Alternative::Unique(j) | Alternative::Pair(j) => Ok(lambdas[j][m].clone()),
        }
    }
}

fn alternative_from(completed: &[LinearRelation], lambdas: &[Vec<ExteriorOperator>], m: usize) -> Result<Alternative> {
    let nonzero: Vec<usize> = (0..lambdas.len()).filter(|&j| !lambdas[j][m].is_zero()).collect();
    match nonzero.as_slice() {
        [j] => Ok(Alternative::Unique(*j)),
        [j, j1] if *j1 == j + 1 => {
            let (a, b) = (&lambdas[*j][m].matrix, &lambdas[*j1][m].matrix);
            let q = &lambda_gamma(&completed[2 * j + 2]).expect("Q_j lies in Γ(V)")[m].matrix;
            if a.rank() == 1 && b.rank() == 1 && a.proportionality(b).is_some() && a.proportionality(q).is_some() {
                Ok(Alternative::Pair(*j))
            } else {
                Err(Error::internal(format!("two-term alternative fails its rank-one claims in degree {m}")))
            }
        }
        _ => Err(Error::internal(format!("degree {m} has nonzero λ^m on terms {nonzero:?}"))),
    }
}
