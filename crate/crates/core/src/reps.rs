//! Polynomial representations `ρ_ν` of `GL_n` realized as cyclic spans
//! `H_ν ⊂ ℋ_ν = ⊗_j Λ^j(V)^{⊗(ν_j − ν_{j+1})}`, extended to glued hinge families
//! and to meromorphic limits.
//!
//! Ambient coordinates are mixed-radix over the tensor factors, the first
//! factor most significant; factors are ordered by increasing degree `j`, and
//! each factor uses the lexicographic wedge basis. The highest vector
//! `Ξ_ν = ⊗ (e_1 ∧ … ∧ e_j)` is therefore ambient coordinate `0`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactla::{binomial, compound, Field, Matrix, Rational, RationalMatrix, Ring, WedgeBasis};
use crate::hinge::GluedFamily;
use crate::merofam::{check_family, exponents, LaurentMatrix, LaurentPoly};

/// Default cap on the number of ambient tensor coordinates.
pub const DEFAULT_AMBIENT_CAP: usize = 20_000;

/// `ν_1 ≥ … ≥ ν_n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSignature("a signature needs at least one entry".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSignature(format!("{parts:?} is not non-increasing")));
        }
        Ok(Signature(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `ν_1 + … + ν_n`, the polynomial degree of `ρ_ν`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ m_i ν_i`.
    pub fn weight(&self, m: &[i64]) -> i64 {
        self.0.iter().zip(m).map(|(&v, &x)| v as i64 * x).sum()
    }

    /// Degrees of the tensor factors: `j` repeated `ν_j − ν_{j+1}` times.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let n = self.n();
        (1..=n)
            .flat_map(|j| {
                let next = if j < n { self.0[j] } else { 0 };
                std::iter::repeat_n(j, self.0[j - 1] - next)
            })
            .collect()
    }

    /// Every signature of length `n` with `ν_1 ≤ max`.
    pub fn all(n: usize, max: usize) -> Vec<Signature> {
        fn rec(n: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Signature>) {
            if prefix.len() == n {
                out.push(Signature(prefix.clone()));
                return;
            }
            for v in (0..=bound).rev() {
                prefix.push(v);
                rec(n, v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidSignature(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Signature::new(parts)
    }
}

type Sparse<T> = BTreeMap<usize, T>;

/// `H_ν` with an RREF basis in ambient coordinates.
#[derive(Debug, Clone)]
pub struct RepSpace {
    signature: Signature,
    degrees: Vec<usize>,
    radices: Vec<usize>,
    ambient_dim: usize,
    basis: Vec<Sparse<Rational>>,
    pivots: Vec<usize>,
}

/// An operator on `H_ν` in the stored basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepOperator {
    pub signature: Signature,
    pub matrix: RationalMatrix,
}

pub fn build_rep(signature: &Signature) -> Result<RepSpace> {
    build_rep_capped(signature, DEFAULT_AMBIENT_CAP)
}

/// Builds `H_ν` as the span of `Ξ_ν` closed under the derived action of the
/// matrix units `E_ab`, `a ≠ b`.
pub fn build_rep_capped(signature: &Signature, cap: usize) -> Result<RepSpace> {
    let n = signature.n();
    let degrees = signature.factor_degrees();
    let radices: Vec<usize> = degrees.iter().map(|&j| binomial(n, j)).collect();
    let ambient_dim =
        radices.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r)).filter(|&d| d <= cap).ok_or_else(|| {
            Error::ScaleCap { dim: radices.iter().fold(1usize, |acc, &r| acc.saturating_mul(r)), cap }
        })?;
    let mut space =
        RepSpace { signature: signature.clone(), degrees, radices, ambient_dim, basis: Vec::new(), pivots: Vec::new() };
    let units = space.unit_actions();

    let mut echelon: HashMap<usize, Sparse<Rational>> = HashMap::new();
    let mut queue = VecDeque::new();
    let xi: Sparse<Rational> = [(0usize, Rational::one())].into_iter().collect();
    echelon.insert(0, xi.clone());
    queue.push_back(xi);
    while let Some(v) = queue.pop_front() {
        for unit in &units {
            let w = space.apply_factorwise(unit, &v);
            if let Some(r) = reduce_semi(&echelon, w) {
                let lead = *r.keys().next().expect("reduced vectors are nonzero");
                echelon.insert(lead, r.clone());
                queue.push_back(r);
            }
        }
    }
    let (basis, pivots) = sparse_rref(echelon.into_values().collect());
    space.basis = basis;
    space.pivots = pivots;
    Ok(space)
}

/// Reduces `w` until its leading coordinate is not a leading coordinate of
/// the echelon family; `None` when it vanishes.
fn reduce_semi(echelon: &HashMap<usize, Sparse<Rational>>, mut w: Sparse<Rational>) -> Option<Sparse<Rational>> {
    loop {
        let (&lead, coeff) = w.iter().next()?;
        let Some(row) = echelon.get(&lead) else {
            let inv = coeff.inv();
            for x in w.values_mut() {
                *x = x.mul(&inv);
            }
            return Some(w);
        };
        let c = coeff.clone();
        axpy(&mut w, &c.neg(), row);
    }
}

fn axpy(w: &mut Sparse<Rational>, c: &Rational, row: &Sparse<Rational>) {
    for (i, x) in row {
        let slot = w.entry(*i).or_insert_with(Rational::zero);
        *slot = slot.add(&c.mul(x));
        if slot.is_zero() {
            w.remove(i);
        }
    }
}

/// Fully reduces rows with distinct leading coordinates (each leading
/// coefficient 1) to RREF, sorted by pivot.
fn sparse_rref(mut rows: Vec<Sparse<Rational>>) -> (Vec<Sparse<Rational>>, Vec<usize>) {
    rows.sort_by_key(|r| *r.keys().next().expect("nonzero rows"));
    let pivots: Vec<usize> = rows.iter().map(|r| *r.keys().next().unwrap()).collect();
    for i in (0..rows.len()).rev() {
        let below: Vec<Sparse<Rational>> = rows[i + 1..].to_vec();
        let row = &mut rows[i];
        for (t, other) in below.iter().enumerate() {
            if let Some(c) = row.get(&pivots[i + 1 + t]).cloned() {
                axpy(row, &c.neg(), other);
            }
        }
    }
    (rows, pivots)
}

/// Nonzero entries `(column, row, sign)` of one `E_ab` on `Λ^j`.
type WedgeUnit = Vec<(usize, usize, Rational)>;

/// `E_ab` on `Λ^j`, for all ordered pairs `a ≠ b` in row-major order, as
/// entries `(column, row, sign)`.
fn wedge_units(n: usize, j: usize) -> Vec<WedgeUnit> {
    let basis = WedgeBasis::new(n, j);
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let mut entries = Vec::new();
            for (col, set) in basis.sets().iter().enumerate() {
                if !set.contains(&b) || set.contains(&a) {
                    continue;
                }
                let (lo, hi) = (a.min(b), a.max(b));
                let between = set.iter().filter(|&&s| lo < s && s < hi).count();
                let mut image: Vec<usize> = set.iter().map(|&s| if s == b { a } else { s }).collect();
                image.sort_unstable();
                let row = basis.index_of(&image).expect("wedge of distinct indices");
                let sign = if between % 2 == 0 { Rational::one() } else { Rational::one().neg() };
                entries.push((col, row, sign));
            }
            out.push(entries);
        }
    }
    out
}

impl RepSpace {
    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn n(&self) -> usize {
        self.signature.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vector `i` as a dense ambient vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient_dim];
        for (k, x) in &self.basis[i] {
            v[*k] = x.clone();
        }
        v
    }

    /// Coordinates of `Ξ_ν` in the basis.
    pub fn highest_vector(&self) -> Vec<Rational> {
        self.pivots.iter().map(|&p| if p == 0 { Rational::one() } else { Rational::zero() }).collect()
    }

    fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.radices.len()];
        for f in (0..self.radices.len()).rev() {
            d[f] = idx % self.radices[f];
            idx /= self.radices[f];
        }
        d
    }

    fn stride(&self, f: usize) -> usize {
        self.radices[f + 1..].iter().product()
    }

    /// The derivations `E_ab` (`a ≠ b`) on `ℋ_ν`, each listed as entries
    /// `(factor, wedge column, wedge row, sign)` of its action on single factors.
    fn unit_actions(&self) -> Vec<Vec<(usize, usize, usize, Rational)>> {
        let n = self.n();
        let mut per_degree: HashMap<usize, Vec<WedgeUnit>> = HashMap::new();
        for &j in &self.degrees {
            per_degree.entry(j).or_insert_with(|| wedge_units(n, j));
        }
        (0..n * n.saturating_sub(1))
            .map(|p| {
                self.degrees
                    .iter()
                    .enumerate()
                    .flat_map(|(f, j)| per_degree[j][p].iter().map(move |(c, r, s)| (f, *c, *r, s.clone())))
                    .collect()
            })
            .collect()
    }

    /// Derivation (Leibniz rule) of one matrix unit on a sparse vector.
    fn apply_factorwise(&self, unit: &[(usize, usize, usize, Rational)], v: &Sparse<Rational>) -> Sparse<Rational> {
        let mut out: Sparse<Rational> = BTreeMap::new();
        for (&idx, x) in v {
            let digits = self.digits(idx);
            for (f, col, row, sign) in unit {
                if digits[*f] != *col {
                    continue;
                }
                let stride = self.stride(*f);
                let target = idx - col * stride + row * stride;
                let slot = out.entry(target).or_insert_with(Rational::zero);
                *slot = slot.add(&x.mul(sign));
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// `⊗_f A_f` applied to a sparse vector, one factor at a time.
    fn apply_tensor<T: Ring>(&self, factors: &[&Matrix<T>], v: &Sparse<T>) -> Sparse<T> {
        let mut cur = v.clone();
        for (f, a) in factors.iter().enumerate() {
            let stride = self.stride(f);
            let mut next: Sparse<T> = BTreeMap::new();
            for (&idx, x) in &cur {
                let d = (idx / stride) % self.radices[f];
                let base = idx - d * stride;
                for r in 0..a.rows() {
                    let c = &a[(r, d)];
                    if c.is_zero() {
                        continue;
                    }
                    let slot = next.entry(base + r * stride).or_insert_with(T::zero);
                    *slot = slot.add(&c.mul(x));
                }
            }
            next.retain(|_, x| !x.is_zero());
            cur = next;
        }
        cur
    }

    /// Restricts `⊗_f A_{j_f}` (given per degree `j = 0..=n`) to `H_ν`.
    fn restrict<T: Ring>(&self, per_degree: &[Matrix<T>], embed: impl Fn(&Rational) -> T) -> Result<Matrix<T>> {
        let factors: Vec<&Matrix<T>> = self.degrees.iter().map(|&j| &per_degree[j]).collect();
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (col, b) in self.basis.iter().enumerate() {
            let v: Sparse<T> = b.iter().map(|(i, x)| (*i, embed(x))).collect();
            let w = self.apply_tensor(&factors, &v);
            let coords: Vec<T> = self.pivots.iter().map(|p| w.get(p).cloned().unwrap_or_else(T::zero)).collect();
            // the image must be the combination of basis vectors read off at pivots
            let mut residual = w;
            for (i, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, x) in &self.basis[i] {
                    let slot = residual.entry(*k).or_insert_with(T::zero);
                    *slot = slot.sub(&c.mul(&embed(x)));
                }
            }
            if residual.values().any(|x| !x.is_zero()) {
                return Err(Error::internal("operator does not preserve the cyclic span"));
            }
            for (row, c) in coords.into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        Ok(m)
    }
}

/// `ρ_ν(g)`: the restriction of `⊗ λ^j_cha(g)^{⊗(ν_j−ν_{j+1})}` to `H_ν`.
pub fn rho_group(rep: &RepSpace, g: &RationalMatrix) -> Result<RepOperator> {
    let n = rep.n();
    if g.rows() != n || g.cols() != n {
        return Err(Error::dims(format!("expected a {n} × {n} matrix")));
    }
    let per_degree: Vec<RationalMatrix> = (0..=n).map(|j| compound(g, j)).collect();
    Ok(RepOperator { signature: rep.signature.clone(), matrix: rep.restrict(&per_degree, Clone::clone)? })
}

/// `ρ_ν(𝒜)`: the restriction of `⊗ A_j^{⊗(ν_j−ν_{j+1})}` to `H_ν`.
pub fn rho_semigroup(rep: &RepSpace, a: &GluedFamily) -> Result<RepOperator> {
    if a.n() != rep.n() {
        return Err(Error::dims("glued family and signature have different n"));
    }
    Ok(RepOperator { signature: rep.signature.clone(), matrix: rep.restrict(&a.matrices(), Clone::clone)? })
}

/// `ρ_ν(γ(z))` with Laurent-polynomial entries.
pub fn rho_family(rep: &RepSpace, gamma: &LaurentMatrix) -> Result<LaurentMatrix> {
    let n = rep.n();
    if gamma.rows() != n || gamma.cols() != n {
        return Err(Error::dims(format!("expected a {n} × {n} family")));
    }
    let per_degree: Vec<LaurentMatrix> = (0..=n).map(|j| compound(gamma, j)).collect();
    rep.restrict(&per_degree, |x| LaurentPoly::constant(x.clone()))
}

/// `lim z^{Σ m_i ν_i} ρ_ν(γ(z))`, the constant term.
pub fn rep_limit(rep: &RepSpace, gamma: &LaurentMatrix) -> Result<RepOperator> {
    check_family(gamma)?;
    let e = exponents(gamma)?;
    let family = rho_family(rep, gamma)?;
    let shift = rep.signature.weight(&e.m);
    let matrix = family.map(|p| p.coeff(-shift));
    if family.entries().iter().any(|p| p.ord().is_some_and(|o| o < -shift)) {
        return Err(Error::internal("scaled representation family has a pole"));
    }
    Ok(RepOperator { signature: rep.signature.clone(), matrix })
}

/// A reducible representation `ζ = ⊕ ρ_{ν^{(l)}}`.
#[derive(Debug, Clone)]
pub struct Zeta {
    reps: Vec<RepSpace>,
}

/// Builds `ζ` from a nonempty list of signatures of a common length.
pub fn zeta_direct_sum(signatures: &[Signature]) -> Result<Zeta> {
    let first = signatures.first().ok_or(Error::Empty("signature list"))?;
    if signatures.iter().any(|s| s.n() != first.n()) {
        return Err(Error::InvalidSignature("signatures of a sum must have equal length".into()));
    }
    Ok(Zeta { reps: signatures.iter().map(build_rep).collect::<Result<_>>()? })
}

impl Zeta {
    pub fn components(&self) -> &[RepSpace] {
        &self.reps
    }

    pub fn n(&self) -> usize {
        self.reps[0].n()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.reps.iter().map(RepSpace::dim).collect()
    }

    pub fn apply_group(&self, g: &RationalMatrix) -> Result<Vec<RationalMatrix>> {
        self.reps.iter().map(|r| rho_group(r, g).map(|o| o.matrix)).collect()
    }

    pub fn apply_glued(&self, a: &GluedFamily) -> Result<Vec<RationalMatrix>> {
        self.reps.iter().map(|r| rho_semigroup(r, a).map(|o| o.matrix)).collect()
    }

    /// The block-diagonal assembly of component operators.
    pub fn assemble(blocks: &[RationalMatrix]) -> RationalMatrix {
        RationalMatrix::direct_sum(blocks)
    }
}
