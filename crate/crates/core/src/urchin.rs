//! The sea urchin: `GL_n` together with spikes `(m, 𝒫)` of primitive exponent
//! vectors and hinges up to `(P_j) ~ (c^{k_j} P_j)`, limits of curves in it,
//! and its projections to compactifications `[GL_n]_ζ`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactla::{rational_pow, rational_root, Rational, RationalMatrix, Ring};
use crate::exterior::common_ratio;
use crate::hinge::{glue, Hinge, OrbitLabel};
use crate::merofam::{check_family, exponents, limit_hinge, value_at_zero, ExponentData, LaurentMatrix};
use crate::reps::{rho_family, zeta_direct_sum, Signature, Zeta};

/// A point of the sea urchin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UrchinPoint {
    Interior(RationalMatrix),
    Spike { m: Vec<i64>, hinge: Hinge },
}

impl UrchinPoint {
    /// A spike point; `m` must be non-increasing and primitive, and the hinge
    /// must lie in the orbit of the multiplicities of `m`.
    pub fn spike(m: Vec<i64>, hinge: Hinge) -> Result<Self> {
        let e = ExponentData::from_exponents(m)?;
        if e.gcd() != 1 {
            return Err(Error::Parse(format!("spike exponents {:?} are not primitive", e.m)));
        }
        if hinge.n() != e.n() || hinge.orbit_label().parts() != e.alpha.as_slice() {
            return Err(Error::dims(format!(
                "hinge of type {} does not match exponent multiplicities {:?}",
                hinge.orbit_label(),
                e.alpha
            )));
        }
        Ok(UrchinPoint::Spike { m: e.m, hinge })
    }

    pub fn interior(g: RationalMatrix) -> Result<Self> {
        if !g.is_square() || g.rank() < g.rows() {
            return Err(Error::Singular);
        }
        Ok(UrchinPoint::Interior(g))
    }

    pub fn n(&self) -> usize {
        match self {
            UrchinPoint::Interior(g) => g.rows(),
            UrchinPoint::Spike { hinge, .. } => hinge.n(),
        }
    }
}

/// A projective compactification given by signatures `ν^{(1)}, …, ν^{(σ)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactificationSpec {
    pub signatures: Vec<Signature>,
}

impl CompactificationSpec {
    pub fn new(signatures: Vec<Signature>) -> Result<Self> {
        if signatures.is_empty() {
            return Err(Error::Empty("compactification signatures"));
        }
        if signatures.iter().any(|s| s.n() != signatures[0].n()) {
            return Err(Error::InvalidSignature("signatures of a compactification must have equal length".into()));
        }
        Ok(CompactificationSpec { signatures })
    }

    pub fn zeta(&self) -> Result<Zeta> {
        zeta_direct_sum(&self.signatures)
    }
}

/// A block operator on `⊕ H_{ν^{(l)}}` defined up to one global scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedOperator {
    pub blocks: Vec<RationalMatrix>,
    /// `v^{(l)} = Σ m_j ν^{(l)}_j` for spikes; zeros for interior points.
    pub weights: Vec<i64>,
    /// Blocks set to zero because `v^{(l)} < max v`.
    pub zeroed: Vec<bool>,
}

impl ProjectedOperator {
    pub fn assembled(&self) -> RationalMatrix {
        RationalMatrix::direct_sum(&self.blocks)
    }

    /// Equality in `ℙ Mat(Z)`.
    pub fn projectively_equal(&self, other: &ProjectedOperator) -> bool {
        common_ratio(&self.blocks, &other.blocks).is_some_and(|c| !c.is_zero())
    }
}

/// The point of the sea urchin reached by `γ(z)` as `z → 0`.
pub fn curve_limit(gamma: &LaurentMatrix) -> Result<UrchinPoint> {
    check_family(gamma)?;
    let e = exponents(gamma)?;
    if e.m.iter().all(|&x| x == 0) {
        let g = value_at_zero(gamma)
            .ok_or_else(|| Error::internal("zero exponents without an invertible value at zero"))?;
        return Ok(UrchinPoint::Interior(g));
    }
    let u = e.gcd();
    let (_, hinge) = limit_hinge(gamma)?;
    UrchinPoint::spike(e.m.iter().map(|x| x / u).collect(), hinge)
}

/// Whether two spike points agree modulo `(P_j) ~ (c^{k_j} P_j)`.
///
/// Termwise ratios `r_j` with `Q_j = r_j P_j` must come from one `c ≠ 0`.
/// With `d = gcd(k_j)` and a Bezout combination `Σ x_j k_j = d`, such a `c`
/// satisfies `c^d = t := Π r_j^{x_j}`; the answer is yes iff every
/// `r_j = t^{k_j/d}` and `t` has a rational `d`-th root.
pub fn spike_equal(p: &UrchinPoint, q: &UrchinPoint) -> Result<bool> {
    let (UrchinPoint::Spike { m: mp, hinge: hp }, UrchinPoint::Spike { m: mq, hinge: hq }) = (p, q) else {
        return Err(Error::MismatchedSpikes);
    };
    if mp != mq {
        return Err(Error::MismatchedSpikes);
    }
    if hp.orbit_label() != hq.orbit_label() || hp.len() != hq.len() {
        return Ok(false);
    }
    let k = ExponentData::from_exponents(mp.clone())?.k;
    let mut ratios = Vec::with_capacity(k.len());
    for (a, b) in hp.terms().iter().zip(hq.terms()) {
        match a.scale_ratio(b) {
            Some(r) => ratios.push(r),
            None => return Ok(false),
        }
    }
    Ok(common_power_base(&k, &ratios).is_some())
}

/// A rational `c ≠ 0` with `c^{k_j} = r_j` for all `j`, if one exists.
pub fn common_power_base(k: &[i64], r: &[Rational]) -> Option<Rational> {
    for (kj, rj) in k.iter().zip(r) {
        if *kj == 0 && !rj.is_one() {
            return None;
        }
    }
    let mut d = 0i64;
    let mut coeffs: Vec<i64> = Vec::with_capacity(k.len());
    for &kj in k {
        let ext = d.extended_gcd(&kj);
        // ext.gcd = ext.x * d + ext.y * kj
        for c in coeffs.iter_mut() {
            *c *= ext.x;
        }
        coeffs.push(ext.y);
        d = ext.gcd;
    }
    if d == 0 {
        return Some(Rational::one());
    }
    if d < 0 {
        d = -d;
        coeffs.iter_mut().for_each(|c| *c = -*c);
    }
    let t = coeffs.iter().zip(r).fold(Rational::one(), |acc, (x, rj)| acc.mul(&rational_pow(rj, *x)));
    if k.iter().zip(r).any(|(kj, rj)| rational_pow(&t, kj / d) != *rj) {
        return None;
    }
    rational_root(&t, d as u32)
}

/// `π_ζ`: interior points map to `ζ(g)`; a spike maps to `⊕ B_l` with
/// `B_l = ρ_{ν^{(l)}}(ℒ(𝒫))` when `v^{(l)}` is maximal and zero otherwise.
pub fn project(point: &UrchinPoint, spec: &CompactificationSpec) -> Result<ProjectedOperator> {
    let zeta = spec.zeta()?;
    if zeta.n() != point.n() {
        return Err(Error::dims("compactification and point have different n"));
    }
    let sigma = spec.signatures.len();
    match point {
        UrchinPoint::Interior(g) => {
            Ok(ProjectedOperator { blocks: zeta.apply_group(g)?, weights: vec![0; sigma], zeroed: vec![false; sigma] })
        }
        UrchinPoint::Spike { m, hinge } => {
            let weights: Vec<i64> = spec.signatures.iter().map(|s| s.weight(m)).collect();
            let v = *weights.iter().max().expect("nonempty spec");
            let glued = glue(hinge);
            let full = zeta.apply_glued(&glued)?;
            let zeroed: Vec<bool> = weights.iter().map(|&w| w < v).collect();
            let blocks = full
                .into_iter()
                .zip(&zeroed)
                .map(|(b, &z)| if z { RationalMatrix::zeros(b.rows(), b.cols()) } else { b })
                .collect();
            Ok(ProjectedOperator { blocks, weights, zeroed })
        }
    }
}

/// `lim z^v ζ(γ(z))` computed directly from the Laurent family, with `v` the
/// largest block pole order.
pub fn direct_limit(gamma: &LaurentMatrix, spec: &CompactificationSpec) -> Result<ProjectedOperator> {
    check_family(gamma)?;
    let e = exponents(gamma)?;
    let zeta = spec.zeta()?;
    let families = zeta.components().iter().map(|rep| rho_family(rep, gamma)).collect::<Result<Vec<_>>>()?;
    let weights: Vec<i64> = spec.signatures.iter().map(|s| s.weight(&e.m)).collect();
    let v = *weights.iter().max().expect("nonempty spec");
    let blocks = families.iter().map(|f| f.map(|p| p.coeff(-v))).collect();
    Ok(ProjectedOperator { blocks, weights: weights.clone(), zeroed: weights.iter().map(|&w| w < v).collect() })
}

/// Whether some listed compactification tells the limits of two curves apart.
///
/// A `false` answer is sampled evidence only: it covers the listed
/// compactifications, not all of them.
pub fn separate(g1: &LaurentMatrix, g2: &LaurentMatrix, specs: &[CompactificationSpec]) -> Result<bool> {
    let (p1, p2) = (curve_limit(g1)?, curve_limit(g2)?);
    for spec in specs {
        if !project(&p1, spec)?.projectively_equal(&project(&p2, spec)?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `specs`, or the built-in sample for `n` when it is empty.
pub fn sample_specs_or(specs: Vec<CompactificationSpec>, n: usize) -> Vec<CompactificationSpec> {
    if specs.is_empty() {
        crate::checks::sample_specs(n)
    } else {
        specs
    }
}

/// Whether two urchin points coincide.
pub fn urchin_equal(p: &UrchinPoint, q: &UrchinPoint) -> bool {
    match (p, q) {
        (UrchinPoint::Interior(a), UrchinPoint::Interior(b)) => a == b,
        (UrchinPoint::Spike { m: a, .. }, UrchinPoint::Spike { m: b, .. }) if a == b => {
            spike_equal(p, q).unwrap_or(false)
        }
        _ => false,
    }
}

/// Parameter count of the spikes of type `α`: the `Hinge*` orbit has
/// dimension `n² − τ`, the term scalars add `τ`, the equivalence removes one.
pub fn spike_dimension(alpha: &OrbitLabel) -> usize {
    let n = alpha.n();
    let tau = alpha.len();
    (n * n - tau) + tau - 1
}

/// An exponent vector with multiplicities `α`: `τ − 1, …, 1, 0`, or all ones
/// when `τ = 1`.
pub fn exponents_for_label(alpha: &OrbitLabel) -> Vec<i64> {
    let tau = alpha.len() as i64;
    if tau == 1 {
        return vec![1; alpha.n()];
    }
    alpha.parts().iter().enumerate().flat_map(|(j, &a)| std::iter::repeat_n(tau - 1 - j as i64, a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};
    use crate::hinge::compositions;
    use crate::merofam::{constant_family, diagonal_family, reparametrize, LaurentPoly, Reparametrization};

    fn spec(sigs: &[&str]) -> CompactificationSpec {
        CompactificationSpec::new(sigs.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn interior_and_spikes() {
        let g = RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(curve_limit(&constant_family(&g)).unwrap(), UrchinPoint::Interior(g));
        let p = curve_limit(&diagonal_family(&[1, -1])).unwrap();
        let q = curve_limit(&diagonal_family(&[2, -2])).unwrap();
        match (&p, &q) {
            (UrchinPoint::Spike { m, hinge }, UrchinPoint::Spike { m: m2, hinge: h2 }) => {
                assert_eq!(m, &vec![1, -1]);
                assert_eq!(m2, &vec![1, -1]);
                assert_eq!(hinge, h2);
                assert_eq!(hinge.orbit_label().parts(), &[1, 1]);
            }
            _ => panic!("expected spikes"),
        }
        assert!(spike_equal(&p, &p).unwrap());
    }

    #[test]
    fn scalar_reparametrization_is_spike_equal() {
        let mut g = diagonal_family(&[1, 0, -1]);
        g[(0, 1)] = LaurentPoly::z(0);
        g[(2, 0)] = LaurentPoly::z(1);
        let gc = reparametrize(&g, &Reparametrization::Scalar(rat(2))).unwrap();
        let (p, q) = (curve_limit(&g).unwrap(), curve_limit(&gc).unwrap());
        assert_ne!(p, q);
        assert!(spike_equal(&p, &q).unwrap());
        assert!(spike_equal(&p, &curve_limit(&diagonal_family(&[2, 1, 0])).unwrap()).is_err());
    }

    #[test]
    fn power_bases() {
        assert_eq!(common_power_base(&[1, 0, -1], &[rat(2), rat(1), ratio(1, 2)]), Some(rat(2)));
        assert_eq!(common_power_base(&[2], &[rat(2)]), None);
        assert!(common_power_base(&[2], &[rat(4)]).is_some());
        assert_eq!(common_power_base(&[2, 4], &[rat(4), rat(15)]), None);
        assert_eq!(common_power_base(&[0], &[rat(3)]), None);
    }

    #[test]
    fn determinant_block_is_dropped() {
        let p = curve_limit(&diagonal_family(&[1, -1])).unwrap();
        let proj = project(&p, &spec(&["1,0", "1,1"])).unwrap();
        assert_eq!(proj.weights, vec![1, 0]);
        assert_eq!(proj.zeroed, vec![false, true]);
        assert!(proj.blocks[1].is_zero());
        assert!(!proj.blocks[0].is_zero());
        let g = RationalMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let inner = project(&UrchinPoint::Interior(g), &spec(&["1,0", "1,1"])).unwrap();
        assert!(inner.blocks.iter().all(|b| !b.is_zero()));
    }

    #[test]
    fn separation_examples() {
        let specs = vec![spec(&["1,0"])];
        let a = diagonal_family(&[0, -1]);
        // diag(1, z) against diag(z, 1)
        let b = diagonal_family(&[-1, 0]);
        assert!(separate(&a, &b, &specs).unwrap());
        let scaled = a.map(|p| p.mul(&LaurentPoly::from_terms([(0, rat(1)), (1, rat(1))])));
        assert!(!separate(&a, &scaled, &[spec(&["1,0"]), spec(&["2,1"]), spec(&["1,0", "1,1"])]).unwrap());
    }

    #[test]
    fn projection_commutes_with_limits() {
        let mut g = diagonal_family(&[2, 0, -1]);
        g[(1, 0)] = LaurentPoly::z(-1);
        g[(0, 2)] = LaurentPoly::from_terms([(0, rat(1)), (1, rat(3))]);
        let s = spec(&["1,0,0", "1,1,0", "2,1,0"]);
        let lhs = project(&curve_limit(&g).unwrap(), &s).unwrap();
        let rhs = direct_limit(&g, &s).unwrap();
        assert!(lhs.projectively_equal(&rhs));
    }

    #[test]
    fn spike_dimensions() {
        for n in 1..=6 {
            for alpha in compositions(n) {
                assert_eq!(spike_dimension(&alpha), n * n - 1);
                let m = exponents_for_label(&alpha);
                let e = ExponentData::from_exponents(m).unwrap();
                assert_eq!(e.alpha, alpha.parts());
                assert_eq!(e.gcd(), 1);
            }
        }
    }
}
