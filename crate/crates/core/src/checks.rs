//! The randomized property suite. Each check draws its own instances from a
//! [`Sampler`] and reports the cases that failed.

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::exactla::{ratio, rational_pow, RationalMatrix, Ring};
use crate::exterior::{common_ratio, lambda_gamma, lambda_morphism};
use crate::hinge::{compositions, glue, glued_product, weak_lambda_m, weak_product, well_glued, Alternative, Hinge};
use crate::merofam::{
    default_precision, exponents, factorize, factorize_stable, limit_glued, limit_hinge, limit_relation,
    pluecker_limit, relation_pluecker, reparametrize, Reparametrization,
};
use crate::random::Sampler;
use crate::relations::{compose, GaMorphism, LinearRelation};
use crate::reps::{build_rep, rep_limit, rho_semigroup, RepSpace, Signature};
use crate::urchin::{
    curve_limit, direct_limit, exponents_for_label, project, spike_dimension, urchin_equal, CompactificationSpec,
};

/// The outcome of one property over a batch of random cases.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    /// Cases that exercised the interesting branch (non-null products, spikes, …).
    pub nontrivial: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} cases ({} nontrivial) in {:.2?}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.nontrivial,
            self.elapsed
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, "; {} failures, first: {first}", self.failures.len())?;
        }
        Ok(())
    }
}

struct Run {
    report: CheckReport,
    start: Instant,
}

impl Run {
    fn new(name: &'static str) -> Self {
        Run {
            report: CheckReport { name, cases: 0, nontrivial: 0, failures: Vec::new(), elapsed: Duration::ZERO },
            start: Instant::now(),
        }
    }

    fn case(&mut self, outcome: Result<Option<String>>, nontrivial: bool) {
        self.report.cases += 1;
        self.report.nontrivial += nontrivial as usize;
        match outcome {
            Ok(None) => {}
            Ok(Some(msg)) => self.report.failures.push(format!("case {}: {msg}", self.report.cases)),
            Err(e) => self.report.failures.push(format!("case {}: error: {e}", self.report.cases)),
        }
    }

    fn fail(&mut self, msg: String) {
        self.report.failures.push(msg);
    }

    fn finish(mut self) -> CheckReport {
        self.report.elapsed = self.start.elapsed();
        self.report
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

/// Associativity in `GA` including null, composition of graphs, and
/// `dim QP = dim Q + dim P − dim W` for non-null products.
pub fn category_laws(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("category laws");
    for _ in 0..cases {
        let d: Vec<usize> = (0..4).map(|_| s.range(1, 4)).collect();
        let p = pick_relation(s, d[0], d[1]);
        let q = pick_relation(s, d[1], d[2]);
        let r = pick_relation(s, d[2], d[3]);
        let mut nonnull = false;
        let outcome = (|| -> Result<Option<String>> {
            let (p, q, r) = (GaMorphism::from(p), GaMorphism::from(q), GaMorphism::from(r));
            let left = compose(&compose(&r, &q)?, &p)?;
            nonnull = !left.is_null();
            let right = compose(&r, &compose(&q, &p)?)?;
            if left != right {
                return Ok(Some(format!("(RQ)P = {left:?} but R(QP) = {right:?}")));
            }
            for (a, b) in [(&q, &p), (&r, &q)] {
                if let (Some(x), Some(y), GaMorphism::Relation(prod)) = (a.relation(), b.relation(), compose(a, b)?) {
                    let expected = x.dim() + y.dim() - y.dim_w();
                    if prod.dim() != expected {
                        return Ok(Some(format!("product has dimension {} instead of {expected}", prod.dim())));
                    }
                }
            }
            let (a, b) = (s.matrix(d[1], d[0], 0.4), s.matrix(d[2], d[1], 0.4));
            let composed = compose(&LinearRelation::graph(&b).into(), &LinearRelation::graph(&a).into())?;
            Ok(expect(composed == LinearRelation::graph(&b.try_mul(&a)?).into(), || {
                "graph(B)graph(A) ≠ graph(BA)".into()
            }))
        })();
        run.case(outcome, nonnull);
    }
    run.finish()
}

/// Mostly graphs or near-graphs so that non-null products are common.
fn pick_relation(s: &mut Sampler, dim_v: usize, dim_w: usize) -> LinearRelation {
    match s.below(3) {
        0 => LinearRelation::graph(&s.matrix(dim_w, dim_v, 0.5)),
        1 => s.relation_of_dim(dim_v, dim_w, dim_v),
        _ => s.relation(dim_v, dim_w),
    }
}

/// `λ(Q)λ(P) = c·λ(QP)` degreewise with one `c`, and `c ≠ 0` iff `QP ≠ null`.
pub fn exterior_homomorphism(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("exterior homomorphism");
    for _ in 0..cases {
        let n = s.range(1, 4);
        let (p, q) = (s.gamma(n), s.gamma(n));
        let mut nonnull = false;
        let outcome = (|| -> Result<Option<String>> {
            let (lp, lq) = (lambda_gamma(&p)?, lambda_gamma(&q)?);
            let lhs =
                lq.iter().zip(&lp).map(|(a, b)| Ok(a.compose(b)?.matrix)).collect::<Result<Vec<RationalMatrix>>>()?;
            let prod = compose(&q.clone().into(), &p.clone().into())?;
            nonnull = !prod.is_null();
            let rhs: Vec<RationalMatrix> = lambda_morphism(&prod)
                .blocks
                .into_iter()
                .map(|b| b.expect("Γ(V) is degree preserving").matrix)
                .collect();
            Ok(match common_ratio(&lhs, &rhs) {
                None => Some("λ(Q)λ(P) is not proportional to λ(QP)".into()),
                Some(c) => expect(c.is_zero() != nonnull, || {
                    format!("scalar {c} for a {} product", if nonnull { "non-null" } else { "null" })
                }),
            })
        })();
        run.case(outcome, nonnull);
    }
    run.finish()
}

/// For every degree exactly one nonzero `λ^m(P_j)`, or two adjacent
/// proportional rank-one terms.
pub fn hinge_alternative(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("hinge alternative");
    for i in 0..cases {
        let n = 1 + i % 4;
        let labels = compositions(n);
        let h = s.hinge_of(&labels[(i / 4) % labels.len()]);
        let mut pairs = false;
        let outcome = (|| -> Result<Option<String>> {
            let lambdas = h.term_lambdas();
            for m in 0..=n {
                let nonzero: Vec<usize> = (0..h.len()).filter(|&j| !lambdas[j][m].is_zero()).collect();
                let claimed = h.alternative(m)?;
                let ok = match (nonzero.as_slice(), claimed) {
                    ([j], Alternative::Unique(c)) => *j == c,
                    ([j, j1], Alternative::Pair(c)) => {
                        pairs = true;
                        let (a, b) = (&lambdas[*j][m].matrix, &lambdas[*j1][m].matrix);
                        *j == c && *j1 == j + 1 && a.rank() == 1 && b.rank() == 1 && a.proportionality(b).is_some()
                    }
                    _ => false,
                };
                if !ok {
                    return Ok(Some(format!("degree {m}: nonzero terms {nonzero:?}, classified {claimed:?}")));
                }
            }
            Ok(None)
        })();
        run.case(outcome, pairs);
    }
    run.finish()
}

/// Products of weak hinges are weak hinges, `λ^m` is multiplicative up to a
/// nonzero scalar, and glued products stay well glued.
pub fn weak_products(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("weak hinge products");
    for _ in 0..cases {
        let n = s.range(1, 3);
        let (t, r) = (s.hinge(n), s.hinge(n));
        let mut multi = false;
        let outcome = (|| -> Result<Option<String>> {
            let (tw, rw) = (t.completed_weak(), r.completed_weak());
            let tr = weak_product(&tw, &rw)?;
            multi = tr.len() > 1;
            for m in 0..=n {
                let lhs = weak_lambda_m(&tw, m)?.compose(&weak_lambda_m(&rw, m)?)?;
                let rhs = weak_lambda_m(&tr, m)?;
                match lhs.matrix.proportionality(&rhs.matrix) {
                    Some(c) if !c.is_zero() => {}
                    _ => return Ok(Some(format!("degree {m}: λ^m(T)λ^m(R) is not a nonzero multiple of λ^m(TR)"))),
                }
            }
            let glued = glued_product(&glue(&t), &glue(&r))?;
            if !well_glued(&glued, &tr) {
                return Ok(Some("glued product is not well glued over the weak product".into()));
            }
            let u = s.hinge(n);
            let utr = weak_product(&u.completed_weak(), &tr)?;
            let glued3 = glued_product(&glue(&u), &glued)?;
            Ok(expect(well_glued(&glued3, &utr), || "triple glued product is not well glued".into()))
        })();
        run.case(outcome, multi);
    }
    run.finish()
}

/// Exponents from exterior pole orders against the Gauss-elimination
/// factorization; reassembly and stability under extra precision.
pub fn exponent_cross_check(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("exponent cross-check");
    for i in 0..cases {
        let n = 1 + i % 4;
        let gamma = s.laurent(n, -3, 3);
        let mut spread = false;
        let outcome = (|| -> Result<Option<String>> {
            let e = exponents(&gamma)?;
            spread = e.alpha.len() > 1;
            let prec = default_precision(&gamma)?;
            let f = factorize(&gamma, prec)?;
            if f.m != e.m {
                return Ok(Some(format!("minors give {:?}, elimination gives {:?}", e.m, f.m)));
            }
            if !f.reassembles(&gamma) {
                return Ok(Some("a·diag·b does not reassemble γ".into()));
            }
            let g = factorize(&gamma, prec + 5)?;
            Ok(expect(f.agrees_with(&g) && g.reassembles(&gamma), || {
                "factorization changes under precision + 5".into()
            }))
        })();
        run.case(outcome, spread);
    }
    run.finish()
}

/// The lattice-reduction limit hinge equals `a(0)·𝒫_α·b(0)`, Plücker limits
/// agree, and `ℒ` of the limit hinge equals the direct limit of `λ(γ)`.
pub fn two_path_limits(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("two-path limits");
    for i in 0..cases {
        let n = 1 + i % 3;
        let gamma = s.curve(n);
        let mut tau = 1;
        let outcome = (|| -> Result<Option<String>> {
            let (e, hinge) = limit_hinge(&gamma)?;
            tau = e.alpha.len();
            let f = factorize_stable(&gamma, default_precision(&gamma)?)?;
            let framed = hinge_of_label(&e.alpha).act(&f.a0(), &f.b0())?;
            if framed != hinge {
                return Ok(Some("a(0)·𝒫_α·b(0) differs from the lattice limit".into()));
            }
            for (j, &k) in e.k.iter().enumerate() {
                let direct = pluecker_limit(&gamma, k);
                let from_hinge = relation_pluecker(hinge.term(j));
                if crate::exactla::RationalMatrix::from_rows(vec![direct], from_hinge.len())?
                    .proportionality(&crate::exactla::RationalMatrix::from_rows(
                        vec![from_hinge.clone()],
                        from_hinge.len(),
                    )?)
                    .is_none_or(|c| c.is_zero())
                {
                    return Ok(Some(format!("Plücker limit at k = {k} is not proportional to term {}", j + 1)));
                }
                if limit_relation(&gamma, k)? != *hinge.term(j) {
                    return Ok(Some(format!("term {} is not lim z^{k} graph γ", j + 1)));
                }
            }
            Ok(expect(limit_glued(&gamma)? == glue(&hinge), || {
                "ℒ(limit hinge) differs from lim z^{m_1+…+m_j} λ^j(γ)".into()
            }))
        })();
        run.case(outcome, tau > 1);
    }
    run.finish()
}

fn hinge_of_label(alpha: &[usize]) -> Hinge {
    Hinge::canonical(&crate::hinge::OrbitLabel::new(alpha.to_vec()).expect("exponent multiplicities are positive"))
}

/// `lim z^{Σ m_i ν_i} ρ_ν(γ)` equals `ρ_ν(ℒ(𝒫^γ))` for every signature with
/// `ν_1 ≤ max_part`.
pub fn representation_limits(s: &mut Sampler, cases: usize, max_n: usize, max_part: usize) -> CheckReport {
    let mut run = Run::new("representation limits");
    let reps: Vec<Vec<RepSpace>> = (1..=max_n)
        .map(|n| Signature::all(n, max_part).iter().map(build_rep).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()
        .unwrap_or_else(|e| {
            run.fail(format!("building representations: {e}"));
            Vec::new()
        });
    if reps.is_empty() {
        return run.finish();
    }
    for i in 0..cases {
        let n = max_n - i % max_n;
        let gamma = s.curve(n);
        let mut spike = false;
        let outcome = (|| -> Result<Option<String>> {
            let (e, hinge) = limit_hinge(&gamma)?;
            spike = e.alpha.len() > 1;
            let glued = glue(&hinge);
            for rep in &reps[n - 1] {
                let direct = rep_limit(rep, &gamma)?;
                let via = rho_semigroup(rep, &glued)?;
                if direct != via {
                    return Ok(Some(format!("ν = {}: direct limit differs from ρ_ν(ℒ)", rep.signature())));
                }
                if direct.matrix.is_zero() {
                    return Ok(Some(format!("ν = {}: limit vanishes", rep.signature())));
                }
            }
            Ok(None)
        })();
        run.case(outcome, spike);
    }
    run.finish()
}

/// Small compactifications used by the urchin checks; five distinct ones
/// for `n ≥ 2`.
pub fn sample_specs(n: usize) -> Vec<CompactificationSpec> {
    let sig = |f: &dyn Fn(usize) -> usize| Signature::new((0..n).map(f).collect()).expect("valid signature");
    let fundamental = |k: usize| sig(&|i| (i < k) as usize);
    let candidates = vec![
        vec![fundamental(1)],
        (1..=n).map(fundamental).collect(),
        vec![sig(&|i| n - i)],
        vec![sig(&|i| 2 * (i == 0) as usize)],
        vec![sig(&|i| 2 * (i == 0) as usize), fundamental(n - 1), fundamental(n)],
    ];
    let mut specs: Vec<Vec<Signature>> = Vec::new();
    for c in candidates {
        if !specs.contains(&c) {
            specs.push(c);
        }
    }
    specs.into_iter().map(|v| CompactificationSpec::new(v).expect("nonempty")).collect()
}

/// Invariance of the urchin limit under reparametrization and
/// `π_ζ(lim γ) = lim ζ(γ)` in `ℙ Mat`.
pub fn urchin_square(s: &mut Sampler, cases: usize, min_n: usize, max_n: usize) -> CheckReport {
    let mut run = Run::new("urchin projections");
    let specs: Vec<Vec<CompactificationSpec>> = (1..=max_n).map(sample_specs).collect();
    for i in 0..cases {
        let n = max_n - i % (max_n + 1 - min_n);
        let gamma = s.curve(n);
        let c = ratio([2, -1, 3, 1][i % 4], [1, 2, 1, 3][i % 4]);
        let kinds = [
            Reparametrization::Scalar(c),
            Reparametrization::Power(1 + (i % 3) as u32),
            Reparametrization::Formal(vec![s.rational(0.3), s.rational(0.6)]),
        ];
        let mut spike = false;
        let outcome = (|| -> Result<Option<String>> {
            let point = curve_limit(&gamma)?;
            spike = matches!(point, crate::urchin::UrchinPoint::Spike { .. });
            for kind in &kinds {
                let other = curve_limit(&reparametrize(&gamma, kind)?)?;
                if !urchin_equal(&point, &other) {
                    return Ok(Some(format!("limit changes under {kind:?}")));
                }
            }
            for spec in &specs[n - 1] {
                let lhs = project(&point, spec)?;
                let rhs = direct_limit(&gamma, spec)?;
                if !lhs.projectively_equal(&rhs) {
                    let sigs: Vec<String> = spec.signatures.iter().map(ToString::to_string).collect();
                    return Ok(Some(format!("projection to {sigs:?} differs from lim ζ(γ)")));
                }
            }
            Ok(None)
        })();
        run.case(outcome, spike);
    }
    run.finish()
}

/// Every orbit label is realized by a diagonal curve framed by random
/// group elements, and its projection is a nonzero limit of `ζ(γ)`.
pub fn urchin_surjectivity(s: &mut Sampler, max_n: usize) -> CheckReport {
    let mut run = Run::new("spikes over every orbit");
    for n in 1..=max_n {
        for alpha in compositions(n) {
            for spec in &sample_specs(n) {
                let m = exponents_for_label(&alpha);
                let gamma = s.framed(&m, 1);
                let outcome = (|| -> Result<Option<String>> {
                    let point = curve_limit(&gamma)?;
                    let crate::urchin::UrchinPoint::Spike { m: got, hinge } = &point else {
                        return Ok(Some("expected a spike".into()));
                    };
                    if *got != m || hinge.orbit_label() != alpha {
                        return Ok(Some(format!("label {alpha}: got m = {got:?}, type {}", hinge.orbit_label())));
                    }
                    let lhs = project(&point, spec)?;
                    let rhs = direct_limit(&gamma, spec)?;
                    Ok(expect(lhs.projectively_equal(&rhs) && !rhs.assembled().is_zero(), || {
                        format!("label {alpha}: projection is not the limit")
                    }))
                })();
                run.case(outcome, true);
            }
        }
    }
    run.finish()
}

/// `2^{n−1}` compositions and `n² − 1` spike parameters for every label.
pub fn orbit_arithmetic(max_compositions: usize, max_spikes: usize) -> CheckReport {
    let mut run = Run::new("orbit arithmetic");
    for n in 1..=max_compositions.max(max_spikes) {
        let labels = compositions(n);
        let mut outcome = None;
        if n <= max_compositions {
            let distinct: std::collections::BTreeSet<_> = labels.iter().map(|a| a.parts().to_vec()).collect();
            if labels.len() != 1 << (n - 1) || distinct.len() != labels.len() || labels.iter().any(|a| a.n() != n) {
                outcome = Some(format!("n = {n}: {} labels", labels.len()));
            }
        }
        if n <= max_spikes && outcome.is_none() {
            if let Some(a) = labels.iter().find(|a| spike_dimension(a) != n * n - 1) {
                outcome = Some(format!("label {a}: spike dimension {}", spike_dimension(a)));
            }
        }
        run.case(Ok(outcome), true);
    }
    run.finish()
}

/// Scalar reparametrizations move hinge terms by `c^{k_j}`.
pub fn scalar_action(s: &mut Sampler, cases: usize) -> CheckReport {
    let mut run = Run::new("scalar reparametrization");
    for i in 0..cases {
        let n = 1 + i % 3;
        let gamma = s.curve(n);
        let c = ratio(2, 1);
        let outcome = (|| -> Result<Option<String>> {
            let (e, h) = limit_hinge(&gamma)?;
            let (_, hc) = limit_hinge(&reparametrize(&gamma, &Reparametrization::Scalar(c.clone()))?)?;
            for (j, (p, q)) in h.terms().iter().zip(hc.terms()).enumerate() {
                let expected = p.scale(&rational_pow(&c, -e.k[j]))?;
                if *q != expected {
                    return Ok(Some(format!("term {} is not scaled by c^(-k)", j + 1)));
                }
            }
            Ok(None)
        })();
        run.case(outcome, true);
    }
    run.finish()
}

/// Everything `selftest` runs, at reduced sizes.
pub fn full_suite(seed: u64, scale: usize) -> Vec<CheckReport> {
    let mut s = Sampler::new(seed);
    vec![
        category_laws(&mut s, 50 * scale),
        exterior_homomorphism(&mut s, 20 * scale),
        hinge_alternative(&mut s, 20 * scale),
        weak_products(&mut s, 10 * scale),
        exponent_cross_check(&mut s, 20 * scale),
        two_path_limits(&mut s, 10 * scale),
        representation_limits(&mut s, 5 * scale, 3, 2),
        urchin_square(&mut s, 5 * scale, 1, 3),
        scalar_action(&mut s, 5 * scale),
        urchin_surjectivity(&mut s, 2),
        orbit_arithmetic(10, 6),
    ]
}
