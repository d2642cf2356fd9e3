//! Seeded generators of random instances, shared by the property suite, the
//! acceptance tests and `selftest`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::{rat, ratio, Matrix, Rational, RationalMatrix, Ring};
use crate::hinge::{compositions, Hinge, OrbitLabel};
use crate::merofam::{check_family, LaurentMatrix, LaurentPoly};
use crate::relations::LinearRelation;

/// A deterministic source of test objects.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// A small rational, zero with probability `zero_prob`.
    pub fn rational(&mut self, zero_prob: f64) -> Rational {
        if self.rng.gen_bool(zero_prob) {
            return rat(0);
        }
        let num = loop {
            let x = self.rng.gen_range(-3i64..=3);
            if x != 0 {
                break x;
            }
        };
        if self.rng.gen_bool(0.2) {
            ratio(num, self.rng.gen_range(2..=3))
        } else {
            rat(num)
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, zero_prob: f64) -> RationalMatrix {
        Matrix::from_fn(rows, cols, |_, _| self.rational(zero_prob))
    }

    pub fn invertible(&mut self, n: usize) -> RationalMatrix {
        loop {
            let g = self.matrix(n, n, 0.3);
            if g.rank() == n {
                return g;
            }
        }
    }

    /// A relation `V ⇉ W` of random dimension spanned by sparse vectors, so
    /// that kernels and indefiniteness are frequent.
    pub fn relation(&mut self, dim_v: usize, dim_w: usize) -> LinearRelation {
        let d = self.range(0, dim_v + dim_w);
        self.relation_of_dim(dim_v, dim_w, d)
    }

    pub fn relation_of_dim(&mut self, dim_v: usize, dim_w: usize, d: usize) -> LinearRelation {
        let ambient = dim_v + dim_w;
        loop {
            let zero_prob = [0.3, 0.6, 0.8][self.below(3)];
            let vectors: Vec<Vec<Rational>> =
                (0..d).map(|_| (0..ambient).map(|_| self.rational(zero_prob)).collect()).collect();
            let r = LinearRelation::from_vectors(dim_v, dim_w, &vectors).expect("vectors have the ambient length");
            if r.dim() == d {
                return r;
            }
        }
    }

    /// An element of `Γ(V)`: a graph, a rank-deficient graph or a sparse
    /// `n`-dimensional relation.
    pub fn gamma(&mut self, n: usize) -> LinearRelation {
        match self.below(4) {
            0 => LinearRelation::graph(&self.invertible(n)),
            1 => LinearRelation::graph(&self.matrix(n, n, 0.6)),
            _ => self.relation_of_dim(n, n, n),
        }
    }

    pub fn label(&mut self, n: usize) -> OrbitLabel {
        compositions(n).choose(&mut self.rng).expect("n ≥ 1").clone()
    }

    /// `g1 · 𝒫_α · g2` for random invertible `g1`, `g2`.
    pub fn hinge_of(&mut self, alpha: &OrbitLabel) -> Hinge {
        let n = alpha.n();
        let (g1, g2) = (self.invertible(n), self.invertible(n));
        Hinge::canonical(alpha).act(&g1, &g2).expect("invertible group elements")
    }

    pub fn hinge(&mut self, n: usize) -> Hinge {
        let alpha = self.label(n);
        self.hinge_of(&alpha)
    }

    /// A polynomial with exponents in `[lo, hi]`.
    pub fn laurent_poly(&mut self, lo: i64, hi: i64, zero_prob: f64) -> LaurentPoly {
        LaurentPoly::from_terms((lo..=hi).map(|e| (e, self.rational(zero_prob))).collect::<Vec<_>>())
    }

    /// A family with sparse entries supported in `[lo, hi]` and nonzero
    /// determinant.
    pub fn laurent(&mut self, n: usize, lo: i64, hi: i64) -> LaurentMatrix {
        loop {
            let g = Matrix::from_fn(n, n, |_, _| self.laurent_poly(lo, hi, 0.75));
            if check_family(&g).is_ok() {
                return g;
            }
        }
    }

    /// A polynomial jet `h(z)` of degree `≤ deg` with invertible `h(0)`.
    pub fn framing(&mut self, n: usize, deg: i64) -> LaurentMatrix {
        let h0 = self.invertible(n);
        Matrix::from_fn(n, n, |i, j| {
            let mut p = LaurentPoly::constant(h0[(i, j)].clone());
            for e in 1..=deg {
                p = p.add(&LaurentPoly::monomial(e, self.rational(0.7)));
            }
            p
        })
    }

    /// A non-increasing exponent vector with entries in `[lo, hi]`.
    pub fn exponent_vector(&mut self, n: usize, lo: i64, hi: i64) -> Vec<i64> {
        let mut m: Vec<i64> = (0..n).map(|_| self.rng.gen_range(lo..=hi)).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    /// `a(z) · diag(z^{−m}) · b(z)` with random jets `a`, `b`.
    pub fn framed(&mut self, m: &[i64], deg: i64) -> LaurentMatrix {
        let n = m.len();
        let diag: Vec<LaurentPoly> = m.iter().map(|&x| LaurentPoly::z(-x)).collect();
        let (a, b) = (self.framing(n, deg), self.framing(n, deg));
        &(&a * &Matrix::diagonal(&diag)) * &b
    }

    /// Either a framed family or a sparse family with exponents in `[−2, 2]`.
    pub fn curve(&mut self, n: usize) -> LaurentMatrix {
        if self.rng.gen_bool(0.5) {
            let m = self.exponent_vector(n, -2, 2);
            self.framed(&m, 1)
        } else {
            self.laurent(n, -2, 2)
        }
    }
}
