//! Exponents, the factorization γ = a·diag(z^-m)·b, and the limit hinge of a
//! Laurent-polynomial curve computed two ways.

use gln_boundary::exactla::rat;
use gln_boundary::hinge::{glue, Hinge, OrbitLabel};
use gln_boundary::merofam::{
    default_precision, exponents, factorize_stable, limit_glued, limit_hinge, LaurentMatrix, LaurentPoly,
};

fn main() -> gln_boundary::Result<()> {
    let p = |terms: &[(i64, i64)]| LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))));
    let gamma = LaurentMatrix::from_rows(
        vec![
            vec![p(&[(-2, 1), (0, 1)]), p(&[(0, 1)]), p(&[])],
            vec![p(&[(-1, 1)]), p(&[(0, 1)]), p(&[(1, -3)])],
            vec![p(&[]), p(&[(0, 2)]), p(&[(1, 1)])],
        ],
        3,
    )?;
    let e = exponents(&gamma)?;
    println!("m = {:?}, k = {:?}, α = {:?}", e.m, e.k, e.alpha);

    let f = factorize_stable(&gamma, default_precision(&gamma)?)?;
    println!("factorization at precision {} reassembles γ: {}", f.precision, f.reassembles(&gamma));

    let (_, hinge) = limit_hinge(&gamma)?;
    let framed = Hinge::canonical(&OrbitLabel::new(e.alpha.clone())?).act(&f.a0(), &f.b0())?;
    println!("lattice limit = a(0)·𝒫_α·b(0): {}", framed == hinge);
    for (j, term) in hinge.terms().iter().enumerate() {
        println!(
            "P_{} = lim z^{} graph γ: rank {}, ker {}, indef {}",
            j + 1,
            e.k[j],
            term.rank(),
            term.kernel().dim(),
            term.indef().dim()
        );
    }
    println!("ℒ(limit hinge) = lim z^(m_1+…+m_j) λ^j γ: {}", glue(&hinge) == limit_glued(&gamma)?);
    Ok(())
}
