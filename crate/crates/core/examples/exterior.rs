//! λ of relations: compound matrices for operators, and the projective
//! homomorphism λ(Q)λ(P) = c·λ(QP).

use gln_boundary::exactla::{RationalMatrix, Subspace};
use gln_boundary::exterior::{common_ratio, lambda_cha, lambda_gamma, lambda_morphism};
use gln_boundary::relations::{compose, LinearRelation};

fn main() -> gln_boundary::Result<()> {
    let a = RationalMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
    for k in 0..=3 {
        print!("Λ^{k} A =\n{}", lambda_cha(&a, k)?.matrix);
    }

    // P sends e1 ↦ e1, e2 ↦ e2, kills e3 and is indefinite along e1.
    let rows = RationalMatrix::from_i64(&[&[1, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 0], &[0, 0, 0, 1, 0, 0]]);
    let p = LinearRelation::from_vectors(3, 3, &rows.row_vecs())?;
    let q = LinearRelation::direct_sum(&Subspace::coordinate(3, &[1, 2]), &Subspace::coordinate(3, &[0]));
    let (lp, lq) = (lambda_gamma(&p)?, lambda_gamma(&q)?);
    let lhs: Vec<RationalMatrix> =
        lq.iter().zip(&lp).map(|(x, y)| Ok(x.compose(y)?.matrix)).collect::<gln_boundary::Result<_>>()?;
    let qp = compose(&q.into(), &p.into())?;
    let rhs: Vec<RationalMatrix> =
        lambda_morphism(&qp).blocks.into_iter().map(|b| b.expect("degree preserving").matrix).collect();
    println!("QP is {}", if qp.is_null() { "null" } else { "non-null" });
    println!("λ(Q)λ(P) = c·λ(QP) with c = {}", common_ratio(&lhs, &rhs).expect("proportional"));
    Ok(())
}
