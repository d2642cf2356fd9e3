//! Projections of the sea urchin to compactifications [GL_n]_ζ, compared
//! with limits of ζ(γ(z)), and separation of curves.

use gln_boundary::exactla::rat;
use gln_boundary::merofam::{diagonal_family, LaurentPoly};
use gln_boundary::urchin::{curve_limit, direct_limit, project, separate, CompactificationSpec};

fn spec(sigs: &[&str]) -> gln_boundary::Result<CompactificationSpec> {
    CompactificationSpec::new(sigs.iter().map(|s| s.parse()).collect::<gln_boundary::Result<_>>()?)
}

fn main() -> gln_boundary::Result<()> {
    let zeta = spec(&["1,0", "1,1"])?;
    let point = curve_limit(&diagonal_family(&[1, -1]))?;
    let projected = project(&point, &zeta)?;
    println!("weights {:?}, zeroed blocks {:?}", projected.weights, projected.zeroed);
    print!("{}", projected.assembled());

    let mut gamma = diagonal_family(&[2, 0, -1]);
    gamma[(1, 0)] = LaurentPoly::z(-1);
    gamma[(0, 2)] = LaurentPoly::from_terms([(0, rat(1)), (1, rat(3))]);
    for sigs in [&["1,0,0"][..], &["1,0,0", "1,1,0", "1,1,1"], &["2,1,0"]] {
        let zeta = spec(sigs)?;
        let lhs = project(&curve_limit(&gamma)?, &zeta)?;
        let rhs = direct_limit(&gamma, &zeta)?;
        println!("ζ = {sigs:?}: π_ζ(lim γ) = lim ζ(γ) projectively: {}", lhs.projectively_equal(&rhs));
    }

    let a = diagonal_family(&[0, -1]);
    let b = diagonal_family(&[-1, 0]);
    println!("diag(1, z) vs diag(z, 1) separated by ζ = (1,0): {}", separate(&a, &b, &[spec(&["1,0"])?])?);
    Ok(())
}
