//! Polynomial representations ρ_ν of GL_n, extended to glued families, and
//! their limits along curves.

use gln_boundary::exactla::rat;
use gln_boundary::hinge::glue;
use gln_boundary::merofam::{diagonal_family, limit_hinge, LaurentPoly};
use gln_boundary::reps::{build_rep, rep_limit, rho_semigroup, Signature};

fn main() -> gln_boundary::Result<()> {
    for sig in Signature::all(3, 2) {
        let rep = build_rep(&sig)?;
        println!("ν = {sig}: dim H_ν = {}, ambient {}", rep.dim(), rep.ambient_dim());
    }

    let nu: Signature = "2,1,0".parse()?;
    let rep = build_rep(&nu)?;
    let mut gamma = diagonal_family(&[1, 0, -1]);
    gamma[(0, 2)] = LaurentPoly::constant(rat(1));
    gamma[(2, 1)] = LaurentPoly::z(1);
    let direct = rep_limit(&rep, &gamma)?;
    let via_hinge = rho_semigroup(&rep, &glue(&limit_hinge(&gamma)?.1))?;
    println!("lim z^(Σ m_i ν_i) ρ_ν(γ) = ρ_ν(ℒ(𝒫)): {}", direct == via_hinge);
    print!("{}", direct.matrix);
    Ok(())
}
