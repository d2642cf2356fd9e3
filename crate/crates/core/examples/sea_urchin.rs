//! Limits of curves in the sea urchin: interior points, spikes, and the
//! equivalence of spikes under reparametrization.

use gln_boundary::exactla::{rat, RationalMatrix};
use gln_boundary::hinge::compositions;
use gln_boundary::merofam::{constant_family, diagonal_family, reparametrize, LaurentPoly, Reparametrization};
use gln_boundary::urchin::{curve_limit, spike_dimension, spike_equal, UrchinPoint};

fn describe(p: &UrchinPoint) -> String {
    match p {
        UrchinPoint::Interior(g) => format!("interior point\n{g}"),
        UrchinPoint::Spike { m, hinge } => format!("spike m = {m:?}, hinge type {}", hinge.orbit_label()),
    }
}

fn main() -> gln_boundary::Result<()> {
    let g = RationalMatrix::from_i64(&[&[1, 2], &[0, 1]]);
    println!("constant curve: {}", describe(&curve_limit(&constant_family(&g))?));
    println!("diag(z^-1, z): {}", describe(&curve_limit(&diagonal_family(&[1, -1]))?));
    println!("diag(z^-2, z^2): {}", describe(&curve_limit(&diagonal_family(&[2, -2]))?));

    let mut gamma = diagonal_family(&[1, 0, -1]);
    gamma[(0, 1)] = LaurentPoly::constant(rat(1));
    gamma[(2, 0)] = LaurentPoly::z(1);
    let p = curve_limit(&gamma)?;
    for (name, kind) in [
        ("z -> 3z", Reparametrization::Scalar(rat(3))),
        ("z -> z^2", Reparametrization::Power(2)),
        ("z -> z + z^2 - 2z^3", Reparametrization::Formal(vec![rat(1), rat(-2)])),
    ] {
        let q = curve_limit(&reparametrize(&gamma, &kind)?)?;
        println!("{name}: same point {}, identical hinge {}", spike_equal(&p, &q)?, p == q);
    }

    for alpha in compositions(3) {
        println!("spikes of type {alpha}: {} parameters", spike_dimension(&alpha));
    }
    Ok(())
}
