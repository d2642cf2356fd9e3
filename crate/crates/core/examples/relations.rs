//! Linear relations, their invariants and composition with null.

use gln_boundary::exactla::{RationalMatrix, Subspace};
use gln_boundary::relations::{compose, GaMorphism, LinearRelation};

fn show(name: &str, r: &LinearRelation) {
    println!(
        "{name}: dim {}, ker {}, dom {}, im {}, indef {}, rank {}",
        r.dim(),
        r.kernel().dim(),
        r.domain().dim(),
        r.image().dim(),
        r.indef().dim(),
        r.rank()
    );
}

fn main() -> gln_boundary::Result<()> {
    let a = RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
    let b = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
    let (ga, gb) = (LinearRelation::graph(&a), LinearRelation::graph(&b));
    show("graph(A)", &ga);
    show("graph(B)", &gb);

    let ba = compose(&gb.clone().into(), &ga.clone().into())?;
    assert_eq!(ba, LinearRelation::graph(&b.try_mul(&a)?).into());
    println!("graph(B)∘graph(A) = graph(BA)");

    // A pseudoinverse swaps kernel with indefiniteness and domain with image.
    let p = gb.pseudoinverse();
    show("graph(B)^-1", &p);

    // x ⊕ y has rank zero; composing it after graph(B) loses transversality.
    let line = Subspace::coordinate(2, &[0]);
    let rank_zero = LinearRelation::direct_sum(&line, &line);
    show("e1 ⊕ e1", &rank_zero);
    match compose(&rank_zero.into(), &p.into())? {
        GaMorphism::Null { .. } => println!("(e1 ⊕ e1)∘graph(B)^-1 = null"),
        GaMorphism::Relation(r) => show("product", &r),
    }
    Ok(())
}
