//! Hinges: canonical representatives of the GL×GL orbits, the λ^m
//! alternative, gluing, and products of hinges.

use gln_boundary::exactla::RationalMatrix;
use gln_boundary::hinge::{compositions, glue, glued_product, weak_product, well_glued, Hinge};
use gln_boundary::Error;

fn main() -> gln_boundary::Result<()> {
    let n = 3;
    println!("{} orbits of hinges for n = {n}:", compositions(n).len());
    for alpha in compositions(n) {
        let h = Hinge::canonical(&alpha);
        let cases: Vec<String> = (0..=n).map(|m| format!("{:?}", h.alternative(m).unwrap())).collect();
        println!("  {alpha}: {}", cases.join(" "));
    }

    let g1 = RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
    let g2 = RationalMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let alpha = &compositions(n)[1];
    let h = Hinge::canonical(alpha).act(&g1, &g2)?;
    let family = glue(&h);
    for (m, block) in family.blocks().iter().enumerate() {
        print!("ℒ^{m} =\n{}", block.matrix);
    }

    let k = Hinge::canonical(&compositions(n)[2]);
    let product = weak_product(&h.completed_weak(), &k.completed_weak())?;
    let glued = glued_product(&family, &glue(&k))?;
    println!("product has {} terms; glued product well glued: {}", product.len(), well_glued(&glued, &product));

    // Violations name the failing condition.
    let singular = gln_boundary::relations::LinearRelation::graph(&RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]));
    if let Err(Error::HingeAxiom { axiom, index }) = Hinge::new(vec![singular]) {
        println!("graph of a singular matrix: {axiom} fails at term {index}");
    }
    Ok(())
}
