//! Stabilizer of a lightlike direction: the adapted frame, the rotation and
//! translation generators, and machine checks of their commutation table,
//! in dimension 4 and in a higher-dimensional parent.
//!
//!     cargo run --example little_group

use lpa::little::{little_generators, verify_commutation};
use lpa::{Algebra, LittleAlgebra, Multivector, Signature};

fn show(parent: Algebra, k: &Multivector) {
    let la = LittleAlgebra::construct(parent, k).unwrap();
    println!("parent {}  k = {k}", parent.signature());
    for (i, f) in la.frame().iter().enumerate() {
        println!("  f{i} = {f}");
    }
    let gens = little_generators(&la);
    println!(
        "  {} rotations, {} translations",
        gens.rotations.len(),
        gens.translations.len()
    );
    for (i, n) in &gens.translations {
        println!("  N({i}) = {n},  N({i})^2 = {}", n.geometric_product(n));
    }
    print!("{}", verify_commutation(&la, 1e-12).to_text());
    println!();
}

fn main() {
    let st = Algebra::spacetime();
    let k = Multivector::basis_vector(st, 0).add(&Multivector::basis_vector(st, 3));
    show(st, &k);

    // An oblique direction in G(1,5); the frame comes out of
    // Gram-Schmidt rather than being a relabeling of the axes.
    let big = Algebra::new(Signature::mostly_minus(5)).unwrap();
    let g = |i: usize| Multivector::basis_vector(big, i);
    let k = g(0)
        .scale(3.0)
        .add(&g(1).scale(2.0))
        .add(&g(2).scale(2.0))
        .add(&g(4));
    show(big, &k);
}
