//! The field bivector s k is invariant under the lightlike translations of
//! the stabilizer: the direction k is fixed exactly, a transverse vector s
//! only picks up a shift along the null frame vector, and s k does not move.
//! A plain spatial rotation breaks all three.
//!
//!     cargo run --example invariance

use lpa::little::{check_invariance, rotation_counterexample, translation_rotor};
use lpa::{Algebra, LittleAlgebra, Multivector};

fn main() {
    let st = Algebra::spacetime();
    let g = |i: usize| Multivector::basis_vector(st, i);
    let k = g(0).add(&g(3));
    let la = LittleAlgebra::construct(st, &k).unwrap();

    let s = g(1).scale(2.0).sub(&g(2));
    let theta = Multivector::scalar(st, 1.5);
    let rotor = translation_rotor(&la, 1, &theta).unwrap();
    println!("k       = {k}");
    println!("s       = {s}");
    println!("L k ~L  = {}", rotor.sandwich(&k));
    println!("L s ~L  = {}", rotor.sandwich(&s));
    println!("s k     = {}", s.geometric_product(&k));
    println!(
        "(LsL) k = {}\n",
        rotor.sandwich(&s).geometric_product(&k)
    );

    let report = check_invariance(&la, &s, &theta, 1, 0.0, 1e-12).unwrap();
    print!("{}", report.to_text());
    println!();
    let counter = rotation_counterexample(&la, 1.0).unwrap();
    print!("{}", counter.to_text());
}
