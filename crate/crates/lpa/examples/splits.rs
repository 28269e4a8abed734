//! Spacetime splits: rewriting a vector and a trivector against the
//! observer's time axis, and recovering them exactly.
//!
//!     cargo run --example splits

use lpa::view::{spacetime_split_trivector, spacetime_split_vector};
use lpa::{Algebra, Multivector};

fn main() {
    let st = Algebra::spacetime();
    let g = |i: usize| Multivector::basis_vector(st, i);
    let time = g(0);

    let v = g(0).scale(3.0).add(&g(1)).sub(&g(3).scale(0.5));
    let split = spacetime_split_vector(&v).unwrap();
    println!("v          = {v}");
    println!("components = {:?}", split.coefficients);
    println!("v g0       = {}", split.even_element);
    assert_eq!(split.even_element.geometric_product(&time), v);
    println!("(v g0) g0  = v exactly\n");

    let t = Multivector::basis_blade(st, &[0, 1, 2])
        .scale(2.0)
        .add(&Multivector::basis_blade(st, &[1, 2, 3]));
    let split = spacetime_split_trivector(&t).unwrap();
    println!("T          = {t}");
    println!("components = {:?}", split.coefficients);
    println!("T g0       = {}", split.even_element);
    assert_eq!(split.even_element.geometric_product(&time), t);
    println!("(T g0) g0  = T exactly");
}
