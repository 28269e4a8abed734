//! Core engine tour: building multivectors in a few signatures, the
//! geometric / outer / inner products, reversion, duality against the
//! pseudoscalar, and the text round trip.
//!
//!     cargo run --example products

use lpa::{parse_multivector, Algebra, Multivector, Signature};

fn main() {
    // Spacetime G(1,3): generator 0 squares to +1, the rest to -1.
    let st = Algebra::spacetime();
    let g = |i: usize| Multivector::basis_vector(st, i);

    let k = g(0).add(&g(3));
    println!("k        = {k}");
    println!("k k      = {}", k.geometric_product(&k));

    let s = g(1).scale(2.0).sub(&g(2));
    println!("s        = {s}");
    println!("s k      = {}", s.geometric_product(&k));
    println!("s ^ k    = {}", s.outer(&k));
    println!("s . k    = {}", s.inner_vectors(&k).unwrap());

    let field = s.outer(&k);
    println!("~(s^k)   = {}", field.reverse());
    let i_st = Multivector::pseudoscalar(st);
    println!("I        = {i_st},  I I = {}", i_st.geometric_product(&i_st));
    println!("(s^k) I  = {}", field.right_mul_pseudoscalar());

    // A degenerate signature: one nilpotent generator, as in plane-based
    // projective algebras.
    let pga = Algebra::new(Signature::new(0, 2, 1)).unwrap();
    let e2 = Multivector::basis_vector(pga, 2);
    println!("\nG(0,2,1): e2 e2 = {}", e2.geometric_product(&e2));

    // Text forms parse back bit for bit.
    let text = "2.5*e0 - 1*e13 + 0.125*e0123";
    let parsed = parse_multivector(text, st).unwrap();
    println!("\nparsed   \"{text}\"");
    println!("printed  \"{parsed}\"");
    assert_eq!(parse_multivector(&parsed.to_string(), st).unwrap(), parsed);
    println!("round trip exact");
}
