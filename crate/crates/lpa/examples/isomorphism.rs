//! The stabilizer subalgebra of a lightlike direction in G(1,n) multiplies
//! exactly like the degenerate algebra G(0,n-1,1): print the Cayley table
//! in dimension 4 and verify the correspondence across parents.
//!
//!     cargo run --example isomorphism

use lpa::little::{reference_signature, verify_isomorphism, CayleyTable};
use lpa::{Algebra, LittleAlgebra, Multivector, Signature};

fn main() {
    let st = Algebra::spacetime();
    let k = Multivector::basis_vector(st, 0).add(&Multivector::basis_vector(st, 3));
    let la = LittleAlgebra::construct(st, &k).unwrap();
    println!("W(k) in {} for k = {k}:", st.signature());
    print!("{}", CayleyTable::build(&la, 0.0).unwrap());
    println!();

    for n in 2..=6 {
        let parent = Algebra::new(Signature::mostly_minus(n)).unwrap();
        let k = Multivector::basis_vector(parent, 0)
            .add(&Multivector::basis_vector(parent, n as usize));
        let la = LittleAlgebra::construct(parent, &k).unwrap();
        let report = verify_isomorphism(&la, 0.0).unwrap();
        println!(
            "G(1,{n}) -> {}   {}",
            reference_signature(&la),
            if report.all_pass() { "match" } else { "MISMATCH" }
        );
    }
}
