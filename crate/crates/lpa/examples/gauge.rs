//! Gauge transformation of a folded potential A = sum e_i (a_i + b_i I):
//! the lightlike translation rotor moves only the e0 coefficients, exactly
//! as the closed form says, and a potential that leaks onto the time axis
//! visibly departs from it.
//!
//!     cargo run --example gauge

use lpa::little::{
    folded_potential, gauge_check, gauge_closed_form, transform_potential, translation_rotor,
};
use lpa::{Algebra, LittleAlgebra, Multivector};

fn main() {
    let st = Algebra::spacetime();
    let k = Multivector::basis_vector(st, 0).add(&Multivector::basis_vector(st, 3));
    let la = LittleAlgebra::construct(st, &k).unwrap();

    let (alpha, beta) = (1.0, 0.5);
    let a = [1.0, 0.5, 0.25];
    let b = [0.0, 0.0, 1.0];

    let potential = folded_potential(&la, a, b).unwrap();
    let closed = gauge_closed_form(&la, alpha, beta, a, b).unwrap();
    let (residual, witness) = gauge_check(&la, alpha, beta, a, b).unwrap();
    println!("A           = {potential}");
    println!("closed form = {closed}");
    println!("residual    = {residual:e}");
    println!("witness     = {witness} (time-axis coefficient shift)\n");

    // The same rotor on a potential with a bare time-axis component: the
    // transverse closed form no longer predicts the image.
    let theta = Multivector::scalar(st, alpha).add(&Multivector::pseudoscalar(st).scale(beta));
    let rotor = translation_rotor(&la, 2, &theta).unwrap();
    let leaky = potential.add(&Multivector::basis_vector(st, 0));
    let image = transform_potential(&rotor, &leaky).unwrap();
    let naive = closed.add(&Multivector::basis_vector(st, 0));
    println!("leaky A     = {leaky}");
    println!("L A ~L      = {image}");
    println!("departure   = {:e}", image.sub(&naive).max_abs());
}
