//! Shared test helpers: a blade-product oracle that works on explicit
//! generator words instead of bitmasks, and samplers for inputs whose
//! residuals are exactly representable.

#![allow(dead_code)]

use lpa::{Algebra, Multivector};
use rand::Rng;

pub fn metric_square(p: u32, q: u32, _r: u32, i: usize) -> f64 {
    if (i as u32) < p {
        1.0
    } else if (i as u32) < p + q {
        -1.0
    } else {
        0.0
    }
}

/// Multiplies two basis blades given as ascending generator index lists by
/// concatenating the words, bubbling adjacent transpositions one swap at a
/// time (each swap flips the sign), and contracting adjacent equal pairs by
/// their metric square. Returns the overall sign and the surviving word.
pub fn oracle_blade_product(
    p: u32,
    q: u32,
    r: u32,
    a: &[usize],
    b: &[usize],
) -> (f64, Vec<usize>) {
    let mut word: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    let mut sign = 1.0f64;
    loop {
        let mut swapped = false;
        for i in 0..word.len().saturating_sub(1) {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                swapped = true;
            }
        }
        if swapped {
            continue;
        }
        let mut contracted = false;
        for i in 0..word.len().saturating_sub(1) {
            if word[i] == word[i + 1] {
                sign *= metric_square(p, q, r, word[i]);
                word.drain(i..=i + 1);
                contracted = true;
                break;
            }
        }
        if !contracted {
            break;
        }
    }
    if sign == 0.0 {
        (0.0, Vec::new())
    } else {
        (sign, word)
    }
}

/// Lightlike vector whose little frame comes out exactly representable:
/// `2^m * (g0 + sign * g_axis)` in a mostly-minus algebra. Division by the
/// time component and the orthogonalization steps are then exact in f64.
/// Returns the vector and the spatial axis it leans on.
pub fn exact_lightlike<R: Rng>(alg: Algebra, rng: &mut R) -> (Multivector, usize) {
    let n = alg.dim() as usize - 1;
    let axis = rng.gen_range(1..=n);
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let scale = (2.0f64).powi(rng.gen_range(-2..=3));
    let k = Multivector::basis_vector(alg, 0)
        .scale(scale)
        .add(&Multivector::basis_vector(alg, axis).scale(sign * scale));
    (k, axis)
}

/// Small-integer combination of the given vectors, never all zero.
pub fn integer_combination<R: Rng>(vectors: &[Multivector], rng: &mut R) -> Multivector {
    assert!(!vectors.is_empty());
    let mut coeffs: Vec<f64> = (0..vectors.len())
        .map(|_| rng.gen_range(-3i32..=3) as f64)
        .collect();
    if coeffs.iter().all(|&c| c == 0.0) {
        coeffs[0] = 1.0;
    }
    let mut out = Multivector::zero(vectors[0].algebra());
    for (c, v) in coeffs.iter().zip(vectors) {
        out = out.add(&v.scale(*c));
    }
    out
}
