//! Clifford algebra core: signatures G(p,q,r), basis blades, multivectors,
//! rotors, and the text format.
//!
//! Generators are ordered by square: indices [0,p) square to +1, [p,p+q) to
//! -1, and [p+q,p+q+r) to 0. Everything downstream (blade masks, products,
//! the parser) relies on that fixed order. Coefficients are f64 and the term
//! maps never hold explicit zeros, so equality on multivectors is exact
//! structural equality.

mod blade;
mod multivector;
mod parse;
mod rotor;

pub use blade::Blade;
pub use multivector::Multivector;
pub use parse::{parse_multivector, ParseError};
pub use rotor::{exp_bivector, Rotor};

use std::fmt;
use thiserror::Error;

/// Errors from algebra construction and the operations that validate their
/// inputs. Products on mismatched algebras are a caller bug and panic
/// instead; see [`Multivector::geometric_product`].
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("signature needs at least one generator")]
    EmptySignature,
    #[error("signature has {got} generators, the blade encoding admits at most 16")]
    TooManyGenerators { got: u32 },
    #[error("expected a pure grade-{expected} argument")]
    WrongGrade { expected: u32 },
    #[error("rotor must be purely even-grade")]
    NotEven,
    #[error("rotor norm check failed, |R~R - 1| = {residual:e}")]
    RotorNorm { residual: f64 },
    #[error("exponential series did not converge within 64 terms")]
    SeriesDiverged,
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
}

/// Generator signature of G(p,q,r): p unipotent, q anti-unipotent, r
/// nilpotent generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32, r: u32) -> Signature {
        Signature { p, q, r }
    }

    /// Minkowski G(1,n) with the timelike generator first (mostly-minus).
    pub fn mostly_minus(n: u32) -> Signature {
        Signature::new(1, n, 0)
    }

    /// Minkowski G(n,1) with the timelike generator last (mostly-plus).
    pub fn mostly_plus(n: u32) -> Signature {
        Signature::new(n, 1, 0)
    }

    pub fn dim(&self) -> u32 {
        self.p + self.q + self.r
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.p, self.q, self.r)
    }
}

/// Validated algebra handle. Cheap to copy; carries the generator-square
/// table implied by its signature and performs basis-blade arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Algebra {
    sig: Signature,
}

impl Algebra {
    pub fn new(sig: Signature) -> Result<Algebra, Error> {
        let dim = sig.dim();
        if dim == 0 {
            return Err(Error::EmptySignature);
        }
        if dim > 16 {
            return Err(Error::TooManyGenerators { got: dim });
        }
        Ok(Algebra { sig })
    }

    /// Spacetime algebra G(1,3), the workhorse of the test suites.
    pub fn spacetime() -> Algebra {
        Algebra::new(Signature::mostly_minus(3)).expect("G(1,3) is valid")
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> u32 {
        self.sig.dim()
    }

    pub fn blade_count(&self) -> usize {
        1usize << self.sig.dim()
    }

    /// Square of generator i under the metric, +1 / -1 / 0.
    pub fn generator_square(&self, i: usize) -> f64 {
        let i = i as u32;
        debug_assert!(i < self.dim());
        if i < self.sig.p {
            1.0
        } else if i < self.sig.p + self.sig.q {
            -1.0
        } else {
            0.0
        }
    }

    pub fn pseudoscalar_blade(&self) -> Blade {
        Blade::from_mask(((1u32 << self.dim()) - 1) as u16)
    }

    /// Product of two basis blades: the sign (0 when a shared nilpotent
    /// generator annihilates the term) and the resulting blade a XOR b.
    ///
    /// The sign is the parity of the transpositions needed to interleave the
    /// two ascending index lists, times the metric square of every repeated
    /// generator.
    pub fn blade_product(&self, a: Blade, b: Blade) -> (f64, Blade) {
        let mut sign = reorder_sign(a.mask(), b.mask());
        let mut common = a.mask() & b.mask();
        while common != 0 {
            let i = common.trailing_zeros() as usize;
            sign *= self.generator_square(i);
            common &= common - 1;
        }
        (sign, Blade::from_mask(a.mask() ^ b.mask()))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sig.fmt(f)
    }
}

// Parity of moving each index of b past the indices of a that exceed it,
// i.e. the transposition count for merging the two sorted lists.
fn reorder_sign(mut a: u16, b: u16) -> f64 {
    a >>= 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_oversized_signatures() {
        assert_eq!(
            Algebra::new(Signature::new(0, 0, 0)),
            Err(Error::EmptySignature)
        );
        assert_eq!(
            Algebra::new(Signature::new(9, 8, 0)),
            Err(Error::TooManyGenerators { got: 17 })
        );
        assert!(Algebra::new(Signature::new(8, 8, 0)).is_ok());
    }

    #[test]
    fn generator_squares_follow_index_ranges() {
        let alg = Algebra::new(Signature::new(2, 1, 1)).unwrap();
        assert_eq!(alg.generator_square(0), 1.0);
        assert_eq!(alg.generator_square(1), 1.0);
        assert_eq!(alg.generator_square(2), -1.0);
        assert_eq!(alg.generator_square(3), 0.0);
    }

    #[test]
    fn blade_product_handles_reordering_and_metric() {
        let sta = Algebra::spacetime();
        let g0 = Blade::from_indices(&[0]).unwrap();
        let g1 = Blade::from_indices(&[1]).unwrap();
        let g01 = Blade::from_indices(&[0, 1]).unwrap();

        // g0 g1 = +e01, g1 g0 = -e01
        assert_eq!(sta.blade_product(g0, g1), (1.0, g01));
        assert_eq!(sta.blade_product(g1, g0), (-1.0, g01));
        // squares pick up the metric
        assert_eq!(sta.blade_product(g0, g0), (1.0, Blade::SCALAR));
        assert_eq!(sta.blade_product(g1, g1), (-1.0, Blade::SCALAR));
    }

    #[test]
    fn nilpotent_repeat_annihilates() {
        let pga = Algebra::new(Signature::new(0, 2, 1)).unwrap();
        let e2 = Blade::from_indices(&[2]).unwrap();
        let (sign, blade) = pga.blade_product(e2, e2);
        assert_eq!(sign, 0.0);
        assert_eq!(blade, Blade::SCALAR);
    }

    #[test]
    fn spacetime_pseudoscalar_squares_to_minus_one() {
        let sta = Algebra::spacetime();
        let i = sta.pseudoscalar_blade();
        assert_eq!(sta.blade_product(i, i), (-1.0, Blade::SCALAR));
    }
}
