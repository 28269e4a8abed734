//! Stabilizer algebra of a lightlike direction.
//!
//! Given a Lorentzian parent algebra and a lightlike vector k, this module
//! builds an adapted frame [e0, e1, .., e_{n-1}]: e0 is k scaled to unit
//! time component (still lightlike, so e0*e0 = 0), and the e_i are unit
//! spacelike vectors orthogonal to k and to each other. The subalgebra the
//! frame generates has one nilpotent and n-1 unit generators, which is what
//! the `cayley` module pins down against a reference signature.

mod cayley;
mod generators;
mod transform;

pub use cayley::{reference_signature, verify_isomorphism, CayleyTable};
pub use generators::{
    canonical_little_report, little_generators, lorentz_generators, verify_commutation,
    verify_lorentz_table, GeneratorSet,
};
pub use transform::{
    check_invariance, folded_potential, gauge_check, gauge_closed_form, rotation_counterexample,
    translation_rotor, transform_potential, FLOAT_TOL,
};

use thiserror::Error;

use crate::algebra::{self, Algebra, Multivector, Signature};

/// Residual gate for "is this scalar zero", relative to the input scale.
const NULL_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum LittleError {
    #[error("parent signature {0} must be Lorentzian of dimension 3 or more: one time-like generator, no degenerate ones")]
    NotLorentzian(Signature),
    #[error("direction must be a nonzero grade-1 vector")]
    NotAVector,
    #[error("direction is not lightlike: k*k = {norm:.3e}")]
    NotLightlike { norm: f64 },
    #[error("direction has no usable time component")]
    NoTimeComponent,
    #[error("operation needs a parent of dimension {expected}, algebra is {got}")]
    WrongDimension { expected: u32, got: u32 },
    #[error("named rotation/boost generators need signature G(1,3,0), algebra is {0}")]
    NeedsSpacetime(Signature),
    #[error("gauge parameter must be a scalar plus a pseudoscalar part")]
    BadGaugeParameter,
    #[error("potential must be odd-grade")]
    NotAPotential,
    #[error("potential must be orthogonal to the direction, s.k = {dot:.3e}")]
    NotOrthogonal { dot: f64 },
    #[error("frame blades {s:#x} and {t:#x} do not multiply to a single frame blade, residual {residual:.3e}")]
    NotClosed { s: u16, t: u16, residual: f64 },
    #[error(transparent)]
    Algebra(#[from] algebra::Error),
}

/// The algebra of transformations fixing one lightlike direction, carried
/// as an adapted frame inside its parent.
#[derive(Debug, Clone)]
pub struct LittleAlgebra {
    parent: Algebra,
    direction: Multivector,
    /// frame[0] is lightlike, frame[1..] are unit spacelike, mutually
    /// orthogonal and orthogonal to the direction.
    frame: Vec<Multivector>,
    time_index: usize,
}

impl LittleAlgebra {
    /// Builds the adapted frame for a lightlike direction.
    ///
    /// The spatial frame comes from the parent's spatial axes: the axis the
    /// direction leans on hardest is absorbed into frame[0], the rest are
    /// orthogonalized against the direction in ascending order. For an
    /// axis-aligned direction the frame is exact.
    pub fn construct(parent: Algebra, direction: &Multivector) -> Result<LittleAlgebra, LittleError> {
        let sig = parent.signature();
        let lorentzian = sig.r == 0 && (sig.p == 1 || sig.q == 1) && parent.dim() >= 3;
        if !lorentzian {
            return Err(LittleError::NotLorentzian(sig));
        }
        let time_index = if sig.p == 1 { 0 } else { parent.dim() as usize - 1 };

        if direction.is_zero() || !direction.is_homogeneous(1) {
            return Err(LittleError::NotAVector);
        }
        let norm = direction
            .inner_vectors(direction)
            .expect("grade checked above");
        if norm.abs() > NULL_TOL * (1.0 + direction.max_abs() * direction.max_abs()) {
            return Err(LittleError::NotLightlike { norm });
        }
        let time_coeff = direction.coeff_at(&[time_index]);
        if time_coeff.abs() < 1e-9 * direction.max_abs() {
            return Err(LittleError::NoTimeComponent);
        }

        // unit time component; division per coefficient so powers of two
        // stay exact
        let e0 = Multivector::from_terms(
            parent,
            direction.terms().map(|(b, c)| (b, c / time_coeff)),
        );

        let spatial: Vec<usize> =
            (0..parent.dim() as usize).filter(|&j| j != time_index).collect();
        let lean = spatial
            .iter()
            .copied()
            .max_by(|&a, &b| {
                let (ca, cb) = (direction.coeff_at(&[a]).abs(), direction.coeff_at(&[b]).abs());
                // ties resolve to the lowest index
                ca.partial_cmp(&cb).unwrap().then(b.cmp(&a))
            })
            .expect("dim >= 3 leaves at least two spatial axes");

        let spatial_direction = Multivector::from_terms(
            parent,
            direction
                .terms()
                .filter(|&(b, _)| b != crate::algebra::Blade::from_indices(&[time_index]).unwrap()),
        );
        let mut used = vec![spatial_direction];
        let mut frame = vec![e0];
        for &j in spatial.iter().filter(|&&j| j != lean) {
            let mut v = Multivector::basis_vector(parent, j);
            for u in &used {
                let uu = u.inner_vectors(u).expect("vectors");
                let c = v.inner_vectors(u).expect("vectors") / uu;
                if c != 0.0 {
                    v = v.sub(&u.scale(c));
                }
            }
            let vv = v.inner_vectors(&v).expect("vectors");
            debug_assert!(vv.abs() > 1e-9, "axis collapsed during orthogonalization");
            let mag = vv.abs().sqrt();
            let unit = Multivector::from_terms(parent, v.terms().map(|(b, c)| (b, c / mag)));
            used.push(v);
            frame.push(unit);
        }

        Ok(LittleAlgebra {
            parent,
            direction: direction.clone(),
            frame,
            time_index,
        })
    }

    pub fn parent(&self) -> Algebra {
        self.parent
    }

    /// The lightlike direction as given, unscaled.
    pub fn direction(&self) -> &Multivector {
        &self.direction
    }

    /// Adapted frame: index 0 lightlike, the rest unit spacelike.
    pub fn frame(&self) -> &[Multivector] {
        &self.frame
    }

    /// Number of frame vectors; the generated subalgebra has 2^dim blades.
    pub fn dim(&self) -> usize {
        self.frame.len()
    }

    pub fn time_index(&self) -> usize {
        self.time_index
    }

    /// Square of a unit spatial frame vector: -1 in mostly-minus parents,
    /// +1 in mostly-plus ones.
    pub fn spatial_square(&self) -> f64 {
        if self.parent.signature().p == 1 {
            -1.0
        } else {
            1.0
        }
    }

    /// Ordered product of the frame vectors selected by `mask`: spatial
    /// factors in ascending index order, the nilpotent e0 last, matching
    /// the generator order of the reference signature (and making
    /// embedded_blade(0b11) the translation generator N_1 = e_1 e0).
    /// Mask 0 is the scalar 1.
    pub fn embedded_blade(&self, mask: u16) -> Multivector {
        assert!(
            (mask as usize) < (1usize << self.dim()),
            "mask selects frame vectors that do not exist"
        );
        ordered_product(self.parent, &self.frame, mask)
    }
}

/// Product of the masked vectors with spatial indices ascending and index 0
/// last; shared by the embedded blades and their extraction duals so both
/// sides of the biorthogonality pair factors identically.
pub(crate) fn ordered_product(
    parent: Algebra,
    vectors: &[Multivector],
    mask: u16,
) -> Multivector {
    let mut out = Multivector::scalar(parent, 1.0);
    for (i, v) in vectors.iter().enumerate().skip(1) {
        if mask & (1 << i) != 0 {
            out = out.geometric_product(v);
        }
    }
    if mask & 1 != 0 {
        out = out.geometric_product(&vectors[0]);
    }
    out
}
