//! Relative views: spacetime splits against an observer axis, time slices
//! of geometric primitives, and deterministic SVG / CSV rendering.

mod render;
mod scene;

pub use render::{scene_to_csv, scene_to_svg};
pub use scene::{
    invariance_scene, lightcone_scene, slice_primitive, Primitive, PrimitiveKind, Scene, Style,
};

use thiserror::Error;

use crate::algebra::{Multivector, Signature};

#[derive(Debug, Error)]
pub enum ViewError {
    #[error("spacetime splits need a mostly-minus Lorentzian algebra, got {0}")]
    NotMostlyMinus(Signature),
    #[error("expected a pure grade-{expected} argument")]
    WrongGrade { expected: u32 },
    #[error("trivector splits need signature G(1,3,0), algebra is {0}")]
    NeedsSpacetime(Signature),
    #[error("relative views need 2 or 3 spatial dimensions, algebra is {0}")]
    UnsupportedView(Signature),
    #[error("sliced primitives must be homogeneous and nonzero")]
    NotHomogeneous,
}

/// A multivector rewritten against the observer along the time axis.
#[derive(Debug, Clone)]
pub struct SplitResult {
    /// Generator index of the observer's time axis.
    pub observer: usize,
    /// Components in observer form; for a vector these are the plain
    /// generator coefficients, for a trivector the dual components.
    pub coefficients: Vec<f64>,
    /// The product with the time axis: scalar-plus-bivector for a vector,
    /// bivector-plus-pseudoscalar for a trivector. Multiplying by the time
    /// axis again recovers the input exactly.
    pub even_element: Multivector,
}

fn require_mostly_minus(v: &Multivector) -> Result<(), ViewError> {
    let sig = v.algebra().signature();
    if sig.p != 1 || sig.r != 0 {
        return Err(ViewError::NotMostlyMinus(sig));
    }
    Ok(())
}

/// Splits a vector against the time axis: v = v0 g0 + v_i g_i becomes the
/// even element v g0 = v0 + v_i g_i g0.
pub fn spacetime_split_vector(v: &Multivector) -> Result<SplitResult, ViewError> {
    require_mostly_minus(v)?;
    if !v.is_homogeneous(1) {
        return Err(ViewError::WrongGrade { expected: 1 });
    }
    let alg = v.algebra();
    let time = Multivector::basis_vector(alg, 0);
    Ok(SplitResult {
        observer: 0,
        coefficients: (0..alg.dim() as usize).map(|i| v.coeff_at(&[i])).collect(),
        even_element: v.geometric_product(&time),
    })
}

/// Splits a trivector in the dimension-4 mostly-minus algebra. The even
/// element E = T g0 carries the components as
/// [-coeff(E, g0123), coeff(E, g23), -coeff(E, g13), coeff(E, g12)].
pub fn spacetime_split_trivector(t: &Multivector) -> Result<SplitResult, ViewError> {
    let sig = t.algebra().signature();
    if sig != Signature::new(1, 3, 0) {
        return Err(ViewError::NeedsSpacetime(sig));
    }
    if !t.is_homogeneous(3) {
        return Err(ViewError::WrongGrade { expected: 3 });
    }
    let alg = t.algebra();
    let time = Multivector::basis_vector(alg, 0);
    let even = t.geometric_product(&time);
    let coefficients = vec![
        -even.coeff_at(&[0, 1, 2, 3]),
        even.coeff_at(&[2, 3]),
        -even.coeff_at(&[1, 3]),
        even.coeff_at(&[1, 2]),
    ];
    Ok(SplitResult {
        observer: 0,
        coefficients,
        even_element: even,
    })
}
