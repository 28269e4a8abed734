//! Gauge translations: rotors built from the nilpotent generators, the
//! closed form of their action on potentials, and the invariance checks.
//!
//! With N = e_d e0 and a gauge parameter theta, the rotor is the exact
//! two-term exponential L = 1 - (theta N)/2, because (theta N)^2 = 0.
//! Conjugation by L fixes the lightlike direction, shifts an orthogonal
//! potential along e0 only, and leaves the field bivector s^k unchanged.

use crate::algebra::{Multivector, Rotor};
use crate::report::Report;

use super::{LittleAlgebra, LittleError};

/// Default residual gate for identities that hold only up to rounding.
pub const FLOAT_TOL: f64 = 1e-12;

/// Rotor of the gauge translation along frame axis `axis`, with parameter
/// `theta` = alpha + beta I. The pseudoscalar part is only a valid gauge
/// parameter in dimension-4 parents, where I N is still an even bivector
/// that reversion negates; everywhere else a nonzero beta is rejected.
pub fn translation_rotor(
    la: &LittleAlgebra,
    axis: usize,
    theta: &Multivector,
) -> Result<Rotor, LittleError> {
    assert!(
        (1..la.dim()).contains(&axis),
        "translation axis must name a spatial frame vector"
    );
    let parent = la.parent();
    let dim = parent.dim();
    if !theta
        .grades()
        .iter()
        .all(|&g| g == 0 || g == dim)
    {
        return Err(LittleError::BadGaugeParameter);
    }
    if dim != 4 && !theta.grade_select(dim).is_zero() {
        return Err(LittleError::WrongDimension {
            expected: 4,
            got: dim,
        });
    }
    let n = la.frame()[axis].geometric_product(&la.frame()[0]);
    let value = Multivector::scalar(parent, 1.0)
        .sub(&theta.geometric_product(&n).scale(0.5));
    Ok(Rotor::try_new(value)?)
}

/// Conjugates an odd-grade potential by a rotor. Folded potentials
/// s (1 + I) stay odd in dimension-4 parents, so they pass through here
/// unchanged in shape.
pub fn transform_potential(
    rotor: &Rotor,
    potential: &Multivector,
) -> Result<Multivector, LittleError> {
    if potential.grades().iter().any(|&g| g % 2 == 0) {
        return Err(LittleError::NotAPotential);
    }
    Ok(rotor.sandwich(potential))
}

/// Verifies the three invariance claims for one translation: the direction
/// is fixed, the potential moves only along e0, the first-order expansion
/// is the whole story, and the field bivector does not move.
///
/// `tol_direction` gates the fixed-direction residual (exactly zero for
/// axis-aligned directions and integer-coefficient potentials), `tol_float`
/// gates the remaining identities, whose cancellations cross rounding.
pub fn check_invariance(
    la: &LittleAlgebra,
    potential: &Multivector,
    theta: &Multivector,
    axis: usize,
    tol_direction: f64,
    tol_float: f64,
) -> Result<Report, LittleError> {
    if potential.is_zero() || !potential.is_homogeneous(1) {
        return Err(LittleError::NotAVector);
    }
    let k = la.direction();
    let dot = potential.inner_vectors(k).expect("grade checked");
    if dot.abs() > FLOAT_TOL * (1.0 + potential.max_abs() * k.max_abs()) {
        return Err(LittleError::NotOrthogonal { dot });
    }

    let rotor = translation_rotor(la, axis, theta)?;
    let mut report = Report::new("gauge-invariance");

    let k_image = rotor.sandwich(k);
    report.check(
        "direction-fixed",
        "L k ~L = k",
        k_image.sub(k).max_abs(),
        tol_direction,
    );

    let image = rotor.sandwich(potential);
    let shift = image.sub(potential);
    // the only admissible motion is along the lightlike frame vector
    let e0 = &la.frame()[0];
    let along = shift.coeff_at(&[la.time_index()]);
    report.check(
        "shift-along-e0",
        "L s ~L - s is a multiple of e0",
        shift.sub(&e0.scale(along)).max_abs(),
        tol_float,
    );

    let n = la.frame()[axis].geometric_product(&la.frame()[0]);
    let first_order = potential.sub(&theta.geometric_product(&n).commutator(potential));
    report.check(
        "first-order-exact",
        "L s ~L = s - (theta N) x s",
        image.sub(&first_order).max_abs(),
        tol_float,
    );

    report.check(
        "field-invariant",
        "(L s ~L) k = s k",
        image.geometric_product(k).sub(&potential.geometric_product(k)).max_abs(),
        tol_float,
    );

    Ok(report)
}

/// Closed form of the translated folded potential in a mostly-minus
/// dimension-4 parent, for the translation along frame axis 2:
/// with A = e0 (a0 + b0 I) + e1 (a1 + b1 I) + e2 (a2 + b2 I),
/// L A ~L = e0 (a0 - alpha a2 - beta a1 + (b0 - alpha b2 - beta b1) I)
///        + e1 (a1 + b1 I) + e2 (a2 + b2 I):
/// the transverse content is untouched, the lightlike coefficient absorbs
/// the whole gauge motion.
pub fn gauge_closed_form(
    la: &LittleAlgebra,
    alpha: f64,
    beta: f64,
    a: [f64; 3],
    b: [f64; 3],
) -> Result<Multivector, LittleError> {
    let parent = la.parent();
    if parent.signature() != crate::algebra::Signature::new(1, 3, 0) {
        return Err(LittleError::NeedsSpacetime(parent.signature()));
    }
    let i_ps = Multivector::pseudoscalar(parent);
    let coeff = |re: f64, im: f64| {
        Multivector::scalar(parent, re).add(&i_ps.scale(im))
    };
    let f = la.frame();
    let a0 = a[0] - alpha * a[2] - beta * a[1];
    let b0 = b[0] - alpha * b[2] - beta * b[1];
    Ok(f[0]
        .geometric_product(&coeff(a0, b0))
        .add(&f[1].geometric_product(&coeff(a[1], b[1])))
        .add(&f[2].geometric_product(&coeff(a[2], b[2]))))
}

/// Builds the folded potential from its six frame coefficients.
pub fn folded_potential(
    la: &LittleAlgebra,
    a: [f64; 3],
    b: [f64; 3],
) -> Result<Multivector, LittleError> {
    let parent = la.parent();
    if parent.dim() != 4 {
        return Err(LittleError::WrongDimension {
            expected: 4,
            got: parent.dim(),
        });
    }
    let i_ps = Multivector::pseudoscalar(parent);
    let f = la.frame();
    let mut out = Multivector::zero(parent);
    for i in 0..3 {
        let coeff = Multivector::scalar(parent, a[i]).add(&i_ps.scale(b[i]));
        out = out.add(&f[i].geometric_product(&coeff));
    }
    Ok(out)
}

/// One gauge trial in a mostly-minus dimension-4 parent. Returns the
/// residual between the conjugated potential and the closed form, and the
/// change in the raw timelike coefficient, which is gauge-dependent and
/// must move whenever alpha a2 + beta a1 is appreciable.
pub fn gauge_check(
    la: &LittleAlgebra,
    alpha: f64,
    beta: f64,
    a: [f64; 3],
    b: [f64; 3],
) -> Result<(f64, f64), LittleError> {
    let parent = la.parent();
    let theta = Multivector::scalar(parent, alpha)
        .add(&Multivector::pseudoscalar(parent).scale(beta));
    let rotor = translation_rotor(la, 2, &theta)?;
    let potential = folded_potential(la, a, b)?;
    let image = transform_potential(&rotor, &potential)?;
    let closed = gauge_closed_form(la, alpha, beta, a, b)?;
    let residual = image.sub(&closed).max_abs();
    let witness = (image.coeff_at(&[la.time_index()])
        - potential.coeff_at(&[la.time_index()]))
    .abs();
    Ok((residual, witness))
}

/// A spatial rotation that moves the lightlike direction is an isometry
/// and still fails to preserve the field bivector: the invariance belongs
/// to the gauge translations, not to rotations at large. The rotation
/// plane contains the spatial part of e0, so the direction has to move.
pub fn rotation_counterexample(la: &LittleAlgebra, angle: f64) -> Result<Report, LittleError> {
    let parent = la.parent();
    let f = la.frame();
    let time_axis = Multivector::basis_vector(parent, la.time_index());
    let spatial_of_e0 = f[0].sub(&time_axis);
    let plane = f[1].outer(&spatial_of_e0);
    let rotor = crate::algebra::exp_bivector(&plane, -0.5 * angle)
        .map_err(LittleError::Algebra)?;

    let s = &f[1];
    let k = la.direction();
    let s_image = rotor.sandwich(s);
    let k_image = rotor.sandwich(k);

    let mut report = Report::new("rotation-counterexample");
    let norm_before = s.geometric_product(s).scalar_part();
    let norm_after = s_image.geometric_product(&s_image).scalar_part();
    report.check(
        "isometry",
        "R s ~R keeps s s (rotations are isometries)",
        (norm_after - norm_before).abs(),
        FLOAT_TOL * (1.0 + norm_before.abs()),
    );
    report.check_exceeds(
        "direction-moved",
        "R k ~R != k",
        k_image.sub(k).max_abs(),
        1e-3,
    );
    report.check_exceeds(
        "field-not-invariant",
        "(R s ~R) k != s k",
        s_image
            .geometric_product(k)
            .sub(&s.geometric_product(k))
            .max_abs(),
        1e-3,
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Signature};
    use crate::little::LittleAlgebra;

    fn canonical() -> LittleAlgebra {
        let alg = Algebra::spacetime();
        let k = Multivector::basis_vector(alg, 0).add(&Multivector::basis_vector(alg, 3));
        LittleAlgebra::construct(alg, &k).unwrap()
    }

    fn theta(la: &LittleAlgebra, alpha: f64, beta: f64) -> Multivector {
        Multivector::scalar(la.parent(), alpha)
            .add(&Multivector::pseudoscalar(la.parent()).scale(beta))
    }

    #[test]
    fn translation_rotor_is_unit() {
        let la = canonical();
        // scalar-only parameter: every cancellation pairs two identical
        // floats, the norm residual is exactly zero
        let rotor = translation_rotor(&la, 2, &theta(&la, 0.7325, 0.0)).unwrap();
        assert_eq!(rotor.norm_residual(), 0.0);
        // with a pseudoscalar part the scalar slot of (theta N)^2 mixes
        // four contributions, leaving at most an ulp
        let rotor = translation_rotor(&la, 2, &theta(&la, 0.7325, -1.25)).unwrap();
        assert!(rotor.norm_residual() < 1e-14);
    }

    #[test]
    fn squared_gauge_generator_vanishes() {
        let la = canonical();
        let n = la.frame()[2].geometric_product(&la.frame()[0]);
        // alpha-only squares to exactly zero
        let m = theta(&la, 0.3, 0.0).geometric_product(&n);
        assert!(m.geometric_product(&m).is_zero());
        // alpha + beta I squares to rounding noise
        let m = theta(&la, 0.3, 1.7).geometric_product(&n);
        assert!(m.geometric_product(&m).max_abs() < 1e-14);
    }

    #[test]
    fn pseudoscalar_parameter_needs_dimension_four() {
        let alg = Algebra::new(Signature::mostly_minus(4)).unwrap();
        let k = Multivector::basis_vector(alg, 0).add(&Multivector::basis_vector(alg, 4));
        let la = LittleAlgebra::construct(alg, &k).unwrap();
        let th = theta(&la, 0.5, 0.25);
        assert!(matches!(
            translation_rotor(&la, 1, &th),
            Err(LittleError::WrongDimension { expected: 4, .. })
        ));
        // scalar-only parameters are fine in any dimension
        let scalar_only = theta(&la, 0.5, 0.0);
        assert!(translation_rotor(&la, 1, &scalar_only).is_ok());
    }

    #[test]
    fn gauge_parameter_grades_are_validated() {
        let la = canonical();
        let bad = Multivector::basis_vector(la.parent(), 1);
        assert!(matches!(
            translation_rotor(&la, 1, &bad),
            Err(LittleError::BadGaugeParameter)
        ));
    }

    #[test]
    fn invariance_holds_exactly_on_the_canonical_frame() {
        let la = canonical();
        let s = la.frame()[1].scale(2.0).add(&la.frame()[2].scale(-3.0));
        let th = theta(&la, 0.6180339887, 1.4142135623);
        let report = check_invariance(&la, &s, &th, 2, 0.0, 1e-12).unwrap();
        assert!(report.all_pass(), "{}", report.to_text());
    }

    #[test]
    fn invariance_rejects_non_orthogonal_potentials() {
        let la = canonical();
        let s = Multivector::basis_vector(la.parent(), 3);
        let th = theta(&la, 1.0, 0.0);
        assert!(matches!(
            check_invariance(&la, &s, &th, 1, 0.0, 1e-12),
            Err(LittleError::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn closed_form_matches_conjugation() {
        let la = canonical();
        let (residual, witness) = gauge_check(
            &la,
            0.9,
            -1.3,
            [0.4, -0.7, 1.1],
            [0.2, 0.8, -0.5],
        )
        .unwrap();
        assert!(residual <= 1e-12, "residual {residual:e}");
        // alpha a2 + beta a1 = 0.9*1.1 + 1.3*0.7 = 1.9, well above noise
        assert!(witness > 1.0);
    }

    #[test]
    fn transform_rejects_even_potentials() {
        let la = canonical();
        let rotor = translation_rotor(&la, 1, &theta(&la, 1.0, 0.0)).unwrap();
        let even = Multivector::basis_blade(la.parent(), &[0, 1]);
        assert!(matches!(
            transform_potential(&rotor, &even),
            Err(LittleError::NotAPotential)
        ));
    }

    #[test]
    fn rotations_break_the_invariance() {
        let la = canonical();
        let report = rotation_counterexample(&la, 1.0).unwrap();
        assert!(report.all_pass(), "{}", report.to_text());
    }
}
