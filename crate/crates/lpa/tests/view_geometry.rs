//! Geometry of the relative view through the public API: tangency of the
//! sliced direction line to the light circle, incidence of the transverse
//! line, invariance of the sliced field point under translations, and the
//! golden figure bytes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lpa::little::translation_rotor;
use lpa::view::{
    lightcone_scene, scene_to_csv, scene_to_svg, slice_primitive, PrimitiveKind, Style,
};
use lpa::{Algebra, LittleAlgebra, Multivector, Signature};

const GEOM_TOL: f64 = 1e-10;

fn planar() -> Algebra {
    Algebra::new(Signature::mostly_minus(2)).unwrap()
}

/// Random planar lightlike vector with a float (non-dyadic) direction.
fn random_lightlike<R: Rng>(alg: Algebra, rng: &mut R) -> Multivector {
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    let tau = rng.gen_range(0.5..=2.0);
    Multivector::basis_vector(alg, 0)
        .scale(tau)
        .add(&Multivector::basis_vector(alg, 1).scale(tau * phi.cos()))
        .add(&Multivector::basis_vector(alg, 2).scale(tau * phi.sin()))
}

/// Transverse spacelike partner: the spatial part of k rotated a quarter
/// turn, which is orthogonal to k in the Minkowski sense.
fn transverse_partner(alg: Algebra, k: &Multivector) -> Multivector {
    Multivector::basis_vector(alg, 1)
        .scale(-k.coeff_at(&[2]))
        .add(&Multivector::basis_vector(alg, 2).scale(k.coeff_at(&[1])))
}

fn style() -> Style {
    Style::solid("#000000")
}

fn as_line(kind: &PrimitiveKind) -> (&[f64], &[f64]) {
    match kind {
        PrimitiveKind::Line { point, direction } => (point, direction),
        other => panic!("expected a line, got {other:?}"),
    }
}

fn as_point(kind: &PrimitiveKind) -> &[f64] {
    match kind {
        PrimitiveKind::Point { at } => at,
        other => panic!("expected a point, got {other:?}"),
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

#[test]
fn sliced_direction_line_is_tangent_to_the_light_circle() {
    let alg = planar();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let k = random_lightlike(alg, &mut rng);
        let t: f64 = rng.gen_range(-2.0..=2.0);
        if t.abs() < 0.1 {
            continue;
        }
        let prim = slice_primitive(&k, t, "k", style()).unwrap();
        let (point, _) = as_line(&prim.kind);
        // The canonical base point is the closest to the origin, so its norm
        // is the line's distance; tangency means it equals the circle radius.
        assert!(
            (norm(point) - t.abs()).abs() <= GEOM_TOL,
            "distance {} vs radius {}",
            norm(point),
            t.abs()
        );
    }
}

#[test]
fn sliced_transverse_line_meets_the_direction_line_on_the_circle() {
    let alg = planar();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..200 {
        let k = random_lightlike(alg, &mut rng);
        let s = transverse_partner(alg, &k);
        let t: f64 = rng.gen_range(0.25..=2.0);
        let k_line = slice_primitive(&k, t, "k", style()).unwrap();
        let s_line = slice_primitive(&s, t, "s", style()).unwrap();
        let (kp, kd) = as_line(&k_line.kind);
        let (sp, sd) = as_line(&s_line.kind);
        // Intersect kp + a kd = sp + b sd by Cramer's rule.
        let det = kd[0] * (-sd[1]) - (-sd[0]) * kd[1];
        assert!(det.abs() > 1e-9, "lines must cross");
        let rx = sp[0] - kp[0];
        let ry = sp[1] - kp[1];
        let a = (rx * (-sd[1]) - (-sd[0]) * ry) / det;
        let meet = [kp[0] + a * kd[0], kp[1] + a * kd[1]];
        assert!(
            (norm(&meet) - t).abs() <= GEOM_TOL,
            "met at {meet:?}, radius {t}"
        );
    }
}

#[test]
fn sliced_field_point_is_unchanged_by_translation_rotors() {
    let alg = planar();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..200 {
        let k = random_lightlike(alg, &mut rng);
        let s = transverse_partner(alg, &k);
        let t: f64 = rng.gen_range(-2.0..=2.0);
        let field = s.outer(&k);
        let before = slice_primitive(&field, t, "sk", style()).unwrap();

        let la = LittleAlgebra::construct(alg, &k).unwrap();
        let theta = Multivector::scalar(alg, rng.gen_range(-2.0..=2.0));
        let rotor = translation_rotor(&la, 1, &theta).unwrap();
        // Float frames leave off-grade residue at machine precision; check
        // it is noise before discarding it, since the slice is grade-strict.
        let full = rotor.sandwich(&field);
        let moved = full.grade_select(2);
        assert!(full.sub(&moved).max_abs() <= 1e-12);
        let after = slice_primitive(&moved, t, "sk", style()).unwrap();

        let a = as_point(&before.kind);
        let b = as_point(&after.kind);
        let dist = a
            .iter()
            .zip(b)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt();
        assert!(dist <= GEOM_TOL, "field point moved by {dist}");
    }
}

#[test]
fn lightcone_figure_matches_the_golden_bytes() {
    let svg = scene_to_svg(&lightcone_scene(1.0));
    assert_eq!(svg, include_str!("golden/fig3.svg"));
}

#[test]
fn scene_outputs_are_reproducible_across_calls() {
    for t in [0.5, 1.0, 2.5] {
        let a = lightcone_scene(t);
        let b = lightcone_scene(t);
        assert_eq!(scene_to_svg(&a), scene_to_svg(&b));
        assert_eq!(scene_to_csv(&a), scene_to_csv(&b));
    }
}
