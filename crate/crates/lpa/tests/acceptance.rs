//! Acceptance gate: one test per guaranteed behavior, each printing a single
//! PASS/FAIL line with the measured residuals (run with `--nocapture` to see
//! them). Tolerances are part of the contract and are not relaxed here.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lpa::little::{
    canonical_little_report, little_generators, rotation_counterexample, translation_rotor,
    verify_isomorphism, verify_lorentz_table,
};
use lpa::view::{lightcone_scene, scene_to_svg, slice_primitive, PrimitiveKind, Style};
use lpa::{exp_bivector, suite, Algebra, LittleAlgebra, Multivector, Report, Signature};

fn conclude(number: u32, ok: bool, detail: &str) {
    println!("criterion {number} {}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {number}: {detail}");
}

fn minkowski(n: u32) -> Algebra {
    Algebra::new(Signature::mostly_minus(n)).unwrap()
}

fn canonical_little() -> LittleAlgebra {
    let alg = minkowski(3);
    let k = Multivector::basis_vector(alg, 0).add(&Multivector::basis_vector(alg, 3));
    LittleAlgebra::construct(alg, &k).unwrap()
}

fn worst_residual(report: &Report) -> f64 {
    report
        .entries
        .iter()
        .map(|e| e.residual)
        .fold(0.0, f64::max)
}

#[test]
fn criterion_1_lorentz_commutation_table_is_exact() {
    let start = Instant::now();
    let report = verify_lorentz_table(minkowski(3)).unwrap();
    let elapsed = start.elapsed();
    let worst = worst_residual(&report);
    let ok = report.all_pass() && worst == 0.0 && elapsed < Duration::from_secs(1);
    conclude(
        1,
        ok,
        &format!(
            "all 15 generator pairs, worst residual {worst:e}, {:.3} ms",
            elapsed.as_secs_f64() * 1e3
        ),
    );
}

#[test]
fn criterion_2_little_group_relations_and_fold_are_exact() {
    let report = canonical_little_report(minkowski(3)).unwrap();
    let worst = worst_residual(&report);
    let folded = report.entries.iter().any(|e| e.label == "fold-distribution");
    let ok = report.all_pass() && worst == 0.0 && folded;
    conclude(
        2,
        ok,
        &format!("little-group relations and folded identity, worst residual {worst:e}"),
    );
}

#[test]
fn criterion_3_translation_rotor_closed_form_is_exact() {
    let la = canonical_little();
    let alg = la.parent();
    let gens = little_generators(&la);
    let n2 = gens.translation(2);
    let one = Multivector::scalar(alg, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(93);
    let mut worst_diff = 0.0f64;
    let mut worst_nil = 0.0f64;
    for _ in 0..100 {
        let alpha = rng.gen_range(-10.0..=10.0);
        let beta = rng.gen_range(-10.0..=10.0);
        let theta =
            Multivector::scalar(alg, alpha).add(&Multivector::pseudoscalar(alg).scale(beta));
        let generator = theta.geometric_product(n2);
        worst_nil = worst_nil.max(generator.geometric_product(&generator).max_abs());
        let series = exp_bivector(&generator, -0.5).unwrap();
        let closed = one.sub(&generator.scale(0.5));
        worst_diff = worst_diff.max(series.value().sub(&closed).max_abs());
    }
    let ok = worst_diff == 0.0 && worst_nil <= 1e-12;
    conclude(
        3,
        ok,
        &format!(
            "100 random theta: series vs closed form {worst_diff:e}, nilpotency {worst_nil:e}"
        ),
    );
}

#[test]
fn criterion_4_gauge_closed_form_and_violation_detection() {
    let report = suite::gauge_suite(0, 1000, 1e-12);
    let closed = report
        .entries
        .iter()
        .find(|e| e.label == "closed-form")
        .expect("closed-form entry");
    let detected = report
        .entries
        .iter()
        .find(|e| e.label == "violation-detected")
        .expect("violation-detected entry");
    let ok = report.all_pass();
    conclude(
        4,
        ok,
        &format!(
            "1000 satisfying potentials worst residual {:e} (tol 1e-12), \
             violating potentials detected at rate {:.3} (floor 0.95)",
            closed.residual, detected.residual
        ),
    );
}

#[test]
fn criterion_5_translation_invariance_and_rotation_counterexample() {
    let mut worst_direction = 0.0f64;
    let mut worst_field = 0.0f64;
    let mut weakest_counter = f64::INFINITY;
    let mut counter_ok = true;
    for n in 2..=6u32 {
        let alg = minkowski(n);
        let mut rng = ChaCha8Rng::seed_from_u64(500 + u64::from(n));
        for _ in 0..1000 {
            let (k, _) = common::exact_lightlike(alg, &mut rng);
            let la = LittleAlgebra::construct(alg, &k).unwrap();
            let s = common::integer_combination(&la.frame()[1..], &mut rng);
            let mut theta = Multivector::scalar(alg, rng.gen_range(-2.0..=2.0));
            if n == 3 {
                theta = theta.add(&Multivector::pseudoscalar(alg).scale(rng.gen_range(-2.0..=2.0)));
            }
            let axis = rng.gen_range(1..la.dim());
            let rotor = translation_rotor(&la, axis, &theta).unwrap();
            worst_direction = worst_direction.max(rotor.sandwich(&k).sub(&k).max_abs());
            let field = s.outer(&k);
            worst_field = worst_field.max(rotor.sandwich(&s).outer(&k).sub(&field).max_abs());
            let counter = rotation_counterexample(&la, 1.0).unwrap();
            counter_ok &= counter.all_pass();
            for entry in &counter.entries {
                if entry.label != "isometry" {
                    weakest_counter = weakest_counter.min(entry.residual);
                }
            }
        }
    }
    let ok = worst_direction == 0.0 && worst_field <= 1e-12 && counter_ok;
    conclude(
        5,
        ok,
        &format!(
            "n in 2..=6, 1000 trials each: direction residual {worst_direction:e}, \
             field residual {worst_field:e} (tol 1e-12), \
             rotation counterexample deviation >= {weakest_counter:e} (floor 1e-3)"
        ),
    );
}

#[test]
fn criterion_6_cayley_tables_match_the_reference_exactly() {
    let start = Instant::now();
    let mut all = true;
    for n in 2..=6u32 {
        let alg = minkowski(n);
        let mut rng = ChaCha8Rng::seed_from_u64(600 + u64::from(n));
        for _ in 0..20 {
            let (k, _) = common::exact_lightlike(alg, &mut rng);
            let la = LittleAlgebra::construct(alg, &k).unwrap();
            all &= verify_isomorphism(&la, 0.0).unwrap().all_pass();
        }
    }
    let elapsed = start.elapsed();
    let ok = all && elapsed < Duration::from_secs(10);
    conclude(
        6,
        ok,
        &format!(
            "n in 2..=6, 20 random lightlike directions each, exact, {:.2} s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_7_blade_products_match_the_permutation_oracle() {
    let mut pairs = 0u32;
    let mut worst = 0.0f64;
    for (p, q) in [(1u32, 3u32), (1, 2)] {
        let alg = Algebra::new(Signature::new(p, q, 0)).unwrap();
        let dim = (p + q) as usize;
        for a_mask in 0..1usize << dim {
            for b_mask in 0..1usize << dim {
                let a_idx: Vec<usize> = (0..dim).filter(|i| a_mask >> i & 1 == 1).collect();
                let b_idx: Vec<usize> = (0..dim).filter(|i| b_mask >> i & 1 == 1).collect();
                let product = Multivector::basis_blade(alg, &a_idx)
                    .geometric_product(&Multivector::basis_blade(alg, &b_idx));
                let (sign, word) = common::oracle_blade_product(p, q, 0, &a_idx, &b_idx);
                let expected = if sign == 0.0 {
                    Multivector::zero(alg)
                } else {
                    Multivector::basis_blade(alg, &word).scale(sign)
                };
                worst = worst.max(product.sub(&expected).max_abs());
                pairs += 1;
            }
        }
    }
    let ok = worst == 0.0;
    conclude(
        7,
        ok,
        &format!("{pairs} blade pairs across G(1,3) and G(1,2), worst deviation {worst:e}"),
    );
}

#[test]
fn criterion_8_relative_view_geometry() {
    let alg = minkowski(2);
    let style = Style::solid("#000000");
    let mut rng = ChaCha8Rng::seed_from_u64(800);
    let norm = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
    let line = |kind: &PrimitiveKind| match kind {
        PrimitiveKind::Line { point, direction } => (point.clone(), direction.clone()),
        other => panic!("expected a line, got {other:?}"),
    };
    let point = |kind: &PrimitiveKind| match kind {
        PrimitiveKind::Point { at } => at.clone(),
        other => panic!("expected a point, got {other:?}"),
    };

    let mut worst_tangency = 0.0f64;
    let mut worst_incidence = 0.0f64;
    let mut worst_motion = 0.0f64;
    for _ in 0..200 {
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let tau: f64 = rng.gen_range(0.5..=2.0);
        let k = Multivector::basis_vector(alg, 0)
            .scale(tau)
            .add(&Multivector::basis_vector(alg, 1).scale(tau * phi.cos()))
            .add(&Multivector::basis_vector(alg, 2).scale(tau * phi.sin()));
        let s = Multivector::basis_vector(alg, 1)
            .scale(-k.coeff_at(&[2]))
            .add(&Multivector::basis_vector(alg, 2).scale(k.coeff_at(&[1])));
        let t: f64 = rng.gen_range(0.25..=2.0);

        // The sliced direction line stays tangent to the light circle.
        let (kp, kd) = line(&slice_primitive(&k, t, "k", style).unwrap().kind);
        worst_tangency = worst_tangency.max((norm(&kp) - t).abs());

        // The sliced transverse line crosses it on the circle.
        let (sp, sd) = line(&slice_primitive(&s, t, "s", style).unwrap().kind);
        let det = kd[0] * (-sd[1]) + sd[0] * kd[1];
        let a = ((sp[0] - kp[0]) * (-sd[1]) + sd[0] * (sp[1] - kp[1])) / det;
        let meet = [kp[0] + a * kd[0], kp[1] + a * kd[1]];
        worst_incidence = worst_incidence.max((norm(&meet) - t).abs());

        // The sliced field point does not move under a translation rotor.
        let field = s.outer(&k);
        let before = point(&slice_primitive(&field, t, "sk", style).unwrap().kind);
        let la = LittleAlgebra::construct(alg, &k).unwrap();
        let theta = Multivector::scalar(alg, rng.gen_range(-2.0..=2.0));
        let rotor = translation_rotor(&la, 1, &theta).unwrap();
        let moved = rotor.sandwich(&field).grade_select(2);
        let after = point(&slice_primitive(&moved, t, "sk", style).unwrap().kind);
        let dist = before
            .iter()
            .zip(&after)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt();
        worst_motion = worst_motion.max(dist);
    }
    let ok = worst_tangency <= 1e-10 && worst_incidence <= 1e-10 && worst_motion <= 1e-10;
    conclude(
        8,
        ok,
        &format!(
            "200 random slices: tangency {worst_tangency:e}, incidence {worst_incidence:e}, \
             field-point motion {worst_motion:e} (tol 1e-10)"
        ),
    );
}

#[test]
fn criterion_9_reports_and_figures_are_deterministic() {
    let first = suite::run_verify(3, 42, 50, 1e-12);
    let second = suite::run_verify(3, 42, 50, 1e-12);
    let reports_equal = first.to_json() == second.to_json() && first.to_text() == second.to_text();
    let svg_a = scene_to_svg(&lightcone_scene(1.0));
    let svg_b = scene_to_svg(&lightcone_scene(1.0));
    let figures_equal = svg_a == svg_b && svg_a == include_str!("golden/fig3.svg");
    let ok = reports_equal && figures_equal;
    conclude(
        9,
        ok,
        &format!("verify reports byte-identical: {reports_equal}, figures byte-identical: {figures_equal}"),
    );
}
