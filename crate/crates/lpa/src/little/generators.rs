//! Named generator sets and machine checks of their commutation relations.
//!
//! Throughout, x is the half-commutator: a x b = (ab - ba)/2. For bivectors
//! built from orthogonal vectors the bracket reduces to inner products of
//! the factors, which is what every expected value below is computed from.

use crate::algebra::{Algebra, Multivector, Signature};
use crate::report::Report;

use super::{LittleAlgebra, LittleError};

/// Labeled bivector generators of the stabilizer algebra: rotations
/// R(i,j) = e_i e_j among the spatial frame vectors, and nilpotent
/// translations N(i) = e_i e0 against the lightlike frame vector.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    /// (i, j, e_i e_j) for 1 <= i < j < dim.
    pub rotations: Vec<(usize, usize, Multivector)>,
    /// (i, e_i e0) for 1 <= i < dim.
    pub translations: Vec<(usize, Multivector)>,
}

impl GeneratorSet {
    pub fn translation(&self, i: usize) -> &Multivector {
        &self.translations[i - 1].1
    }

    /// Rotation generator for any index order; R(j,i) = -R(i,j), R(i,i) = 0.
    pub fn rotation(&self, i: usize, j: usize, parent: Algebra) -> Multivector {
        if i == j {
            return Multivector::zero(parent);
        }
        let (a, b, sign) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
        self.rotations
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map(|(_, _, m)| m.scale(sign))
            .expect("rotation indices within frame")
    }
}

pub fn little_generators(la: &LittleAlgebra) -> GeneratorSet {
    let f = la.frame();
    let n = la.dim();
    let mut rotations = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            rotations.push((i, j, f[i].geometric_product(&f[j])));
        }
    }
    let translations = (1..n).map(|i| (i, f[i].geometric_product(&f[0]))).collect();
    GeneratorSet {
        rotations,
        translations,
    }
}

/// Rotation and boost generators of the full dimension-4 mostly-minus
/// algebra: J_a = g_b g_c for cyclic spatial (a b c), K_a = g_a g_0.
pub fn lorentz_generators(
    alg: Algebra,
) -> Result<([Multivector; 3], [Multivector; 3]), LittleError> {
    if alg.signature() != Signature::new(1, 3, 0) {
        return Err(LittleError::NeedsSpacetime(alg.signature()));
    }
    let g = |i: usize| Multivector::basis_vector(alg, i);
    let j = [
        g(2).geometric_product(&g(3)),
        g(3).geometric_product(&g(1)),
        g(1).geometric_product(&g(2)),
    ];
    let k = [
        g(1).geometric_product(&g(0)),
        g(2).geometric_product(&g(0)),
        g(3).geometric_product(&g(0)),
    ];
    Ok((j, k))
}

fn levi_civita3(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Checks the rotation/boost bracket table of the dimension-4 mostly-minus
/// algebra: J x J = eps J, J x K = eps K, K x K = -eps J. All products are
/// integer-valued, so residuals must vanish exactly.
pub fn verify_lorentz_table(alg: Algebra) -> Result<Report, LittleError> {
    let (j, k) = lorentz_generators(alg)?;
    let combo = |basis: &[Multivector; 3], a: usize, b: usize, sign: f64| {
        let mut out = Multivector::zero(alg);
        for (c, m) in basis.iter().enumerate() {
            let w = sign * levi_civita3(a, b, c);
            if w != 0.0 {
                out = out.add(&m.scale(w));
            }
        }
        out
    };
    let mut rot_rot = 0.0f64;
    let mut rot_boost = 0.0f64;
    let mut boost_boost = 0.0f64;
    for a in 0..3 {
        for b in 0..3 {
            rot_rot = rot_rot.max(j[a].commutator(&j[b]).sub(&combo(&j, a, b, 1.0)).max_abs());
            rot_boost =
                rot_boost.max(j[a].commutator(&k[b]).sub(&combo(&k, a, b, 1.0)).max_abs());
            boost_boost =
                boost_boost.max(k[a].commutator(&k[b]).sub(&combo(&j, a, b, -1.0)).max_abs());
        }
    }
    let mut report = Report::new("lorentz-commutators");
    report.check_exact("rotation-rotation", "J_a x J_b = eps_abc J_c", rot_rot);
    report.check_exact("rotation-boost", "J_a x K_b = eps_abc K_c", rot_boost);
    report.check_exact("boost-boost", "K_a x K_b = -eps_abc J_c", boost_boost);
    Ok(report)
}

/// Checks the bracket structure of the stabilizer generators against the
/// inner-product expansion of [a^b, c^d]. With sigma the square of a unit
/// spatial frame vector, the expected table is
///   [R_ij, N_m]/2  = sigma (d_jm N_i - d_im N_j)
///   [R_ij, R_kl]/2 = sigma (d_jk R_il - d_ik R_jl + d_il R_jk - d_jl R_ik)
///   [N_a, N_b]     = 0
/// and in a dimension-4 parent the pseudoscalar pairs the two translations
/// and commutes through the bracket on folded arguments.
pub fn verify_commutation(la: &LittleAlgebra, tol: f64) -> Report {
    let parent = la.parent();
    let gens = little_generators(la);
    let sigma = la.spatial_square();
    let n = la.dim();
    let mut report = Report::new("little-commutators");

    let mut rot_trans = 0.0f64;
    for &(i, j, ref r) in &gens.rotations {
        for m in 1..n {
            let mut expected = Multivector::zero(parent);
            if j == m {
                expected = expected.add(&gens.translation(i).scale(sigma));
            }
            if i == m {
                expected = expected.add(&gens.translation(j).scale(-sigma));
            }
            rot_trans = rot_trans.max(
                r.commutator(gens.translation(m)).sub(&expected).max_abs(),
            );
        }
    }
    report.check(
        "rotation-translation",
        "[R_ij, N_m]/2 = sigma (d_jm N_i - d_im N_j)",
        rot_trans,
        tol,
    );

    let mut rot_rot = 0.0f64;
    for &(i, j, ref r1) in &gens.rotations {
        for &(k, l, ref r2) in &gens.rotations {
            let expected = gens
                .rotation(i, l, parent)
                .scale(if j == k { sigma } else { 0.0 })
                .add(&gens.rotation(j, l, parent).scale(if i == k { -sigma } else { 0.0 }))
                .add(&gens.rotation(j, k, parent).scale(if i == l { sigma } else { 0.0 }))
                .add(&gens.rotation(i, k, parent).scale(if j == l { -sigma } else { 0.0 }));
            rot_rot = rot_rot.max(r1.commutator(r2).sub(&expected).max_abs());
        }
    }
    report.check(
        "rotation-rotation",
        "[R_ij, R_kl]/2 = sigma (d_jk R_il - d_ik R_jl + d_il R_jk - d_jl R_ik)",
        rot_rot,
        tol,
    );

    let mut trans_trans = 0.0f64;
    for (_, na) in &gens.translations {
        for (_, nb) in &gens.translations {
            trans_trans = trans_trans.max(na.commutator(nb).max_abs());
        }
    }
    report.check(
        "translation-translation",
        "[N_a, N_b] = 0",
        trans_trans,
        tol,
    );

    if parent.dim() == 4 && n == 3 {
        let i_ps = Multivector::pseudoscalar(parent);
        let n1 = gens.translation(1);
        let n2 = gens.translation(2);
        let dual = n2.geometric_product(&i_ps);
        let pairing = dual.sub(n1).max_abs().min(dual.add(n1).max_abs());
        report.check(
            "duality-pairing",
            "N_2 I = +/- N_1 (sign is the frame orientation)",
            pairing,
            tol,
        );

        let j3 = gens.rotation(1, 2, parent);
        let one_plus_i = Multivector::scalar(parent, 1.0).add(&i_ps);
        let folded = n2.geometric_product(&one_plus_i);
        let fold = j3
            .commutator(&folded)
            .sub(&j3.commutator(n2).geometric_product(&one_plus_i))
            .max_abs();
        report.check(
            "fold-distribution",
            "J_3 x (N_2 (1+I)) = (J_3 x N_2)(1+I)",
            fold,
            tol,
        );
    }

    report
}

/// Runs the bracket checks on the axis-aligned direction g_time + g_last,
/// whose frame is exact, so every residual is held to exactly zero. In the
/// mostly-minus dimension-4 parent this adds the signed duality relations.
pub fn canonical_little_report(parent: Algebra) -> Result<Report, LittleError> {
    let time = if parent.signature().p == 1 {
        0
    } else {
        parent.dim() as usize - 1
    };
    let last_spatial = (0..parent.dim() as usize)
        .filter(|&i| i != time)
        .max()
        .expect("dimension at least 3");
    let k = Multivector::basis_vector(parent, time)
        .add(&Multivector::basis_vector(parent, last_spatial));
    let la = LittleAlgebra::construct(parent, &k)?;

    let mut report = Report::new("little-canonical");
    report.merge(verify_commutation(&la, 0.0));

    if parent.signature() == Signature::new(1, 3, 0) {
        let gens = little_generators(&la);
        let i_ps = Multivector::pseudoscalar(parent);
        let n1 = gens.translation(1);
        let n2 = gens.translation(2);
        report.check_exact(
            "duality-signed",
            "N_2 I = N_1",
            n2.geometric_product(&i_ps).sub(n1).max_abs(),
        );
        report.check_exact(
            "duality-signed-inverse",
            "N_1 I = -N_2",
            n1.geometric_product(&i_ps).add(n2).max_abs(),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Blade;

    #[test]
    fn lorentz_table_is_exact() {
        let report = verify_lorentz_table(Algebra::spacetime()).unwrap();
        assert!(report.all_pass(), "{}", report.to_text());
        assert_eq!(report.entries.len(), 3);
        assert!(report.entries.iter().all(|e| e.residual == 0.0));
    }

    #[test]
    fn boost_boost_closes_on_minus_rotation() {
        let alg = Algebra::spacetime();
        let (j, k) = lorentz_generators(alg).unwrap();
        let got = k[0].commutator(&k[1]);
        assert_eq!(got, j[2].scale(-1.0));
    }

    #[test]
    fn named_generators_need_the_exact_signature() {
        let alg = Algebra::new(Signature::mostly_plus(3)).unwrap();
        assert!(matches!(
            lorentz_generators(alg),
            Err(LittleError::NeedsSpacetime(_))
        ));
    }

    #[test]
    fn canonical_reports_are_exact() {
        for parent in [
            Algebra::spacetime(),
            Algebra::new(Signature::mostly_minus(2)).unwrap(),
            Algebra::new(Signature::mostly_minus(5)).unwrap(),
            Algebra::new(Signature::mostly_plus(3)).unwrap(),
        ] {
            let report = canonical_little_report(parent).unwrap();
            assert!(report.all_pass(), "{}", report.to_text());
        }
    }

    #[test]
    fn generic_direction_passes_at_float_tolerance() {
        let alg = Algebra::spacetime();
        let k = Multivector::from_terms(
            alg,
            [
                (Blade::from_indices(&[0]).unwrap(), 3.0),
                (Blade::from_indices(&[1]).unwrap(), 2.0),
                (Blade::from_indices(&[2]).unwrap(), 1.0),
                (Blade::from_indices(&[3]).unwrap(), 2.0),
            ],
        );
        let la = LittleAlgebra::construct(alg, &k).unwrap();
        let report = verify_commutation(&la, 1e-12);
        assert!(report.all_pass(), "{}", report.to_text());
    }

    #[test]
    fn translation_count_and_labels_follow_the_frame() {
        let alg = Algebra::new(Signature::mostly_minus(5)).unwrap();
        let k = Multivector::basis_vector(alg, 0).add(&Multivector::basis_vector(alg, 5));
        let la = LittleAlgebra::construct(alg, &k).unwrap();
        let gens = little_generators(&la);
        assert_eq!(gens.translations.len(), 4);
        assert_eq!(gens.rotations.len(), 6);
        // every translation squares to zero through the lightlike factor
        for (_, n) in &gens.translations {
            assert!(n.geometric_product(n).is_zero());
        }
    }
}
