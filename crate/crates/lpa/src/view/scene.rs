//! Time slices of spacetime primitives and the built-in demo scenes.
//!
//! A primitive is a homogeneous multivector x of grade g read as the locus
//! {p : <p x>_{g-1} = 0}. Slicing fixes the time coordinate of p and solves
//! the remaining linear system for the spatial coordinates, so a grade-1
//! element cuts to a hyperplane of the view, a grade-n element (dual to a
//! worldline through the origin) cuts to a point, and an empty or untestable
//! locus reports itself as out of view instead of failing.

use crate::algebra::{Algebra, Multivector, Signature};
use crate::little::LittleAlgebra;

use super::ViewError;

/// Pivot threshold for the slice solver; coefficients below this count as
/// structural zeros of the system.
const PIVOT_EPS: f64 = 1e-10;

/// Components with magnitude below this do not participate in orientation
/// canonicalization.
const SIGN_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Style {
    pub color: &'static str,
    pub dashed: bool,
}

impl Style {
    pub const fn solid(color: &'static str) -> Style {
        Style { color, dashed: false }
    }

    pub const fn dashed(color: &'static str) -> Style {
        Style { color, dashed: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PrimitiveKind {
    /// A single view location.
    Point { at: Vec<f64> },
    /// An affine line: unit direction, base point closest to the origin.
    Line { point: Vec<f64>, direction: Vec<f64> },
    /// An affine plane in a 3-dimensional view: unit normal, base point
    /// closest to the origin.
    Plane { point: Vec<f64>, normal: Vec<f64> },
    /// A circle in a 2-dimensional view.
    Circle { center: [f64; 2], radius: f64 },
    /// The primitive meets the slice nowhere (or everywhere); nothing to draw.
    OutOfView,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Primitive {
    pub kind: PrimitiveKind,
    pub label: String,
    pub style: Style,
}

#[derive(Debug, Clone)]
pub struct Scene {
    pub title: String,
    pub slice_time: f64,
    /// Spatial dimensions of the view, 2 or 3.
    pub dim: usize,
    pub primitives: Vec<Primitive>,
}

/// Cuts the locus of `x` with the slice of constant time `slice_time` and
/// returns it in canonical form. Only mostly-minus algebras with 2 or 3
/// spatial dimensions produce drawable views.
pub fn slice_primitive(
    x: &Multivector,
    slice_time: f64,
    label: &str,
    style: Style,
) -> Result<Primitive, ViewError> {
    let alg = x.algebra();
    let sig = alg.signature();
    let n = sig.dim() as usize - 1;
    if sig.p != 1 || sig.r != 0 || !(2..=3).contains(&n) {
        return Err(ViewError::UnsupportedView(sig));
    }
    let grades = x.grades();
    let &[grade] = grades.as_slice() else {
        return Err(ViewError::NotHomogeneous);
    };
    if grade == 0 {
        return Err(ViewError::NotHomogeneous);
    }
    let out_of_view = |why: &str| Primitive {
        kind: PrimitiveKind::OutOfView,
        label: format!("{label} ({why})"),
        style,
    };
    if grade as usize == n + 1 {
        // Dual to the origin event alone; no extended locus to draw.
        return Ok(out_of_view("origin-only"));
    }

    // <p x>_{g-1} = 0 is linear in p, so assemble one equation per blade of
    // the base (time) contribution and the per-axis columns.
    let part = |v: &Multivector| v.geometric_product(x).grade_select(grade - 1);
    let base = part(&Multivector::basis_vector(alg, 0).scale(slice_time));
    let cols: Vec<Multivector> = (1..=n)
        .map(|i| part(&Multivector::basis_vector(alg, i)))
        .collect();
    let mut blades: Vec<_> = base.terms().map(|(b, _)| b).collect();
    for col in &cols {
        blades.extend(col.terms().map(|(b, _)| b));
    }
    blades.sort();
    blades.dedup();

    let rows: Vec<Vec<f64>> = blades
        .iter()
        .map(|&b| cols.iter().map(|c| c.coeff(b)).collect())
        .collect();
    let rhs: Vec<f64> = blades.iter().map(|&b| -base.coeff(b)).collect();

    let Some((particular, basis)) = solve_affine(rows, rhs, n) else {
        return Ok(out_of_view("empty"));
    };
    let kind = match basis.len() {
        0 => PrimitiveKind::Point {
            at: clean(particular),
        },
        1 => canonical_line(particular, basis.into_iter().next().unwrap()),
        2 if n == 3 => canonical_plane(particular, &basis[0], &basis[1]),
        // No constraint survived; the locus fills the slice.
        _ => return Ok(out_of_view("everywhere")),
    };
    Ok(Primitive {
        kind,
        label: label.to_string(),
        style,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Flushes negative zeros so rendered coordinates have one spelling.
fn clean(v: Vec<f64>) -> Vec<f64> {
    v.into_iter().map(|c| c + 0.0).collect()
}

fn normalize(mut v: Vec<f64>) -> Vec<f64> {
    let len = dot(&v, &v).sqrt();
    for c in &mut v {
        *c /= len;
    }
    // Orient so the first significant component is positive.
    if let Some(first) = v.iter().find(|c| c.abs() > SIGN_EPS) {
        if *first < 0.0 {
            for c in &mut v {
                *c = -*c;
            }
        }
    }
    v
}

fn canonical_line(point: Vec<f64>, direction: Vec<f64>) -> PrimitiveKind {
    let direction = normalize(direction);
    let along = dot(&point, &direction);
    let point = point
        .iter()
        .zip(&direction)
        .map(|(p, d)| p - along * d)
        .collect();
    PrimitiveKind::Line {
        point: clean(point),
        direction: clean(direction),
    }
}

fn cross(a: &[f64], b: &[f64]) -> Vec<f64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn canonical_plane(point: Vec<f64>, d1: &[f64], d2: &[f64]) -> PrimitiveKind {
    let normal = normalize(cross(d1, d2));
    let offset = dot(&point, &normal);
    let point = normal.iter().map(|c| c * offset).collect();
    PrimitiveKind::Plane {
        point: clean(point),
        normal: clean(normal),
    }
}

/// Row-reduces the system `rows * p = rhs` over `n` unknowns and returns a
/// particular solution plus a basis of the homogeneous solutions, or `None`
/// when the system is inconsistent. Pivoting scans for the largest magnitude
/// and breaks ties toward the lowest row, so the reduction is deterministic.
fn solve_affine(
    mut rows: Vec<Vec<f64>>,
    mut rhs: Vec<f64>,
    n: usize,
) -> Option<(Vec<f64>, Vec<Vec<f64>>)> {
    let m = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(best) = (rank..m).max_by(|&a, &b| {
            rows[a][col]
                .abs()
                .partial_cmp(&rows[b][col].abs())
                .unwrap()
                .then(b.cmp(&a))
        }) else {
            break;
        };
        if rows[best][col].abs() <= PIVOT_EPS {
            continue;
        }
        rows.swap(rank, best);
        rhs.swap(rank, best);
        let pivot = rows[rank][col];
        for c in col..n {
            rows[rank][c] /= pivot;
        }
        rhs[rank] /= pivot;
        for r in 0..m {
            if r == rank {
                continue;
            }
            let factor = rows[r][col];
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                rows[r][c] -= factor * rows[rank][c];
            }
            rhs[r] -= factor * rhs[rank];
        }
        pivots.push((rank, col));
        rank += 1;
    }
    if rhs[rank..].iter().any(|b| b.abs() > PIVOT_EPS) {
        return None;
    }

    let mut particular = vec![0.0; n];
    for &(r, c) in &pivots {
        particular[c] = rhs[r];
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let basis = (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![0.0; n];
            v[free] = 1.0;
            for &(r, c) in &pivots {
                v[c] = -rows[r][free];
            }
            v
        })
        .collect();
    Some((particular, basis))
}

fn inverse_pseudoscalar(alg: Algebra) -> Multivector {
    let i = Multivector::pseudoscalar(alg);
    let square = i.geometric_product(&i).scalar_part();
    i.scale(1.0 / square)
}

fn spatial_point(v: &Multivector, n: usize) -> Vec<f64> {
    (1..=n).map(|i| v.coeff_at(&[i])).collect()
}

/// A lightcone cut: the cone section itself (a circle of radius |t|), the
/// observer worldline through the origin, and a lightlike worldline that
/// rides the cone. Built in the 3-dimensional algebra so the view is planar.
pub fn lightcone_scene(slice_time: f64) -> Scene {
    let alg = Algebra::new(Signature::mostly_minus(2)).unwrap();
    let i_inv = inverse_pseudoscalar(alg);
    let dual = |v: &Multivector| v.geometric_product(&i_inv);

    let observer = Multivector::basis_vector(alg, 0);
    let photon = observer.add(&Multivector::basis_vector(alg, 1));
    let circle = Primitive {
        kind: PrimitiveKind::Circle {
            center: [0.0, 0.0],
            radius: slice_time.abs(),
        },
        label: "lightcone".to_string(),
        style: Style::dashed("#888888"),
    };
    let observer = slice_primitive(
        &dual(&observer),
        slice_time,
        "observer",
        Style::solid("#d62728"),
    )
    .expect("observer worldline slices to a point");
    let photon = slice_primitive(&dual(&photon), slice_time, "photon", Style::solid("#1f77b4"))
        .expect("lightlike worldline slices to a point");
    Scene {
        title: format!("lightcone cut at t = {slice_time}"),
        slice_time,
        dim: 2,
        primitives: vec![circle, observer, photon],
    }
}

/// The gauge story in one picture: a polarization vector s, its image under
/// a spatial rotation (which moves), its image under a lightlike translation
/// (which only shifts along the wave direction), and the cut of the field
/// plane s ^ k.
pub fn invariance_scene(slice_time: f64) -> Scene {
    let alg = Algebra::spacetime();
    let g = |i: usize| Multivector::basis_vector(alg, i);
    let k = g(0).add(&g(3));
    let la = LittleAlgebra::construct(alg, &k).expect("canonical lightlike direction");

    // s = 2 g1 - g2: transverse to k, inside the view box.
    let s = g(1).scale(2.0).sub(&g(2));

    let theta = Multivector::scalar(alg, 1.0).add(&Multivector::pseudoscalar(alg));
    let rotor = crate::little::translation_rotor(&la, 2, &theta)
        .expect("scalar-plus-pseudoscalar parameter is valid in dimension 4");
    let translated = rotor.sandwich(&s);

    let plane = g(1).outer(&g(3));
    let rotation =
        crate::algebra::exp_bivector(&plane, -0.5).expect("spacelike plane exponentiates");
    let rotated = rotation.sandwich(&s);

    let field = s.outer(&k);
    let field_cut = slice_primitive(&field, slice_time, "s^k locus", Style::dashed("#888888"))
        .expect("field plane slices to a line");

    let point = |v: &Multivector, label: &str, color| Primitive {
        kind: PrimitiveKind::Point {
            at: spatial_point(v, 3),
        },
        label: label.to_string(),
        style: Style::solid(color),
    };
    Scene {
        title: format!("transverse vector under the little group, t = {slice_time}"),
        slice_time,
        dim: 3,
        primitives: vec![
            field_cut,
            point(&s, "s", "#1f77b4"),
            point(&rotated, "s rotated", "#d62728"),
            point(&translated, "s shifted", "#2ca02c"),
        ],
    }
}
