//! Deterministic SVG and CSV emission. Identical scenes must render to
//! identical bytes, so every coordinate goes through one fixed formatting
//! path and nothing depends on iteration order or environment.

use std::fmt::Write as _;

use super::scene::{Primitive, PrimitiveKind, Scene};

/// Half-width of the square view box in scene units.
const VIEW: f64 = 4.0;
/// cos(pi/6), the screen tilt of the 3-dimensional camera.
const COS30: f64 = 0.866_025_403_784_438_6;

fn fmt(x: f64) -> String {
    // x + 0.0 flushes negative zero, which the axis flip otherwise produces.
    format!("{:.4}", x + 0.0)
}

/// Fixed orthographic camera: 2-dimensional scenes map straight onto the
/// page (with the vertical axis flipped into screen coordinates), while
/// 3-dimensional scenes get an isometric projection with the third axis up.
fn project(dim: usize, p: &[f64]) -> (f64, f64) {
    match dim {
        2 => (p[0], -p[1]),
        _ => (
            0.5 * COS30 * (p[0] - p[1]),
            0.25 * (p[0] + p[1]) - 0.5 * p[2],
        ),
    }
}

fn dash(style: &super::scene::Style) -> &'static str {
    if style.dashed {
        " stroke-dasharray=\"0.18 0.12\""
    } else {
        ""
    }
}

fn text(out: &mut String, x: f64, y: f64, color: &str, content: &str) {
    writeln!(
        out,
        "  <text x=\"{}\" y=\"{}\" font-size=\"0.25\" fill=\"{color}\">{content}</text>",
        fmt(x),
        fmt(y),
    )
    .unwrap();
}

fn segment(out: &mut String, a: (f64, f64), b: (f64, f64), color: &str, extra: &str) {
    writeln!(
        out,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"0.04\"{extra} />",
        fmt(a.0),
        fmt(a.1),
        fmt(b.0),
        fmt(b.1),
    )
    .unwrap();
}

/// In-plane frame for drawing a plane patch: seeded from the coordinate axis
/// least aligned with the normal (lowest index on ties) so the patch is a
/// deterministic function of the normal alone.
fn plane_frame(normal: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let seed = (0..3)
        .min_by(|&a, &b| {
            normal[a]
                .abs()
                .partial_cmp(&normal[b].abs())
                .unwrap()
                .then(a.cmp(&b))
        })
        .unwrap();
    let mut axis = vec![0.0; 3];
    axis[seed] = 1.0;
    let d1 = cross(&axis, normal);
    let len = d1.iter().map(|c| c * c).sum::<f64>().sqrt();
    let d1: Vec<f64> = d1.iter().map(|c| c / len).collect();
    let d2 = cross(normal, &d1);
    (d1, d2)
}

fn cross(a: &[f64], b: &[f64]) -> Vec<f64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn render_primitive(out: &mut String, dim: usize, prim: &Primitive, hidden: &mut Vec<String>) {
    let color = prim.style.color;
    match &prim.kind {
        PrimitiveKind::Point { at } => {
            let (x, y) = project(dim, at);
            writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"0.07\" fill=\"{color}\" />",
                fmt(x),
                fmt(y),
            )
            .unwrap();
            text(out, x + 0.12, y - 0.1, color, &prim.label);
        }
        PrimitiveKind::Line { point, direction } => {
            // Long chord through the view; the view box clips the excess.
            let reach = 3.0 * VIEW;
            let at = |s: f64| -> Vec<f64> {
                point
                    .iter()
                    .zip(direction)
                    .map(|(p, d)| p + s * d)
                    .collect()
            };
            let a = project(dim, &at(-reach));
            let b = project(dim, &at(reach));
            segment(out, a, b, color, dash(&prim.style));
            let (lx, ly) = project(dim, &at(1.2));
            text(out, lx + 0.12, ly - 0.1, color, &prim.label);
        }
        PrimitiveKind::Plane { point, normal } => {
            let (d1, d2) = plane_frame(normal);
            let corner = |s1: f64, s2: f64| {
                let p: Vec<f64> = (0..3)
                    .map(|i| point[i] + 1.5 * (s1 * d1[i] + s2 * d2[i]))
                    .collect();
                project(dim, &p)
            };
            let pts = [
                corner(1.0, 1.0),
                corner(1.0, -1.0),
                corner(-1.0, -1.0),
                corner(-1.0, 1.0),
            ];
            let path: Vec<String> = pts
                .iter()
                .map(|(x, y)| format!("{},{}", fmt(*x), fmt(*y)))
                .collect();
            writeln!(
                out,
                "  <polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.15\" stroke=\"{color}\" stroke-width=\"0.02\"{} />",
                path.join(" "),
                dash(&prim.style),
            )
            .unwrap();
            let (lx, ly) = project(dim, point);
            text(out, lx + 0.12, ly - 0.1, color, &prim.label);
        }
        PrimitiveKind::Circle { center, radius } => {
            let (x, y) = project(dim, center.as_slice());
            writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"0.04\"{} />",
                fmt(x),
                fmt(y),
                fmt(*radius),
                dash(&prim.style),
            )
            .unwrap();
            text(out, x + 0.1, y - radius - 0.12, color, &prim.label);
        }
        PrimitiveKind::OutOfView => hidden.push(prim.label.clone()),
    }
}

fn render_axes(out: &mut String, dim: usize) {
    let gray = "#cccccc";
    if dim == 2 {
        segment(out, (-VIEW, 0.0), (VIEW, 0.0), gray, "");
        segment(out, (0.0, -VIEW), (0.0, VIEW), gray, "");
        text(out, VIEW - 0.45, -0.12, gray, "x1");
        text(out, 0.08, -VIEW + 0.35, gray, "x2");
    } else {
        for (i, label) in ["x1", "x2", "x3"].iter().enumerate() {
            let mut tip = vec![0.0; 3];
            tip[i] = 3.0;
            let a = project(dim, &[0.0, 0.0, 0.0]);
            let b = project(dim, &tip);
            segment(out, a, b, gray, "");
            tip[i] = 3.2;
            let (lx, ly) = project(dim, &tip);
            text(out, lx, ly, gray, label);
        }
    }
}

pub fn scene_to_svg(scene: &Scene) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{0} {0} {1} {1}\" font-family=\"monospace\">",
        fmt(-VIEW),
        fmt(2.0 * VIEW),
    )
    .unwrap();
    text(
        &mut out,
        -VIEW + 0.2,
        -VIEW + 0.4,
        "#333333",
        &scene.title,
    );
    render_axes(&mut out, scene.dim);
    let mut hidden = Vec::new();
    for prim in &scene.primitives {
        render_primitive(&mut out, scene.dim, prim, &mut hidden);
    }
    for (i, label) in hidden.iter().enumerate() {
        text(
            &mut out,
            -VIEW + 0.2,
            VIEW - 0.25 - 0.3 * (hidden.len() - 1 - i) as f64,
            "#999999",
            &format!("out of view: {label}"),
        );
    }
    out.push_str("</svg>\n");
    out
}

fn csv_coords(kind: &PrimitiveKind) -> Vec<f64> {
    match kind {
        PrimitiveKind::Point { at } => at.clone(),
        PrimitiveKind::Line { point, direction } => {
            point.iter().chain(direction).copied().collect()
        }
        PrimitiveKind::Plane { point, normal } => point.iter().chain(normal).copied().collect(),
        PrimitiveKind::Circle { center, radius } => vec![center[0], center[1], *radius],
        PrimitiveKind::OutOfView => Vec::new(),
    }
}

fn kind_name(kind: &PrimitiveKind) -> &'static str {
    match kind {
        PrimitiveKind::Point { .. } => "point",
        PrimitiveKind::Line { .. } => "line",
        PrimitiveKind::Plane { .. } => "plane",
        PrimitiveKind::Circle { .. } => "circle",
        PrimitiveKind::OutOfView => "out-of-view",
    }
}

/// One row per primitive; coordinates keep full precision (shortest
/// round-trip decimal) and are semicolon-joined inside the third column.
pub fn scene_to_csv(scene: &Scene) -> String {
    let mut out = String::from("kind,label,coords\n");
    for prim in &scene.primitives {
        let coords: Vec<String> = csv_coords(&prim.kind).iter().map(f64::to_string).collect();
        writeln!(
            out,
            "{},{},{}",
            kind_name(&prim.kind),
            prim.label,
            coords.join(";")
        )
        .unwrap();
    }
    out
}
