//! Relative-view figures: slice the lightcone and the invariance scene at a
//! fixed time and write the SVG and CSV forms under target/figures/.
//!
//!     cargo run --example figures

use std::fs;

use lpa::view::{invariance_scene, lightcone_scene, scene_to_csv, scene_to_svg};

fn main() -> std::io::Result<()> {
    fs::create_dir_all("target/figures")?;
    for (name, scene) in [
        ("lightcone", lightcone_scene(1.0)),
        ("invariance", invariance_scene(1.0)),
    ] {
        let svg = format!("target/figures/{name}.svg");
        let csv = format!("target/figures/{name}.csv");
        fs::write(&svg, scene_to_svg(&scene))?;
        fs::write(&csv, scene_to_csv(&scene))?;
        println!("wrote {svg} and {csv}");
        for prim in &scene.primitives {
            println!("  {} {:?}", prim.label, prim.kind);
        }
    }
    Ok(())
}
