//! Command-line front end. Behavior lives in the library; this module only
//! parses arguments, routes to the suites, and maps outcomes to exit codes:
//! 0 when every check passes, 1 on identity failure, 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{exp_bivector, parse_multivector, Algebra, Multivector, Signature};
use crate::little::{
    canonical_little_report, check_invariance, folded_potential, gauge_closed_form,
    little_generators, reference_signature, rotation_counterexample, transform_potential,
    translation_rotor, verify_isomorphism, verify_lorentz_table, CayleyTable, LittleAlgebra,
    LittleError, FLOAT_TOL,
};
use crate::report::Report;
use crate::suite;
use crate::view::{invariance_scene, lightcone_scene, scene_to_csv, scene_to_svg, Scene};

#[derive(Parser)]
#[command(
    name = "lpa",
    version,
    about = "Stabilizer algebras of lightlike directions: verification suites, demos, and figures"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the seeded verification suites in G(1,n)
    Verify(VerifyArgs),
    /// Reproduce one identity with chosen parameters
    Demo(DemoArgs),
    /// Build the stabilizer algebra of a lightlike direction and print it
    Construct(ConstructArgs),
    /// Emit a relative-view figure as SVG or CSV
    Project(ProjectArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Spatial dimension n of the parent G(1,n)
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=6))]
    dim: u32,
    /// Seed for the trial generator
    #[arg(long, env = "LPA_SEED", default_value_t = 0)]
    seed: u64,
    /// Random configurations per suite
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Tolerance for the checks that cross float rounding paths
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Emit the machine-readable JSON report instead of text
    #[arg(long)]
    json: bool,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DemoArgs {
    #[command(subcommand)]
    which: DemoCommand,
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Commutation table of the G(1,3) rotation and boost generators
    Commutators,
    /// Lightlike translation rotor against the bivector exponential
    Rotor {
        /// Scalar part of the rotor parameter
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Pseudoscalar part of the rotor parameter
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
    },
    /// Gauge transformation of a potential against its closed form
    Gauge {
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        /// Vector part of the potential: four generator coefficients
        #[arg(long, value_delimiter = ',', default_value = "1,0,0,1")]
        a: Vec<f64>,
        /// Trivector part of the potential: four coefficients against g_u I
        #[arg(long, value_delimiter = ',', default_value = "0,0,0,0")]
        b: Vec<f64>,
    },
    /// Translation invariance of the field bivector, with the rotation
    /// counterexample
    Invariance {
        /// Translation parameter
        #[arg(long, default_value_t = 1.0)]
        theta: f64,
        /// Rotation angle of the counterexample
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
    },
    /// Distribution of the rotation bracket over the fold N (1 + I)
    Fold,
}

#[derive(Args)]
struct ConstructArgs {
    /// Parent signature as p,q (r = 0)
    #[arg(long, value_parser = parse_parent)]
    parent: Signature,
    /// Lightlike direction in multivector text form
    #[arg(long)]
    k: String,
    /// Emit a JSON description instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProjectArgs {
    /// Which figure to emit
    #[arg(long, value_enum)]
    fig: Fig,
    /// Slice time of the view
    #[arg(long, default_value_t = 1.0)]
    time: f64,
    /// Output path; the extension picks the format (.svg or .csv).
    /// Without it the SVG goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fig {
    Lightcone,
    Invariance,
}

fn parse_parent(text: &str) -> Result<Signature, String> {
    let parts: Vec<&str> = text.split(',').collect();
    let [p, q] = parts.as_slice() else {
        return Err("expected p,q".to_string());
    };
    let p: u32 = p.trim().parse().map_err(|_| "p must be an integer")?;
    let q: u32 = q.trim().parse().map_err(|_| "q must be an integer")?;
    Ok(Signature::new(p, q, 0))
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Io(e)
    }
}

/// Input-shaped construction failures are the caller's mistake; anything
/// else would be an internal bug and may propagate as a panic instead.
fn usage(e: LittleError) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap reserves 2 for usage errors; help and version print as success
        Err(e) => e.exit(),
    };
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Demo(args) => cmd_demo(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Project(args) => cmd_project(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, Failure> {
    let report = suite::run_verify(args.dim, args.seed, args.trials, args.tol);
    let text = if args.json {
        report.to_json()
    } else {
        report.to_text()
    };
    emit(&text, args.out.as_deref())?;
    Ok(report.all_pass())
}

fn cmd_demo(args: DemoArgs) -> Result<bool, Failure> {
    match args.which {
        DemoCommand::Commutators => demo_commutators(),
        DemoCommand::Rotor { theta, beta } => demo_rotor(theta, beta),
        DemoCommand::Gauge { alpha, beta, a, b } => demo_gauge(alpha, beta, &a, &b),
        DemoCommand::Invariance { theta, alpha } => demo_invariance(theta, alpha),
        DemoCommand::Fold => demo_fold(),
    }
}

fn canonical_spacetime() -> LittleAlgebra {
    let alg = Algebra::spacetime();
    let k = Multivector::basis_vector(alg, 0).add(&Multivector::basis_vector(alg, 3));
    LittleAlgebra::construct(alg, &k).expect("canonical lightlike direction")
}

fn demo_commutators() -> Result<bool, Failure> {
    let alg = Algebra::spacetime();
    let lorentz = verify_lorentz_table(alg).expect("dimension-4 mostly-minus algebra");
    let little = canonical_little_report(alg).expect("canonical direction is lightlike");
    print!("{}", lorentz.to_text());
    println!();
    print!("{}", little.to_text());
    Ok(lorentz.all_pass() && little.all_pass())
}

fn demo_rotor(theta: f64, beta: f64) -> Result<bool, Failure> {
    let la = canonical_spacetime();
    let alg = la.parent();
    let parameter =
        Multivector::scalar(alg, theta).add(&Multivector::pseudoscalar(alg).scale(beta));
    let rotor = translation_rotor(&la, 2, &parameter).expect("valid dimension-4 parameter");
    let gens = little_generators(&la);
    let generator = parameter.geometric_product(gens.translation(2));
    let exponential = exp_bivector(&generator, -0.5).expect("nilpotent bivector exponentiates");

    let mut report = Report::new("rotor-closed-form");
    report.check_exact(
        "closed-form",
        "exp(-theta N_2 / 2) = 1 - theta N_2 / 2",
        exponential.value().sub(rotor.value()).max_abs(),
    );
    report.check(
        "nilpotency",
        "(theta N_2)^2 = 0",
        generator.geometric_product(&generator).max_abs(),
        1e-12,
    );
    println!("rotor = {}", rotor.value());
    print!("{}", report.to_text());
    Ok(report.all_pass())
}

/// Rewrites four generator coefficients against the adapted frame of the
/// canonical direction g0 + g3: the e0 component is the g3 coefficient and
/// whatever is left over sits on the time axis, outside the transverse span.
fn frame_coefficients(c: &[f64]) -> ([f64; 3], f64) {
    ([c[3], c[1], c[2]], c[0] - c[3])
}

fn demo_gauge(alpha: f64, beta: f64, a: &[f64], b: &[f64]) -> Result<bool, Failure> {
    if a.len() != 4 || b.len() != 4 {
        return Err(Failure::Usage(
            "--a and --b take four comma-separated coefficients".to_string(),
        ));
    }
    let la = canonical_spacetime();
    let alg = la.parent();
    let time = Multivector::basis_vector(alg, 0);
    let i_ps = Multivector::pseudoscalar(alg);
    let (fa, leak_a) = frame_coefficients(a);
    let (fb, leak_b) = frame_coefficients(b);
    let leak = time
        .scale(leak_a)
        .add(&time.geometric_product(&i_ps).scale(leak_b));

    let parameter = Multivector::scalar(alg, alpha).add(&i_ps.scale(beta));
    let rotor = translation_rotor(&la, 2, &parameter).expect("valid dimension-4 parameter");
    let potential = folded_potential(&la, fa, fb)
        .expect("transverse potential")
        .add(&leak);
    let image = transform_potential(&rotor, &potential).map_err(usage)?;
    let closed = gauge_closed_form(&la, alpha, beta, fa, fb)
        .expect("closed form exists in dimension 4")
        .add(&leak);
    let residual = image.sub(&closed).max_abs();

    println!("potential   A  = {potential}");
    println!("transformed A' = {image}");
    println!("closed form    = {closed}");
    if leak.is_zero() {
        let mut report = Report::new("gauge-closed-form");
        report.check(
            "closed-form",
            "L A ~L matches the transverse closed form",
            residual,
            1e-12,
        );
        print!("{}", report.to_text());
        Ok(report.all_pass())
    } else {
        println!(
            "note: the potential leaks onto the time axis, so the transverse \
             closed form does not apply; departure = {residual}"
        );
        Ok(true)
    }
}

fn demo_invariance(theta: f64, alpha: f64) -> Result<bool, Failure> {
    let la = canonical_spacetime();
    let alg = la.parent();
    let s = Multivector::basis_vector(alg, 1);
    let parameter = Multivector::scalar(alg, theta);
    let invariance =
        check_invariance(&la, &s, &parameter, 1, 0.0, 1e-12).expect("g1 is transverse");
    let counter = rotation_counterexample(&la, alpha).expect("canonical frame");

    let rotor = translation_rotor(&la, 1, &parameter).expect("scalar parameter");
    println!("s            = {s}");
    println!("L s ~L       = {}", rotor.sandwich(&s));
    println!("field s ^ k  = {}", s.outer(la.direction()));
    print!("{}", invariance.to_text());
    println!();
    print!("{}", counter.to_text());
    Ok(invariance.all_pass() && counter.all_pass())
}

fn demo_fold() -> Result<bool, Failure> {
    let la = canonical_spacetime();
    let alg = la.parent();
    let gens = little_generators(&la);
    let j3 = gens.rotation(1, 2, alg);
    let n2 = gens.translation(2);
    let one_plus_i = Multivector::scalar(alg, 1.0).add(&Multivector::pseudoscalar(alg));
    let folded = n2.geometric_product(&one_plus_i);
    let lhs = j3.commutator(&folded);
    let rhs = j3.commutator(n2).geometric_product(&one_plus_i);

    let mut report = Report::new("fold-distribution");
    report.check_exact(
        "fold",
        "J_3 x (N_2 (1 + I)) = (J_3 x N_2)(1 + I)",
        lhs.sub(&rhs).max_abs(),
    );
    println!("N_2 (1 + I)          = {folded}");
    println!("J_3 x (N_2 (1 + I))  = {lhs}");
    println!("(J_3 x N_2)(1 + I)   = {rhs}");
    print!("{}", report.to_text());
    Ok(report.all_pass())
}

fn cmd_construct(args: ConstructArgs) -> Result<bool, Failure> {
    let alg = Algebra::new(args.parent).map_err(|e| Failure::Usage(e.to_string()))?;
    let k = parse_multivector(&args.k, alg).map_err(|e| Failure::Usage(e.to_string()))?;
    let la = LittleAlgebra::construct(alg, &k).map_err(usage)?;
    let gens = little_generators(&la);
    // Axis-aligned directions give exact frames, but a generic k produces a
    // normalized frame whose products carry float noise, so the table is
    // built at the float tolerance; residuals still print as measured.
    let table = CayleyTable::build(&la, FLOAT_TOL).map_err(usage)?;
    let report = verify_isomorphism(&la, FLOAT_TOL).map_err(usage)?;
    let reference = reference_signature(&la);
    let verdict = if report.all_pass() { "PASS" } else { "FAIL" };

    if args.json {
        let value = serde_json::json!({
            "direction": k.to_string(),
            "frame": la.frame().iter().map(Multivector::to_string).collect::<Vec<_>>(),
            "rotations": gens.rotations.len(),
            "translations": gens.translations.len(),
            "reference": reference.to_string(),
            "report": serde_json::from_str::<serde_json::Value>(&report.to_json())
                .expect("report serializes"),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json value prints")
        );
        return Ok(report.all_pass());
    }

    println!("direction k = {k}");
    let frame: Vec<String> = la.frame().iter().map(Multivector::to_string).collect();
    println!("frame [{}]", frame.join(", "));
    println!(
        "generators: {} rotations, {} translations",
        gens.rotations.len(),
        gens.translations.len()
    );
    for (i, j, r) in &gens.rotations {
        println!("  R({i},{j}) = {r}");
    }
    for (i, n) in &gens.translations {
        println!("  N({i}) = {n}");
    }
    println!("cayley table:");
    print!("{table}");
    println!("isomorphic to {reference}: {verdict}");
    Ok(report.all_pass())
}

fn cmd_project(args: ProjectArgs) -> Result<bool, Failure> {
    let scene: Scene = match args.fig {
        Fig::Lightcone => lightcone_scene(args.time),
        Fig::Invariance => invariance_scene(args.time),
    };
    let (text, out) = match args.out.as_deref() {
        None => (scene_to_svg(&scene), None),
        Some(path) => match path.extension().and_then(|e| e.to_str()) {
            Some("svg") => (scene_to_svg(&scene), Some(path)),
            Some("csv") => (scene_to_csv(&scene), Some(path)),
            _ => {
                return Err(Failure::Usage(
                    "output extension must be .svg or .csv".to_string(),
                ))
            }
        },
    };
    emit(&text, out)?;
    Ok(true)
}
