//! Command-line front end: generate surface meshes, run verification suites,
//! print rotation matrices, and reproduce the built-in example surfaces.
//!
//! The CLI is a thin shell over the library: it parses flags, builds a
//! `SurfaceSpec`, and formats what the library returns. Exit codes are 0 on
//! success/pass, 1 on verification failure or I/O trouble, 2 on usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use slopegen::curves::ProfileCurve;
use slopegen::demo;
use slopegen::error::Error;
use slopegen::mesh::{generate, MeshFormat, SurfaceForm};
use slopegen::rotation::{case_rotor, closed_form_matrix, rotation_matrix};
use slopegen::surfaces::{xi, SlopeCase, SurfaceSpec, XiOverride};

#[derive(Parser)]
#[command(
    name = "slopegen",
    version,
    about = "Timelike constant slope surfaces in Minkowski 3-space: \
             generate meshes, verify the three equivalent parametrizations, \
             inspect Lorentz rotation matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a surface on a grid and write it as OBJ, CSV or JSON.
    Generate(GenerateArgs),
    /// Run the invariant suite over a grid and print the JSON report.
    Verify(VerifyArgs),
    /// Print the rotation matrix of a case at one (u, v) sample.
    Matrix(MatrixArgs),
    /// Generate the three built-in example surfaces with verification
    /// reports and matrix-audit tables.
    #[command(name = "paper-examples")]
    PaperExamples(PaperExamplesArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Surface case: timelike-cone, spacelike-cone-spherical or
    /// spacelike-cone-hyperbolic.
    #[arg(long)]
    case: String,
    /// Constant angle (radians; must lie in (0, pi/2] for the spherical case).
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    /// Profile curve: h2-hyperbola, s12-timelike-hyperbola, s12-circle,
    /// h2-circle or s12-spacelike-circle-like.
    #[arg(long)]
    curve: String,
    /// Curve parameter as name=value; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long, default_value_t = 0.5)]
    u_min: f64,
    #[arg(long, default_value_t = 3.0)]
    u_max: f64,
    #[arg(long, default_value_t = 40)]
    u_steps: usize,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    v_min: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    v_max: f64,
    #[arg(long, default_value_t = 40)]
    v_steps: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Which parametrization to sample: direct, product or homothetic.
    #[arg(long, default_value = "direct")]
    form: String,
    /// Output format: obj, csv or json.
    #[arg(long, default_value = "obj")]
    format: String,
    /// Output path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Debug knob: feed the direct form a wrong angle law (tanh, cot, coth
    /// or tan) to prove the checker catches a broken hypothesis.
    #[arg(long, value_name = "LAW")]
    xi_override: Option<String>,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    case: String,
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    #[arg(long)]
    curve: String,
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long)]
    u: f64,
    #[arg(long, allow_negative_numbers = true)]
    v: f64,
    /// Also print the entrywise deviation from the closed-form matrix.
    #[arg(long)]
    compare_closed_form: bool,
}

#[derive(Args)]
struct PaperExamplesArgs {
    /// Directory the meshes, reports and audit tables are written into.
    #[arg(long, default_value = "paper-examples")]
    out_dir: PathBuf,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || dispatch(cli.command);
    match std::env::var("SLOPEGEN_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
    {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run),
            Err(e) => {
                eprintln!("slopegen: failed to build thread pool: {e}");
                ExitCode::from(EXIT_FAIL)
            }
        },
        None => run(),
    }
}

fn dispatch(command: Command) -> ExitCode {
    match command {
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::PaperExamples(args) => cmd_paper_examples(args),
    }
}

/// Usage-level failures (bad names, invalid parameters, impossible grids)
/// exit 2; anything that happens after a well-formed request exits 1.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::UnknownCurve(_)
        | Error::InvalidParam(_)
        | Error::InvalidTheta(_)
        | Error::CurveCaseMismatch { .. }
        | Error::InvalidGrid(_)
        | Error::NonpositiveU(_)
        | Error::AxisCausalityMismatch
        | Error::AxisNotUnit(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("slopegen: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, f64>, String> {
    let mut out = BTreeMap::new();
    for entry in raw {
        let (name, value) = entry
            .split_once('=')
            .ok_or_else(|| format!("--param needs NAME=VALUE, got `{entry}`"))?;
        let value: f64 = value
            .parse()
            .map_err(|_| format!("--param {name}: `{value}` is not a number"))?;
        out.insert(name.to_string(), value);
    }
    Ok(out)
}

fn build_spec(args: &SpecArgs) -> Result<SurfaceSpec, ExitCode> {
    let case = SlopeCase::from_str(&args.case).map_err(|e| usage_error(&e))?;
    let params = parse_params(&args.params).map_err(|e| usage_error(&e))?;
    let curve = ProfileCurve::builtin(&args.curve, &params).map_err(|e| {
        eprintln!("slopegen: {e}");
        ExitCode::from(exit_code_for(&e))
    })?;
    SurfaceSpec::new(
        case,
        args.theta,
        curve,
        (args.u_min, args.u_max),
        (args.v_min, args.v_max),
        args.u_steps,
        args.v_steps,
    )
    .map_err(|e| {
        eprintln!("slopegen: {e}");
        ExitCode::from(exit_code_for(&e))
    })
}

fn cmd_generate(args: GenerateArgs) -> ExitCode {
    let spec = match build_spec(&args.spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let form = match SurfaceForm::from_str(&args.form) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let format = match MeshFormat::from_str(&args.format) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    match generate(&spec, form, format, &args.out) {
        Ok(mesh) => {
            println!(
                "wrote {} ({} vertices, {} faces)",
                args.out.display(),
                mesh.vertices.len(),
                mesh.faces.len()
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("slopegen: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let mut spec = match build_spec(&args.spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Some(raw) = &args.xi_override {
        match XiOverride::from_str(raw) {
            Ok(o) => spec = spec.with_xi_override(o),
            Err(e) => return usage_error(&e),
        }
    }
    let report = spec.verify();
    println!("{}", report.to_json());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_matrix(args: MatrixArgs) -> ExitCode {
    let case = match SlopeCase::from_str(&args.case) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    let params = match parse_params(&args.params) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let result = (|| -> Result<(), Error> {
        let curve = ProfileCurve::builtin(&args.curve, &params)?;
        if curve.ambient() != case.required_ambient()
            || curve.tangent_character() != case.required_tangent()
        {
            return Err(Error::CurveCaseMismatch {
                curve: curve.name().to_string(),
            });
        }
        let angle = xi(case, args.theta, args.u)?;
        let axis = curve.derivative(args.v);
        let rotor = case_rotor(case, angle, &axis)?;
        let m = rotation_matrix(&rotor.q)?;
        println!("{m}");
        if args.compare_closed_form {
            let cf = closed_form_matrix(case, angle, &axis)?;
            println!("deviation from the closed form (entrywise):");
            let mut worst: f64 = 0.0;
            for i in 0..3 {
                let devs: Vec<String> = (0..3)
                    .map(|j| {
                        let d = (m.entry(i, j) - cf.entry(i, j)).abs();
                        worst = worst.max(d);
                        format!("{d:>12.3e}")
                    })
                    .collect();
                println!("{}", devs.join(" "));
            }
            println!("max deviation: {worst:.3e}");
        }
        Ok(())
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("slopegen: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn cmd_paper_examples(args: PaperExamplesArgs) -> ExitCode {
    match demo::run_all(&args.out_dir) {
        Ok(summary) => {
            for o in &summary.outcomes {
                let verdict = if o.report.pass { "pass" } else { "FAIL" };
                println!(
                    "{verdict}  {}  (form dev {:.3e}, slope mean {:.9}, slope stddev {:.3e}, \
                     matrix entries disagreeing {})",
                    o.name,
                    o.report.max_form_deviation,
                    o.report.slope_cosine_mean,
                    o.report.slope_cosine_stddev,
                    o.matrix_discrepancies.len()
                );
            }
            println!("outputs in {}", args.out_dir.display());
            if summary.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(e) => {
            eprintln!("slopegen: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
