//! Command-line front end for the exact Steklov heat-trace toolkit.
//!
//! Four subcommands, each emitting one JSON document (schema
//! `steklov-heat/1`) on stdout and an exit code that makes the result
//! scriptable:
//!
//! * `derive`  — run the exact symbolic derivation of the heat-trace
//!   coefficients and cross-check them against the closed forms;
//! * `ball`    — fit the exact unit-ball heat trace on a time grid and
//!   compare the fitted expansion with the derived one;
//! * `surface` — integrate discrete curvature invariants over a triangle
//!   mesh (loaded from a file or generated);
//! * `weyl`    — count ball eigenvalues against the two-term growth law.
//!
//! Exit codes: `0` when the command's acceptance gate passes, `2` when the
//! computation succeeded but the gate failed, `1` for usage, I/O, or
//! domain errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use steklov_heat::{
    derivation_report, dtn_symbols, fit_heat_invariants, integrate_invariants, parametrix_symbols,
    structure_audit, unit_ball_expansion, weyl_residual, SurfaceMesh,
};

#[derive(Parser)]
#[command(
    name = "steklov-heat",
    version,
    about = "Exact and numerical tools for the Steklov heat-trace expansion",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive heat coefficients exactly and cross-check the closed forms.
    Derive(DeriveArgs),
    /// Fit the exact ball heat trace against the derived expansion.
    Ball(BallArgs),
    /// Integrate curvature invariants over a closed triangle mesh.
    Surface(SurfaceArgs),
    /// Compare exact ball eigenvalue counts with the two-term growth law.
    Weyl(WeylArgs),
}

#[derive(clap::Args)]
struct DeriveArgs {
    /// Ambient dimension n (boundary dimension n-1); 2 to 200.
    #[arg(long)]
    dim: u32,
    /// Highest coefficient order to derive (0..=2; a_k needs dim >= k+1).
    #[arg(long, default_value_t = 2)]
    depth: u32,
    /// Zero out wall-clock fields so repeated runs emit identical bytes.
    #[arg(long)]
    reproducible: bool,
    /// Also push the recursions one order past the evaluated range and
    /// report structural statistics of the raw order minus-four symbol.
    #[arg(long)]
    experimental_raw_k3: bool,
    /// Also write the JSON document to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct BallArgs {
    /// Ambient dimension n (2 to 4 have derived expansions to compare).
    #[arg(long)]
    dim: u32,
    /// Smallest time on the log-spaced fit grid.
    #[arg(long, default_value_t = 0.005)]
    grid_min: f64,
    /// Largest time on the log-spaced fit grid.
    #[arg(long, default_value_t = 0.05)]
    grid_max: f64,
    /// Number of grid points (at least 8).
    #[arg(long, default_value_t = 40)]
    grid_points: usize,
    /// Also write the JSON document to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
#[command(group(
    ArgGroup::new("source")
        .required(true)
        .args(["mesh", "icosphere", "ellipsoid", "torus"])
))]
struct SurfaceArgs {
    /// Load a mesh from an OFF or OBJ file.
    #[arg(long)]
    mesh: Option<PathBuf>,
    /// Generate a subdivided icosahedral sphere: RADIUS SUBDIVISIONS.
    #[arg(long, num_args = 2, value_names = ["RADIUS", "SUBDIVISIONS"])]
    icosphere: Option<Vec<f64>>,
    /// Generate an ellipsoid: A B C SUBDIVISIONS.
    #[arg(long, num_args = 4, value_names = ["A", "B", "C", "SUBDIVISIONS"])]
    ellipsoid: Option<Vec<f64>>,
    /// Generate a torus: BIG_RADIUS SMALL_RADIUS RESOLUTION.
    #[arg(long, num_args = 3, value_names = ["BIG_RADIUS", "SMALL_RADIUS", "RESOLUTION"])]
    torus: Option<Vec<f64>>,
    /// Also write the JSON document to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct WeylArgs {
    /// Ambient dimension n (gates are sharp for 2..=4, reporting beyond).
    #[arg(long)]
    dim: u32,
    /// Spectral cutoff; snapped to the nearest half-integer, where the
    /// residual patterns are clean.
    #[arg(long)]
    sigma: f64,
    /// Also write the JSON document to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Pass/fail verdict included in every document.
#[derive(Serialize)]
struct Gate {
    passed: bool,
    detail: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
            // Help and version go to stdout with success, usage errors to
            // stderr with exit code 1.
            let _ = e.print();
            return code;
        }
    };
    let (result, out) = match cli.command {
        Command::Derive(args) => {
            let out = args.out.clone();
            (run_derive(args), out)
        }
        Command::Ball(args) => {
            let out = args.out.clone();
            (run_ball(args), out)
        }
        Command::Surface(args) => {
            let out = args.out.clone();
            (run_surface(args), out)
        }
        Command::Weyl(args) => {
            let out = args.out.clone();
            (run_weyl(args), out)
        }
    };
    match result {
        Ok((command, payload, gate)) => {
            let passed = gate.passed;
            let envelope = json!({
                "schema": "steklov-heat/1",
                "command": command,
                "payload": payload,
                "gate": gate,
            });
            let rendered = serde_json::to_string_pretty(&envelope).expect("envelope serializes");
            // Tolerate a consumer that closes the pipe early (`head`, etc.).
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{rendered}").is_err() {
                return ExitCode::from(1);
            }
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, format!("{rendered}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run_derive(args: DeriveArgs) -> Result<(&'static str, Value, Gate)> {
    let mut report = derivation_report(args.dim, args.depth).context("derivation failed")?;
    if args.reproducible {
        for order in &mut report.orders {
            order.stats.elapsed_ms = 0;
        }
    }
    let mismatched: Vec<u32> = report
        .orders
        .iter()
        .filter(|o| !o.matches_closed_form)
        .map(|o| o.order)
        .collect();
    let gate = Gate {
        passed: report.all_match,
        detail: if report.all_match {
            format!(
                "orders 0..={} match their closed forms exactly",
                report.depth
            )
        } else {
            format!("orders {mismatched:?} differ from their closed forms")
        },
    };
    let mut payload = serde_json::to_value(&report).context("report serializes")?;
    if args.experimental_raw_k3 {
        payload["raw_order_minus_4"] = raw_depth_three(args.dim)?;
    }
    Ok(("derive", payload, gate))
}

/// Structural statistics of the first symbol past the evaluated range.
fn raw_depth_three(dim: u32) -> Result<Value> {
    let rs = dtn_symbols(dim, 3).context("operator recursion at depth 3")?;
    let ss = parametrix_symbols(&rs, 3).context("parametrix recursion at depth 3")?;
    let raw = &ss[3];
    let audit = structure_audit(raw, -4);
    let mut weight_histogram = std::collections::BTreeMap::<u32, usize>::new();
    for t in raw.terms() {
        *weight_histogram.entry(t.total_weight()).or_insert(0) += 1;
    }
    Ok(json!({
        "order": -4,
        "term_count": raw.len(),
        "audit_passed": audit.passed(),
        "audited_terms": audit.checked_terms,
        "violations": audit.violations.len(),
        "weight_histogram": weight_histogram,
        "note": "structural laws only; the base-point table stops at second jets",
    }))
}

fn run_ball(args: BallArgs) -> Result<(&'static str, Value, Gate)> {
    if args.grid_points < 8 {
        bail!("need at least 8 grid points, got {}", args.grid_points);
    }
    if !(args.grid_min.is_finite() && args.grid_max.is_finite())
        || args.grid_min <= 0.0
        || args.grid_max <= args.grid_min
    {
        bail!(
            "need 0 < grid-min < grid-max, got {} and {}",
            args.grid_min,
            args.grid_max
        );
    }
    // Log-spaced: the unweighted fit then weighs samples uniformly in log t.
    let ratio = args.grid_max / args.grid_min;
    let grid: Vec<f64> = (0..args.grid_points)
        .map(|i| args.grid_min * ratio.powf(i as f64 / (args.grid_points - 1) as f64))
        .collect();
    let fit = fit_heat_invariants(args.dim, &grid).context("heat-trace fit failed")?;
    let expansion = unit_ball_expansion(args.dim).context("derived expansion failed")?;
    let tolerances = [1e-6, 1e-4, 1e-3];
    let mut worst: Option<String> = None;
    for (j, (&target, &tol)) in expansion.iter().zip(tolerances.iter()).enumerate() {
        let err = (fit.coefficients[j] - target).abs();
        if err >= tol {
            worst = Some(format!(
                "coefficient {j}: fit {} vs derived {target} (|diff| {err:.2e} >= {tol:.0e})",
                fit.coefficients[j]
            ));
            break;
        }
    }
    let gate = Gate {
        passed: worst.is_none(),
        detail: worst.unwrap_or_else(|| {
            format!(
                "{} fitted coefficients within tolerance of the derived expansion",
                expansion.len()
            )
        }),
    };
    let payload = json!({
        "dim": args.dim,
        "grid": {
            "min": args.grid_min,
            "max": args.grid_max,
            "points": args.grid_points,
            "spacing": "log",
        },
        "fit": {
            "coefficients": fit.coefficients,
            "residual_rms": fit.residual_rms,
            "condition": fit.condition,
        },
        "derived_expansion": expansion,
    });
    Ok(("ball", payload, gate))
}

fn run_surface(args: SurfaceArgs) -> Result<(&'static str, Value, Gate)> {
    let (mesh, source) = load_surface(&args)?;
    let report = integrate_invariants(&mesh).context("surface integration failed")?;
    // The Cauchy-Schwarz deficit is nonnegative in exact arithmetic; a
    // visibly negative value means the integration went wrong.
    let passed = report.rigidity_deficit >= -1e-12;
    let gate = Gate {
        passed,
        detail: if passed {
            format!("rigidity deficit {:.6e} >= 0", report.rigidity_deficit)
        } else {
            format!("negative rigidity deficit {:.6e}", report.rigidity_deficit)
        },
    };
    let payload = json!({
        "source": source,
        "report": report,
    });
    Ok(("surface", payload, gate))
}

fn load_surface(args: &SurfaceArgs) -> Result<(SurfaceMesh, String)> {
    if let Some(path) = &args.mesh {
        let mesh =
            SurfaceMesh::load(path).with_context(|| format!("loading {}", path.display()))?;
        return Ok((mesh, path.display().to_string()));
    }
    if let Some(vals) = &args.icosphere {
        let subdivisions = integer_arg(vals[1], "SUBDIVISIONS")?;
        let mesh = steklov_heat::icosphere(vals[0], subdivisions)?;
        return Ok((
            mesh,
            format!("icosphere radius {} subdivisions {subdivisions}", vals[0]),
        ));
    }
    if let Some(vals) = &args.ellipsoid {
        let subdivisions = integer_arg(vals[3], "SUBDIVISIONS")?;
        let mesh = steklov_heat::ellipsoid(vals[0], vals[1], vals[2], subdivisions)?;
        return Ok((
            mesh,
            format!(
                "ellipsoid {} {} {} subdivisions {subdivisions}",
                vals[0], vals[1], vals[2]
            ),
        ));
    }
    let vals = args.torus.as_ref().expect("clap enforces one source");
    let resolution = integer_arg(vals[2], "RESOLUTION")?;
    let mesh = steklov_heat::torus(vals[0], vals[1], resolution)?;
    Ok((
        mesh,
        format!(
            "torus radii {} {} resolution {resolution}",
            vals[0], vals[1]
        ),
    ))
}

fn integer_arg(value: f64, name: &str) -> Result<u32> {
    if value.fract() != 0.0 || !(0.0..=1e9).contains(&value) {
        bail!("{name} must be a small nonnegative integer, got {value}");
    }
    Ok(value as u32)
}

fn run_weyl(args: WeylArgs) -> Result<(&'static str, Value, Gate)> {
    if !args.sigma.is_finite() || args.sigma < 0.0 {
        bail!("need a finite nonnegative sigma, got {}", args.sigma);
    }
    let snapped = (args.sigma - 0.5).round().max(0.0) + 0.5;
    let sample = weyl_residual(args.dim, snapped).context("eigenvalue counting failed")?;
    let gate = match args.dim {
        2 => Gate {
            passed: sample.residual == 0.0,
            detail: format!(
                "residual {} (exact law: 0 at half-integers)",
                sample.residual
            ),
        },
        3 => Gate {
            passed: sample.residual == 0.25,
            detail: format!(
                "residual {} (exact law: 1/4 at half-integers)",
                sample.residual
            ),
        },
        4 => Gate {
            passed: sample.residual.abs() <= snapped + 0.26,
            detail: format!(
                "residual {} within the linear band {:.2}",
                sample.residual,
                snapped + 0.26
            ),
        },
        _ => Gate {
            passed: true,
            detail: "no sharp residual bound at this dimension; reporting only".into(),
        },
    };
    let payload = json!({
        "dim": args.dim,
        "sigma": sample.sigma,
        // u128 is not JSON-safe; the count is exact below 2^53 and the
        // conversion is documented as lossy beyond.
        "count": sample.count as f64,
        "prediction": sample.prediction,
        "residual": sample.residual,
    });
    Ok(("weyl", payload, gate))
}
