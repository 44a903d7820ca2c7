//! Subcommand definitions and their drivers.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lambda_optics_core::analytic::{omega_c_min, omega_c_necessary, pump_roots};
use lambda_optics_core::{boundary_curve, evaluate_point, GridSpec, Method, PumpRoots, RegionGrid};
use rayon::prelude::*;

use crate::config::{Effective, ParamArgs};
use crate::output::{self, num};
use crate::sweep::{Preset, SweepSpec, SweepVariable};
use crate::CliError;

type CliResult = std::result::Result<(), CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "lambda-optics",
    version,
    about = "Probe response of a pumped three-level lambda atom"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one parameter point and print a CSV row.
    Point(PointArgs),
    /// Sweep one parameter, or run a figure preset.
    Sweep(SweepArgs),
    /// Classify a grid over (pump_R, omega_c).
    Regionmap(RegionArgs),
    /// Report threshold coupling, minimum coupling and zero-slope pump rates.
    Critical(CriticalArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Parameter to sweep.
    #[arg(long, required_unless_present = "preset")]
    pub variable: Option<SweepVariable>,
    #[arg(
        long,
        allow_negative_numbers = true,
        required_unless_present = "preset"
    )]
    pub start: Option<f64>,
    #[arg(
        long,
        allow_negative_numbers = true,
        required_unless_present = "preset"
    )]
    pub stop: Option<f64>,
    #[arg(long, required_unless_present = "preset")]
    pub count: Option<usize>,
    /// Output file (standard output when omitted).
    #[arg(long, conflicts_with = "preset")]
    pub out: Option<PathBuf>,
    /// Built-in figure sweep; writes one CSV per curve into --out-dir.
    #[arg(long, conflicts_with_all = ["variable", "start", "stop", "count"])]
    pub preset: Option<Preset>,
    #[arg(long, default_value = ".", requires = "preset")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Analytic,
    Numeric,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// Base parameters; pump, omega_c and delta_p are set per cell.
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 0.1)]
    pub r_min: f64,
    #[arg(long, default_value_t = 6.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 0.5)]
    pub omega_c_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub omega_c_max: f64,
    /// Samples along pump_R.
    #[arg(long, default_value_t = 60)]
    pub n_r: usize,
    /// Samples along omega_c.
    #[arg(long, default_value_t = 60)]
    pub n_omega: usize,
    #[arg(long, value_enum, default_value = "analytic")]
    pub method: MethodArg,
    /// Samples on the boundary curve.
    #[arg(long, default_value_t = 500)]
    pub boundary_count: usize,
    /// Directory for regionmap.csv and regionmap_boundary.csv.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    /// Pump rate for the threshold coupling.
    #[arg(long, allow_negative_numbers = true)]
    pub pump: Option<f64>,
    /// Coupling for the zero-slope pump rates.
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    pub omega_c: Option<f64>,
}

/// Smallest pump rate on the boundary curve, where it is still finite.
pub const BOUNDARY_R_START: f64 = 1.01;

pub fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Point(a) => run_point(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Regionmap(a) => run_regionmap(a),
        Command::Critical(a) => run_critical(a),
    }
}

fn run_point(args: &PointArgs) -> CliResult {
    let eff = args.params.resolve()?;
    let sol = evaluate_point(&eff.params, eff.step)?;
    let row = output::point_row(&eff.params, &Ok(sol));
    output::emit(
        None,
        &output::render(&eff.comment_lines(), output::POINT_HEADER, &[row]),
    )
}

fn sweep_text(comments: Vec<String>, spec: &SweepSpec) -> String {
    let rows: Vec<String> = spec
        .run()
        .iter()
        .map(|(p, r)| output::point_row(p, r))
        .collect();
    output::render(&comments, output::POINT_HEADER, &rows)
}

fn run_sweep(args: &SweepArgs) -> CliResult {
    let eff = args.params.resolve()?;
    if let Some(preset) = args.preset {
        return run_preset(preset, &eff, &args.out_dir);
    }
    // clap enforces presence when no preset is given
    let spec = SweepSpec {
        variable: args.variable.expect("required by clap"),
        start: args.start.expect("required by clap"),
        stop: args.stop.expect("required by clap"),
        count: args.count.expect("required by clap"),
        base: eff.params,
        step: eff.step,
    };
    spec.validate()?;
    let mut comments = eff.comment_lines();
    comments.push(spec.comment_line());
    output::emit(args.out.as_deref(), &sweep_text(comments, &spec))
}

fn run_preset(preset: Preset, eff: &Effective, dir: &Path) -> CliResult {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    for curve in preset.curves(eff.params, eff.step) {
        let pinned = Effective {
            params: curve.spec.base,
            step: eff.step,
        };
        let mut comments = vec![
            format!("# preset: {}", preset.name()),
            format!("# curve: {} ({})", curve.label, curve.style),
        ];
        comments.extend(pinned.comment_lines());
        comments.push(curve.spec.comment_line());
        let path = dir.join(&curve.file_name);
        output::emit(Some(&path), &sweep_text(comments, &curve.spec))?;
    }
    Ok(())
}

fn run_regionmap(args: &RegionArgs) -> CliResult {
    let eff = args.params.resolve()?;
    let method = match args.method {
        MethodArg::Analytic => Method::Analytic,
        MethodArg::Numeric => Method::Numeric,
    };
    let mut spec = GridSpec::new(
        (args.r_min, args.r_max),
        (args.omega_c_min, args.omega_c_max),
        args.n_r,
        args.n_omega,
        method,
    );
    spec.base = eff.params.with_delta_p(0.0);
    spec.validate()?;
    if args.boundary_count < 2 {
        return Err(CliError::Usage("--boundary-count must be >= 2".into()));
    }

    let cells = spec
        .points()
        .par_iter()
        .map(|&(r, oc)| spec.classify_cell(r, oc))
        .collect();
    let grid = RegionGrid::from_cells(&spec, cells);

    let mut comments = eff.comment_lines();
    comments.push(format!(
        "# regionmap: method = {} pump_R = [{}, {}] x {} omega_c = [{}, {}] x {}",
        method.as_str(),
        num(args.r_min),
        num(args.r_max),
        args.n_r,
        num(args.omega_c_min),
        num(args.omega_c_max),
        args.n_omega
    ));
    let rows: Vec<String> = grid
        .iter()
        .map(|(r, oc, c)| {
            let class = match c {
                Ok(p) => p.as_str(),
                Err(_) => "error",
            };
            format!("{},{},{}", num(r), num(oc), class)
        })
        .collect();

    let r_lo = args.r_min.max(BOUNDARY_R_START);
    let boundary = if args.r_max > r_lo {
        boundary_curve((r_lo, args.r_max), args.boundary_count)?
    } else {
        Vec::new()
    };
    let boundary_rows: Vec<String> = boundary
        .iter()
        .map(|&(r, oc)| format!("{},{}", num(r), num(oc)))
        .collect();

    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", args.out_dir.display())))?;
    output::emit(
        Some(&args.out_dir.join("regionmap.csv")),
        &output::render(&comments, output::REGION_HEADER, &rows),
    )?;
    output::emit(
        Some(&args.out_dir.join("regionmap_boundary.csv")),
        &output::render(
            &[format!(
                "# boundary: pump_R from {} to {}",
                num(r_lo),
                num(args.r_max)
            )],
            output::BOUNDARY_HEADER,
            &boundary_rows,
        ),
    )
}

fn run_critical(args: &CriticalArgs) -> CliResult {
    let (r_star, oc_min) = omega_c_min();
    let mut rows = Vec::new();
    if let Some(r) = args.pump {
        let nec = match omega_c_necessary(r)? {
            Some(v) => num(v),
            None => "none".into(),
        };
        rows.push(format!("pump_R,{}", num(r)));
        rows.push(format!("omega_c_necessary,{nec}"));
    }
    rows.push(format!("omega_c_min,{}", num(oc_min)));
    rows.push(format!("r_star,{}", num(r_star)));
    if let Some(oc) = args.omega_c {
        rows.push(format!("omega_c,{}", num(oc)));
        match pump_roots(oc)? {
            PumpRoots::None => rows.push("pump_roots,none".into()),
            roots => {
                for (i, r) in roots.iter().enumerate() {
                    rows.push(format!("pump_root_{},{}", i + 1, num(r)));
                }
            }
        }
    }
    output::emit(None, &output::render(&[], "quantity,value", &rows))
}
