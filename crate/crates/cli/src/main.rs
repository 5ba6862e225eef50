//! `infsup`: bounds for the inf-sup constant of star-shaped plane domains.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 invalid input, 3 domain not
//! star-shaped with respect to the center, 4 output not writable.

mod plot;
mod render;
mod shapefile;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use infsup::bounds::{polygon_m_inf_sup, polygon_m_sup_inf};
use infsup::{Boundary64, BoundReport64, Error, Family, Point, ReportOptions, Shape64};
use rayon::prelude::*;

use render::SweepRow;
use shapefile::{FileOptions, ShapeFile};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn write(path: &Path, e: std::io::Error) -> Self {
        Self {
            code: 4,
            message: format!("cannot write {}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotStarShaped { .. } => 3,
            Error::Argument(_) | Error::Structural(_) => 2,
            Error::Numeric { .. } => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(name = "infsup", version, about = "Certified bounds for the inf-sup, Babuška-Aziz and Friedrichs constants of star-shaped plane domains")]
struct Cli {
    /// Grid points per full turn for boundary sweeps.
    #[arg(long, global = true, env = "INFSUP_GRID")]
    grid: Option<usize>,
    /// Tolerance for sweeps, the outer minimization and areas.
    #[arg(long, global = true, env = "INFSUP_TOL")]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full bound report for a shape file.
    Bounds {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Test the Horgan-Payne claim on a counterexample family (cupid, stadium, octagon).
    #[command(allow_negative_numbers = true)]
    Counterexample {
        family: String,
        parameter: Option<f64>,
        /// Sweep `steps` equally spaced parameters and locate the threshold.
        #[arg(long, value_name = "LO:HI:STEPS")]
        sweep: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check star-shapedness and print ρ_max, R_min, τ, ψ.
    CheckStar {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        center: Option<Vec<f64>>,
    },
    /// Write an SVG of the boundary.
    Plot {
        file: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Bound reports over a range of one shape parameter, as CSV.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        param: String,
        #[arg(long, value_name = "LO:HI:STEPS")]
        range: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn report_options(cli: &Cli, file: Option<&FileOptions>) -> Result<ReportOptions<f64>, Failure> {
    let mut o = ReportOptions::default();
    let grid = cli.grid.or(file.and_then(|f| f.grid));
    let tol = cli.tol.or(file.and_then(|f| f.tol));
    if let Some(g) = grid {
        if g < 16 {
            return Err(Failure::parse(format!("grid must be at least 16, got {g}")));
        }
        o.bounds.sweep.grid = g;
    }
    if let Some(t) = tol {
        if !(t > 0.0 && t < 1e-2) {
            return Err(Failure::parse(format!("tol must lie in (0, 0.01), got {t}")));
        }
        o.bounds.sweep.tol = t;
        o.bounds.golden.rel_tol = t;
        o.area_tol = t;
    }
    Ok(o)
}

fn parse_range(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::parse(format!("expected LO:HI:STEPS, got {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi, steps] = parts[..] else {
        return Err(bad());
    };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let steps: usize = steps.trim().parse().map_err(|_| bad())?;
    if steps == 0 || !lo.is_finite() || !hi.is_finite() {
        return Err(bad());
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Failure::write(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::write(Path::new("<stdout>"), e))
        }
    }
}

fn build(file: &ShapeFile, center: Option<Point<f64>>) -> Result<(Shape64, Boundary64), Failure> {
    let spec = file.spec()?;
    let boundary = spec.build_with_center(center.or(file.center()))?;
    Ok((spec, boundary))
}

fn cmd_bounds(cli: &Cli, path: &Path, json: bool, out: Option<&Path>) -> Result<(), Failure> {
    let file = ShapeFile::load(path)?;
    let opts = report_options(cli, Some(&file.options))?;
    let (spec, boundary) = build(&file, None)?;
    let report = BoundReport64::compute(&boundary, &opts)?.with_reference(spec.reference_constants());
    if json {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        return emit(out, text.as_bytes());
    }
    let mut extras = Vec::new();
    if let Some(mut poly) = spec.polygon()? {
        if let Some(c) = file.center() {
            poly.center = c;
        }
        let big = polygon_m_inf_sup(&poly, &opts.bounds)?;
        extras.push(("M, polygon formula".to_string(), big.value, "PROVEN"));
        extras.push(("m, polygon formula".to_string(), polygon_m_sup_inf(&poly)?, "CLAIMED"));
    }
    if let Some((family, p)) = spec.family() {
        let r = family.refutation_report(p)?;
        extras.push(("claimed lower beta^2".to_string(), r.claimed_beta_sq, "CLAIMED"));
        extras.push(("upper beta^2, closed-form cut".to_string(), r.proven_upper_beta_sq, "PROVEN"));
    }
    emit(out, render::bounds_table(&report, &extras).as_bytes())
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    name.parse::<Family>().map_err(|e| Failure::parse(e.to_string()))
}

fn family_row(family: Family, p: f64, opts: &ReportOptions<f64>) -> Result<SweepRow, Failure> {
    let r = family.refutation_report(p)?;
    let boundary = family.shape(p).build()?;
    let mut o = *opts;
    o.cut_directions = 0;
    let report = BoundReport64::compute(&boundary, &o)?;
    let mut row = SweepRow::from_report(p, &report);
    row.beta_lower_hp_claimed = r.claimed_beta_sq.sqrt();
    row.beta_upper = Some(r.proven_upper_beta_sq.sqrt());
    row.verdict = r.verdict;
    Ok(row)
}

fn cmd_counterexample(
    cli: &Cli,
    family: &str,
    parameter: Option<f64>,
    sweep: Option<&str>,
    json: bool,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let family = parse_family(family)?;
    let opts = report_options(cli, None)?;
    match (parameter, sweep) {
        (Some(p), None) => {
            let r = family.refutation_report(p)?;
            if json {
                let mut text = serde_json::to_string_pretty(&r).expect("report serializes");
                text.push('\n');
                emit(out, text.as_bytes())
            } else {
                emit(out, render::refutation_table(&r, family.omega(p)?).as_bytes())
            }
        }
        (None, Some(range)) => {
            let mut values = parse_range(range)?;
            values.sort_by(f64::total_cmp);
            let rows: Vec<SweepRow> = values
                .par_iter()
                .map(|&p| family_row(family, p, &opts))
                .collect::<Result<_, _>>()?;
            emit(out, &render::csv(&rows))?;
            let message = threshold_message(family, &rows)?;
            if out.is_some() {
                println!("{message}");
            } else {
                eprintln!("{message}");
            }
            Ok(())
        }
        _ => Err(Failure::parse("give either a parameter or --sweep LO:HI:STEPS")),
    }
}

fn threshold_message(family: Family, rows: &[SweepRow]) -> Result<String, Failure> {
    let name = family.parameter_name();
    let change = rows.windows(2).find(|w| w[0].verdict != w[1].verdict);
    let Some(w) = change else {
        let v = rows.first().map(|r| r.verdict.to_string()).unwrap_or_default();
        return Ok(format!("no verdict change in the sweep (all {v})"));
    };
    let t = family.refutation_threshold(w[0].parameter, w[1].parameter, 1e-6)?;
    let side = if family.refutes_upward() { ">" } else { "<" };
    Ok(format!(
        "refutation threshold: {name}* = {} (REFUTED for {name} {side} {name}*; bisection between {} and {})",
        render::sig3(t),
        render::num(w[0].parameter),
        render::num(w[1].parameter)
    ))
}

fn cmd_check_star(path: &Path, center: Option<&[f64]>) -> Result<(), Failure> {
    let file = ShapeFile::load(path)?;
    let center = center.map(|c| Point::new(c[0], c[1]));
    let (_, boundary) = build(&file, center)?;
    let sweep = infsup::SweepOptions::default();
    let scale = boundary.normalization_scale();
    let rho = boundary.rho_max_extremum(&sweep);
    let tight = boundary.max_tan_gamma(&sweep);
    let rr = infsup::bounds::radii_ratio_from(rho.value, boundary.r_min(&sweep));
    let c = boundary.center();
    let star = rho.value > 0.0;
    let rows = [
        format!("center       ({}, {})", render::num(c.x), render::num(c.y)),
        format!("rho_max      {}", render::num(rho.value * scale)),
        format!("R_min        {}", render::num(boundary.raw_r_min(&sweep))),
        format!("tau          {}", render::num(rr.tau)),
        format!("psi          {}", render::num(rr.psi)),
        format!("rho_max at   theta = {}", render::num(rho.theta)),
        format!("max gamma at theta = {}", render::num(tight.theta)),
        format!("star-shaped  {}", if star { "yes" } else { "no (center on the kernel boundary)" }),
    ];
    println!("{}", rows.join("\n"));
    if star {
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: format!("rho_max = 0 at theta = {}", rho.theta),
        })
    }
}

fn cmd_plot(path: &Path, out: &Path) -> Result<(), Failure> {
    let file = ShapeFile::load(path)?;
    let (_, boundary) = build(&file, None)?;
    let params: Vec<String> = file.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    let title = if params.is_empty() {
        file.kind.clone()
    } else {
        format!("{} ({})", file.kind, params.join(", "))
    };
    std::fs::write(out, plot::svg(&boundary, &title)).map_err(|e| Failure::write(out, e))
}

fn cmd_sweep(cli: &Cli, path: &Path, param: &str, range: &str, out: Option<&Path>) -> Result<(), Failure> {
    let file = ShapeFile::load(path)?;
    let opts = report_options(cli, Some(&file.options))?;
    let mut values = parse_range(range)?;
    values.sort_by(f64::total_cmp);
    let files: Vec<ShapeFile> = values
        .iter()
        .map(|&v| file.with_param(param, v))
        .collect::<Result<_, _>>()?;
    let rows: Vec<SweepRow> = files
        .par_iter()
        .zip(values.par_iter())
        .map(|(f, &v)| {
            let (_, b) = build(f, None)?;
            let r = BoundReport64::compute(&b, &opts)?;
            Ok(SweepRow::from_report(v, &r))
        })
        .collect::<Result<_, Failure>>()?;
    emit(out, &render::csv(&rows))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Bounds { file, json, out } => cmd_bounds(cli, file, *json, out.as_deref()),
        Command::Counterexample {
            family,
            parameter,
            sweep,
            json,
            out,
        } => cmd_counterexample(cli, family, *parameter, sweep.as_deref(), *json, out.as_deref()),
        Command::CheckStar { file, center } => cmd_check_star(file, center.as_deref()),
        Command::Plot { file, out } => cmd_plot(file, out),
        Command::Sweep { file, param, range, out } => cmd_sweep(cli, file, param, range, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
