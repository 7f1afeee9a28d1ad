//! Command-line front end: sample a function, transform it over a frequency
//! grid (optionally through a precomputed look-up table), densify by
//! interpolation, and emit CSV or JSON. Report presets reproduce the worked
//! error-curve studies with one command each.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use voigt_ft::reference::{Parity, TestFunction};
use voigt_ft::sampling::TabulatedFunction;
use voigt_ft::transform::{self, Formulation};
use voigt_ft::{Error, FitParams, Result, VoigtLut};

#[derive(Parser)]
#[command(
    name = "voigt-ft",
    version,
    about = "Fourier transforms of sampled functions via Voigt-function look-up tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Precompute the V_k / V_l coefficient tables and write them to disk.
    BuildLut(BuildLutArgs),
    /// Transform a built-in or tabulated function over a frequency grid.
    Transform(TransformArgs),
    /// Compare an approximation against its closed-form reference.
    Report(ReportArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Grid minimum (default -2*pi).
    #[arg(long = "nu-min", allow_negative_numbers = true)]
    nu_min: Option<f64>,
    /// Grid maximum (default 2*pi).
    #[arg(long = "nu-max", allow_negative_numbers = true)]
    nu_max: Option<f64>,
    /// Grid step (default 0.1).
    #[arg(long = "nu-step")]
    nu_step: Option<f64>,
}

impl GridArgs {
    fn build(&self) -> Result<Vec<f64>> {
        let min = self.nu_min.unwrap_or(-2.0 * std::f64::consts::PI);
        let max = self.nu_max.unwrap_or(2.0 * std::f64::consts::PI);
        let step = self.nu_step.unwrap_or(0.1);
        transform::nu_grid(min, max, step)
    }
}

#[derive(Args)]
struct BuildLutArgs {
    /// Grid step h.
    #[arg(long = "h")]
    h: f64,
    /// Kernel width c.
    #[arg(long = "c")]
    c: f64,
    /// Half-count N.
    #[arg(long = "N")]
    n: usize,
    #[command(flatten)]
    grid: GridArgs,
    /// Output table path.
    #[arg(long)]
    out: PathBuf,
    /// Also write the table as diagnostic CSV.
    #[arg(long = "export-csv")]
    export_csv: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    /// Built-in function name; '+'-joined names are summed
    /// (rect, rect-approx, sawtooth, sawtooth-approx, g, g-even, g-odd, u).
    #[arg(long, conflicts_with = "input")]
    builtin: Option<String>,
    /// Two-column tabulated input file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Formulation: full, half, trig, or combined.
    #[arg(long, required_unless_present = "preset")]
    variant: Option<String>,
    #[arg(long = "h", required_unless_present = "preset")]
    h: Option<f64>,
    #[arg(long = "c", required_unless_present = "preset")]
    c: Option<f64>,
    #[arg(long = "N", required_unless_present = "preset")]
    n: Option<usize>,
    #[command(flatten)]
    grid: GridArgs,
    /// Look-up table file (variant half only).
    #[arg(long)]
    lut: Option<PathBuf>,
    /// Output path.
    #[arg(long)]
    out: PathBuf,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Subdivide each grid interval into this many parts by linear
    /// interpolation (1 = no densification).
    #[arg(long, default_value_t = 1)]
    densify: usize,
    /// Named parameter set (fig3).
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    /// Named study: fig3, fig4, fig6, fig7, fig9, fig10.
    #[arg(long)]
    preset: Option<String>,
    /// Built-in function with a closed-form transform (custom reports).
    #[arg(long)]
    builtin: Option<String>,
    /// Formulation for custom reports.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long = "h")]
    h: Option<f64>,
    #[arg(long = "c")]
    c: Option<f64>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[command(flatten)]
    grid: GridArgs,
    /// Optional CSV/JSON output path; the summary always goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Relative-error floor; references below it yield blank cells.
    #[arg(long = "rel-floor", default_value_t = 1e-12)]
    rel_floor: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidParams(_)
        | Error::NonFiniteInput(_)
        | Error::NonFiniteSample { .. }
        | Error::UnsupportedId(_)
        | Error::OverflowGuard { .. } => 2,
        Error::Io(_) => 3,
        Error::LutMismatch(_)
        | Error::OutOfRange(_)
        | Error::ChecksumMismatch { .. }
        | Error::FormatVersionMismatch { .. } => 4,
        Error::Parse(_) => 5,
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::BuildLut(args) => run_build_lut(args),
        Command::Transform(args) => run_transform(args),
        Command::Report(args) => run_report(args),
    }
}

fn run_build_lut(args: BuildLutArgs) -> Result<()> {
    let params = FitParams::new(args.h, args.c, args.n)?;
    let grid = args.grid.build()?;
    let lut = VoigtLut::build(params, &grid)?;
    lut.save(&args.out)?;
    if let Some(csv_path) = &args.export_csv {
        let file = fs::File::create(csv_path)?;
        lut.write_csv(std::io::BufWriter::new(file))?;
    }
    println!(
        "built look-up table: {} rows x {} frequencies",
        params.half_count,
        grid.len()
    );
    println!("checksum: {:#018x}", lut.checksum());
    println!("written to {}", args.out.display());
    Ok(())
}

/// A transform input: one or more built-ins summed, or a tabulated file.
enum Source {
    Builtin(Vec<TestFunction>),
    Table(TabulatedFunction),
}

impl Source {
    fn resolve(builtin: Option<&str>, input: Option<&PathBuf>) -> Result<Self> {
        match (builtin, input) {
            (Some(names), None) => {
                let ids = names
                    .split('+')
                    .map(|part| part.parse::<TestFunction>())
                    .collect::<Result<Vec<_>>>()?;
                if ids.is_empty() {
                    return Err(Error::Parse("empty builtin list".to_string()));
                }
                Ok(Source::Builtin(ids))
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path)?;
                Ok(Source::Table(TabulatedFunction::parse(&text)?))
            }
            _ => Err(Error::InvalidParams(
                "exactly one of --builtin or --input is required".to_string(),
            )),
        }
    }

    fn eval(&self, t: f64) -> f64 {
        match self {
            Source::Builtin(ids) => ids.iter().map(|id| id.eval(t)).sum(),
            Source::Table(tab) => tab.eval(t),
        }
    }
}

fn parse_format(s: &str) -> Result<bool> {
    match s {
        "csv" => Ok(true),
        "json" => Ok(false),
        other => Err(Error::InvalidParams(format!(
            "unknown format {other:?} (expected csv or json)"
        ))),
    }
}

fn run_transform(args: TransformArgs) -> Result<()> {
    let csv = parse_format(&args.format)?;
    if args.densify == 0 {
        return Err(Error::InvalidParams("densify must be at least 1".to_string()));
    }

    let (source, variant, params, grid) = match args.preset.as_deref() {
        Some("fig3") => (
            Source::Builtin(vec![TestFunction::Rect, TestFunction::Sawtooth]),
            Formulation::Combined,
            FitParams::new(0.02, 0.025, 25)?,
            transform::default_nu_grid(),
        ),
        Some(other) => {
            return Err(Error::InvalidParams(format!(
                "unknown transform preset {other:?} (expected fig3)"
            )))
        }
        None => {
            let source = Source::resolve(args.builtin.as_deref(), args.input.as_ref())?;
            let variant: Formulation = args
                .variant
                .as_deref()
                .ok_or_else(|| Error::InvalidParams("--variant is required".to_string()))?
                .parse()?;
            let params = FitParams::new(
                args.h.ok_or_else(|| Error::InvalidParams("--h is required".to_string()))?,
                args.c.ok_or_else(|| Error::InvalidParams("--c is required".to_string()))?,
                args.n.ok_or_else(|| Error::InvalidParams("--N is required".to_string()))?,
            )?;
            (source, variant, params, args.grid.build()?)
        }
    };

    let lut = match &args.lut {
        Some(path) => {
            if variant != Formulation::Half {
                return Err(Error::InvalidParams(
                    "--lut applies to --variant half only".to_string(),
                ));
            }
            Some(VoigtLut::load(path)?)
        }
        None => None,
    };

    let spectrum =
        transform::spectrum_of_fn(|t| source.eval(t), params, &grid, variant, lut.as_ref())?;
    let rows = densify_rows(&spectrum.nu_grid, &spectrum.even_part, &spectrum.odd_part, args.densify);

    let output = if csv {
        let mut text = String::from("nu,re,im\n");
        for (nu, re, im) in &rows {
            text.push_str(&format!("{nu:.16e},{re:.16e},{im:.16e}\n"));
        }
        text
    } else {
        let json = serde_json::json!({
            "params": {"h": params.step, "c": params.width, "N": params.half_count},
            "variant": variant.name(),
            "nu": rows.iter().map(|r| r.0).collect::<Vec<_>>(),
            "re": rows.iter().map(|r| r.1).collect::<Vec<_>>(),
            "im": rows.iter().map(|r| r.2).collect::<Vec<_>>(),
        });
        format!("{json:#}\n")
    };
    fs::write(&args.out, output)?;
    println!("wrote {} rows to {}", rows.len(), args.out.display());
    Ok(())
}

/// Expand each grid interval into `factor` pieces by linear interpolation.
fn densify_rows(
    nu: &[f64],
    re: &[f64],
    im: &[f64],
    factor: usize,
) -> Vec<(f64, f64, f64)> {
    if factor <= 1 || nu.len() < 2 {
        return nu
            .iter()
            .zip(re)
            .zip(im)
            .map(|((&a, &b), &c)| (a, b, c))
            .collect();
    }
    let mut rows = Vec::with_capacity((nu.len() - 1) * factor + 1);
    for i in 0..nu.len() - 1 {
        for k in 0..factor {
            let frac = k as f64 / factor as f64;
            rows.push((
                nu[i] * (1.0 - frac) + nu[i + 1] * frac,
                re[i] * (1.0 - frac) + re[i + 1] * frac,
                im[i] * (1.0 - frac) + im[i + 1] * frac,
            ));
        }
    }
    rows.push((nu[nu.len() - 1], re[re.len() - 1], im[im.len() - 1]));
    rows
}

/// One comparison curve of a report.
struct Curve {
    label: String,
    points: Vec<f64>,
    approx: Vec<f64>,
    reference: Vec<f64>,
}

impl Curve {
    fn max_abs_diff(&self) -> f64 {
        self.approx
            .iter()
            .zip(&self.reference)
            .map(|(a, r)| (a - r).abs())
            .fold(0.0, f64::max)
    }

    fn max_rel_err(&self, floor: f64) -> Option<f64> {
        let mut max: Option<f64> = None;
        for (a, r) in self.approx.iter().zip(&self.reference) {
            if let Some(eps) = transform::relative_error(*a, *r, floor) {
                let eps = eps.abs();
                max = Some(max.map_or(eps, |m| m.max(eps)));
            }
        }
        max
    }
}

/// Transform-versus-closed-form curve for one channel.
fn transform_curve(
    label: &str,
    id: TestFunction,
    formulation: Formulation,
    params: FitParams,
    grid: &[f64],
) -> Result<Curve> {
    let parity = id
        .parity()
        .ok_or_else(|| Error::UnsupportedId(id.name().to_string()))?;
    let spectrum = transform::spectrum_of_fn(|t| id.eval(t), params, grid, formulation, None)?;
    let mut approx = Vec::with_capacity(grid.len());
    let mut reference = Vec::with_capacity(grid.len());
    for (idx, &nu) in grid.iter().enumerate() {
        let exact = id.exact_ft(nu)?;
        match parity {
            Parity::Even => {
                approx.push(spectrum.even_part[idx]);
                reference.push(exact.re);
            }
            Parity::Odd => {
                approx.push(spectrum.odd_part[idx]);
                reference.push(exact.im);
            }
        }
    }
    Ok(Curve {
        label: label.to_string(),
        points: grid.to_vec(),
        approx,
        reference,
    })
}

/// Series-expansion curves: the windowed cosine/sine channels against the
/// two terms of the composite reference.
fn series_curves(params: FitParams, t_grid: &[f64], split: bool) -> Result<Vec<Curve>> {
    let spectrum_fn = |nu: f64| TestFunction::U.exact_ft(nu).expect("closed form");
    if split {
        let mut even = Curve {
            label: "even".to_string(),
            points: t_grid.to_vec(),
            approx: Vec::new(),
            reference: Vec::new(),
        };
        let mut odd = Curve {
            label: "odd".to_string(),
            points: t_grid.to_vec(),
            approx: Vec::new(),
            reference: Vec::new(),
        };
        for &t in t_grid {
            let (cos_part, sin_part) = transform::inverse_series_parts(spectrum_fn, &params, t)?;
            even.approx.push(cos_part);
            even.reference.push(TestFunction::GEven.exact_ft(t)?.re);
            odd.approx.push(sin_part);
            odd.reference.push(-TestFunction::GOdd.exact_ft(t)?.im);
        }
        Ok(vec![even, odd])
    } else {
        let mut curve = Curve {
            label: "u".to_string(),
            points: t_grid.to_vec(),
            approx: Vec::new(),
            reference: Vec::new(),
        };
        for &t in t_grid {
            curve.approx.push(transform::inverse_series(spectrum_fn, &params, t)?);
            curve.reference.push(TestFunction::U.eval(t));
        }
        Ok(vec![curve])
    }
}

fn run_report(args: ReportArgs) -> Result<()> {
    let csv = parse_format(&args.format)?;
    let curves = match args.preset.as_deref() {
        Some("fig3") | Some("fig4") => {
            let params = FitParams::new(0.02, 0.025, 25)?;
            let grid = transform::default_nu_grid();
            vec![
                transform_curve("even", TestFunction::Rect, Formulation::Half, params, &grid)?,
                transform_curve("odd", TestFunction::Sawtooth, Formulation::Half, params, &grid)?,
            ]
        }
        Some("fig6") => {
            let params = FitParams::new(0.004, 0.0045, 30)?;
            let grid = transform::nu_grid(-60.0, 60.0, 0.25)?;
            vec![
                transform_curve("even", TestFunction::GEven, Formulation::Half, params, &grid)?,
                transform_curve("odd", TestFunction::GOdd, Formulation::Half, params, &grid)?,
            ]
        }
        Some("fig7") => {
            let grid = transform::nu_grid(-60.0, 60.0, 0.25)?;
            vec![
                transform_curve(
                    "even_c0.001",
                    TestFunction::GEven,
                    Formulation::Combined,
                    FitParams::new(0.004, 0.001, 30)?,
                    &grid,
                )?,
                transform_curve(
                    "even_c0.002",
                    TestFunction::GEven,
                    Formulation::Combined,
                    FitParams::new(0.004, 0.002, 30)?,
                    &grid,
                )?,
            ]
        }
        Some("fig9") => {
            let t_grid = transform::nu_grid(-10.0, 10.0, 0.01)?;
            series_curves(FitParams::new(0.004, 0.004, 30)?, &t_grid, false)?
        }
        Some("fig10") => {
            let t_grid = transform::nu_grid(-10.0, 10.0, 0.01)?;
            series_curves(FitParams::new(0.0008, 0.0008, 185)?, &t_grid, true)?
        }
        Some(other) => {
            return Err(Error::InvalidParams(format!(
                "unknown report preset {other:?}"
            )))
        }
        None => {
            let id: TestFunction = args
                .builtin
                .as_deref()
                .ok_or_else(|| {
                    Error::InvalidParams("--preset or --builtin is required".to_string())
                })?
                .parse()?;
            let variant: Formulation = args
                .variant
                .as_deref()
                .ok_or_else(|| Error::InvalidParams("--variant is required".to_string()))?
                .parse()?;
            let params = FitParams::new(
                args.h.ok_or_else(|| Error::InvalidParams("--h is required".to_string()))?,
                args.c.ok_or_else(|| Error::InvalidParams("--c is required".to_string()))?,
                args.n.ok_or_else(|| Error::InvalidParams("--N is required".to_string()))?,
            )?;
            let grid = args.grid.build()?;
            vec![transform_curve(id.name(), id, variant, params, &grid)?]
        }
    };

    if let Some(path) = &args.out {
        let output = if csv {
            render_report_csv(&curves, args.rel_floor)
        } else {
            render_report_json(&curves, args.rel_floor)
        };
        fs::write(path, output)?;
    }

    for curve in &curves {
        println!("max_abs_diff {} {:.6e}", curve.label, curve.max_abs_diff());
        if let Some(eps) = curve.max_rel_err(args.rel_floor) {
            println!("max_rel_err {} {:.6e}", curve.label, eps);
        }
    }
    Ok(())
}

fn render_report_csv(curves: &[Curve], rel_floor: f64) -> String {
    let mut text = String::from("channel,point,approx,reference,abs_diff,rel_err\n");
    for curve in curves {
        for i in 0..curve.points.len() {
            let (a, r) = (curve.approx[i], curve.reference[i]);
            let rel = transform::relative_error(a, r, rel_floor)
                .map(|v| format!("{v:.16e}"))
                .unwrap_or_default();
            text.push_str(&format!(
                "{},{:.16e},{a:.16e},{r:.16e},{:.16e},{rel}\n",
                curve.label,
                curve.points[i],
                (a - r).abs()
            ));
        }
    }
    text
}

fn render_report_json(curves: &[Curve], rel_floor: f64) -> String {
    let entries: Vec<_> = curves
        .iter()
        .map(|curve| {
            let rel: Vec<Option<f64>> = curve
                .approx
                .iter()
                .zip(&curve.reference)
                .map(|(a, r)| transform::relative_error(*a, *r, rel_floor))
                .collect();
            serde_json::json!({
                "label": curve.label,
                "points": curve.points,
                "approx": curve.approx,
                "reference": curve.reference,
                "max_abs_diff": curve.max_abs_diff(),
                "max_rel_err": curve.max_rel_err(rel_floor),
                "rel_err": rel,
            })
        })
        .collect();
    format!("{:#}\n", serde_json::json!({ "curves": entries }))
}
