//! `ph-fiber`: barcodes of PL functions on the interval and the circle,
//! fiber-component membership, explicit in-fiber paths, component
//! enumeration and surface homotopy-type reports, with JSON in and out.
//!
//! Exit codes: 0 success, 2 malformed input, 3 domain errors (for example
//! `path` on functions in different components). Error details go to
//! standard error as JSON.

use clap::{Parser, Subcommand, ValueEnum};
use ph_fiber_core::error::Error as CoreError;
use ph_fiber_core::fiber_circle::{
    self, canonical_representative, enumerate_components, fiber_path, same_component_within,
    valid_shifts, CyclicClass,
};
use ph_fiber_core::fiber_interval::{
    self, canonical_representative_interval, contraction_path, enumerate_components_interval,
    same_component_interval_within,
};
use ph_fiber_core::generate;
use ph_fiber_core::num::{default_epsilon, format_rat, parse_rat, rat_to_f64, Rat};
use ph_fiber_core::persistence::{
    barcode, barcode_bruteforce, bottleneck_distance, minimal_oracle_resolution, Barcode,
};
use ph_fiber_core::pl::{DomainKind, PLFunction, Reparametrization};
use ph_fiber_core::surface::{circle_interval_report, fiber_homotopy_type, BoundaryTag, SurfaceSpec};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ph-fiber", version, about = "Persistence barcodes and fiber components of PL functions")]
struct Cli {
    /// Comparison tolerance for component tests; falls back to the
    /// PH_FIBER_EPSILON environment variable, then 1e-9. Use 0 for exact.
    #[arg(long, global = true)]
    epsilon: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Circle,
    Interval,
}

impl From<DomainArg> for DomainKind {
    fn from(d: DomainArg) -> DomainKind {
        match d {
            DomainArg::Circle => DomainKind::Circle,
            DomainArg::Interval => DomainKind::Interval,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the sublevel persistence barcode of a PL function.
    Barcode {
        file: PathBuf,
        /// Re-run the union-find oracle on a discretization and fail on mismatch.
        #[arg(long)]
        verify: bool,
        /// Oracle resolution (default: smallest admissible for the input).
        #[arg(long)]
        resolution: Option<usize>,
        /// Write sampled (t, f(t)) pairs as CSV to this file.
        #[arg(long)]
        emit_plot: Option<PathBuf>,
    },
    /// Exact bottleneck distance between two barcodes.
    Bottleneck { d1: PathBuf, d2: PathBuf },
    /// Decide whether two functions lie in the same fiber component.
    SameComponent {
        #[arg(long, value_enum)]
        domain: DomainArg,
        f: PathBuf,
        g: PathBuf,
        /// Prescribed boundary values `b0,b1` (interval only).
        #[arg(long)]
        boundary: Option<String>,
    },
    /// The monotone map phi with canonical . phi = f (circle).
    Reparam {
        file: PathBuf,
        /// Cyclic shift to use; defaults to the smallest valid one.
        #[arg(long)]
        shift: Option<usize>,
    },
    /// A straight-line lift path between two circle functions in one fiber.
    Path {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, default_value_t = 16)]
        steps: usize,
        /// Also write the result JSON to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check that the barcode is constant along the path.
        #[arg(long)]
        verify: bool,
        /// Write sampled (step, t, value) rows as CSV to this file.
        #[arg(long)]
        emit_plot: Option<PathBuf>,
    },
    /// Contract an interval function onto its canonical representative.
    Contract {
        file: PathBuf,
        #[arg(long, default_value_t = 16)]
        steps: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        emit_plot: Option<PathBuf>,
    },
    /// Enumerate the fiber components over a barcode.
    CountComponents {
        #[arg(long, value_enum, default_value = "circle")]
        domain: DomainArg,
        file: PathBuf,
        /// Prescribed boundary values `b0,b1` (interval only).
        #[arg(long)]
        boundary: Option<String>,
        /// Proceed even when endpoint values repeat.
        #[arg(long)]
        allow_repeated_endpoints: bool,
        /// Raise the complexity guard (default 10 pairs / bounded bars).
        #[arg(long)]
        limit: Option<usize>,
        /// Report the homotopy type per component instead of the full list.
        #[arg(long)]
        report: bool,
    },
    /// Saddle count and fiber homotopy type on a compact surface.
    SurfaceReport {
        /// Shortcut name (sphere, torus, projective-plane, klein-bottle,
        /// disk, annulus, mobius) or a path to a surface JSON file.
        #[arg(long)]
        surface: String,
        #[arg(long)]
        barcode: PathBuf,
        /// Override boundary tags, e.g. `min,max`.
        #[arg(long)]
        boundary_tags: Option<String>,
    },
    /// Canonical representative of the component containing f.
    Canonical {
        file: PathBuf,
        #[arg(long)]
        emit_plot: Option<PathBuf>,
    },
    /// Generate seeded random test data.
    Gen {
        #[arg(long, value_enum, default_value = "circle")]
        domain: DomainArg,
        /// What to generate.
        #[arg(long, value_enum, default_value = "function")]
        kind: GenKind,
        /// Number of (min, max) pairs (circle) or extrema (interval).
        #[arg(long, default_value_t = 2)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow flat segments when generating reparametrizations.
        #[arg(long)]
        allow_flat: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Function,
    Reparam,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        Failure { code: if e.is_input_error() { 2 } else { 3 }, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T, also_to: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("serialization is infallible");
    if let Some(path) = also_to {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
    }
    println!("{text}");
    Ok(())
}

fn parse_epsilon(cli: &Cli) -> Result<Rat, Failure> {
    let text = match &cli.epsilon {
        Some(t) => t.clone(),
        None => match std::env::var("PH_FIBER_EPSILON") {
            Ok(t) => t,
            Err(_) => return Ok(default_epsilon()),
        },
    };
    parse_rat(&text).map_err(|e| input_error(format!("--epsilon: {e}")))
}

fn parse_boundary(text: &str) -> Result<(Rat, Rat), Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(input_error("--boundary expects two comma-separated values".into()));
    }
    Ok((
        parse_rat(parts[0]).map_err(|e| input_error(e.to_string()))?,
        parse_rat(parts[1]).map_err(|e| input_error(e.to_string()))?,
    ))
}

/// CSV of sampled function values over 257 uniform parameters.
fn write_plot(path: &Path, functions: &[PLFunction]) -> Result<(), Failure> {
    let mut out = String::new();
    let multi = functions.len() > 1;
    out.push_str(if multi { "step,t,value\n" } else { "t,value\n" });
    for (step, f) in functions.iter().enumerate() {
        for i in 0..=256u32 {
            let t = Rat::new((i as i64).into(), 256.into());
            let v = f.eval(&t);
            if multi {
                out.push_str(&format!("{step},{},{}\n", rat_to_f64(&t), rat_to_f64(&v)));
            } else {
                out.push_str(&format!("{},{}\n", rat_to_f64(&t), rat_to_f64(&v)));
            }
        }
    }
    std::fs::write(path, out).map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct DistanceOut {
    distance: serde_json::Value,
}

#[derive(Serialize)]
struct SameOut {
    same: bool,
    shifts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct PathOut {
    path: Vec<PLFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_bottleneck: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct CountOut<T: Serialize> {
    count: usize,
    components: Vec<T>,
}

fn scalar_json(r: &Rat) -> serde_json::Value {
    let text = format_rat(r);
    if text.contains('/') {
        serde_json::Value::String(text)
    } else {
        serde_json::Value::Number(text.parse().expect("canonical decimal"))
    }
}

fn verify_path(path: &[PLFunction]) -> Result<serde_json::Value, Failure> {
    let reference = barcode(&path[0]);
    let mut worst = Rat::from_integer(0.into());
    for f in path {
        match bottleneck_distance(&barcode(f), &reference) {
            Some(d) => {
                if d > worst {
                    worst = d;
                }
            }
            None => {
                return Err(Failure {
                    code: 3,
                    message: "verification failed: barcode changed along the path".into(),
                })
            }
        }
    }
    Ok(scalar_json(&worst))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let eps = parse_epsilon(&cli)?;
    match cli.command {
        Command::Barcode { file, verify, resolution, emit_plot } => {
            let f: PLFunction = read_json(&file)?;
            let d = barcode(&f);
            if verify {
                let res = match resolution {
                    Some(r) => r,
                    None => minimal_oracle_resolution(&f)?,
                };
                let oracle = barcode_bruteforce(&f, res)?;
                if oracle != d {
                    return Err(Failure {
                        code: 3,
                        message: format!("verification failed: oracle at resolution {res} disagrees"),
                    });
                }
            }
            if let Some(plot) = emit_plot {
                write_plot(&plot, std::slice::from_ref(&f))?;
            }
            emit(&d, None)
        }
        Command::Bottleneck { d1, d2 } => {
            let a: Barcode = read_json(&d1)?;
            let b: Barcode = read_json(&d2)?;
            let distance = match bottleneck_distance(&a, &b) {
                Some(d) => scalar_json(&d),
                None => serde_json::Value::String("inf".into()),
            };
            emit(&DistanceOut { distance }, None)
        }
        Command::SameComponent { domain, f, g, boundary } => {
            let f: PLFunction = read_json(&f)?;
            let g: PLFunction = read_json(&g)?;
            let out = match DomainKind::from(domain) {
                DomainKind::Circle => {
                    if boundary.is_some() {
                        return Err(input_error("--boundary applies to the interval domain only".into()));
                    }
                    let r = same_component_within(&f, &g, &eps)?;
                    SameOut { same: r.same, shifts: r.shifts, reason: r.reason.map(|m| m.to_string()) }
                }
                DomainKind::Interval => {
                    let bound = boundary.as_deref().map(parse_boundary).transpose()?;
                    let same = same_component_interval_within(&f, &g, bound.as_ref(), &eps)?;
                    SameOut {
                        same,
                        shifts: Vec::new(),
                        reason: (!same).then(|| "sequence mismatch".to_string()),
                    }
                }
            };
            emit(&out, None)
        }
        Command::Reparam { file, shift } => {
            let f: PLFunction = read_json(&file)?;
            let class = CyclicClass::of(&f)?;
            let (seq, _) = f.extrema()?;
            let shifts = valid_shifts(&seq, class.normal_form());
            let shift = match shift {
                Some(s) => s,
                None => *shifts.first().expect("a function matches its own class"),
            };
            let phi = fiber_circle::reparametrization(&f, &class, shift)?;
            emit(&phi, None)
        }
        Command::Path { f, g, steps, output, verify, emit_plot } => {
            let f: PLFunction = read_json(&f)?;
            let g: PLFunction = read_json(&g)?;
            let path = fiber_path(&f, &g, steps)?;
            let max_bottleneck = verify.then(|| verify_path(&path)).transpose()?;
            if let Some(plot) = emit_plot {
                write_plot(&plot, &path)?;
            }
            emit(&PathOut { path, max_bottleneck }, output.as_deref())
        }
        Command::Contract { file, steps, output, verify, emit_plot } => {
            let f: PLFunction = read_json(&file)?;
            let path = contraction_path(&f, steps)?;
            let max_bottleneck = verify.then(|| verify_path(&path)).transpose()?;
            if let Some(plot) = emit_plot {
                write_plot(&plot, &path)?;
            }
            emit(&PathOut { path, max_bottleneck }, output.as_deref())
        }
        Command::CountComponents { domain, file, boundary, allow_repeated_endpoints, limit, report } => {
            let d: Barcode = read_json(&file)?;
            let domain = DomainKind::from(domain);
            if report {
                let summary = circle_interval_report(domain, &d, allow_repeated_endpoints)?;
                return emit(&summary, None);
            }
            match domain {
                DomainKind::Circle => {
                    if boundary.is_some() {
                        return Err(input_error("--boundary applies to the interval domain only".into()));
                    }
                    let mut opts = fiber_circle::EnumerateOptions {
                        allow_repeated_endpoints,
                        ..Default::default()
                    };
                    if let Some(limit) = limit {
                        opts.max_pairs = limit;
                    }
                    let comps = enumerate_components(&d, &opts)?;
                    emit(&CountOut { count: comps.len(), components: comps }, None)
                }
                DomainKind::Interval => {
                    let bound = boundary.as_deref().map(parse_boundary).transpose()?;
                    let mut opts = fiber_interval::EnumerateOptions {
                        allow_repeated_endpoints,
                        ..Default::default()
                    };
                    if let Some(limit) = limit {
                        opts.max_bounded = limit;
                    }
                    let comps = enumerate_components_interval(&d, bound.as_ref(), &opts)?;
                    emit(&CountOut { count: comps.len(), components: comps }, None)
                }
            }
        }
        Command::SurfaceReport { surface, barcode: barcode_path, boundary_tags } => {
            let d: Barcode = read_json(&barcode_path)?;
            let mut spec = if surface.ends_with(".json") || Path::new(&surface).exists() {
                read_json::<SurfaceSpec>(Path::new(&surface))?
            } else {
                SurfaceSpec::from_name(&surface)?
            };
            if let Some(tags) = boundary_tags {
                spec.boundary = tags
                    .split(',')
                    .map(|t| match t.trim().to_ascii_lowercase().as_str() {
                        "min" => Ok(BoundaryTag::Min),
                        "max" => Ok(BoundaryTag::Max),
                        other => Err(input_error(format!("boundary tag `{other}` is not min/max"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
            }
            let report = fiber_homotopy_type(&d, &spec)?;
            emit(&report, None)
        }
        Command::Canonical { file, emit_plot } => {
            let f: PLFunction = read_json(&file)?;
            let canonical = match (f.domain(), f.constant_value()) {
                (domain, Some(c)) => PLFunction::constant(domain, c.clone()),
                (DomainKind::Circle, None) => canonical_representative(&CyclicClass::of(&f)?),
                (DomainKind::Interval, None) => {
                    let (seq, _) = f.extrema()?;
                    canonical_representative_interval(&seq)
                }
            };
            if let Some(plot) = emit_plot {
                write_plot(&plot, std::slice::from_ref(&canonical))?;
            }
            emit(&canonical, None)
        }
        Command::Gen { domain, kind, pairs, seed, allow_flat, output } => {
            let mut rng = generate::rng_from_seed(seed);
            let pairs = pairs.max(1);
            match kind {
                GenKind::Function => {
                    let f = match DomainKind::from(domain) {
                        DomainKind::Circle => generate::random_circle_function(pairs, &mut rng),
                        DomainKind::Interval => generate::random_interval_function(pairs.max(2), &mut rng),
                    };
                    emit(&f, output.as_deref())
                }
                GenKind::Reparam => {
                    let phi: Reparametrization =
                        generate::random_reparametrization(DomainKind::from(domain), allow_flat, &mut rng);
                    emit(&phi, output.as_deref())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let err = serde_json::json!({ "error": failure.message });
            let _ = writeln!(std::io::stderr(), "{err}");
            ExitCode::from(failure.code)
        }
    }
}
