//! `hardy`: command-line access to the hardy-core numerics.
//!
//! Exit codes: 0 success, 1 usage error, 2 numeric or domain error.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hardy_core::format::{format_sig, round_sig};
use hardy_core::hilbert::{oscillation_aware_order, DEFAULT_GS_TOL};
use hardy_core::plot::spiral_csv;
use hardy_core::zerofinder::{DEFAULT_STEP, DEFAULT_ZERO_TOL};
use hardy_core::*;
use serde_json::{json, Value};

mod parse;

use parse::{parse_box, parse_interval};

#[derive(Parser, Debug)]
#[command(name = "hardy", version, about = "Hardy Z, generalized Hardy functions and zero studies")]
struct Cli {
    /// Euler-Maclaurin direct-sum terms (default: max(20, ceil|t|))
    #[arg(long, global = true)]
    em_terms: Option<usize>,
    /// Gauss-Legendre order for interval integrals
    #[arg(long, global = true)]
    quad_order: Option<usize>,
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Output file, prefix or directory, depending on the subcommand
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Riemann-Siegel theta
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = ThetaArg::Exact)]
        mode: ThetaArg,
    },
    /// Hardy Z(t)
    Z {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = Method::Em)]
        method: Method,
    },
    /// Generalized Hardy Z(sigma, t) and its imaginary companion Y
    Gz {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Partial sums of the Dirichlet series as SVG and/or CSV
    Spiral {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Gram matrix, correlations and eigenvalues of {Z(sigma_k, .)}
    Gram(FamilyArgs),
    /// Gram-Schmidt over {Z(sigma_k, .)}, sampled as CSV
    Ortho {
        #[command(flatten)]
        family: FamilyArgs,
        /// Number of uniform sample points
        #[arg(long, default_value_t = 401)]
        samples: usize,
    },
    /// Legendre projection of Z(sigma, .) and polynomial zero comparison
    Polyfit {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, value_parser = parse_interval)]
        interval: (f64, f64),
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
    },
    /// Zeros of Z on an interval
    Zeros {
        #[arg(long, value_parser = parse_interval)]
        interval: (f64, f64),
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Consecutive zero pairs with small normalized gap
    Lehmer {
        #[arg(long, value_parser = parse_interval)]
        interval: (f64, f64),
        #[arg(long, default_value_t = 0.2)]
        threshold: f64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Argument-principle zero count of the Davenport-Heilbronn function
    DhScan {
        /// sigma_lo:sigma_hi:t_lo:t_hi
        #[arg(long = "box", value_parser = parse_box)]
        rect: (f64, f64, f64, f64),
        /// Contour points per side
        #[arg(long, default_value_t = 32)]
        n: usize,
    },
    /// Run the verification report; --out names the output directory
    Report {
        #[arg(long)]
        seed: Option<u64>,
        /// JSON run configuration; flags override its fields
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    sigmas: Vec<f64>,
    #[arg(long, value_parser = parse_interval, default_value = "10:50")]
    interval: (f64, f64),
    /// Quadrature order (overrides --quad-order)
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ThetaArg {
    Exact,
    Asym,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Rs,
    Em,
}

const JSON_DIGITS: usize = 12;
const TEXT_DIGITS: usize = 15;

/// Rounds every float in a JSON value to 12 significant digits.
fn rounded(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            json!(round_sig(n.as_f64().expect("f64 number"), JSON_DIGITS))
        }
        Value::Array(a) => Value::Array(a.into_iter().map(rounded).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, rounded(v))).collect()),
        other => other,
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    rounded(serde_json::to_value(v).expect("value serializes"))
}

fn num(x: f64) -> String {
    format_sig(x, TEXT_DIGITS)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

struct Ctx {
    cfg: EvalConfig,
    quad_order: Option<usize>,
    json: bool,
    out: Option<PathBuf>,
}

impl Ctx {
    /// Prints to stdout, or writes to --out when given.
    fn emit(&self, text: String) -> Result<()> {
        match &self.out {
            Some(path) => write_file(path, &text),
            None => {
                let mut stdout = std::io::stdout().lock();
                // a closed pipe is not an error worth reporting
                let _ = stdout.write_all(text.as_bytes());
                Ok(())
            }
        }
    }

    fn emit_json(&self, v: Value) -> Result<()> {
        let mut s = serde_json::to_string_pretty(&v).expect("json serializes");
        s.push('\n');
        self.emit(s)
    }
}

fn interval((a, b): (f64, f64)) -> Result<Interval> {
    Interval::new(a, b)
}

fn run(cli: Cli) -> Result<()> {
    let mut cfg = EvalConfig::default();
    if let Some(n) = cli.em_terms {
        cfg = cfg.with_em_terms(n);
    }
    cfg.validate()?;
    let ctx = Ctx { cfg, quad_order: cli.quad_order, json: cli.json, out: cli.out };
    match cli.command {
        Command::Theta { t, mode } => {
            let mode = match mode {
                ThetaArg::Exact => ThetaMode::Exact,
                ThetaArg::Asym => ThetaMode::asymptotic(),
            };
            let v = theta(t, mode)?;
            if ctx.json {
                ctx.emit_json(rounded(json!({ "t": t, "theta": v })))
            } else {
                ctx.emit(format!("{}\n", num(v)))
            }
        }
        Command::Z { t, method } => {
            let v = match method {
                Method::Rs => hardy_z_rs(t, &ctx.cfg)?,
                Method::Em => generalized_hardy(0.5, t, &ctx.cfg)?.z,
            };
            if ctx.json {
                let m = if matches!(method, Method::Rs) { "rs" } else { "em" };
                ctx.emit_json(rounded(json!({ "t": t, "method": m, "z": v })))
            } else {
                ctx.emit(format!("{}\n", num(v)))
            }
        }
        Command::Gz { sigma, t } => {
            let v = generalized_hardy(sigma, t, &ctx.cfg)?;
            if ctx.json {
                ctx.emit_json(rounded(json!({ "sigma": sigma, "t": t, "z": v.z, "y": v.y })))
            } else {
                ctx.emit(format!("{} {}\n", num(v.z), num(v.y)))
            }
        }
        Command::Spiral { sigma, t, n, svg, csv } => {
            let path = dirichlet_partial_sums(ComplexValue::new(sigma, t), n)?;
            if let Some(svg) = &svg {
                let style = SvgStyle { title: Some(format!("partial sums, s = {sigma} + {t}i")), ..SvgStyle::default() };
                emit_spiral_svg(&path, svg, &style)?;
            }
            if let Some(csv) = &csv {
                write_spiral_csv(&path, csv)?;
            }
            if svg.is_none() && csv.is_none() {
                ctx.emit(spiral_csv(&path))?;
            }
            Ok(())
        }
        Command::Gram(family) => {
            let order = family.order.or(ctx.quad_order).unwrap_or(256);
            let report = independence_report(&family.sigmas, interval(family.interval)?, order, &ctx.cfg)?;
            ctx.emit_json(to_json(&report))
        }
        Command::Ortho { family, samples } => {
            let iv = interval(family.interval)?;
            let order = family.order.or(ctx.quad_order).unwrap_or_else(|| oscillation_aware_order(&iv));
            let rule = gauss_legendre_rule(order, iv)?;
            let fs: Vec<SampledFunction> =
                family.sigmas.iter().map(|&s| SampledFunction::generalized_hardy(s, ctx.cfg)).collect();
            let gs = gram_schmidt(&fs, &rule, DEFAULT_GS_TOL)?;
            if samples < 2 {
                return Err(Error::Domain("need at least 2 samples".into()));
            }
            let ts: Vec<f64> = (0..samples).map(|k| iv.a + iv.length() * k as f64 / (samples - 1) as f64).collect();
            let columns = gs.iter().map(|g| g.sample(&ts)).collect::<Result<Vec<_>>>()?;
            let mut csv = String::from("t");
            for k in 1..=gs.len() {
                csv.push_str(&format!(",g{k}"));
            }
            csv.push('\n');
            for (i, t) in ts.iter().enumerate() {
                csv.push_str(&num(*t));
                for col in &columns {
                    csv.push(',');
                    csv.push_str(&num(col[i]));
                }
                csv.push('\n');
            }
            match &ctx.out {
                Some(prefix) => {
                    let mut name = prefix.as_os_str().to_owned();
                    name.push(".csv");
                    write_file(Path::new(&name), &csv)
                }
                None => ctx.emit(csv),
            }
        }
        Command::Polyfit { sigma, interval: iv, degrees } => {
            let f = SampledFunction::generalized_hardy(sigma, ctx.cfg);
            let study = zero_convergence_study(&f, interval(iv)?, &degrees)?;
            ctx.emit_json(to_json(&study))
        }
        Command::Zeros { interval: iv, step } => {
            let zeros = critical_line_zeros(interval(iv)?, step, DEFAULT_ZERO_TOL, &ctx.cfg)?;
            if ctx.json {
                ctx.emit_json(to_json(&zeros))
            } else {
                let mut s = String::new();
                for z in &zeros {
                    s.push_str(&format!("{}\n", num(z.location)));
                }
                ctx.emit(s)
            }
        }
        Command::Lehmer { interval: iv, threshold, step } => {
            let pairs = lehmer_scan(interval(iv)?, threshold, step, &ctx.cfg)?;
            if ctx.json {
                ctx.emit_json(to_json(&pairs))
            } else {
                let mut s = String::new();
                for p in &pairs {
                    s.push_str(&format!(
                        "{} {} gap={} peak={}\n",
                        num(p.t_low),
                        num(p.t_high),
                        format_sig(p.normalized_gap, 6),
                        format_sig(p.min_between, 6)
                    ));
                }
                ctx.emit(s)
            }
        }
        Command::DhScan { rect: (s0, s1, t0, t1), n } => {
            let rect = RectBox::new(s0, s1, t0, t1)?;
            let f = |s| davenport_heilbronn(s, &ctx.cfg);
            let count = argument_principle_count(f, rect, n)?;
            let doubled = argument_principle_count(f, rect, 2 * n)?;
            if ctx.json {
                ctx.emit_json(rounded(json!({
                    "box": rect, "n_per_side": n, "count": count, "count_doubled_resolution": doubled,
                })))
            } else {
                ctx.emit(format!("{count} (at doubled resolution: {doubled})\n"))
            }
        }
        Command::Report { seed, config } => {
            let mut rc = match &config {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.clone(), source })?;
                    serde_json::from_str::<RunConfig>(&text)
                        .map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?
                }
                None => RunConfig::default(),
            };
            if let Some(seed) = seed {
                rc.seed = seed;
            }
            if ctx.cfg.em_terms.is_some() {
                rc.eval.em_terms = ctx.cfg.em_terms;
            }
            if let Some(q) = ctx.quad_order {
                rc.quad_order = q;
            }
            let report = run_report(&rc)?;
            let dir = ctx.out.clone().unwrap_or_else(|| PathBuf::from("."));
            fs::create_dir_all(&dir).map_err(|source| Error::Io { path: dir.clone(), source })?;
            report.write(&dir)?;
            let mut stdout = std::io::stdout().lock();
            let _ = if ctx.json {
                stdout.write_all(report.to_json().as_bytes())
            } else {
                stdout.write_all(report.summary().as_bytes())
            };
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
