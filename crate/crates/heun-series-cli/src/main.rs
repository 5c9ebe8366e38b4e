//! Command-line front end for the convergence-domain and summation tools.
//!
//! Exit codes: 0 success, 2 invalid domain (`a = 0`), 3 excluded point of a
//! transformed local solution, 1 anything else.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use heun_series::{
    abs_boundary, diagonal_sum, direct_sum, heun_series_sum, pp_domain, rect_double_sum,
    region_scan, AbsRegion, CellClass, DomainStatus, Error, HeunParameters, MaierVariant,
    ProbeVerdict, ScaledReal, SumReport,
};

#[derive(Parser)]
#[command(
    name = "heun-series",
    about = "Convergence domains and partial-sum experiments for Heun-equation power series",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Convergence radii at a singularity parameter, and membership of a point.
    Domain {
        /// Singularity parameter a (nonzero).
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        /// Optional probe point x; adds membership booleans to the output.
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
    },
    /// Benchmark partial-sum tables over a fixed list of truncation orders N.
    ///
    /// Ids select the summation and evaluation point: 3 = single series at
    /// (a,x) = (0.8, 0.3); 4 = rectangular double series at (0.8, 0.3);
    /// 5 = rectangular double series at (0.8, 0.7), printed in scientific
    /// notation (it grows past 10^584); 6 = single series at (0.8, 0.7).
    Table {
        /// Table id.
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=6))]
        id: u8,
        /// Comma-separated truncation orders (default: 10,50,100,200,…,1000).
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<u32>>,
    },
    /// Classify a rectangle of (a, x) cells against both convergence domains.
    ///
    /// Emitted class codes: 0 outside, 1 characteristic-root domain only,
    /// 2 both domains, 3 undefined (cells touching a=0 or a=-1).
    Region {
        /// Range of a as lo:hi.
        #[arg(long, default_value = "-3:3", allow_hyphen_values = true)]
        a_range: String,
        /// Range of x as lo:hi.
        #[arg(long, default_value = "-1.5:1.5", allow_hyphen_values = true)]
        x_range: String,
        /// Grid resolution as AxX cells.
        #[arg(long, default_value = "300x300")]
        res: String,
    },
    /// Partial sums at increasing N with a convergence verdict.
    Sum {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Largest truncation order.
        #[arg(long)]
        n: u32,
        /// Summation route for the asymptotic recurrence.
        #[arg(long, value_enum, default_value = "direct", conflicts_with = "heun")]
        method: Method,
        /// Sum the full Heun series instead (uses --q/--alpha/…/--lambda).
        #[arg(long)]
        heun: bool,
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        q: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        delta: f64,
        /// Indicial exponent for --heun.
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        lambda: f64,
    },
    /// Convergence condition and transformed parameters of a local solution.
    Maier {
        /// Variant id: a1a, a1b, a2a, a2b, a3, a4a, a4b, a5, a6.
        #[arg(long)]
        variant: String,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        q: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        delta: f64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Double,
    Diagonal,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.kind() == clap::error::ErrorKind::DisplayHelp
            || e.kind() == clap::error::ErrorKind::DisplayVersion =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(rendered) => {
            if let Some(path) = &cli.output {
                if let Err(e) = fs::write(path, rendered) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Lib(Error::NoSolutionAtAZero) => 2,
        CliError::Lib(Error::ExcludedPoint { .. })
        | CliError::Lib(Error::TransformedSingularityZero { .. }) => 3,
        _ => 1,
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Domain { a, x } => cmd_domain(*a, *x, cli.format.unwrap_or(Format::Pretty)),
        Command::Table { id, n_list } => cmd_table(
            *id,
            n_list.clone().unwrap_or_else(default_n_list),
            cli.format.unwrap_or(Format::Csv),
        ),
        Command::Region {
            a_range,
            x_range,
            res,
        } => cmd_region(a_range, x_range, res, cli.format.unwrap_or(Format::Csv)),
        Command::Sum {
            a,
            x,
            n,
            method,
            heun,
            q,
            alpha,
            beta,
            gamma,
            delta,
            lambda,
        } => {
            let format = cli.format.unwrap_or(Format::Pretty);
            if *heun {
                cmd_sum_heun(
                    HeunParameters::new(*a, *q, *alpha, *beta, *gamma, *delta)?,
                    *lambda,
                    *x,
                    *n,
                    format,
                )
            } else {
                cmd_sum(*a, *x, *n, *method, format)
            }
        }
        Command::Maier {
            variant,
            a,
            x,
            q,
            alpha,
            beta,
            gamma,
            delta,
        } => cmd_maier(
            variant,
            *a,
            *x,
            (*q, *alpha, *beta, *gamma, *delta),
            cli.format.unwrap_or(Format::Pretty),
        ),
    }
}

fn default_n_list() -> Vec<u32> {
    let mut list = vec![10, 50];
    list.extend((1..=10).map(|k| k * 100));
    list
}

fn status_str(status: DomainStatus) -> &'static str {
    match status {
        DomainStatus::Ok => "ok",
        DomainStatus::NoSolutionAZero => "no_solution_a_zero",
        DomainStatus::PpIndeterminateAMinusOne => "pp_indeterminate_a_minus_one",
    }
}

fn abs_region_limits(region: &AbsRegion) -> (Option<f64>, Option<f64>) {
    match region {
        AbsRegion::NoSolution => (None, None),
        AbsRegion::Radius(r) => (Some(-r), Some(*r)),
        AbsRegion::Interval { lo, hi } => (Some(*lo), Some(*hi)),
    }
}

fn cmd_domain(a: f64, x: Option<f64>, format: Format) -> Result<String, CliError> {
    if a == 0.0 {
        return Err(Error::NoSolutionAtAZero.into());
    }
    let pp = pp_domain(a);
    let region = abs_boundary(a);
    let (abs_lo, abs_hi) = abs_region_limits(&region);
    let membership = x.map(|x| {
        (
            pp.radius.is_some_and(|r| x.abs() < r),
            region.contains(x),
        )
    });
    let out = match format {
        Format::Pretty => {
            let mut s = format!("a = {a}\n");
            s += &format!("status = {}\n", status_str(pp.status));
            s += &format!(
                "pp_radius = {}\n",
                pp.radius.map_or("none".into(), |r| r.to_string())
            );
            s += &match region {
                AbsRegion::NoSolution => "abs_region = none\n".to_string(),
                AbsRegion::Radius(r) => format!("abs_region = |x| < {r}\n"),
                AbsRegion::Interval { lo, hi } => format!("abs_region = {lo} < x < {hi}\n"),
            };
            if let (Some(x), Some((in_pp, in_abs))) = (x, membership) {
                s += &format!("x = {x}\nin_pp = {in_pp}\nin_abs = {in_abs}\n");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("a,x,pp_radius,abs_lo,abs_hi,in_pp,in_abs,status\n");
            let opt = |v: Option<f64>| v.map_or(String::new(), |v| v.to_string());
            let mem = |v: Option<bool>| v.map_or(String::new(), |v| v.to_string());
            s += &format!(
                "{a},{},{},{},{},{},{},{}\n",
                opt(x),
                opt(pp.radius),
                opt(abs_lo),
                opt(abs_hi),
                mem(membership.map(|m| m.0)),
                mem(membership.map(|m| m.1)),
                status_str(pp.status)
            );
            s
        }
        Format::Json => {
            let value = json!({
                "a": a,
                "x": x,
                "pp_radius": pp.radius,
                "abs_lo": abs_lo,
                "abs_hi": abs_hi,
                "in_pp": membership.map(|m| m.0),
                "in_abs": membership.map(|m| m.1),
                "status": status_str(pp.status),
            });
            format!("{value}\n")
        }
    };
    Ok(out)
}

/// Fixed-point with 12 decimals for values of ordinary size, otherwise
/// scientific with 12 significant digits.
fn format_value(v: ScaledReal) -> String {
    if !v.is_zero() && (v.exp2() < -14 || v.exp2() > 53) {
        v.to_sci(12)
    } else {
        format!("{:.12}", v.to_f64())
    }
}

fn cmd_table(id: u8, n_list: Vec<u32>, format: Format) -> Result<String, CliError> {
    let rows: Result<Vec<(u32, String)>, Error> = n_list
        .iter()
        .map(|&n| {
            let value = match id {
                3 => direct_sum(0.8, 0.3, n)?,
                4 => rect_double_sum(0.8, 0.3, n)?,
                5 => rect_double_sum(0.8, 0.7, n)?,
                6 => direct_sum(0.8, 0.7, n)?,
                _ => unreachable!("clap restricts the id range"),
            };
            let rendered = if id == 5 {
                value.to_sci(6)
            } else {
                format!("{:.12}", value.to_f64())
            };
            Ok((n, rendered))
        })
        .collect();
    let rows = rows?;
    let out = match format {
        Format::Csv => {
            let mut s = String::from("N,value\n");
            for (n, v) in &rows {
                s += &format!("{n},{v}\n");
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("table {id}\n{:<6} value\n", "N");
            for (n, v) in &rows {
                s += &format!("{n:<6} {v}\n");
            }
            s
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, v)| json!({"N": n, "value": v}))
                .collect();
            format!("{}\n", json!(items))
        }
    };
    Ok(out)
}

fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let err = || CliError::Usage(format!("malformed range {s:?}, expected lo:hi with lo < hi"));
    let (lo, hi) = s.split_once(':').ok_or_else(err)?;
    let lo: f64 = lo.trim().parse().map_err(|_| err())?;
    let hi: f64 = hi.trim().parse().map_err(|_| err())?;
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Err(err());
    }
    Ok((lo, hi))
}

fn parse_res(s: &str) -> Result<(usize, usize), CliError> {
    let err = || CliError::Usage(format!("malformed resolution {s:?}, expected AxX"));
    let (ra, rx) = s.split_once(['x', 'X']).ok_or_else(err)?;
    let ra: usize = ra.trim().parse().map_err(|_| err())?;
    let rx: usize = rx.trim().parse().map_err(|_| err())?;
    if ra == 0 || rx == 0 {
        return Err(err());
    }
    Ok((ra, rx))
}

fn cmd_region(a_range: &str, x_range: &str, res: &str, format: Format) -> Result<String, CliError> {
    let (a_min, a_max) = parse_range(a_range)?;
    let (x_min, x_max) = parse_range(x_range)?;
    let (res_a, res_x) = parse_res(res)?;
    let grid = region_scan(a_min, a_max, x_min, x_max, res_a, res_x);
    let out = match format {
        Format::Csv => grid.to_csv(),
        Format::Json => format!("{}\n", grid.to_json()),
        Format::Pretty => {
            let mut counts = [0usize; 4];
            for c in grid.cells() {
                counts[c.code() as usize] += 1;
            }
            format!(
                "{res_a}x{res_x} cells over a in [{a_min}, {a_max}], x in [{x_min}, {x_max}]\n\
                 outside = {}\npp_only = {}\nboth = {}\nundefined = {}\n",
                counts[CellClass::Outside.code() as usize],
                counts[CellClass::PpOnly.code() as usize],
                counts[CellClass::Both.code() as usize],
                counts[CellClass::Undefined.code() as usize],
            )
        }
    };
    Ok(out)
}

/// Truncation orders at which partial sums are recorded: every order up to
/// 15, otherwise twelve roughly even checkpoints ending at `n`.
fn checkpoints(n: u32) -> Vec<u32> {
    if n <= 15 {
        (0..=n).collect()
    } else {
        let mut list: Vec<u32> = (1..=12u32).map(|i| (i as u64 * n as u64 / 12) as u32).collect();
        list.dedup();
        list
    }
}

fn render_report(report: &SumReport, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(12),
        Format::Json => {
            let partials: Vec<_> = report
                .partials()
                .iter()
                .map(|(n, v)| json!({"N": n, "value": v.to_sci(12)}))
                .collect();
            let verdict = match report.verdict() {
                ProbeVerdict::Converged { value, at_n } => json!({
                    "verdict": "converged",
                    "value": value.to_sci(12),
                    "at_n": at_n,
                }),
                ProbeVerdict::Diverging { per_step_ratio } => json!({
                    "verdict": "diverging",
                    "per_step_ratio": per_step_ratio,
                }),
                ProbeVerdict::Indeterminate => json!({"verdict": "indeterminate"}),
            };
            format!("{}\n", json!({"partials": partials, "verdict": verdict}))
        }
        Format::Pretty => {
            let mut s = format!("{:<6} value\n", "N");
            for (n, v) in report.partials() {
                s += &format!("{n:<6} {}\n", format_value(*v));
            }
            s += &match report.verdict() {
                ProbeVerdict::Converged { value, at_n } => {
                    format!("verdict: converged to {} at N={at_n}\n", format_value(*value))
                }
                ProbeVerdict::Diverging { per_step_ratio } => {
                    format!("verdict: diverging (per-step ratio {per_step_ratio:.4})\n")
                }
                ProbeVerdict::Indeterminate => "verdict: indeterminate\n".to_string(),
            };
            s
        }
    }
}

fn cmd_sum(a: f64, x: f64, n: u32, method: Method, format: Format) -> Result<String, CliError> {
    let partials: Result<Vec<(u64, ScaledReal)>, Error> = checkpoints(n)
        .into_iter()
        .map(|k| {
            let v = match method {
                Method::Direct => direct_sum(a, x, k)?,
                Method::Double => rect_double_sum(a, x, k)?,
                Method::Diagonal => diagonal_sum(a, x, k)?,
            };
            Ok((k as u64, v))
        })
        .collect();
    let report = SumReport::new(partials?)?;
    Ok(render_report(&report, format))
}

fn cmd_sum_heun(
    params: HeunParameters,
    lambda: f64,
    x: f64,
    n: u32,
    format: Format,
) -> Result<String, CliError> {
    let partials: Result<Vec<(u64, Complex64)>, Error> = checkpoints(n)
        .into_iter()
        .map(|k| Ok((k as u64, heun_series_sum(&params, lambda, x, k)?)))
        .collect();
    let partials = partials?;
    let scale = partials.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max);
    let real = partials
        .iter()
        .all(|(_, v)| v.im.abs() <= 1e-12 * scale.max(1.0));
    if !real {
        return Err(CliError::Usage(
            "the requested series is complex-valued (x < 0 with a fractional exponent); \
             no probe verdict is defined for it"
                .to_string(),
        ));
    }
    let report = SumReport::new(
        partials
            .into_iter()
            .map(|(n, v)| (n, ScaledReal::from(v.re)))
            .collect(),
    )?;
    Ok(render_report(&report, format))
}

fn show_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        z.re.to_string()
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn cmd_maier(
    variant: &str,
    a: f64,
    x: f64,
    (q, alpha, beta, gamma, delta): (f64, f64, f64, f64, f64),
    format: Format,
) -> Result<String, CliError> {
    let variant: MaierVariant = variant.parse().map_err(CliError::Usage)?;
    let params = HeunParameters::new(a, q, alpha, beta, gamma, delta)?;
    let condition = heun_series::maier_condition(variant, a, x)?;
    let (transformed, map) = heun_series::maier_transformed_params(variant, &params)?;
    let t_value = map.apply(x);
    let fields: [(&str, Complex64); 6] = [
        ("a", transformed.a()),
        ("q", transformed.q()),
        ("alpha", transformed.alpha()),
        ("beta", transformed.beta()),
        ("gamma", transformed.gamma()),
        ("delta", transformed.delta()),
    ];
    let out = match format {
        Format::Pretty => {
            let mut s = format!("variant = {variant}\ncondition = {condition}\n");
            for (name, v) in fields {
                s += &format!("{name}' = {}\n", show_complex(v));
            }
            s += &format!("epsilon' = {}\n", show_complex(transformed.epsilon()));
            s += &format!(
                "t = {} -> t(x) = {}\n",
                map.description(),
                show_complex(t_value)
            );
            s += &format!("prefactor = {}\n", variant.prefactor());
            s
        }
        Format::Csv => {
            let mut s = String::from(
                "variant,a,x,condition,a_prime,q_prime,alpha_prime,beta_prime,gamma_prime,delta_prime,t\n",
            );
            s += &format!(
                "{variant},{a},{x},{condition},{},{},{},{},{},{},{}\n",
                show_complex(fields[0].1),
                show_complex(fields[1].1),
                show_complex(fields[2].1),
                show_complex(fields[3].1),
                show_complex(fields[4].1),
                show_complex(fields[5].1),
                show_complex(t_value)
            );
            s
        }
        Format::Json => {
            let value = json!({
                "variant": variant.id(),
                "a": a,
                "x": x,
                "condition": condition,
                "transformed": {
                    "a": show_complex(fields[0].1),
                    "q": show_complex(fields[1].1),
                    "alpha": show_complex(fields[2].1),
                    "beta": show_complex(fields[3].1),
                    "gamma": show_complex(fields[4].1),
                    "delta": show_complex(fields[5].1),
                },
                "t": map.description(),
                "t_of_x": show_complex(t_value),
                "prefactor": variant.prefactor(),
            });
            format!("{value}\n")
        }
    };
    Ok(out)
}
