use std::process::ExitCode;

use adtwist_core::checks::{self, CheckOptions, Suite};
use adtwist_core::laurent::{format_complex, parse_complex};
use adtwist_core::report::{torus_report, twist_reports, Report, RootSelector, Status};
use adtwist_core::representations::{TorusRepParams, DEFAULT_CONJ_PARAM};
use adtwist_core::{ComplexScalar, Error, LaurentPoly, RationalFunction, DEFAULT_TOL};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_PARAMETER: u8 = 2;
const EXIT_COMPARISON: u8 = 3;

/// Twisted Alexander polynomials with the adjoint action and non-abelian
/// torsion for torus and twist knots, checked against closed forms.
#[derive(Parser)]
#[command(name = "adtwist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Torus knot T(p, q) on the component (k, l).
    Torus {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
        /// Conjugation parameter v, as a complex literal.
        #[arg(long, allow_hyphen_values = true)]
        conj: Option<String>,
        /// Generator column to remove (1-based).
        #[arg(long)]
        column: Option<usize>,
        #[arg(long, value_enum, default_value = "pretty")]
        out: OutFormat,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Twist knot J(2, 2n) at the Riley roots for a given s.
    Twist {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// `all`, or a 1-based root index.
        #[arg(long, default_value = "all")]
        root: String,
        #[arg(long)]
        column: Option<usize>,
        #[arg(long, value_enum, default_value = "pretty")]
        out: OutFormat,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Run the comparison grids.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Push every representation off the relation variety (negative control).
        #[arg(long, hide = true)]
        perturb: Option<f64>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Parameter(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(_)
            | Error::ComplexLiteral(_)
            | Error::Reducible(_)
            | Error::DimensionMismatch(_)
            | Error::RileyResidual(_) => Failure::Parameter(e.to_string()),
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_COMPARISON),
        Err(Failure::Parameter(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARAMETER)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_COMPARISON)
        }
    }
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::Parameter(format!("tolerance {tol} must be positive")))
    }
}

fn column_index(column: Option<usize>) -> Result<Option<usize>, Failure> {
    match column {
        Some(0) => Err(Failure::Parameter("columns are numbered from 1".into())),
        c => Ok(c.map(|c| c - 1)),
    }
}

fn complex_arg(text: &str) -> Result<ComplexScalar, Failure> {
    Ok(parse_complex(text)?)
}

fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Torus { p, q, k, l, conj, column, out, tol } => {
            check_tol(tol)?;
            let v = conj.as_deref().map(complex_arg).transpose()?.unwrap_or(DEFAULT_CONJ_PARAM);
            let params = TorusRepParams::new(p, q, k, l, v)?;
            let report = torus_report(&params, column_index(column)?, tol)?;
            emit(std::slice::from_ref(&report), out, false)?;
            Ok(report.passed())
        }
        Command::Twist { n, s, root, column, out, tol } => {
            check_tol(tol)?;
            let s = complex_arg(&s)?;
            let selector = match root.as_str() {
                "all" => RootSelector::All,
                idx => match idx.parse::<usize>() {
                    Ok(i) if i >= 1 => RootSelector::Index(i - 1),
                    _ => return Err(Failure::Parameter(format!("bad root selector {idx:?}"))),
                },
            };
            let reports = twist_reports(n, s, selector, column_index(column)?, tol)?;
            emit(&reports, out, true)?;
            Ok(reports.iter().all(Report::passed))
        }
        Command::Check { suite, tol, perturb, json } => {
            check_tol(tol)?;
            let suite: Suite = suite.parse()?;
            let summaries = checks::run(suite, &CheckOptions { tol, perturb });
            if json {
                println!("{}", serde_json::to_string_pretty(&summaries).map_err(json_failure)?);
            } else {
                for s in &summaries {
                    println!("{s}");
                }
            }
            Ok(summaries.iter().all(|s| s.passed()))
        }
    }
}

fn json_failure(e: serde_json::Error) -> Failure {
    Failure::Numerical(e.to_string())
}

fn emit(reports: &[Report], out: OutFormat, as_array: bool) -> Result<(), Failure> {
    match out {
        OutFormat::Json if as_array => println!("{}", serde_json::to_string_pretty(reports).map_err(json_failure)?),
        OutFormat::Json => println!("{}", serde_json::to_string_pretty(&reports[0]).map_err(json_failure)?),
        OutFormat::Csv => {
            println!("{}", Report::CSV_HEADER);
            for r in reports {
                println!("{}", r.csv_row());
            }
        }
        OutFormat::Pretty => {
            for r in reports {
                print_pretty(r);
            }
        }
    }
    Ok(())
}

fn print_pretty(r: &Report) {
    let rep = &r.representation;
    match (&rep.torus, &rep.twist) {
        (Some(t), _) => println!(
            "torus knot T({}, {}), component (k, l) = ({}, {}), v = {}, tr rho(meridian) = {}",
            r.knot.p.unwrap_or_default(),
            r.knot.q.unwrap_or_default(),
            t.k,
            t.l,
            format_complex(t.conj_param),
            format_complex(t.meridian_trace)
        ),
        (_, Some(t)) => {
            println!(
                "twist knot J(2, {}), s = {}, root {}: u = {}",
                2 * r.knot.n.unwrap_or_default(),
                format_complex(t.s),
                t.root_index,
                format_complex(t.u)
            );
            println!(
                "  gamma = {}, x^2 = {}, y = {}",
                format_complex(t.gamma),
                format_complex(t.x_squared),
                format_complex(t.y)
            );
        }
        _ => {}
    }
    println!("  removed column: {}", rep.column);
    let show = |label: &str, f: &RationalFunction| {
        println!("  {label}: ({}) / ({})", poly_display(&f.shifted_num()), poly_display(f.den()));
    };
    show("Delta pipeline", &r.delta_pipeline);
    if let Some(closed) = &r.delta_closed {
        show("Delta closed  ", closed);
    }
    if let Some(u) = r.unit {
        println!("  unit: {}t^{}", if u.sign < 0 { "-" } else { "+" }, u.power);
    } else if r.delta_closed.is_some() {
        println!("  unit: not found");
    }
    let torsion = r.torsion.map(scalar_display).unwrap_or_else(|| "undefined".into());
    match r.torsion_closed {
        Some(c) => println!("  torsion: {torsion} (closed form {})", scalar_display(c)),
        None => println!("  torsion: {torsion}"),
    }
    let res = &r.residuals;
    print!("  residuals: relation {:.2e}, fox {:.2e}", res.relation, res.fox_identity);
    if let Some(x) = res.riley {
        print!(", riley {x:.2e}");
    }
    if let Some(x) = res.delta {
        print!(", delta {x:.2e}");
    }
    if let Some(x) = res.torsion_relative {
        print!(", torsion {x:.2e}");
    }
    println!();
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Singular => "closed form singular here",
    };
    println!("  status: {status}");
}

/// Display cutoff for coefficients, relative to the largest one.
const DISPLAY_CUTOFF: f64 = 1e-10;

fn scalar_display(z: ComplexScalar) -> String {
    let clean = |x: f64, scale: f64| if x.abs() <= DISPLAY_CUTOFF * scale { 0.0 } else { x };
    let scale = z.norm().max(1.0);
    let (re, im) = (clean(z.re, scale), clean(z.im, scale));
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re:.10}").trim_end_matches('0').trim_end_matches('.').to_string(),
        (true, false) => format!("{im:.10}i"),
        (false, false) => format!("({re:.10}{im:+.10}i)"),
    }
}

fn poly_display(p: &LaurentPoly) -> String {
    let scale = p.norm_inf();
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > DISPLAY_CUTOFF * scale)
        .map(|(i, &c)| {
            let deg = p.min_degree() + i as i64;
            let coeff = scalar_display(c);
            match deg {
                0 => coeff,
                1 => format!("{coeff} t"),
                _ => format!("{coeff} t^{deg}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}
