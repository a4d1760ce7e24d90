//! Command-line interface.
//!
//! One thin binary with six subcommands: `roots`, `member`, `radius`,
//! `family`, `figure1`, `verify`. Output is human-readable text by
//! default; `--json` switches every command to machine-readable JSON.
//! Randomized suites take an explicit `--seed` (default 42) and identical
//! invocations produce byte-identical JSON.
//!
//! Exit codes: 0 success (member / all checks passed), 1 semantic negative
//! (non-member / failed check), 2 usage or input error, 3 partial result
//! (a pole stopped a radius scan).

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bounds;
use crate::error::Error;
use crate::geometry::{self, PropertyKind, ScanConfig};
use crate::omega;
use crate::roots;
use crate::series::TaylorSeries;
use crate::verify::{self, Suite};

/// Working degree when none is requested: deep enough that worst-case
/// geometric tails sit below 1e-6 for every scan radius in use.
pub const DEFAULT_DEGREE: usize = 64;

/// Environment variable overriding the default working degree.
pub const DEGREE_ENV_VAR: &str = "GFT_DEFAULT_DEGREE";

fn default_degree() -> usize {
    std::env::var(DEGREE_ENV_VAR)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(DEFAULT_DEGREE)
}

#[derive(Parser)]
#[command(
    name = "omega-gft",
    version,
    about = "Membership, radii, partial-sum bounds and convolution for the \
             disk classes defined by |zf'(z) - f(z)| < lambda"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve named radius equations from the catalog.
    Roots {
        /// Equation name (see --all for the catalog).
        #[arg(long, conflicts_with = "all")]
        eq: Option<String>,
        /// Solve every equation in the catalog.
        #[arg(long)]
        all: bool,
    },
    /// Decide membership of a coefficient file at a defect bound.
    Member {
        /// Coefficient file: {"degree": N, "coeffs": [[re, im], ...]}.
        #[arg(long)]
        input: PathBuf,
        /// Defect bound lambda (> 0).
        #[arg(long)]
        lambda: f64,
        /// Membership tolerance separating boundary cases from noise.
        #[arg(long, default_value_t = omega::DEFAULT_MEMBERSHIP_TOL)]
        tol: f64,
    },
    /// Scan the radius of a geometric property of f (or of a partial sum).
    Radius {
        /// One of: convex, starlike, ctc.
        #[arg(long)]
        property: String,
        /// Coefficient file.
        #[arg(long)]
        input: PathBuf,
        /// Scan the n-th partial sum instead of f itself (n >= 2).
        #[arg(long)]
        partial_sum: Option<usize>,
        /// Uniform theta samples per circle.
        #[arg(long, default_value_t = 4096)]
        theta_samples: usize,
        /// Outward step of the radius grid.
        #[arg(long, default_value_t = 1e-3)]
        r_step: f64,
        /// Bisection tolerance on the reported radius.
        #[arg(long, default_value_t = 1e-7)]
        bisection_tol: f64,
        /// Largest radius scanned.
        #[arg(long, default_value_t = 0.999)]
        r_max: f64,
    },
    /// Write a named family member as a coefficient file.
    Family {
        /// One of: fmu (needs --mu), eq16 (needs --lambda),
        /// extremal (needs --lambda and --k).
        #[arg(long)]
        name: String,
        /// Family parameter mu in [-1, 1] (fmu).
        #[arg(long)]
        mu: Option<f64>,
        /// Defect bound lambda > 0 (eq16, extremal).
        #[arg(long)]
        lambda: Option<f64>,
        /// Coefficient index k >= 2 (extremal).
        #[arg(long)]
        k: Option<usize>,
        /// Working degree (default 64, or GFT_DEFAULT_DEGREE).
        #[arg(long)]
        degree: Option<usize>,
        /// Output path for the coefficient file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit the order-versus-positivity-radius table.
    Figure1 {
        #[arg(long, default_value_t = 2)]
        nmin: usize,
        #[arg(long, default_value_t = 40)]
        nmax: usize,
        /// csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (or all of them).
    Verify {
        /// all, lemma1, lemma12, lemma14, thm21..thm23, thm31..thm33,
        /// thm41..thm46.
        #[arg(long)]
        suite: String,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Override the per-suite number of random members.
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// Entry point used by the binary. Parses `std::env::args`.
pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Testable entry point.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Roots { eq, all } => cmd_roots(eq, all, cli.json),
        Command::Member { input, lambda, tol } => cmd_member(&input, lambda, tol, cli.json),
        Command::Radius {
            property,
            input,
            partial_sum,
            theta_samples,
            r_step,
            bisection_tol,
            r_max,
        } => {
            let cfg = ScanConfig {
                theta_samples,
                r_step,
                bisection_tol,
                refine_tol: 1e-12,
                r_max,
            };
            cmd_radius(&property, &input, partial_sum, &cfg, cli.json)
        }
        Command::Family {
            name,
            mu,
            lambda,
            k,
            degree,
            out,
        } => cmd_family(&name, mu, lambda, k, degree, &out, cli.json),
        Command::Figure1 {
            nmin,
            nmax,
            format,
            out,
        } => cmd_figure1(nmin, nmax, &format, out.as_deref(), cli.json),
        Command::Verify {
            suite,
            seed,
            samples,
        } => cmd_verify(&suite, seed, samples, cli.json),
    }
}

fn input_error(err: &Error) -> i32 {
    eprintln!("error: {}", err);
    2
}

#[derive(Serialize)]
struct RootLine {
    name: &'static str,
    root: f64,
    residual: f64,
    bracket_width: f64,
    iterations: usize,
    bracket: [f64; 2],
    describes: &'static str,
}

fn solve_named(name: &str) -> Result<RootLine, Error> {
    let eq = roots::equation(name)?;
    let res = eq.solve()?;
    Ok(RootLine {
        name: eq.name,
        root: res.root,
        residual: res.residual,
        bracket_width: res.bracket_width,
        iterations: res.iterations,
        bracket: [eq.bracket.0, eq.bracket.1],
        describes: eq.describes,
    })
}

fn print_root_line(line: &RootLine) {
    println!(
        "{}: root={:.12} residual={:.3e} bracket=[{}, {}] iterations={}",
        line.name, line.root, line.residual, line.bracket[0], line.bracket[1], line.iterations
    );
}

fn cmd_roots(eq: Option<String>, all: bool, json: bool) -> i32 {
    if all {
        let lines: Result<Vec<_>, _> = roots::catalog()
            .iter()
            .map(|e| solve_named(e.name))
            .collect();
        match lines {
            Ok(lines) => {
                if json {
                    println!("{}", serde_json::to_string(&lines).expect("serializable"));
                } else {
                    for line in &lines {
                        print_root_line(line);
                    }
                }
                0
            }
            Err(e) => input_error(&e),
        }
    } else {
        let Some(name) = eq else {
            eprintln!("error: pass --eq NAME or --all");
            return 2;
        };
        match solve_named(&name) {
            Ok(line) => {
                if json {
                    println!("{}", serde_json::to_string(&line).expect("serializable"));
                } else {
                    print_root_line(&line);
                }
                0
            }
            Err(e) => input_error(&e),
        }
    }
}

fn read_series(path: &std::path::Path) -> Result<TaylorSeries, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    TaylorSeries::from_json(&text)
}

fn cmd_member(input: &std::path::Path, lambda: f64, tol: f64, json: bool) -> i32 {
    let f = match read_series(input) {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };
    let cert = match omega::is_member(&f, lambda, tol) {
        Ok(cert) => cert,
        Err(e) => return input_error(&e),
    };
    if json {
        println!("{}", serde_json::to_string(&cert).expect("serializable"));
    } else {
        println!(
            "member: {} (lambda={}, defect={:.12}, margin={:.3e}, samples={})",
            cert.member, cert.lambda, cert.defect, cert.margin, cert.samples
        );
    }
    if cert.member {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct PolePartial {
    error: &'static str,
    pole_radius: f64,
    pole_theta: f64,
    last_good_radius: Option<f64>,
}

fn cmd_radius(
    property: &str,
    input: &std::path::Path,
    partial_sum: Option<usize>,
    cfg: &ScanConfig,
    json: bool,
) -> i32 {
    let kind = match PropertyKind::from_str(property) {
        Ok(kind) => kind,
        Err(e) => return input_error(&e),
    };
    let f = match read_series(input) {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };
    let result = match partial_sum {
        Some(n) => geometry::partial_sum_radius(kind, &f, n, cfg),
        None => geometry::radius_of_positivity(kind, &f, cfg),
    };
    match result {
        Ok(res) => {
            if json {
                println!("{}", serde_json::to_string(&res).expect("serializable"));
            } else {
                println!(
                    "{} radius: {:.9} (residual={:.3e}, method=sign-bisection, argmin theta={:.6})",
                    property, res.radius, res.residual, res.argmin_theta
                );
            }
            0
        }
        Err(Error::PoleEncountered {
            radius,
            theta,
            last_good_radius,
        }) => {
            let partial = PolePartial {
                error: "pole-encountered",
                pole_radius: radius,
                pole_theta: theta,
                last_good_radius,
            };
            if json {
                println!("{}", serde_json::to_string(&partial).expect("serializable"));
            } else {
                println!(
                    "pole encountered at r={:.9}, theta={:.6}; last pole-free radius: {:?}",
                    radius, theta, last_good_radius
                );
            }
            3
        }
        Err(e) => input_error(&e),
    }
}

#[derive(Serialize)]
struct FamilyWritten<'a> {
    name: &'a str,
    degree: usize,
    path: String,
}

fn cmd_family(
    name: &str,
    mu: Option<f64>,
    lambda: Option<f64>,
    k: Option<usize>,
    degree: Option<usize>,
    out: &std::path::Path,
    json: bool,
) -> i32 {
    let degree = degree.unwrap_or_else(default_degree);
    let built = match name {
        "fmu" => match mu {
            Some(mu) => omega::family_f_mu(mu, degree),
            None => Err(Error::Domain("fmu requires --mu".into())),
        },
        "eq16" => match lambda {
            Some(l) => omega::cubic_member(l).map(|f| pad_to_degree(&f, degree)),
            None => Err(Error::Domain("eq16 requires --lambda".into())),
        },
        "extremal" => match (lambda, k) {
            (Some(l), Some(k)) => omega::extremal_k(k, l),
            _ => Err(Error::Domain("extremal requires --lambda and --k".into())),
        },
        other => Err(Error::Domain(format!("unknown family: {}", other))),
    };
    let f = match built {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };
    if let Err(e) = std::fs::write(out, f.to_json()) {
        eprintln!("error: {}: {}", out.display(), e);
        return 2;
    }
    if json {
        let line = FamilyWritten {
            name,
            degree: f.degree(),
            path: out.display().to_string(),
        };
        println!("{}", serde_json::to_string(&line).expect("serializable"));
    } else {
        println!(
            "wrote {} (degree {}) to {}",
            name,
            f.degree(),
            out.display()
        );
    }
    0
}

fn pad_to_degree(f: &TaylorSeries, degree: usize) -> TaylorSeries {
    if degree <= f.degree() {
        return f.clone();
    }
    let mut coeffs = f.coeffs().to_vec();
    coeffs.resize(degree, num_complex::Complex64::new(0.0, 0.0));
    TaylorSeries::new(coeffs).expect("normalization preserved")
}

#[derive(Serialize)]
struct Figure1Output {
    rows: Vec<bounds::Figure1Row>,
    plateau: Option<usize>,
}

fn cmd_figure1(
    nmin: usize,
    nmax: usize,
    format: &str,
    out: Option<&std::path::Path>,
    json: bool,
) -> i32 {
    let rows = match bounds::figure1_data(nmin, nmax) {
        Ok(rows) => rows,
        Err(e) => return input_error(&e),
    };
    let plateau = bounds::figure1_plateau(&rows, 1e-4);
    let table = match format {
        "csv" => bounds::figure1_csv(&rows),
        "json" => serde_json::to_string(&rows).expect("serializable"),
        other => {
            eprintln!("error: unknown format: {} (expected csv or json)", other);
            return 2;
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &table) {
                eprintln!("error: {}: {}", path.display(), e);
                return 2;
            }
            if json {
                let line = Figure1Output { rows, plateau };
                println!("{}", serde_json::to_string(&line).expect("serializable"));
            } else {
                println!("wrote {} rows to {}", nmax - nmin + 1, path.display());
                match plateau {
                    Some(n) => println!("plateau begins at n={} (successive diff < 1e-4)", n),
                    None => println!("no plateau below the requested order range"),
                }
            }
        }
        None => {
            if json {
                let line = Figure1Output { rows, plateau };
                println!("{}", serde_json::to_string(&line).expect("serializable"));
            } else {
                print!("{}", table);
                match plateau {
                    Some(n) => println!("plateau begins at n={} (successive diff < 1e-4)", n),
                    None => println!("no plateau below the requested order range"),
                }
            }
        }
    }
    0
}

fn cmd_verify(suite: &str, seed: u64, samples: Option<usize>, json: bool) -> i32 {
    let suite = match Suite::from_str(suite) {
        Ok(s) => s,
        Err(e) => return input_error(&e),
    };
    let reports = verify::run(suite, seed, samples);
    if json {
        println!("{}", serde_json::to_string(&reports).expect("serializable"));
    } else {
        for rep in &reports {
            print!("{}", rep.render_text());
        }
        let passed: usize = reports.iter().map(|r| r.passed).sum();
        let failed: usize = reports.iter().map(|r| r.failed).sum();
        println!("total: {} passed, {} failed", passed, failed);
    }
    if reports.iter().all(|r| r.all_passed()) {
        0
    } else {
        1
    }
}
