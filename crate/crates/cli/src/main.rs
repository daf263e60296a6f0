//! Command-line front end: realization, inertia construction, verification,
//! factoring and the builtin patterns, all with JSON output.
//!
//! Exit status: 0 on success, 1 when a verification or root-finding step
//! fails, 2 on usage and precondition errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sign_spectra::realize::{
    realize_inertia_td, realize_v, select_t_triple, RealizationReport, TripleSelection,
};
use sign_spectra::verify::{
    check_identity_t, check_identity_tprime, check_obs12, run_theorem_suite, verify_realization,
    TheoremConfig,
};
use sign_spectra::{
    builtin_pattern, find_roots, refined_inertia_of, roots_to_quadratics, BigRational, Error,
    PatternName, Polynomial, RefinedInertia, Scalar, DEFAULT_TOL,
};

#[derive(Parser, Debug)]
#[command(
    name = "sign-spectra",
    version,
    about = "Realize polynomials and inertias over sign patterns"
)]
struct Cli {
    /// Root-finding and classification tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count for randomized checks.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Numeric backend; defaults to float for realize and factor, rational
    /// otherwise.
    #[arg(long, global = true, value_enum)]
    backend: Option<Backend>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Backend {
    Rational,
    Float,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a monic polynomial over diag(T,…,T,D,…,D).
    Realize {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        d: usize,
        /// Polynomial JSON such as {"coeffs":[…]}; read from stdin if absent.
        poly: Option<String>,
    },
    /// An 8×8 matrix over diag(T,D) with refined inertia (n+, n-, n0, ni).
    Inertia {
        n_plus: usize,
        n_minus: usize,
        n_zero: usize,
        n_imag: usize,
    },
    /// Run exact certificates.
    Verify {
        #[arg(value_enum)]
        which: Which,
    },
    /// Group the roots of a polynomial into real quadratics.
    Factor {
        /// Polynomial JSON such as {"coeffs":[…]}; read from stdin if absent.
        poly: Option<String>,
    },
    /// Print builtin patterns, or one of them by name (T, Tprime, D, X, S,
    /// Sprime, TD, U1, U2, U3, V(t,d)).
    Pattern { name: Option<String> },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    Identities,
    Obs12,
    Theorem,
    All,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RootFinding { .. } | Error::ConjugateClosure(_) | Error::Construction(_) => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// JSON output plus whether every check inside it passed.
type Outcome = Result<(Value, bool), Failure>;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn read_poly<S: Scalar>(arg: Option<String>) -> Result<Polynomial<S>, Failure> {
    let text = match arg {
        Some(s) => s,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid polynomial JSON: {e}")))
}

fn realize_with<S: Scalar>(poly: Option<String>, t: usize, d: usize, tol: f64) -> Outcome {
    if d < 5 {
        return Err(Failure::Usage(format!("d must be at least 5, got {d}")));
    }
    let f: Polynomial<S> = read_poly(poly)?;
    let rep: RealizationReport<S> = realize_v(&f, t, d, tol)?;
    let bound = 10.0 * tol * f.degree() as f64;
    let ok = verify_realization(&rep, bound);
    Ok((to_value(&rep), ok))
}

fn inertia(nu: RefinedInertia, tol: f64, backend: Backend) -> Outcome {
    if nu.total() != 8 {
        return Err(Failure::Usage(format!(
            "n+ + n- + n0 + 2 ni must be 8, got {}",
            nu.total()
        )));
    }
    let (mut value, classified) = match backend {
        Backend::Rational => {
            let r = realize_inertia_td::<BigRational>(&nu)?;
            (to_value(&r), refined_inertia_of(&r.matrix, tol)?)
        }
        Backend::Float => {
            let r = realize_inertia_td::<f64>(&nu)?;
            (to_value(&r), refined_inertia_of(&r.matrix, tol)?)
        }
    };
    value["classified"] = to_value(&classified);
    Ok((value, classified == nu))
}

fn selection_json(sel: &TripleSelection<f64>) -> Value {
    json!({
        "triple": to_value(&sel.triple),
        "class": to_value(&sel.class),
        "snapped": sel.snapped,
    })
}

fn factor<S: Scalar>(poly: Option<String>, tol: f64) -> Outcome {
    let f: Polynomial<S> = read_poly(poly)?;
    if f.degree() == 0 || f.degree() % 2 == 1 {
        return Err(Failure::Usage(format!(
            "degree must be even and at least 2, got {}",
            f.degree()
        )));
    }
    let roots = find_roots(&f, tol)?;
    let quads = roots_to_quadratics(&roots)?;
    let mut value = json!({
        "degree": f.degree(),
        "quadratics": to_value(&quads),
        "negative_b": quads.iter().filter(|q| q.b < 0.0).count(),
    });
    if f.degree() >= 16 {
        let eps_zero = tol * (1.0 + f.max_abs_coeff().to_f64());
        value["selection"] = selection_json(&select_t_triple(&quads, &eps_zero)?);
    }
    Ok((value, true))
}

fn identities(samples: usize, seed: u64) -> Result<Value, Failure> {
    let t = check_identity_t(samples, seed)?;
    let tp = check_identity_tprime(samples, seed)?;
    Ok(json!({
        "passed": t.all_passed && tp.all_passed,
        "t": to_value(&t),
        "tprime": to_value(&tp),
    }))
}

fn verify(which: Which, cli: &Cli) -> Outcome {
    if cli.backend == Some(Backend::Float) {
        return Err(Failure::Usage(
            "verify runs on the rational backend only".into(),
        ));
    }
    let samples = cli.samples.unwrap_or(1000);
    let theorem = || -> Result<Value, Failure> {
        let config = TheoremConfig {
            seed: cli.seed,
            tol: cli.tol,
            identity_samples: samples,
            ..TheoremConfig::default()
        };
        let rep = run_theorem_suite(&config)?;
        Ok(to_value(&rep))
    };
    let value = match which {
        Which::Identities => identities(samples, cli.seed)?,
        Which::Obs12 => to_value(&check_obs12()),
        Which::Theorem => theorem()?,
        Which::All => {
            let ids = identities(samples, cli.seed)?;
            let obs12 = to_value(&check_obs12());
            let thm = theorem()?;
            let passed = [&ids, &obs12, &thm].iter().all(|v| v["passed"] == true);
            json!({ "passed": passed, "identities": ids, "obs12": obs12, "theorem": thm })
        }
    };
    let passed = value["passed"] == true;
    Ok((value, passed))
}

fn pattern(name: Option<String>) -> Outcome {
    let value = match name {
        Some(n) => {
            let name: PatternName = n.parse()?;
            json!({ "name": name.to_string(), "pattern": to_value(&builtin_pattern(name)?) })
        }
        None => Value::Array(
            PatternName::ALL_FIXED
                .iter()
                .map(|&n| {
                    Ok(json!({ "name": n.to_string(), "pattern": to_value(&builtin_pattern(n)?) }))
                })
                .collect::<Result<Vec<_>, Error>>()?,
        ),
    };
    Ok((value, true))
}

fn run(cli: &Cli) -> Outcome {
    if !cli.tol.is_finite() || cli.tol <= 0.0 {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    if cli.samples == Some(0) {
        return Err(Failure::Usage("--samples must be at least 1".into()));
    }
    match &cli.command {
        Command::Realize { t, d, poly } => match cli.backend.unwrap_or(Backend::Float) {
            Backend::Float => realize_with::<f64>(poly.clone(), *t, *d, cli.tol),
            Backend::Rational => realize_with::<BigRational>(poly.clone(), *t, *d, cli.tol),
        },
        Command::Inertia {
            n_plus,
            n_minus,
            n_zero,
            n_imag,
        } => inertia(
            RefinedInertia::new(*n_plus, *n_minus, *n_zero, *n_imag),
            cli.tol,
            cli.backend.unwrap_or(Backend::Rational),
        ),
        Command::Verify { which } => verify(*which, cli),
        Command::Factor { poly } => match cli.backend.unwrap_or(Backend::Float) {
            Backend::Float => factor::<f64>(poly.clone(), cli.tol),
            Backend::Rational => factor::<BigRational>(poly.clone(), cli.tol),
        },
        Command::Pattern { name } => pattern(name.clone()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, passed)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values print");
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text + "\n") {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => {
                    // a closed pipe (e.g. `| head`) is not an error
                    let _ = writeln!(io::stdout().lock(), "{text}");
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
