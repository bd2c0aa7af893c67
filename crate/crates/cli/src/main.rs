//! `braidchar`: batch front end for the braidchar library.
//!
//! Exit codes: 0 success/match, 2 usage error, 3 verification mismatch.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use braidchar::formulas::{self, DecompositionTable, GradedCharacter};
use braidchar::koszul;
use braidchar::oracle;
use braidchar::report;
use braidchar::suites::{self, Suite, SuiteConfig};
use braidchar::{Algebra, Error, Partition, Permutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "braidchar",
    version,
    about = "Exact graded S_n-characters of pvb!_n, pfb!_n and their Koszul duals"
)]
struct Cli {
    /// Worker threads for parallel sweeps (0 = one per core).
    #[arg(long, global = true, env = "BRAIDCHAR_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert series (graded dimensions) of the dual algebra.
    Hilbert {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Graded character at one conjugacy class.
    Character {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Irreducible decomposition of one graded piece.
    Decompose {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Degree.
        #[arg(long, visible_alias = "degree")]
        k: usize,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Cap on n for sweeps (defaults are each suite's feasibility bound).
        #[arg(long)]
        n_max: Option<usize>,
        /// Single n for the koszul suite.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = koszul::DEFAULT_TRUNCATION)]
        trunc: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Graded character of pvb_n / pfb_n via the Koszul formula 1/A!(-z).
    Series {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = koszul::DEFAULT_TRUNCATION)]
        trunc: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dump the oracle's basis of one graded piece.
    Basis {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, visible_alias = "degree")]
        k: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// pvb-dual or pfb-dual.
    #[arg(long, value_parser = parse_algebra)]
    algebra: Algebra,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// Cycle type as comma-separated parts, e.g. 2,2.
    #[arg(long, conflicts_with = "sigma")]
    cycle_type: Option<String>,
    /// A permutation in cycle or one-line notation, e.g. "(1 2)(3 4)".
    #[arg(long)]
    sigma: Option<String>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure and the exit code it maps to.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotACharacter(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("csv: {e}"))
    }
}

/// Rendered output plus whether it reports a mismatch.
struct Emitted {
    body: String,
    mismatch: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
    {
        eprintln!("error: thread pool: {e}");
        return ExitCode::from(2);
    }
    let (out, result) = match &cli.command {
        Command::Hilbert { alg, out } => (out, cmd_hilbert(alg, out.output)),
        Command::Character {
            alg,
            class,
            method,
            out,
        } => (out, cmd_character(alg, class, *method, out.output)),
        Command::Decompose { alg, k, method, out } => {
            (out, cmd_decompose(alg, *k, *method, out.output))
        }
        Command::Verify {
            suite,
            n_max,
            n,
            trunc,
            out,
        } => {
            let cfg = SuiteConfig {
                n_max: *n_max,
                n: *n,
                trunc: *trunc,
            };
            (out, cmd_verify(*suite, &cfg, out.output))
        }
        Command::Series {
            alg,
            class,
            trunc,
            out,
        } => (out, cmd_series(alg, class, *trunc, out.output)),
        Command::Basis { alg, k, out } => (out, cmd_basis(alg, *k, out.output)),
    };
    match result {
        Ok(emitted) => {
            if let Err(e) = write_output(out, &emitted.body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if emitted.mismatch {
                eprintln!("error: verification mismatch");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn write_output(out: &OutputArgs, body: &str) -> std::io::Result<()> {
    match &out.out {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn json_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

/// Resolves `--method`: default `both` within oracle feasibility, else
/// `formula` with a warning.
fn resolve_method(algebra: Algebra, n: usize, method: Option<Method>) -> (Method, Option<String>) {
    match method {
        Some(m) => (m, None),
        None if n <= suites::oracle_bound(algebra) => (Method::Both, None),
        None => (
            Method::Formula,
            Some(format!(
                "oracle skipped: n = {n} exceeds the {algebra} oracle bound {}",
                suites::oracle_bound(algebra)
            )),
        ),
    }
}

fn method_str(m: Method) -> &'static str {
    match m {
        Method::Formula => "formula",
        Method::Oracle => "oracle",
        Method::Both => "both",
    }
}

fn resolve_class(n: usize, class: &ClassArgs) -> Result<Partition, Failure> {
    let mu = match (&class.cycle_type, &class.sigma) {
        (Some(ct), None) => ct.parse::<Partition>()?,
        (None, Some(s)) => {
            let p = Permutation::parse(s, Some(n))?;
            if p.degree() != n {
                return Err(Failure::Usage(format!(
                    "--sigma {s:?} moves points beyond n = {n}"
                )));
            }
            p.cycle_type()
        }
        (None, None) => Partition::ones(n),
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give at most one of --cycle-type and --sigma".into(),
            ))
        }
    };
    if mu.size() != n {
        return Err(Failure::Usage(format!(
            "cycle type {mu} does not partition n = {n}"
        )));
    }
    Ok(mu)
}

fn cmd_hilbert(alg: &AlgebraArgs, fmt: Format) -> Result<Emitted, Failure> {
    check_n(alg.n)?;
    let h = formulas::hilbert(alg.algebra, alg.n)?;
    let body = match fmt {
        Format::Json => json_line(&json!({
            "algebra": alg.algebra.as_str(),
            "n": alg.n,
            "coeffs": report::int_array(h.coeffs()),
        })),
        Format::Csv => csv_string(
            &["degree", "dimension"],
            &h.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), c.to_string()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => format!(
            "{}_{} Hilbert series: {}\n",
            alg.algebra,
            alg.n,
            report::poly_text(h.coeffs())
        ),
    };
    Ok(Emitted {
        body,
        mismatch: false,
    })
}

fn cmd_character(
    alg: &AlgebraArgs,
    class: &ClassArgs,
    method: Option<Method>,
    fmt: Format,
) -> Result<Emitted, Failure> {
    check_n(alg.n)?;
    let mu = resolve_class(alg.n, class)?;
    let (method, warning) = resolve_method(alg.algebra, alg.n, method);
    let formula = matches!(method, Method::Formula | Method::Both)
        .then(|| formulas::character(alg.algebra, alg.n, &mu))
        .transpose()?;
    let oracle = matches!(method, Method::Oracle | Method::Both)
        .then(|| oracle::graded_character(alg.algebra, alg.n, &mu))
        .transpose()?;
    let matched = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    let primary: &GradedCharacter = formula.as_ref().or(oracle.as_ref()).expect("one method ran");
    let body = match fmt {
        Format::Json => {
            let mut v = json!({
                "algebra": alg.algebra.as_str(),
                "n": alg.n,
                "mu": mu.to_string(),
                "method": method_str(method),
                "coeffs": report::int_array(primary.coeffs()),
            });
            if let (Some(f), Some(o)) = (&formula, &oracle) {
                v["formula"] = report::int_array(f.coeffs());
                v["oracle"] = report::int_array(o.coeffs());
            }
            if let Some(m) = matched {
                v["match"] = json!(m);
            }
            if let Some(w) = &warning {
                v["warning"] = json!(w);
            }
            json_line(&v)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (src, c) in [("formula", &formula), ("oracle", &oracle)] {
                if let Some(c) = c {
                    for (k, x) in c.coeffs().iter().enumerate() {
                        rows.push(vec![src.to_string(), mu.to_string(), k.to_string(), x.to_string()]);
                    }
                }
            }
            csv_string(&["source", "mu", "degree", "trace"], &rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for (src, c) in [("formula", &formula), ("oracle", &oracle)] {
                if let Some(c) = c {
                    s.push_str(&format!(
                        "{}_{}({mu}) [{src}]: {}\n",
                        alg.algebra,
                        alg.n,
                        report::poly_text(c.coeffs())
                    ));
                }
            }
            if let Some(m) = matched {
                s.push_str(&format!("match: {m}\n"));
            }
            if let Some(w) = &warning {
                s.push_str(&format!("warning: {w}\n"));
            }
            s
        }
    };
    Ok(Emitted {
        body,
        mismatch: matched == Some(false),
    })
}

fn cmd_decompose(
    alg: &AlgebraArgs,
    k: usize,
    method: Option<Method>,
    fmt: Format,
) -> Result<Emitted, Failure> {
    check_n(alg.n)?;
    if k >= alg.n {
        return Err(Failure::Usage(format!(
            "--k {k} out of range 0..{} for n = {}",
            alg.n - 1,
            alg.n
        )));
    }
    let (method, warning) = resolve_method(alg.algebra, alg.n, method);
    let formula = matches!(method, Method::Formula | Method::Both)
        .then(|| formulas::decompose_formula(alg.algebra, alg.n, k))
        .transpose()?;
    let oracle = matches!(method, Method::Oracle | Method::Both)
        .then(|| oracle::decomposition(alg.algebra, alg.n, k))
        .transpose()?;
    let matched = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    let primary: &DecompositionTable =
        formula.as_ref().or(oracle.as_ref()).expect("one method ran");
    let body = match fmt {
        Format::Json => {
            let mut v = report::decomposition_json(primary);
            v["algebra"] = json!(alg.algebra.as_str());
            v["method"] = json!(method_str(method));
            v["summary"] = json!(primary.cf_summary());
            if let (Some(_), Some(o)) = (&formula, &oracle) {
                v["oracle"] = report::decomposition_json(o)["multiplicities"].clone();
            }
            if let Some(m) = matched {
                v["match"] = json!(m);
            }
            if let Some(w) = &warning {
                v["warning"] = json!(w);
            }
            json_line(&v)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (src, t) in [("formula", &formula), ("oracle", &oracle)] {
                if let Some(t) = t {
                    for (lam, cf, m) in report::decomposition_rows(t) {
                        rows.push(vec![src.to_string(), lam, cf, m.to_string()]);
                    }
                }
            }
            csv_string(&["source", "lambda", "cf", "mult"], &rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for (src, t) in [("formula", &formula), ("oracle", &oracle)] {
                if let Some(t) = t {
                    s.push_str(&format!(
                        "{}_{} degree {k} [{src}]: {}\n",
                        alg.algebra,
                        alg.n,
                        t.cf_summary()
                    ));
                }
            }
            if let Some(m) = matched {
                s.push_str(&format!("match: {m}\n"));
            }
            if let Some(w) = &warning {
                s.push_str(&format!("warning: {w}\n"));
            }
            s
        }
    };
    Ok(Emitted {
        body,
        mismatch: matched == Some(false),
    })
}

fn cmd_verify(suite: Suite, cfg: &SuiteConfig, fmt: Format) -> Result<Emitted, Failure> {
    let r = suites::run(suite, cfg);
    let body = match fmt {
        Format::Json => json_line(&json!({
            "suite": suite.as_str(),
            "passed": r.passed(),
            "checks": r.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_string(
            &["name", "passed", "detail"],
            &r.checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                s.push_str(&format!(
                    "{} {} — {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            s.push_str(&format!(
                "suite {}: {}\n",
                suite,
                if r.passed() { "pass" } else { "fail" }
            ));
            s
        }
    };
    Ok(Emitted {
        body,
        mismatch: !r.passed(),
    })
}

fn cmd_series(
    alg: &AlgebraArgs,
    class: &ClassArgs,
    trunc: usize,
    fmt: Format,
) -> Result<Emitted, Failure> {
    check_n(alg.n)?;
    let mu = resolve_class(alg.n, class)?;
    let check = koszul::verify_identity(alg.algebra, alg.n, &mu, trunc)?;
    let body = match fmt {
        Format::Json => json_line(&json!({
            "algebra": alg.algebra.as_str(),
            "n": alg.n,
            "mu": mu.to_string(),
            "trunc": trunc,
            "coeffs": report::series_json(&check.series),
            "identity_holds": check.holds,
        })),
        Format::Csv => csv_string(
            &["degree", "coeff"],
            &check
                .series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), c.to_string()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => format!(
            "1/{}_{}({mu})(-z) = {}\nidentity holds: {}\n",
            alg.algebra, alg.n, check.series, check.holds
        ),
    };
    Ok(Emitted {
        body,
        mismatch: !check.holds,
    })
}

fn cmd_basis(alg: &AlgebraArgs, k: usize, fmt: Format) -> Result<Emitted, Failure> {
    check_n(alg.n)?;
    let elements = oracle::basis_strings(alg.algebra, alg.n, k)?;
    let body = match fmt {
        Format::Json => json_line(&json!({
            "algebra": alg.algebra.as_str(),
            "n": alg.n,
            "degree": k,
            "count": elements.len(),
            "basis": elements,
        })),
        Format::Csv => csv_string(
            &["index", "element"],
            &elements
                .iter()
                .enumerate()
                .map(|(i, e)| vec![i.to_string(), e.clone()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => elements.iter().map(|e| format!("{e}\n")).collect(),
    };
    Ok(Emitted {
        body,
        mismatch: false,
    })
}
