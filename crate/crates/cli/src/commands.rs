//! Subcommands of the `psdiag` binary.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 dimension mismatch,
//! 4 verification failure.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use psdiag::construct::{
    epsilon_gram, random_gram, CounterexampleSpec, Field, GeneratorSpec, Kind, DEFAULT_EPSILON,
};
use psdiag::matrix::generalized_diagonal;
use psdiag::order::{bruhat_leq, classify, Setting};
use psdiag::verify::{
    default_trials, exhaustive_poset, AuditSummary, Auditor, MAX_AUDIT_DEGREE, MAX_POSET_DEGREE,
};
use psdiag::Permutation;
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::args::{infer_degree, parse_permutation};
use crate::hasse::{class_hasse, permutation_hasse};
use crate::matrix_io::{format_entry, parse_matrix, write_matrix, MatrixFileError};
use crate::report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_VERIFY_FAILED: u8 = 4;

/// Largest degree `hasse` accepts.
pub const MAX_HASSE_DEGREE: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl From<psdiag::Error> for CliError {
    fn from(e: psdiag::Error) -> Self {
        match e {
            psdiag::Error::DegreeMismatch { .. } => CliError::Mismatch(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MatrixFileError> for CliError {
    fn from(e: MatrixFileError) -> Self {
        match e {
            MatrixFileError::Invalid(inner) => inner.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "psdiag",
    version,
    about = "Order relations between generalized diagonals of PSD matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide how X_sigma and X_tau compare over all PSD matrices.
    Classify(ClassifyArgs),
    /// Evaluate a generalized diagonal of a matrix file.
    Diag(DiagArgs),
    /// Print a generated matrix in the matrix file format.
    Gen(GenArgs),
    /// Run the exhaustive poset checks or the full pair audit.
    Verify(VerifyArgs),
    /// Print the Hasse diagram of the cycle order as DOT.
    Hasse(HasseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SettingArg {
    /// |X_sigma| vs |X_tau| over complex PSD matrices
    Abs,
    /// X_sigma vs X_tau over complex PSD matrices
    Complex,
    /// X_sigma vs X_tau over real PSD matrices
    Real,
}

impl From<SettingArg> for Setting {
    fn from(s: SettingArg) -> Self {
        match s {
            SettingArg::Abs => Setting::ComplexAbs,
            SettingArg::Complex => Setting::ComplexPlain,
            SettingArg::Real => Setting::RealPlain,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Cycle notation like "(1 3 2)(4 5)" or one-line like "3 1 2"
    pub sigma: String,
    pub tau: String,
    #[arg(long, value_enum, default_value_t = SettingArg::Abs)]
    pub setting: SettingArg,
    /// Degree; inferred from the permutations when omitted
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    pub matrix: PathBuf,
    pub sigma: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["psd", "pd", "counterexample"])))]
#[command(group(ArgGroup::new("field").args(["real", "complex"])))]
pub struct GenArgs {
    /// Random Gram matrix B·B*
    #[arg(long)]
    pub psd: bool,
    /// Random Gram matrix, redrawn until positive definite
    #[arg(long)]
    pub pd: bool,
    /// The ε-Gram matrix with entry (p, q) equal to ε
    #[arg(long)]
    pub counterexample: bool,
    #[arg(long)]
    pub real: bool,
    /// Complex entries (default for random kinds)
    #[arg(long)]
    pub complex: bool,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["poset", "audit"])))]
pub struct VerifyArgs {
    /// Order axioms, class counts and Bruhat containment over S_n
    #[arg(long)]
    pub poset: bool,
    /// Every ordered pair of S_n: witnesses and Monte-Carlo trials
    #[arg(long)]
    pub audit: bool,
    #[arg(long)]
    pub n: usize,
    /// Monte-Carlo trials per pair (audit); 100 for n <= 4, else 20
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct HasseArgs {
    #[arg(long)]
    pub n: usize,
    /// Order the permutations by cycle inclusion instead of the classes
    #[arg(long)]
    pub perms: bool,
}

/// Runs a parsed command, writing its report to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Diag(a) => cmd_diag(&a, out),
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Hasse(a) => cmd_hasse(&a, out),
    }
}

/// An element beyond the degree means the arguments disagree on size.
fn parse_sized(text: &str, n: usize) -> Result<Permutation, CliError> {
    parse_permutation(text, n).map_err(|e| match e {
        psdiag::Error::OutOfRange { .. } => CliError::Mismatch(e.to_string()),
        other => other.into(),
    })
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let n = infer_degree(&[&a.sigma, &a.tau], a.n)?;
    let sigma = parse_sized(&a.sigma, n)?;
    let tau = parse_sized(&a.tau, n)?;
    let setting = Setting::from(a.setting);
    let verdict = classify(&sigma, &tau, setting)?;
    let bruhat = (bruhat_leq(&sigma, &tau)?, bruhat_leq(&tau, &sigma)?);
    if a.json {
        let doc = report::envelope(
            "classify",
            json!({
                "sigma": sigma.to_string(),
                "tau": tau.to_string(),
                "n": sigma.degree(),
                "setting": report::setting_name(setting),
            }),
            report::classify_results(&verdict, setting, bruhat),
            Vec::new(),
        );
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "sigma    {sigma}")?;
    writeln!(out, "tau      {tau}")?;
    writeln!(out, "setting  {}", report::setting_name(setting))?;
    writeln!(out, "verdict  {}", report::relation_name(verdict.relation))?;
    writeln!(
        out,
        "meaning  {}",
        report::meaning(verdict.relation, setting)
    )?;
    if let Some(w) = &verdict.witness {
        writeln!(out, "witness  {} <=_c {}", w.lower, w.upper)?;
    }
    writeln!(
        out,
        "bruhat   sigma <= tau: {}, tau <= sigma: {}",
        bruhat.0, bruhat.1
    )?;
    Ok(EXIT_OK)
}

/// Plain decimal in a readable range, scientific otherwise.
fn num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() || (1e-4..1e15).contains(&x.abs()) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

fn cmd_diag(a: &DiagArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let text = std::fs::read_to_string(&a.matrix)
        .map_err(|e| CliError::Usage(format!("{}: {e}", a.matrix.display())))?;
    let x = parse_matrix(&text)?;
    let sigma = parse_sized(&a.sigma, x.dim())?;
    let v = generalized_diagonal(&x, &sigma)?;
    if a.json {
        let doc = report::envelope(
            "diag",
            json!({ "matrix": a.matrix.display().to_string(), "sigma": sigma.to_string() }),
            report::diag_results(&v),
            Vec::new(),
        );
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )?;
        return Ok(EXIT_OK);
    }
    let sign = match (v.is_zero(), v.sign) {
        (true, _) => "0".to_string(),
        (false, Some(s)) => format!("{s:+}"),
        (false, None) => "none (non-real)".to_string(),
    };
    writeln!(out, "value          {}", format_entry(v.to_complex()))?;
    writeln!(out, "magnitude      {}", num(v.magnitude()))?;
    writeln!(out, "log_magnitude  {}", num(v.log_magnitude))?;
    match v.phase {
        Some(p) => writeln!(out, "phase          {}", format_entry(p))?,
        None => writeln!(out, "phase          none (zero)")?,
    }
    writeln!(out, "sign           {sign}")?;
    Ok(EXIT_OK)
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let x = if a.counterexample {
        if a.complex {
            return Err(CliError::Usage("the counterexample matrix is real".into()));
        }
        let (Some(p), Some(q)) = (a.p, a.q) else {
            return Err(CliError::Usage("--counterexample needs --p and --q".into()));
        };
        epsilon_gram(&CounterexampleSpec::new(a.n, p, q, a.epsilon)?)
    } else {
        if a.p.is_some() || a.q.is_some() {
            return Err(CliError::Usage(
                "--p and --q only apply to --counterexample".into(),
            ));
        }
        let spec = GeneratorSpec {
            n: a.n,
            seed: a.seed,
            field: if a.real { Field::Real } else { Field::Complex },
            kind: if a.pd { Kind::Pd } else { Kind::Psd },
        };
        random_gram(&spec)?
    };
    out.write_all(write_matrix(&x).as_bytes())?;
    Ok(EXIT_OK)
}

/// [`psdiag::verify::full_theorem_audit`] with one row of pairs per task.
/// Rows are merged in order, so the summary matches the sequential audit.
pub fn parallel_audit(n: usize, trials: usize, seed: u64) -> psdiag::Result<AuditSummary> {
    if n > MAX_AUDIT_DEGREE {
        return Err(psdiag::Error::DegreeTooLarge {
            n,
            limit: MAX_AUDIT_DEGREE,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let m = perms.len();
    let rows: Vec<psdiag::Result<AuditSummary>> = (0..m)
        .into_par_iter()
        .map_init(
            || Auditor::new(trials, seed),
            |auditor, i| {
                let mut row = AuditSummary::default();
                for (j, tau) in perms.iter().enumerate() {
                    row = row.merge(auditor.audit_pair((i * m + j) as u64, &perms[i], tau)?);
                }
                Ok(row)
            },
        )
        .collect();
    rows.into_iter()
        .try_fold(AuditSummary::default(), |acc, row| Ok(acc.merge(row?)))
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let limit = if a.poset {
        MAX_POSET_DEGREE
    } else {
        MAX_AUDIT_DEGREE
    };
    if a.n > limit {
        return Err(CliError::Usage(format!(
            "--n {} exceeds the limit {limit} for this mode",
            a.n
        )));
    }
    let (doc, ok) = if a.poset {
        let r = exhaustive_poset(a.n)?;
        let doc = report::envelope(
            "verify",
            json!({ "mode": "poset", "n": a.n }),
            report::poset_results(&r),
            report::poset_failures(&r),
        );
        (doc, r.is_success())
    } else {
        let trials = a.trials.unwrap_or_else(|| default_trials(a.n));
        let s = parallel_audit(a.n, trials, a.seed)?;
        let doc = report::envelope(
            "verify",
            json!({ "mode": "audit", "n": a.n, "trials": trials, "seed": a.seed }),
            report::audit_results(&s),
            s.failures.iter().map(report::audit_failure).collect(),
        );
        (doc, s.is_success())
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable")
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_hasse(a: &HasseArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    if a.n > MAX_HASSE_DEGREE {
        return Err(CliError::Usage(format!(
            "--n {} exceeds the limit {MAX_HASSE_DEGREE}",
            a.n
        )));
    }
    let (graph, name) = if a.perms {
        (permutation_hasse(a.n), "cycle_order")
    } else {
        (class_hasse(a.n), "class_order")
    };
    out.write_all(graph.to_dot(name).as_bytes())?;
    Ok(EXIT_OK)
}
