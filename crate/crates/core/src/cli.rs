//! The `bellcheck` command line: `verify` runs identity suites, `compute`
//! prints one exact value, `table` prints a sequence.
//!
//! Exit status is 0 when every case passes, 1 when any case fails and 2 for
//! usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;
use crate::bell::{complete_bell_sum, partial_bell_direct, ArgSequence};
use crate::identities::{
    self, verify_appendix, verify_bridges, verify_classical, verify_consistency, verify_filomat, verify_identity,
    verify_oracles, verify_remarks, IdentityId, VerificationReport,
};
use crate::sequences::{self, central_factorial_t, gen_bernoulli_poly, gen_euler_poly, SequenceKind};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Random exponents added to the appendix samples.
const APPENDIX_RANDOM_Q: usize = 50;
const ORACLE_SAMPLES: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "bellcheck", version, about = "Exact Bell polynomial identities and number tables")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check identity suites and report every case.
    Verify(VerifyArgs),
    /// Print a single exact value.
    Compute {
        #[command(subcommand)]
        value: ComputeValue,
    },
    /// Print a sequence from index 0 through `max`.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated suites.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub suite: Vec<Suite>,
    /// Largest degree for the Bell identities.
    #[arg(long, default_value_t = 12)]
    pub max_k: usize,
    /// Truncation order for the series identities (even, at least 4).
    #[arg(long, default_value_t = 24, value_parser = parse_order)]
    pub order: usize,
    /// Comma-separated exact values of eps, like `1,-1,1/2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub epsilon: Option<Vec<Rational>>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall time in the report.
    #[arg(long)]
    pub timing: bool,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

fn parse_order(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < 4 || n % 2 == 1 {
        return Err(format!("order must be even and at least 4, got {n}"));
    }
    Ok(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Bernoulli,
    Euler,
    Catalan,
}

impl From<TableKind> for SequenceKind {
    fn from(k: TableKind) -> Self {
        match k {
            TableKind::Bernoulli => SequenceKind::Bernoulli,
            TableKind::Euler => SequenceKind::Euler,
            TableKind::Catalan => SequenceKind::Catalan,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Hoffman,
    Gencev2,
    Gencev3,
    Gencev4,
    Heqi4,
    Heqi5,
    Heqi6,
    Heqi7,
    Heqi8,
    Heqi9,
    Xu10,
    Xu11,
    Xu12,
    Filomat,
    Appendix,
    Classical,
    Remarks,
    Consistency,
    Oracles,
    All,
}

impl Suite {
    fn theorem(self) -> Option<IdentityId> {
        use IdentityId::*;
        Some(match self {
            Suite::Hoffman => HoffmanT1,
            Suite::Gencev2 => GencevT2,
            Suite::Gencev3 => GencevT3,
            Suite::Gencev4 => GencevT4,
            Suite::Heqi4 => HeqiT4,
            Suite::Heqi5 => HeqiT5,
            Suite::Heqi6 => HeqiT6,
            Suite::Heqi7 => HeqiT7,
            Suite::Heqi8 => HeqiT8,
            Suite::Heqi9 => HeqiT9,
            Suite::Xu10 => XuT10,
            Suite::Xu11 => XuT11,
            Suite::Xu12 => XuT12,
            _ => return None,
        })
    }

    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Subcommand)]
pub enum ComputeValue {
    /// Bernoulli number `B_n`.
    Bernoulli { n: usize },
    /// Euler number `E_n`.
    Euler { n: usize },
    /// Catalan number `C_n`.
    Catalan { n: usize },
    /// Central factorial number `T(p, q)`.
    #[command(name = "T")]
    CentralFactorial { p: usize, q: usize },
    /// Generalized Bernoulli polynomial `B_k^{(sigma)}(x)`.
    #[command(name = "genB")]
    GenBernoulli {
        k: usize,
        #[arg(allow_hyphen_values = true)]
        sigma: Rational,
        #[arg(allow_hyphen_values = true)]
        x: Rational,
    },
    /// Generalized Euler polynomial `E_k^{(sigma)}(x)`.
    #[command(name = "genE")]
    GenEuler {
        k: usize,
        #[arg(allow_hyphen_values = true)]
        sigma: Rational,
        #[arg(allow_hyphen_values = true)]
        x: Rational,
    },
    /// Complete Bell polynomial of the given arguments, of degree equal to their count.
    Bell {
        #[arg(allow_hyphen_values = true)]
        args: Vec<Rational>,
    },
    /// Partial Bell polynomial `B_{k,j}` of the given arguments.
    #[command(name = "partial-bell")]
    PartialBell {
        k: usize,
        j: usize,
        #[arg(allow_hyphen_values = true)]
        args: Vec<Rational>,
    },
}

/// Runs the selected suites and merges their reports.
pub fn run_suites(args: &VerifyArgs) -> VerificationReport {
    let mut suites = args.suite.clone();
    suites.sort();
    suites.dedup();
    if suites.contains(&Suite::All) {
        suites = Suite::value_variants().iter().copied().filter(|s| *s != Suite::All).collect();
    }
    let eps = args.epsilon.clone().unwrap_or_else(sequences::epsilon_samples);
    let k = args.max_k;

    let mut reports = Vec::new();
    for suite in &suites {
        if let Some(id) = suite.theorem() {
            reports.push(verify_identity(id, k, &eps).expect("theorem ids are Bell-form"));
            continue;
        }
        match suite {
            Suite::Filomat => reports.push(verify_filomat(k / 2)),
            Suite::Appendix => {
                let mut q = eps.clone();
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                q.extend((0..APPENDIX_RANDOM_Q).map(|_| identities::random_rational(&mut rng)));
                q.sort();
                q.dedup();
                reports.push(verify_appendix(&q, args.order));
            }
            Suite::Classical => reports.push(verify_classical(args.order)),
            Suite::Remarks => reports.push(verify_remarks(k, &eps)),
            Suite::Consistency => {
                reports.push(verify_consistency(k, &eps));
                reports.push(verify_bridges(k, &eps));
            }
            Suite::Oracles => reports.push(verify_oracles(args.seed, ORACLE_SAMPLES)),
            _ => unreachable!(),
        }
    }
    let name: Vec<String> = suites.iter().map(|s| s.name()).collect();
    VerificationReport::merge(name.join(","), reports)
}

fn render_report(report: &VerificationReport, format: Format, timing: bool) -> String {
    match format {
        Format::Plain => report.to_plain(timing),
        Format::Json => report.to_json(timing) + "\n",
        Format::Csv => report.to_csv(),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = run_suites(args);
    let text = render_report(&report, args.format, args.timing);
    let written = match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Evaluates a `compute` selector.
pub fn compute(value: &ComputeValue) -> Result<Rational, String> {
    let v = match value {
        ComputeValue::Bernoulli { n } => sequences::bernoulli(*n),
        ComputeValue::Euler { n } => sequences::euler(*n),
        ComputeValue::Catalan { n } => sequences::catalan(*n),
        ComputeValue::CentralFactorial { p, q } => central_factorial_t(*p, *q),
        ComputeValue::GenBernoulli { k, sigma, x } => gen_bernoulli_poly(*k, sigma, x),
        ComputeValue::GenEuler { k, sigma, x } => gen_euler_poly(*k, sigma, x),
        ComputeValue::Bell { args } => {
            complete_bell_sum(args.len(), &ArgSequence::from_values(args.clone())).map_err(|e| e.to_string())?
        }
        ComputeValue::PartialBell { k, j, args } => {
            partial_bell_direct(*k, *j, &ArgSequence::from_values(args.clone())).map_err(|e| e.to_string())?
        }
    };
    Ok(v)
}

/// Renders `values[0..]` as one line (plain), an index header plus values
/// (csv) or an array of strings (json).
pub fn render_table(values: &[Rational], format: Format) -> String {
    let joined = |items: Vec<String>| items.join(",");
    match format {
        Format::Plain => joined(values.iter().map(|v| v.to_string()).collect()) + "\n",
        Format::Csv => {
            let mut s = joined((0..values.len()).map(|i| i.to_string()).collect());
            let _ = writeln!(s);
            let _ = writeln!(s, "{}", joined(values.iter().map(|v| v.to_string()).collect()));
            s
        }
        Format::Json => serde_json::to_string(values).expect("rationals serialize") + "\n",
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_PASS
            };
        }
    };
    match &config.command {
        Command::Verify(args) => cmd_verify(args, out, err),
        Command::Compute { value } => match compute(value) {
            Ok(v) => {
                let _ = writeln!(out, "{v}");
                EXIT_PASS
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Command::Table { kind, max, format } => {
            let values = sequences::sequence_values((*kind).into(), *max);
            let _ = out.write_all(render_table(&values, *format).as_bytes());
            EXIT_PASS
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bellcheck").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_examples() {
        assert_eq!(run_str(&["compute", "bernoulli", "4"]), (0, "-1/30\n".into(), String::new()));
        assert_eq!(run_str(&["compute", "bell", "1", "3", "20"]).1, "30\n");
        assert_eq!(run_str(&["compute", "T", "3", "1"]).1, "1/4\n");
        assert_eq!(run_str(&["compute", "genB", "2", "-1", "-1/2"]).1, "1/12\n");
        assert_eq!(run_str(&["compute", "partial-bell", "2", "1", "0", "1/3"]).1, "1/3\n");
    }

    #[test]
    fn compute_usage_errors() {
        assert_eq!(run_str(&["compute", "bernoulli"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["compute", "T", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["compute", "partial-bell", "4", "1", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["compute", "genE", "2", "x", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_examples() {
        assert_eq!(run_str(&["table", "catalan", "3", "--format", "csv"]).1, "0,1,2,3\n1,1,2,5\n");
        assert_eq!(run_str(&["table", "bernoulli", "1"]).1, "1,-1/2\n");
        assert_eq!(run_str(&["table", "euler", "2"]).1, "1,0,-1\n");
        assert_eq!(run_str(&["table", "euler", "2", "--format", "json"]).1, "[\"1\",\"0\",\"-1\"]\n");
    }

    #[test]
    fn verify_small_suites() {
        let (code, out, _) = run_str(&["verify", "--suite", "hoffman", "--max-k", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("PASS HOFFMAN_T1 k=1 lhs=1/24 rhs=1/24\n"), "{out}");
        assert_eq!(run_str(&["verify", "--suite", "xu12", "--epsilon", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--order", "7"]).0, EXIT_USAGE);
        let (code, out, _) = run_str(&["verify", "--suite", "xu12,heqi6", "--max-k", "3", "--epsilon", "-1,1/2"]);
        assert_eq!(code, 0);
        assert!(out.contains("suite heqi6,xu12:"), "{out}");
    }
}
