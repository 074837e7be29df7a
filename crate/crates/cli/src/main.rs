//! `fuzzy-assess`: assess, compare, rank and verify cohorts from CSV input.
//!
//! Exit codes: 0 success, 1 input error, 2 internal invariant violation.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fuzzy_assess::checks::{equal_gpa_scan, oracle_sweep, theorem_sweep};
use fuzzy_assess::io::{
    parse_counts, parse_scores, render_ranking, render_report, render_verification,
    GradeBoundaries, GroupCounts, OutputFormat, VerificationSummary,
};
use fuzzy_assess::sampling::random_counts;
use fuzzy_assess::{
    assess_batch, compare_pair, rank, AssessmentReport, Execution, FrequencyVector,
    InvariantViolation, ModelKind,
};

#[derive(Parser, Debug)]
#[command(
    name = "fuzzy-assess",
    version,
    about = "GPA and center-of-gravity fuzzy assessment of cohorts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one or more groups under every model.
    Assess(InputArgs),
    /// Compare exactly two groups under every model.
    Compare(InputArgs),
    /// Rank groups under one model.
    Rank {
        #[command(flatten)]
        input: InputArgs,
        /// Model whose criterion orders the groups.
        #[arg(long, default_value = "grfam", value_parser = parse_model)]
        model: ModelKind,
    },
    /// Check closed forms against the geometric oracle and the model
    /// agreement results.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Count table: `group_id,nF,nD,nC,nB,nA` per row (`-` for stdin).
    #[arg(long, conflicts_with = "scores", required_unless_present = "scores")]
    counts: Option<PathBuf>,
    /// Score roster: `group_id,score` per row, scores 0-100 (`-` for stdin).
    #[arg(long)]
    scores: Option<PathBuf>,
    /// Grade band file (`label,lo,hi` per line); default bands when absent.
    #[arg(long)]
    boundaries: Option<PathBuf>,
    /// Restrict to these groups, in this order (comma-separated).
    #[arg(long, value_delimiter = ',')]
    groups: Vec<String>,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: OutputFormat,
    /// Run single-threaded.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Verify these cohorts instead of random ones.
    #[arg(long, conflicts_with = "scores")]
    counts: Option<PathBuf>,
    #[arg(long)]
    scores: Option<PathBuf>,
    #[arg(long)]
    boundaries: Option<PathBuf>,
    /// Seed for random cohorts.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random cohorts.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Largest random cohort size.
    #[arg(long, default_value_t = 10_000)]
    max_n: u64,
    /// How many cohorts to check by numeric integration.
    #[arg(long, default_value_t = 50)]
    integrate: usize,
    /// Midpoint-rule grid resolution per shape.
    #[arg(long, default_value_t = 1000)]
    resolution: usize,
    /// Also scan every pair of cohorts with n up to this size that share a
    /// GPA value.
    #[arg(long)]
    scan: Option<u64>,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: OutputFormat,
    #[arg(long)]
    sequential: bool,
}

fn parse_model(s: &str) -> Result<ModelKind, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl From<InvariantViolation> for Failure {
    fn from(v: InvariantViolation) -> Self {
        Failure::Invariant(v.to_string())
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn read_source(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_boundaries(path: Option<&Path>) -> Result<GradeBoundaries, Failure> {
    match path {
        None => Ok(GradeBoundaries::default()),
        Some(p) => GradeBoundaries::parse(&read_source(p)?)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
    }
}

fn load_groups(
    counts: Option<&Path>,
    scores: Option<&Path>,
    boundaries: Option<&Path>,
) -> Result<GroupCounts, Failure> {
    let (path, parsed) = match (counts, scores) {
        (Some(p), _) => (p, parse_counts(read_source(p)?.as_bytes())),
        (None, Some(p)) => {
            let bands = load_boundaries(boundaries)?;
            (p, parse_scores(read_source(p)?.as_bytes(), &bands))
        }
        (None, None) => {
            return Err(Failure::Input(
                "one of --counts or --scores is required".into(),
            ))
        }
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn select(
    groups: GroupCounts,
    wanted: &[String],
) -> Result<Vec<(String, fuzzy_assess::GradeCounts)>, Failure> {
    if wanted.is_empty() {
        return Ok(groups.into_iter().collect());
    }
    wanted
        .iter()
        .map(|id| {
            groups
                .get(id)
                .map(|c| (id.clone(), *c))
                .ok_or_else(|| Failure::Input(format!("no group named {id:?} in the input")))
        })
        .collect()
}

fn reports_for(input: &InputArgs) -> Result<Vec<AssessmentReport>, Failure> {
    let groups = load_groups(
        input.counts.as_deref(),
        input.scores.as_deref(),
        input.boundaries.as_deref(),
    )?;
    let selected = select(groups, &input.groups)?;
    let reports = assess_batch(&selected, execution(input.sequential));
    for r in &reports {
        r.check_linkage()?;
    }
    Ok(reports)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Assess(input) => {
            let reports = reports_for(&input)?;
            Ok(render_report(&reports, None, input.format))
        }
        Command::Compare(input) => {
            let reports = reports_for(&input)?;
            if reports.len() != 2 {
                return Err(Failure::Input(format!(
                    "compare needs exactly two groups, got {} (use --groups A,B to pick)",
                    reports.len()
                )));
            }
            let matrix = compare_pair(&reports[0], &reports[1])?;
            Ok(render_report(&reports, Some(&matrix), input.format))
        }
        Command::Rank { input, model } => {
            let reports = reports_for(&input)?;
            let ranked = rank(&reports, model).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(render_ranking(&ranked, model, input.format))
        }
        Command::Verify(args) => verify(args),
    }
}

fn verify(args: VerifyArgs) -> Result<String, Failure> {
    let exec = execution(args.sequential);
    let (source, cohorts) = if args.counts.is_some() || args.scores.is_some() {
        let groups = load_groups(
            args.counts.as_deref(),
            args.scores.as_deref(),
            args.boundaries.as_deref(),
        )?;
        (
            "input cohorts".to_string(),
            groups.into_values().collect::<Vec<_>>(),
        )
    } else {
        if args.max_n == 0 {
            return Err(Failure::Input("--max-n must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let cohorts = (0..args.samples)
            .map(|_| random_counts(&mut rng, args.max_n))
            .collect();
        (
            format!(
                "seed {}, {} random cohorts, n ≤ {}",
                args.seed, args.samples, args.max_n
            ),
            cohorts,
        )
    };
    if args.resolution < fuzzy_assess::oracle::MIN_RESOLUTION {
        return Err(Failure::Input(format!(
            "--resolution must be at least {}",
            fuzzy_assess::oracle::MIN_RESOLUTION
        )));
    }
    let freqs: Vec<FrequencyVector> = cohorts.iter().map(FrequencyVector::from_counts).collect();
    let summary = VerificationSummary {
        source,
        oracle: oracle_sweep(&freqs, args.integrate, args.resolution, exec),
        theorems: theorem_sweep(&cohorts, exec),
        scan: args.scan.map(|n| equal_gpa_scan(n, exec)),
    };
    let rendered = render_verification(&summary, args.format);
    if summary.failures() > 0 {
        print!("{rendered}");
        return Err(Failure::Invariant(format!(
            "verification found {} unexpected results",
            summary.failures()
        )));
    }
    Ok(rendered)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
