use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tspread_core::cm::{classify_with, Rules};
use tspread_core::decomp::{decompose_by_oracle, decompose_with, ClosedForm};
use tspread_core::homological::{betti_for_spec, invariants};
use tspread_core::m2::export_m2;
use tspread_core::monomial::{count_m, enumerate_m, max_m, min_m, SquarefreeMonomial};
use tspread_core::sweep::{dimension_bound_scan, run_sweep, SweepConfig, SweepRecord};
use tspread_core::{build_segment, Error, Kind, LexsegmentSpec};

#[derive(Parser)]
#[command(name = "tspread", version, about = "t-spread lexsegment ideals: decompositions, Betti numbers, Cohen-Macaulay classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List M_{n,d,t} in decreasing squarefree lex order.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        t: usize,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Standard primary decomposition with provenance tags.
    Decompose {
        #[command(flatten)]
        spec: SpecArgs,
        /// Compare against the brute-force minimal primes.
        #[arg(long)]
        verify: bool,
    },
    /// Cohen-Macaulay verdict with the deciding branch and witness.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// pd, depth, dim, height and the Betti table where a formula applies.
    Invariants {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Compare every closed form against the oracle over a range.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        /// Skip the oracle and only exercise the closed forms.
        #[arg(long)]
        no_oracle: bool,
        /// Write every record as JSON lines here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check dim(S/I) >= (d-1)t on every spec in range.
    ConjectureScan {
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Write a self-checking Macaulay2 script.
    ExportM2 {
        #[command(flatten)]
        spec: SpecArgs,
        /// Destination; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    d: usize,
    #[arg(short)]
    t: usize,
    /// Upper endpoint as a comma-separated index list, e.g. 1,4,6.
    #[arg(short)]
    u: Option<String>,
    /// Lower endpoint as a comma-separated index list.
    #[arg(short)]
    v: Option<String>,
    /// initial, final or arbitrary; inferred from the endpoints when omitted.
    #[arg(long)]
    kind: Option<String>,
    #[arg(short, long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Use the oracle-verified corrections instead of the published statements.
    #[arg(long)]
    repaired: bool,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    d_min: usize,
    #[arg(long, default_value_t = 3)]
    d_max: usize,
    #[arg(long, default_value_t = 1)]
    t_min: usize,
    #[arg(long, default_value_t = 2)]
    t_max: usize,
    /// Restrict to these kinds (repeatable).
    #[arg(long)]
    kind: Vec<String>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    repaired: bool,
    #[arg(short, long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn parse_indices(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad index `{p}` in `{s}`")))
        })
        .collect()
}

fn parse_kind(s: &str) -> CliResult<Kind> {
    s.parse::<Kind>().map_err(CliError::from)
}

impl SpecArgs {
    fn form(&self) -> ClosedForm {
        if self.repaired {
            ClosedForm::Repaired
        } else {
            ClosedForm::Literal
        }
    }

    fn rules(&self) -> Rules {
        if self.repaired {
            Rules::Repaired
        } else {
            Rules::Literal
        }
    }

    fn spec(&self) -> CliResult<LexsegmentSpec> {
        let (n, d, t) = (self.n, self.d, self.t);
        let u = self.u.as_deref().map(parse_indices).transpose()?;
        let v = self.v.as_deref().map(parse_indices).transpose()?;
        let kind = self.kind.as_deref().map(parse_kind).transpose()?;
        let top = || max_m(n, d, t).map(|m| m.support()).ok_or_else(|| infeasible(n, d, t));
        let bottom = || min_m(n, d, t).map(|m| m.support()).ok_or_else(|| infeasible(n, d, t));
        let spec = match (kind, u, v) {
            (Some(Kind::Initial), None, Some(v)) => LexsegmentSpec::initial(n, d, t, &v)?,
            (Some(Kind::Final), Some(u), None) => LexsegmentSpec::final_segment(n, d, t, &u)?,
            (Some(kind), u, v) => {
                let u = match u {
                    Some(u) => u,
                    None => top()?,
                };
                let v = match v {
                    Some(v) => v,
                    None => bottom()?,
                };
                LexsegmentSpec::with_kind(
                    n,
                    d,
                    t,
                    SquarefreeMonomial::new(n, &u)?,
                    SquarefreeMonomial::new(n, &v)?,
                    kind,
                )?
            }
            (None, Some(u), Some(v)) => LexsegmentSpec::from_indices(n, d, t, &u, &v)?,
            (None, None, Some(v)) => LexsegmentSpec::initial(n, d, t, &v)?,
            (None, Some(u), None) => LexsegmentSpec::final_segment(n, d, t, &u)?,
            (None, None, None) => LexsegmentSpec::veronese(n, d, t)?,
        };
        Ok(spec)
    }
}

fn infeasible(n: usize, d: usize, t: usize) -> CliError {
    CliError::Usage(format!("M_(n={n},d={d},t={t}) is empty"))
}

impl RangeArgs {
    fn config(&self, oracle: bool) -> CliResult<SweepConfig> {
        let kinds = self.kind.iter().map(|k| parse_kind(k)).collect::<CliResult<Vec<_>>>()?;
        let (form, rules) = if self.repaired {
            (ClosedForm::Repaired, Rules::Repaired)
        } else {
            (ClosedForm::Literal, Rules::Literal)
        };
        Ok(SweepConfig {
            n: (self.n_min, self.n_max),
            d: (self.d_min, self.d_max),
            t: (self.t_min, self.t_max),
            kinds,
            oracle,
            threads: self.threads,
            form,
            rules,
            ..SweepConfig::default()
        })
    }
}

fn print_json(value: &impl serde::Serialize) -> CliResult<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("{s}");
    Ok(())
}

fn cmd_enumerate(n: usize, d: usize, t: usize, format: Format) -> CliResult<ExitCode> {
    let ms = enumerate_m(n, d, t);
    match format {
        Format::Json => {
            let arr: Vec<Vec<usize>> = ms.iter().map(|m| m.support()).collect();
            print_json(&arr)?;
        }
        Format::Text => {
            for m in &ms {
                println!("{m}");
            }
            println!("count: {} (formula {})", ms.len(), count_m(n, d, t));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: &SpecArgs, verify: bool) -> CliResult<ExitCode> {
    let spec = args.spec()?;
    let report = decompose_with(&spec, args.form())?;
    let check = if verify {
        let oracle = decompose_by_oracle(&build_segment(&spec))?;
        Some((oracle.supports() == report.decomposition.supports(), oracle))
    } else {
        None
    };
    match args.format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).map_err(|e| CliError::Usage(e.to_string()))?;
            value["primes"] = json!(report.decomposition.supports());
            value["provenance"] = json!(report.decomposition.provenance());
            if let Some((ok, oracle)) = &check {
                value["verify"] = json!({"match": ok, "oracle": oracle.supports()});
            }
            print_json(&value)?;
        }
        Format::Text => {
            println!("{spec}");
            println!("route: {}", tag(&report.method));
            if let Some(note) = &report.note {
                println!("note: {note}");
            }
            for (p, tag) in report.decomposition.iter() {
                println!("  {p}  [{tag}]");
            }
            println!("primes: {}", report.decomposition.len());
            if let Some((ok, oracle)) = &check {
                if *ok {
                    println!("MATCH");
                } else {
                    println!("MISMATCH");
                    println!("  closed form: {}", report.decomposition);
                    println!("  oracle:      {oracle}");
                    println!("  trace: {}", serde_json::to_string(&report.trace).unwrap_or_default());
                }
            }
        }
    }
    Ok(match check {
        Some((false, _)) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn cmd_classify(args: &SpecArgs) -> CliResult<ExitCode> {
    let spec = args.spec()?;
    let verdict = classify_with(&spec, args.rules())?;
    match args.format {
        Format::Json => print_json(&verdict)?,
        Format::Text => {
            println!("{spec}");
            println!("cohen-macaulay: {}", verdict.is_cm);
            println!("branch: {}", verdict.branch);
            println!("witness: {}", serde_json::to_string(&verdict.witness).unwrap_or_default());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_invariants(args: &SpecArgs) -> CliResult<ExitCode> {
    let spec = args.spec()?;
    let report = invariants(&spec)?;
    let betti = betti_for_spec(&spec, &build_segment(&spec))?;
    match args.format {
        Format::Json => print_json(&json!({"spec": spec, "invariants": report, "betti": betti}))?,
        Format::Text => {
            println!("{spec}");
            println!("pd(I)     = {}", report.pd_ideal);
            println!("pd(S/I)   = {}  [{}]", report.pd_quotient, tag(&report.source.pd));
            println!("depth     = {}  [{}]", report.depth, tag(&report.source.depth));
            println!("dim       = {}  [{}]", report.dim, tag(&report.source.dim));
            println!("height    = {}  [{}]", report.height, tag(&report.source.height));
            println!("cm        = {}", report.is_cm);
            match betti {
                Some(b) => print!("betti table of I:\n{b}"),
                None => println!("betti table: no closed formula applies"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn tag(value: &impl serde::Serialize) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

fn cmd_verify(range: &RangeArgs, no_oracle: bool, output: Option<&PathBuf>) -> CliResult<ExitCode> {
    let cfg = range.config(!no_oracle)?;
    let mut file = output.map(File::create).transpose()?.map(BufWriter::new);
    let stdout = io::stdout();
    let mut mismatches: Vec<SweepRecord> = Vec::new();
    let summary = run_sweep(&cfg, |r| {
        if let Some(f) = file.as_mut() {
            let line = serde_json::to_string(r).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(f, "{line}").map_err(|e| Error::Internal(e.to_string()))?;
        }
        if r.has_mismatch() {
            mismatches.push(r.clone());
        }
        Ok(())
    })?;
    if let Some(f) = file.as_mut() {
        f.flush()?;
    }
    let mut out = stdout.lock();
    match range.format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&json!({"summary": summary, "mismatches": mismatches}))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            writeln!(out, "{s}")?;
        }
        Format::Text => {
            for r in &mismatches {
                writeln!(out, "MISMATCH {}", serde_json::to_string(r).unwrap_or_default())?;
            }
            writeln!(out, "specs checked: {}", summary.specs)?;
            writeln!(out, "{:<28}{:>10}{:>10}{:>10}", "check", "match", "mismatch", "skipped")?;
            let rows = [
                ("decomposition", &summary.decomposition),
                ("betti", &summary.betti),
                ("classification", &summary.classification),
            ];
            for (name, t) in rows {
                writeln!(out, "{:<28}{:>10}{:>10}{:>10}", name, t.matched, t.mismatched, t.skipped)?;
            }
            for (name, t) in &summary.by_method {
                writeln!(out, "{:<28}{:>10}{:>10}{:>10}", format!("  route {name}"), t.matched, t.mismatched, t.skipped)?;
            }
            for (name, t) in &summary.by_branch {
                writeln!(out, "{:<28}{:>10}{:>10}{:>10}", format!("  branch {name}"), t.matched, t.mismatched, t.skipped)?;
            }
            writeln!(out, "mismatches: {}", summary.mismatches())?;
        }
    }
    Ok(if summary.mismatches() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_conjecture_scan(range: &RangeArgs) -> CliResult<ExitCode> {
    let cfg = range.config(true)?;
    let summary = dimension_bound_scan(&cfg)?;
    match range.format {
        Format::Json => print_json(&summary)?,
        Format::Text => {
            println!("specs scanned (d >= 2): {}", summary.specs);
            println!("  completely:     {}", summary.completely);
            println!("  not completely: {}", summary.non_completely);
            if summary.counterexamples.is_empty() {
                println!("dim(S/I) >= (d-1)t held on every spec");
            }
            for c in &summary.counterexamples {
                println!(
                    "POTENTIAL COUNTEREXAMPLE {}: dim {} < {} (completely: {})",
                    c.spec, c.dim, c.bound, c.completely
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_m2(args: &SpecArgs, output: Option<&PathBuf>) -> CliResult<ExitCode> {
    let spec = args.spec()?;
    let script = export_m2(&spec, args.form())?;
    match output {
        Some(path) => std::fs::write(path, script)?,
        None => print!("{script}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match &cli.command {
        Command::Enumerate { n, d, t, format } => cmd_enumerate(*n, *d, *t, *format),
        Command::Decompose { spec, verify } => cmd_decompose(spec, *verify),
        Command::Classify { spec } => cmd_classify(spec),
        Command::Invariants { spec } => cmd_invariants(spec),
        Command::Verify {
            range,
            no_oracle,
            output,
        } => cmd_verify(range, *no_oracle, output.as_ref()),
        Command::ConjectureScan { range } => cmd_conjecture_scan(range),
        Command::ExportM2 { spec, output } => cmd_export_m2(spec, output.as_ref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
