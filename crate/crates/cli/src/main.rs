use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcongruence::congruence::Status;
use qcongruence::harness::{self, registry, Axis, Overrides, Report, Summary};
use qcongruence::sums::{classical_identity_check, ClassicalIdentity, Modes};

#[derive(Parser)]
#[command(name = "qcong", version, about = "Exact verification of q-congruences and supercongruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one or more cases over their parameter grids.
    Verify(RunArgs),
    /// Verify every registered case (or the selected ones).
    Sweep(RunArgs),
    /// Check classical summation identities.
    Identity(IdentityArgs),
    /// List registered cases with their source anchors.
    List(ListArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write output here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct RunArgs {
    /// Case ids, repeatable or comma-separated.
    #[arg(long, value_delimiter = ',')]
    case: Vec<String>,
    /// Values for n: `lo..hi` (inclusive) or a comma list.
    #[arg(long, value_parser = parse_range)]
    n: Option<Values>,
    #[arg(long, value_parser = parse_range)]
    d: Option<Values>,
    #[arg(long, value_parser = parse_range)]
    r: Option<Values>,
    #[arg(long, value_parser = parse_range)]
    s: Option<Values>,
    #[arg(long, value_parser = parse_range)]
    p: Option<Values>,
    #[arg(long, value_parser = parse_range)]
    k: Option<Values>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Add q (or 1) to every expected side.
    #[arg(long, hide = true)]
    perturb_rhs: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct IdentityArgs {
    /// Identity names, comma-separated; all when omitted.
    #[arg(long, value_delimiter = ',')]
    name: Vec<String>,
    #[arg(long, value_parser = parse_range)]
    n: Option<Values>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    output: Output,
}

/// An inclusive span or explicit list of integers.
#[derive(Clone)]
struct Values(Vec<i64>);

fn parse_range(s: &str) -> Result<Values, String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        return Ok(Values((lo..=hi).collect()));
    }
    s.split(',').map(parse).collect::<Result<_, _>>().map(Values)
}

fn write_output(out: &Output, text: &str) -> std::io::Result<()> {
    match &out.out {
        None => std::io::stdout().write_all(text.as_bytes()),
        Some(path) => write_atomically(path, text),
    }
}

fn write_atomically(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn table(reports: &[Report], summary: &Summary, verbose: bool) -> String {
    let mut s = String::new();
    let mut cases: Vec<&str> = reports.iter().map(|r| r.case.as_str()).collect();
    cases.dedup();
    for case in cases {
        let rows: Vec<&Report> = reports.iter().filter(|r| r.case == case).collect();
        for r in &rows {
            if !verbose && r.status == Status::Verified {
                continue;
            }
            s += &format!("  {:<13} {:<28} {:<9} {}\n", r.case, r.params.to_string(), r.status, r.modulus);
            if let Some(w) = &r.witness {
                s += &format!("      witness: {w}\n");
            }
            if let Some(why) = &r.reason {
                s += &format!("      reason: {why}\n");
            }
            if verbose {
                for line in &r.strategy {
                    s += &format!("      - {line}\n");
                }
            }
        }
        let c = Summary::of(&rows.into_iter().cloned().collect::<Vec<_>>());
        s += &format!(
            "{case}: {} verified, {} failed, {} skipped ({} unexpected)\n",
            c.verified, c.failed, c.skipped, c.unexpected_skips
        );
    }
    s += &format!(
        "total: {} verified, {} failed, {} skipped ({} unexpected)\n",
        summary.verified, summary.failed, summary.skipped, summary.unexpected_skips
    );
    s
}

fn run(args: RunArgs, all_by_default: bool) -> Result<ExitCode, String> {
    let mut ids: Vec<&str> = args.case.iter().map(String::as_str).collect();
    if ids.is_empty() {
        if !all_by_default {
            return Err("verify needs at least one --case".into());
        }
        ids = registry().iter().map(|c| c.id).collect();
    }
    let mut overrides = Overrides { perturb_rhs: args.perturb_rhs, ..Overrides::default() };
    for (axis, v) in [(Axis::N, args.n), (Axis::D, args.d), (Axis::R, args.r), (Axis::S, args.s), (Axis::P, args.p), (Axis::K, args.k)] {
        if let Some(Values(v)) = v {
            overrides.set(axis, v);
        }
    }
    let sweep = harness::run_sweep(&ids, &overrides, args.workers).map_err(|e| e.to_string())?;
    let text = match args.output.format {
        Format::Table => table(&sweep.reports, &sweep.summary, args.output.verbose),
        Format::Json => harness::to_json(&sweep.reports) + "\n",
        Format::Csv => harness::to_csv(&sweep.reports),
    };
    write_output(&args.output, &text).map_err(|e| format!("writing output: {e}"))?;
    if args.output.verbose && !matches!(args.output.format, Format::Table) {
        eprint!("{}", table(&[], &sweep.summary, false));
    }
    Ok(if sweep.summary.is_success() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn identity(args: IdentityArgs) -> Result<ExitCode, String> {
    let ids: Vec<ClassicalIdentity> = if args.name.is_empty() {
        ClassicalIdentity::ALL.to_vec()
    } else {
        args.name.iter().map(|n| n.parse().map_err(|e: qcongruence::Error| e.to_string())).collect::<Result<_, _>>()?
    };
    let ns = args.n.map_or_else(|| (0..=8).collect(), |v| v.0);
    let mut rows = Vec::new();
    let mut ok = true;
    for id in ids {
        for &n in &ns {
            let status = match classical_identity_check(id, n, &Modes::symbolic()) {
                Ok(true) => "holds".to_string(),
                Ok(false) => {
                    ok = false;
                    "FAILS".to_string()
                }
                Err(e) => {
                    ok = false;
                    format!("error: {e}")
                }
            };
            rows.push((id.name(), n, status));
        }
    }
    let text = match args.output.format {
        Format::Table => rows.iter().map(|(id, n, st)| format!("{id:<22} n={n:<3} {st}\n")).collect(),
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(id, n, st)| serde_json::json!({"identity": id, "n": n, "status": st}))
                .collect();
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("identity,n,status\n");
            for (id, n, st) in &rows {
                s += &format!("{id},{n},{st}\n");
            }
            s
        }
    };
    write_output(&args.output, &text).map_err(|e| format!("writing output: {e}"))?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn list(args: ListArgs) -> Result<ExitCode, String> {
    let text = match args.output.format {
        Format::Json => {
            let v: Vec<_> = registry()
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "case": c.id,
                        "axes": c.axes.iter().map(|a| a.name()).collect::<Vec<_>>(),
                        "statement": c.provenance.statement,
                        "quote": c.provenance.quote,
                        "label": c.provenance.label,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        _ => {
            let mut s = String::new();
            for c in registry() {
                let axes: Vec<_> = c.axes.iter().map(|a| a.name()).collect();
                s += &format!("{:<13} [{}] {}\n", c.id, axes.join(","), c.provenance.statement);
                if let Some(label) = c.provenance.label {
                    s += &format!("              ({label})\n");
                }
                s += &format!("              \"{}\"\n", c.provenance.quote);
            }
            s
        }
    };
    write_output(&args.output, &text).map_err(|e| format!("writing output: {e}"))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Verify(a) => run(a, false),
        Command::Sweep(a) => run(a, true),
        Command::Identity(a) => identity(a),
        Command::List(a) => list(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
