mod batch;
mod cache;
mod config;
mod construct;
mod fail;
mod record;
mod reduce;
mod runner;
mod verify;

use cache::Cache;
use clap::{Parser, Subcommand, ValueEnum};
use config::ConfigFile;
use fail::{io, Failure};
use record::{consistent, AnalyzeOptions, Skip};
use snarklab::io::write_multi_text;
use snarklab::reductions::RuleSet;
use snarklab::suites::{Suite, SuiteOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "snarklab",
    version,
    about = "Exact invariants and constructions for snarks"
)]
struct Cli {
    /// key = value settings; also SNARKLAB_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Multi,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// ζ is computed exactly up to this cap [default 7].
    #[arg(long)]
    max_zeta: Option<usize>,
    #[arg(long, value_enum, value_delimiter = ',')]
    skip: Vec<Skip>,
    /// [default json]
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Record per-stage wall-clock seconds.
    #[arg(long)]
    timings: bool,
    /// JSON-lines record cache, reused and extended.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Worker threads [default 1].
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariant records for every graph in the input files.
    Analyze {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        args: AnalyzeArgs,
    },
    /// Build a named family.
    #[command(after_help = construct::FAMILIES)]
    Construct {
        family: String,
        params: Vec<String>,
        /// Output file; a `.json` sidecar with the construction trace is
        /// written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// [default graph6 when simple]
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Apply oddness-preserving reductions and report the trace.
    Reduce {
        input: PathBuf,
        #[arg(long, default_value = "all")]
        rule: String,
        /// Write the reduced graphs here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run a verification suite: claims, properties or oracles.
    Verify {
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest catalogue order used by the property and oracle checks.
        #[arg(long)]
        size_cap: Option<usize>,
        /// [default text]
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        timings: bool,
    },
    /// Analyse every graph file in a directory and summarise n/ω by ζ.
    Batch {
        dir: PathBuf,
        #[command(flatten)]
        args: AnalyzeArgs,
        /// Keep the existing cache entries instead of starting it afresh.
        #[arg(long)]
        resume: bool,
        /// Fail unless every uncolourable graph has this oddness.
        #[arg(long)]
        expect_oddness: Option<usize>,
    },
}

fn write_out(out: &mut impl Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes())
        .map_err(|e| Failure::Io(format!("stdout: {e}")))
}

fn write_file(path: &Path, s: &str) -> Result<(), Failure> {
    std::fs::write(path, s).map_err(|e| io(path, e))
}

struct Resolved {
    opts: AnalyzeOptions,
    format: Format,
    cache: Option<PathBuf>,
    jobs: usize,
}

fn resolve(cfg: &ConfigFile, a: AnalyzeArgs) -> Result<Resolved, Failure> {
    let skip = if a.skip.is_empty() {
        match cfg.get::<String>(None, "skip")? {
            Some(s) => s
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    <Skip as ValueEnum>::from_str(x.trim(), true)
                        .map_err(|e| Failure::Usage(format!("skip: {e}")))
                })
                .collect::<Result<_, _>>()?,
            None => vec![],
        }
    } else {
        a.skip
    };
    let jobs = cfg.get_or(a.jobs, "jobs", 1)?;
    if jobs == 0 {
        return Err(Failure::Usage("jobs must be at least 1".into()));
    }
    Ok(Resolved {
        opts: AnalyzeOptions {
            max_zeta: cfg.get_or(a.max_zeta, "max_zeta", 7)?,
            skip,
            timings: a.timings || cfg.get_or(None, "timings", false)?,
        },
        format: cfg.get_or(a.format, "format", Format::Json)?,
        cache: cfg.get(a.cache, "cache")?,
        jobs,
    })
}

fn rows_out(rows: &[runner::Row], format: Format, out: &mut impl Write) -> Result<(), Failure> {
    let mut s = String::new();
    if format == Format::Text {
        s.push_str(&runner::text_header());
        s.push('\n');
    }
    for r in rows {
        match format {
            Format::Json => s.push_str(&serde_json::to_string(r).expect("rows serialize")),
            Format::Text => s.push_str(&runner::text_row(r)),
        }
        s.push('\n');
    }
    write_out(out, &s)
}

fn check_rows(rows: &[runner::Row]) -> Result<(), Failure> {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.record().is_some_and(|x| !consistent(x)))
        .map(|r| format!("{}:{}", r.source, r.line))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "inconsistent records at {}",
            bad.join(", ")
        )))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = ConfigFile::load(cli.config.as_deref())?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Analyze { inputs, args } => {
            let r = resolve(&cfg, args)?;
            let mut items = Vec::new();
            for p in &inputs {
                items.extend(runner::read_items(p)?);
            }
            let cache = r
                .cache
                .as_deref()
                .map(|p| Cache::open(p, true))
                .transpose()?;
            let rows = runner::analyze_items(&items, &r.opts, cache.as_ref(), r.jobs)?;
            rows_out(&rows, r.format, &mut out)?;
            check_rows(&rows)
        }
        Cmd::Batch {
            dir,
            args,
            resume,
            expect_oddness,
        } => {
            let r = resolve(&cfg, args)?;
            if !dir.is_dir() {
                return Err(Failure::Io(format!("{}: not a directory", dir.display())));
            }
            let items = batch::read_dir_items(&dir)?;
            let cache = r
                .cache
                .as_deref()
                .map(|p| Cache::open(p, resume))
                .transpose()?;
            let rows = runner::analyze_items(&items, &r.opts, cache.as_ref(), r.jobs)?;
            rows_out(&rows, r.format, &mut out)?;
            let summary = batch::summarize(&rows);
            match r.format {
                Format::Json => write_out(
                    &mut out,
                    &format!("{}\n", serde_json::json!({ "summary": summary })),
                )?,
                Format::Text => {
                    write_out(&mut out, &format!("\n{}", batch::summary_text(&summary)))?
                }
            }
            check_rows(&rows)?;
            if let Some(w) = expect_oddness {
                let off: Vec<String> = rows
                    .iter()
                    .filter_map(|row| {
                        let x = row.record()?;
                        let got = x.oddness.as_ref()?.exact();
                        (!x.colourable && got != Some(w))
                            .then(|| format!("{}:{}", row.source, row.line))
                    })
                    .collect();
                if !off.is_empty() {
                    return Err(Failure::Verify(format!(
                        "oddness differs from {w} at {}",
                        off.join(", ")
                    )));
                }
            }
            Ok(())
        }
        Cmd::Construct {
            family,
            params,
            out: path,
            format,
        } => {
            let built = construct::build(&family, &params)?;
            let mut text = String::new();
            let mut sidecar = Vec::new();
            for b in &built {
                let fmt = match format {
                    Some(f) => f,
                    None if b.graph.is_simple() => GraphFormat::Graph6,
                    None => GraphFormat::Multi,
                };
                match fmt {
                    GraphFormat::Graph6 => {
                        text.push_str(&snarklab::io::write_graph6(&b.graph)?);
                        text.push('\n');
                    }
                    GraphFormat::Multi => text.push_str(&write_multi_text(&b.graph)),
                }
                sidecar.push(serde_json::json!({
                    "family": family,
                    "params": params,
                    "order": b.graph.order(),
                    "size": b.graph.size(),
                    "canonical_key": snarklab::canon::canonical_key(&b.graph),
                    "terminals": b.network.as_ref().map(|n| n.terminals().to_vec()),
                    "connectors": b.network.as_ref().map(|n| n.connectors().to_vec()),
                    "trace": b.trace,
                }));
            }
            match path {
                Some(p) => {
                    write_file(&p, &text)?;
                    let mut side = p.clone().into_os_string();
                    side.push(".json");
                    let body = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
                    write_file(Path::new(&side), &format!("{body}\n"))
                }
                None => write_out(&mut out, &text),
            }
        }
        Cmd::Reduce {
            input,
            rule,
            out: path,
            format,
        } => {
            let rules = RuleSet::from_str(&rule).map_err(|e| Failure::Usage(e.to_string()))?;
            let format = cfg.get_or(format, "format", Format::Json)?;
            let items = runner::read_items(&input)?;
            let mut failed = 0;
            let mut graphs = String::new();
            let mut s = String::new();
            for it in &items {
                let (v, g) = reduce::reduce_item(it, rules);
                match g {
                    Some(g) => {
                        graphs.push_str(&reduce::encode(&g));
                        graphs.push('\n');
                    }
                    None => failed += 1,
                }
                match format {
                    Format::Json => s.push_str(&format!("{v}\n")),
                    Format::Text => s.push_str(&reduce::text(&v)),
                }
            }
            write_out(&mut out, &s)?;
            if let Some(p) = path {
                write_file(&p, &graphs)?;
            }
            if failed > 0 {
                Err(Failure::Verify(format!(
                    "{failed} of {} inputs could not be reduced",
                    items.len()
                )))
            } else {
                Ok(())
            }
        }
        Cmd::Verify {
            suite,
            seed,
            size_cap,
            format,
            timings,
        } => {
            let suite = Suite::from_str(&suite).map_err(|e| Failure::Usage(e.to_string()))?;
            let opts = SuiteOptions {
                seed: cfg.get_or(seed, "seed", 1)?,
                size_cap: cfg.get(size_cap, "size_cap")?,
            };
            let format = cfg.get_or(format, "format", Format::Text)?;
            let timings = timings || cfg.get_or(None, "timings", false)?;
            verify::run(suite, &opts, format == Format::Json, timings, &mut out)
        }
    }
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    if let Err(f) = run(cli) {
        eprintln!("snarklab: {f}");
        std::process::exit(f.code());
    }
}
