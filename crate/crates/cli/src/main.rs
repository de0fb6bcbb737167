use std::path::PathBuf;
use std::process::ExitCode;

use absorb_core::classify::{find_quadruple_zeros, is_phi_classical_1abs};
use absorb_core::expr::{parse_module, parse_submodule};
use absorb_core::{Phi, Witness};
use absorb_harness::{lookup, verify, Bounds, Corpus, HarnessError, Verdict, VerifyOptions, THEOREMS};
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exhaustive checks of phi-classical 1-absorbing prime submodules over finite modules.
#[derive(Parser, Debug)]
#[command(name = "absorb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct CorpusArgs {
    /// File with one module expression per line; defaults to the standard corpus.
    #[arg(long, env = "ABSORB_CORPUS")]
    corpus: Option<PathBuf>,
    /// Size limits, e.g. `max-ring=24,max-module=64`.
    #[arg(long, env = "ABSORB_BOUNDS", default_value = "max-ring=24,max-module=64")]
    bounds: String,
    /// Seed for the fuzz extension.
    #[arg(long, env = "ABSORB_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of seeded random modules appended to the corpus.
    #[arg(long, env = "ABSORB_FUZZ", default_value_t = 0)]
    fuzz: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the corpus, one module expression per line.
    Gen {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Classify one submodule against phi functions.
    Classify {
        /// Module expression, e.g. `self(zn(8))`.
        #[arg(long)]
        module: String,
        /// `zero`, `whole`, `gen:x;y` or `{x,...}`.
        #[arg(long)]
        submodule: String,
        /// Catalog names; defaults to the standard catalog.
        #[arg(long)]
        phi: Vec<String>,
        #[arg(long, env = "ABSORB_FORMAT", value_enum, default_value = "text")]
        format: Format,
    },
    /// Check registered theorems over the corpus.
    Verify {
        /// Theorem id; repeatable. `all` selects every registered id.
        #[arg(long, required = true)]
        theorem: Vec<String>,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Catalog names; defaults to the standard catalog.
        #[arg(long)]
        phi: Vec<String>,
        #[arg(long, env = "ABSORB_FORMAT", value_enum, default_value = "text")]
        format: Format,
        /// Worker threads.
        #[arg(long, env = "ABSORB_JOBS")]
        jobs: Option<usize>,
        /// Record wall time in reports; otherwise `millis` is zero.
        #[arg(long, env = "ABSORB_TIMING")]
        timing: bool,
    },
    /// Show the statement and hypotheses of a theorem id; lists ids without one.
    Explain { theorem: Option<String> },
}

/// Errors that map to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    Usage(e.to_string()).into()
}

fn harness(e: HarnessError) -> anyhow::Error {
    match e {
        HarnessError::Core(_) | HarnessError::UnknownTheorem(_) | HarnessError::Usage(_) => usage(e),
        other => other.into(),
    }
}

fn load_corpus(args: &CorpusArgs) -> anyhow::Result<Corpus> {
    let bounds = Bounds::parse(&args.bounds).map_err(harness)?;
    let corpus = match &args.corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let mut c = Corpus::parse(&text).map_err(harness)?;
            c.retain_within(bounds);
            c
        }
        None => Corpus::standard(bounds),
    };
    Ok(if args.fuzz > 0 { corpus.with_fuzz(args.seed, args.fuzz, bounds) } else { corpus })
}

fn parse_phis(names: &[String]) -> anyhow::Result<Vec<Phi>> {
    if names.is_empty() {
        return Ok(Phi::standard_catalog());
    }
    names.iter().map(|n| Phi::parse(n).map_err(usage)).collect()
}

fn witness_labels(m: &absorb_core::FiniteModule, w: Witness) -> Vec<String> {
    let r = m.ring();
    match w {
        Witness::Quadruple(a, b, c, x) => vec![r.label(a).into(), r.label(b).into(), r.label(c).into(), m.label(x).into()],
        Witness::Triple(a, b, x) => vec![r.label(a).into(), r.label(b).into(), m.label(x).into()],
    }
}

fn classify(module: &str, submodule: &str, phi: &[String], format: Format) -> anyhow::Result<ExitCode> {
    let m = parse_module(module).map_err(usage)?;
    let n = parse_submodule(&m, submodule).map_err(usage)?;
    if !n.is_proper() {
        return Err(usage("submodule must be proper"));
    }
    let mut rows = Vec::new();
    for p in parse_phis(phi)? {
        let r = is_phi_classical_1abs(&n, &p).map_err(usage)?;
        let zeros = if r.verdict { find_quadruple_zeros(&n, &p).map_err(usage)?.len() } else { 0 };
        rows.push((p.name(), r.verdict, r.witness.map(|w| witness_labels(&m, w)), zeros));
    }
    match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(phi, v, w, z)| json!({"phi": phi, "verdict": v, "witness": w, "quadruple_zeros": z}))
                .collect();
            let out = json!({"module": m.name(), "submodule": n.display(), "results": items});
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Text => {
            println!("M = {}  N = {}", m.name(), n.display());
            for (phi, _, w, z) in rows {
                match w {
                    Some(w) => println!("  {phi:<10} false  witness (a,b,c,m) = ({})", w.join(",")),
                    None => println!("  {phi:<10} true   quadruple-zeros: {z}"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    theorems: &[String],
    corpus: &CorpusArgs,
    phi: &[String],
    format: Format,
    jobs: Option<usize>,
    timing: bool,
) -> anyhow::Result<ExitCode> {
    let ids: Vec<String> = if theorems.iter().any(|t| t == "all") {
        THEOREMS.iter().map(|t| t.id.to_string()).collect()
    } else {
        theorems.to_vec()
    };
    for id in &ids {
        if lookup(id).is_none() {
            return Err(usage(format!("unknown theorem id `{id}`")));
        }
    }
    let corpus = load_corpus(corpus)?;
    let opts = VerifyOptions { phis: parse_phis(phi)?, jobs, timing, ..Default::default() };
    let mut reports = Vec::new();
    for id in &ids {
        reports.push(verify(id, &corpus, &opts).map_err(harness)?);
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Text => {
            for r in &reports {
                println!("{}", r.summary());
                for c in &r.counterexamples {
                    let moved = c.shrunk_from.as_deref().map(|s| format!(" (shrunk from {s})")).unwrap_or_default();
                    println!("    {} | {} | {}{moved}", c.spec, c.instance, c.detail);
                }
                for n in &r.notes {
                    println!("    note: {n}");
                }
            }
        }
    }
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn explain(id: Option<&str>) -> anyhow::Result<ExitCode> {
    let Some(id) = id else {
        for t in THEOREMS {
            println!("{:<15} {}", t.id, t.title);
        }
        return Ok(ExitCode::SUCCESS);
    };
    let t = lookup(id).ok_or_else(|| usage(format!("unknown theorem id `{id}`")))?;
    println!("{}: {}", t.id, t.title);
    println!("statement: {}", t.statement);
    println!("hypotheses:");
    for h in t.hypotheses {
        println!("  - {h}");
    }
    for n in t.notes {
        println!("note: {n}");
    }
    if let Some(k) = t.known_false {
        println!("literal statement fails: {k}");
    }
    println!("corpus extension: {}", t.extension_hint);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { corpus } => {
            print!("{}", load_corpus(&corpus).context("building corpus")?.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { module, submodule, phi, format } => classify(&module, &submodule, &phi, format),
        Command::Verify { theorem, corpus, phi, format, jobs, timing } => {
            run_verify(&theorem, &corpus, &phi, format, jobs, timing)
        }
        Command::Explain { theorem } => explain(theorem.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
