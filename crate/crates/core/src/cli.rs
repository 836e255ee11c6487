//! The `hbg` command line.
//!
//! Exit codes: 0 success or `Exists`, 1 certified `NonExistent`, 2
//! `Inconclusive` (budget exhausted), 3 usage or input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{
    builtin_references, compare_report, export_graph, ingest_reference, CatalogStore, ExportFormat,
    RefFormat, ReferenceList,
};
use crate::error::{HbgError, Result};
use crate::girth::{girth_oracle, girth_symmetric, spot_check, stabilization};
use crate::graph::build_graph;
use crate::search::{
    scan_orders, search_with, Progress, SearchOptions, SearchOutcome, SearchTask, SymPolicy, Verdict,
};
use crate::spec::{validate_spec, ChordIndexSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONEXISTENT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

pub const CATALOG_ENV: &str = "HBG_CATALOG";

#[derive(Debug, Parser)]
#[command(name = "hbg", version, about = "Hamiltonian bipartite trivalent graphs from chord indices")]
pub struct Cli {
    /// Worker threads for searches (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Catalog file (JSON Lines). Defaults to $HBG_CATALOG.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph, print its girth and optionally export it.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        /// adjacency, dot or graph6.
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Girth and a shortest cycle.
    Girth {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also run the all-sources BFS and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search one (girth, order, symmetry factor).
    Search {
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        sym: usize,
        /// Node budget, 0 = unbounded.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long)]
        no_canonical: bool,
        #[command(flatten)]
        progress: ProgressArgs,
        #[arg(long)]
        json: bool,
    },
    /// Scan a range of even orders.
    Scan {
        #[arg(long)]
        girth: usize,
        /// Inclusive range `A..B`.
        #[arg(long)]
        orders: String,
        /// ascending, descending, full, or a comma-separated list of factors.
        #[arg(long, default_value = "ascending")]
        sym_policy: String,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[command(flatten)]
        progress: ProgressArgs,
    },
    /// Certify a girth-stable family and spot-check it.
    Family {
        #[arg(long)]
        sym: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        chords: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        spot_checks: usize,
        #[arg(long)]
        girth_hint: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Compare the catalog against reference lists.
    Report {
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        until: usize,
        /// `name=path` of a CSV list; repeatable. Without it the bundled
        /// lists for the girth are used.
        #[arg(long = "ref", value_parser = parse_ref)]
        refs: Vec<(String, PathBuf)>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long)]
    order: usize,
    /// Symmetry factor; defaults to the number of chords.
    #[arg(long)]
    sym: Option<usize>,
    /// Comma-separated odd chord indices.
    #[arg(long, value_delimiter = ',', required = true)]
    chords: Vec<usize>,
}

impl SpecArgs {
    fn spec(&self) -> ChordIndexSpec {
        let chords = self.chords.clone();
        ChordIndexSpec::new(self.order, self.sym.unwrap_or(chords.len()), chords)
    }
}

#[derive(Debug, Args)]
struct ProgressArgs {
    /// Progress line on stderr every N nodes (0 = off).
    #[arg(long, default_value_t = 10_000_000)]
    progress_every: u64,
}

fn parse_ref(s: &str) -> std::result::Result<(String, PathBuf), String> {
    let (name, path) = s.split_once('=').ok_or("expected name=path")?;
    Ok((name.to_string(), PathBuf::from(path)))
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || HbgError::InvalidRange(format!("expected A..B, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    Ok((a, b))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let catalog = cli
        .catalog
        .clone()
        .or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from))
        .map(CatalogStore::open);
    let threads = cli.threads;
    match cli.command {
        Command::Build { spec, format, out: path } => {
            let format = format.map(|f| f.parse::<ExportFormat>()).transpose()?;
            cmd_build(&spec.spec(), format, path, out)
        }
        Command::Girth { spec, oracle, json } => cmd_girth(&spec.spec(), oracle, json, out, err),
        Command::Search {
            girth,
            order,
            sym,
            budget,
            no_canonical,
            progress,
            json,
        } => {
            let task = SearchTask::new(girth, order, sym)
                .with_budget(budget)
                .with_canonical(!no_canonical);
            task.validate()?;
            let outcome = with_progress(threads, progress.progress_every, |opts| search_with(&task, opts))?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&outcome)?)?;
            } else {
                print_outcome(&outcome, out)?;
            }
            if let Some(store) = &catalog {
                store.append_outcome(&outcome)?;
            }
            Ok(verdict_code(outcome.verdict))
        }
        Command::Scan {
            girth,
            orders,
            sym_policy,
            budget,
            progress,
        } => {
            let (lo, hi) = parse_range(&orders)?;
            let policy: SymPolicy = sym_policy.parse()?;
            SearchTask::new(girth, 6, 1).validate()?;
            let results = with_progress(threads, progress.progress_every, |opts| {
                scan_orders(girth, lo, hi, &policy, budget, opts)
            })?;
            let mut code = EXIT_OK;
            for r in &results {
                let b = &r.best;
                match (&b.witness, r.verdict) {
                    (Some(w), _) => writeln!(
                        out,
                        "order {}: Exists b={} chords={}",
                        r.order,
                        w.sym_factor(),
                        join(w.chords())
                    )?,
                    (None, v) => writeln!(out, "order {}: {v} b={}", r.order, b.task.sym_factor)?,
                }
                if r.verdict == Verdict::Inconclusive {
                    code = EXIT_INCONCLUSIVE;
                }
                if let Some(store) = &catalog {
                    store.append_outcome(b)?;
                }
            }
            Ok(code)
        }
        Command::Family {
            sym,
            chords,
            spot_checks,
            girth_hint,
            json,
        } => {
            let cert = stabilization(&chords, sym, girth_hint)?;
            let spots = spot_check(&cert, &cert.spot_orders(spot_checks))?;
            if json {
                let v = serde_json::json!({ "certificate": cert, "spot_checks": spots });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            } else {
                writeln!(out, "chords: {} (b={})", join(&cert.chords), cert.sym_factor)?;
                writeln!(out, "stable girth: {}", cert.stable_girth)?;
                writeln!(out, "threshold order: {}", cert.threshold_order)?;
                writeln!(out, "analytic order: {}", cert.analytic_order)?;
                for s in &spots {
                    let mark = if s.agrees { "ok" } else { "MISMATCH" };
                    writeln!(out, "spot order {}: girth {} {mark}", s.order, s.girth)?;
                }
            }
            if spots.iter().all(|s| s.agrees) {
                Ok(EXIT_OK)
            } else {
                writeln!(err, "spot check disagrees with the certificate")?;
                Ok(EXIT_USAGE)
            }
        }
        Command::Report { girth, until, refs, json } => {
            let records = match &catalog {
                Some(store) => store.load_all()?,
                None => Vec::new(),
            };
            let lists: Vec<ReferenceList> = if refs.is_empty() {
                builtin_references(girth)
            } else {
                refs.iter()
                    .map(|(name, path)| {
                        let mut l = ingest_reference(path, RefFormat::Csv)?.with_girth(girth);
                        l.name = name.clone();
                        l.class = crate::catalog::RefClass::from_name(name);
                        Ok(l)
                    })
                    .collect::<Result<_>>()?
            };
            let report = compare_report(&records, &lists, girth, until);
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn with_progress<T>(
    threads: Option<usize>,
    every: u64,
    f: impl FnOnce(&SearchOptions<'_>) -> Result<T>,
) -> Result<T> {
    let report = |p: &Progress| {
        eprintln!(
            "progress: nodes={} depth={} girth_prunes={} canonical_prunes={}",
            p.nodes, p.depth, p.girth_prunes, p.canonical_prunes
        );
    };
    let opts = SearchOptions {
        threads,
        progress_every: every,
        progress: Some(&report),
        any_witness: false,
    };
    f(&opts)
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Exists => EXIT_OK,
        Verdict::NonExistent => EXIT_NONEXISTENT,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn print_outcome(o: &SearchOutcome, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "verdict: {}", o.verdict)?;
    if let Some(w) = &o.witness {
        writeln!(out, "witness: {}", join(w.chords()))?;
    }
    writeln!(out, "nodes: {}", o.stats.nodes)?;
    writeln!(out, "girth prunes: {}", o.stats.girth_prunes_total())?;
    writeln!(out, "canonical prunes: {}", o.stats.canonical_prunes_total())?;
    writeln!(out, "seconds: {:.3}", o.stats.seconds)?;
    Ok(())
}

fn check_valid(spec: &ChordIndexSpec, out: &mut dyn Write) -> Result<bool> {
    let report = validate_spec(spec);
    if !report.is_valid() {
        writeln!(out, "spec: {spec}")?;
        writeln!(out, "verdict: invalid")?;
        for v in &report.violations {
            writeln!(out, "violation: {v}")?;
        }
    }
    Ok(report.is_valid())
}

fn cmd_build(
    spec: &ChordIndexSpec,
    format: Option<ExportFormat>,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    if !check_valid(spec, out)? {
        return Ok(EXIT_USAGE);
    }
    let g = girth_symmetric(spec)?;
    writeln!(out, "spec: {spec}")?;
    writeln!(out, "verdict: valid")?;
    writeln!(out, "girth: {}", g.girth)?;
    let format = format.or(path.as_ref().map(|_| ExportFormat::Adjacency));
    if let Some(f) = format {
        let bytes = export_graph(spec, f)?;
        match path {
            Some(p) => std::fs::write(p, bytes)?,
            None => out.write_all(&bytes)?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_girth(
    spec: &ChordIndexSpec,
    oracle: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if !check_valid(spec, out)? {
        return Ok(EXIT_USAGE);
    }
    let g = girth_symmetric(spec)?;
    let brute = if oracle {
        Some(girth_oracle(&build_graph(spec)?)?)
    } else {
        None
    };
    if json {
        let v = serde_json::json!({ "spec": spec.to_string(), "result": g, "oracle": brute });
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "girth: {}", g.girth)?;
        writeln!(out, "witness: {}", join(&g.witness))?;
        writeln!(out, "root: {}", g.root_used)?;
        if let Some(o) = brute {
            writeln!(out, "oracle: {o}")?;
        }
    }
    match brute {
        Some(o) if o != g.girth => {
            writeln!(err, "oracle girth {o} disagrees with traversal girth {}", g.girth)?;
            Ok(EXIT_USAGE)
        }
        _ => Ok(EXIT_OK),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hbg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("14..50").unwrap(), (14, 50));
        assert_eq!(parse_range("14..=50").unwrap(), (14, 50));
        assert!(parse_range("14-50").is_err());
    }

    #[test]
    fn usage_errors_exit_3() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["girth", "--order", "x", "--chords", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn build_reports_girth() {
        let (code, out) = call(&["build", "--order", "12", "--sym", "1", "--chords", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("girth: 4"));
    }
}
