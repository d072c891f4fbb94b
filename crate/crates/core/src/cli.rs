//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage error, 3 capacity error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::Factorials;
use crate::census::{
    brute_force_counts, classify_row, closed_form_counts_with, critical_primes, in_set_a,
    order_graph_verdict, two_connected, CensusRow, CountSource,
};
use crate::error::Error;
use crate::graph::cache::{GraphCache, GraphRecord, CACHE_DIR_ENV};
use crate::graph::{
    components, order_graph, power_type_graph, proper_power_graph, quotient_power_graph, GraphKind,
    Limits, UndirectedGraph, VertexLabel,
};
use crate::perm::{DEFAULT_BRUTE_FORCE_CEILING, MAX_PACKED_DEGREE};
use crate::verify::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Largest graph whose components are listed vertex by vertex.
const LIST_COMPONENTS_MAX_VERTICES: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "altpower",
    version,
    about = "Power graphs of alternating groups"
)]
struct Cli {
    /// Graph cache directory.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,

    /// Largest n enumerated element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_FORCE_CEILING)]
    brute_force_ceiling: usize,

    /// Materialise element-level power graph edges up to the brute-force ceiling.
    #[arg(long, global = true)]
    element_edges: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Power,
    Quotient,
    Ptype,
    Order,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Power => GraphKind::Power,
            KindArg::Quotient => GraphKind::Quotient,
            KindArg::Ptype => GraphKind::PowerType,
            KindArg::Order => GraphKind::Order,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Component counts of the four graphs for a range of n.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        from: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        to: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Also count components on built graphs and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Run a named invariant suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        /// Seed for randomized choices in the counting procedure.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build one graph, print its counts, optionally write its record.
    Graph {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON record to stdout instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Arithmetic classification of n.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Parse(_) | Error::Precondition(_) | Error::UnknownLabel(_) => EXIT_USAGE,
        _ => EXIT_VERIFY,
    }
}

/// Runs the CLI, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let mut limits = Limits {
        brute_force: cli.brute_force_ceiling.min(MAX_PACKED_DEGREE),
        ..Limits::default()
    };
    if cli.element_edges {
        limits = limits.with_element_graph_at_brute_force();
    }
    let cache = GraphCache::resolve(cli.cache_dir.as_deref());

    let result = match cli.command {
        Command::Census {
            from,
            to,
            format,
            brute_force,
        } => census(from, to, format, brute_force, &limits, out),
        Command::Verify { suite, max_n, seed } => {
            let opts = VerifyOptions {
                max_n,
                seed,
                limits,
            };
            verify(suite, &opts, out, err)
        }
        Command::Graph {
            kind,
            n,
            out: path,
            json,
        } => graph(kind.into(), n, path, json, &limits, cache.as_ref(), out),
        Command::Classify { n, format } => classify(n, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = Result<i32, Error>;

fn census(
    from: u64,
    to: u64,
    format: Format,
    brute: bool,
    limits: &Limits,
    out: &mut dyn Write,
) -> CmdResult {
    if from > to {
        return Err(Error::Precondition(format!(
            "--from {from} exceeds --to {to}"
        )));
    }
    if brute && to as usize > limits.brute_force {
        return Err(Error::Capacity {
            what: "brute-force census",
            n: to as usize,
            ceiling: limits.brute_force,
        });
    }
    let mut facts = Factorials::new();
    let mut rows: Vec<(CensusRow, Option<CensusRow>)> = Vec::new();
    let mut mismatch = false;
    for n in from..=to {
        let mut cf = closed_form_counts_with(n as usize, &mut facts)?;
        let bf = if brute {
            let b = brute_force_counts(n as usize, limits)?;
            if (&b.c0, b.c0_ptype, b.c0_order) == (&cf.c0, cf.c0_ptype, cf.c0_order) {
                cf.source = CountSource::Both;
            } else {
                mismatch = true;
            }
            Some(b)
        } else {
            None
        };
        rows.push((cf, bf));
    }

    let mut text = String::new();
    match format {
        Format::Tsv => {
            text.push_str("n\tc0");
            if brute {
                text.push_str("\tc0_brute_force");
            }
            text.push_str("\tc0_ptype\tc0_order\trow\ttwo_connected\tsource\n");
            for (r, b) in &rows {
                let _ = write!(text, "{}\t{}", r.n, r.c0);
                if let Some(b) = b {
                    let _ = write!(text, "\t{}", b.c0);
                }
                let _ = writeln!(
                    text,
                    "\t{}\t{}\t{}\t{}\t{}",
                    r.c0_ptype,
                    r.c0_order,
                    r.row.map_or("table", |x| x.label()),
                    r.two_connected,
                    r.source
                );
            }
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(r, b)| {
                    json!({
                        "n": r.n,
                        "c0": r.c0.to_string(),
                        "c0_brute_force": b.as_ref().map(|b| b.c0.to_string()),
                        "c0_ptype": r.c0_ptype,
                        "c0_order": r.c0_order,
                        "row": r.row.map(|x| x.label()),
                        "expression": r.expression,
                        "two_connected": r.two_connected,
                        "source": r.source,
                    })
                })
                .collect();
            text = serde_json::to_string_pretty(&items)?;
            text.push('\n');
        }
        Format::Markdown => {
            text.push_str("| n | c0 | factored |");
            if brute {
                text.push_str(" c0 (brute force) |");
            }
            text.push_str(" c0(T) | c0(O) | row | 2-connected |\n|---|---|---|");
            if brute {
                text.push_str("---|");
            }
            text.push_str("---|---|---|---|\n");
            for (r, b) in &rows {
                let _ = write!(
                    text,
                    "| {} | {} | {} |",
                    r.n,
                    r.c0,
                    r.expression.as_deref().unwrap_or("")
                );
                if let Some(b) = b {
                    let _ = write!(text, " {} |", b.c0);
                }
                let _ = writeln!(
                    text,
                    " {} | {} | {} | {} |",
                    r.c0_ptype,
                    r.c0_order,
                    r.row.map_or("table", |x| x.label()),
                    if r.two_connected { "yes" } else { "no" }
                );
            }
        }
    }
    out.write_all(text.as_bytes())?;
    Ok(if mismatch { EXIT_VERIFY } else { EXIT_OK })
}

fn verify(
    suite: Suite,
    opts: &VerifyOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let checks = run_suite(suite, opts)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            writeln!(out, "{status} {}", c.name)?;
        } else {
            writeln!(out, "{status} {}: {}", c.name, c.detail)?;
        }
        // timings on stderr keep stdout reproducible
        writeln!(err, "{} took {:.3?}", c.name, c.elapsed)?;
    }
    if failed == 0 {
        writeln!(out, "PASS {suite}: {} checks", checks.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(
            out,
            "FAIL {suite}: {failed} of {} checks failed",
            checks.len()
        )?;
        Ok(EXIT_VERIFY)
    }
}

fn graph(
    kind: GraphKind,
    n: usize,
    path: Option<PathBuf>,
    as_json: bool,
    limits: &Limits,
    cache: Option<&GraphCache>,
    out: &mut dyn Write,
) -> CmdResult {
    fn emit<L: VertexLabel>(
        n: usize,
        g: UndirectedGraph<L>,
        path: Option<PathBuf>,
        as_json: bool,
        out: &mut dyn Write,
    ) -> CmdResult {
        let record = GraphRecord::from_graph(n, &g);
        if let Some(p) = &path {
            record.write(p)?;
        }
        if as_json {
            writeln!(out, "{}", record.to_json()?)?;
            return Ok(EXIT_OK);
        }
        let census = components(&g);
        writeln!(
            out,
            "kind={} n={n} vertices={} edges={} components={}",
            L::KIND,
            g.vertex_count(),
            g.edge_count(),
            census.component_count()
        )?;
        if g.vertex_count() <= LIST_COMPONENTS_MAX_VERTICES {
            for c in 0..census.component_count() {
                let members: Vec<String> = census
                    .members(c)
                    .iter()
                    .map(|&v| g.label(v).to_string())
                    .collect();
                writeln!(out, "{{{}}}", members.join(","))?;
            }
        }
        Ok(EXIT_OK)
    }

    fn load<L: VertexLabel>(
        n: usize,
        cache: Option<&GraphCache>,
        build: impl FnOnce() -> crate::Result<UndirectedGraph<L>>,
    ) -> crate::Result<UndirectedGraph<L>> {
        match cache {
            Some(c) => c.get_or_build(n, build),
            None => build(),
        }
    }

    match kind {
        GraphKind::Power => emit(
            n,
            load(n, cache, || proper_power_graph(n, limits))?,
            path,
            as_json,
            out,
        ),
        GraphKind::Quotient => emit(
            n,
            load(n, cache, || quotient_power_graph(n, limits))?,
            path,
            as_json,
            out,
        ),
        GraphKind::PowerType => emit(
            n,
            load(n, cache, || power_type_graph(n, limits))?,
            path,
            as_json,
            out,
        ),
        GraphKind::Order => emit(
            n,
            load(n, cache, || order_graph(n, limits))?,
            path,
            as_json,
            out,
        ),
    }
}

fn classify(n: u64, format: Format, out: &mut dyn Write) -> CmdResult {
    let row = if n >= 11 {
        Some(classify_row(n)?)
    } else {
        None
    };
    let primes: Vec<u64> = if n >= 11 {
        critical_primes(n)?.into_iter().collect()
    } else {
        Vec::new()
    };
    let cf = closed_form_counts_with(n as usize, &mut Factorials::new())?;
    let fields: Vec<(&str, String)> = vec![
        ("n", n.to_string()),
        ("in_set_a", in_set_a(n).to_string()),
        (
            "row",
            row.as_ref()
                .map_or("table".into(), |r| r.row.label().to_string()),
        ),
        ("critical_primes", format!("{primes:?}")),
        ("two_connected", two_connected(n)?.to_string()),
        ("c0", cf.c0.to_string()),
        ("c0_ptype", cf.c0_ptype.to_string()),
        ("c0_order", order_graph_verdict(n)?.to_string()),
    ];
    let text = match format {
        Format::Tsv => fields.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect(),
        Format::Markdown => {
            let mut s = String::from("| field | value |\n|---|---|\n");
            for (k, v) in &fields {
                let _ = writeln!(s, "| {k} | {v} |");
            }
            s
        }
        Format::Json => {
            let v = json!({
                "n": n,
                "in_set_a": in_set_a(n),
                "row": row.as_ref().map(|r| r.row.label()),
                "critical_primes": primes,
                "two_connected": cf.two_connected,
                "c0": cf.c0.to_string(),
                "c0_ptype": cf.c0_ptype,
                "c0_order": cf.c0_order,
            });
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}
