//! The `cayley-nut` command line.
//!
//! Exit codes: 0 success, 1 internal or parse error, 2 infeasible parameters
//! (or a `verify` input that is not nut), 3 search window exceeded.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use cayley_nut_core::nut::circulant_nut_witnesses;
use cayley_nut_core::{
    check_cayley_feasible, circulant_graph, construct_cayley_nut, decode_graph6, encode_graph6,
    enumerate_connection_sets, is_nut, Error, NutVerdict, SearchWindow, DEFAULT_SEARCH_WINDOW,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::format::{construction_json, degree_sequence_summary, edge_list, graph_json};
use crate::scan::run_scan;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_WINDOW: i32 = 3;

/// Environment variable setting the worker thread count for scans.
pub const THREADS_ENV: &str = "CAYLEY_NUT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cayley-nut",
    version,
    about = "Construct and certify Cayley nut graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a certified d-regular Cayley nut graph of order n.
    Construct {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutputFormat,
        /// Also write the construction certificate JSON to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Allow circulant search above the default order window.
        #[arg(long)]
        force_window: bool,
    },
    /// Check graph6 lines (from a file, or stdin when omitted or "-").
    Verify { path: Option<PathBuf> },
    /// Exhaustively search nut circulants of the given order and degree.
    SearchCirculant {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
        /// List every witness instead of the least one.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        force_window: bool,
    },
    /// Report feasibility and a certified witness for every order up to a bound.
    Scan {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        json: bool,
        /// Worker threads; overrides the CAYLEY_NUT_THREADS environment variable.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        force_window: bool,
    },
}

fn window(force: bool) -> SearchWindow {
    if force {
        SearchWindow::Unbounded
    } else {
        SearchWindow::Bounded(DEFAULT_SEARCH_WINDOW)
    }
}

fn error_exit(err: &Error, stderr: &mut dyn Write) -> i32 {
    writeln!(stderr, "error: {err}").ok();
    match err {
        Error::Infeasible { .. } => EXIT_INFEASIBLE,
        Error::SearchWindowExceeded { .. } => EXIT_WINDOW,
        _ => EXIT_INTERNAL,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INTERNAL
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                write!(stderr, "{rendered}").ok();
            } else {
                write!(stdout, "{rendered}").ok();
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct {
            order,
            degree,
            format,
            certificate,
            force_window,
        } => cmd_construct(
            order,
            degree,
            format,
            certificate,
            window(force_window),
            stdout,
            stderr,
        ),
        Command::Verify { path } => cmd_verify(path, stdin, stdout, stderr),
        Command::SearchCirculant {
            order,
            degree,
            all,
            force_window,
        } => cmd_search_circulant(order, degree, all, window(force_window), stdout, stderr),
        Command::Scan {
            degree,
            max_order,
            json,
            threads,
            force_window,
        } => cmd_scan(
            degree,
            max_order,
            json,
            threads,
            window(force_window),
            stdout,
            stderr,
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            writeln!(stderr, "error: {e}").ok();
            EXIT_INTERNAL
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

pub fn cmd_construct(
    order: usize,
    degree: usize,
    format: OutputFormat,
    certificate: Option<PathBuf>,
    window: SearchWindow,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let result = match construct_cayley_nut(order, degree, window) {
        Ok(r) => r,
        Err(e) => return Ok(error_exit(&e, stderr)),
    };
    let graph = decode_graph6(result.certificate.graph6())?;
    let doc = construction_json(&result);
    match format {
        OutputFormat::Graph6 => writeln!(stdout, "{}", result.certificate.graph6())?,
        OutputFormat::Edgelist => write!(stdout, "{}", edge_list(&graph))?,
        OutputFormat::Json => {
            let mut inline = doc.clone();
            let mut g = graph_json(&graph);
            g["provenance"] = result.certificate.provenance().into();
            inline["graph"] = g;
            writeln!(stdout, "{}", serde_json::to_string(&inline)?)?;
        }
    }
    if let Some(path) = certificate {
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    writeln!(
        stderr,
        "certified {} nut graph: n={} d={} ({})",
        result.regime,
        order,
        degree,
        result.certificate.provenance().unwrap_or("-")
    )?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    path: Option<PathBuf>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(&p).map_err(|e| format!("cannot read {}: {e}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    let (mut parse_errors, mut not_nut, mut total) = (0usize, 0usize, 0usize);
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        total += 1;
        let graph = match decode_graph6(line) {
            Ok(g) => g,
            Err(Error::Graph6 { offset, message }) => {
                parse_errors += 1;
                writeln!(stdout, "ERROR offset={offset} message=\"{message}\"")?;
                continue;
            }
            Err(e) => {
                parse_errors += 1;
                writeln!(stdout, "ERROR offset=0 message=\"{e}\"")?;
                continue;
            }
        };
        match is_nut(&graph) {
            NutVerdict::Nut(cert) => {
                let kernel: Vec<String> = cert
                    .kernel_integers()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                writeln!(
                    stdout,
                    "NUT order={} degree-sequence={} kernel=[{}]",
                    graph.order(),
                    degree_sequence_summary(&graph),
                    kernel.join(",")
                )?;
            }
            NutVerdict::NotNut(reason) => {
                not_nut += 1;
                writeln!(stdout, "NOT_NUT reason={reason}")?;
            }
        }
    }
    writeln!(
        stderr,
        "{total} checked, {} nut, {not_nut} not nut, {parse_errors} errors",
        total - not_nut - parse_errors
    )?;
    Ok(if parse_errors > 0 {
        EXIT_INTERNAL
    } else if not_nut > 0 {
        EXIT_INFEASIBLE
    } else {
        EXIT_OK
    })
}

pub fn cmd_search_circulant(
    order: usize,
    degree: usize,
    all: bool,
    window: SearchWindow,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    if let Err(e) = window.check(order) {
        return Ok(error_exit(&e, stderr));
    }
    let mut found = 0usize;
    for cs in circulant_nut_witnesses(order, degree) {
        found += 1;
        writeln!(stdout, "{cs} {}", encode_graph6(&circulant_graph(&cs)))?;
        if !all {
            break;
        }
    }
    if found == 0 {
        writeln!(stdout, "NONE")?;
    }
    if all || found == 0 {
        let candidates = enumerate_connection_sets(order, degree).count();
        writeln!(
            stderr,
            "{found} witness(es) among {candidates} connection sets"
        )?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_scan(
    degree: usize,
    max_order: usize,
    json: bool,
    threads: Option<usize>,
    window: SearchWindow,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    // n = d + 4 satisfies the order conditions, so only degree conditions can fail.
    if let Err(condition) = check_cayley_feasible(degree + 4, degree) {
        writeln!(
            stderr,
            "error: degree {degree} cannot be scanned: {condition} fails"
        )?;
        return Ok(EXIT_INFEASIBLE);
    }
    let threads = match threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(
                v.parse()
                    .map_err(|_| format!("{THREADS_ENV}={v} is not a number"))?,
            ),
            Err(_) => None,
        },
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build()?;
    let report = match pool.install(|| run_scan(degree, max_order, window)) {
        Ok(r) => r,
        Err(e) => return Ok(error_exit(&e, stderr)),
    };
    if json {
        writeln!(stdout, "{}", serde_json::to_string(&report.to_json())?)?;
    } else {
        write!(stdout, "{}", report.to_table())?;
    }
    Ok(EXIT_OK)
}
