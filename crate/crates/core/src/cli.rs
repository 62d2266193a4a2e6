//! The `johnson` command line.
//!
//! Machine-readable output (JSON lines, edge lists, DOT) goes to `out`;
//! diagnostics go to `err`. Exit codes: 0 success, 1 usage error,
//! 2 validation or regime error, 3 internal consistency failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cliques::{
    classify, clique_number, clique_partition, clique_partition_number, enumerate_max_cliques,
    enumerate_min_cliques, extend_to_maximal, Clique, CliqueClassification, MaximalClique,
};
use crate::combinat::VertexLabel;
use crate::error::{Error, Result};
use crate::graph::{export, ExportFormat, JohnsonParams, Regime, DEFAULT_EXPORT_CAP};
use crate::oracle::{verify_range, DEFAULT_MATERIALIZE_CAP};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

/// Environment variable overriding the materialization cap of `verify`.
pub const MAX_VERTICES_ENV: &str = "JOHNSON_MAX_VERTICES";

#[derive(Debug, Parser)]
#[command(
    name = "johnson",
    version,
    about = "Cliques of Johnson graphs J_n(m, m-1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, clap::Args)]
struct Params {
    /// Ground-set size
    #[arg(long)]
    n: u32,
    /// Label size
    #[arg(long)]
    m: u32,
}

impl Params {
    fn build(self) -> Result<JohnsonParams> {
        JohnsonParams::new(self.n, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassFilter {
    Min,
    Max,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliqueFormat {
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Export the graph
    Gen {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value = "edgelist", value_parser = parse_format)]
        format: ExportFormat,
        /// Write to FILE instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test adjacency of two labels
    Adj {
        #[command(flatten)]
        params: Params,
        #[arg(num_args = 2, required = true)]
        labels: Vec<String>,
    },
    /// List maximal cliques, one JSON object per line
    Cliques {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassFilter,
        #[arg(long, value_enum, default_value = "json")]
        format: CliqueFormat,
    },
    /// Classify a clique by its maximal extensions
    Classify {
        #[command(flatten)]
        params: Params,
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// The maximal cliques containing a clique
    Extend {
        #[command(flatten)]
        params: Params,
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// A minimum edge partition into cliques
    Partition {
        #[command(flatten)]
        params: Params,
    },
    /// Clique number and clique partition number
    Number {
        #[command(flatten)]
        params: Params,
    },
    /// Check the closed forms against brute force over ranges of (n, m)
    Verify {
        /// Inclusive range A..B
        #[arg(long, value_parser = parse_range)]
        m_range: RangeInclusive<u32>,
        /// Inclusive range C..D
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<u32>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Add elapsed_ms to each report (output is then not reproducible)
        #[arg(long)]
        timings: bool,
    },
}

fn parse_format(s: &str) -> std::result::Result<ExportFormat, String> {
    s.parse()
}

/// `A..B` or `A..=B` (both inclusive), or a single `A`.
fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("bad range bound {t:?} in {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

fn parse_labels(raw: &[String]) -> Result<Vec<VertexLabel>> {
    raw.iter().map(|s| s.parse()).collect()
}

fn materialize_cap() -> Result<u64> {
    match std::env::var(MAX_VERTICES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidParams(format!(
                "{MAX_VERTICES_ENV}={v:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MATERIALIZE_CAP),
    }
}

fn json_line<W: Write + ?Sized, T: Serialize + ?Sized>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Flat<'a> {
    #[serde(flatten)]
    clique: &'a MaximalClique,
    classification: &'static str,
}

#[derive(Serialize)]
#[serde(untagged)]
enum ClassificationOut<'a> {
    Singleton {
        classification: &'static str,
        label: &'a VertexLabel,
    },
    Edge {
        classification: &'static str,
        extensions: [&'a MaximalClique; 2],
    },
    One(Flat<'a>),
}

fn classification_out(c: &CliqueClassification) -> ClassificationOut<'_> {
    let classification = c.kind();
    match c {
        CliqueClassification::Singleton(label) => ClassificationOut::Singleton {
            classification,
            label,
        },
        CliqueClassification::EdgeBoth { min, max } => ClassificationOut::Edge {
            classification,
            extensions: [min, max],
        },
        CliqueClassification::UniqueMin(h)
        | CliqueClassification::UniqueMax(h)
        | CliqueClassification::AlreadyMaximal(h) => ClassificationOut::One(Flat {
            clique: h,
            classification,
        }),
    }
}

#[derive(Serialize)]
struct NumberOut {
    n: u32,
    m: u32,
    regime: Regime,
    clique_number: u64,
    cp: u64,
}

fn execute<W: Write + ?Sized, E: Write + ?Sized>(
    cmd: Command,
    out: &mut W,
    err: &mut E,
) -> Result<u8> {
    match cmd {
        Command::Gen {
            params,
            format,
            out: file,
        } => {
            let p = params.build()?;
            match file {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(&path)?);
                    export(&p, format, &mut w, DEFAULT_EXPORT_CAP)?;
                    w.flush()?;
                }
                None => export(&p, format, out, DEFAULT_EXPORT_CAP)?,
            }
        }
        Command::Adj { params, labels } => {
            let p = params.build()?;
            let labels = parse_labels(&labels)?;
            writeln!(out, "{}", p.are_adjacent(&labels[0], &labels[1])?)?;
        }
        Command::Cliques {
            params,
            class,
            format: CliqueFormat::Json,
        } => {
            let p = params.build()?;
            if class == ClassFilter::Max {
                enumerate_max_cliques(&p)?;
            }
            if class != ClassFilter::Max {
                for h in enumerate_min_cliques(&p) {
                    json_line(out, &h)?;
                }
            }
            if class != ClassFilter::Min {
                match enumerate_max_cliques(&p) {
                    Ok(maxes) => {
                        for h in maxes {
                            json_line(out, &h)?;
                        }
                    }
                    Err(e) => writeln!(err, "note: {e}")?,
                }
            }
        }
        Command::Classify { params, labels } => {
            let p = params.build()?;
            let c = Clique::new(p, &parse_labels(&labels)?)?;
            json_line(out, &classification_out(&classify(&c)?))?;
        }
        Command::Extend { params, labels } => {
            let p = params.build()?;
            let c = Clique::new(p, &parse_labels(&labels)?)?;
            json_line(out, &extend_to_maximal(&c)?)?;
        }
        Command::Partition { params } => {
            let p = params.build()?;
            json_line(out, &clique_partition(&p)?)?;
        }
        Command::Number { params } => {
            let p = params.build()?;
            let report = NumberOut {
                n: p.n(),
                m: p.m(),
                regime: p.regime(),
                clique_number: clique_number(&p),
                cp: clique_partition_number(&p)?,
            };
            if p.is_degenerate() {
                writeln!(
                    err,
                    "note: {p} is the complete graph K_{}; the max class is not maximal and one clique partitions the edges",
                    p.n()
                )?;
            }
            json_line(out, &report)?;
        }
        Command::Verify {
            m_range,
            n_range,
            jobs,
            timings,
        } => {
            let reports = verify_range(m_range, n_range, jobs.max(1), materialize_cap()?)?;
            let mut failed = 0;
            for r in &reports {
                writeln!(out, "{}", r.to_json_line(timings))?;
                if !r.passed() {
                    failed += 1;
                    for f in &r.failures {
                        writeln!(err, "J_{}({},{}): {f}", r.n, r.m, r.m - 1)?;
                    }
                }
            }
            if failed > 0 {
                writeln!(err, "{failed} of {} reports failed", reports.len())?;
                return Ok(EXIT_INTERNAL);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<W: Write + ?Sized, E: Write + ?Sized>(argv: &[String], out: &mut W, err: &mut E) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        // Reader went away (`johnson gen ... | head`).
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Consistency(_) => EXIT_INTERNAL,
                _ => EXIT_VALIDATION,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let argv: Vec<String> = std::iter::once("johnson")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("2..4").unwrap(), 2..=4);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn gen_edgelist() {
        let (code, out, _) = run_str(&["gen", "--n", "4", "--m", "2", "--format", "edgelist"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 12);
    }

    #[test]
    fn classify_max() {
        let (code, out, _) = run_str(&[
            "classify", "--n", "5", "--m", "3", "{1,3,4}", "{2,3,4}", "{3,4,5}",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "{\"class\":\"max\",\"set\":[3,4],\"n\":5,\"m\":3,\"size\":3,\"classification\":\"already_maximal\"}\n"
        );
    }

    #[test]
    fn cliques_max_in_degenerate_regime() {
        let (code, out, err) = run_str(&["cliques", "--n", "4", "--m", "3", "--class", "max"]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(out.is_empty());
        assert!(err.contains("degenerate"));
    }

    #[test]
    fn usage_and_validation_codes() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--n", "x", "--m", "2"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["adj", "--n", "4", "--m", "2", "{1,2}"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["adj", "--n", "4", "--m", "2", "{1,2}", "{1,9}"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            run_str(&["adj", "--n", "4", "--m", "2", "{1,2}", "1,3"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            run_str(&["number", "--n", "2", "--m", "2"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            run_str(&["classify", "--n", "4", "--m", "2", "{1,2}", "{3,4}"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn adj_prints_bool() {
        assert_eq!(
            run_str(&["adj", "--n", "4", "--m", "2", "{1,2}", "{1,3}"]).1,
            "true\n"
        );
        assert_eq!(
            run_str(&["adj", "--n", "4", "--m", "2", "{1,2}", "{3,4}"]).1,
            "false\n"
        );
    }
}
