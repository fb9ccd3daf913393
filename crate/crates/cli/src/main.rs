//! Command-line surface: generate topologies, list pancake-sequence
//! orders, convert permutation codings, build embeddings, verify them
//! against breadth-first ground truth, and run the whole claim suite.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pancake_embed::{
    bfs_from_identity_with_cap, embed_ghc_pancake, embed_ghc_star, embed_grid_family,
    embed_grid_nfact, embed_hypercube_via_mixed_grid, embed_line, embed_mixed_grid_pancake,
    embed_mixed_grid_star, embed_qd_via_ghc, embed_ring, factorial, hamiltonian_cycle, io as docs,
    left_count_decode, left_count_encode, measure, rule_r_decode, rule_r_encode, suite,
    verify_cycle_order, Embedding, Error, GraphKind, Permutation, DEFAULT_DIMENSION_CAP,
};

#[derive(Parser)]
#[command(
    name = "pancake-embed",
    version,
    about = "Pancake/star interconnection networks: topologies, embeddings, and measured bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coding {
    /// Left-smaller-count coding.
    LeftCount,
    /// Rule-R coding (scan positions n down to 2, exchange with k).
    RuleR,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Encode,
    Decode,
}

#[derive(Clone, Copy, ValueEnum)]
enum GuestArg {
    /// Ring of size k! along the pancake sequence.
    Ring,
    /// Line along the Hamiltonian path (length via --k).
    Line,
    /// The n x (n-1)! grid (rows are cyclic shifts of the first subpancake).
    GridNfact,
    /// The row-block grid family for parameter p.
    GridFamily,
    /// Mixed-radix grid through the left-count coding.
    MixedGrid,
    /// Binary hypercube Q_{n-1} through the mixed grid.
    HypercubeMixed,
    /// Generalized hypercube through the rule-R coding.
    Ghc,
    /// Binary hypercube Q_d through the generalized hypercube.
    HypercubeGhc,
}

#[derive(Clone, Copy, ValueEnum)]
enum HostArg {
    Pancake,
    Star,
}

#[derive(Subcommand)]
enum Command {
    /// Write a topology's edge list and print its size.
    Gen {
        /// Graph family: a name (pancake, star, ring, line, mixed-grid,
        /// ghc, hypercube) sized by --n, or a full form like
        /// "grid2d(4x6)".
        #[arg(long)]
        topology: String,
        /// Dimension / size parameter for bare family names.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t = FileFormat::Csv)]
        format: FileFormat,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
    /// Print the pancake-sequence vertex order of the k-pancake.
    Hamilton {
        #[arg(long)]
        n: usize,
        /// Cycle order (defaults to n).
        #[arg(long)]
        k: Option<usize>,
        /// Validate the order and report pass/fail on stderr.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
    /// Convert between permutations and coding labels.
    Rep {
        #[arg(long, value_enum)]
        mode: Coding,
        #[arg(value_enum)]
        direction: Direction,
        /// Permutation text (encode) or label text (decode).
        text: String,
    },
    /// Build an embedding and write its document.
    Embed {
        #[arg(long, value_enum)]
        guest: GuestArg,
        #[arg(long, value_enum)]
        host: HostArg,
        /// Host dimension.
        #[arg(long)]
        n: usize,
        /// Ring order or line length.
        #[arg(long)]
        k: Option<u64>,
        /// Grid-family parameter.
        #[arg(long)]
        p: Option<usize>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
    /// Measure an embedding document against breadth-first ground truth.
    Verify {
        /// Embedding document written by `embed`.
        embedding: PathBuf,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// json for the full report, csv for the distance histogram.
        #[arg(long, value_enum, default_value_t = FileFormat::Json)]
        format: FileFormat,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
    /// Run every claim for a range of dimensions and print the table.
    Suite {
        /// Dimension range, e.g. "3..5" or a single value.
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        /// Write the rows as JSON in addition to the table.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_CAP)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Error::Io(err)) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Writer for --out, falling back to stdout.
fn sink(out: &Option<PathBuf>) -> pancake_embed::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn resolve_topology(text: &str, n: Option<u64>) -> pancake_embed::Result<GraphKind> {
    if text.contains('(') {
        return text.parse();
    }
    let n = n.ok_or_else(|| Error::Parse(format!("--topology {text} needs --n")))?;
    let kind = match text {
        "pancake" => GraphKind::Pancake { n: n as usize },
        "star" => GraphKind::Star { n: n as usize },
        "ring" => GraphKind::Ring { size: n },
        "line" => GraphKind::Line { len: n },
        "mixed-grid" | "mixed_grid" => GraphKind::MixedGrid { n: n as usize },
        "ghc" => GraphKind::Ghc { n: n as usize },
        "hypercube" => GraphKind::Hypercube { d: n as usize },
        other => {
            return Err(Error::Parse(format!(
                "unknown topology {other:?}; use pancake, star, ring, line, \
                 mixed-grid, ghc, hypercube, or a full form like grid2d(4x6)"
            )))
        }
    };
    kind.validate()?;
    Ok(kind)
}

fn enforce_cap(kind: &GraphKind, cap: usize) -> pancake_embed::Result<()> {
    let limit = factorial(cap.min(20));
    let count = kind.vertex_count()?;
    if count > limit {
        return Err(Error::DimensionCapExceeded {
            n: count as usize,
            cap,
        });
    }
    Ok(())
}

fn run(command: Command) -> pancake_embed::Result<ExitCode> {
    match command {
        Command::Gen {
            topology,
            n,
            format,
            out,
            cap,
        } => {
            let kind = resolve_topology(&topology, n)?;
            enforce_cap(&kind, cap)?;
            let mut w = sink(&out)?;
            match format {
                FileFormat::Csv => docs::write_edges_csv(&mut w, &kind)?,
                FileFormat::Dot => docs::write_edges_dot(&mut w, &kind)?,
                FileFormat::Json => {
                    return Err(Error::Parse("gen supports csv or dot output".into()))
                }
            }
            w.flush()?;
            drop(w);
            println!(
                "{kind}: {} vertices, {} edges",
                kind.vertex_count()?,
                kind.edge_count()?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Hamilton {
            n,
            k,
            check,
            out,
            cap,
        } => {
            if n > cap {
                return Err(Error::DimensionCapExceeded { n, cap });
            }
            let k = k.unwrap_or(n);
            let start = Permutation::identity(n)?;
            let cycle = hamiltonian_cycle(&start, k)?;
            let mut w = sink(&out)?;
            for q in &cycle {
                writeln!(w, "{q}")?;
            }
            w.flush()?;
            drop(w);
            if check {
                let outcome = verify_cycle_order(&start, k, &cycle)?;
                if outcome.is_pass() {
                    eprintln!("check: PASS ({} vertices, closing edge g_{k})", cycle.len());
                } else {
                    eprintln!("check: FAIL ({})", outcome.failure().unwrap_or("unknown"));
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rep {
            mode,
            direction,
            text,
        } => {
            let result = match (mode, direction) {
                (Coding::LeftCount, Direction::Encode) => {
                    left_count_encode(&text.parse()?)?.to_string()
                }
                (Coding::LeftCount, Direction::Decode) => {
                    left_count_decode(&text.parse()?)?.to_string()
                }
                (Coding::RuleR, Direction::Encode) => rule_r_encode(&text.parse()?)?.to_string(),
                (Coding::RuleR, Direction::Decode) => rule_r_decode(&text.parse()?)?.to_string(),
            };
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed {
            guest,
            host,
            n,
            k,
            p,
            out,
            cap,
        } => {
            if n > cap {
                return Err(Error::DimensionCapExceeded { n, cap });
            }
            let e = build_embedding(guest, host, n, k, p)?;
            let mut w = sink(&out)?;
            docs::write_embedding(&mut w, &e)?;
            w.flush()?;
            drop(w);
            eprintln!(
                "embedded {} into {}: {} map entries, {} routes{}",
                e.guest(),
                e.host(),
                e.map().len(),
                e.routes().map(|r| r.len()).unwrap_or(0),
                if e.fallback_log().is_empty() {
                    String::new()
                } else {
                    format!(", {} BFS fallbacks", e.fallback_log().len())
                }
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            embedding,
            out,
            format,
            cap,
        } => {
            let e = docs::read_embedding(File::open(&embedding)?)?;
            let table = bfs_from_identity_with_cap(&e.host(), cap)?;
            let report = measure(&e, &table)?;
            let mut w = sink(&out)?;
            match format {
                FileFormat::Json => docs::write_report(&mut w, &e, &report)?,
                FileFormat::Csv => docs::write_histogram_csv(&mut w, &report)?,
                FileFormat::Dot => {
                    return Err(Error::Parse("verify supports json or csv output".into()))
                }
            }
            w.flush()?;
            drop(w);
            let congestion_ok = match (e.declared_congestion(), report.congestion) {
                (Some(bound), Some(measured)) => measured <= bound as u64,
                _ => true,
            };
            eprintln!(
                "dilation {}{}, congestion {}{}, expansion {}/{}, {} violation(s)",
                report.dilation,
                e.declared_dilation()
                    .map(|b| format!(" (bound {b})"))
                    .unwrap_or_default(),
                report
                    .congestion
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into()),
                report
                    .congestion_source
                    .map(|s| format!(" via {}", s.label()))
                    .unwrap_or_default(),
                report.expansion.0,
                report.expansion.1,
                report.violations.len()
            );
            if report.violations.is_empty() && congestion_ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Suite { n, seed, out, cap } => {
            let (lo, hi) = parse_range(&n)?;
            let rows = suite::run_suite(lo, hi, seed, cap)?;
            println!(
                "{:<48} {:>3}  {:<34} {:<34} result",
                "claim", "n", "measured", "bound"
            );
            let mut all_pass = true;
            for row in &rows {
                all_pass &= row.pass;
                println!(
                    "{:<48} {:>3}  {:<34} {:<34} {}",
                    row.claim,
                    row.n,
                    row.measured,
                    row.bound,
                    if row.pass { "pass" } else { "FAIL" }
                );
            }
            if let Some(path) = out {
                serde_json::to_writer_pretty(BufWriter::new(File::create(path)?), &rows)
                    .map_err(Error::from)?;
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_range(text: &str) -> pancake_embed::Result<(usize, usize)> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad range {text:?}")))?;
        let hi = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| Error::Parse(format!("bad range {text:?}")))?;
        Ok((lo, hi))
    } else {
        let single = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad range {text:?}")))?;
        Ok((single, single))
    }
}

fn build_embedding(
    guest: GuestArg,
    host: HostArg,
    n: usize,
    k: Option<u64>,
    p: Option<usize>,
) -> pancake_embed::Result<Embedding> {
    let unsupported = |what: &str| {
        Err(Error::UnsupportedCombination(format!(
            "{what}; supported: ring/line/grid-nfact/grid-family/hypercube-mixed/hypercube-ghc \
             into pancake, mixed-grid/ghc into pancake or star"
        )))
    };
    match (guest, host) {
        (GuestArg::Ring, HostArg::Pancake) => embed_ring(k.unwrap_or(n as u64) as usize, n),
        (GuestArg::Line, HostArg::Pancake) => embed_line(k.unwrap_or(factorial(n)), n),
        (GuestArg::GridNfact, HostArg::Pancake) => embed_grid_nfact(n),
        (GuestArg::GridFamily, HostArg::Pancake) => {
            let p = p.ok_or_else(|| Error::Parse("grid-family needs --p".into()))?;
            embed_grid_family(p, n)
        }
        (GuestArg::MixedGrid, HostArg::Pancake) => embed_mixed_grid_pancake(n),
        (GuestArg::MixedGrid, HostArg::Star) => embed_mixed_grid_star(n),
        (GuestArg::HypercubeMixed, HostArg::Pancake) => embed_hypercube_via_mixed_grid(n),
        (GuestArg::Ghc, HostArg::Pancake) => embed_ghc_pancake(n),
        (GuestArg::Ghc, HostArg::Star) => embed_ghc_star(n),
        (GuestArg::HypercubeGhc, HostArg::Pancake) => embed_qd_via_ghc(n),
        (GuestArg::Ring | GuestArg::Line, HostArg::Star) => {
            unsupported("rings and lines are built for the pancake host")
        }
        (GuestArg::GridNfact | GuestArg::GridFamily, HostArg::Star) => {
            unsupported("the shift-based grids are built for the pancake host")
        }
        (GuestArg::HypercubeMixed | GuestArg::HypercubeGhc, HostArg::Star) => {
            unsupported("the hypercube constructions are built for the pancake host")
        }
    }
}
