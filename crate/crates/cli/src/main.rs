use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use onepack::certificate::{validate_certificate, PackingCertificate};
use onepack::dispatch::{pack_instance, Strategy};
use onepack::graph::{GuestGraph, Vertex};
use onepack::io::{emit_certificate, parse_certificate_unchecked, parse_edge_list, parse_instance, IoError};
use onepack::packing::PackError;
use onepack::svg::{render_svg, Style};
use onepack::tester::{oracle_pack_with, one_planar_test, OnePlanarity, OracleOptions, OracleVerdict, SearchBudget};

const SUCCESS: u8 = 0;
const REFUSED: u8 = 1;
const USAGE: u8 = 2;
const TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "onepack", version, about = "Certified 1-planar packings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pack an instance file, or a generated family with --n.
    Pack {
        instance: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// Generate the instance of --strategy on this many vertices.
        #[arg(long, conflicts_with = "instance")]
        n: Option<usize>,
        /// Certificate path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check a certificate file and list its violations.
    Verify { certificate: PathBuf },
    /// Decide 1-planarity of an edge list or of the union of an instance.
    #[command(name = "test-1planar")]
    TestOnePlanar {
        graph: PathBuf,
        /// Search budget in seconds.
        #[arg(long, env = "ONEPACK_BUDGET", default_value_t = 60)]
        budget: u64,
        /// Write the drawing found, as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for a packing of a small instance.
    Oracle {
        instance: PathBuf,
        #[arg(long, env = "ONEPACK_BUDGET", default_value_t = 60)]
        budget: u64,
        /// Disable symmetry pruning.
        #[arg(long)]
        no_pruning: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pack a generated family over a range of n and tabulate crossings.
    Sweep {
        #[arg(long)]
        strategy: Strategy,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        /// Directory for the certificates; nothing is written when absent.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Also render each certificate next to it.
        #[arg(long, requires = "out_dir")]
        svg: bool,
    },
}

/// An error with the exit status it maps to.
struct Failure(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(USAGE, e.into())
    }
}

/// A reader that closes the pipe early (`| head`) is not an error.
fn print_stdout(text: &str) -> std::io::Result<()> {
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r,
    }
}

fn refused(e: impl Into<anyhow::Error>) -> Failure {
    Failure(REFUSED, e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Pack { instance, strategy, n, out, svg } => {
            let guests = match (instance, n) {
                (Some(p), _) => read_instance(&p)?,
                (None, Some(n)) => strategy
                    .family(n)
                    .ok_or_else(|| anyhow!("strategy {strategy} has no generated family; pass an instance file"))?,
                (None, None) => return Err(anyhow!("pass an instance file or --n").into()),
            };
            let c = pack_instance(&guests, strategy).map_err(pack_failure)?;
            let text = emit_certificate(&c)?;
            match &out {
                Some(p) => write_atomic(p, &text)?,
                None => print_stdout(&text)?,
            }
            if let Some(p) = &svg {
                write_atomic(p, &render_svg(&c, &Style::default()))?;
            }
            eprintln!(
                "{}: n = {}, {} edges, {} crossings",
                c.provenance.strategy,
                c.drawing.n,
                c.drawing.edges.len(),
                c.drawing.crossing_count()
            );
            Ok(SUCCESS)
        }
        Command::Verify { certificate } => {
            let text = read(&certificate)?;
            let c = parse_certificate_unchecked(&text).map_err(refused)?;
            let violations = validate_certificate(&c);
            if violations.is_empty() {
                println!("valid: {} crossings", c.drawing.crossing_count());
                Ok(SUCCESS)
            } else {
                println!("invalid: {} violations", violations.len());
                for v in &violations {
                    println!("  {v}");
                }
                Ok(REFUSED)
            }
        }
        Command::TestOnePlanar { graph, budget, out } => {
            let (n, edges) = read_graph(&graph)?;
            match one_planar_test(n, &edges, budget_of(budget)?) {
                OnePlanarity::OnePlanar(dr) => {
                    println!("one-planar: {} crossings", dr.crossing_count());
                    if let Some(p) = &out {
                        write_atomic(p, &serde_json::to_string_pretty(&dr)?)?;
                    }
                    Ok(SUCCESS)
                }
                OnePlanarity::NotOnePlanar => {
                    println!("not one-planar");
                    Ok(REFUSED)
                }
                OnePlanarity::Timeout => {
                    println!("timeout after {budget} s");
                    Ok(TIMEOUT)
                }
            }
        }
        Command::Oracle { instance, budget, no_pruning, out } => {
            let guests = read_instance(&instance)?;
            let opts = OracleOptions { symmetry_pruning: !no_pruning };
            match oracle_pack_with(&guests, budget_of(budget)?, opts) {
                OracleVerdict::Exists(c) => {
                    println!("exists: {} crossings", c.drawing.crossing_count());
                    if let Some(p) = &out {
                        write_atomic(p, &emit_certificate(&c)?)?;
                    }
                    Ok(SUCCESS)
                }
                OracleVerdict::NotExists => {
                    println!("no packing exists");
                    Ok(REFUSED)
                }
                OracleVerdict::Timeout => {
                    println!("timeout after {budget} s");
                    Ok(TIMEOUT)
                }
            }
        }
        Command::Sweep { strategy, from, to, step, out_dir, svg } => {
            if step == 0 || from > to {
                return Err(anyhow!("empty range {from}..={to} step {step}").into());
            }
            if strategy.family(from).is_none() {
                return Err(anyhow!("strategy {strategy} has no generated family").into());
            }
            if let Some(d) = &out_dir {
                fs::create_dir_all(d).with_context(|| format!("creating {}", d.display()))?;
            }
            println!("{:>5} {:>7} {:>9} {:>8}  status", "n", "edges", "crossings", "ms");
            let mut failed = 0;
            for n in (from..=to).step_by(step) {
                let guests = strategy.family(n).expect("checked above");
                let t = Instant::now();
                let r = pack_instance(&guests, strategy);
                let ms = t.elapsed().as_millis();
                match r {
                    Ok(c) => {
                        let cr = c.drawing.crossing_count();
                        println!("{n:>5} {:>7} {cr:>9} {ms:>8}  ok", c.drawing.edges.len());
                        if let Some(d) = &out_dir {
                            save_sweep(d, strategy, n, &c, svg)?;
                        }
                    }
                    Err(e) => {
                        if matches!(e, PackError::Internal(_)) {
                            failed += 1;
                        }
                        println!("{n:>5} {:>7} {:>9} {ms:>8}  {}", "-", "-", e.code());
                    }
                }
            }
            Ok(if failed == 0 { SUCCESS } else { REFUSED })
        }
    }
}

fn pack_failure(e: PackError) -> Failure {
    match e {
        PackError::Internal(_) => Failure(USAGE, anyhow!(e)),
        _ => refused(anyhow!("{} [{}]", e, e.code())),
    }
}

fn budget_of(secs: u64) -> Result<SearchBudget> {
    if secs == 0 {
        return Err(anyhow!("budget must be positive"));
    }
    Ok(SearchBudget::seconds(secs))
}

fn read(p: &Path) -> Result<String> {
    fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn read_instance(p: &Path) -> Result<Vec<GuestGraph>> {
    parse_instance(&read(p)?).with_context(|| format!("parsing {}", p.display()))
}

/// A plain edge list, or the union of the guests of an instance document.
fn read_graph(p: &Path) -> Result<(usize, Vec<[Vertex; 2]>)> {
    let text = read(p)?;
    if text.trim_start().starts_with('{') {
        let guests = parse_instance(&text).with_context(|| format!("parsing {}", p.display()))?;
        let n = guests.first().map_or(0, |g| g.n());
        let mut edges: Vec<[Vertex; 2]> = guests.iter().flat_map(|g| g.edges().to_vec()).collect();
        edges.sort_unstable();
        edges.dedup();
        return Ok((n, edges));
    }
    parse_edge_list(&text).map_err(|e: IoError| anyhow!(e)).with_context(|| format!("parsing {}", p.display()))
}

fn save_sweep(dir: &Path, s: Strategy, n: usize, c: &PackingCertificate, svg: bool) -> Result<()> {
    let stem = format!("{s}-{n:03}");
    write_atomic(&dir.join(format!("{stem}.json")), &emit_certificate(c)?)?;
    if svg {
        write_atomic(&dir.join(format!("{stem}.svg")), &render_svg(c, &Style::default()))?;
    }
    Ok(())
}

/// Writes to a temporary file beside `path` and renames it into place.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        tmp.write_all(b"\n")?;
    }
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
