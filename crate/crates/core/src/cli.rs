//! The `zdg` command line.
//!
//! Exit codes: 0 success, 1 input error, 2 axiom violation, 3 theorem-check
//! failure.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::corpus::{CorpusSpec, Family};
use crate::error::{Error, Result};
use crate::generators;
use crate::graph_inverse::{parse_graph, render_graph, DirectedGraph, DEFAULT_MAX_LEN};
use crate::report::{analyze_digraph, analyze_semigroup, Analysis};
use crate::semigroup::{parse_semigroup, render_semigroup, FiniteSemigroup};
use crate::verify::run_corpus;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_AXIOM: u8 = 2;
pub const EXIT_THEOREM: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "zdg", version, about = "Zero-divisor graphs of inverse semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a semigroup given as an .sgp Cayley table
    Analyze {
        file: PathBuf,
        /// Write the JSON report here (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write Γ as DOT here (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Analyze the graph inverse semigroup of a .dgf digraph
    Ig {
        file: PathBuf,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Print a generated .sgp or .dgf file
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Run every check over a seeded corpus
    Verify {
        /// i2-closures, i3-closures, clifford, groups or random-digraphs
        #[arg(long, value_name = "NAME")]
        family: String,
        #[arg(long, value_name = "N", default_value_t = 1)]
        seed: u64,
        #[arg(long, value_name = "N", default_value_t = 100)]
        count: usize,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Write the zero-divisor graph of an .sgp or .dgf input as DOT
    ExportDot {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenTarget {
    /// The five-element Brandt semigroup
    B2,
    /// Symmetric inverse monoid on one point
    I1,
    /// Symmetric inverse monoid on two points
    I2,
    /// Symmetric inverse monoid on three points
    I3,
    /// Symmetric group on three points
    S3,
    /// Cyclic group of order N
    Cyclic {
        #[arg(long, value_name = "N")]
        n: usize,
    },
    /// Clifford semigroup over a chain of cyclic groups
    Clifford {
        /// Group orders from the top of the chain down, e.g. 2,2
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        /// Linking maps x -> c*x between consecutive levels, e.g. 1
        #[arg(long, value_delimiter = ',')]
        homs: Vec<usize>,
    },
    /// One of the digraphs g1, g2, g3
    Example512 { which: String },
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotAssociative(..) | Error::NotInverse(_) => EXIT_AXIOM,
        Error::Violation(_) => EXIT_THEOREM,
        _ => EXIT_INPUT,
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Runs one command and returns its exit code. Output goes to stdout or the
/// paths given by `--json` / `--dot`.
pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Analyze { file, json, dot } => {
            let s = read_semigroup(file)?;
            let analysis = analyze_semigroup(&s, &file.display().to_string())?;
            finish(&analysis, &stem(file), json.as_deref(), dot.as_deref())
        }
        Command::Ig {
            file,
            max_len,
            json,
            dot,
        } => {
            let g = read_graph(file)?;
            let analysis = analyze_digraph(&g, *max_len, &file.display().to_string())?;
            finish(&analysis, &stem(file), json.as_deref(), dot.as_deref())
        }
        Command::Gen { target } => {
            print!("{}", generate(target)?);
            Ok(EXIT_OK)
        }
        Command::Verify {
            family,
            seed,
            count,
            json,
        } => {
            let family: Family = family.parse()?;
            let spec = CorpusSpec::new(family, *seed, *count);
            let (_, summary) = run_corpus(&spec)?;
            print!("{}", summary.render());
            if let Some(path) = json {
                let mut text = serde_json::to_string_pretty(&summary).expect("summary serializes");
                text.push('\n');
                write_output(path, &text)?;
            }
            Ok(if summary.ok() { EXIT_OK } else { EXIT_THEOREM })
        }
        Command::ExportDot { file, dot, max_len } => {
            let text = read(file)?;
            let analysis = if looks_like_graph(file, &text) {
                analyze_digraph(&parse_graph(&text)?, *max_len, &file.display().to_string())?
            } else {
                analyze_semigroup(&parse_semigroup(&text)?, &file.display().to_string())?
            };
            let gamma = analysis
                .gamma
                .ok_or_else(|| Error::Degenerate("no zero-divisor graph was built".into()))?;
            let out = gamma.to_dot(&stem(file));
            match dot {
                Some(p) => write_output(p, &out)?,
                None => print!("{out}"),
            }
            Ok(if analysis.report.failed() { EXIT_THEOREM } else { EXIT_OK })
        }
    }
}

fn finish(analysis: &Analysis, name: &str, json: Option<&Path>, dot: Option<&Path>) -> Result<u8> {
    let report = &analysis.report;
    if let Some(p) = json {
        write_output(p, &report.to_json())?;
    }
    if let Some(p) = dot {
        if let Some(g) = &analysis.gamma {
            write_output(p, &g.to_dot(name))?;
        }
    }
    if json.is_none_or(|p| p != Path::new("-")) {
        print!("{}", summary_text(analysis));
    }
    Ok(if report.failed() { EXIT_THEOREM } else { EXIT_OK })
}

/// Short human-readable summary of a report.
pub fn summary_text(analysis: &Analysis) -> String {
    let r = &analysis.report;
    let mut out = String::new();
    if let Some(s) = &r.semigroup {
        out.push_str(&format!(
            "order {}, {} idempotents, zero {}{}\n",
            s.order,
            s.idempotents,
            s.zero.as_deref().unwrap_or("none"),
            if s.zero_adjoined { " (zero adjoined for Γ)" } else { "" }
        ));
    }
    if let Some(d) = &r.digraph {
        out.push_str(&format!(
            "digraph {} vertices, {} edges; {} elements at path length <= {}, {}\n",
            d.vertices,
            d.edges,
            d.elements,
            d.max_len,
            if d.exact { "exact" } else { "truncated" }
        ));
    }
    if let Some(g) = &r.graph {
        out.push_str(&format!(
            "Γ: {} vertices, {} edges, diameter {}, girth {}",
            g.vertices, g.edges, g.diameter, g.girth
        ));
        if let (Some(d), Some(c)) = (&g.diam_case, &g.girth_case) {
            out.push_str(&format!(", cases {d} / {c}"));
        }
        out.push('\n');
    }
    if let Some(s) = &r.sigma {
        out.push_str(&format!("sigma: {} classes of sizes {:?}\n", s.num_classes, s.class_sizes));
    }
    if let Some(p) = &r.prediction {
        out.push_str(&format!("predicted: diameter {}, girth {}\n", p.diameter, p.girth));
    }
    let passed = r.all_checks().filter(|c| c.pass).count();
    let failed: Vec<_> = r.all_checks().filter(|c| !c.pass).collect();
    out.push_str(&format!("checks: {passed} passed, {} failed\n", failed.len()));
    for c in failed {
        out.push_str(&format!("FAIL {}: {}\n", c.name, c.witness.as_deref().unwrap_or("")));
    }
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

pub fn generate(target: &GenTarget) -> Result<String> {
    let sgp = |s: FiniteSemigroup, comment: &str| Ok(render_semigroup(&s, Some(comment)));
    let dgf = |g: DirectedGraph, comment: &str| Ok(render_graph(&g, Some(comment)));
    match target {
        GenTarget::B2 => sgp(generators::b2(), "Brandt semigroup B2"),
        GenTarget::I1 => sgp(generators::symmetric_inverse_monoid(1)?, "symmetric inverse monoid I1"),
        GenTarget::I2 => sgp(generators::symmetric_inverse_monoid(2)?, "symmetric inverse monoid I2"),
        GenTarget::I3 => sgp(generators::symmetric_inverse_monoid(3)?, "symmetric inverse monoid I3"),
        GenTarget::S3 => sgp(generators::symmetric_group_s3(), "symmetric group S3"),
        GenTarget::Cyclic { n } => {
            if !(1..=crate::semigroup::DEFAULT_MAX_ORDER).contains(n) {
                return Err(Error::Unsupported(format!("cyclic group of order {n}")));
            }
            sgp(generators::cyclic_group(*n), &format!("cyclic group Z{n}"))
        }
        GenTarget::Clifford { orders, homs } => sgp(
            generators::clifford_chain(orders, homs)?,
            &format!("Clifford chain, orders {orders:?}, linking maps {homs:?}"),
        ),
        GenTarget::Example512 { which } => dgf(generators::example_digraph(which)?, which),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn read_semigroup(path: &Path) -> Result<FiniteSemigroup> {
    Ok(parse_semigroup(&read(path)?)?)
}

fn read_graph(path: &Path) -> Result<DirectedGraph> {
    Ok(parse_graph(&read(path)?)?)
}

fn looks_like_graph(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some("dgf") => true,
        Some("sgp") => false,
        _ => text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .is_some_and(|l| l.starts_with("vertices:")),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "G".to_string(), |s| s.to_string_lossy().into_owned())
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        let mut out = std::io::stdout().lock();
        return out.write_all(text.as_bytes()).map_err(|e| Error::Io {
            path: "stdout".into(),
            message: e.to_string(),
        });
    }
    fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
