//! The `strongedge` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::coloring::{
    chi_s_exact, is_valid_strong_coloring, k_colorable, PartialColoring, SolveOutcome, SolveStats, Violation,
};
use crate::configurations::{find_configurations, pattern_by_id, verify_reducibility, ConfigurationMatch, ReducibilityReport};
use crate::discharging::{builtin_ruleset, discharge_report, load_ruleset, validate_rules, RuleSet};
use crate::error::{Error, Result};
use crate::graph::{read_graphs, ConflictGraph, Format, Graph};
use crate::harness::{emit_report, enumerate_connected_up_to, verify_theorem, Theorem, VerifyOptions, MAX_ENUMERATION_N};
use crate::metrics::{classify, compute_metrics, Scheme};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "strongedge", version, about = "Strong edge-coloring and discharging toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ore-degree, exact mad and derived bounds, one JSON line per graph.
    Metrics(InputArgs),
    /// Exact strong chromatic index with a certificate coloring.
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Decide k-colorability instead of computing the index.
        #[arg(long, conflicts_with = "exact")]
        k: Option<u32>,
        /// Compute the exact index (the default).
        #[arg(long)]
        exact: bool,
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Validate a strong edge-coloring of a single graph.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// JSON coloring: `{"k", "colors"}`, a bare color array, or `[{"edge": [u, v], "color"}]`.
        #[arg(long, value_name = "PATH")]
        coloring: PathBuf,
    },
    /// Catalog configurations present in each graph.
    Configs {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        /// Also replay each match's reduction recipe.
        #[arg(long, alias = "replay")]
        verify: bool,
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Apply discharging rules and audit negative vertices.
    Discharge {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        /// JSON rule file; defaults to the built-in rules for the scheme.
        #[arg(long, value_name = "PATH")]
        rules: Option<PathBuf>,
    },
    /// Exhaustive theorem check over a corpus.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file (.g6 or .edges); `-` reads stdin and needs --format.
    input: PathBuf,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    theorem: u8,
    /// Enumerate all connected graphs up to this order.
    #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
    max_n: Option<usize>,
    /// Read the corpus from a graph6 file instead.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_name = "SECS")]
    budget: Option<f64>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Omit wall time so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Graph6,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edges => Format::Edges,
        }
    }
}

fn parse_scheme(s: &str) -> std::result::Result<Scheme, String> {
    s.parse::<Scheme>().map_err(|e| e.to_string())
}

fn budget(secs: Option<f64>) -> Result<Option<Duration>> {
    match secs {
        None => Ok(Some(crate::coloring::DEFAULT_BUDGET)),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) if s == 0.0 => Ok(None),
        Some(s) => Err(Error::Config(format!("budget must be a nonnegative number of seconds, got {s}"))),
    }
}

fn load(input: &InputArgs) -> Result<Vec<Graph>> {
    let format = input.format.map(Format::from);
    if input.input.as_os_str() == "-" {
        let format = format.ok_or_else(|| Error::Config("reading stdin needs --format".into()))?;
        let text = std::io::read_to_string(std::io::stdin())?;
        return crate::graph::parse_document(&text, format);
    }
    read_graphs(&input.input, format)
}

fn single(input: &InputArgs) -> Result<Graph> {
    let mut graphs = load(input)?;
    if graphs.len() != 1 {
        return Err(Error::Config(format!("expected exactly one graph, found {}", graphs.len())));
    }
    Ok(graphs.pop().unwrap())
}

struct Sink(Box<dyn Write>);

impl Sink {
    fn open(out: Option<&Path>) -> Result<Sink> {
        Ok(Sink(match out {
            Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
            None => Box::new(std::io::stdout().lock()),
        }))
    }

    fn line<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer(&mut self.0, value)?;
        self.0.write_all(b"\n")?;
        Ok(())
    }

    fn pretty<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer_pretty(&mut self.0, value)?;
        self.0.write_all(b"\n")?;
        Ok(())
    }

    fn finish(mut self) -> Result<()> {
        self.0.flush()?;
        Ok(())
    }
}

#[derive(Serialize)]
struct ColoredEdge {
    edge: [usize; 2],
    color: u32,
}

#[derive(Serialize, Default)]
struct ColorLine {
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sat: Option<bool>,
    timeout: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<ColoredEdge>>,
    stats: SolveStats,
}

fn colored_edges(g: &Graph, c: &PartialColoring) -> Vec<ColoredEdge> {
    g.edges()
        .iter()
        .zip(&c.colors)
        .filter_map(|(&(u, v), col)| col.map(|color| ColoredEdge { edge: [u, v], color }))
        .collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ColoringFile {
    Full(PartialColoring),
    Bare(Vec<Option<u32>>),
    Listed(Vec<ListedColor>),
    Wrapped { coloring: Vec<ListedColor> },
}

#[derive(Deserialize)]
struct ListedColor {
    edge: [usize; 2],
    color: u32,
}

fn from_listed(g: &Graph, listed: Vec<ListedColor>) -> Result<PartialColoring> {
    let mut colors = vec![None; g.m()];
    for ListedColor { edge: [u, v], color } in listed {
        let e = g.edge_id(u, v).ok_or_else(|| Error::Config(format!("coloring names a non-edge {u}-{v}")))?;
        colors[e] = Some(color);
    }
    let k = colors.iter().flatten().copied().max().unwrap_or(0);
    Ok(PartialColoring { k, colors })
}

#[derive(Serialize)]
struct CheckOutput {
    graph6: String,
    valid: bool,
    violations: Vec<Violation>,
}

#[derive(Serialize)]
struct MatchLine {
    #[serde(flatten)]
    found: ConfigurationMatch,
    #[serde(skip_serializing_if = "Option::is_none")]
    reducibility: Option<ReducibilityReport>,
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Metrics(input) => {
            let graphs = load(&input)?;
            let mut sink = Sink::open(input.out.as_deref())?;
            for g in &graphs {
                sink.line(&compute_metrics(g))?;
            }
            sink.finish()?;
            Ok(EXIT_OK)
        }
        Command::Color { input, k, exact: _, budget: secs } => {
            let budget = budget(secs)?;
            let graphs = load(&input)?;
            let mut sink = Sink::open(input.out.as_deref())?;
            for g in &graphs {
                let cg = ConflictGraph::new(g);
                let mut line = ColorLine { graph6: g.to_graph6(), ..Default::default() };
                if let Some(k) = k {
                    let r = k_colorable(&cg, k, budget);
                    line.k = Some(k);
                    line.stats = r.stats;
                    match r.outcome {
                        SolveOutcome::Sat { coloring } => {
                            line.sat = Some(true);
                            line.coloring = Some(colored_edges(g, &coloring));
                        }
                        SolveOutcome::Unsat => line.sat = Some(false),
                        SolveOutcome::Timeout => line.timeout = true,
                    }
                } else {
                    match chi_s_exact(&cg, budget) {
                        Ok(r) => {
                            line.chi_s = Some(r.chi_s);
                            line.lower_bound = Some(r.lower_bound);
                            line.upper_bound = Some(r.upper_bound);
                            line.coloring = Some(colored_edges(g, &r.coloring));
                            line.stats = r.stats;
                        }
                        Err(Error::Timeout { lb, ub }) => {
                            line.timeout = true;
                            line.lower_bound = Some(lb);
                            line.upper_bound = Some(ub);
                        }
                        Err(e) => return Err(e),
                    }
                }
                sink.line(&line)?;
            }
            sink.finish()?;
            Ok(EXIT_OK)
        }
        Command::Check { input, coloring } => {
            let g = single(&input)?;
            let text = std::fs::read_to_string(&coloring)?;
            let parsed: ColoringFile =
                serde_json::from_str(&text).map_err(|e| Error::Config(format!("coloring file: {e}")))?;
            let c = match parsed {
                ColoringFile::Full(c) => c,
                ColoringFile::Bare(colors) => {
                    let k = colors.iter().flatten().copied().max().unwrap_or(0);
                    PartialColoring { k, colors }
                }
                ColoringFile::Listed(listed) | ColoringFile::Wrapped { coloring: listed } => from_listed(&g, listed)?,
            };
            let cg = ConflictGraph::new(&g);
            let (valid, violations) = is_valid_strong_coloring(&cg, &c)?;
            let mut sink = Sink::open(input.out.as_deref())?;
            sink.pretty(&CheckOutput { graph6: g.to_graph6(), valid, violations })?;
            sink.finish()?;
            Ok(if valid { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Configs { input, scheme, verify, budget: secs } => {
            let budget = budget(secs)?;
            let graphs = load(&input)?;
            let mut sink = Sink::open(input.out.as_deref())?;
            for g in &graphs {
                let labels = classify(g, scheme);
                let mut lines = Vec::new();
                for found in find_configurations(g, scheme, &labels) {
                    let reducibility = if verify {
                        let p = pattern_by_id(found.pattern).expect("catalog pattern");
                        Some(verify_reducibility(g, p, &found, budget)?)
                    } else {
                        None
                    };
                    lines.push(MatchLine { found, reducibility });
                }
                sink.line(&lines)?;
            }
            sink.finish()?;
            Ok(EXIT_OK)
        }
        Command::Discharge { input, scheme, rules } => {
            let rules = match rules {
                Some(path) => load_ruleset(&path)?,
                None => RuleSet { rules: builtin_ruleset(scheme), target: None },
            };
            validate_rules(&rules.rules, scheme)?;
            let graphs = load(&input)?;
            let mut sink = Sink::open(input.out.as_deref())?;
            for g in &graphs {
                sink.line(&discharge_report(g, scheme, &rules)?)?;
            }
            sink.finish()?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let theorem = Theorem::from_number(args.theorem)?;
            let (corpus, descriptor) = match (&args.corpus, args.max_n) {
                (Some(path), _) => {
                    (read_graphs(path, Some(args.format.map_or(Format::Graph6, Format::from)))?, path.display().to_string())
                }
                (None, Some(n)) => {
                    if !(1..=MAX_ENUMERATION_N).contains(&n) {
                        return Err(Error::Config(format!(
                            "--max-n must be in 1..={MAX_ENUMERATION_N}; pass larger corpora with --corpus"
                        )));
                    }
                    (enumerate_connected_up_to(n)?, format!("connected graphs n<={n}"))
                }
                (None, None) => return Err(Error::Config("one of --max-n or --corpus is required".into())),
            };
            let options = VerifyOptions { budget: budget(args.budget)?, jobs: args.jobs, record_wall_time: !args.no_timing };
            let report = verify_theorem(theorem, &corpus, &descriptor, &options)?;
            match &args.out {
                Some(path) => emit_report(&report, path)?,
                None => {
                    let mut sink = Sink::open(None)?;
                    sink.pretty(&report)?;
                    sink.finish()?;
                }
            }
            let s = &report.summary;
            eprintln!(
                "theorem {}: {} graphs, {} admitted, {} passed, {} failed, {} timeouts, {} filtered, {} disconnected",
                args.theorem, s.corpus_size, s.admitted, s.passed, s.failed, s.timeouts, s.filtered, s.rejected_disconnected
            );
            Ok(if s.failed == 0 { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CONFIG
        }
    }
}
