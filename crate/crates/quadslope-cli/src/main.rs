//! Command-line interface: draw cubic graphs with the four basic slopes,
//! verify drawings, print the bound table, and decide slope-set goodness.
//!
//! Exit codes: 0 success, 1 input error, 2 verification failure,
//! 3 search budget exhaustion.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use quadslope::document::DrawingDocument;
use quadslope::error::DrawError;
use quadslope::pipeline::{draw_cubic, verify_drawing, PipelineConfig, PipelineError};
use quadslope::slopes::{can_draw_k4, is_good, SlopeSetError};
use quadslope::structure::bounds_table;
use quadslope::svg::render_svg;
use quadslope::{parse_edge_list, parse_graph6, Graph, SlopeSet};

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "quadslope",
    about = "Straight-line drawings of cubic graphs with the four basic slopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a cubic graph and write the result as JSON or SVG.
    Draw(DrawArgs),
    /// Verify a drawing document against a graph and a slope set.
    Verify(VerifyArgs),
    /// Print the bound table rows [N,2s-2,mg,g] for a range of orders.
    Bounds(BoundsArgs),
    /// Decide whether a set of four slopes is good.
    Slopes(SlopesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Json,
    Svg,
}

#[derive(Args)]
struct DrawArgs {
    /// Input file (graph6 line(s) or edge list).
    #[arg(long = "in")]
    input: PathBuf,
    /// Input format.
    #[arg(long, value_enum, default_value = "g6")]
    format: GraphFormat,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    emit: EmitFormat,
    /// Include the pipeline trace in the JSON document.
    #[arg(long)]
    trace: bool,
    /// Search node budget per component (QUADSLOPE_BUDGET overrides the
    /// built-in default; this flag overrides both).
    #[arg(long)]
    budget: Option<u64>,
    /// Search seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file to check the drawing against.
    #[arg(long)]
    graph: PathBuf,
    /// Graph input format.
    #[arg(long, value_enum, default_value = "g6")]
    format: GraphFormat,
    /// Drawing document (JSON).
    #[arg(long)]
    drawing: PathBuf,
    /// Slope set: "basic" or a comma-separated list like "0,1,inf,-1".
    #[arg(long, default_value = "basic")]
    slopes: String,
}

#[derive(Args)]
struct BoundsArgs {
    /// Range START:END:STEP over vertex counts.
    #[arg(long = "n-range")]
    n_range: String,
}

#[derive(Args)]
struct SlopesArgs {
    /// Four slopes, comma separated; "inf" is vertical.
    #[arg(long)]
    set: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Draw(args) => run_draw(args),
        Command::Verify(args) => run_verify(args),
        Command::Bounds(args) => run_bounds(args),
        Command::Slopes(args) => run_slopes(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn parse_graphs(text: &str, format: GraphFormat) -> Result<Vec<Graph>> {
    match format {
        GraphFormat::G6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| parse_graph6(line).map_err(|e| anyhow!("graph6: {e}")))
            .collect(),
        GraphFormat::Edges => Ok(vec![
            parse_edge_list(text).map_err(|e| anyhow!("edge list: {e}"))?
        ]),
    }
}

fn effective_budget(flag: Option<u64>) -> u64 {
    if let Some(b) = flag {
        return b;
    }
    if let Ok(value) = std::env::var("QUADSLOPE_BUDGET") {
        if let Ok(parsed) = value.trim().parse() {
            return parsed;
        }
        eprintln!("warning: ignoring unparsable QUADSLOPE_BUDGET={value:?}");
    }
    PipelineConfig::default().budget
}

fn run_draw(args: DrawArgs) -> Result<ExitCode> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let graphs = parse_graphs(&text, args.format)?;
    if graphs.is_empty() {
        return Err(anyhow!("no graphs in input"));
    }
    if graphs.len() > 1 && args.emit == EmitFormat::Svg {
        return Err(anyhow!("svg output supports a single input graph"));
    }
    let cfg = PipelineConfig {
        budget: effective_budget(args.budget),
        seed: args.seed,
    };

    let mut documents = Vec::new();
    for g in &graphs {
        match draw_cubic(g, &cfg) {
            Ok(out) => {
                // Re-verify before writing anything.
                let report = verify_drawing(g, &out.drawing, &SlopeSet::basic());
                if !report.ok() {
                    eprintln!("verification failed:\n{report}");
                    return Ok(ExitCode::from(EXIT_VERIFY));
                }
                let trace = args.trace.then_some(out.trace.clone());
                documents.push((out, trace));
            }
            Err(PipelineError::NotCubic { vertex, degree }) => {
                eprintln!("not cubic: vertex {vertex} has degree {degree}");
                return Ok(ExitCode::from(EXIT_INPUT));
            }
            Err(PipelineError::Draw(DrawError::BudgetExhausted { budget })) => {
                eprintln!("search budget of {budget} nodes exhausted");
                return Ok(ExitCode::from(EXIT_BUDGET));
            }
            Err(PipelineError::Verification(report)) => {
                eprintln!("verification failed:\n{report}");
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
            Err(other) => return Err(anyhow!("drawing failed: {other}")),
        }
    }

    let payload = match args.emit {
        EmitFormat::Svg => render_svg(&documents[0].0.drawing)
            .map_err(|e| anyhow!("svg rendering: {e}"))?,
        EmitFormat::Json => {
            let docs: Vec<DrawingDocument> = documents
                .iter()
                .map(|(out, trace)| DrawingDocument::from_drawing(&out.drawing, trace.clone()))
                .collect();
            if docs.len() == 1 {
                docs[0].to_json()?
            } else {
                serde_json::to_string_pretty(&docs)?
            }
        }
    };
    fs::write(&args.out, payload).with_context(|| format!("writing {}", args.out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    let graph_text = fs::read_to_string(&args.graph)
        .with_context(|| format!("reading {}", args.graph.display()))?;
    let graphs = parse_graphs(&graph_text, args.format)?;
    let [graph] = graphs.as_slice() else {
        return Err(anyhow!("verify expects exactly one graph"));
    };
    let doc_text = fs::read_to_string(&args.drawing)
        .with_context(|| format!("reading {}", args.drawing.display()))?;
    let doc = DrawingDocument::from_json(&doc_text).map_err(|e| anyhow!("document: {e}"))?;
    let drawing = doc.to_drawing().map_err(|e| anyhow!("document: {e}"))?;
    if &drawing.graph != graph {
        return Err(anyhow!(
            "schema mismatch: drawing is for a different graph than --graph"
        ));
    }
    let slopes: SlopeSet = args
        .slopes
        .parse()
        .map_err(|e| anyhow!("slope list: {e}"))?;
    let report = verify_drawing(graph, &drawing, &slopes);
    if report.ok() {
        println!("valid: {} vertices, {} edges, slopes {}", graph.n(), graph.edge_count(), slopes);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{report}");
        Ok(ExitCode::from(EXIT_VERIFY))
    }
}

fn run_bounds(args: BoundsArgs) -> Result<ExitCode> {
    let parts: Vec<&str> = args.n_range.split(':').collect();
    let [start, end, step] = parts.as_slice() else {
        return Err(anyhow!("--n-range wants START:END:STEP"));
    };
    let start: u64 = start.parse().context("range start")?;
    let end: u64 = end.parse().context("range end")?;
    let step: u64 = step.parse().context("range step")?;
    if step == 0 {
        return Err(anyhow!("step must be positive"));
    }
    if end < start {
        return Err(anyhow!("empty range"));
    }
    for row in bounds_table(start, end, step) {
        println!("{row}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_slopes(args: SlopesArgs) -> Result<ExitCode> {
    let set: SlopeSet = args.set.parse().map_err(|e| anyhow!("slope list: {e}"))?;
    match is_good(&set) {
        Ok(true) => {
            println!("good");
            if let Ok(Some(witness)) = can_draw_k4(&set) {
                println!("K4 witness (vertex: x, y):");
                for (v, p) in witness.pos.iter().enumerate() {
                    println!("  {v}: ({}, {})", p.x, p.y);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Ok(false) => {
            println!("not good");
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ SlopeSetError::NeedFourSlopes(_)) => Err(anyhow!("{e}")),
        Err(e) => Err(anyhow!("decider failure: {e}")),
    }
}
