//! `tricolor`: build, check and search three-edge-colorings of complete graphs.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tricolor::io::{self as docs, Meta};
use tricolor::search::DEFAULT_EXHAUSTIVE_BUDGET;
use tricolor::synthesis::{self, overlap};
use tricolor::{Color, EdgeColoring, Error, ExitStatus, FigureFormat, SearchParams, TriangleCensus};

/// Overrides the state budget of `exhaustive`.
const BUDGET_ENV: &str = "TRICOLOR_EXHAUSTIVE_BUDGET";

#[derive(Parser)]
#[command(name = "tricolor", version, about = "Three-edge-colorings of complete graphs")]
struct Cli {
    /// Machine-readable JSON reports instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Gf16,
    Cylinder,
}

fn parse_color(s: &str) -> Result<Color, String> {
    s.parse::<Color>().map_err(|e| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Build a triangle-free K16 coloring.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring, optionally against expected per-color monochromatic counts.
    Verify {
        file: Option<PathBuf>,
        /// Expected Blue,Red,Yellow counts, e.g. `0,0,0`.
        #[arg(long)]
        expect_mono: Option<String>,
    },
    /// Count monochromatic triangles.
    Count {
        file: Option<PathBuf>,
        #[arg(long)]
        per_color: bool,
        #[arg(long)]
        list: bool,
    },
    /// Remove one vertex and its edges.
    DeleteVertex {
        file: Option<PathBuf>,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the spoke colorings that add a vertex without creating a monochromatic triangle.
    Extend {
        file: Option<PathBuf>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Join two extensions of a base coloring, leaving the edge between them open.
    Assemble {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        ext_a: PathBuf,
        #[arg(long)]
        ext_b: PathBuf,
        /// Entry of the ext-a document to use.
        #[arg(long, default_value_t = 0)]
        index_a: usize,
        #[arg(long, default_value_t = 0)]
        index_b: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color the open edge of an assembled template.
    Complete {
        file: Option<PathBuf>,
        /// B, R or Y.
        #[arg(long, value_parser = parse_color)]
        color: Color,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// K17 from twin copies of a finite-field K16 vertex.
    TwinK17 {
        /// B, R or Y.
        #[arg(long, value_parser = parse_color)]
        color: Color,
        /// Vertex of the K16 that is deleted and doubled.
        #[arg(long, default_value_t = 0)]
        delete: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local search for colorings with few monochromatic triangles.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 20_000)]
        steps: usize,
        #[arg(long, default_value_t = 2_000)]
        sideways: usize,
        /// Write the best coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum by enumeration (tiny instances only).
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Draw a coloring as Graphviz DOT or SVG.
    Export {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Thicker strokes on monochromatic triangles.
        #[arg(long)]
        highlight: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn status(&self) -> ExitStatus {
        match self {
            Failure::Lib(e) => ExitStatus::from(e),
            Failure::Io(_) | Failure::Usage(_) => ExitStatus::InvalidInput,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
            Failure::Usage(e) => write!(f, "{e}"),
        }
    }
}

type CmdResult = Result<ExitStatus, Failure>;

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_coloring(path: &Option<PathBuf>) -> Result<EdgeColoring, Failure> {
    Ok(docs::parse(&read_input(path)?)?.0)
}

fn meta(pairs: &[(&str, Value)]) -> Meta {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn census_json(c: &TriangleCensus) -> Value {
    json!({
        "mono": { "B": c.mono[0], "R": c.mono[1], "Y": c.mono[2] },
        "total_mono": c.total_mono(),
        "bichromatic": c.bichromatic,
        "rainbow": c.rainbow,
        "triangles": c.total(),
    })
}

fn triple(v: [usize; 3]) -> String {
    format!("({},{},{})", v[0], v[1], v[2])
}

fn parse_expect(s: &str) -> Result<[usize; 3], Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("--expect-mono wants three counts like 0,0,0, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0usize; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

/// Report for commands whose stdout carries a document.
fn note(json_mode: bool, value: Value, human: String) {
    if json_mode {
        eprintln!("{value}");
    } else {
        eprintln!("{human}");
    }
}

fn run(cli: Cli) -> CmdResult {
    let json_mode = cli.json;
    match cli.command {
        Command::Construct { method, out } => {
            let (c, name) = match method {
                Method::Gf16 => (tricolor::construct_gf16(), "gf16"),
                Method::Cylinder => (tricolor::construct_cylinder(), "cylinder"),
            };
            write_output(&out, &docs::serialize(&c, meta(&[("method", json!(name))])))?;
            Ok(ExitStatus::Success)
        }
        Command::Verify { file, expect_mono } => {
            let expected = expect_mono.as_deref().map(parse_expect).transpose()?;
            let c = read_coloring(&file)?;
            let census = c.census();
            let ok = expected.is_none_or(|e| e == census.mono);
            if json_mode {
                let report = json!({
                    "n": c.n(),
                    "census": census_json(&census),
                    "expected": expected,
                    "verified": ok,
                    "fingerprint": c.fingerprint().0,
                });
                println!("{report}");
            } else {
                let [b, r, y] = census.mono;
                println!("K_{}: mono (B,R,Y) = ({b},{r},{y}), bichromatic {}, rainbow {}", c.n(), census.bichromatic, census.rainbow);
                if let Some([eb, er, ey]) = expected {
                    println!("{}: expected ({eb},{er},{ey})", if ok { "VERIFIED" } else { "FAILED" });
                }
            }
            Ok(if ok { ExitStatus::Success } else { ExitStatus::VerificationFailed })
        }
        Command::Count { file, per_color, list } => {
            let c = read_coloring(&file)?;
            let census = c.census();
            if json_mode {
                let triangles: Vec<Value> = census
                    .mono_list
                    .iter()
                    .map(|t| json!({ "vertices": t.vertices, "color": t.color.as_char().to_string() }))
                    .collect();
                let mut report = census_json(&census);
                if list {
                    report["mono_list"] = Value::Array(triangles);
                }
                println!("{report}");
            } else {
                if per_color {
                    let [b, r, y] = census.mono;
                    println!("mono (B,R,Y) = ({b},{r},{y})");
                } else {
                    println!("mono = {}", census.total_mono());
                }
                if list {
                    for t in &census.mono_list {
                        println!("{} {}", triple(t.vertices), t.color);
                    }
                }
            }
            Ok(ExitStatus::Success)
        }
        Command::DeleteVertex { file, vertex, out } => {
            let c = read_coloring(&file)?.delete_vertex(vertex)?;
            write_output(&out, &docs::serialize(&c, meta(&[("deleted_vertex", json!(vertex))])))?;
            Ok(ExitStatus::Success)
        }
        Command::Extend { file, limit, out } => {
            let host = read_coloring(&file)?;
            let mut exts = synthesis::find_extensions(&host)?;
            let total = exts.len();
            if let Some(limit) = limit {
                exts.truncate(limit);
            }
            let text = docs::serialize_extensions(host.n(), &exts, meta(&[("total", json!(total))]));
            write_output(&out, &text)?;
            note(json_mode, json!({ "total": total, "written": exts.len() }), format!("{total} extensions, {} written", exts.len()));
            Ok(ExitStatus::Success)
        }
        Command::Assemble { base, ext_a, ext_b, index_a, index_b, out } => {
            let host = read_coloring(&Some(base))?;
            let pick = |path: PathBuf, i: usize| -> Result<_, Failure> {
                let exts = docs::parse_extensions(&read_input(&Some(path.clone()))?)?;
                exts.into_iter()
                    .nth(i)
                    .ok_or_else(|| Failure::Usage(format!("{} has no extension #{i}", path.display())))
            };
            let (ea, eb) = (pick(ext_a, index_a)?, pick(ext_b, index_b)?);
            let t = synthesis::assemble(&host, &ea, &eb)?;
            let overlaps: Vec<usize> = Color::ALL.iter().map(|&x| overlap(&ea, &eb, x)).collect();
            write_output(&out, &docs::serialize_template(&t, meta(&[("overlap", json!(overlaps))]))?)?;
            Ok(ExitStatus::Success)
        }
        Command::Complete { file, color, out } => {
            let (t, _) = docs::parse_template(&read_input(&file)?)?;
            let report = synthesis::complete_edge(&t, color)?;
            finish_assembly(json_mode, &report, &out)
        }
        Command::TwinK17 { color, delete, out } => {
            let report = synthesis::twin_k17_at(delete, color)?;
            finish_assembly(json_mode, &report, &out)
        }
        Command::Search { n, k, seed, restarts, steps, sideways, out } => {
            let params = SearchParams { n, k, seed, restarts, steps_per_restart: steps, sideways_limit: sideways };
            let result = tricolor::minimize(&params)?;
            let census = result.best.census();
            let below_record = n == 17 && k == 3 && result.best_count < 5;
            if json_mode {
                let report = json!({
                    "n": n, "k": k, "seed": seed,
                    "best_count": result.best_count,
                    "best_restart": result.best_restart,
                    "census": census_json(&census),
                    "restart_best": result.trace.iter().map(|t| t.best).collect::<Vec<_>>(),
                    "evaluations": result.evaluations,
                    "below_constructive_record": below_record,
                });
                println!("{report}");
            } else {
                let [b, r, y] = census.mono;
                println!(
                    "K_{n}, {k} colors, seed {seed}: best {} (B,R,Y = {b},{r},{y}) at restart {} of {}, {} evaluations",
                    result.best_count,
                    result.best_restart,
                    result.trace.len(),
                    result.evaluations
                );
            }
            if below_record {
                eprintln!("ALERT: found a K17 coloring with fewer than 5 monochromatic triangles; investigate");
            }
            if out.is_some() {
                let m = meta(&[
                    ("method", json!("search")),
                    ("seed", json!(seed)),
                    ("restarts", json!(restarts)),
                    ("steps", json!(steps)),
                    ("sideways", json!(sideways)),
                ]);
                write_output(&out, &docs::serialize(&result.best, m))?;
            }
            Ok(ExitStatus::Success)
        }
        Command::Exhaustive { n, k } => {
            let budget = match std::env::var(BUDGET_ENV) {
                Ok(v) => v.parse().map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be an integer")))?,
                Err(_) => DEFAULT_EXHAUSTIVE_BUDGET,
            };
            let (min, witness) = tricolor::exhaustive_min(n, k, budget)?;
            if json_mode {
                println!("{}", json!({ "n": n, "k": k, "minimum": min, "witness": witness.to_color_string() }));
            } else {
                println!("K_{n}, {k} colors: minimum {min}, witness {}", witness.to_color_string());
            }
            Ok(ExitStatus::Success)
        }
        Command::Export { file, format, highlight, out } => {
            let c = read_coloring(&file)?;
            let format = match format {
                FormatArg::Dot => FigureFormat::Dot,
                FormatArg::Svg => FigureFormat::Svg,
            };
            write_output(&out, &docs::export_figure(&c, format, highlight))?;
            Ok(ExitStatus::Success)
        }
    }
}

fn finish_assembly(json_mode: bool, report: &synthesis::AssemblyReport, out: &Option<PathBuf>) -> CmdResult {
    let (u, v) = report.added_edge;
    let m = meta(&[
        ("method", json!("assembly")),
        ("added_edge", json!([u, v])),
        ("added_edge_color", json!(report.added_edge_color.as_char().to_string())),
    ]);
    write_output(out, &docs::serialize(&report.coloring, m))?;
    let [b, r, y] = report.census.mono;
    note(
        json_mode,
        json!({
            "added_edge": [u, v],
            "added_edge_color": report.added_edge_color.as_char().to_string(),
            "census": census_json(&report.census),
            "triangles_through_new_edge": report.triangles_through_new_edge,
        }),
        format!(
            "edge ({u},{v}) = {}: mono (B,R,Y) = ({b},{r},{y}), {} through the new edge",
            report.added_edge_color, report.triangles_through_new_edge
        ),
    );
    Ok(ExitStatus::Success)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.status().code())
        }
    }
}
