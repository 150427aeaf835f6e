use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quasitree::{
    adjacency, quasi_tree_polynomial, quasi_trees_of, quasi_trees_via_partial_dual, run_check,
    symbolic_skew_adjacency, unsymbolic_skew_adjacency, Bouquet, DetBackend, EdgeSubset, HarnessConfig,
    MatrixError, Method, PolyOptions, QuasiTreeError, QuasiTreeReport, RibbonGraph, RotationError, TopologyError,
    DEFAULT_ENUMERATION_CAP,
};

const SCHEMA: u32 = 1;

mod exit {
    pub const PARSE: u8 = 2;
    pub const CAP: u8 = 3;
    pub const OVERFLOW: u8 = 4;
    pub const DISCONNECTED: u8 = 5;
    pub const INVALID_T: u8 = 6;
    pub const VERIFICATION: u8 = 7;
}

#[derive(Parser)]
#[command(name = "quasitree", version, about = "Spanning quasi-trees of ribbon graphs from principal minors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the symbolic, unsymbolic and adjacency matrices of a bouquet.
    Matrix(Input),
    /// Print the number of spanning quasi-trees.
    Count(Enumerate),
    /// Print every spanning quasi-tree, one per line.
    List(Enumerate),
    /// Print the quasi-tree polynomial mod 2, and the integer one with --integer.
    Poly(Enumerate),
    /// Spanning quasi-trees of a ribbon graph read from a JSON file.
    Ribbon(RibbonArgs),
    /// Cross-check the determinant side against boundary tracing on random bouquets.
    Check(CheckArgs),
}

#[derive(Args)]
struct Input {
    /// Signed rotation such as "[-1a, 2a, 1b, 2b]".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    rotation: Option<String>,
    /// Read the rotation from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct Enumeration {
    #[arg(long, default_value = "gf2", value_parser = parse_method)]
    method: Method,
    /// Also report the integer coefficients before reduction mod 2.
    #[arg(long)]
    integer: bool,
    /// Largest number of edges to enumerate.
    #[arg(long, env = "QUASITREE_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Enumerate beyond the cap.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct Enumerate {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Args)]
struct RibbonArgs {
    /// JSON document `{"vertices": [[{"edge": 1, "end": "a", "sign": 1}, ...], ...]}`.
    #[arg(required_unless_present = "file_flag", conflicts_with = "file_flag")]
    file: Option<PathBuf>,
    #[arg(long = "file", id = "file_flag")]
    file_flag: Option<PathBuf>,
    /// Spanning quasi-tree to dualize over; found automatically when omitted.
    #[arg(long)]
    quasi_tree: Option<String>,
    #[command(flatten)]
    enumeration: Enumeration,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Loops per bouquet.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(0..=20))]
    n: u64,
    /// Probability that a loop is twisted.
    #[arg(long, default_value_t = 0.5, value_parser = parse_probability)]
    p: f64,
    /// Corrupt one matrix entry; every run should then report failures.
    #[arg(long, hide = true)]
    corrupt: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not a probability"))
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<QuasiTreeError> for Failure {
    fn from(e: QuasiTreeError) -> Self {
        let code = match &e {
            QuasiTreeError::SizeCapExceeded { .. }
            | QuasiTreeError::Matrix(MatrixError::SizeCapExceeded { .. })
            | QuasiTreeError::Topology(TopologyError::SizeCapExceeded { .. }) => exit::CAP,
            QuasiTreeError::Matrix(MatrixError::Overflow) => exit::OVERFLOW,
            QuasiTreeError::NotConnected | QuasiTreeError::Topology(TopologyError::NotFound) => exit::DISCONNECTED,
            QuasiTreeError::NotAQuasiTree { .. } | QuasiTreeError::Topology(TopologyError::SubsetOutOfRange(_)) => {
                exit::INVALID_T
            }
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

// `error: ...` followed by the input with a caret under the offending byte.
fn rotation_diagnostic(text: &str, err: &RotationError) -> String {
    let mut msg = format!("cannot parse rotation: {err}");
    if let RotationError::MalformedToken { offset, .. } = err {
        let line = text.lines().next().unwrap_or("");
        let col = text[..(*offset).min(text.len())].chars().count();
        if *offset <= line.len() {
            let _ = write!(msg, "\n  {line}\n  {}^", " ".repeat(col));
        }
    }
    msg
}

fn read_bouquet(input: &Input) -> Result<Bouquet, Failure> {
    let text = match (&input.rotation, &input.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::new(exit::PARSE, format!("cannot read {}: {e}", path.display())))?
            .trim()
            .to_string(),
        (None, None) => unreachable!("clap requires one input"),
    };
    text.parse::<Bouquet>().map_err(|e| Failure::new(exit::PARSE, rotation_diagnostic(&text, &e)))
}

fn options(e: &Enumeration) -> PolyOptions {
    PolyOptions {
        cap: e.cap,
        force: e.force,
        symbolic_cap: if e.force { usize::MAX } else { PolyOptions::default().symbolic_cap },
        integer: e.integer,
        backend: DetBackend::Exact,
    }
}

fn envelope(command: &str, body: Value) -> String {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(out), Value::Object(body)) = (&mut v, body) {
        out.extend(body);
    }
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialize"))
}

fn cmd_matrix(input: &Input) -> Result<String, Failure> {
    let b = read_bouquet(input)?;
    let s = symbolic_skew_adjacency(&b);
    let u = unsymbolic_skew_adjacency(&b);
    let m = adjacency(&b);
    Ok(match input.format {
        Format::Text => format!("A^s =\n{s}\nA^u =\n{u}\nM =\n{m}"),
        Format::Json => envelope(
            "matrix",
            json!({
                "rotation": b.rotation().to_string(),
                "symbolic": s.to_json(),
                "unsymbolic": u.to_json(),
                "adjacency": m.to_json(),
            }),
        ),
    })
}

fn lines(sets: &[EdgeSubset]) -> String {
    sets.iter().map(|x| format!("{x}\n")).collect()
}

fn poly_text(r: &QuasiTreeReport) -> String {
    let mut out = format!("mod2: {}\n", r.mod2_poly);
    if let Some(p) = &r.integer_poly {
        let _ = writeln!(out, "integer: {p}");
    }
    out
}

fn cmd_enumerate(which: &str, args: &Enumerate) -> Result<String, Failure> {
    let b = read_bouquet(&args.input)?;
    let report = quasi_tree_polynomial(&b, args.enumeration.method, options(&args.enumeration))?;
    Ok(match args.input.format {
        Format::Text => match which {
            "count" => format!("{}\n", report.tau),
            "list" => lines(&report.feasible),
            _ => poly_text(&report),
        },
        Format::Json => {
            let mut body = report.to_json();
            body["rotation"] = json!(b.rotation().to_string());
            envelope(which, body)
        }
    })
}

fn cmd_ribbon(args: &RibbonArgs) -> Result<String, Failure> {
    let path = args.file.as_ref().or(args.file_flag.as_ref()).expect("clap requires one input");
    let g = RibbonGraph::from_path(path).map_err(|e| Failure::new(exit::PARSE, e.to_string()))?;
    let opts = options(&args.enumeration);
    let method = args.enumeration.method;
    let result = match &args.quasi_tree {
        Some(t) => {
            let t: EdgeSubset = t
                .parse()
                .map_err(|e| Failure::new(exit::PARSE, format!("cannot parse --quasi-tree {t:?}: {e}")))?;
            quasi_trees_via_partial_dual(&g, t, method, opts)?
        }
        None => quasi_trees_of(&g, method, opts)?,
    };
    let r = &result.report;
    Ok(match args.format {
        Format::Text => {
            let mut out = format!(
                "vertices: {}\nedges: {}\nquasi-tree: {}\nbouquet: {}\ntau: {}\nfeasible:\n",
                g.n_vertices(),
                g.n_edges(),
                result.quasi_tree,
                result.bouquet.rotation(),
                r.tau
            );
            out += &lines(&r.feasible);
            if r.integer_poly.is_some() {
                out += &poly_text(r);
            }
            out
        }
        Format::Json => {
            let mut body = r.to_json();
            body["vertices"] = json!(g.n_vertices());
            body["quasi_tree"] = json!(result.quasi_tree.indices().collect::<Vec<_>>());
            body["bouquet"] = json!(result.bouquet.rotation().to_string());
            envelope("ribbon", body)
        }
    })
}

fn cmd_check(args: &CheckArgs) -> Result<String, Failure> {
    let config = HarnessConfig { seed: args.seed, count: args.count, n: args.n as usize, p: args.p, corrupt: args.corrupt };
    let summary = run_check(config);
    let out = match args.format {
        Format::Text => summary.render_text(),
        Format::Json => envelope("check", summary.to_json()),
    };
    if summary.all_passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::new(exit::VERIFICATION, format!("{} of {} instances failed", summary.failed(), args.count)))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Matrix(input) => cmd_matrix(input),
        Command::Count(a) => cmd_enumerate("count", a),
        Command::List(a) => cmd_enumerate("list", a),
        Command::Poly(a) => cmd_enumerate("poly", a),
        Command::Ribbon(a) => cmd_ribbon(a),
        Command::Check(a) => cmd_check(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
