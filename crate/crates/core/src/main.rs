use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use trungcd::error::{CheckError, GraphError, ParseError, TrungError};
use trungcd::{
    generate_girth4_family, h_polynomial, ind_poly_enum, parse_edge_list, parse_graph6, run_checks, trung, verify,
    write_edge_list, write_graph6, CheckSelection, Graph, Rational, Strategy,
};

const EXIT_PARSE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "trungcd",
    version,
    about = "Trung's construction, independence polynomials and Gorenstein checks"
)]
struct Cli {
    /// Graph format for input files and graph output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the construction Tr(H, v).
    Tr {
        /// Input path, or "-" for stdin.
        input: String,
        /// The vertex v (0-indexed); must not be isolated.
        #[arg(short, long)]
        vertex: usize,
        /// Also print the indices of the new vertices a, b, c.
        #[arg(long)]
        labels: bool,
    },
    /// Independence polynomial, optionally evaluated or h-transformed.
    Poly {
        /// Input path, or "-" for stdin.
        input: String,
        /// Exact rational point such as -1/2.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        /// Also print h(t) = (1-t)^alpha I(G, t/(1-t)).
        #[arg(long)]
        h_poly: bool,
    },
    /// Structural checks; with no check flags every check runs.
    Check(CheckArgs),
    /// Generate the girth-4 family from C5.
    Gen {
        /// Number of construction steps (1 to 19).
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::First)]
        strategy: StrategyArg,
        /// Required with --strategy random.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest H for the recurrence and preservation suites; all graphs
        /// up to 6 vertices are always included.
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Random (H, v) pairs on top of the exhaustive ones.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Chain length for the charney-davis suite.
        #[arg(long, default_value_t = 5)]
        steps: usize,
        /// Random-strategy chains for the charney-davis suite.
        #[arg(long, default_value_t = 50)]
        chains: usize,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Input path, or "-" for stdin.
    input: String,
    /// All maximal independent sets have size alpha.
    #[arg(long)]
    well_covered: bool,
    /// Disjoint independent pairs extend to disjoint maximum sets.
    #[arg(long)]
    w2: bool,
    /// Eulerian independence complex.
    #[arg(long)]
    eulerian: bool,
    /// Cohen-Macaulay over Q by link homology.
    #[arg(long)]
    cm: bool,
    /// Gorenstein over Q (Eulerian and Cohen-Macaulay).
    #[arg(long)]
    gorenstein: bool,
    /// Sign of (-1)^(alpha/2) I(G, -1/2).
    #[arg(long)]
    charney_davis: bool,
    /// Every check (the default when no check flag is given).
    #[arg(long)]
    all: bool,
    /// Lift the vertex cap on the exhaustive W2 check.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    First,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Recurrence,
    Preservation,
    CharneyDavis,
    All,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let code = match e {
            ParseError::Graph6TooLarge(_) => EXIT_RESOURCE,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::TooManyVertices(_) => EXIT_RESOURCE,
            _ => EXIT_DOMAIN,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TrungError> for Failure {
    fn from(e: TrungError) -> Self {
        match e {
            TrungError::Graph(g) => g.into(),
            other => Failure::new(EXIT_DOMAIN, other.to_string()),
        }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        Failure::new(EXIT_RESOURCE, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, Failure> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{path}: {e}")))
    }
}

fn load_graph(path: &str, format: Format) -> Result<Graph, Failure> {
    let bytes = read_input(path)?;
    match format {
        Format::Edgelist => {
            let doc = parse_edge_list(&bytes)?;
            for (u, v) in &doc.duplicate_edges {
                eprintln!("warning: duplicate edge {u} {v} collapsed");
            }
            Ok(doc.graph)
        }
        Format::Graph6 => {
            let record = bytes
                .split(|&b| b == b'\n')
                .find(|l| !l.is_empty())
                .ok_or_else(|| Failure::new(EXIT_PARSE, "graph6: empty input"))?;
            Ok(parse_graph6(record)?)
        }
    }
}

fn render_graph(graph: &Graph, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Edgelist => write_edge_list(graph),
        Format::Graph6 => {
            let mut s = String::from_utf8(write_graph6(graph)?).expect("graph6 is ASCII");
            s.push('\n');
            s
        }
    })
}

fn graph_json(graph: &Graph) -> serde_json::Value {
    json!({
        "n": graph.n(),
        "edges": graph.edges(),
        "graph6": write_graph6(graph).ok().map(|b| String::from_utf8(b).expect("graph6 is ASCII")),
    })
}

fn parse_rational(text: &str) -> Result<Rational, Failure> {
    text.trim()
        .parse::<Rational>()
        .map_err(|e| Failure::new(EXIT_PARSE, format!("invalid rational {text:?}: {e}")))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let Cli {
        format,
        output,
        command,
    } = cli;
    match command {
        Command::Tr { input, vertex, labels } => {
            let h = load_graph(&input, format)?;
            let tr = trung(&h, vertex)?;
            if output == Output::Json {
                let mut value = graph_json(&tr.graph);
                value["labels"] = tr.labels_json();
                writeln!(out, "{value}")?;
            } else {
                if labels {
                    writeln!(out, "# a={} b={} c={} v={}", tr.a, tr.b, tr.c, tr.v)?;
                }
                write!(out, "{}", render_graph(&tr.graph, format)?)?;
            }
        }
        Command::Poly { input, eval, h_poly } => {
            let g = load_graph(&input, format)?;
            let point = eval.as_deref().map(parse_rational).transpose()?;
            let p = ind_poly_enum(&g);
            let alpha = g.independence_number();
            let h = h_poly.then(|| h_polynomial(&p, alpha).expect("deg I(G) = alpha"));
            let value = point.as_ref().map(|q| p.eval(q));
            if output == Output::Json {
                let mut obj = json!({ "alpha": alpha, "coefficients": p });
                if let (Some(q), Some(v)) = (&point, &value) {
                    obj["eval"] = json!({
                        "at": trungcd::checks::rational_string(q),
                        "value": trungcd::checks::rational_string(v),
                    });
                }
                if let Some(h) = &h {
                    obj["h"] = json!(h);
                }
                writeln!(out, "{obj}")?;
            } else {
                writeln!(out, "{p}")?;
                if let Some(v) = value {
                    writeln!(out, "{v}")?;
                }
                if let Some(h) = h {
                    writeln!(out, "{}", h.display_with("t"))?;
                }
            }
        }
        Command::Check(args) => {
            let g = load_graph(&args.input, format)?;
            let mut sel = CheckSelection {
                well_covered: args.well_covered,
                w2: args.w2,
                eulerian: args.eulerian,
                cm: args.cm,
                gorenstein: args.gorenstein,
                charney_davis: args.charney_davis,
            };
            if args.all || sel.is_empty() {
                sel = CheckSelection::all();
            }
            let report = run_checks(&g, sel, args.force)?;
            if output == Output::Json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::Gen { steps, strategy, seed } => {
            let strategy = match (strategy, seed) {
                (StrategyArg::First, _) => Strategy::First,
                (StrategyArg::Random, Some(seed)) => Strategy::Random { seed },
                (StrategyArg::Random, None) => {
                    return Err(Failure::new(EXIT_PARSE, "--strategy random requires --seed"))
                }
            };
            let family = generate_girth4_family(steps, strategy)?;
            if output == Output::Json {
                let items: Vec<_> = family
                    .iter()
                    .enumerate()
                    .map(|(k, m)| {
                        let mut v = graph_json(&m.graph);
                        v["step"] = json!(k + 1);
                        v["girth"] = json!(m.graph.girth());
                        v["alpha"] = json!(m.graph.independence_number());
                        v["labels"] = m.labels_json();
                        v
                    })
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(items))?;
            } else {
                for (k, m) in family.iter().enumerate() {
                    writeln!(
                        out,
                        "# step {} n={} girth={} alpha={} v={}",
                        k + 1,
                        m.graph.n(),
                        m.graph.girth(),
                        m.graph.independence_number(),
                        m.v
                    )?;
                    write!(out, "{}", render_graph(&m.graph, format)?)?;
                }
            }
        }
        Command::Verify {
            suite,
            n_max,
            trials,
            seed,
            steps,
            chains,
        } => {
            let mut reports = Vec::new();
            if matches!(suite, Suite::Recurrence | Suite::All) {
                reports.push(verify::recurrence_suite(n_max, trials, seed));
            }
            if matches!(suite, Suite::Preservation | Suite::All) {
                reports.push(verify::preservation_suite(n_max, trials, seed));
            }
            if matches!(suite, Suite::CharneyDavis | Suite::All) {
                reports.push(verify::charney_davis_suite(steps, chains, seed));
            }
            let all_passed = reports.iter().all(|r| r.passed());
            if output == Output::Json {
                let items: Vec<_> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "suite": r.name,
                            "cases": r.cases,
                            "passed": r.passed(),
                            "counterexamples": r.failures.iter().map(|f| json!({
                                "description": f.description,
                                "edge_list": write_edge_list(&f.graph),
                            })).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(items))?;
            } else {
                for r in &reports {
                    write!(out, "{}", r.to_text())?;
                }
            }
            return Ok(if all_passed { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
