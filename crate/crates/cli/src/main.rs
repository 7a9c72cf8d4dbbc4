//! `eccmat` command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eccmat::closed_forms::family_spectrum;
use eccmat::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Family};
use eccmat::linalg::{eig_symmetric, inertia_exact, DEFAULT_TOL};
use eccmat::verify::{
    consistency_sentinel, crosscheck_family, default_grid, run_property_suites, verify_cospectral, verify_inertia,
    verify_star_determinants, verify_tree_conjecture, verify_tree_irreducibility, FamilyKind, InertiaFamily,
    SuiteCounts, SweepOptions, VerificationReport, DEFAULT_SEED, MAX_DEFAULT_N,
};
use eccmat::{eccentricity_matrix, Error, Graph};
use serde::Serialize;
use serde_json::{json, Value};

const FORMAT_VERSION: u32 = 1;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID_GRAPH: u8 = 3;

#[derive(Parser)]
#[command(name = "eccmat", version, about = "Eccentricity matrices of graphs: construction, spectra, inertia, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and write it as an edge list or graph6.
    Build {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
        /// Write to FILE instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the eccentricity matrix.
    Eccmat {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Eigenvalues of the eccentricity matrix, numeric or closed-form.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// Use the closed-form spectrum of the named family instead of Jacobi.
        #[arg(long)]
        exact_family: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Exact inertia (positive, negative, zero) of the eccentricity matrix.
    Inertia {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run a verification claim and report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Family name and integer parameters, e.g. `star 5` or `lollipop 3 2`.
    family: Vec<String>,
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,
    #[arg(long, value_name = "STRING")]
    graph6: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// tree-conjecture, tree-irreducibility, star, block-a, corona, wheel,
    /// barbell, cocktail, multipartite, cone, complete-product,
    /// path-inertia, lollipop-inertia, cospectral, properties, sentinel
    claim: String,
    /// Largest tree order for the tree sweeps.
    #[arg(long)]
    max_n: Option<usize>,
    /// Parameter grid: `A..B`, `a,b,c`, or `RANGE x RANGE` for two-parameter claims.
    #[arg(long)]
    grid: Option<String>,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, env = "ECCMAT_JOBS", default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    tol: Option<f64>,
    /// Allow tree sweeps at n = 10 (10^8 trees).
    #[arg(long)]
    large: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Graph6(_) => EXIT_USAGE,
            _ => EXIT_INVALID_GRAPH,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

enum Input {
    Family(Family),
    Graph { graph: Graph, descriptor: Value },
}

impl Input {
    fn descriptor(&self) -> Value {
        match self {
            Input::Family(f) => json!({ "family": f.to_string() }),
            Input::Graph { descriptor, .. } => descriptor.clone(),
        }
    }

    fn graph(&self) -> Result<Graph, Failure> {
        match self {
            Input::Family(f) => Ok(f.build()?),
            Input::Graph { graph, .. } => Ok(graph.clone()),
        }
    }
}

fn resolve_input(args: &InputArgs) -> Result<Input, Failure> {
    let sources = [!args.family.is_empty(), args.edge_list.is_some(), args.graph6.is_some()];
    match sources.iter().filter(|&&s| s).count() {
        0 => return Err(Failure::usage("no input: give a family, --edge-list FILE or --graph6 STRING")),
        1 => {}
        _ => return Err(Failure::usage("conflicting inputs: give exactly one of a family, --edge-list, --graph6")),
    }
    if let Some(path) = &args.edge_list {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        let graph = parse_edge_list(&text)?;
        return Ok(Input::Graph { graph, descriptor: json!({ "edge_list": path.display().to_string() }) });
    }
    if let Some(s) = &args.graph6 {
        let graph = parse_graph6(s)?;
        return Ok(Input::Graph { graph, descriptor: json!({ "graph6": s }) });
    }
    let (name, rest) = args.family.split_first().expect("checked non-empty");
    let params = rest
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| Failure::usage(format!("parameter {p:?} is not a non-negative integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    let family = Family::from_name(name, &params).map_err(|e| match e {
        Error::InvalidParameter { ref reason, .. } if reason == "unknown family" => Failure::usage(e.to_string()),
        e => e.into(),
    })?;
    Ok(Input::Family(family))
}

fn envelope(command: &str, input: Value, result: impl Serialize) -> String {
    let v = json!({
        "format_version": FORMAT_VERSION,
        "command": command,
        "input": input,
        "result": result,
    });
    serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
}

fn emit(text: &str) -> Result<(), Failure> {
    std::io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| Failure { code: EXIT_FAILURE, message: format!("write failed: {e}") })
}

fn cmd_build(input: &InputArgs, format: GraphFormat, out: Option<&PathBuf>) -> CmdResult {
    let g = resolve_input(input)?.graph()?;
    let text = match format {
        GraphFormat::EdgeList => to_edge_list(&g),
        GraphFormat::Graph6 => to_graph6(&g) + "\n",
    };
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure { code: EXIT_FAILURE, message: format!("cannot write {}: {e}", path.display()) })?,
        None => emit(&text)?,
    }
    Ok(0)
}

fn cmd_eccmat(input: &InputArgs, format: MatrixFormat) -> CmdResult {
    let input = resolve_input(input)?;
    let m = eccentricity_matrix(&input.graph()?)?;
    match format {
        MatrixFormat::Csv => emit(&m.to_csv())?,
        MatrixFormat::Json => emit(&envelope("eccmat", input.descriptor(), &m))?,
    }
    Ok(0)
}

fn cmd_spectrum(input: &InputArgs, exact: bool, tol: f64, format: OutputFormat) -> CmdResult {
    let input = resolve_input(input)?;
    let (result, text) = if exact {
        let Input::Family(family) = &input else {
            return Err(Failure::usage("--exact-family needs a family input"));
        };
        let fs = family_spectrum(family)?;
        let text = fs.spectrum.to_string();
        (serde_json::to_value(&fs).expect("serializes"), text)
    } else {
        let m = eccentricity_matrix(&input.graph()?)?;
        let spectrum = eig_symmetric(&m.to_f64(), tol).map_err(|e| Failure::usage(e.to_string()))?;
        let text = spectrum.to_string();
        (json!({ "spectrum": spectrum }), text)
    };
    match format {
        OutputFormat::Json => emit(&envelope("spectrum", input.descriptor(), result))?,
        OutputFormat::Text => emit(&(text + "\n"))?,
    }
    Ok(0)
}

fn cmd_inertia(input: &InputArgs, format: OutputFormat) -> CmdResult {
    let input = resolve_input(input)?;
    let inertia = inertia_exact(&eccentricity_matrix(&input.graph()?)?.to_symmetric());
    match format {
        OutputFormat::Json => emit(&envelope(
            "inertia",
            input.descriptor(),
            json!({ "inertia": inertia, "rank": inertia.rank() }),
        ))?,
        OutputFormat::Text => emit(&format!("{inertia}\n"))?,
    }
    Ok(0)
}

fn parse_range(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::usage(format!("invalid grid {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

fn parse_grid_1d(s: &str) -> Result<Vec<usize>, Failure> {
    parse_range(s)
}

fn parse_grid_2d(s: &str) -> Result<Vec<Vec<usize>>, Failure> {
    let (a, b) = s.split_once('x').ok_or_else(|| Failure::usage(format!("grid {s:?} needs the form A x B")))?;
    let (a, b) = (parse_range(a)?, parse_range(b)?);
    Ok(a.iter().flat_map(|&x| b.iter().map(move |&y| vec![x, y])).collect())
}

fn run_claim(args: &VerifyArgs) -> Result<Vec<VerificationReport>, Failure> {
    let tol = args.tol.unwrap_or(1e-8);
    let no_grid = |claim: &str| match args.grid {
        Some(_) => Err(Failure::usage(format!("{claim} takes no --grid"))),
        None => Ok(()),
    };
    let sweep = || -> Result<SweepOptions, Failure> {
        if args.grid.is_some() {
            return Err(Failure::usage("tree sweeps take --max-n, not --grid"));
        }
        Ok(SweepOptions {
            max_n: args.max_n.unwrap_or(MAX_DEFAULT_N),
            tol: args.tol.unwrap_or(1e-7),
            jobs: args.jobs,
            allow_large: args.large,
        })
    };
    let claim = args.claim.as_str();
    let usage = |e: Error| Failure::usage(e.to_string());
    Ok(match claim {
        "tree-conjecture" => {
            let opts = sweep()?;
            if opts.max_n > MAX_DEFAULT_N && opts.allow_large {
                eprintln!("warning: sweeping all labeled trees up to n = {} takes a long time", opts.max_n);
            }
            vec![verify_tree_conjecture(&opts).map_err(usage)?]
        }
        "tree-irreducibility" => vec![verify_tree_irreducibility(&sweep()?).map_err(usage)?],
        "star" => {
            let grid = match &args.grid {
                Some(g) => parse_grid_1d(g)?,
                None => (3..=30).collect(),
            };
            let cases: Vec<_> = grid.iter().map(|&n| FamilyKind::Star.case_for(n).expect("one parameter")).collect();
            let (lo, hi) = (*grid.iter().min().unwrap_or(&3), *grid.iter().max().unwrap_or(&3));
            vec![crosscheck_family(claim, &cases, tol), verify_star_determinants(lo..=hi).map_err(usage)?]
        }
        "block-a" | "wheel" | "barbell" | "cocktail" | "corona" | "multipartite" | "cone" | "complete-product" => {
            let kind = FamilyKind::from_name(claim).expect("listed above");
            let cases = match (&args.grid, kind.case_for(0)) {
                (Some(g), Some(_)) => parse_grid_1d(g)?.into_iter().map(|p| kind.case_for(p).expect("one parameter")).collect(),
                (Some(_), None) => return Err(Failure::usage(format!("{claim} uses a fixed grid; drop --grid"))),
                (None, _) => default_grid(kind),
            };
            vec![crosscheck_family(claim, &cases, tol)]
        }
        "path-inertia" => {
            let grid = match &args.grid {
                Some(g) => parse_grid_1d(g)?.into_iter().map(|n| vec![n]).collect(),
                None => (4..=40).map(|n| vec![n]).collect::<Vec<_>>(),
            };
            vec![verify_inertia(InertiaFamily::Path, &grid).map_err(usage)?]
        }
        "lollipop-inertia" => {
            let grid = parse_grid_2d(args.grid.as_deref().unwrap_or("3..8x2..8"))?;
            vec![verify_inertia(InertiaFamily::Lollipop, &grid).map_err(usage)?]
        }
        "cospectral" => {
            let grid = parse_grid_2d(args.grid.as_deref().unwrap_or("2..3x3..4"))?;
            grid.iter().map(|p| verify_cospectral(p[0], p[1], tol).map_err(usage)).collect::<Result<_, _>>()?
        }
        "properties" => {
            no_grid(claim)?;
            run_property_suites(args.seed, SuiteCounts::default())
        }
        "sentinel" => {
            no_grid(claim)?;
            vec![consistency_sentinel(tol).map_err(usage)?]
        }
        other => return Err(Failure::usage(format!("unknown claim {other:?}"))),
    })
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let started = Instant::now();
    let reports = run_claim(args)?;
    eprintln!("{}: finished in {:.2?}", args.claim, started.elapsed());
    let passed = reports.iter().all(VerificationReport::passed);
    match args.format {
        OutputFormat::Json => {
            let input = json!({
                "claim": args.claim,
                "max_n": args.max_n,
                "grid": args.grid,
                "seed": args.seed,
                "tol": args.tol,
            });
            emit(&envelope("verify", input, json!({ "passed": passed, "reports": reports })))?
        }
        OutputFormat::Text => {
            let tables: Vec<String> = reports.iter().map(VerificationReport::to_table).collect();
            emit(&tables.join("\n"))?
        }
    }
    Ok(if passed { 0 } else { EXIT_FAILURE })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Build { input, format, out } => cmd_build(input, *format, out.as_ref()),
        Command::Eccmat { input, format } => cmd_eccmat(input, *format),
        Command::Spectrum { input, exact_family, tol, format } => cmd_spectrum(input, *exact_family, *tol, *format),
        Command::Inertia { input, format } => cmd_inertia(input, *format),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
