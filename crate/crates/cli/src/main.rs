use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use desc_regions::analysis;
use desc_regions::certify::CertifyConfig;
use desc_regions::criteria::{SimplexMode, SimplexSpec, DEFAULT_MAX_NEGATIVES};
use desc_regions::oracle::{self, GridSpec};
use desc_regions::polytope::DEFAULT_FACET_BUDGET;
use desc_regions::rational::{self, Rational};
use desc_regions::svg::{self, Overlay};
use desc_regions::trace::TraceDocument;
use desc_regions::{parse_signomial, ExponentVector, Signomial};

const EXIT_INCONCLUSIVE: u8 = 2;

#[derive(Parser)]
#[command(name = "desc-regions", version, about = "Connectivity certificates for negative regions of signomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify that {x > 0 : f(x) < 0} has at most one connected component.
    Certify(CertifyArgs),
    /// Count negative components on a log-coordinate grid.
    Oracle(OracleArgs),
    /// Report support and Newton polytope statistics.
    Analyze(AnalyzeArgs),
    /// Draw the negative region of a bivariate signomial as SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Negative exponents inside the simplex.
    Neg,
    /// Positive exponents inside the simplex.
    Pos,
}

#[derive(Args)]
struct CertifyArgs {
    /// Polynomial file ("-" for stdin).
    #[arg(required_unless_present = "verify_trace")]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    max_depth: usize,
    #[arg(long, default_value_t = DEFAULT_FACET_BUDGET)]
    facet_budget: usize,
    #[arg(long)]
    enable_simplex_search: bool,
    #[arg(long)]
    enable_enclosing_search: bool,
    #[arg(long)]
    enable_box: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_NEGATIVES)]
    max_negatives: usize,
    /// Simplex vertices, e.g. "1,1;4,2;1,3".
    #[arg(long)]
    simplex: Option<String>,
    #[arg(long, value_enum, requires = "simplex")]
    simplex_mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Re-verify a saved trace instead of certifying.
    #[arg(long, value_name = "TRACE", conflicts_with = "file")]
    verify_trace: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    /// Log-coordinate box: "lo,hi" for every axis or "lo1,hi1;lo2,hi2;...".
    #[arg(long = "box", value_name = "BOX", allow_hyphen_values = true)]
    bounds: Option<String>,
    /// Samples per axis.
    #[arg(long)]
    grid: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    file: PathBuf,
    #[command(flatten)]
    grid: GridArgs,
    /// Relative tolerance for sign decisions.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_FACET_BUDGET)]
    facet_budget: usize,
}

#[derive(Args)]
struct PlotArgs {
    file: PathBuf,
    #[command(flatten)]
    grid: GridArgs,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Line v·μ = a in exponent space as "v1,v2,a" (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    hyperplane: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Certify(a) => certify(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Analyze(a) => analyze(a),
        Command::Plot(a) => plot(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(path: &Path) -> anyhow::Result<Signomial> {
    let text = read_input(path)?;
    parse_signomial(&text).with_context(|| format!("in {}", path.display()))
}

fn parse_rationals(s: &str) -> anyhow::Result<Vec<Rational>> {
    s.split(',')
        .map(|t| rational::parse(t.trim()).ok_or_else(|| anyhow!("not a rational number: {t:?}")))
        .collect()
}

fn parse_points(s: &str) -> anyhow::Result<Vec<ExponentVector>> {
    s.split(';').map(|p| Ok(ExponentVector::new(parse_rationals(p)?))).collect()
}

fn parse_box(s: &str, n: usize) -> anyhow::Result<Vec<(f64, f64)>> {
    let axes: Vec<(f64, f64)> = s
        .split(';')
        .map(|axis| {
            let v: Vec<f64> = axis
                .split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| anyhow!("not a number: {t:?}")))
                .collect::<anyhow::Result<_>>()?;
            match v[..] {
                [lo, hi] => Ok((lo, hi)),
                _ => bail!("box axis must be \"lo,hi\", got {axis:?}"),
            }
        })
        .collect::<anyhow::Result<_>>()?;
    match axes.len() {
        1 => Ok(vec![axes[0]; n]),
        k if k == n => Ok(axes),
        k => bail!("box has {k} axes but the polynomial has {n} variables"),
    }
}

fn grid_for(args: &GridArgs, n: usize) -> anyhow::Result<GridSpec> {
    let mut grid = GridSpec::default_for(n);
    if let Some(b) = &args.bounds {
        grid.bounds = parse_box(b, n)?;
    }
    if let Some(r) = args.grid {
        grid.resolution = r;
    }
    Ok(grid)
}

fn certify(args: CertifyArgs) -> anyhow::Result<ExitCode> {
    if let Some(path) = &args.verify_trace {
        let text = read_input(path)?;
        let doc = TraceDocument::from_json(&text)?;
        doc.verify()?;
        println!("trace verified: {:?}", doc.outcome);
        return Ok(ExitCode::SUCCESS);
    }
    let path = args.file.as_deref().expect("clap enforces a file");
    let f = load(path)?;
    if f.is_empty() {
        bail!("{}: polynomial has empty support", path.display());
    }
    let simplex = match &args.simplex {
        Some(s) => Some(SimplexSpec {
            vertices: parse_points(s)?,
            mode: args.simplex_mode.map(|m| match m {
                ModeArg::Neg => SimplexMode::NegativesInside,
                ModeArg::Pos => SimplexMode::PositivesInside,
            }),
        }),
        None => None,
    };
    if let Some(spec) = &simplex {
        if spec.vertices.len() != f.dimension() + 1 || spec.vertices.iter().any(|v| v.dim() != f.dimension()) {
            bail!("a simplex in {} variables needs {} vertices of that dimension", f.dimension(), f.dimension() + 1);
        }
    }
    let config = CertifyConfig {
        max_depth: args.max_depth,
        facet_budget: args.facet_budget,
        enable_simplex_search: args.enable_simplex_search,
        enable_enclosing_search: args.enable_enclosing_search,
        enable_box: args.enable_box,
        max_negatives: args.max_negatives,
        simplex,
    };
    let doc = TraceDocument::certify(&f, &config);
    match args.format {
        Format::Json => println!("{}", doc.to_json()),
        Format::Text => {
            println!("outcome: {:?}", doc.outcome);
            print!("{}", doc.tree.render_text());
        }
    }
    Ok(if doc.outcome.is_certified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONCLUSIVE)
    })
}

fn run_oracle(args: OracleArgs) -> anyhow::Result<ExitCode> {
    let f = load(&args.file)?;
    let mut grid = grid_for(&args.grid, f.dimension())?;
    if let Some(t) = args.tol {
        grid.rel_tol = t;
    }
    let report = oracle::count_negative_components(&f, &grid)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn analyze(args: AnalyzeArgs) -> anyhow::Result<ExitCode> {
    let f = load(&args.file)?;
    let report = analysis::analyze(&f, args.facet_budget);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn plot(args: PlotArgs) -> anyhow::Result<ExitCode> {
    let f = load(&args.file)?;
    let grid = grid_for(&args.grid, f.dimension())?;
    let overlays = args
        .hyperplane
        .iter()
        .map(|h| {
            let mut v = parse_rationals(h)?;
            if v.len() != f.dimension() + 1 {
                bail!("hyperplane {h:?} needs {} comma-separated numbers", f.dimension() + 1);
            }
            let offset = v.pop().expect("nonempty");
            Ok(Overlay { normal: v, offset })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let svg = svg::render(&f, &grid, &overlays)?;
    match &args.out {
        Some(p) => std::fs::write(p, svg).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{svg}"),
    }
    Ok(ExitCode::SUCCESS)
}
