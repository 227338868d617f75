//! Command-line front end for `becalc-core`.
//!
//! [`run`] takes the arguments and output streams explicitly so that the
//! binary and the tests drive exactly the same code.

mod json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use becalc_core::{
    bakry_emery_curvature_with, classify_embedding_with, closed_form_values, curvature_all_with,
    decompose_ball, format_f64, make_umbrella, parse_graph, sweep_with, table1_with,
    CurvatureResult, Error, GraphFormat, SweepRow, TableRow, Tolerances, UmbrellaSpec,
    WeightedGraph, HUB, TOLERANCE_ENV,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use json::canonical as canonical_json;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "becalc",
    version,
    about = "Bakry-Émery curvature of weighted graphs"
)]
#[command(after_help = format!(
    "Tolerance overrides: {TOLERANCE_ENV}=\"eigen_tol=1e-13,bisect_tol=1e-10\""
))]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Curvature at one or all vertices of a graph file
    Curvature(CurvatureArgs),
    /// Umbrella graphs: single evaluation, table, or sweep of the hub
    Umbrella(UmbrellaArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct CurvatureArgs {
    /// Edge-list or JSON graph file
    file: PathBuf,
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    vertex: Option<usize>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Also print the minimising function on the two-ball
    #[arg(long)]
    witness: bool,
    /// edge-list or json; inferred from the extension when absent
    #[arg(long)]
    input_format: Option<GraphFormat>,
}

#[derive(Debug, Args)]
struct UmbrellaArgs {
    /// Rim size
    #[arg(long)]
    n: Option<usize>,
    /// Rim edge weight
    #[arg(long)]
    rho: Option<f64>,
    /// Comma-separated rim sizes, e.g. 3,4,5,6
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with_all = ["rho", "sweep"])]
    table: Option<Vec<usize>>,
    #[arg(long, conflicts_with = "rho")]
    sweep: bool,
    #[arg(long, requires = "sweep")]
    rho_min: Option<f64>,
    #[arg(long, requires = "sweep")]
    rho_max: Option<f64>,
    #[arg(long, requires = "sweep")]
    steps: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::NoConvergence { .. }) => EXIT_NUMERIC,
            _ => EXIT_INPUT,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = Tolerances::from_env()
        .map_err(Failure::from)
        .and_then(|tol| match &cli.command {
            Command::Curvature(args) => cmd_curvature(args, &tol),
            Command::Umbrella(args) => cmd_umbrella(args, &tol),
        });
    match result {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "becalc: cannot write output: {e}");
                EXIT_INPUT
            }
        },
        Err(failure) => {
            let _ = writeln!(err, "becalc: {failure}");
            failure.exit_code()
        }
    }
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<WeightedGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
        _ => GraphFormat::EdgeList,
    });
    parse_graph(&text, format).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_curvature(args: &CurvatureArgs, tol: &Tolerances) -> Result<String, Failure> {
    let g = read_graph(&args.file, args.input_format)?;
    let results = match args.vertex {
        Some(x) => {
            g.check_vertex(x)?;
            vec![bakry_emery_curvature_with(&g, x, tol)?]
        }
        None => curvature_all_with(&g, tol)?,
    };
    let witnesses = if args.witness {
        Some(
            results
                .iter()
                .map(|r| witness_support(&g, r))
                .collect::<Result<Vec<_>, _>>()?,
        )
    } else {
        None
    };
    let witness_of = |k: usize| witnesses.as_ref().map(|w| &w[k]);

    let mut s = String::new();
    match args.format {
        Format::Text => {
            for (k, r) in results.iter().enumerate() {
                let _ = writeln!(s, "{}: {:.10}", r.vertex, r.curvature);
                if let Some(w) = witness_of(k) {
                    let parts: Vec<String> =
                        w.iter().map(|(v, a)| format!("{v}={a:.10}")).collect();
                    let _ = writeln!(s, "  witness: {}", parts.join(" "));
                }
            }
        }
        Format::Csv => {
            s.push_str("vertex,curvature,spectrum");
            s.push_str(if args.witness { ",witness\n" } else { "\n" });
            for (k, r) in results.iter().enumerate() {
                let spectrum: Vec<String> = r.spectrum.iter().map(|&l| format_f64(l)).collect();
                let _ = write!(
                    s,
                    "{},{},{}",
                    r.vertex,
                    format_f64(r.curvature),
                    spectrum.join(";")
                );
                if let Some(w) = witness_of(k) {
                    let parts: Vec<String> = w
                        .iter()
                        .map(|(v, a)| format!("{v}:{}", format_f64(*a)))
                        .collect();
                    let _ = write!(s, ",{}", parts.join(";"));
                }
                s.push('\n');
            }
        }
        Format::Json => {
            let records: Vec<Value> = results
                .iter()
                .enumerate()
                .map(|(k, r)| {
                    let mut rec = json!({
                        "vertex": r.vertex,
                        "curvature": json::float(r.curvature),
                        "spectrum": json::floats(&r.spectrum),
                    });
                    if let Some(w) = witness_of(k) {
                        rec["witness"] =
                            w.iter().map(|&(v, a)| json!([v, json::float(a)])).collect();
                    }
                    rec
                })
                .collect();
            let doc = json!({"type": "curvature", "results": records});
            s = json::canonical(&doc);
            s.push('\n');
        }
    }
    Ok(s)
}

/// Witness values on the closed two-ball, ascending by vertex.
fn witness_support(g: &WeightedGraph, r: &CurvatureResult) -> Result<Vec<(usize, f64)>, Failure> {
    let ball = decompose_ball(g, r.vertex)?;
    let mut support: Vec<usize> = std::iter::once(r.vertex)
        .chain(ball.sphere1.iter().copied())
        .chain(ball.sphere2.iter().copied())
        .collect();
    support.sort_unstable();
    Ok(support.into_iter().map(|v| (v, r.witness[v])).collect())
}

fn cmd_umbrella(args: &UmbrellaArgs, tol: &Tolerances) -> Result<String, Failure> {
    if let Some(rows) = &args.table {
        if args.n.is_some() {
            return Err(Failure::Usage("--table cannot be combined with --n".into()));
        }
        return Ok(render_table(&table1_with(rows, tol)?, args.format));
    }
    let n = args.n.ok_or_else(|| {
        Failure::Usage("one of --table, --n --rho or --sweep --n is required".into())
    })?;
    if args.sweep {
        let (Some(lo), Some(hi), Some(steps)) = (args.rho_min, args.rho_max, args.steps) else {
            return Err(Failure::Usage(
                "--sweep needs --rho-min, --rho-max and --steps".into(),
            ));
        };
        return Ok(render_sweep(
            n,
            &sweep_with(n, lo, hi, steps, tol)?,
            args.format,
        ));
    }
    let rho = args
        .rho
        .ok_or_else(|| Failure::Usage("--n needs --rho (or --sweep)".into()))?;
    single_umbrella(n, rho, args.format, tol)
}

fn single_umbrella(
    n: usize,
    rho: f64,
    format: Format,
    tol: &Tolerances,
) -> Result<String, Failure> {
    let spec = UmbrellaSpec::new(n, rho)?;
    let g = make_umbrella(&spec)?;
    let r = bakry_emery_curvature_with(&g, HUB, tol)?;
    let embedding = classify_embedding_with(&spec, tol);
    let closed = closed_form_values(n, rho).ok();

    let mut s = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(s, "n: {n}");
            let _ = writeln!(s, "rho: {rho:.10}");
            let _ = writeln!(s, "curvature: {:.10}", r.curvature);
            let _ = writeln!(s, "kind: {}", embedding.kind);
            if let Some(scale) = embedding.scale {
                let _ = writeln!(s, "scale: {scale:.10}");
            }
            if let Some(why) = &embedding.diagnostic {
                let _ = writeln!(s, "diagnostic: {why}");
            }
            let _ = writeln!(s, "spectrum: {}", join_fixed(&r.spectrum));
            if let Some(values) = &closed {
                let _ = writeln!(s, "closed form: {}", join_fixed(values));
            }
        }
        Format::Csv => {
            let row = SweepRow {
                rho,
                curvature: r.curvature,
                kind: embedding.kind,
                spectrum: r.spectrum,
                closed_form: closed,
            };
            s = render_sweep(n, &[row], Format::Csv);
        }
        Format::Json => {
            let mut emb = json!({"kind": embedding.kind.as_str()});
            if let Some(scale) = embedding.scale {
                emb["scale"] = json::float(scale);
            }
            if let Some(why) = &embedding.diagnostic {
                emb["diagnostic"] = json!(why);
            }
            let mut doc = json!({
                "type": "umbrella",
                "n": n,
                "rho": json::float(rho),
                "curvature": json::float(r.curvature),
                "spectrum": json::floats(&r.spectrum),
                "embedding": emb,
            });
            if let Some(values) = &closed {
                doc["closed_form"] = json::floats(values);
            }
            s = json::canonical(&doc);
            s.push('\n');
        }
    }
    Ok(s)
}

fn join_fixed(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x:.10}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_table(rows: &[TableRow], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(
                s,
                "{:>3}  {:>7}  {:>7}  {:>7}  {:>7}  {:>7}  {:>7}",
                "n", "rho+", "K+", "rho0", "K0", "rho-", "K-"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>3}  {:>7.4}  {:>7.4}  {:>7.4}  {:>7.4}  {:>7.4}  {:>7.4}",
                    r.n,
                    r.rho_spherical,
                    r.k_spherical,
                    r.rho_euclidean,
                    r.k_euclidean,
                    r.rho_hyperbolic,
                    r.k_hyperbolic
                );
            }
        }
        Format::Csv => {
            s.push_str("n,rho_plus,k_plus,rho_zero,k_zero,rho_minus,k_minus\n");
            for r in rows {
                let cells = [
                    r.rho_spherical,
                    r.k_spherical,
                    r.rho_euclidean,
                    r.k_euclidean,
                    r.rho_hyperbolic,
                    r.k_hyperbolic,
                ]
                .map(format_f64);
                let _ = writeln!(s, "{},{}", r.n, cells.join(","));
            }
        }
        Format::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "rho_plus": json::float(r.rho_spherical),
                        "k_plus": json::float(r.k_spherical),
                        "rho_zero": json::float(r.rho_euclidean),
                        "k_zero": json::float(r.k_euclidean),
                        "rho_minus": json::float(r.rho_hyperbolic),
                        "k_minus": json::float(r.k_hyperbolic),
                    })
                })
                .collect();
            s = json::canonical(&json!({"type": "table", "rows": records}));
            s.push('\n');
        }
    }
    s
}

fn render_sweep(n: usize, rows: &[SweepRow], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Text | Format::Csv => {
            let csv = format == Format::Csv;
            let sep = if csv { "," } else { " " };
            let mut header = vec!["rho".to_string(), "curvature".into(), "kind".into()];
            header.extend((1..=n).map(|k| format!("lambda_{k}")));
            let _ = writeln!(s, "{}", header.join(sep));
            let num = |x: f64| {
                if csv {
                    format_f64(x)
                } else {
                    format!("{x:.10}")
                }
            };
            for r in rows {
                let mut cells = vec![num(r.rho), num(r.curvature), r.kind.to_string()];
                cells.extend(r.spectrum.iter().map(|&l| num(l)));
                let _ = writeln!(s, "{}", cells.join(sep));
            }
        }
        Format::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut rec = json!({
                        "rho": json::float(r.rho),
                        "curvature": json::float(r.curvature),
                        "kind": r.kind.as_str(),
                        "spectrum": json::floats(&r.spectrum),
                    });
                    if let Some(values) = &r.closed_form {
                        rec["closed_form"] = json::floats(values);
                    }
                    rec
                })
                .collect();
            s = json::canonical(&json!({"type": "sweep", "n": n, "rows": records}));
            s.push('\n');
        }
    }
    s
}
