//! betapack: exact beta-packing / alpha-domination queries on small graphs.
//!
//! Exit codes: 0 success, 2 input error, 3 exhaustive cap exceeded,
//! 4 internal invariant violation. Errors go to stderr as one-line JSON.

mod render;
mod survey;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use betapack_core::{
    alpha_domination_number, beta_pack_number, compare_parameters, enumerate_maximal_packings,
    interesting_betas, packing_profile, parse_edge_list, parse_graph6, satisfies_alpha_domination,
    satisfies_packing, Graph, GraphClass, Method, Rational, DEFAULT_EXHAUSTIVE_CAP,
};

#[derive(Parser)]
#[command(
    name = "betapack",
    version,
    about = "Exact beta-packing and alpha-domination solvers for small graphs",
    after_help = "Fractions are exact: write --beta 1/2, never 0.5."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Vertex-count cap for the exponential searches
    /// (default 20; the BETAPACK_CAP environment variable overrides it).
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Generate a class: path:6, cycle:5, complete:4, star:7,
    /// complete_bipartite:4,5, complete_multipartite:3,3,3,3
    #[arg(long, value_name = "SPEC")]
    gen: Option<String>,

    /// Read an edge-list file: "u v" per line, optional leading vertex
    /// count, '#' comments
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,

    /// Decode a graph6 string
    #[arg(long, value_name = "G6")]
    graph6: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    BruteForce,
    BranchAndBound,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::BruteForce => Method::BruteForce,
            MethodArg::BranchAndBound => Method::BranchAndBound,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute beta-pack(G) and a maximum witness
    Pack {
        #[command(flatten)]
        source: GraphSource,
        /// Exact fraction in (0,1], e.g. 1/2
        #[arg(long)]
        beta: String,
        #[arg(long, value_enum, default_value_t = MethodArg::BranchAndBound)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Breakpoints and values of beta -> beta-pack(G) over (0,1]
    Profile {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Enumerate every maximal beta-packing set
    Maximal {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        beta: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Compute gamma_alpha(G) and a minimum witness
    Dominate {
        #[command(flatten)]
        source: GraphSource,
        /// Exact fraction in (0,1], e.g. 1/3
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Compare gamma_alpha and beta-pack at alpha = beta = VALUE
    Compare {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        value: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Scan a graph6 stream, appending one JSON record per (graph, value)
    Survey {
        /// graph6 lines, one per graph; '-' for stdin
        #[arg(long, value_name = "FILE")]
        input: String,
        /// Comma-separated exact fractions, e.g. 1/2,1/3
        #[arg(long, value_name = "LIST")]
        values: String,
        /// JSONL output path
        #[arg(long, value_name = "FILE")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
}

pub enum CliError {
    Input(String),
    Cap(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<betapack_core::Error> for CliError {
    fn from(e: betapack_core::Error) -> Self {
        match e {
            betapack_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl GraphSource {
    /// Loads the graph and a stable identifier for reports.
    fn load(&self) -> Result<(Graph, String), CliError> {
        if let Some(spec) = &self.gen {
            let class: GraphClass = spec.parse()?;
            return Ok((class.generate()?, class.to_string()));
        }
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            return Ok((parse_edge_list(&text)?, path.display().to_string()));
        }
        let g6 = self.graph6.as_ref().expect("clap enforces one source");
        Ok((parse_graph6(g6)?, g6.trim().to_string()))
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    let cap = match flag {
        Some(c) => c,
        None => match std::env::var("BETAPACK_CAP") {
            Ok(s) => s.parse().map_err(|_| {
                CliError::Input(format!(
                    "BETAPACK_CAP must be a positive integer, got '{s}'"
                ))
            })?,
            Err(_) => DEFAULT_EXHAUSTIVE_CAP,
        },
    };
    if cap == 0 {
        return Err(CliError::Input("cap must be at least 1".into()));
    }
    Ok(cap)
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), CliError> {
    if g.n() > cap {
        Err(CliError::Cap(
            betapack_core::Error::CapExceeded { n: g.n(), cap }.to_string(),
        ))
    } else {
        Ok(())
    }
}

/// Parses an exact fraction restricted to (0,1].
fn parse_unit_fraction(s: &str, what: &str) -> Result<Rational, CliError> {
    let v: Rational = s.parse()?;
    if !v.in_unit_interval() {
        return Err(CliError::Input(format!(
            "{what} must satisfy 0 < {what} <= 1, got {v}"
        )));
    }
    Ok(v)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cap = resolve_cap(cli.cap)?;
    match cli.command {
        Command::Pack {
            source,
            beta,
            method,
            format,
        } => {
            let (g, id) = source.load()?;
            check_cap(&g, cap)?;
            let beta = parse_unit_fraction(&beta, "beta")?;
            let res = beta_pack_number(&g, beta, method.into())?;
            // The witness must verify against the definition; anything else
            // is a solver bug.
            if res.witness.len() >= g.n() || !satisfies_packing(&g, &res.witness, beta)? {
                return Err(CliError::Internal(format!(
                    "witness {} fails re-verification",
                    res.witness
                )));
            }
            render::pack_report(&g, &id, &res, format)
        }
        Command::Profile { source, format } => {
            let (g, id) = source.load()?;
            check_cap(&g, cap)?;
            let profile = packing_profile(&g, cap)?;
            let candidates = interesting_betas(&g)?;
            render::profile_report(&g, &id, &profile, &candidates, format)
        }
        Command::Maximal {
            source,
            beta,
            format,
        } => {
            let (g, id) = source.load()?;
            check_cap(&g, cap)?;
            let beta = parse_unit_fraction(&beta, "beta")?;
            let family = enumerate_maximal_packings(&g, beta, cap)?;
            render::maximal_report(&g, &id, beta, &family, format)
        }
        Command::Dominate {
            source,
            alpha,
            format,
        } => {
            let (g, id) = source.load()?;
            check_cap(&g, cap)?;
            let alpha = parse_unit_fraction(&alpha, "alpha")?;
            let res = alpha_domination_number(&g, alpha)?;
            if !satisfies_alpha_domination(&g, &res.witness, alpha)? {
                return Err(CliError::Internal(format!(
                    "witness {} fails re-verification",
                    res.witness
                )));
            }
            render::dominate_report(&g, &id, &res, format)
        }
        Command::Compare {
            source,
            value,
            format,
        } => {
            let (g, id) = source.load()?;
            check_cap(&g, cap)?;
            let value = parse_unit_fraction(&value, "value")?;
            let cmp = compare_parameters(&g, value)?;
            render::compare_report(&g, &id, &cmp, format)
        }
        Command::Survey {
            input,
            values,
            output,
            format,
        } => {
            let parsed: Vec<Rational> = values
                .split(',')
                .map(|v| parse_unit_fraction(v.trim(), "value"))
                .collect::<Result<_, _>>()?;
            if parsed.is_empty() {
                return Err(CliError::Input(
                    "--values must list at least one fraction".into(),
                ));
            }
            survey::run(&input, &parsed, &output, format, cap)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let payload = serde_json::json!({
                "error": e.message(),
                "exit_code": e.exit_code(),
            });
            eprintln!("{payload}");
            ExitCode::from(e.exit_code())
        }
    }
}
