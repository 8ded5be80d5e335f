use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use matchfield::field::{
    block_diagonal_matching_field, diagonal_matching_field, is_isomorphic, pointed_matching_field,
};
use matchfield::ideal::{markov_generators, MarkovOptions};
use matchfield::polytope::{polytope_report, DEFAULT_CANDIDATE_LIMIT};
use matchfield::random::{random_coherent_field, random_matching_field};
use matchfield::report::check;
use matchfield::svg::render_tropical_lines;
use matchfield::weights::{induced_matching_field, WeightMatrix};
use matchfield::{Composition, Error, MatchingField};

#[derive(Parser)]
#[command(name = "matchfield", version, about = "Matching fields, their toric ideals and polytopes")]
struct Cli {
    /// Write the result here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Highest degree examined for binomial generators
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: usize,
    /// Exit with status 1 on incoherent, tied, non-toric or non-isomorphic outcomes
    #[arg(long, global = true)]
    strict: bool,
    /// Abort when a fiber has more monomials than this
    #[arg(long, global = true, default_value_t = 100_000)]
    limit_fiber_size: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a matching field and print it as JSON
    #[command(subcommand)]
    Generate(Generate),
    /// Coherence, hexagonality, quadratic generation and the toric verdict
    Check { field: PathBuf },
    /// Minimal binomial generators up to --max-degree
    Ideal { field: PathBuf },
    /// Vertices, f-vector, volume and the degree bound of the field's polytope
    Polytope {
        field: PathBuf,
        /// Abort when the hull needs more candidate hyperplanes than this
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_LIMIT)]
        max_candidates: u64,
    },
    /// Draw the tropical lines of a 3 x n weight matrix
    Svg { weights: PathBuf, out: Option<PathBuf> },
    /// Search for a row and column relabeling carrying one field to another
    Isomorphic { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum Generate {
    Diagonal(Shape),
    Block {
        /// Block sizes, e.g. 2,4
        #[arg(long)]
        a: String,
        /// Expected sum of the block sizes
        #[arg(long)]
        n: Option<usize>,
    },
    Pointed {
        #[command(flatten)]
        shape: Shape,
        /// Elements fixed in rows 1, 2, ... in order, e.g. 1,2
        #[arg(long, value_delimiter = ',')]
        points: Vec<usize>,
    },
    FromWeights {
        weights: PathBuf,
    },
    Random {
        #[command(flatten)]
        shape: Shape,
        /// Draw weight matrices until one induces a field
        #[arg(long)]
        coherent: bool,
    },
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

enum Failure {
    Usage(String),
    Negative(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded(_) => Failure::Limit(e.to_string()),
            Error::Tie { .. } | Error::Incoherent { .. } => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_field(path: &Path) -> Result<MatchingField, Failure> {
    serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// JSON (`{"rows": ...}` or a bare array of rows) or comma-separated lines.
fn read_weights(path: &Path) -> Result<WeightMatrix, Failure> {
    let text = read_input(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    } else {
        Ok(WeightMatrix::from_csv(&text)?)
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json(cli: &Cli, value: &impl serde::Serialize) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    text.push('\n');
    emit(cli, &text)
}

fn markov_options(cli: &Cli) -> MarkovOptions {
    MarkovOptions { fiber_limit: cli.limit_fiber_size, ..MarkovOptions::up_to(cli.max_degree) }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Generate(g) => {
            let field = match g {
                Generate::Diagonal(s) => diagonal_matching_field(s.k, s.n)?,
                Generate::Block { a, n } => {
                    let a = Composition::parse(a)?;
                    if n.is_some_and(|n| n != a.n()) {
                        return Err(Failure::Usage(format!("block sizes sum to {}, not {}", a.n(), n.unwrap_or(0))));
                    }
                    block_diagonal_matching_field(&a)?
                }
                Generate::Pointed { shape, points } => pointed_matching_field(shape.k, shape.n, points)?,
                Generate::FromWeights { weights } => induced_matching_field(&read_weights(weights)?)?,
                Generate::Random { shape, coherent } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    if *coherent {
                        random_coherent_field(shape.k, shape.n, &mut rng)?.0
                    } else {
                        random_matching_field(shape.k, shape.n, &mut rng)?
                    }
                }
            };
            emit_json(cli, &field)?;
            Ok(true)
        }
        Command::Check { field } => {
            let report = check(&read_field(field)?, &markov_options(cli))?;
            emit_json(cli, &report)?;
            Ok(!report.is_negative())
        }
        Command::Ideal { field } => {
            let report = markov_generators(&read_field(field)?, &markov_options(cli))?;
            emit_json(cli, &report)?;
            Ok(true)
        }
        Command::Polytope { field, max_candidates } => {
            let report = polytope_report(&read_field(field)?, *max_candidates)?;
            emit_json(cli, &report)?;
            Ok(report.volume_at_most_degree)
        }
        Command::Svg { weights, out } => {
            let m = read_weights(weights)?;
            let svg = render_tropical_lines(&m).map_err(|e| Failure::Usage(e.to_string()))?;
            match out {
                Some(path) => fs::write(path, svg)?,
                None => emit(cli, &svg)?,
            }
            Ok(true)
        }
        Command::Isomorphic { first, second } => {
            let found = is_isomorphic(&read_field(first)?, &read_field(second)?);
            let value = match &found {
                Some(iso) => serde_json::json!({ "isomorphic": true, "rows": iso.rows, "cols": iso.cols }),
                None => serde_json::json!({ "isomorphic": false }),
            };
            emit_json(cli, &value)?;
            Ok(found.is_some())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) if cli.strict => ExitCode::from(1),
        Ok(false) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
