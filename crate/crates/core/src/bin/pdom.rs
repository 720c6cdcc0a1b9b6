//! `pdom`: p-domination numbers of complete multipartite graphs.
//!
//! Exit codes: 0 on success (or a verified set), 2 when `verify` rejects the
//! set, 1 on usage, parse or resource errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, ArgGroup, Args, Parser, Subcommand, ValueEnum};

use pdom::io::{self, ResultRecord, TableFormat};
use pdom::oracle::{first_violation, solve_generic, GenericMode};
use pdom::{build_witness, count_vector_gamma, expand_graph, realize, Graph, Limits, PartSizes};

#[derive(Parser, Debug)]
#[command(name = "pdom", version, about = "Exact p-domination numbers of complete multipartite graphs")]
struct Cli {
    #[command(flatten)]
    limits: LimitArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Largest complete multipartite graph that is expanded explicitly
    #[arg(long, global = true, default_value_t = 10_000)]
    max_vertices: u64,

    /// Largest number of count vectors the counts oracle visits
    #[arg(long, global = true, default_value_t = 100_000_000)]
    max_states: u128,

    /// Largest graph accepted by the generic exhaustive solver (at most 64)
    #[arg(long, global = true, default_value_t = 24)]
    max_generic_vertices: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_vertices: self.max_vertices,
            max_states: self.max_states,
            max_generic_vertices: self.max_generic_vertices,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// gamma_p with s1, s2 and their witnesses
    Compute {
        /// Comma-separated part sizes, e.g. 2,2,10,17
        #[arg(long)]
        parts: String,
        #[arg(long)]
        p: u64,
        /// One JSON record per line instead of text
        #[arg(long)]
        json: bool,
    },
    /// Per-part counts of a minimum p-dominating set
    Witness {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        p: u64,
        /// Also list the vertex ids (blockwise numbering)
        #[arg(long)]
        explicit: bool,
    },
    /// Check whether a vertex set is p-dominating (exit 0 yes, 2 no)
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated vertex ids
        #[arg(long, allow_hyphen_values = false)]
        set: String,
        #[arg(long)]
        p: u64,
    },
    /// Brute-force gamma_p without the closed formula
    Oracle {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        p: u64,
        /// counts needs --parts; generic works on either source
        #[arg(long, value_enum)]
        engine: Option<Engine>,
        /// Use branch and bound in the generic engine (witness not canonical)
        #[arg(long)]
        bnb: bool,
    },
    /// s1, s2, gamma_p and case for a range of p
    Table {
        #[arg(long)]
        parts: String,
        /// Inclusive range A..B
        #[arg(long)]
        p_range: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Also list the admissible part subsets (0-based)
        #[arg(long)]
        family: bool,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["parts", "graph"])))]
struct GraphSource {
    /// Comma-separated part sizes
    #[arg(long)]
    parts: Option<String>,
    /// Edge-list file: "n m" then m lines "u v"
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Counts,
    Generic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Plain => TableFormat::Plain,
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Json,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(pdom::Error),
    Usage(String),
}

impl From<pdom::Error> for CliError {
    fn from(e: pdom::Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

enum Outcome {
    Done,
    NotDominating,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::NotDominating) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(source: &GraphSource, limits: &Limits) -> Result<(Graph, Option<PartSizes>), CliError> {
    match (&source.parts, &source.graph) {
        (Some(parts), _) => {
            let parts = io::parse_parts(parts)?;
            Ok((expand_graph(&parts, limits)?, Some(parts)))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok((io::parse_graph_file(&text)?, None))
        }
        (None, None) => Err(CliError::Usage("one of --parts or --graph is required".into())),
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let limits = cli.limits.limits();
    match cli.command {
        Command::Compute { parts, p, json } => {
            let parts = io::parse_parts(&parts)?;
            let record = ResultRecord::compute(&parts, p)?;
            if json {
                println!("{}", record.to_json_line());
            } else {
                print!("{}", record.to_text());
            }
        }
        Command::Witness { parts, p, explicit } => {
            let parts = io::parse_parts(&parts)?;
            let counts = build_witness(&parts, p)?;
            println!("counts: {}", join(counts.counts()));
            println!("total: {}", counts.total());
            if explicit {
                let set = realize(&parts, &counts)?;
                println!("vertices: {}", join(set.members()));
            }
        }
        Command::Verify { source, set, p } => {
            let (graph, _) = load_graph(&source, &limits)?;
            let set = io::parse_id_list(&set)?;
            if p == 0 {
                return Err(pdom::Error::InvalidArgument("p must be at least 1".into()).into());
            }
            return match first_violation(&graph, &set, p)? {
                None => {
                    println!("p-dominating");
                    Ok(Outcome::Done)
                }
                Some((v, seen)) => {
                    println!("not p-dominating: vertex {v} has {seen} of {p} required neighbours in the set");
                    Ok(Outcome::NotDominating)
                }
            };
        }
        Command::Oracle {
            source,
            p,
            engine,
            bnb,
        } => {
            let engine = engine.unwrap_or(if source.parts.is_some() {
                Engine::Counts
            } else {
                Engine::Generic
            });
            match engine {
                Engine::Counts => {
                    let Some(parts) = &source.parts else {
                        return Err(CliError::Usage("--engine counts needs --parts".into()));
                    };
                    let parts = io::parse_parts(parts)?;
                    let (value, counts) = count_vector_gamma(&parts, p, &limits)?;
                    println!("value: {value}");
                    println!("counts: {}", join(counts.counts()));
                }
                Engine::Generic => {
                    let (graph, _) = load_graph(&source, &limits)?;
                    let mode = if bnb {
                        GenericMode::BranchAndBound
                    } else {
                        GenericMode::Canonical
                    };
                    let (value, set) = solve_generic(&graph, p, mode, &limits)?;
                    println!("value: {value}");
                    println!("vertices: {}", join(set.members()));
                }
            }
        }
        Command::Table {
            parts,
            p_range,
            format,
            family,
        } => {
            let parts = io::parse_parts(&parts)?;
            let ps = io::parse_p_range(&p_range)?;
            print!("{}", io::emit_table(&parts, &ps, format.into(), family)?);
        }
    }
    Ok(Outcome::Done)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
