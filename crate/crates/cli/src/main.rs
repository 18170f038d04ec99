mod error;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coterie::arrangement::{parse_arrangement, DEFAULT_ORBIT_CAP};
use coterie::coterie::{Method, Mode};
use coterie::faces::DEFAULT_CUBE_RANK_BOUND;
use coterie::{RationalVector, RootSystem};

use error::CliError;
use report::{Document, Payload};

/// Exact cones of semisimple monoids over simple root systems.
#[derive(Debug, Parser)]
#[command(name = "coterie", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Open,
    Closed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    All,
    Geometric,
    Full,
    Edges,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inequality description of the cone
    Inequalities {
        #[arg(value_name = "TYPE")]
        root_type: String,
        /// Pair conditions on Dynkin edges only (default)
        #[arg(long, conflicts_with = "full")]
        reduced: bool,
        /// Pair conditions for every ordered pair of nodes
        #[arg(long)]
        full: bool,
        /// Also print the closed-form pattern of the classical families
        #[arg(long)]
        symbolic: bool,
    },
    /// Extremal rays, one per fully oriented diagram
    Rays {
        #[arg(value_name = "TYPE")]
        root_type: String,
    },
    /// Membership of a point given in simple-root coordinates
    Member {
        #[arg(value_name = "TYPE")]
        root_type: String,
        /// Comma-separated rationals, e.g. 1/4,1/2,3/4,1
        #[arg(allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Open)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Face poset against the cube of edge orientations
    Faces {
        #[arg(value_name = "TYPE")]
        root_type: String,
        #[arg(long, default_value_t = DEFAULT_CUBE_RANK_BOUND)]
        rank_bound: usize,
    },
    /// Cross-section polytope at a point y of P0
    Polytope {
        #[arg(value_name = "TYPE")]
        root_type: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Fundamental functionals, Weyl orbit size and classifying map
    Arrangement {
        #[arg(value_name = "TYPE", required_unless_present = "file", conflicts_with = "file")]
        root_type: Option<String>,
        /// Arrangement file: a `type` line followed by one functional per line
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
    },
}

fn root_system(s: &str) -> Result<RootSystem, CliError> {
    Ok(RootSystem::from_type_str(s)?)
}

fn vector(rs: &RootSystem, s: &str) -> Result<RationalVector, CliError> {
    let v = RationalVector::parse(s)?;
    if v.len() != rs.rank() {
        return Err(CliError::Usage(format!(
            "vector has {} coordinates, {} has rank {}",
            v.len(),
            rs.simple_type(),
            rs.rank()
        )));
    }
    Ok(v)
}

fn run(command: Command) -> Result<Document, CliError> {
    let payload = match command {
        Command::Inequalities {
            root_type,
            full,
            symbolic,
            ..
        } => Payload::Inequalities(report::inequalities_report(&root_system(&root_type)?, !full, symbolic)),
        Command::Rays { root_type } => Payload::Rays(report::rays_report(&root_system(&root_type)?)),
        Command::Member {
            root_type,
            vector: v,
            mode,
            method,
        } => {
            let rs = root_system(&root_type)?;
            let x = vector(&rs, &v)?;
            let mode = match mode {
                ModeArg::Open => Mode::Open,
                ModeArg::Closed => Mode::Closed,
            };
            let methods: &[Method] = match method {
                MethodArg::All => &Method::ALL,
                MethodArg::Geometric => &[Method::Geometric],
                MethodArg::Full => &[Method::Full],
                MethodArg::Edges => &[Method::Edges],
            };
            Payload::Member(report::member_report(&rs, &x, mode, methods)?)
        }
        Command::Faces { root_type, rank_bound } => {
            Payload::Faces(report::faces_report(&root_system(&root_type)?, rank_bound)?)
        }
        Command::Polytope { root_type, y } => {
            let rs = root_system(&root_type)?;
            let y = vector(&rs, &y)?;
            Payload::Polytope(report::polytope_report(&rs, &y)?)
        }
        Command::Arrangement {
            root_type,
            file,
            orbit_cap,
        } => {
            let arr = match (root_type, file) {
                (_, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    parse_arrangement(&text)?
                }
                (Some(t), None) => report::canonical_arrangement(root_system(&t)?),
                (None, None) => return Err(CliError::Usage("a type or --file is required".into())),
            };
            Payload::Arrangement(report::arrangement_report(&arr, orbit_cap)?)
        }
    };
    Ok(Document::new(payload))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match run(cli.command) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = match cli.format {
        Format::Plain => render::plain(&doc),
        Format::Latex => render::latex(&doc),
        Format::Json => serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n",
    };
    print!("{text}");
    match doc.violation() {
        Some(v) => {
            let e = CliError::Invariant(v);
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        None => ExitCode::SUCCESS,
    }
}
