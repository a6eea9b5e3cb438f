//! Thin command-line front end; all logic lives in the library.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 parse or
//! precondition errors.

use clap::{Args, Parser, Subcommand};
use facet_ideals::commands::{self, BettiMethod, CheckProperty, CommandOutput};
use facet_ideals::complex::{SimplicialComplex, DEFAULT_FOREST_BOUND};
use facet_ideals::generate::{GenKind, GenParams};
use facet_ideals::io;
use facet_ideals::linalg::FieldSpec;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "facet-ideals",
    about = "Analyze simplicial complexes and the resolutions of their facet ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Complex file: one facet per line, whitespace-separated vertices.
    file: PathBuf,
    /// Drop non-maximal faces instead of rejecting them.
    #[arg(long)]
    normalize: bool,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Facet bound for the exhaustive forest test.
    #[arg(long, default_value_t = DEFAULT_FOREST_BOUND)]
    max_facets: usize,
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, default_value = "q")]
    field: String,
}

#[derive(Subcommand)]
enum Command {
    /// Structural analysis: dimension, purity, connectivity, trees.
    Analyze(InputArgs),
    /// Betti tables of the facet ideal.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// oracle | recursive | strand | linear-total | all
        #[arg(long, default_value = "all")]
        method: String,
        /// Also list the multigraded entries.
        #[arg(long)]
        multigraded: bool,
    },
    /// Linear-tree classification against the resolution.
    Classify(InputArgs),
    /// Regularity via disconnected edges against the resolution.
    Reg(InputArgs),
    /// Projective dimension via bouquets against the resolution.
    Pd(InputArgs),
    /// Verify one named property of the input complex.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// alternating-sum | monomial-basis | unique-chain |
        /// linear-generation | bouquet-product | counts
        #[arg(long)]
        property: String,
    },
    /// Generate a seeded random complex and print it.
    Gen {
        /// forest | codim1-tree | linear-tree | graph-forest
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 4)]
        facets: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        max_vertices: usize,
    },
}

fn load(input: &InputArgs) -> Result<(SimplicialComplex, FieldSpec), facet_ideals::Error> {
    let text =
        std::fs::read_to_string(&input.file).map_err(|e| facet_ideals::Error::ParseError {
            line: 0,
            msg: format!("{}: {e}", input.file.display()),
        })?;
    let complex = io::parse_complex(&text, input.normalize)?;
    let field = FieldSpec::parse(&input.field)?;
    Ok((complex, field))
}

fn emit(output: CommandOutput, json: bool) -> ExitCode {
    if json {
        println!("{}", output.doc.to_json());
    } else {
        print!("{}", output.doc.to_text());
    }
    if output.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run() -> Result<ExitCode, facet_ideals::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(input) => {
            let (complex, _) = load(&input)?;
            let out = commands::cmd_analyze(&complex, input.max_facets)?;
            Ok(emit(out, input.json))
        }
        Command::Betti {
            input,
            method,
            multigraded,
        } => {
            let (complex, field) = load(&input)?;
            let method: BettiMethod = method.parse()?;
            let out = commands::cmd_betti(&complex, method, field, multigraded)?;
            Ok(emit(out, input.json))
        }
        Command::Classify(input) => {
            let (complex, field) = load(&input)?;
            let out = commands::cmd_classify(&complex, field)?;
            Ok(emit(out, input.json))
        }
        Command::Reg(input) => {
            let (complex, field) = load(&input)?;
            let out = commands::cmd_reg(&complex, field)?;
            Ok(emit(out, input.json))
        }
        Command::Pd(input) => {
            let (complex, field) = load(&input)?;
            let out = commands::cmd_pd(&complex, field)?;
            Ok(emit(out, input.json))
        }
        Command::Check { input, property } => {
            let (complex, field) = load(&input)?;
            let property: CheckProperty = property.parse()?;
            let out = commands::cmd_check(&complex, property, field)?;
            Ok(emit(out, input.json))
        }
        Command::Gen {
            kind,
            facets,
            dim,
            seed,
            max_vertices,
        } => {
            let kind: GenKind = kind.parse()?;
            let params = GenParams::new(kind, facets, dim, seed).with_max_vertices(max_vertices);
            print!("{}", commands::cmd_gen(params)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
