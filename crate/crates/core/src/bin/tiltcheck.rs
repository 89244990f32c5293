use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tiltcheck::algebra::print_presentation;
use tiltcheck::corpus::{consistency_record, nakayama_corpus};
use tiltcheck::decomposition::{
    auslander_algebra, enumerate_indecomposables, library_from_json, library_to_json, module_name,
    IndecomposableLibrary, Strategy, DEFAULT_MAX_DIM,
};
use tiltcheck::expr::eval_expr;
use tiltcheck::report::{analyze, default_library, render_text, to_json};
use tiltcheck::tilting::Verdict;
use tiltcheck::{build_algebra, parse_algebra, BoundQuiverAlgebra, BuildOptions, Error, FieldSpec};

/// Homological analysis of bound quiver algebras: Auslander algebras,
/// canonical tilting modules and tiltedness.
#[derive(Parser)]
#[command(name = "tiltcheck", version)]
struct Cli {
    /// Seed for every randomised routine.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Field override, e.g. `gf(32003)` or `rationals`; also read from
    /// TILTCHECK_FIELD.
    #[arg(long, global = true, env = "TILTCHECK_FIELD")]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Nakayama,
    Bounded,
    User,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    Nakayama,
}

#[derive(Subcommand)]
enum Command {
    /// Full report; the exit code encodes the verdict.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Library of indecomposables (JSON) for the splitting and
        /// quasi-tilted checks; Nakayama algebras get one automatically.
        #[arg(long)]
        lib: Option<PathBuf>,
        /// Include wall-clock timings (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate a module expression such as `tau(omega(DA))`.
    Eval {
        file: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a presentation of the Auslander algebra.
    AuslanderOf {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "nakayama")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        /// Library for `--strategy user`.
        #[arg(long)]
        lib: Option<PathBuf>,
        /// Also write the library JSON here.
        #[arg(long)]
        lib_out: Option<PathBuf>,
    },
    /// Print the library of indecomposables as JSON.
    Indecomposables {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "nakayama")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// One consistency record (JSON line) per generated algebra.
    Corpus {
        #[arg(long, value_enum, default_value = "nakayama")]
        generator: Generator,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVertex(_)
        | Error::UnknownArrow(_)
        | Error::InvalidQuiver(_)
        | Error::NonParallel(_)
        | Error::NonAdmissible(_)
        | Error::InvalidField(_)
        | Error::Expression(_)
        | Error::Library(_)
        | Error::Json(_) => 3,
        Error::FieldTooSmall { .. } | Error::FieldObstruction { .. } => 4,
        Error::NotTerminating { .. } | Error::BoundExceeded(_) => 5,
        Error::Io(_) => 6,
        _ => 7,
    }
}

fn load(path: &Path, cli: &Cli) -> Result<BoundQuiverAlgebra, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut p = parse_algebra(&text)?;
    if let Some(f) = &cli.field {
        p = p.with_field(f.parse::<FieldSpec>()?)?;
    }
    build_algebra(
        &p,
        &BuildOptions {
            seed: cli.seed,
            ..BuildOptions::default()
        },
    )
}

fn read_library(a: &BoundQuiverAlgebra, path: &Path) -> Result<IndecomposableLibrary, Error> {
    library_from_json(a, &std::fs::read_to_string(path)?)
}

fn library(
    a: &BoundQuiverAlgebra,
    strategy: StrategyArg,
    max_dim: usize,
    lib: Option<&Path>,
) -> Result<IndecomposableLibrary, Error> {
    let s = match strategy {
        StrategyArg::Nakayama => Strategy::NakayamaClosedForm,
        StrategyArg::Bounded => Strategy::BoundedExhaustive { max_total_dim: max_dim },
        StrategyArg::User => {
            let path = lib.ok_or_else(|| Error::Library("--strategy user needs --lib".into()))?;
            Strategy::UserSupplied(read_library(a, path)?.modules)
        }
    };
    enumerate_indecomposables(a, &s)
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Check {
            file,
            json,
            lib,
            timings,
        } => {
            let a = load(file, cli)?;
            let lib = match lib {
                Some(p) => Some(read_library(&a, p)?),
                None => default_library(&a)?,
            };
            let report = analyze(&a, lib.as_ref(), *timings)?;
            let text = to_json(&report);
            if *json {
                println!("{text}");
            } else {
                let v: serde_json::Value = serde_json::from_str(&text)?;
                print!("{}", render_text(&v));
            }
            Ok(match report.verdict {
                Verdict::Tilted => 0,
                Verdict::NotTilted => 1,
                Verdict::NotApplicable => 2,
            })
        }
        Command::Eval { file, expr, json } => {
            let a = load(file, cli)?;
            let e = eval_expr(&a, expr)?;
            if *json {
                println!("{}", serde_json::to_string_pretty(&e)?);
            } else {
                print!("{}", e.to_text());
            }
            Ok(0)
        }
        Command::AuslanderOf {
            file,
            strategy,
            max_dim,
            lib,
            lib_out,
        } => {
            let a = load(file, cli)?;
            let lib = library(&a, *strategy, *max_dim, lib.as_deref())?;
            let aus = auslander_algebra(
                &lib,
                &BuildOptions {
                    seed: cli.seed,
                    ..BuildOptions::default()
                },
            )?;
            let json = library_to_json(&lib);
            for w in &lib.warnings {
                println!("# warning: {w}");
            }
            for (i, m) in lib.modules.iter().enumerate() {
                println!("# vertex {} = {} {:?}", i + 1, module_name(m), m.dim_vector());
            }
            println!("# dim {}", aus.dim());
            print!("{}", print_presentation(aus.presentation()));
            let compact: serde_json::Value = serde_json::from_str(&json)?;
            println!("# library {compact}");
            if let Some(out) = lib_out {
                std::fs::write(out, json)?;
            }
            Ok(0)
        }
        Command::Indecomposables {
            file,
            strategy,
            max_dim,
        } => {
            let a = load(file, cli)?;
            let lib = library(&a, *strategy, *max_dim, None)?;
            println!("{}", library_to_json(&lib));
            Ok(0)
        }
        Command::Corpus {
            generator: Generator::Nakayama,
            count,
            max_vertices,
        } => {
            let field = match &cli.field {
                Some(f) => f.parse()?,
                None => FieldSpec::default(),
            };
            let mut bad = 0;
            for (i, a) in nakayama_corpus(*count, *max_vertices, cli.seed, field)?.iter().enumerate() {
                let r = consistency_record(i, a)?;
                bad += usize::from(!r.violations.is_empty());
                println!("{}", serde_json::to_string(&r)?);
            }
            Ok(if bad == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
