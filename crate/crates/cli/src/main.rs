use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use tropiloc::generate::{random_instance, Variant};
use tropiloc::io::{emit_instance, emit_solution, parse_instance, OutputFormat};
use tropiloc::{oracle, solution, Error, Instance};

/// Minimax facility location under Chebyshev and rectilinear distance.
#[derive(Parser)]
#[command(name = "tropiloc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print sampled optimal points.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// json or csv
        #[arg(long, default_value = "json")]
        out: String,
        /// Also write a plot of a planar instance here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the feasibility certificates; exit 2 when infeasible.
    Check { file: PathBuf },
    /// Brute-force grid search over [lo, hi] (defaults to a bounding box).
    Oracle {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lo: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        hi: Option<Vec<f64>>,
        #[arg(long)]
        step: f64,
    },
    /// Solve, then replay constraints and objective on sampled members.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Print a random feasible instance.
    Gen {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible(_) => 2,
        Error::Contract(_) => 3,
        _ => 1,
    }
}

fn load(path: &Path) -> Result<Instance, Error> {
    let bytes = fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_instance(&bytes)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Solve {
            file,
            samples,
            seed,
            out,
            svg,
        } => {
            let inst = load(&file)?;
            let format: OutputFormat = out.parse()?;
            if format == OutputFormat::Svg {
                return Err(Error::Unsupported("use --svg <path> for plots".into()));
            }
            let sol = inst.solve()?;
            if let Some(path) = svg {
                let text = emit_solution(&sol, &inst, OutputFormat::Svg, samples, seed)?;
                fs::write(&path, text)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            }
            print!("{}", emit_solution(&sol, &inst, format, samples, seed)?);
            if format == OutputFormat::Json {
                println!();
            }
            Ok(0)
        }
        Command::Check { file } => {
            let report = load(&file)?.check()?;
            print_json(&report);
            Ok(if report.feasible { 0 } else { 2 })
        }
        Command::Oracle { file, lo, hi, step } => {
            let inst = load(&file)?;
            let (box_lo, box_hi) = inst.bounding_box();
            let lo = lo.unwrap_or(box_lo);
            let hi = hi.unwrap_or(box_hi);
            let res = oracle::grid_minimize(&inst, &lo, &hi, step)?;
            print_json(&json!({
                "best_value": res.best_value,
                "feasible": res.best_value.is_some(),
                "best_points": res.best_points,
                "grid_step": res.grid_step,
                "evaluated": res.evaluated,
                "lo": lo,
                "hi": hi,
            }));
            Ok(0)
        }
        Command::Verify { file, samples } => {
            let inst = load(&file)?;
            let sol = inst.solve()?;
            let report = solution::verify(&sol, &inst, samples);
            print_json(&report);
            Ok(if report.pass { 0 } else { 3 })
        }
        Command::Gen {
            variant,
            n,
            m,
            seed,
        } => {
            let variant: Variant = variant.parse()?;
            println!("{}", emit_instance(&random_instance(variant, n, m, seed)?));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the parse/validation code; 2 means infeasible
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if let Error::Infeasible(report) = &e {
                print_json(report);
            }
            eprintln!("tropiloc: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
