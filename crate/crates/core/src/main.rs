use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ellbott::cli::{self, CliError, FamilyArgs, Report, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE};

#[derive(Parser)]
#[command(name = "ellbott", version)]
#[command(about = "Singular fibers and Bott vanishing for elliptic surfaces over P^1")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimality and Kodaira fiber census of a Weierstrass model file
    Classify {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// Full Bott vanishing verdict for a model file
    Analyze {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// Verdict for a family given by parameters
    Family {
        /// double_cover | hypersurface | complete_intersection | cusp_example
        #[arg(long)]
        kind: String,
        #[arg(long)]
        beta: Option<i64>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// Comma-separated list of the singular fiber types present, e.g. I1,II
        #[arg(long, value_delimiter = ',')]
        declared_types: Option<Vec<String>>,
        #[arg(long)]
        machine: bool,
    },
    /// Check the local oracles against the expected tables
    VerifyLemmas {
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long)]
        machine: bool,
    },
    /// Analyze every .toml model file in a directory
    Batch {
        dir: PathBuf,
        #[arg(long)]
        machine: bool,
    },
}

fn emit(report: &Report, machine: bool) {
    if machine {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
}

fn single(r: Result<Report, CliError>, machine: bool) -> i32 {
    match r {
        Ok(report) => {
            emit(&report, machine);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn run(args: Args) -> i32 {
    match args.command {
        Command::Classify { file, machine } => single(cli::classify_file(&file), machine),
        Command::Analyze { file, machine } => single(cli::analyze_file(&file), machine),
        Command::Family {
            kind,
            beta,
            l,
            a,
            b,
            m,
            declared_types,
            machine,
        } => {
            let fa = FamilyArgs {
                kind,
                beta,
                l,
                a,
                b,
                m,
                declared_types,
            };
            single(cli::family(&fa), machine)
        }
        Command::VerifyLemmas {
            max_n,
            max_degree,
            machine,
        } => match cli::verify_lemmas(max_n, max_degree) {
            Ok(report) => {
                emit(&report, machine);
                match &report.lemmas {
                    Some(l) if l.all_passed => EXIT_OK,
                    _ => EXIT_INTERNAL,
                }
            }
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
        Command::Batch { dir, machine } => {
            let results = match cli::batch(&dir) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{e}");
                    return e.exit_code();
                }
            };
            let mut code = EXIT_OK;
            let mut json = Vec::new();
            for (path, r) in results {
                match r {
                    Ok(report) => {
                        if machine {
                            json.push(serde_json::json!({
                                "file": path.display().to_string(),
                                "exit_code": 0,
                                "report": report,
                            }));
                        } else {
                            println!("== {}", path.display());
                            print!("{}", report.render_text());
                        }
                    }
                    Err(e) => {
                        code = code.max(e.exit_code());
                        if machine {
                            json.push(serde_json::json!({
                                "file": path.display().to_string(),
                                "exit_code": e.exit_code(),
                                "error": e.to_string(),
                            }));
                        } else {
                            println!("== {}", path.display());
                            println!("error: {e}");
                        }
                    }
                }
            }
            if machine {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json).unwrap_or_default()
                );
            }
            code
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = std::panic::catch_unwind(|| run(args)).unwrap_or(EXIT_INTERNAL);
    ExitCode::from(code as u8)
}
