use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tritri::batch::{
    parse_pairs, read_off, run_meshes, run_pairs, BatchError, RunOptions, Summary,
};
use tritri::Tolerance;

#[derive(Parser)]
#[command(
    name = "tritri",
    version,
    about = "Batch triangle-triangle intersection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Distance tolerance (area tolerance is eps * 1e-3).
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Output file, or - for stdout.
    #[arg(long, default_value = "-")]
    output: String,
    /// Add per-record timings in microseconds (output is then not reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Intersect triangle pairs, one pair of 18 numbers per line.
    Pair {
        /// Input file, or - for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Intersect every triangle of one OFF mesh with every triangle of another.
    Mesh {
        a: PathBuf,
        b: PathBuf,
        /// Only emit pairs that actually intersect.
        #[arg(long)]
        contacts_only: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn writer(path: &str) -> io::Result<Box<dyn Write>> {
    Ok(if path == "-" {
        Box::new(BufWriter::new(io::stdout().lock()))
    } else {
        Box::new(BufWriter::new(File::create(path)?))
    })
}

fn same_file(a: &Path, b: &Path) -> bool {
    match (a.canonicalize(), b.canonicalize()) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

fn run(cli: Cli) -> Result<Summary, BatchError> {
    match cli.command {
        Command::Pair { input, common } => {
            let tol = Tolerance::uniform(common.eps)?;
            let reader: Box<dyn BufRead> = if input == "-" {
                Box::new(BufReader::new(io::stdin().lock()))
            } else {
                let path = PathBuf::from(&input);
                Box::new(BufReader::new(File::open(&path).map_err(
                    |e| match e.kind() {
                        io::ErrorKind::NotFound => BatchError::FileNotFound(path),
                        _ => BatchError::Io(e),
                    },
                )?))
            };
            let records = parse_pairs(reader)?;
            let opts = RunOptions {
                jobs: common.jobs,
                timing: common.timing,
                contacts_only: false,
            };
            run_pairs(&records, &tol, &opts, &mut writer(&common.output)?)
        }
        Command::Mesh {
            a,
            b,
            contacts_only,
            common,
        } => {
            let tol = Tolerance::uniform(common.eps)?;
            let same = same_file(&a, &b);
            let mesh_a = read_off(&a)?;
            let mesh_b = if same { mesh_a.clone() } else { read_off(&b)? };
            let opts = RunOptions {
                jobs: common.jobs,
                timing: common.timing,
                contacts_only,
            };
            run_meshes(
                &mesh_a,
                &mesh_b,
                same,
                &tol,
                &opts,
                &mut writer(&common.output)?,
            )
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(summary) => {
            eprintln!(
                "{}",
                serde_json::to_string(&summary).expect("summary serializes")
            );
            if summary.all_degenerate() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("tritri: {e}");
            ExitCode::from(1)
        }
    }
}
