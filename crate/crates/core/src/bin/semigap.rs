use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semigap::report::matrix_table;
use semigap::verify::DEFAULT_MAX_B;
use semigap::{
    gap_matrix, isolated_gaps, residue_partition, AnalysisDocument, Format, GenericSemigroup,
    PairSemigroup, Property, SemigroupError,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "semigap",
    version,
    about = "Isolated gaps of numerical semigroups <a, b>"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of <a, b>.
    Analyze {
        a: i64,
        b: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Isolated gaps of <a, b>.
    Isolated { a: i64, b: i64 },
    /// The |v| x |u| matrix of isolated gaps.
    Matrix { a: i64, b: i64 },
    /// Isolated gaps grouped by residue modulo a member (default: a).
    Partition {
        a: i64,
        b: i64,
        #[arg(long = "mod")]
        modulus: Option<i64>,
    },
    /// Brute-force perfectness check for any generating set.
    Perfect {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<i64>,
    },
    /// Check every closed form against the oracle for all coprime 1 < a < b <= max-b.
    Verify {
        #[arg(long, env = "SEMIGAP_MAX_B", default_value_t = DEFAULT_MAX_B)]
        max_b: i64,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Table,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Table => Format::Table,
        }
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<ExitCode, SemigroupError> {
    match cli.command {
        Command::Analyze { a, b, format } => {
            let doc = AnalysisDocument::new(&PairSemigroup::new(a, b)?)?;
            print!("{}", doc.render(format.into()));
        }
        Command::Isolated { a, b } => {
            let p = isolated_gaps(&PairSemigroup::new(a, b)?);
            println!("count {}", p.count);
            println!("min {}", p.h);
            println!("gaps {}", join(&p.gaps));
        }
        Command::Matrix { a, b } => {
            print!(
                "{}",
                matrix_table(&gap_matrix(&PairSemigroup::new(a, b)?).entries)
            );
        }
        Command::Partition { a, b, modulus } => {
            let s = PairSemigroup::new(a, b)?;
            let p = residue_partition(&s, modulus.unwrap_or(a))?;
            println!("modulus {}", p.modulus);
            for (r, block) in &p.blocks {
                println!("{r}: {}", join(block));
            }
        }
        Command::Perfect { generators } => {
            let s = GenericSemigroup::new(&generators)?;
            let isolated = s.isolated_gaps();
            println!("perfect {}", isolated.is_empty());
            if !isolated.is_empty() {
                println!("isolated gaps {}", join(&isolated));
            }
        }
        Command::Verify { max_b, workers } => {
            let workers = workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let summary = semigap::verify(max_b, workers)?;
            for p in Property::ALL {
                let failed = summary.failures_of(p);
                let verdict = if failed == 0 { "ok" } else { "FAIL" };
                println!(
                    "{verdict:<4} {p} ({} pairs, {failed} failures)",
                    summary.pairs
                );
            }
            for v in &summary.failures {
                println!("violation {v}");
            }
            println!(
                "verified {} pairs with b <= {}: {} checks, {} failures",
                summary.pairs,
                summary.max_b,
                summary.checks,
                summary.failures.len()
            );
            if !summary.passed() {
                return Ok(ExitCode::from(EXIT_FAILURE));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
