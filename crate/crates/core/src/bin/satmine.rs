use std::fs;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use satmine::bench::{self, Algorithm, RunSpec, Threshold};
use satmine::encoder::Variant;
use satmine::mining::TransactionDb;
use satmine::Budget;

#[derive(Parser)]
#[command(name = "satmine", version, about = "Itemset mining through SAT model enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the frequent or closed itemsets of one dataset.
    Mine {
        dataset: PathBuf,
        #[arg(long, default_value = "cfim")]
        variant: Variant,
        /// Absolute count, `x%` or a fraction of the transactions.
        #[arg(long, default_value = "1")]
        min_support: Threshold,
        #[arg(long, default_value = "cdcl", value_parser = Algorithm::NAMES)]
        algo: String,
        #[arg(long, default_value_t = bench::DEFAULT_SEED)]
        seed: u64,
        /// Seconds; defaults to $SATMINE_TIMEOUT or 900.
        #[arg(long)]
        timeout: Option<f64>,
        /// Count the empty itemset as a closed pattern.
        #[arg(long)]
        include_empty: bool,
        /// Write every itemset found to this file.
        #[arg(long)]
        dump_models: Option<PathBuf>,
    },
    /// Run a TOML experiment matrix and write CSV.
    Bench {
        #[arg(long)]
        spec: PathBuf,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides `jobs` from the matrix file.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write the encoding as DIMACS plus a variable-map sidecar.
    Export {
        dataset: PathBuf,
        #[arg(long, default_value = "cfim")]
        variant: Variant,
        #[arg(long, default_value = "1")]
        min_support: Threshold,
        #[arg(long)]
        include_empty: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare every enumerator with the exhaustive miner on a small dataset.
    Check {
        dataset: PathBuf,
        #[arg(long)]
        include_empty: bool,
        #[arg(long, default_value_t = bench::DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: Cli) -> satmine::Result<bool> {
    match cli.command {
        Command::Mine {
            dataset,
            variant,
            min_support,
            algo,
            seed,
            timeout,
            include_empty,
            dump_models,
        } => {
            let db = TransactionDb::from_file(&dataset)?;
            let algorithm = Algorithm::parse(&algo, seed)?;
            let n = min_support.resolve(db.num_transactions());
            let budget = Budget::with_timeout(timeout.map(Duration::from_secs_f64).unwrap_or_else(bench::default_timeout));
            let mut found = Vec::new();
            let name = dataset.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let record = bench::run_on_db(&db, &name, variant, n, algorithm, !include_empty, &budget, |s| {
                if dump_models.is_some() {
                    found.push(s)
                }
            });
            if let Some(path) = dump_models {
                bench::write_itemsets(&path, &db, &mut found)?;
            }
            bench::write_csv(std::slice::from_ref(&record), io::stdout().lock())?;
            Ok(true)
        }
        Command::Bench { spec, out, jobs } => {
            let mut spec = RunSpec::from_file(&spec)?;
            if let Some(j) = jobs {
                spec.jobs = j.max(1);
            }
            let records = bench::run_matrix(&spec)?;
            for r in &records {
                if let bench::RunStatus::Error(msg) = &r.status {
                    eprintln!("{} {} {}: {msg}", r.dataset, r.threshold, r.algorithm);
                }
            }
            match out {
                Some(path) => bench::write_csv(&records, fs::File::create(path)?)?,
                None => bench::write_csv(&records, io::stdout().lock())?,
            }
            Ok(true)
        }
        Command::Export {
            dataset,
            variant,
            min_support,
            include_empty,
            out,
        } => {
            let db = TransactionDb::from_file(&dataset)?;
            let n = min_support.resolve(db.num_transactions());
            let files = bench::export_instance(&db, variant, n, !include_empty, &out)?;
            eprintln!("wrote {} and {}", files.cnf.display(), files.var_map.display());
            Ok(true)
        }
        Command::Check {
            dataset,
            include_empty,
            seed,
        } => {
            let db = TransactionDb::from_file(&dataset)?;
            let lines = bench::cross_check(&db, !include_empty, &Algorithm::all(seed))?;
            let mut ok = true;
            for l in &lines {
                println!(
                    "{} {} n={} {}: expected {} found {} duplicates {}",
                    if l.passed { "PASS" } else { "FAIL" },
                    l.variant,
                    l.threshold,
                    l.algorithm,
                    l.expected,
                    l.found,
                    l.duplicates
                );
                ok &= l.passed;
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
