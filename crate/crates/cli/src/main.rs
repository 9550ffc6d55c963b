use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use cyclodet::record::{exit_code, ResultRecord};
use cyclodet::scan::{run_verify, ScanConfig, Selector};
use cyclodet::{export_csv, query};
use cyclodet_core::field::max_q_from_env;
use cyclodet_core::matrix::Exec;
use cyclodet_core::theorems::{carlitz_check, singular_scan_with};

/// Exact verification of determinant identities for cyclotomic matrices over
/// finite fields.
#[derive(Parser, Debug)]
#[command(name = "cyclodet", version)]
struct Cli {
    /// Largest field order accepted (default from CYCLODET_MAX_Q, else 2048).
    #[arg(long, global = true)]
    max_q: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum TheoremArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    Corollary,
    Lemmas,
    All,
}

impl From<TheoremArg> for Selector {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::A => Selector::A,
            TheoremArg::B => Selector::B,
            TheoremArg::Corollary => Selector::Corollary,
            TheoremArg::Lemmas => Selector::Lemmas,
            TheoremArg::All => Selector::All,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify identities for every odd prime power in a range and append
    /// records to a JSON Lines store.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        theorem: TheoremArg,
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
        /// Continue an existing store, computing only missing (identity, q) pairs.
        #[arg(long)]
        resume: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also evaluate q = 3 for the square-class theorem and its corollary.
        #[arg(long)]
        include_edge: bool,
        /// Record elapsed_ms as 0 so identical runs give identical stores.
        #[arg(long)]
        no_timing: bool,
    },
    /// Determinant, rank and circulant determinant of S_q.
    Det {
        #[arg(long)]
        q: u64,
    },
    /// Row or single coefficient of (x + 1 + 1/x)^n.
    Trinomial {
        #[arg(long)]
        n: usize,
        #[arg(long = "mod")]
        modulus: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Trinomial singularity criterion over a range of q, as JSON Lines.
    SingularScan {
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        /// Confirm every entry by eliminating S_q.
        #[arg(long)]
        confirm: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Characteristic polynomial of the Legendre matrix C_p against its closed form.
    Carlitz {
        #[arg(long)]
        p: u64,
    },
    /// Project a result store to CSV.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<i32> {
    let max_q = cli.max_q.unwrap_or_else(max_q_from_env);
    match cli.command {
        Command::Verify { theorem, q_min, q_max, jobs, out, resume, seed, include_edge, no_timing } => {
            let cfg = ScanConfig {
                selector: theorem.into(),
                q_min,
                q_max,
                jobs,
                out,
                resume,
                seed,
                include_edge,
                max_q,
                record_timing: !no_timing,
            };
            let outcome = run_verify(&cfg)?;
            eprintln!(
                "{} new records, {} total in {}",
                outcome.new_records,
                outcome.total_records,
                cfg.out.display()
            );
            Ok(outcome.exit_code)
        }
        Command::Det { q } => {
            println!("{}", query::det_summary(q, max_q)?);
            Ok(0)
        }
        Command::Trinomial { n, modulus, k } => {
            println!("{}", query::trinomial_summary(n, modulus, k)?);
            Ok(0)
        }
        Command::SingularScan { q_min, q_max, confirm, jobs } => {
            let exec = if jobs > 1 { Exec::Parallel } else { Exec::Sequential };
            let reports = singular_scan_with(q_min, q_max, confirm, max_q, exec)?;
            let records: Vec<ResultRecord> = reports.into_iter().map(|r| ResultRecord::from_report(r, 0, true)).collect();
            for r in &records {
                println!("{}", r.to_line());
            }
            Ok(exit_code(&records))
        }
        Command::Carlitz { p } => {
            let rec = ResultRecord::from_report(carlitz_check(p)?, 0, true);
            println!("{}", rec.to_line());
            Ok(exit_code([&rec]))
        }
        Command::Export { input, out } => {
            let rows = export_csv(&input, &out).with_context(|| format!("exporting {}", input.display()))?;
            println!("{rows}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
