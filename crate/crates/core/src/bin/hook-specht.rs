//! Command-line front end: single instances, sweeps and relation checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hook_specht::arith::{CoefficientField, PrimeField, Rationals};
use hook_specht::combinatorics::{Partition, QuiverParams};
use hook_specht::hom::{bruteforce_hom, classify_hom, HomCertificate};
use hook_specht::hook::relations::{verify_relations, RelationReport};
use hook_specht::hook::{HookModule, HookShape};
use hook_specht::presentation::{garnir_datum, garnir_nodes};
use hook_specht::sweep::{dmax_cap, run_sweep, SweepConfig};

#[derive(Parser)]
#[command(name = "hook-specht", version, about = "Homomorphisms from graded Specht modules into hook Specht modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the Hom space from the shape of mu alone.
    Classify(Instance),
    /// Solve the Specht relations inside the hook module.
    Solve {
        #[command(flatten)]
        instance: Instance,
        /// Also classify and report whether the two agree.
        #[arg(long)]
        check: bool,
        /// Print the Garnir belts of mu to standard error.
        #[arg(long)]
        show_garnir: bool,
    },
    /// Cross-check both methods over every instance up to a size bound.
    Sweep {
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "3")]
        e_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        char_list: Vec<u64>,
        /// Worker threads; hardware parallelism by default.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Check the KLR relations on every hook module up to a size bound.
    VerifyRelations {
        #[arg(long, default_value_t = 5)]
        dmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "3")]
        e_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0,3,5")]
        char_list: Vec<u64>,
    },
}

#[derive(Args)]
struct Instance {
    /// Source partition, e.g. 4,1,1.
    #[arg(long)]
    mu: Partition,
    /// Size of the hook (d-k, 1^k).
    #[arg(long)]
    d: usize,
    /// Leg length of the hook.
    #[arg(long)]
    k: usize,
    /// Quantum characteristic, at least 3.
    #[arg(long)]
    e: usize,
    /// 0 for the rationals, otherwise a prime.
    #[arg(long = "char")]
    characteristic: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

enum Failure {
    Invalid(String),
    Verification,
}

impl From<hook_specht::Error> for Failure {
    fn from(e: hook_specht::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(format!("output error: {e}"))
    }
}

struct Parsed {
    mu: Partition,
    shape: HookShape,
    q: QuiverParams,
    field: CoefficientField,
}

impl Instance {
    fn parse(&self) -> Result<Parsed, Failure> {
        if self.d > dmax_cap() {
            return Err(Failure::Invalid(format!("d = {} exceeds the cap {}", self.d, dmax_cap())));
        }
        Ok(Parsed {
            mu: self.mu.clone(),
            shape: HookShape::new(self.d, self.k)?,
            q: QuiverParams::new(self.e)?,
            field: CoefficientField::from_characteristic(self.characteristic)?,
        })
    }
}

fn print_json(cert: &HomCertificate) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, cert).map_err(|e| Failure::Invalid(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn check_dmax(dmax: usize) -> Result<(), Failure> {
    if dmax > dmax_cap() {
        return Err(Failure::Invalid(format!("--dmax {dmax} exceeds the cap {}", dmax_cap())));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(inst) => {
            let p = inst.parse()?;
            print_json(&classify_hom(&p.mu, p.shape, &p.q, p.field)?)
        }
        Command::Solve { instance, check, show_garnir } => {
            let p = instance.parse()?;
            if show_garnir {
                let mut err = io::stderr().lock();
                for node in garnir_nodes(&p.mu) {
                    let datum = garnir_datum(&p.mu, node, &p.q)?;
                    writeln!(err, "{}", datum.render(&p.q))?;
                }
            }
            let mut cert = bruteforce_hom(&p.mu, p.shape, &p.q, p.field)?;
            if check {
                let classified = classify_hom(&p.mu, p.shape, &p.q, p.field)?;
                cert.agreement = Some(classified.dimension == cert.dimension && cert.image == classified.image);
            }
            print_json(&cert)?;
            if cert.agreement == Some(false) {
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::Sweep { dmax, e_list, char_list, jobs, format } => {
            check_dmax(dmax)?;
            let config = SweepConfig { jobs, ..SweepConfig::new(dmax, e_list, char_list) };
            let report = run_sweep(&config)?;
            match format {
                Format::Jsonl => report.write_json_lines(io::stdout().lock())?,
                Format::Csv => {
                    report.write_csv(io::stdout().lock()).map_err(|e| Failure::Invalid(e.to_string()))?;
                    let summary = serde_json::to_string(&report.summary).map_err(|e| Failure::Invalid(e.to_string()))?;
                    eprintln!("{summary}");
                }
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::VerifyRelations { dmax, e_list, char_list } => {
            check_dmax(dmax)?;
            let fields = char_list.iter().map(|&c| CoefficientField::from_characteristic(c)).collect::<Result<Vec<_>, _>>()?;
            let mut out = io::stdout().lock();
            let mut all_passed = true;
            for &e in &e_list {
                let q = QuiverParams::new(e)?;
                for &field in &fields {
                    let mut report = RelationReport::default();
                    for d in 1..=dmax {
                        for k in 0..d {
                            let module = HookModule::new(HookShape::new(d, k)?, q);
                            let part = match field {
                                CoefficientField::Rationals => verify_relations(&module, Rationals),
                                CoefficientField::Prime(f) => verify_relations::<PrimeField>(&module, f),
                            };
                            report.merge(&part);
                        }
                    }
                    writeln!(out, "e={e} field={field} d<={dmax}")?;
                    write!(out, "{report}")?;
                    all_passed &= report.passed();
                }
            }
            if !all_passed {
                return Err(Failure::Verification);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
