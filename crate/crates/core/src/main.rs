use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use secant::combinatorics::segre_report;
use secant::oracle::{oracle_run, wlp_consequence_check, PrimeFieldConfig, DEFAULT_MAX_COLUMNS, DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS};
use secant::predictor::{linear_factor_predict, n3_secant_line, predict, reducible_forms_predict, PlaneClass, PredictionReport};
use secant::series::{artinian_series, join_series, predicted_hilbert, reducible_numerator};
use secant::workbench::{g_check_campaign, sweep, verify_case, write_csv, write_json, Outcome, SweepConfig, SweepFamily};
use secant::{Error, Partition, ProblemInstance};

const EXIT_VALIDATION: u8 = 2;
const EXIT_PROVEN_DISAGREEMENT: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

#[derive(Parser)]
#[command(name = "secant", version, about = "Secant dimensions of varieties of reducible hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct OracleFlags {
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Refuse matrices with more columns than this (exit code 4).
    #[arg(long, default_value_t = DEFAULT_MAX_COLUMNS)]
    max_columns: usize,
}

impl OracleFlags {
    fn config(self) -> PrimeFieldConfig {
        PrimeFieldConfig {
            p: self.prime,
            trials: self.trials,
            seed: self.seed,
            max_columns: self.max_columns,
        }
    }
}

#[derive(Args, Clone)]
struct InstanceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: usize,
    /// Comma separated parts, e.g. "3,2,2".
    #[arg(long)]
    partition: Partition,
}

impl InstanceArgs {
    fn instance(&self) -> secant::Result<ProblemInstance> {
        ProblemInstance::new(self.n, self.l, self.partition.clone())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Numerator,
    Join,
    Artinian,
    Predicted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted secant dimension with its status.
    Predict {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert-series pipeline coefficients.
    Series {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Highest degree printed.
        #[arg(long)]
        truncate: usize,
        #[arg(long, value_enum, default_value = "predicted")]
        which: Which,
    },
    /// Terracini rank over Z/p.
    Oracle {
        #[command(flatten)]
        inst: InstanceArgs,
        #[command(flatten)]
        oracle: OracleFlags,
        /// Also report the Hilbert function in every degree up to d.
        #[arg(long)]
        full_hilbert: bool,
        #[arg(long)]
        json: bool,
    },
    /// Prediction and oracle side by side.
    Verify {
        #[command(flatten)]
        inst: InstanceArgs,
        #[command(flatten)]
        oracle: OracleFlags,
        /// Also run the WLP ladder when 2l > n.
        #[arg(long)]
        wlp: bool,
    },
    /// Parameter sweep written as CSV or JSON.
    Sweep {
        /// Inclusive, as A:B.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_parser = parse_range)]
        l_range: (usize, usize),
        #[arg(long, default_value_t = 2)]
        d_min: usize,
        #[arg(long)]
        d_max: usize,
        #[arg(long)]
        r_max: usize,
        /// Comma separated: general, linear_factor, balanced, reducible_forms, n3_secant_line.
        #[arg(long, value_delimiter = ',', default_value = "general")]
        families: Vec<SweepFamily>,
        #[arg(long)]
        predictor_only: bool,
        #[arg(long)]
        wlp: bool,
        #[arg(long, default_value_t = 12_000)]
        wlp_max_columns: usize,
        /// Also tally the g-check campaign with n, l, s up to this bound.
        #[arg(long)]
        g_check: Option<usize>,
        #[command(flatten)]
        oracle: OracleFlags,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Secant line variety in the plane case n = 3.
    N3line {
        #[arg(long)]
        partition: Partition,
    },
    /// The [d-1,1] family.
    Lfactor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        d: usize,
    },
    /// The variety of all reducible forms of degree d.
    Redforms {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        d: usize,
    },
    /// Consequences for the Segre variety of the factor spaces.
    Segre {
        #[command(flatten)]
        inst: InstanceArgs,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let a = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

fn print_report(rep: &PredictionReport) {
    let inst = &rep.instance;
    println!("instance   n={} l={} partition=[{}] d={}", inst.n, inst.l, inst.partition, inst.d());
    println!("N          {}", rep.ambient);
    println!("dim X      {}", rep.dim_variety);
    println!("expected   {}", rep.expected);
    println!("predicted  {}", rep.predicted);
    println!("codim      {}", rep.codim());
    println!("defect     {}", rep.defect);
    println!("epsilon    {}", rep.epsilon);
    println!("fills      {}{}", rep.fills, if rep.overly_fills { " (overly)" } else { "" });
    match rep.status.citation() {
        Some(c) => println!("status     proven: {}", c.describe()),
        None => println!("status     conjectural"),
    }
    for e in &rep.errata {
        println!("erratum    {e}");
    }
    for a in &rep.annotations {
        println!("note       {a}");
    }
}

fn print_json(v: &serde_json::Value) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Predict { inst, json } => {
            let rep = predict(&inst.instance()?)?;
            if json {
                print_json(&rep.to_json())?;
            } else {
                print_report(&rep);
            }
        }
        Command::Series { inst, truncate, which } => {
            let inst = inst.instance()?;
            let lam = &inst.partition;
            match which {
                Which::Numerator => println!("{}", reducible_numerator(lam).pow(inst.l)),
                Which::Join => println!("{}", join_series(inst.n, inst.l, lam, truncate)),
                Which::Artinian => println!("{}", artinian_series(inst.l, lam, truncate)),
                Which::Predicted => println!("{}", predicted_hilbert(inst.n, inst.l, lam, truncate)),
            }
        }
        Command::Oracle { inst, oracle, full_hilbert, json } => {
            let run = oracle_run(&inst.instance()?, &oracle.config(), full_hilbert)?;
            if json {
                print_json(&run.to_json())?;
            } else {
                println!("secant_dim  {}", run.secant_dim);
                println!("codim       {}", run.codim);
                println!("columns     {}", run.columns);
                println!("trial_ranks {:?}", run.trial_ranks);
                if let Some(h) = &run.hilbert {
                    println!("hilbert     {h:?}");
                }
            }
        }
        Command::Verify { inst, oracle, wlp } => {
            let inst = inst.instance()?;
            let cfg = oracle.config();
            let row = verify_case(&inst, &cfg);
            let mut doc = row.to_json();
            if wlp {
                let w = wlp_consequence_check(&inst, &cfg)?;
                doc["wlp"] = secant::workbench::wlp_json(&w);
            }
            print_json(&doc)?;
            return Ok(match row.outcome {
                Outcome::ProvenDisagreement(_) => EXIT_PROVEN_DISAGREEMENT,
                Outcome::Skipped(_) => EXIT_RESOURCE,
                Outcome::Error(_) => 1,
                _ => 0,
            });
        }
        Command::Sweep {
            n_range,
            l_range,
            d_min,
            d_max,
            r_max,
            families,
            predictor_only,
            wlp,
            wlp_max_columns,
            g_check,
            oracle,
            out,
            format,
        } => {
            let cfg = SweepConfig {
                n_range,
                l_range,
                d_min,
                d_max,
                r_max,
                families,
                oracle: (!predictor_only).then(|| oracle.config()),
                wlp,
                wlp_max_columns,
            };
            let mut result = sweep(&cfg)?;
            if let Some(bound) = g_check {
                result.summary.g_check = Some(g_check_campaign(bound)?);
            }
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            let w = BufWriter::new(file);
            match format {
                Format::Csv => write_csv(&result, w)?,
                Format::Json => write_json(&result, w)?,
            }
            print_json(&result.summary.to_json())?;
            if result.summary.proven_disagreements > 0 {
                return Ok(EXIT_PROVEN_DISAGREEMENT);
            }
        }
        Command::N3line { partition } => {
            let res = n3_secant_line(&partition)?;
            let class = match res.classification {
                PlaneClass::Fills => "fills".to_string(),
                PlaneClass::Defective(k) => format!("defective by {k}"),
                PlaneClass::Nondefective => "nondefective".to_string(),
            };
            println!("partition   [{partition}]");
            println!("class       {class}");
            println!("dim         {}", res.dim);
            println!("p           {}", res.p);
            println!("exceptional {}", res.exceptional);
        }
        Command::Lfactor { n, l, d } => print_report(&linear_factor_predict(n, l, d)?),
        Command::Redforms { n, l, d } => print_report(&reducible_forms_predict(n, l, d)?),
        Command::Segre { inst } => {
            let inst = inst.instance()?;
            let rep = predict(&inst)?;
            let seg = segre_report(inst.n, &inst.partition, inst.l, &rep)?;
            let dims: Vec<String> = seg.factors.iter().map(|f| format!("P^{}", f - 1)).collect();
            println!("segre       {}", dims.join(" x "));
            println!("balanced    {}", seg.balanced);
            println!("implied     {}", seg.nondefective_implied);
        }
    }
    Ok(0)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::ResourceGuard(_)) => EXIT_RESOURCE,
        Some(Error::Inconsistent(_)) => 1,
        Some(_) => EXIT_VALIDATION,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
