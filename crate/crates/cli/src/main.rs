mod commands;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use eqdeg_core::search::{Mode, SearchConfig, Strategy};

use report::{write_file, Report};
use suites::{Suite, SuiteOptions};

/// Equal-degree paths in graphs: checks, constructions and exact extremal values.
#[derive(Parser)]
#[command(name = "eqdeg", version)]
struct Cli {
    /// Worker threads for enumeration (default: available cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Directory for cached extremal results.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Write the machine-readable report here.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write value rows (ell,n,value,exact,witness_count) here.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Verdict {
    Present,
    Absent,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Levelwise,
    Augmentation,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Levelwise => Strategy::LevelwiseDedup,
            StrategyArg::Augmentation => Strategy::CanonicalAugmentation,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether equal-degree vertices are joined by a path of a given length.
    Check {
        /// Construction such as `complete_bipartite:3,4`.
        #[arg(long, value_name = "SPEC")]
        construct: Option<String>,
        #[arg(long, value_name = "STR")]
        graph6: Option<String>,
        /// One graph6 string or construction spec per line.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[arg(long = "len")]
        len: usize,
        /// Exit nonzero unless every input has this verdict.
        #[arg(long, value_enum)]
        expect: Option<Verdict>,
    },
    /// Build a named construction and describe it.
    Construct {
        spec: String,
        /// Also check for equal-degree paths of this length.
        #[arg(long = "len")]
        len: Option<usize>,
    },
    /// Most edges on `order` vertices without an equal-degree path of length `len`.
    Extremal {
        #[arg(long = "len")]
        len: usize,
        #[arg(long)]
        order: usize,
        /// Best verified construction instead of exhaustive search.
        #[arg(long)]
        constructions_only: bool,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
    },
    /// Recompute a group of published results and compare.
    Reproduce {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest order for the p1, p2 and p3 suites.
        #[arg(long)]
        max_order: Option<usize>,
        /// Range of the complete bipartite checks in the p3 suite.
        #[arg(long, default_value_t = 600)]
        bipartite_up_to: usize,
    },
    /// Table of values over several lengths and orders.
    Table {
        /// Lengths: `2`, `1,2,3` or `1..4`.
        #[arg(long, default_value = "1..4")]
        lens: String,
        /// Orders: `8`, `3,5,7` or `2..8`.
        #[arg(long, default_value = "2..8")]
        orders: String,
        #[arg(long)]
        constructions_only: bool,
    },
}

fn config(cli: &Cli, mode: Mode, strategy: Strategy) -> SearchConfig {
    let mut cfg = SearchConfig {
        mode,
        strategy,
        cache_dir: cli.cache.clone(),
        ..SearchConfig::default()
    };
    if let Some(w) = cli.workers {
        cfg.workers = w;
    }
    cfg
}

fn mode(constructions_only: bool) -> Mode {
    if constructions_only {
        Mode::ConstructionsOnly
    } else {
        Mode::Exhaustive
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Check {
            construct,
            graph6,
            file,
            len,
            expect,
        } => {
            let (inputs, bytes) =
                commands::read_inputs(construct.as_deref(), graph6.as_deref(), file.as_ref())?;
            commands::check(
                inputs,
                bytes,
                *len,
                expect.map(|v| matches!(v, Verdict::Present)),
            )
        }
        Command::Construct { spec, len } => commands::construct(spec, *len),
        Command::Extremal {
            len,
            order,
            constructions_only,
            strategy,
        } => commands::extremal(
            *len,
            *order,
            &config(cli, mode(*constructions_only), (*strategy).into()),
        ),
        Command::Reproduce {
            suite,
            max_order,
            bipartite_up_to,
        } => {
            let opts = SuiteOptions {
                seed: cli.seed,
                max_order: *max_order,
                bipartite_up_to: *bipartite_up_to,
            };
            suites::reproduce(
                *suite,
                &config(cli, Mode::Exhaustive, Strategy::Auto),
                &opts,
            )
        }
        Command::Table {
            lens,
            orders,
            constructions_only,
        } => {
            let cfg = config(cli, mode(*constructions_only), Strategy::Auto);
            commands::table(
                &commands::parse_list(lens)?,
                &commands::parse_list(orders)?,
                &cfg,
            )
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let start = Instant::now();
    let report = dispatch(cli)?;
    let wall_ms = start.elapsed().as_millis();
    print!("{}", report.text);
    if let Some(path) = &cli.json {
        write_file(
            path,
            &serde_json::to_string_pretty(&report.envelope(wall_ms))?,
        )?;
    }
    if let Some(path) = &cli.csv {
        write_file(path, &report.csv())?;
    }
    for f in &report.failures {
        eprintln!("failed: {f}");
    }
    Ok(report.failures.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
