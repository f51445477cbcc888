//! `twobar`: generate, solve, check and benchmark two-bar chart packings.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use twobar_cli::bench::{run_bench, BenchConfig};
use twobar_cli::error::Result;
use twobar_cli::files::{InstanceFile, PackingFile};
use twobar_cli::gen::{generate, ClassSpec};
use twobar_cli::render::{render_ascii, render_svg};
use twobar_cli::runner::{report_for, run_oracle, solve_instance, Algo};

#[derive(Parser)]
#[command(
    name = "twobar",
    version,
    about = "Pack two-bar charts into a unit-height strip"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderMode {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded instance of a chart class.
    Gen {
        /// Number of charts.
        #[arg(long)]
        n: usize,
        /// Chart class tags, comma-separated (e.g. "big,monotone-nonincreasing").
        #[arg(long)]
        class: String,
        #[arg(long)]
        seed: u64,
        /// Instance file to write.
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance file and write the packing next to it.
    Solve {
        /// Algorithm: a1, a2, matching or baseline.
        #[arg(long)]
        algo: String,
        /// Tour engine: exact, cycle-cover or cycle-cover+ls.
        #[arg(long, default_value = "exact")]
        engine: String,
        #[arg(long)]
        input: PathBuf,
        /// Also write a strip rendering next to the packing.
        #[arg(long, value_enum)]
        render: Option<RenderMode>,
        /// Let a2 run on charts below half height (its guarantee no longer
        /// applies).
        #[arg(long)]
        allow_nonbig: bool,
    },
    /// Run an exact reference oracle on an instance file.
    Oracle {
        /// One of: bcpp1, bcpp1-bf, sequence, general.
        #[arg(long)]
        mode: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a benchmark sweep from a config file and write a CSV report.
    Bench {
        #[arg(long)]
        config: PathBuf,
        /// Report file to write.
        #[arg(long)]
        out: PathBuf,
    },
}

/// Replace the final extension with `suffix` (e.g. `x/y.json` → `x/y.packing.json`).
fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    path.with_file_name(format!("{stem}{suffix}"))
}

#[derive(Serialize)]
struct OracleReport<'a> {
    instance: &'a str,
    mode: &'a str,
    optimum_length: usize,
    k1: usize,
    k2: usize,
    explored: u64,
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen {
            n,
            class,
            seed,
            out,
        } => {
            let spec = ClassSpec::from_str(&class)?;
            let s = generate(n, &spec, seed)?;
            InstanceFile::from_instance(&s).save(&out)?;
            println!("wrote {} ({} charts)", out.display(), n);
        }
        Command::Solve {
            algo,
            engine,
            input,
            render,
            allow_nonbig,
        } => {
            let algo = Algo::from_str(&algo)?;
            let s = InstanceFile::load(&input)?.to_instance()?;
            let started = Instant::now();
            let (p, contract) = solve_instance(&s, algo, &engine, allow_nonbig)?;
            let mut report = report_for(&s, algo, contract, &p, None);
            report.wall_ms = Some(started.elapsed().as_millis() as u64);

            let packing_path = sibling(&input, ".packing.json");
            PackingFile::from_packing(&s, algo.name(), &p).save(&packing_path)?;
            if let Some(mode) = render {
                let cells = p.cell_packing();
                match mode {
                    RenderMode::Ascii => {
                        fs::write(sibling(&input, ".render.txt"), render_ascii(&cells, &s))?
                    }
                    RenderMode::Svg => {
                        fs::write(sibling(&input, ".render.svg"), render_svg(&cells, &s))?
                    }
                }
            }
            println!("{}", serde_json::to_string(&report)?);
        }
        Command::Oracle { mode, input } => {
            let s = InstanceFile::load(&input)?.to_instance()?;
            let r = run_oracle(&s, &mode)?;
            let report = OracleReport {
                instance: s.name(),
                mode: &mode,
                optimum_length: r.optimum_length,
                k1: r.k1,
                k2: r.k2,
                explored: r.explored,
            };
            println!("{}", serde_json::to_string(&report)?);
        }
        Command::Bench { config, out } => {
            let cfg: BenchConfig = serde_json::from_str(&fs::read_to_string(&config)?)?;
            let csv = run_bench(&cfg)?;
            fs::write(&out, csv)?;
            println!("wrote {}", out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
