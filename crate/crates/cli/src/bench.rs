//! Ratio benchmarking: sweep instance sizes, solve with a set of
//! algorithms, compare against an oracle, and emit a CSV report.

use std::str::FromStr;
use std::time::Instant;

use serde::Deserialize;

use crate::error::Result;
use crate::gen::{generate, ClassSpec};
use crate::report::csv_report;
use crate::runner::{report_for, run_oracle, solve_instance, Algo};

/// One benchmark sweep, parsed from a JSON config file.
#[derive(Debug, Clone, Deserialize)]
pub struct BenchConfig {
    /// Chart class tags, same syntax as `gen --class`.
    pub class: String,
    pub n_from: usize,
    pub n_to: usize,
    /// Instances generated per size.
    pub trials: u64,
    pub seed: u64,
    /// Oracle mode to compare against, or absent for no ratios.
    #[serde(default)]
    pub oracle: Option<String>,
    pub algorithms: Vec<AlgoSpec>,
    /// Record wall-clock times. Off by default so reports are byte-stable.
    #[serde(default)]
    pub timings: bool,
    /// Let `a2` run on charts below half height.
    #[serde(default)]
    pub allow_nonbig: bool,
}

#[derive(Debug, Clone, Deserialize)]
pub struct AlgoSpec {
    pub algo: String,
    #[serde(default = "default_engine")]
    pub engine: String,
}

fn default_engine() -> String {
    "exact".to_string()
}

/// The seed for one generated instance: distinct per (size, trial), stable
/// across runs.
fn instance_seed(base: u64, n: usize, trial: u64) -> u64 {
    base.wrapping_mul(1_000_003)
        .wrapping_add((n as u64) * 1_000)
        .wrapping_add(trial)
}

/// Run the sweep and return the CSV text. Trials are independent of each
/// other and rows are sorted by the report writer, so execution order never
/// shows in the output.
pub fn run_bench(cfg: &BenchConfig) -> Result<String> {
    let spec = ClassSpec::from_str(&cfg.class)?;
    let algorithms: Vec<(Algo, String)> = cfg
        .algorithms
        .iter()
        .map(|a| Algo::from_str(&a.algo).map(|algo| (algo, a.engine.clone())))
        .collect::<Result<_>>()?;

    let mut runs = Vec::new();
    for n in cfg.n_from..=cfg.n_to {
        for trial in 0..cfg.trials {
            let seed = instance_seed(cfg.seed, n, trial);
            let s = generate(n, &spec, seed)?;
            let oracle_length = match &cfg.oracle {
                Some(mode) => Some(run_oracle(&s, mode)?.optimum_length),
                None => None,
            };
            for (algo, engine) in &algorithms {
                let started = Instant::now();
                let (p, contract) = solve_instance(&s, *algo, engine, cfg.allow_nonbig)?;
                let wall = started.elapsed().as_millis() as u64;
                let mut report = report_for(&s, *algo, contract, &p, Some(seed));
                if let Some(len) = oracle_length {
                    report = report.with_oracle(len);
                }
                if cfg.timings {
                    report.wall_ms = Some(wall);
                }
                runs.push(report);
            }
        }
    }
    Ok(csv_report(&runs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(json: &str) -> BenchConfig {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn bench_output_is_deterministic() {
        let cfg = config(
            r#"{
                "class": "non-strictly-big",
                "n_from": 2, "n_to": 4,
                "trials": 3,
                "seed": 42,
                "oracle": "bcpp1",
                "algorithms": [{"algo": "a1"}, {"algo": "baseline"}]
            }"#,
        );
        let a = run_bench(&cfg).unwrap();
        let b = run_bench(&cfg).unwrap();
        assert_eq!(a, b);
        // Without "timings" the wall_ms cells stay empty.
        for line in a.lines().skip(1) {
            assert_eq!(line.split(',').nth(10), Some(""), "in {line}");
        }
    }

    #[test]
    fn a1_with_exact_engine_is_never_beaten_by_its_oracle() {
        let cfg = config(
            r#"{
                "class": "arbitrary",
                "n_from": 2, "n_to": 6,
                "trials": 4,
                "seed": 7,
                "oracle": "bcpp1",
                "algorithms": [{"algo": "a1", "engine": "exact"}]
            }"#,
        );
        let csv = run_bench(&cfg).unwrap();
        for line in csv.lines().filter(|l| l.starts_with("aggregate")) {
            assert!(
                line.contains(",1.0000"),
                "exact a1 matches its oracle: {line}"
            );
        }
    }

    #[test]
    fn instance_seeds_never_collide_within_a_sweep() {
        let mut seen = std::collections::BTreeSet::new();
        for n in 2..=14 {
            for trial in 0..500 {
                assert!(seen.insert(instance_seed(99, n, trial)));
            }
        }
    }
}
