//! Shared dispatch from command-line names to solvers and oracles.

use std::str::FromStr;

use twobar_core::algorithms::{algorithm_a1, algorithm_a2, baseline_no_union};
use twobar_core::atsp::{engine_by_name, SolverContract};
use twobar_core::graphs::build_g2;
use twobar_core::matching::{max_cardinality_matching, packing_of_matching};
use twobar_core::oracles::{
    oracle_bcpp1, oracle_bcpp1_bruteforce, oracle_general, oracle_sequence, OracleResult,
};
use twobar_core::{Instance, SequencePacking};

use crate::error::{CliError, Result};
use crate::report::SolveReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    A1,
    A2,
    Matching,
    Baseline,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::A1 => "a1",
            Algo::A2 => "a2",
            Algo::Matching => "matching",
            Algo::Baseline => "baseline",
        }
    }
}

impl FromStr for Algo {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Algo> {
        match s {
            "a1" => Ok(Algo::A1),
            "a2" => Ok(Algo::A2),
            "matching" => Ok(Algo::Matching),
            "baseline" => Ok(Algo::Baseline),
            other => Err(CliError::BadAlgo(other.to_string())),
        }
    }
}

/// Run one algorithm and hand back the packing plus the engine contract it
/// used, if any. The output is re-validated against the instance; a failure
/// there is an internal error, never expected.
pub fn solve_instance(
    s: &Instance,
    algo: Algo,
    engine_name: &str,
    allow_nonbig: bool,
) -> Result<(SequencePacking, Option<SolverContract>)> {
    let (packing, contract) = match algo {
        Algo::A1 => {
            let engine = engine_by_name(engine_name)?;
            (algorithm_a1(s, engine.as_ref())?, Some(engine.contract()))
        }
        Algo::A2 => {
            let engine = engine_by_name(engine_name)?;
            (
                algorithm_a2(s, engine.as_ref(), allow_nonbig)?,
                Some(engine.contract()),
            )
        }
        Algo::Matching => {
            let m = max_cardinality_matching(&build_g2(s)?);
            (packing_of_matching(&m, s)?, None)
        }
        Algo::Baseline => (baseline_no_union(s), None),
    };
    if let Err(v) = packing.cell_packing().validate(s) {
        return Err(CliError::Internal(format!(
            "{} emitted an invalid packing: {v}",
            algo.name()
        )));
    }
    Ok((packing, contract))
}

pub fn report_for(
    s: &Instance,
    algo: Algo,
    contract: Option<SolverContract>,
    p: &SequencePacking,
    seed: Option<u64>,
) -> SolveReport {
    let (k0, k1, k2) = p.count_unions();
    SolveReport {
        instance: s.name().to_string(),
        algorithm: algo.name().to_string(),
        engine: contract.map(|c| c.name.to_string()),
        alpha: contract.map(|c| c.alpha.to_string()),
        length: p.length(),
        k0,
        k1,
        k2,
        oracle_length: None,
        ratio: None,
        wall_ms: None,
        seed,
    }
}

pub const ORACLE_MODES: [&str; 4] = ["bcpp1", "bcpp1-bf", "sequence", "general"];

pub fn run_oracle(s: &Instance, mode: &str) -> Result<OracleResult> {
    match mode {
        "bcpp1" => Ok(oracle_bcpp1(s)?),
        "bcpp1-bf" => Ok(oracle_bcpp1_bruteforce(s)?),
        "sequence" => Ok(oracle_sequence(s)?),
        "general" => Ok(oracle_general(s)?),
        other => Err(CliError::BadOracle(other.to_string())),
    }
}
