//! Solve reports and the CSV benchmark format.

use serde::Serialize;

/// One solver run. `ratio` is `length / oracle_length` and is only present
/// when an oracle ran; `wall_ms` is only present when timings were asked
/// for, so that reports stay byte-identical across runs by default.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub instance: String,
    pub algorithm: String,
    pub engine: Option<String>,
    pub alpha: Option<String>,
    pub length: usize,
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub oracle_length: Option<usize>,
    pub ratio: Option<f64>,
    pub wall_ms: Option<u64>,
    pub seed: Option<u64>,
}

impl SolveReport {
    pub fn with_oracle(mut self, oracle_length: usize) -> SolveReport {
        self.oracle_length = Some(oracle_length);
        self.ratio = Some(self.length as f64 / oracle_length as f64);
        self
    }

    fn csv_cells(&self) -> [String; 12] {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        [
            self.instance.clone(),
            self.algorithm.clone(),
            opt(&self.engine),
            opt(&self.alpha),
            self.length.to_string(),
            self.k0.to_string(),
            self.k1.to_string(),
            self.k2.to_string(),
            opt(&self.oracle_length),
            self.ratio.map(|r| format!("{r:.4}")).unwrap_or_default(),
            opt(&self.wall_ms),
            opt(&self.seed),
        ]
    }
}

pub const CSV_HEADER: &str =
    "instance,algorithm,engine,alpha,length,k0,k1,k2,oracle_length,ratio,wall_ms,seed";

/// Assemble the report: one row per run, plus mean- and max-ratio rows per
/// algorithm when any run carries a ratio. Rows are sorted by (instance,
/// algorithm) so the output is independent of execution order.
pub fn csv_report(runs: &[SolveReport]) -> String {
    let mut rows: Vec<[String; 12]> = runs.iter().map(SolveReport::csv_cells).collect();

    let mut algorithms: Vec<(String, String, String)> = runs
        .iter()
        .filter(|r| r.ratio.is_some())
        .map(|r| {
            (
                r.algorithm.clone(),
                r.engine.clone().unwrap_or_default(),
                r.alpha.clone().unwrap_or_default(),
            )
        })
        .collect();
    algorithms.sort();
    algorithms.dedup();
    for (algorithm, engine, alpha) in algorithms {
        let ratios: Vec<f64> = runs
            .iter()
            .filter(|r| r.algorithm == algorithm && r.engine.clone().unwrap_or_default() == engine)
            .filter_map(|r| r.ratio)
            .collect();
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        for (kind, value) in [("mean", mean), ("max", max)] {
            let mut cells: [String; 12] = Default::default();
            cells[0] = format!("aggregate({kind})");
            cells[1] = algorithm.clone();
            cells[2] = engine.clone();
            cells[3] = alpha.clone();
            cells[9] = format!("{value:.4}");
            rows.push(cells);
        }
    }

    rows.sort_by(|x, y| (&x[0], &x[1]).cmp(&(&y[0], &y[1])));
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
