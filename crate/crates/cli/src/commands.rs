use std::fmt::Write as _;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use qzn_core::cost::{self, CostParams, CrossoverPoint};
use qzn_core::replay::{self, ExampleBlock};

use crate::error::CliError;

/// Replays the worked examples; the flag is true when every check passed.
pub fn examples() -> Result<(String, bool), CliError> {
    let blocks = replay::replay()?;
    Ok((
        render_examples(&blocks),
        blocks.iter().all(ExampleBlock::passed),
    ))
}

pub fn render_examples(blocks: &[ExampleBlock]) -> String {
    let mut out = String::new();
    for b in blocks {
        let _ = writeln!(out, "[{}]", b.name);
        for input in &b.inputs {
            let _ = writeln!(out, "  input: {input}");
        }
        for c in &b.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  [{mark}] {}: {} (expected {})",
                c.description, c.computed, c.expected
            );
        }
    }
    let total: usize = blocks.iter().map(|b| b.checks.len()).sum();
    let passed: usize = blocks
        .iter()
        .map(|b| b.checks.iter().filter(|c| c.passed).count())
        .sum();
    let _ = writeln!(out, "{passed}/{total} checks passed");
    out
}

#[derive(Debug, Clone)]
pub struct CostRun {
    pub series: Vec<CrossoverPoint>,
    pub crossover: Option<u64>,
    pub analytic: u128,
}

pub fn cost_series(m: u64, n: u64, epsilon: f64, k_max: u64) -> Result<CostRun, CliError> {
    let usage = |e: qzn_core::Error| CliError::Usage(e.to_string());
    let base = CostParams::new(m, n, 1, epsilon).map_err(usage)?;
    let series = cost::crossover_series(&base, 1..=k_max).map_err(usage)?;
    Ok(CostRun {
        crossover: cost::crossover_k(&series),
        analytic: cost::crossover_k_analytic(&base),
        series,
    })
}

pub fn write_cost_csv(run: &CostRun, path: &Path) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    cost::write_csv(&run.series, BufWriter::new(file)).map_err(io_err)
}

pub fn cost_summary(run: &CostRun) -> String {
    match run.crossover {
        Some(k) => format!(
            "crossover K* = {k} (closed form {}); classical exceeds quantum for every K >= {k} in the series\n",
            run.analytic
        ),
        None => format!(
            "no crossover within the series (closed form K* = {})\n",
            run.analytic
        ),
    }
}
