//! Abstract unit-cost accounting of the fidelity pipeline against a classical
//! per-attribute similarity scan.
//!
//! Quantum side: `2(M+N)K` angle evaluations, `6·⌈1/ε⌉` gate layers for each
//! of the `MN` fidelity circuits (depth 6, repeated `⌈1/ε⌉` times), and `MN`
//! comparisons for the argmax. Classical side: the same angle and argmax
//! terms, plus `MNK` unit similarity steps. With these constants the totals
//! cross at `K* = 6⌈1/ε⌉ + 1`.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};

/// Depth of one swap-test circuit: rotations, X, CCNOT, the CSWAP layer and two Hadamards.
pub const CIRCUIT_DEPTH: u128 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostParams {
    pub m_samples: u64,
    pub n_references: u64,
    pub k_attributes: u64,
    pub epsilon: f64,
}

impl CostParams {
    pub fn new(m_samples: u64, n_references: u64, k_attributes: u64, epsilon: f64) -> Result<Self> {
        if m_samples == 0 || n_references == 0 || k_attributes == 0 {
            return Err(Error::InvalidParameter("counts must be at least 1".into()));
        }
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "error tolerance must lie in (0, 1], got {epsilon}"
            )));
        }
        Ok(CostParams {
            m_samples,
            n_references,
            k_attributes,
            epsilon,
        })
    }

    pub fn with_k(self, k_attributes: u64) -> Result<Self> {
        CostParams::new(
            self.m_samples,
            self.n_references,
            k_attributes,
            self.epsilon,
        )
    }

    /// `⌈1/ε⌉`, circuit repetitions needed for tolerance `ε`.
    pub fn repetitions(&self) -> u128 {
        let r = 1.0 / self.epsilon;
        (r - r * 1e-12).ceil().max(1.0) as u128
    }

    fn mn(&self) -> u128 {
        self.m_samples as u128 * self.n_references as u128
    }

    fn angle_term(&self) -> u128 {
        2 * (self.m_samples as u128 + self.n_references as u128) * self.k_attributes as u128
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CostBreakdown {
    pub angle_cost: u128,
    /// Fidelity circuits (quantum) or similarity scans (classical).
    pub fidelity_cost: u128,
    pub argmax_cost: u128,
    pub total: u128,
}

impl CostBreakdown {
    fn new(angle_cost: u128, fidelity_cost: u128, argmax_cost: u128) -> Self {
        CostBreakdown {
            angle_cost,
            fidelity_cost,
            argmax_cost,
            total: angle_cost + fidelity_cost + argmax_cost,
        }
    }
}

pub fn quantum_cost(p: &CostParams) -> CostBreakdown {
    CostBreakdown::new(
        p.angle_term(),
        CIRCUIT_DEPTH * p.repetitions() * p.mn(),
        p.mn(),
    )
}

pub fn classical_cost(p: &CostParams) -> CostBreakdown {
    CostBreakdown::new(p.angle_term(), p.mn() * p.k_attributes as u128, p.mn())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossoverPoint {
    pub k: u64,
    pub quantum: u128,
    pub classical: u128,
}

/// Totals for each `K` in `k_range`, other parameters taken from `base`.
pub fn crossover_series(
    base: &CostParams,
    k_range: RangeInclusive<u64>,
) -> Result<Vec<CrossoverPoint>> {
    if k_range.is_empty() || *k_range.start() == 0 {
        return Err(Error::InvalidParameter(
            "attribute range must be nonempty and start at 1 or above".into(),
        ));
    }
    k_range
        .map(|k| {
            let p = base.with_k(k)?;
            Ok(CrossoverPoint {
                k,
                quantum: quantum_cost(&p).total,
                classical: classical_cost(&p).total,
            })
        })
        .collect()
}

/// Smallest `K` in the series from which classical cost stays strictly above
/// quantum cost, or `None` if the series ends with classical not ahead.
pub fn crossover_k(series: &[CrossoverPoint]) -> Option<u64> {
    let mut first = None;
    for point in series.iter().rev() {
        if point.classical > point.quantum {
            first = Some(point.k);
        } else {
            break;
        }
    }
    first
}

/// Closed form of the crossover: `6⌈1/ε⌉ + 1`.
pub fn crossover_k_analytic(p: &CostParams) -> u128 {
    CIRCUIT_DEPTH * p.repetitions() + 1
}

/// Writes `k,quantum,classical` rows with a header line.
pub fn write_csv<W: Write>(series: &[CrossoverPoint], mut out: W) -> io::Result<()> {
    writeln!(out, "k,quantum,classical")?;
    for p in series {
        writeln!(out, "{},{},{}", p.k, p.quantum, p.classical)?;
    }
    out.flush()
}
