//! Multi-attribute decision making over Z-number matrices.
//!
//! Samples and references are rows of Z-numbers, one per attribute. Each
//! entry is encoded as a QZN, fused into a three-qubit combined state, and a
//! sample row is scored against a reference row by the fidelity of their
//! combined registers. Every sample is matched to its highest-scoring
//! reference.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fidelity::{self, FidelityMode, SwapTestResult};
use crate::fuzzy::ZNumber;
use crate::quantum::{Capacity, Circuit, Gate, StateVector};
use crate::qzn::{rotation_angle, Qzn};

/// Scores within this distance of a row maximum count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Entities × attributes grid of Z-numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct ZMatrix {
    rows: Vec<Vec<ZNumber>>,
    row_labels: Vec<String>,
    column_labels: Vec<String>,
}

impl ZMatrix {
    /// Validates a raw grid of `(a, b)` pairs. Labels default to `1..=M` for
    /// rows and `a1..=aK` for columns.
    pub fn build(raw: &[Vec<(f64, f64)>]) -> Result<Self> {
        let first = raw
            .first()
            .ok_or(Error::Empty("Z-number matrix has no rows"))?;
        let k = first.len();
        if k == 0 {
            return Err(Error::Empty("Z-number matrix has no attributes"));
        }
        let mut rows = Vec::with_capacity(raw.len());
        for (i, row) in raw.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Ragged {
                    row: i,
                    expected: k,
                    got: row.len(),
                });
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, &(a, b))| {
                    ZNumber::new(a, b).map_err(|e| Error::Cell {
                        row: i,
                        column: j,
                        source: Box::new(e),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Ok(ZMatrix {
            row_labels: (1..=rows.len()).map(|i| i.to_string()).collect(),
            column_labels: (1..=k).map(|j| format!("a{j}")).collect(),
            rows,
        })
    }

    pub fn from_rows(rows: Vec<Vec<ZNumber>>) -> Result<Self> {
        let raw: Vec<Vec<(f64, f64)>> = rows
            .iter()
            .map(|r| r.iter().map(|z| (z.a.value(), z.b.value())).collect())
            .collect();
        ZMatrix::build(&raw)
    }

    pub fn with_labels(
        mut self,
        row_labels: Vec<String>,
        column_labels: Vec<String>,
    ) -> Result<Self> {
        if row_labels.len() != self.n_rows() {
            return Err(Error::DimensionMismatch {
                left: self.n_rows(),
                right: row_labels.len(),
            });
        }
        if column_labels.len() != self.n_attributes() {
            return Err(Error::DimensionMismatch {
                left: self.n_attributes(),
                right: column_labels.len(),
            });
        }
        self.row_labels = row_labels;
        self.column_labels = column_labels;
        Ok(self)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<ZNumber>] {
        &self.rows
    }

    pub fn get(&self, row: usize, column: usize) -> ZNumber {
        self.rows[row][column]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn column_labels(&self) -> &[String] {
        &self.column_labels
    }

    /// Applies `f` to every entry, keeping labels.
    pub fn map(&self, f: impl Fn(ZNumber) -> ZNumber) -> ZMatrix {
        ZMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&z| f(z)).collect())
                .collect(),
            row_labels: self.row_labels.clone(),
            column_labels: self.column_labels.clone(),
        }
    }
}

/// Per-entry rotation angle pairs `(θ_A, θ_B)` in radians.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AngleMatrix {
    pub angles: Vec<Vec<(f64, f64)>>,
}

impl AngleMatrix {
    pub fn degrees(&self) -> Vec<Vec<(f64, f64)>> {
        self.angles
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(a, b)| (a.to_degrees(), b.to_degrees()))
                    .collect()
            })
            .collect()
    }
}

pub fn rotation_angles(m: &ZMatrix) -> AngleMatrix {
    AngleMatrix {
        angles: m
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|z| (rotation_angle(z.a), rotation_angle(z.b)))
                    .collect()
            })
            .collect(),
    }
}

/// One QZN per attribute, each prepared by Y-rotations of `|0⟩`.
pub fn encode_row(angles: &[(f64, f64)]) -> Result<Vec<Qzn>> {
    angles
        .iter()
        .map(|&(ta, tb)| Qzn::from_angles(ta, tb))
        .collect()
}

/// Combined three-qubit state per attribute; their tensor product is the
/// row's full register.
pub fn combine_row(qzns: &[Qzn]) -> Result<Vec<StateVector>> {
    qzns.iter().map(|q| Ok(q.combine()?.into_state())).collect()
}

/// `F = 2·p(0) - 1` for one sample row against one reference row of combined states.
pub fn fidelity_coefficient(
    sample_row: &[StateVector],
    reference_row: &[StateVector],
    mode: FidelityMode,
) -> Result<SwapTestResult> {
    if sample_row.len() != reference_row.len() {
        return Err(Error::DimensionMismatch {
            left: sample_row.len(),
            right: reference_row.len(),
        });
    }
    let mode = match mode {
        FidelityMode::Exact => FidelityMode::Factorized,
        other => other,
    };
    fidelity::swap_test_parts(sample_row, reference_row, mode)
}

/// Builds and simulates the complete register for one pair of rows: ancilla,
/// then three wires per sample attribute (A, B, combination ancilla), then
/// the same for the reference. Returns the ancilla `|0⟩` probability.
///
/// Each three-wire block is prepared by its own circuit (ancilla flipped to
/// `|1⟩`, `R_Y` on A and B, X on A and B, CCNOT onto the ancilla) and the
/// blocks are tensored into the `1 + 6K` wire register before the swap test.
/// The preparation gates act on disjoint wires, so this equals running them
/// on the joint register. `K ≤ 4` fits the default capacity.
pub fn full_register_p_zero(sample: &[(f64, f64)], reference: &[(f64, f64)]) -> Result<f64> {
    if sample.len() != reference.len() {
        return Err(Error::DimensionMismatch {
            left: sample.len(),
            right: reference.len(),
        });
    }
    let half = 3 * sample.len();
    let capacity = Capacity::default();
    capacity.check(1 + 2 * half)?;

    let mut register = StateVector::zero(1)?;
    for &(theta_a, theta_b) in sample.iter().chain(reference) {
        let mut prep = Circuit::new(3);
        prep.push(Gate::PauliX, &[2])?
            .push(Gate::RotY(theta_a), &[0])?
            .push(Gate::RotY(theta_b), &[1])?
            .push(Gate::PauliX, &[0])?
            .push(Gate::PauliX, &[1])?
            .push(Gate::Ccnot, &[0, 1, 2])?;
        let block = prep.run(&StateVector::zero(3)?)?;
        register = register.tensor_within(&block, capacity)?;
    }
    fidelity::swap_test_on_register(&register, half)
}

/// Samples × references grid of fidelity coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FidelityMatrix {
    pub values: Vec<Vec<f64>>,
    pub mode: FidelityMode,
    /// Per-cell sampler seeds, present in sampled mode.
    pub seeds: Option<Vec<Vec<u64>>>,
}

impl FidelityMatrix {
    pub fn n_rows(&self) -> usize {
        self.values.len()
    }

    pub fn n_columns(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }
}

fn check_attributes(szm: &ZMatrix, rzm: &ZMatrix) -> Result<()> {
    if szm.n_attributes() != rzm.n_attributes() {
        return Err(Error::DimensionMismatch {
            left: szm.n_attributes(),
            right: rzm.n_attributes(),
        });
    }
    Ok(())
}

/// Fills a fidelity matrix from per-row encoded states. Cells are evaluated
/// in parallel; sampled cells draw from `cell_seed(seed, i, x)` so the
/// result does not depend on scheduling.
pub(crate) fn fill_matrix(
    samples: &[Vec<StateVector>],
    references: &[Vec<StateVector>],
    mode: FidelityMode,
    circuit_cell: Option<&(dyn Fn(usize, usize) -> Result<f64> + Sync)>,
) -> Result<FidelityMatrix> {
    let n = references.len();
    let cells: Vec<(usize, usize)> = (0..samples.len())
        .flat_map(|i| (0..n).map(move |x| (i, x)))
        .collect();
    let eval = |&(i, x): &(usize, usize)| -> Result<f64> {
        let cell_mode = match mode {
            FidelityMode::CircuitSampled { shots, seed } => FidelityMode::CircuitSampled {
                shots,
                seed: fidelity::cell_seed(seed, i, x),
            },
            FidelityMode::CircuitExact => {
                if let Some(cell) = circuit_cell {
                    return Ok(2.0 * cell(i, x)? - 1.0);
                }
                FidelityMode::CircuitExact
            }
            FidelityMode::Exact => FidelityMode::Factorized,
            other => other,
        };
        Ok(fidelity::swap_test_parts(&samples[i], &references[x], cell_mode)?.fidelity)
    };
    let results = if mode == FidelityMode::CircuitExact {
        cells.iter().map(eval).collect::<Result<Vec<f64>>>()?
    } else {
        cells.par_iter().map(eval).collect::<Result<Vec<f64>>>()?
    };

    let values = results.chunks(n.max(1)).map(<[f64]>::to_vec).collect();
    let seeds = match mode {
        FidelityMode::CircuitSampled { seed, .. } => Some(
            (0..samples.len())
                .map(|i| (0..n).map(|x| fidelity::cell_seed(seed, i, x)).collect())
                .collect(),
        ),
        _ => None,
    };
    Ok(FidelityMatrix {
        values,
        mode,
        seeds,
    })
}

/// Quantum fidelity matrix between every sample row and every reference row.
///
/// `Exact` and `Factorized` multiply per-attribute overlaps; `CircuitExact`
/// simulates the full register of [`full_register_p_zero`] per cell.
pub fn build_qfm(szm: &ZMatrix, rzm: &ZMatrix, mode: FidelityMode) -> Result<FidelityMatrix> {
    check_attributes(szm, rzm)?;
    let sample_angles = rotation_angles(szm);
    let reference_angles = rotation_angles(rzm);
    let encode = |angles: &AngleMatrix| -> Result<Vec<Vec<StateVector>>> {
        angles
            .angles
            .iter()
            .map(|row| combine_row(&encode_row(row)?))
            .collect()
    };
    let samples = encode(&sample_angles)?;
    let references = encode(&reference_angles)?;
    let circuit_cell = |i: usize, x: usize| {
        full_register_p_zero(&sample_angles.angles[i], &reference_angles.angles[x])
    };
    fill_matrix(&samples, &references, mode, Some(&circuit_cell))
}

/// Full pipeline: fidelity matrix, then one decision per sample.
pub fn qzn_pipeline(
    szm: &ZMatrix,
    rzm: &ZMatrix,
    mode: FidelityMode,
) -> Result<(FidelityMatrix, DecisionReport)> {
    let qfm = build_qfm(szm, rzm, mode)?;
    let report = decide(&qfm.values, rzm.row_labels())?;
    Ok((qfm, report))
}

/// Outcome for one sample row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decision {
    pub sample: usize,
    pub reference: usize,
    pub reference_label: String,
    pub score: f64,
    /// Another defined score lies within [`TIE_TOLERANCE`] of the maximum.
    pub tie: bool,
    /// The full row; `None` marks an undefined score.
    pub scores: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionReport {
    pub decisions: Vec<Decision>,
}

impl DecisionReport {
    pub fn chosen(&self) -> Vec<usize> {
        self.decisions.iter().map(|d| d.reference).collect()
    }

    pub fn chosen_labels(&self) -> Vec<&str> {
        self.decisions
            .iter()
            .map(|d| d.reference_label.as_str())
            .collect()
    }
}

/// Row-wise argmax; the lowest index wins ties.
pub fn decide(scores: &[Vec<f64>], reference_labels: &[String]) -> Result<DecisionReport> {
    let rows: Vec<Vec<Option<f64>>> = scores
        .iter()
        .map(|r| r.iter().map(|&v| Some(v)).collect())
        .collect();
    decide_partial(&rows, reference_labels)
}

/// Row-wise argmax over partially defined scores; `None` cells are skipped.
pub fn decide_partial(
    scores: &[Vec<Option<f64>>],
    reference_labels: &[String],
) -> Result<DecisionReport> {
    if scores.is_empty() {
        return Err(Error::Empty("score matrix has no rows"));
    }
    let mut decisions = Vec::with_capacity(scores.len());
    for (i, row) in scores.iter().enumerate() {
        if row.len() != reference_labels.len() {
            return Err(Error::DimensionMismatch {
                left: row.len(),
                right: reference_labels.len(),
            });
        }
        let (best, max) = row
            .iter()
            .enumerate()
            .filter_map(|(x, v)| v.map(|v| (x, v)))
            .fold(None, |acc: Option<(usize, f64)>, (x, v)| match acc {
                Some((_, m)) if v <= m => acc,
                _ => Some((x, v)),
            })
            .ok_or(Error::NoDefinedScore(i))?;
        let near = row
            .iter()
            .flatten()
            .filter(|&&v| (max - v).abs() <= TIE_TOLERANCE)
            .count();
        decisions.push(Decision {
            sample: i,
            reference: best,
            reference_label: reference_labels[best].clone(),
            score: max,
            tie: near >= 2,
            scores: row.clone(),
        });
    }
    Ok(DecisionReport { decisions })
}
