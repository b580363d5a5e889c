//! Diagnosis runs and their text/JSON renderings.

use std::fmt::Write as _;

use qzn_core::baselines::{qfs_pipeline, zn_pipeline};
use qzn_core::madm::{qzn_pipeline, rotation_angles};
use qzn_core::{DecisionReport, FidelityMode};
use serde::Serialize;

use crate::error::CliError;
use crate::input::Dataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Quantum Z-number fidelity pipeline.
    Qzn,
    /// Classical Z-numbers scored by Pearson correlation.
    Zn,
    /// Quantum fuzzy sets, reliabilities ignored.
    Qfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    /// Absent for the correlation baseline, which has no fidelity step.
    pub mode: Option<FidelityMode>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Labels {
    pub samples: Vec<String>,
    pub references: Vec<String>,
    pub attributes: Vec<String>,
}

/// `[θ_A, θ_B]` in degrees per entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Angles {
    pub samples: Vec<Vec<[f64; 2]>>,
    pub references: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionOut {
    pub sample: String,
    pub reference: String,
    pub score: f64,
    pub tie: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub labels: Labels,
    pub angles: Angles,
    /// `null` marks an undefined correlation.
    pub scores: Vec<Vec<Option<f64>>>,
    pub decisions: Vec<DecisionOut>,
}

fn degrees(m: &qzn_core::ZMatrix) -> Vec<Vec<[f64; 2]>> {
    rotation_angles(m)
        .degrees()
        .into_iter()
        .map(|r| r.into_iter().map(|(a, b)| [a, b]).collect())
        .collect()
}

pub fn diagnose(data: &Dataset, config: RunConfig) -> Result<Report, CliError> {
    let (s, r) = (&data.samples, &data.references);
    let lift = |v: Vec<Vec<f64>>| -> Vec<Vec<Option<f64>>> {
        v.into_iter()
            .map(|row| row.into_iter().map(Some).collect())
            .collect()
    };
    let (scores, report): (_, DecisionReport) = match config.algorithm {
        Algorithm::Qzn => {
            let mode = config.mode.unwrap_or(FidelityMode::Exact);
            let (qfm, rep) = qzn_pipeline(s, r, mode)?;
            (lift(qfm.values), rep)
        }
        Algorithm::Qfs => {
            let mode = config.mode.unwrap_or(FidelityMode::Exact);
            let (m, rep) = qfs_pipeline(s, r, mode)?;
            (lift(m.values), rep)
        }
        Algorithm::Zn => {
            let (pm, rep) = zn_pipeline(s, r)?;
            (pm.values, rep)
        }
    };
    Ok(Report {
        config,
        labels: Labels {
            samples: s.row_labels().to_vec(),
            references: r.row_labels().to_vec(),
            attributes: s.column_labels().to_vec(),
        },
        angles: Angles {
            samples: degrees(s),
            references: degrees(r),
        },
        scores,
        decisions: report
            .decisions
            .iter()
            .map(|d| DecisionOut {
                sample: s.row_labels()[d.sample].clone(),
                reference: d.reference_label.clone(),
                score: d.score,
                tie: d.tie,
            })
            .collect(),
    })
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn table(out: &mut String, corner: &str, columns: &[String], rows: &[(String, Vec<String>)]) {
    let first = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .chain([corner.chars().count()])
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            rows.iter()
                .map(|(_, cells)| cells[j].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let _ = write!(out, "{corner:<first$}");
    for (c, w) in columns.iter().zip(&widths) {
        let _ = write!(out, "  {c:>w$}");
    }
    out.push('\n');
    for (label, cells) in rows {
        let _ = write!(out, "{label:<first$}");
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(out, "  {c:>w$}");
        }
        out.push('\n');
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let mode = match report.config.mode {
        None => String::new(),
        Some(FidelityMode::Exact) => " (exact)".into(),
        Some(FidelityMode::Factorized) => " (factorized)".into(),
        Some(FidelityMode::CircuitExact) => " (circuit-exact)".into(),
        Some(FidelityMode::CircuitSampled { shots, seed }) => {
            format!(" (circuit-sampled, shots={shots}, seed={seed})")
        }
    };
    let algorithm = match report.config.algorithm {
        Algorithm::Qzn => "qzn",
        Algorithm::Zn => "zn",
        Algorithm::Qfs => "qfs",
    };
    let _ = writeln!(out, "algorithm: {algorithm}{mode}\n");

    let angle_rows = |labels: &[String], m: &[Vec<[f64; 2]>]| -> Vec<(String, Vec<String>)> {
        labels
            .iter()
            .zip(m)
            .map(|(l, r)| {
                (
                    l.clone(),
                    r.iter().map(|[a, b]| format!("{a:.3} / {b:.3}")).collect(),
                )
            })
            .collect()
    };
    out.push_str("rotation angles in degrees (theta_A / theta_B)\n");
    table(
        &mut out,
        "sample",
        &report.labels.attributes,
        &angle_rows(&report.labels.samples, &report.angles.samples),
    );
    out.push('\n');
    table(
        &mut out,
        "reference",
        &report.labels.attributes,
        &angle_rows(&report.labels.references, &report.angles.references),
    );

    let title = match report.config.algorithm {
        Algorithm::Zn => "correlation matrix",
        _ => "fidelity matrix",
    };
    let _ = writeln!(out, "\n{title}");
    let score_rows: Vec<(String, Vec<String>)> = report
        .labels
        .samples
        .iter()
        .zip(&report.scores)
        .map(|(l, r)| {
            (
                l.clone(),
                r.iter()
                    .map(|v| v.map_or_else(|| "n/a".into(), |v| format!("{v:.4}")))
                    .collect(),
            )
        })
        .collect();
    table(&mut out, "sample", &report.labels.references, &score_rows);

    out.push_str("\ndecisions\n");
    for d in &report.decisions {
        let tie = if d.tie { " (tie)" } else { "" };
        let _ = writeln!(out, "{} -> {} ({:.4}){tie}", d.sample, d.reference, d.score);
    }
    out
}
