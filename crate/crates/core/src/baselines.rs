//! Comparison algorithms: a classical Z-number pipeline scored by Pearson
//! correlation, and a quantum-fuzzy-set pipeline that drops reliabilities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fidelity::FidelityMode;
use crate::madm::{self, decide_partial, DecisionReport, FidelityMatrix, ZMatrix};
use crate::quantum::{Gate, StateVector};
use crate::qzn::rotation_angle;

/// Entry-wise `μA·μB` of a Z-number matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CombinedZMatrix {
    pub values: Vec<Vec<f64>>,
}

pub fn combine_classical(m: &ZMatrix) -> CombinedZMatrix {
    CombinedZMatrix {
        values: m
            .rows()
            .iter()
            .map(|r| r.iter().map(|z| z.a.value() * z.b.value()).collect())
            .collect(),
    }
}

/// Pearson correlation with population moments.
pub fn pearson(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    if u.len() < 2 {
        return Err(Error::InvalidParameter(
            "correlation needs at least two observations".into(),
        ));
    }
    let n = u.len() as f64;
    let mean_u = u.iter().sum::<f64>() / n;
    let mean_v = v.iter().sum::<f64>() / n;
    let (mut cov, mut var_u, mut var_v) = (0.0, 0.0, 0.0);
    for (a, b) in u.iter().zip(v) {
        let (du, dv) = (a - mean_u, b - mean_v);
        cov += du * dv;
        var_u += du * du;
        var_v += dv * dv;
    }
    if var_u == 0.0 || var_v == 0.0 {
        return Err(Error::UndefinedCorrelation);
    }
    Ok((cov / (var_u.sqrt() * var_v.sqrt())).clamp(-1.0, 1.0))
}

/// Samples × references correlation matrix; `None` where a row has zero variance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PearsonMatrix {
    pub values: Vec<Vec<Option<f64>>>,
}

/// Combined memberships, pairwise Pearson correlation, row-wise argmax.
pub fn zn_pipeline(szm: &ZMatrix, rzm: &ZMatrix) -> Result<(PearsonMatrix, DecisionReport)> {
    if szm.n_attributes() != rzm.n_attributes() {
        return Err(Error::DimensionMismatch {
            left: szm.n_attributes(),
            right: rzm.n_attributes(),
        });
    }
    let samples = combine_classical(szm);
    let references = combine_classical(rzm);
    let values = samples
        .values
        .iter()
        .map(|s| {
            references
                .values
                .iter()
                .map(|r| match pearson(s, r) {
                    Ok(v) => Ok(Some(v)),
                    Err(Error::UndefinedCorrelation) => Ok(None),
                    Err(e) => Err(e),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let report = decide_partial(&values, rzm.row_labels())?;
    Ok((PearsonMatrix { values }, report))
}

/// One qubit `√μA|0⟩ + √(1-μA)|1⟩` per attribute; the reliability is ignored.
pub fn qfs_row(row: &[crate::fuzzy::ZNumber]) -> Result<Vec<StateVector>> {
    row.iter()
        .map(|z| StateVector::zero(1)?.apply(Gate::RotY(rotation_angle(z.a)), &[0]))
        .collect()
}

/// The fidelity pipeline with each QZN replaced by a single-qubit fuzzy-set state.
pub fn qfs_pipeline(
    szm: &ZMatrix,
    rzm: &ZMatrix,
    mode: FidelityMode,
) -> Result<(FidelityMatrix, DecisionReport)> {
    if szm.n_attributes() != rzm.n_attributes() {
        return Err(Error::DimensionMismatch {
            left: szm.n_attributes(),
            right: rzm.n_attributes(),
        });
    }
    let encode = |m: &ZMatrix| -> Result<Vec<Vec<StateVector>>> {
        m.rows().iter().map(|r| qfs_row(r)).collect()
    };
    let qfm = madm::fill_matrix(&encode(szm)?, &encode(rzm)?, mode, None)?;
    let report = madm::decide(&qfm.values, rzm.row_labels())?;
    Ok((qfm, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn combined_entries() {
        let m = ZMatrix::build(&[vec![(0.35, 0.77), (1.0, 1.0), (0.6, 0.0)]]).unwrap();
        let c = combine_classical(&m);
        assert!((c.values[0][0] - 0.2695).abs() < 1e-12);
        assert_eq!(c.values[0][1], 1.0);
        assert_eq!(c.values[0][2], 0.0);
    }

    #[test]
    fn pearson_extremes() {
        let u = [0.1, 0.5, 0.3, 0.9];
        let neg: Vec<f64> = u.iter().map(|x| -x).collect();
        assert!((pearson(&u, &u).unwrap() - 1.0).abs() < 1e-12);
        assert!((pearson(&u, &neg).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(
            pearson(&u, &[0.2; 4]).unwrap_err(),
            Error::UndefinedCorrelation
        );
        assert!(pearson(&[1.0], &[1.0]).is_err());
        assert!(pearson(&u, &u[..3]).is_err());
    }

    #[test]
    fn constant_rows_are_undefined_not_zero() {
        let s = ZMatrix::build(&[vec![(0.5, 1.0), (0.5, 1.0)]]).unwrap();
        let r = ZMatrix::build(&[vec![(0.2, 1.0), (0.8, 1.0)]]).unwrap();
        let err = zn_pipeline(&s, &r).unwrap_err();
        assert_eq!(err, Error::NoDefinedScore(0));
        let s = ZMatrix::build(&[vec![(0.1, 1.0), (0.5, 1.0)]]).unwrap();
        let r =
            ZMatrix::build(&[vec![(0.3, 1.0), (0.3, 1.0)], vec![(0.2, 1.0), (0.8, 1.0)]]).unwrap();
        let (pm, report) = zn_pipeline(&s, &r).unwrap();
        assert_eq!(pm.values[0][0], None);
        assert_eq!(report.chosen(), vec![1]);
    }

    #[test]
    fn identical_rows_correlate_perfectly() {
        let m = ZMatrix::build(&[vec![(0.2, 0.9), (0.7, 0.4), (0.5, 0.5)]]).unwrap();
        let (pm, _) = zn_pipeline(&m, &m).unwrap();
        assert!((pm.values[0][0].unwrap() - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn pearson_scale_shift(
            u in prop::collection::vec(-5.0..5.0f64, 4),
            v in prop::collection::vec(-5.0..5.0f64, 4),
            a in prop::sample::select(vec![-3.5, -0.2, 0.7, 4.0]),
            b in -2.0..2.0f64,
        ) {
            let base = pearson(&u, &v);
            prop_assume!(base.is_ok());
            let w: Vec<f64> = u.iter().map(|x| a * x + b).collect();
            let scaled = pearson(&w, &v).unwrap();
            prop_assert!((scaled - a.signum() * base.unwrap()).abs() < 1e-12);
        }
    }
}
