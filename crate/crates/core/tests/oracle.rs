mod common;

use common::brute_fidelity;
use proptest::prelude::*;
use qzn_core::baselines::qfs_pipeline;
use qzn_core::madm::{build_qfm, full_register_p_zero, rotation_angles};
use qzn_core::{FidelityMode, ZMatrix};

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0f64]
}

fn matrix(rows: usize, k: usize) -> impl Strategy<Value = Vec<Vec<(f64, f64)>>> {
    prop::collection::vec(prop::collection::vec((unit(), unit()), k), rows)
}

type Rows = Vec<Vec<(f64, f64)>>;

fn instance(max_k: usize) -> impl Strategy<Value = (Rows, Rows)> {
    (1..=max_k).prop_flat_map(|k| (matrix(2, k), matrix(2, k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_matrix_equals_full_tensor_oracle((s, r) in instance(3)) {
        let qfm = build_qfm(&ZMatrix::build(&s).unwrap(), &ZMatrix::build(&r).unwrap(), FidelityMode::Exact).unwrap();
        for (si, qrow) in s.iter().zip(&qfm.values) {
            for (rx, value) in r.iter().zip(qrow) {
                let oracle = brute_fidelity(si, rx);
                prop_assert!((value - oracle).abs() < 1e-12, "{} vs {}", value, oracle);
            }
        }
    }

    #[test]
    fn modes_agree_on_small_instances((s, r) in instance(2)) {
        let (sz, rz) = (ZMatrix::build(&s).unwrap(), ZMatrix::build(&r).unwrap());
        let exact = build_qfm(&sz, &rz, FidelityMode::Exact).unwrap();
        let factorized = build_qfm(&sz, &rz, FidelityMode::Factorized).unwrap();
        let circuit = build_qfm(&sz, &rz, FidelityMode::CircuitExact).unwrap();
        for ((e, f), c) in exact.values.iter().flatten().zip(factorized.values.iter().flatten()).zip(circuit.values.iter().flatten()) {
            prop_assert!((e - f).abs() < 1e-12);
            prop_assert!((e - c).abs() < 1e-12);
        }
        let sa = rotation_angles(&sz);
        let ra = rotation_angles(&rz);
        let p = full_register_p_zero(&sa.angles[0], &ra.angles[1]).unwrap();
        prop_assert!((p - (0.5 + 0.5 * exact.values[0][1])).abs() < 1e-12);
    }

    #[test]
    fn full_reliability_collapses_to_fuzzy_sets(s in matrix(2, 3), r in matrix(3, 3)) {
        let certain = |m: &[Vec<(f64, f64)>]| -> ZMatrix {
            ZMatrix::build(&m.iter().map(|row| row.iter().map(|&(a, _)| (a, 1.0)).collect()).collect::<Vec<_>>()).unwrap()
        };
        let (sz, rz) = (certain(&s), certain(&r));
        let q = build_qfm(&sz, &rz, FidelityMode::Exact).unwrap();
        let (f, _) = qfs_pipeline(&sz, &rz, FidelityMode::Exact).unwrap();
        for (a, b) in q.values.iter().flatten().zip(f.values.iter().flatten()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }
}
