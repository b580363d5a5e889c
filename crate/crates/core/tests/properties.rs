use num_complex::Complex64;
use proptest::prelude::*;
use qzn_core::fidelity::{fidelity_pure, sample_p_zero, swap_test};
use qzn_core::madm::{build_qfm, qzn_pipeline};
use qzn_core::{Capacity, Circuit, FidelityMode, Gate, StateVector, ZMatrix};

fn unit() -> impl Strategy<Value = f64> {
    0.0..=1.0f64
}

fn zrows(rows: usize, k: usize) -> impl Strategy<Value = Vec<Vec<(f64, f64)>>> {
    prop::collection::vec(prop::collection::vec((unit(), unit()), k), rows)
}

fn state(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1 << n)
        .prop_filter("nonzero", |v| {
            v.iter().map(|(r, i)| r * r + i * i).sum::<f64>() > 1e-3
        })
        .prop_map(|v| {
            let norm = v.iter().map(|(r, i)| r * r + i * i).sum::<f64>().sqrt();
            StateVector::from_amplitudes(
                v.iter()
                    .map(|&(r, i)| Complex64::new(r / norm, i / norm))
                    .collect(),
            )
            .unwrap()
        })
}

fn gate_on(n: usize) -> impl Strategy<Value = (Gate, Vec<usize>)> {
    let single = (
        0..n,
        prop_oneof![
            Just(Gate::Hadamard),
            Just(Gate::PauliX),
            (-7.0..7.0f64).prop_map(Gate::RotY)
        ],
    )
        .prop_map(|(q, g)| (g, vec![q]));
    let triple = (
        Just(()).prop_perturb(move |_, mut rng| {
            let mut wires: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                wires.swap(i, rng.random_range(0..=i));
            }
            wires.truncate(3);
            wires
        }),
        prop_oneof![Just(Gate::Ccnot), Just(Gate::Cswap)],
    )
        .prop_map(|(w, g)| (g, w));
    prop_oneof![single, triple]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circuits_preserve_norm(psi in state(4), ops in prop::collection::vec(gate_on(4), 1..20)) {
        let mut c = Circuit::new(4);
        for (g, t) in &ops {
            c.push(*g, t).unwrap();
        }
        let out = c.run(&psi).unwrap();
        prop_assert!((out.norm_sqr() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tensor_is_associative(a in state(1), b in state(2), c in state(1)) {
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        for (x, y) in left.amplitudes().iter().zip(right.amplitudes()) {
            prop_assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn fidelity_is_symmetric_and_bounded(a in state(3), b in state(3)) {
        let ab = fidelity_pure(&a, &b).unwrap();
        let ba = fidelity_pure(&b, &a).unwrap();
        prop_assert!((ab - ba).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&ab));
        let c = swap_test(&a, &b, FidelityMode::CircuitExact).unwrap();
        prop_assert!((c.fidelity - ab).abs() < 1e-12);
        prop_assert!((c.p_zero - (0.5 + 0.5 * ab)).abs() < 1e-12);
    }

    #[test]
    fn global_phase_leaves_fidelity_at_one(a in state(2), phase in 0.0..std::f64::consts::TAU) {
        let rotated = StateVector::from_amplitudes(
            a.amplitudes().iter().map(|z| z * Complex64::from_polar(1.0, phase)).collect(),
        ).unwrap();
        prop_assert!((fidelity_pure(&a, &rotated).unwrap() - 1.0).abs() < 1e-12);
        let c = swap_test(&a, &rotated, FidelityMode::CircuitExact).unwrap();
        prop_assert!((c.fidelity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reference_permutation_permutes_scores(
        s in zrows(2, 3),
        r in zrows(4, 3),
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let permuted: Vec<_> = perm.iter().map(|&i| r[i].clone()).collect();
        let sz = ZMatrix::build(&s).unwrap();
        let base = build_qfm(&sz, &ZMatrix::build(&r).unwrap(), FidelityMode::Exact).unwrap();
        let moved = build_qfm(&sz, &ZMatrix::build(&permuted).unwrap(), FidelityMode::Exact).unwrap();
        for i in 0..2 {
            for (x, &from) in perm.iter().enumerate() {
                prop_assert!((moved.values[i][x] - base.values[i][from]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sample_permutation_permutes_decisions(
        s in zrows(3, 2),
        r in zrows(3, 2),
        perm in Just((0..3).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let rz = ZMatrix::build(&r).unwrap();
        let permuted: Vec<_> = perm.iter().map(|&i| s[i].clone()).collect();
        let (_, base) = qzn_pipeline(&ZMatrix::build(&s).unwrap(), &rz, FidelityMode::Exact).unwrap();
        let (_, moved) = qzn_pipeline(&ZMatrix::build(&permuted).unwrap(), &rz, FidelityMode::Exact).unwrap();
        for (row, &from) in perm.iter().enumerate() {
            prop_assert_eq!(moved.decisions[row].reference, base.decisions[from].reference);
        }
    }

    #[test]
    fn attribute_order_is_irrelevant(
        s in zrows(2, 4),
        r in zrows(3, 4),
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let shuffle = |m: &[Vec<(f64, f64)>]| -> Vec<Vec<(f64, f64)>> {
            m.iter().map(|row| perm.iter().map(|&j| row[j]).collect()).collect()
        };
        let base = build_qfm(&ZMatrix::build(&s).unwrap(), &ZMatrix::build(&r).unwrap(), FidelityMode::Exact).unwrap();
        let moved = build_qfm(&ZMatrix::build(&shuffle(&s)).unwrap(), &ZMatrix::build(&shuffle(&r)).unwrap(), FidelityMode::Exact).unwrap();
        for (a, b) in base.values.iter().flatten().zip(moved.values.iter().flatten()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }
}

#[test]
fn sampled_estimates_stay_within_five_standard_errors() {
    let shots = 20_000u64;
    for (k, p) in [0.5, 0.62, 0.91, 1.0].into_iter().enumerate() {
        let sd = (p * (1.0 - p) / shots as f64).sqrt();
        let runs: Vec<f64> = (0..50)
            .map(|seed| sample_p_zero(p, shots, seed * 31 + k as u64).unwrap())
            .collect();
        for est in &runs {
            assert!((est - p).abs() <= 5.0 * sd + 1e-12, "{est} vs {p}");
        }
        let mean = runs.iter().sum::<f64>() / runs.len() as f64;
        assert!((mean - p).abs() <= 5.0 * sd / (runs.len() as f64).sqrt() + 1e-12);
    }
}

#[test]
fn sampling_is_reproducible() {
    assert_eq!(
        sample_p_zero(0.7, 1000, 42).unwrap(),
        sample_p_zero(0.7, 1000, 42).unwrap()
    );
}

#[test]
fn default_capacity_bounds_tensor() {
    let big = StateVector::zero(20).unwrap();
    let small = StateVector::zero(7).unwrap();
    assert!(big.tensor_within(&small, Capacity::default()).is_err());
}
