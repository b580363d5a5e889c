//! Pure-state fidelity and the swap-test estimator.
//!
//! The swap test prepares `|0⟩|ψ⟩|φ⟩`, applies a Hadamard to the ancilla,
//! one controlled-SWAP per qubit pair (all controlled by the ancilla), and a
//! second Hadamard. The ancilla then reads `0` with probability
//! `½ + ½·|⟨ψ|φ⟩|²`, so the fidelity estimate is `2·p(0) - 1`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{Capacity, Circuit, Gate, StateVector};

/// How a fidelity value is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FidelityMode {
    /// Inner product of the full states.
    Exact,
    /// Product of per-part overlaps; never materializes the joint register.
    Factorized,
    /// Simulates the swap-test circuit and reads the ancilla probability.
    CircuitExact,
    /// Draws `shots` ancilla outcomes from a ChaCha8 generator seeded with `seed`.
    CircuitSampled { shots: u64, seed: u64 },
}

impl FidelityMode {
    pub fn is_sampled(&self) -> bool {
        matches!(self, FidelityMode::CircuitSampled { .. })
    }
}

/// Outcome of one swap test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SwapTestResult {
    /// Probability (or observed frequency) of the ancilla reading `0`.
    pub p_zero: f64,
    /// `2·p_zero - 1`. Can dip slightly below zero in sampled mode.
    pub fidelity: f64,
    /// `None` for exact evaluation.
    pub shots: Option<u64>,
    /// Seed that drove the sampler, if any.
    pub seed: Option<u64>,
}

impl SwapTestResult {
    fn exact(p_zero: f64) -> Self {
        SwapTestResult {
            p_zero,
            fidelity: 2.0 * p_zero - 1.0,
            shots: None,
            seed: None,
        }
    }

    fn from_fidelity(fidelity: f64) -> Self {
        let fidelity = fidelity.clamp(0.0, 1.0);
        SwapTestResult {
            p_zero: 0.5 + 0.5 * fidelity,
            fidelity,
            shots: None,
            seed: None,
        }
    }

    /// Standard error of `p_zero` for a sampled result, zero when exact.
    pub fn standard_error(&self) -> f64 {
        match self.shots {
            Some(n) => (self.p_zero * (1.0 - self.p_zero) / n as f64).sqrt(),
            None => 0.0,
        }
    }
}

/// `|⟨ψ|φ⟩|²`, clamped to `[0, 1]`.
pub fn fidelity_pure(psi: &StateVector, phi: &StateVector) -> Result<f64> {
    Ok(psi.inner(phi)?.norm_sqr().clamp(0.0, 1.0))
}

/// `∏_j |⟨a_j|b_j⟩|²`, the fidelity of `⊗a_j` against `⊗b_j`.
pub fn fidelity_factorized(parts_a: &[StateVector], parts_b: &[StateVector]) -> Result<f64> {
    if parts_a.len() != parts_b.len() {
        return Err(Error::DimensionMismatch {
            left: parts_a.len(),
            right: parts_b.len(),
        });
    }
    parts_a
        .iter()
        .zip(parts_b)
        .try_fold(1.0, |acc, (a, b)| Ok(acc * fidelity_pure(a, b)?))
}

/// Swap-test circuit on `1 + 2n` wires: ancilla, then `ψ`, then `φ`.
pub fn swap_test_circuit(n_qubits: usize) -> Result<Circuit> {
    let mut circuit = Circuit::new(1 + 2 * n_qubits);
    circuit.push(Gate::Hadamard, &[0])?;
    for k in 0..n_qubits {
        circuit.push(Gate::Cswap, &[0, 1 + k, 1 + n_qubits + k])?;
    }
    circuit.push(Gate::Hadamard, &[0])?;
    Ok(circuit)
}

/// Ancilla `|0⟩` probability after running the swap test on a prepared
/// `|0⟩|ψ⟩|φ⟩` register (both halves `n_qubits` wide).
pub fn swap_test_on_register(register: &StateVector, n_qubits: usize) -> Result<f64> {
    let out = swap_test_circuit(n_qubits)?.run(register)?;
    out.measure_prob(0, false)
}

fn circuit_p_zero(psi: &StateVector, phi: &StateVector) -> Result<f64> {
    let n = psi.n_qubits();
    if n != phi.n_qubits() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: phi.n_qubits(),
        });
    }
    let capacity = Capacity::default();
    capacity.check(1 + 2 * n)?;
    let register = StateVector::zero(1)?
        .tensor_within(psi, capacity)?
        .tensor_within(phi, capacity)?;
    swap_test_on_register(&register, n)
}

/// Observed `|0⟩` frequency over `shots` ancilla measurements.
pub fn sample_p_zero(p_zero: f64, shots: u64, seed: u64) -> Result<f64> {
    if shots == 0 {
        return Err(Error::InvalidParameter("shots must be at least 1".into()));
    }
    let p = p_zero.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // sum of `shots` independent Bernoulli(p) draws
    let zeros = Binomial::new(shots, p)
        .map_err(|e| Error::InvalidParameter(e.to_string()))?
        .sample(&mut rng);
    Ok(zeros as f64 / shots as f64)
}

/// Per-cell seed for matrix fills; independent of evaluation order.
pub fn cell_seed(base: u64, row: usize, column: usize) -> u64 {
    // splitmix64 finalizer over the mixed coordinates
    let mut z = base
        ^ (row as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (column as u64)
            .wrapping_add(1)
            .wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn sampled(p_zero: f64, shots: u64, seed: u64) -> Result<SwapTestResult> {
    let p_hat = sample_p_zero(p_zero, shots, seed)?;
    Ok(SwapTestResult {
        p_zero: p_hat,
        fidelity: 2.0 * p_hat - 1.0,
        shots: Some(shots),
        seed: Some(seed),
    })
}

/// Swap test between two states.
pub fn swap_test(
    psi: &StateVector,
    phi: &StateVector,
    mode: FidelityMode,
) -> Result<SwapTestResult> {
    match mode {
        FidelityMode::Exact | FidelityMode::Factorized => {
            Ok(SwapTestResult::from_fidelity(fidelity_pure(psi, phi)?))
        }
        FidelityMode::CircuitExact => Ok(SwapTestResult::exact(circuit_p_zero(psi, phi)?)),
        FidelityMode::CircuitSampled { shots, seed } => {
            let f = fidelity_pure(psi, phi)?;
            sampled(0.5 + 0.5 * f, shots, seed)
        }
    }
}

/// Swap test between `⊗a_j` and `⊗b_j`.
///
/// `Exact` and `CircuitExact` build the joint registers; `Factorized` and
/// `CircuitSampled` work part by part.
pub fn swap_test_parts(
    parts_a: &[StateVector],
    parts_b: &[StateVector],
    mode: FidelityMode,
) -> Result<SwapTestResult> {
    if parts_a.len() != parts_b.len() {
        return Err(Error::DimensionMismatch {
            left: parts_a.len(),
            right: parts_b.len(),
        });
    }
    match mode {
        FidelityMode::Factorized => Ok(SwapTestResult::from_fidelity(fidelity_factorized(
            parts_a, parts_b,
        )?)),
        FidelityMode::CircuitSampled { shots, seed } => {
            let f = fidelity_factorized(parts_a, parts_b)?;
            sampled(0.5 + 0.5 * f, shots, seed)
        }
        FidelityMode::Exact | FidelityMode::CircuitExact => {
            let psi = StateVector::tensor_all(parts_a, Capacity::default())?;
            let phi = StateVector::tensor_all(parts_b, Capacity::default())?;
            swap_test(&psi, &phi, mode)
        }
    }
}
