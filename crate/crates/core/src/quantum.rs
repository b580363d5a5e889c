//! Dense state-vector simulation of small qubit registers.
//!
//! Basis index bit layout: qubit 0 is the leftmost symbol of a ket string and
//! the most significant bit of the amplitude index, so `|101⟩` is index 5.
//! A register of `n` qubits stores `2^n` complex amplitudes.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex probability amplitude.
pub type ComplexAmp = Complex64;

/// Tolerance on `Σ|amp|² = 1` for constructed and gate-evolved states.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Default register capacity; `2^26` amplitudes is 1 GiB of `Complex64`.
pub const DEFAULT_MAX_QUBITS: usize = 26;

/// Upper bound on register width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capacity(pub usize);

impl Default for Capacity {
    fn default() -> Self {
        Capacity(DEFAULT_MAX_QUBITS)
    }
}

impl Capacity {
    pub fn check(self, n_qubits: usize) -> Result<()> {
        if n_qubits > self.0 {
            return Err(Error::Capacity {
                requested: n_qubits,
                limit: self.0,
            });
        }
        Ok(())
    }
}

/// A normalized pure state of `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<ComplexAmp>,
}

impl StateVector {
    /// `|0…0⟩` on `n_qubits` qubits.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    /// Computational basis state with amplitude 1 at `index`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        Capacity::default().check(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                left: index,
                right: dim,
            });
        }
        let mut amps = vec![ComplexAmp::new(0.0, 0.0); dim];
        amps[index] = ComplexAmp::new(1.0, 0.0);
        Ok(StateVector { n_qubits, amps })
    }

    /// Basis state from a ket string such as `"101"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let mut index = 0usize;
        for (pos, ch) in bits.chars().enumerate() {
            index <<= 1;
            match ch {
                '0' => {}
                '1' => index |= 1,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "bad ket symbol {ch:?} at position {pos}"
                    )))
                }
            }
        }
        Self::basis(bits.len(), index)
    }

    /// Wraps an amplitude vector, checking its length and normalization.
    pub fn from_amplitudes(amps: Vec<ComplexAmp>) -> Result<Self> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let n_qubits = len.trailing_zeros() as usize;
        Capacity::default().check(n_qubits)?;
        let state = StateVector { n_qubits, amps };
        state.check_normalized()?;
        Ok(state)
    }

    /// Convenience constructor for real amplitude vectors.
    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amps.iter().map(|&a| ComplexAmp::new(a, 0.0)).collect())
    }

    /// Single-qubit state `alpha|0⟩ + beta|1⟩`.
    pub fn qubit(alpha: ComplexAmp, beta: ComplexAmp) -> Result<Self> {
        Self::from_amplitudes(vec![alpha, beta])
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[ComplexAmp] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> ComplexAmp {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_normalized(&self) -> Result<()> {
        let norm = self.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(())
    }

    /// Bit mask of `qubit` inside a basis index.
    fn mask(&self, qubit: usize) -> usize {
        1usize << (self.n_qubits - 1 - qubit)
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Tensor product `self ⊗ other` under the default capacity.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        self.tensor_within(other, Capacity::default())
    }

    pub fn tensor_within(&self, other: &StateVector, capacity: Capacity) -> Result<StateVector> {
        let n_qubits = self.n_qubits + other.n_qubits;
        capacity.check(n_qubits)?;
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            amps.extend(other.amps.iter().map(|b| a * b));
        }
        Ok(StateVector { n_qubits, amps })
    }

    /// Tensor product of a sequence of states, left to right.
    pub fn tensor_all<'a, I>(parts: I, capacity: Capacity) -> Result<StateVector>
    where
        I: IntoIterator<Item = &'a StateVector>,
    {
        let mut acc = StateVector {
            n_qubits: 0,
            amps: vec![ComplexAmp::new(1.0, 0.0)],
        };
        for part in parts {
            acc = acc.tensor_within(part, capacity)?;
        }
        Ok(acc)
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<ComplexAmp> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Returns `U|ψ⟩` with `gate` embedded on `targets`.
    pub fn apply(&self, gate: Gate, targets: &[usize]) -> Result<StateVector> {
        gate.validate(targets, self.n_qubits)?;
        let mut amps = self.amps.clone();
        match gate {
            Gate::Hadamard | Gate::PauliX | Gate::RotY(_) => {
                let [[m00, m01], [m10, m11]] = gate.single_qubit_matrix();
                let mask = self.mask(targets[0]);
                for i in (0..amps.len()).filter(|i| i & mask == 0) {
                    let j = i | mask;
                    let (a0, a1) = (self.amps[i], self.amps[j]);
                    amps[i] = a0 * m00 + a1 * m01;
                    amps[j] = a0 * m10 + a1 * m11;
                }
            }
            Gate::Ccnot => {
                let controls = self.mask(targets[0]) | self.mask(targets[1]);
                let target = self.mask(targets[2]);
                for i in 0..amps.len() {
                    if i & controls == controls && i & target == 0 {
                        amps.swap(i, i | target);
                    }
                }
            }
            Gate::Cswap => {
                let control = self.mask(targets[0]);
                let (m1, m2) = (self.mask(targets[1]), self.mask(targets[2]));
                for i in 0..amps.len() {
                    if i & control != 0 && i & m1 != 0 && i & m2 == 0 {
                        amps.swap(i, i ^ m1 ^ m2);
                    }
                }
            }
        }
        let out = StateVector {
            n_qubits: self.n_qubits,
            amps,
        };
        out.check_normalized()?;
        Ok(out)
    }

    /// Probability of reading `outcome` on `qubit`.
    pub fn measure_prob(&self, qubit: usize, outcome: bool) -> Result<f64> {
        self.check_qubit(qubit)?;
        let mask = self.mask(qubit);
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| (i & mask != 0) == outcome)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Post-measurement state `M|ψ⟩ / √p` for `outcome` on `qubit`.
    pub fn collapse(&self, qubit: usize, outcome: bool) -> Result<StateVector> {
        let p = self.measure_prob(qubit, outcome)?;
        if p <= f64::EPSILON * f64::EPSILON {
            return Err(Error::DegenerateMeasurement);
        }
        let mask = self.mask(qubit);
        let scale = 1.0 / p.sqrt();
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if (i & mask != 0) == outcome {
                    a * scale
                } else {
                    ComplexAmp::new(0.0, 0.0)
                }
            })
            .collect();
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amps,
        })
    }

    /// One line per nonzero amplitude: `bitstring re im`, in index order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() > 1e-24 {
                let _ = writeln!(
                    out,
                    "{:0width$b} {:.12} {:.12}",
                    i,
                    a.re,
                    a.im,
                    width = self.n_qubits
                );
            }
        }
        out
    }
}

/// The gate set used by every circuit in the toolkit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    Hadamard,
    PauliX,
    /// Rotation about Y by the given angle in radians.
    RotY(f64),
    /// Toffoli: targets are `[control, control, target]`.
    Ccnot,
    /// Fredkin: targets are `[control, swap_a, swap_b]`.
    Cswap,
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::Hadamard => "H",
            Gate::PauliX => "X",
            Gate::RotY(_) => "RY",
            Gate::Ccnot => "CCNOT",
            Gate::Cswap => "CSWAP",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Gate::Hadamard | Gate::PauliX | Gate::RotY(_) => 1,
            Gate::Ccnot | Gate::Cswap => 3,
        }
    }

    /// Row-major 2×2 matrix of a single-qubit gate.
    ///
    /// # Panics
    /// On three-qubit gates.
    pub fn single_qubit_matrix(&self) -> [[ComplexAmp; 2]; 2] {
        let c = |re: f64| ComplexAmp::new(re, 0.0);
        match *self {
            Gate::Hadamard => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                [[c(h), c(h)], [c(h), c(-h)]]
            }
            Gate::PauliX => [[c(0.0), c(1.0)], [c(1.0), c(0.0)]],
            Gate::RotY(theta) => {
                let (s, co) = (theta / 2.0).sin_cos();
                [[c(co), c(-s)], [c(s), c(co)]]
            }
            Gate::Ccnot | Gate::Cswap => panic!("{} is not a single-qubit gate", self.name()),
        }
    }

    fn validate(&self, targets: &[usize], n_qubits: usize) -> Result<()> {
        if let Gate::RotY(theta) = self {
            if !theta.is_finite() {
                return Err(Error::InvalidAngle(*theta));
            }
        }
        if targets.len() != self.arity() {
            return Err(Error::GateArity {
                gate: self.name(),
                expected: self.arity(),
                got: targets.len(),
            });
        }
        for (k, &q) in targets.iter().enumerate() {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits });
            }
            if targets[..k].contains(&q) {
                return Err(Error::RepeatedQubit(q));
            }
        }
        Ok(())
    }
}

/// An ordered gate list over a fixed-width register.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<(Gate, Vec<usize>)>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Circuit {
            n_qubits,
            ops: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[(Gate, Vec<usize>)] {
        &self.ops
    }

    /// Appends a gate after checking its targets against the register width.
    pub fn push(&mut self, gate: Gate, targets: &[usize]) -> Result<&mut Self> {
        gate.validate(targets, self.n_qubits)?;
        self.ops.push((gate, targets.to_vec()));
        Ok(self)
    }

    pub fn run(&self, input: &StateVector) -> Result<StateVector> {
        if input.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: input.n_qubits(),
            });
        }
        let mut state = input.clone();
        for (gate, targets) in &self.ops {
            state = state.apply(*gate, targets)?;
        }
        Ok(state)
    }
}
