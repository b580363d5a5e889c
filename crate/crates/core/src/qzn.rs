//! Quantum Z-numbers and their seven operations.
//!
//! A QZN pairs two quantum membership functions (QMFs): the fuzzy
//! restriction `a` and its reliability `b`. A fresh QMF is one qubit
//! `α|0⟩ + β|1⟩` whose `|0⟩` probability plays the role of the classical
//! membership. Intersection, union and combination produce three-qubit QMFs
//! whose membership is read on the last wire.
//!
//! Every operation is executed as a gate circuit on [`StateVector`]; the
//! [`closed_form`] module writes the resulting amplitudes down directly and
//! is used to cross-check the circuits.

use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{Membership, ZNumber};
use crate::quantum::{Circuit, ComplexAmp, Gate, StateVector};

/// Absolute slack used when comparing membership probabilities.
pub const PROB_TOLERANCE: f64 = 1e-12;

/// `θ = 2·arccos(√μ)`, the Y-rotation taking `|0⟩` to `√μ|0⟩ + √(1-μ)|1⟩`.
pub fn rotation_angle(mu: Membership) -> f64 {
    2.0 * mu.value().sqrt().clamp(0.0, 1.0).acos()
}

/// A quantum membership function: a one- or three-qubit state plus the wire
/// whose `|0⟩` probability is its membership degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Qmf {
    state: StateVector,
    designated_qubit: usize,
}

impl Qmf {
    /// Wraps a one-qubit (fresh) or three-qubit (derived) state.
    pub fn new(state: StateVector) -> Result<Self> {
        let designated_qubit = match state.n_qubits() {
            1 => 0,
            3 => 2,
            got => return Err(Error::QmfArity { expected: 1, got }),
        };
        Ok(Qmf {
            state,
            designated_qubit,
        })
    }

    /// `alpha|0⟩ + beta|1⟩`
    pub fn from_amplitudes(alpha: ComplexAmp, beta: ComplexAmp) -> Result<Self> {
        Qmf::new(StateVector::qubit(alpha, beta)?)
    }

    /// `√p·e^{iπ·phase0}|0⟩ + √(1-p)·e^{iπ·phase1}|1⟩`, the display form used
    /// for phase-decorated QMFs.
    pub fn from_polar(p_zero: f64, phase0: f64, phase1: f64) -> Result<Self> {
        let p = Membership::new(p_zero)?.value();
        let pi = std::f64::consts::PI;
        Qmf::from_amplitudes(
            ComplexAmp::from_polar(p.sqrt(), phase0 * pi),
            ComplexAmp::from_polar((1.0 - p).sqrt(), phase1 * pi),
        )
    }

    /// `R_Y(θ)|0⟩`
    pub fn from_angle(theta: f64) -> Result<Self> {
        Qmf::new(StateVector::zero(1)?.apply(Gate::RotY(theta), &[0])?)
    }

    pub fn from_membership(mu: Membership) -> Result<Self> {
        Qmf::from_angle(rotation_angle(mu))
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn into_state(self) -> StateVector {
        self.state
    }

    pub fn arity(&self) -> usize {
        self.state.n_qubits()
    }

    pub fn designated_qubit(&self) -> usize {
        self.designated_qubit
    }

    /// Probability of observing `|0⟩` on the designated wire.
    pub fn prob_zero(&self) -> f64 {
        self.state
            .measure_prob(self.designated_qubit, false)
            .expect("designated qubit is in range")
    }

    fn require_fresh(&self) -> Result<()> {
        if self.arity() != 1 {
            return Err(Error::QmfArity {
                expected: 1,
                got: self.arity(),
            });
        }
        Ok(())
    }

    fn complement(&self) -> Result<Qmf> {
        self.require_fresh()?;
        Qmf::new(self.state.apply(Gate::PauliX, &[0])?)
    }
}

/// Intersection gadget: `CCNOT((X ⊗ X ⊗ I)|ψ1⟩|ψ2⟩|1⟩)`.
fn intersect_qmf(first: &Qmf, second: &Qmf) -> Result<Qmf> {
    first.require_fresh()?;
    second.require_fresh()?;
    let input = first
        .state
        .tensor(&second.state)?
        .tensor(&StateVector::from_bits("1")?)?;
    let mut circuit = Circuit::new(3);
    circuit
        .push(Gate::PauliX, &[0])?
        .push(Gate::PauliX, &[1])?
        .push(Gate::Ccnot, &[0, 1, 2])?;
    Qmf::new(circuit.run(&input)?)
}

/// Union gadget: `CCNOT(|ψ1⟩|ψ2⟩|0⟩)`.
fn union_qmf(first: &Qmf, second: &Qmf) -> Result<Qmf> {
    first.require_fresh()?;
    second.require_fresh()?;
    let input = first
        .state
        .tensor(&second.state)?
        .tensor(&StateVector::zero(1)?)?;
    let mut circuit = Circuit::new(3);
    circuit.push(Gate::Ccnot, &[0, 1, 2])?;
    Qmf::new(circuit.run(&input)?)
}

/// A quantum Z-number, optionally tagged with the universe element it describes.
#[derive(Debug, Clone, PartialEq)]
pub struct Qzn {
    pub a: Qmf,
    pub b: Qmf,
    label: Option<String>,
    label_conflict: bool,
}

impl Qzn {
    pub fn new(a: Qmf, b: Qmf) -> Result<Self> {
        if a.arity() != b.arity() {
            return Err(Error::QmfArity {
                expected: a.arity(),
                got: b.arity(),
            });
        }
        Ok(Qzn {
            a,
            b,
            label: None,
            label_conflict: false,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Set when a binary operation combined QZNs carrying different labels.
    pub fn label_conflict(&self) -> bool {
        self.label_conflict
    }

    pub fn arity(&self) -> usize {
        self.a.arity()
    }

    /// Converts a classical Z-number by rotating `|0⟩` through `R_Y(θ)` with
    /// `θ = 2·arccos(√μ)` for each component.
    pub fn from_z(z: ZNumber) -> Result<Self> {
        Qzn::from_angles(rotation_angle(z.a), rotation_angle(z.b))
    }

    pub fn from_angles(theta_a: f64, theta_b: f64) -> Result<Self> {
        Qzn::new(Qmf::from_angle(theta_a)?, Qmf::from_angle(theta_b)?)
    }

    /// `(p(|0⟩_a), p(|0⟩_b))`
    pub fn prob_zero(&self) -> (f64, f64) {
        (self.a.prob_zero(), self.b.prob_zero())
    }

    /// Reads the membership probabilities back as a classical Z-number.
    pub fn degenerate(&self) -> Result<ZNumber> {
        let (a, b) = self.prob_zero();
        ZNumber::new(a.clamp(0.0, 1.0), b.clamp(0.0, 1.0))
    }

    /// `self ⊆ other`: both membership probabilities no larger than the other's.
    pub fn includes(&self, other: &Qzn) -> Result<bool> {
        self.check_same_arity(other)?;
        let (a1, b1) = self.prob_zero();
        let (a2, b2) = other.prob_zero();
        Ok(a1 <= a2 + PROB_TOLERANCE && b1 <= b2 + PROB_TOLERANCE)
    }

    /// Mutual inclusion.
    pub fn equals(&self, other: &Qzn) -> Result<bool> {
        Ok(self.includes(other)? && other.includes(self)?)
    }

    /// Pauli-X on both QMFs. Defined on fresh (one-qubit) QZNs only.
    pub fn complement(&self) -> Result<Qzn> {
        Ok(Qzn {
            a: self.a.complement()?,
            b: self.b.complement()?,
            label: self.label.clone(),
            label_conflict: self.label_conflict,
        })
    }

    /// Component-wise intersection states; membership reads as `x·y` for real inputs.
    pub fn intersect(&self, other: &Qzn) -> Result<Qzn> {
        let (label, label_conflict) = self.merge_labels(other);
        Ok(Qzn {
            a: intersect_qmf(&self.a, &other.a)?,
            b: intersect_qmf(&self.b, &other.b)?,
            label,
            label_conflict,
        })
    }

    /// Component-wise union states; membership reads as `x + y - x·y` for real inputs.
    pub fn union(&self, other: &Qzn) -> Result<Qzn> {
        let (label, label_conflict) = self.merge_labels(other);
        Ok(Qzn {
            a: union_qmf(&self.a, &other.a)?,
            b: union_qmf(&self.b, &other.b)?,
            label,
            label_conflict,
        })
    }

    /// Fuses restriction and reliability into one three-qubit state.
    pub fn combine(&self) -> Result<CQzn> {
        Ok(CQzn {
            combined: intersect_qmf(&self.a, &self.b)?,
            label: self.label.clone(),
        })
    }

    fn check_same_arity(&self, other: &Qzn) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::QmfArity {
                expected: self.arity(),
                got: other.arity(),
            });
        }
        Ok(())
    }

    fn merge_labels(&self, other: &Qzn) -> (Option<String>, bool) {
        let conflict = self.label_conflict
            || other.label_conflict
            || matches!((&self.label, &other.label), (Some(x), Some(y)) if x != y);
        (self.label.clone().or_else(|| other.label.clone()), conflict)
    }
}

/// A combined QZN: one three-qubit state per element.
#[derive(Debug, Clone, PartialEq)]
pub struct CQzn {
    pub combined: Qmf,
    label: Option<String>,
}

impl CQzn {
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn prob_zero(&self) -> f64 {
        self.combined.prob_zero()
    }

    pub fn prob_one(&self) -> f64 {
        self.combined
            .state()
            .measure_prob(self.combined.designated_qubit(), true)
            .expect("designated qubit is in range")
    }

    pub fn into_state(self) -> StateVector {
        self.combined.into_state()
    }
}

fn write_amp(f: &mut fmt::Formatter<'_>, amp: ComplexAmp) -> fmt::Result {
    let (r, theta) = amp.to_polar();
    let turns = (theta / std::f64::consts::PI).rem_euclid(2.0);
    if turns.abs() < 5e-5 || (2.0 - turns).abs() < 5e-5 {
        write!(f, "{r:.4}")
    } else {
        write!(f, "{r:.4}·e^{{i{turns:.4}π}}")
    }
}

impl fmt::Display for Qmf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.arity();
        let mut first = true;
        for (i, amp) in self.state.amplitudes().iter().enumerate() {
            if amp.norm_sqr() < 1e-24 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write_amp(f, *amp)?;
            write!(f, "|{i:0n$b}>")?;
        }
        Ok(())
    }
}

impl fmt::Display for Qzn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.a, self.b)
    }
}

impl fmt::Display for CQzn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.combined)
    }
}

/// Amplitude formulas for the derived states, independent of the circuit path.
pub mod closed_form {
    use super::*;

    fn amps(q: &Qmf) -> Result<(ComplexAmp, ComplexAmp)> {
        q.require_fresh()?;
        let s = q.state();
        Ok((s.amplitude(0), s.amplitude(1)))
    }

    fn place(entries: [(usize, ComplexAmp); 4]) -> Result<StateVector> {
        let mut v = vec![ComplexAmp::new(0.0, 0.0); 8];
        for (index, amp) in entries {
            v[index] = amp;
        }
        StateVector::from_amplitudes(v)
    }

    /// `α1α2|110⟩ + α1β2|101⟩ + β1α2|011⟩ + β1β2|001⟩`
    pub fn intersection(first: &Qmf, second: &Qmf) -> Result<StateVector> {
        let ((a1, b1), (a2, b2)) = (amps(first)?, amps(second)?);
        place([
            (0b110, a1 * a2),
            (0b101, a1 * b2),
            (0b011, b1 * a2),
            (0b001, b1 * b2),
        ])
    }

    /// `α1α2|000⟩ + α1β2|010⟩ + β1α2|100⟩ + β1β2|111⟩`
    pub fn union(first: &Qmf, second: &Qmf) -> Result<StateVector> {
        let ((a1, b1), (a2, b2)) = (amps(first)?, amps(second)?);
        place([
            (0b000, a1 * a2),
            (0b010, a1 * b2),
            (0b100, b1 * a2),
            (0b111, b1 * b2),
        ])
    }

    /// Same layout as [`intersection`], applied to a QZN's own two components.
    pub fn combined(z: &Qzn) -> Result<StateVector> {
        intersection(&z.a, &z.b)
    }

    /// `√(xy)|110⟩ + √(x(1-y))|101⟩ + √((1-x)y)|011⟩ + √((1-x)(1-y))|001⟩`
    pub fn combined_real(z: ZNumber) -> Result<StateVector> {
        let (x, y) = (z.a.value(), z.b.value());
        let mut v = [0.0; 8];
        v[0b110] = (x * y).sqrt();
        v[0b101] = (x * (1.0 - y)).sqrt();
        v[0b011] = ((1.0 - x) * y).sqrt();
        v[0b001] = ((1.0 - x) * (1.0 - y)).sqrt();
        StateVector::from_real(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn z(a: f64, b: f64) -> ZNumber {
        ZNumber::new(a, b).unwrap()
    }

    fn qz(a: f64, b: f64) -> Qzn {
        Qzn::from_z(z(a, b)).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    fn states_close(x: &StateVector, y: &StateVector, tol: f64) -> bool {
        x.n_qubits() == y.n_qubits()
            && x.amplitudes()
                .iter()
                .zip(y.amplitudes())
                .all(|(p, q)| (p - q).norm() < tol)
    }

    fn phased(pa: f64, fa0: f64, fa1: f64, pb: f64, fb0: f64, fb1: f64) -> Qzn {
        Qzn::new(
            Qmf::from_polar(pa, fa0, fa1).unwrap(),
            Qmf::from_polar(pb, fb0, fb1).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn from_z_half_and_three_quarters() {
        let zz = z(0.5, 0.75);
        assert!((rotation_angle(zz.a) - PI / 2.0).abs() < 1e-12);
        assert!((rotation_angle(zz.b) - PI / 3.0).abs() < 1e-12);
        let q = Qzn::from_z(zz).unwrap();
        assert!(close(q.a.state().amplitude(0).re, 0.5f64.sqrt()));
        assert!(close(q.a.state().amplitude(1).re, 0.5f64.sqrt()));
        assert!(close(q.b.state().amplitude(0).re, 0.75f64.sqrt()));
        assert!(close(q.b.state().amplitude(1).re, 0.25f64.sqrt()));
    }

    #[test]
    fn from_z_full_membership_is_ground_state() {
        let q = qz(1.0, 1.0);
        assert_eq!(rotation_angle(Membership::ONE), 0.0);
        assert_eq!(q.a.state(), &StateVector::zero(1).unwrap());
        assert_eq!(q.b.state(), &StateVector::zero(1).unwrap());
    }

    #[test]
    fn rotation_angles_in_degrees() {
        let deg = |mu: f64| rotation_angle(Membership::new(mu).unwrap()).to_degrees();
        assert!((deg(0.35) - 107.458).abs() < 5e-4);
        assert!((deg(0.77) - 57.316).abs() < 5e-4);
        assert!((deg(0.0) - 180.0).abs() < 1e-12);
    }

    #[test]
    fn prob_zero_ignores_phases() {
        let q = Qmf::from_polar(0.3, 0.7, 1.5).unwrap();
        assert!(close(q.prob_zero(), 0.3));
        assert_eq!(
            Qmf::new(StateVector::zero(1).unwrap()).unwrap().prob_zero(),
            1.0
        );
        let c = qz(0.5, 0.75).combine().unwrap();
        assert!(close(c.prob_zero(), 0.375));
    }

    #[test]
    fn inclusion_with_phase_decorated_qzns() {
        let z1 = phased(0.3, 0.7, 1.5, 0.6, 0.9, 0.3);
        let z2 = phased(0.4, 0.6, 0.2, 0.7, 0.5, 0.4);
        assert!(z1.includes(&z2).unwrap());
        assert!(!z2.includes(&z1).unwrap());
        assert!(z1.includes(&z1).unwrap());
        assert!(!z1.equals(&z2).unwrap());
    }

    #[test]
    fn equality_with_different_phases() {
        let z1 = phased(0.3, 0.7, 1.5, 0.6, 0.9, 0.3);
        let z2 = phased(0.3, 0.6, 0.2, 0.6, 0.5, 0.4);
        assert!(z1.equals(&z2).unwrap());
        assert!(z2.equals(&z2).unwrap());
    }

    #[test]
    fn inclusion_rejects_arity_mismatch() {
        let fresh = qz(0.3, 0.4);
        let wide = fresh.intersect(&fresh).unwrap();
        assert!(matches!(
            fresh.includes(&wide).unwrap_err(),
            Error::QmfArity { .. }
        ));
    }

    #[test]
    fn complement_swaps_amplitudes() {
        let c = qz(0.3, 0.6).complement().unwrap();
        let (a, b) = c.prob_zero();
        assert!(close(a, 0.7) && close(b, 0.4));
        assert!(close(c.a.state().amplitude(0).re, 0.7f64.sqrt()));
        assert!(close(c.b.state().amplitude(1).re, 0.6f64.sqrt()));
        let (a, b) = qz(0.5, 0.5).complement().unwrap().prob_zero();
        assert!(close(a, 0.5) && close(b, 0.5));
        let q = qz(0.21, 0.93);
        assert!(q
            .complement()
            .unwrap()
            .complement()
            .unwrap()
            .equals(&q)
            .unwrap());
    }

    #[test]
    fn complement_rejects_derived_qzns() {
        let q = qz(0.3, 0.6);
        let wide = q.union(&q).unwrap();
        assert_eq!(
            wide.complement().unwrap_err(),
            Error::QmfArity {
                expected: 1,
                got: 3
            }
        );
        assert!(wide.intersect(&wide).is_err());
        assert!(wide.combine().is_err());
    }

    #[test]
    fn intersection_examples() {
        let (a, b) = qz(0.35, 0.77)
            .intersect(&qz(0.41, 0.83))
            .unwrap()
            .prob_zero();
        assert!(close(a, 0.1435) && close(b, 0.6391));
        let (a, b) = qz(0.27, 0.64).intersect(&qz(1.0, 1.0)).unwrap().prob_zero();
        assert!(close(a, 0.27) && close(b, 0.64));
    }

    #[test]
    fn union_examples() {
        let (a, b) = qz(0.35, 0.77).union(&qz(0.41, 0.83)).unwrap().prob_zero();
        assert!(close(a, 0.6165) && close(b, 0.9609));
        let (a, b) = qz(0.27, 0.64).union(&qz(0.0, 0.0)).unwrap().prob_zero();
        assert!(close(a, 0.27) && close(b, 0.64));
    }

    #[test]
    fn combine_examples() {
        let c = qz(1.0, 1.0).combine().unwrap();
        assert!(states_close(
            c.combined.state(),
            &StateVector::from_bits("110").unwrap(),
            1e-12
        ));
        let c = qz(0.35, 0.77).combine().unwrap();
        assert!(close(c.prob_zero(), 0.2695));
        assert!(close(c.prob_one(), 1.0 - 0.2695));
    }

    #[test]
    fn labels_are_carried_and_conflicts_flagged() {
        let x = qz(0.3, 0.4).with_label("phi1");
        let y = qz(0.5, 0.6).with_label("phi2");
        let same = x.intersect(&qz(0.2, 0.2).with_label("phi1")).unwrap();
        assert_eq!(same.label(), Some("phi1"));
        assert!(!same.label_conflict());
        let mixed = x.union(&y).unwrap();
        assert_eq!(mixed.label(), Some("phi1"));
        assert!(mixed.label_conflict());
        assert_eq!(x.complement().unwrap().label(), Some("phi1"));
        assert_eq!(x.combine().unwrap().label(), Some("phi1"));
    }

    #[test]
    fn qmf_rejects_two_qubit_states() {
        assert!(Qmf::new(StateVector::zero(2).unwrap()).is_err());
        assert!(Qmf::from_polar(1.3, 0.0, 0.0).is_err());
    }

    #[test]
    fn display_uses_polar_form() {
        let q = phased(0.3, 0.7, 1.5, 0.6, 0.9, 0.3);
        assert_eq!(
            q.to_string(),
            "<0.5477·e^{i0.7000π}|0>+0.8367·e^{i1.5000π}|1>, \
             0.7746·e^{i0.9000π}|0>+0.6325·e^{i0.3000π}|1>>"
        );
        assert_eq!(qz(0.5, 1.0).to_string(), "<0.7071|0>+0.7071|1>, 1.0000|0>>");
        assert_eq!(qz(1.0, 1.0).combine().unwrap().to_string(), "<1.0000|110>>");
    }

    fn unit() -> impl Strategy<Value = f64> {
        0.0..=1.0f64
    }

    fn phase() -> impl Strategy<Value = f64> {
        0.0..2.0f64
    }

    proptest! {
        #[test]
        fn circuits_match_closed_form(
            x in (unit(), phase(), phase()),
            y in (unit(), phase(), phase()),
        ) {
            let first = Qmf::from_polar(x.0, x.1, x.2).unwrap();
            let second = Qmf::from_polar(y.0, y.1, y.2).unwrap();
            let zq = Qzn::new(first.clone(), second.clone()).unwrap();
            prop_assert!(states_close(
                intersect_qmf(&first, &second).unwrap().state(),
                &closed_form::intersection(&first, &second).unwrap(),
                1e-12,
            ));
            prop_assert!(states_close(
                union_qmf(&first, &second).unwrap().state(),
                &closed_form::union(&first, &second).unwrap(),
                1e-12,
            ));
            prop_assert!(states_close(
                zq.combine().unwrap().combined.state(),
                &closed_form::combined(&zq).unwrap(),
                1e-12,
            ));
        }

        #[test]
        fn combined_real_formula_matches_circuit(a in unit(), b in unit()) {
            let zz = z(a, b);
            prop_assert!(states_close(
                Qzn::from_z(zz).unwrap().combine().unwrap().combined.state(),
                &closed_form::combined_real(zz).unwrap(),
                1e-12,
            ));
        }

        #[test]
        fn prob_zero_is_phase_invariant(p in unit(), f0 in phase(), f1 in phase()) {
            let base = Qmf::from_polar(p, 0.0, 0.0).unwrap();
            let rotated = Qmf::from_polar(p, f0, f1).unwrap();
            prop_assert!((base.prob_zero() - rotated.prob_zero()).abs() < 1e-12);
        }

        #[test]
        fn from_z_round_trips(a in unit(), b in unit()) {
            let (pa, pb) = Qzn::from_z(z(a, b)).unwrap().prob_zero();
            prop_assert!((pa - a).abs() < 1e-12 && (pb - b).abs() < 1e-12);
        }

        #[test]
        fn includes_is_a_preorder(
            p in prop::collection::vec((unit(), unit()), 3),
        ) {
            let q: Vec<Qzn> = p.iter().map(|&(a, b)| qz(a, b)).collect();
            prop_assert!(q[0].includes(&q[0]).unwrap());
            if q[0].includes(&q[1]).unwrap() && q[1].includes(&q[2]).unwrap() {
                prop_assert!(q[0].includes(&q[2]).unwrap());
            }
            prop_assert_eq!(q[0].equals(&q[1]).unwrap(), q[1].equals(&q[0]).unwrap());
        }
    }
}
