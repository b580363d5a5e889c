//! Classical fuzzy values: memberships, Z-numbers, and the algebraic
//! product/sum operator family.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{Capacity, ComplexAmp, StateVector};

/// A membership degree in `[0, 1]`. Out-of-range values are rejected, never clamped.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Membership(f64);

impl Membership {
    pub const ZERO: Membership = Membership(0.0);
    pub const ONE: Membership = Membership(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::InvalidMembership(value));
        }
        Ok(Membership(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - x`
    pub fn complement(self) -> Membership {
        complement(self)
    }
}

impl TryFrom<f64> for Membership {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Membership::new(value)
    }
}

impl From<Membership> for f64 {
    fn from(m: Membership) -> f64 {
        m.0
    }
}

/// Standard fuzzy complement `C(x) = 1 - x`.
pub fn complement(x: Membership) -> Membership {
    Membership(1.0 - x.0)
}

/// Algebraic product t-norm `I(x, y) = xy`.
pub fn t_norm(x: Membership, y: Membership) -> Membership {
    Membership(x.0 * y.0)
}

/// Algebraic sum t-conorm `U(x, y) = x + y - xy`.
pub fn t_conorm(x: Membership, y: Membership) -> Membership {
    Membership((x.0 + y.0 - x.0 * y.0).clamp(0.0, 1.0))
}

/// A classical Z-number: fuzzy restriction `a` with reliability `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZNumber {
    pub a: Membership,
    pub b: Membership,
}

impl ZNumber {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        Ok(ZNumber {
            a: Membership::new(a)?,
            b: Membership::new(b)?,
        })
    }
}

impl std::fmt::Display for ZNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{}, {}>", self.a.value(), self.b.value())
    }
}

/// Membership values `f(x_1), …, f(x_N)` over a finite universe.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipProfile(Vec<Membership>);

impl MembershipProfile {
    pub fn new(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("membership profile"));
        }
        values
            .iter()
            .map(|&v| Membership::new(v))
            .collect::<Result<Vec<_>>>()
            .map(MembershipProfile)
    }

    pub fn values(&self) -> &[Membership] {
        &self.0
    }
}

/// Product state `⊗_j (√(1-f_j)|0⟩ + √f_j|1⟩)` of a membership profile.
///
/// Membership sits on `|1⟩` here, the opposite of the Z-number conversion in
/// [`crate::qzn::Qzn::from_z`], which puts `√μ` on `|0⟩`.
pub fn qfs_state(profile: &MembershipProfile) -> Result<StateVector> {
    Capacity::default().check(profile.0.len())?;
    let qubits = profile
        .0
        .iter()
        .map(|m| {
            let f = m.value();
            StateVector::qubit(
                ComplexAmp::new((1.0 - f).sqrt(), 0.0),
                ComplexAmp::new(f.sqrt(), 0.0),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    StateVector::tensor_all(&qubits, Capacity::default())
}
