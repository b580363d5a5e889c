//! Quantum Z-numbers on a small state-vector simulator, with a fidelity-based
//! multi-attribute decision pipeline and its classical baselines.

pub mod baselines;
pub mod cost;
pub mod error;
pub mod fidelity;
pub mod fuzzy;
pub mod madm;
pub mod quantum;
pub mod qzn;
pub mod replay;

pub use error::{Error, Result};
pub use fidelity::{FidelityMode, SwapTestResult};
pub use fuzzy::{Membership, MembershipProfile, ZNumber};
pub use madm::{AngleMatrix, Decision, DecisionReport, FidelityMatrix, ZMatrix};
pub use quantum::{Capacity, Circuit, ComplexAmp, Gate, StateVector};
pub use qzn::{CQzn, Qmf, Qzn};
