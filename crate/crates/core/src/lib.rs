//! One-bit and one-qubit computations with read-only access to the input.
//!
//! * [`boolfun`]: truth tables, Walsh spectra and the classical ratio bounds.
//! * [`classical`]: exact approximation ratios of width-2 programs.
//! * [`qsp`]: symmetric functions through quantum signal processing.
//! * [`circuits`]: the single-qubit circuit model, constructions and merging.
//! * [`simulate`]: exact simulation, gate-failure noise and the determinant certificate.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar for everyday use.

pub mod boolfun;
pub mod circuits;
pub mod classical;
pub mod error;
pub mod qsp;
pub mod scalar;
pub mod simulate;
pub mod unitary;

pub use boolfun::{BooleanFunction, SymmetricSpec};
pub use error::{Error, Result};
pub use scalar::Real;

pub type Circuit = circuits::LimitedSpaceCircuit<f64>;
pub type Circuit32 = circuits::LimitedSpaceCircuit<f32>;
pub type Gate = circuits::GateSpec<f64>;
pub type Unitary = unitary::Unitary2<f64>;
pub type Unitary32 = unitary::Unitary2<f32>;
pub type Angles = qsp::AngleSequence<f64>;
pub type Params = qsp::SignalParams<f64>;
pub type Synthesis = qsp::QspSynthesis<f64>;
pub type Simulation = simulate::SimulationResult<f64>;
pub type Certificate = simulate::DeterminantCertificate<f64>;
