use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamFamily {
    General,
    Majority,
    Custom,
}

/// Signal angles `φ_x = Δ·|x| − δ` and the sequence length `L`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignalParams<T> {
    pub delta_step: T,
    pub delta_offset: T,
    pub length: usize,
    pub family: ParamFamily,
}

impl<T: Real> SignalParams<T> {
    pub fn new(delta_step: T, delta_offset: T, length: usize) -> Result<Self> {
        if length.is_multiple_of(2) {
            return Err(Error::OutOfRange(format!("sequence length must be odd, got {length}")));
        }
        Ok(Self {
            delta_step,
            delta_offset,
            length,
            family: ParamFamily::Custom,
        })
    }

    /// `Δ = 2π/(2n+1)`, `δ = 0`, `L = 4n+1`: the weight points and their mirror
    /// images form an equispaced grid on the full circle.
    pub fn general(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ArityOutOfRange { n, min: 1, max: usize::MAX });
        }
        Ok(Self {
            delta_step: T::TAU() / T::from_usize_lossy(2 * n + 1),
            delta_offset: T::zero(),
            length: 4 * n + 1,
            family: ParamFamily::General,
        })
    }

    /// `Δ = 2π/(n+1)`, `δ = (π/2)(n−1)/(n+1)`, `L = 2n+1`, odd `n`.
    pub fn majority(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::ArityParity {
                what: "majority signal parameters",
                parity: "odd",
                n,
            });
        }
        let np1 = T::from_usize_lossy(n + 1);
        Ok(Self {
            delta_step: T::TAU() / np1,
            delta_offset: T::FRAC_PI_2() * T::from_usize_lossy(n - 1) / np1,
            length: 2 * n + 1,
            family: ParamFamily::Majority,
        })
    }

    pub fn with_length(self, length: usize) -> Result<Self> {
        if length.is_multiple_of(2) {
            return Err(Error::OutOfRange(format!("sequence length must be odd, got {length}")));
        }
        Ok(Self { length, ..self })
    }

    /// `φ_w = Δ·w − δ`.
    pub fn phi(&self, weight: usize) -> T {
        self.delta_step * T::from_usize_lossy(weight) - self.delta_offset
    }
}

pub fn signal_params_general<T: Real>(n: usize) -> Result<SignalParams<T>> {
    SignalParams::general(n)
}

pub fn signal_params_maj<T: Real>(n: usize) -> Result<SignalParams<T>> {
    SignalParams::majority(n)
}
