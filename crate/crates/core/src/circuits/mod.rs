//! Limited-space circuits: one computational qubit acted on by single-qubit
//! gates, each controlled by at most one read-only input bit.

mod builders;
mod compile;
mod gate;
mod io;

pub use builders::{
    builtin_slsb3_fig1, fig1_caption, ip_circuit, slsb_relative, slsb_true, slsb_true_unmerged,
    CompositeOrder,
};
pub use compile::{compile_qsp, merge_adjacent, merge_neighbours, MERGE_TOLERANCE};
pub use gate::{format_angle, GateKind, GateSpec};
pub use io::{CircuitJson, GateJson};

pub use crate::unitary::Unitary2;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Gates are listed in time order; `V(x) = V_L(x)···V_1(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitedSpaceCircuit<T> {
    n: usize,
    gates: Vec<GateSpec<T>>,
    pub phase_convention: String,
}

impl<T: Real> LimitedSpaceCircuit<T> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            gates: Vec::new(),
            phase_convention: String::new(),
        }
    }

    pub fn from_gates(n: usize, gates: Vec<GateSpec<T>>) -> Result<Self> {
        let mut c = Self::new(n);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn with_convention(mut self, note: impl Into<String>) -> Self {
        self.phase_convention = note.into();
        self
    }

    pub fn push(&mut self, gate: GateSpec<T>) -> Result<()> {
        if let Some(j) = gate.control {
            if j >= self.n {
                return Err(Error::MalformedCircuit(format!(
                    "gate {:?} controlled by x{} in a circuit on {} inputs",
                    gate.label,
                    j + 1,
                    self.n
                )));
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn controlled(&mut self, j: usize, kind: GateKind<T>) -> Result<()> {
        self.push(GateSpec::controlled(j, kind))
    }

    pub fn uncontrolled(&mut self, kind: GateKind<T>) {
        self.gates.push(GateSpec::uncontrolled(kind));
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[GateSpec<T>] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn entangling_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_entangling()).count()
    }

    /// `V(x)` for input index `x` (bit `i` is `x_{i+1}`).
    pub fn unitary(&self, x: usize) -> Unitary2<T> {
        self.gates
            .iter()
            .filter_map(|g| g.on_input(x))
            .fold(Unitary2::identity(), |acc, u| u * acc)
    }

    pub fn cast<U: Real>(&self) -> LimitedSpaceCircuit<U> {
        LimitedSpaceCircuit {
            n: self.n,
            gates: self
                .gates
                .iter()
                .map(|g| GateSpec {
                    control: g.control,
                    kind: match g.kind {
                        GateKind::Rx(a) => GateKind::Rx(U::lit(a.as_f64())),
                        GateKind::Ry(a) => GateKind::Ry(U::lit(a.as_f64())),
                        GateKind::Rz(a) => GateKind::Rz(U::lit(a.as_f64())),
                        GateKind::H => GateKind::H,
                        GateKind::X => GateKind::X,
                        GateKind::Z => GateKind::Z,
                        GateKind::S => GateKind::S,
                        GateKind::Matrix(m) => GateKind::Matrix(m.cast()),
                    },
                    label: g.label.clone(),
                })
                .collect(),
            phase_convention: self.phase_convention.clone(),
        }
    }
}

pub fn entangling_count<T: Real>(c: &LimitedSpaceCircuit<T>) -> usize {
    c.entangling_count()
}
