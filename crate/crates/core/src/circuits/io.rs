use std::fmt::Write as _;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::gate::{default_label, format_angle, GateKind, GateSpec};
use super::LimitedSpaceCircuit;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::unitary::Unitary2;

/// Wire form of one gate. `control` is 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateJson {
    #[serde(default)]
    pub control: Option<usize>,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<[[f64; 2]; 4]>,
    #[serde(default)]
    pub label: String,
}

/// Wire form of a circuit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircuitJson {
    pub n: usize,
    pub gates: Vec<GateJson>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub phase_convention: String,
}

impl CircuitJson {
    pub fn from_circuit<T: Real>(c: &LimitedSpaceCircuit<T>) -> Self {
        let gates = c
            .gates()
            .iter()
            .map(|g| {
                let matrix = match g.kind {
                    GateKind::Matrix(m) => {
                        let e = |z: Complex<T>| [z.re.as_f64(), z.im.as_f64()];
                        Some([e(m.m[0][0]), e(m.m[0][1]), e(m.m[1][0]), e(m.m[1][1])])
                    }
                    _ => None,
                };
                GateJson {
                    control: g.control.map(|j| j + 1),
                    name: g.kind.name().to_string(),
                    angle: g.kind.angle().map(|a| a.as_f64()),
                    matrix,
                    label: g.label.clone(),
                }
            })
            .collect();
        Self {
            n: c.arity(),
            gates,
            phase_convention: c.phase_convention.clone(),
        }
    }

    pub fn to_circuit<T: Real>(&self) -> Result<LimitedSpaceCircuit<T>> {
        let mut c = LimitedSpaceCircuit::new(self.n).with_convention(self.phase_convention.clone());
        for (i, g) in self.gates.iter().enumerate() {
            let bad = |msg: &str| Error::MalformedCircuit(format!("gate {i}: {msg}"));
            let angle = || {
                g.angle
                    .map(T::lit)
                    .ok_or_else(|| bad(&format!("'{}' needs an angle", g.name)))
            };
            let kind = match g.name.as_str() {
                "rx" => GateKind::Rx(angle()?),
                "ry" => GateKind::Ry(angle()?),
                "rz" => GateKind::Rz(angle()?),
                "h" => GateKind::H,
                "x" => GateKind::X,
                "z" => GateKind::Z,
                "s" => GateKind::S,
                "matrix" => {
                    let m = g.matrix.ok_or_else(|| bad("'matrix' needs entries"))?;
                    let e = |k: usize| Complex::new(T::lit(m[k][0]), T::lit(m[k][1]));
                    let u = Unitary2::new([[e(0), e(1)], [e(2), e(3)]]);
                    if u.unitarity_defect() > T::tol(1e-10) {
                        return Err(bad("matrix is not unitary"));
                    }
                    GateKind::Matrix(u)
                }
                other => return Err(bad(&format!("unknown gate name '{other}'"))),
            };
            let control = match g.control {
                Some(0) => return Err(bad("controls are numbered from 1")),
                Some(j) => Some(j - 1),
                None => None,
            };
            let label = if g.label.is_empty() { default_label(&kind) } else { g.label.clone() };
            c.push(GateSpec::new(control, kind, label))?;
        }
        Ok(c)
    }
}

impl<T: Real> LimitedSpaceCircuit<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CircuitJson::from_circuit(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<CircuitJson>(text)?.to_circuit()
    }

    /// QASM-style listing: inputs are `in[0..n)`, the computational qubit is
    /// `anc`. Explicit matrices are written as `u(θ,φ,λ)` with a `gphase`
    /// comment when a global phase remains.
    pub fn to_qasm(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "OPENQASM 3.0;");
        let _ = writeln!(s, "qubit[{}] in;", self.arity());
        let _ = writeln!(s, "qubit anc;");
        for g in self.gates() {
            let (prefix, target) = match g.control {
                Some(j) => ("c", format!("in[{j}], anc")),
                None => ("", "anc".to_string()),
            };
            let op = match g.kind {
                GateKind::Matrix(m) => {
                    let (theta, phi, lambda, gamma) = zyz(&m.cast::<f64>());
                    let args = [theta, phi, lambda].map(format_angle).join(", ");
                    if gamma.abs() > 1e-12 {
                        if g.control.is_some() {
                            format!("u({args}, {})", format_angle(gamma))
                        } else {
                            format!("u({args}) /* gphase {} */", format_angle(gamma))
                        }
                    } else {
                        format!("u({args})")
                    }
                }
                k => match k.angle() {
                    Some(a) => format!("{}({})", k.name(), format_angle(a.as_f64())),
                    None => k.name().to_string(),
                },
            };
            let _ = writeln!(s, "{prefix}{op} {target}; // {}", g.label);
        }
        s
    }
}

/// `m = e^{iγ} U(θ, φ, λ)` with
/// `U = [[cos θ/2, −e^{iλ} sin θ/2], [e^{iφ} sin θ/2, e^{i(φ+λ)} cos θ/2]]`.
fn zyz(m: &Unitary2<f64>) -> (f64, f64, f64, f64) {
    let [[a, b], [c, d]] = m.m;
    let theta = 2.0 * c.norm().atan2(a.norm());
    let (gamma, phi, lambda);
    if a.norm() > 1e-12 && c.norm() > 1e-12 {
        gamma = a.arg();
        phi = c.arg() - gamma;
        lambda = (-b).arg() - gamma;
    } else if c.norm() <= 1e-12 {
        gamma = a.arg();
        phi = 0.0;
        lambda = d.arg() - gamma;
    } else {
        gamma = (-b).arg();
        lambda = 0.0;
        phi = c.arg() - gamma;
    }
    (theta, phi, lambda, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{builtin_slsb3_fig1, ip_circuit, slsb_true};

    fn u3(theta: f64, phi: f64, lambda: f64, gamma: f64) -> Unitary2<f64> {
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let e = |t: f64| Complex::from_polar(1.0, t);
        Unitary2::new([
            [Complex::new(c, 0.0), -e(lambda) * s],
            [e(phi) * s, e(phi + lambda) * c],
        ])
        .scale(e(gamma))
    }

    #[test]
    fn json_round_trip_is_exact() {
        for c in [
            builtin_slsb3_fig1::<f64>(),
            slsb_true(4).unwrap(),
            ip_circuit(4).unwrap(),
        ] {
            let text = c.to_json();
            let back = LimitedSpaceCircuit::<f64>::from_json(&text).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn json_uses_one_based_controls() {
        let mut c = LimitedSpaceCircuit::<f64>::new(2);
        c.controlled(1, GateKind::Rx(0.5)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["gates"][0]["control"], 2);
        assert_eq!(v["gates"][0]["name"], "rx");
        assert!(v["gates"][0]["matrix"].is_null());
    }

    #[test]
    fn malformed_json_is_rejected() {
        let zero = r#"{"n":2,"gates":[{"control":0,"name":"x","angle":null,"matrix":null,"label":"x"}]}"#;
        let high = r#"{"n":2,"gates":[{"control":3,"name":"x","angle":null,"matrix":null,"label":"x"}]}"#;
        let name = r#"{"n":2,"gates":[{"control":null,"name":"t","angle":null,"matrix":null,"label":"t"}]}"#;
        let angle = r#"{"n":2,"gates":[{"control":null,"name":"rx","angle":null,"matrix":null,"label":""}]}"#;
        let nonunitary = r#"{"n":1,"gates":[{"control":null,"name":"matrix","angle":null,"matrix":[[1,0],[1,0],[0,0],[1,0]],"label":""}]}"#;
        for t in [zero, high, name, angle, nonunitary, "{"] {
            assert!(LimitedSpaceCircuit::<f64>::from_json(t).is_err(), "{t}");
        }
    }

    #[test]
    fn zyz_reconstructs() {
        let samples = [
            Unitary2::h(),
            Unitary2::x(),
            Unitary2::s(),
            Unitary2::<f64>::rx(0.7) * Unitary2::rz(-1.3),
            Unitary2::y(),
        ];
        for m in samples {
            let (t, p, l, g) = zyz(&m);
            assert!(u3(t, p, l, g).dist(&m) < 1e-12);
        }
    }

    #[test]
    fn qasm_listing() {
        let mut c = LimitedSpaceCircuit::<f64>::new(4);
        c.controlled(3, GateKind::Rx(std::f64::consts::FRAC_PI_2)).unwrap();
        c.uncontrolled(GateKind::H);
        let q = c.to_qasm();
        assert!(q.contains("crx(pi/2) in[3], anc;"));
        assert!(q.contains("h anc;"));
        let fig = builtin_slsb3_fig1::<f64>().to_qasm();
        assert_eq!(fig.lines().filter(|l| l.starts_with("crx")).count(), 8);
    }
}
