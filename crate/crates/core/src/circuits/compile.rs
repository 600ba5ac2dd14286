use super::gate::{GateKind, GateSpec};
use super::LimitedSpaceCircuit;
use crate::boolfun::SymmetricSpec;
use crate::error::{Error, Result};
use crate::qsp::{AngleSequence, SignalParams};
use crate::scalar::Real;

pub const MERGE_TOLERANCE: f64 = 1e-11;

/// Circuit with `V(x) = U(φ_x)`, where `U` is the QSP product for `xi` and each
/// signal rotation `R_x(Δ|x| − δ)` becomes `n` controlled `R_x(Δ)` plus an
/// uncontrolled `R_x(−δ)`. A target with `f(0^n) = 1` gets a final `X`.
pub fn compile_qsp<T: Real>(
    f: &SymmetricSpec,
    xi: &AngleSequence<T>,
    params: &SignalParams<T>,
) -> Result<LimitedSpaceCircuit<T>> {
    if xi.length() != params.length {
        return Err(Error::AngleMismatch(format!(
            "{} signal rotations but the parameters call for L = {}",
            xi.length(),
            params.length
        )));
    }
    let n = f.arity();
    let mut c = LimitedSpaceCircuit::new(n).with_convention(if f.value(0) {
        "relative phase (output complemented)"
    } else {
        "true implementation"
    });
    let zero_offset = params.delta_offset.abs() <= T::tol(1e-15);
    for &x in xi.xi[1..].iter().rev() {
        c.uncontrolled(GateKind::Rz(-x));
        if !zero_offset {
            c.uncontrolled(GateKind::Rx(-params.delta_offset));
        }
        for j in 0..n {
            c.controlled(j, GateKind::Rx(params.delta_step))?;
        }
        c.uncontrolled(GateKind::Rz(x));
    }
    c.uncontrolled(GateKind::Rz(xi.xi[0]));
    if f.value(0) {
        c.uncontrolled(GateKind::X);
    }
    Ok(c)
}

fn same_control<T>(a: &GateSpec<T>, b: &GateSpec<T>) -> bool {
    a.control == b.control
}

/// One left-to-right pass. Each gate fuses into the first earlier gate with
/// the same control, sliding back past gates it commutes with when `slide`
/// is set; fused gates equal to the identity are removed.
fn merge_pass<T: Real>(gates: &[GateSpec<T>], slide: bool) -> Vec<GateSpec<T>> {
    let tol = T::tol(MERGE_TOLERANCE);
    let ctol = T::tol(1e-12);
    let mut out: Vec<GateSpec<T>> = Vec::with_capacity(gates.len());
    for g in gates {
        if g.kind.is_identity(tol) {
            continue;
        }
        let action = g.action();
        let mut target = None;
        for k in (0..out.len()).rev() {
            if same_control(&out[k], g) {
                target = Some(k);
                break;
            }
            if !slide || !out[k].action().commutes_with(&action, ctol) {
                break;
            }
        }
        match target {
            Some(k) => {
                let kind = out[k].kind.then(&g.kind);
                if kind.is_identity(tol) {
                    out.remove(k);
                } else {
                    let label = if out[k].label == g.label {
                        g.label.clone()
                    } else {
                        super::gate::default_label(&kind)
                    };
                    out[k] = GateSpec::new(g.control, kind, label);
                }
            }
            None => out.push(g.clone()),
        }
    }
    out
}

/// Repeats merge passes until the gate list stops shrinking. Gates move past
/// commuting neighbours to meet a partner with the same control.
pub fn merge_adjacent<T: Real>(c: &LimitedSpaceCircuit<T>) -> LimitedSpaceCircuit<T> {
    merge_until_stable(c, true)
}

/// Fuses only gates that are already neighbours in time.
pub fn merge_neighbours<T: Real>(c: &LimitedSpaceCircuit<T>) -> LimitedSpaceCircuit<T> {
    merge_until_stable(c, false)
}

fn merge_until_stable<T: Real>(c: &LimitedSpaceCircuit<T>, slide: bool) -> LimitedSpaceCircuit<T> {
    let mut gates = c.gates().to_vec();
    loop {
        let next = merge_pass(&gates, slide);
        let done = next.len() == gates.len();
        gates = next;
        if done {
            break;
        }
    }
    LimitedSpaceCircuit::from_gates(c.arity(), gates)
        .expect("controls unchanged")
        .with_convention(c.phase_convention.clone())
}
