use crate::scalar::Real;
use crate::unitary::Unitary2;

/// Named single-qubit action; everything else is an explicit matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateKind<T> {
    Rx(T),
    Ry(T),
    Rz(T),
    H,
    X,
    Z,
    S,
    Matrix(Unitary2<T>),
}

impl<T: Real> GateKind<T> {
    pub fn matrix(&self) -> Unitary2<T> {
        match *self {
            GateKind::Rx(a) => Unitary2::rx(a),
            GateKind::Ry(a) => Unitary2::ry(a),
            GateKind::Rz(a) => Unitary2::rz(a),
            GateKind::H => Unitary2::h(),
            GateKind::X => Unitary2::x(),
            GateKind::Z => Unitary2::z(),
            GateKind::S => Unitary2::s(),
            GateKind::Matrix(m) => m,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Rx(_) => "rx",
            GateKind::Ry(_) => "ry",
            GateKind::Rz(_) => "rz",
            GateKind::H => "h",
            GateKind::X => "x",
            GateKind::Z => "z",
            GateKind::S => "s",
            GateKind::Matrix(_) => "matrix",
        }
    }

    pub fn angle(&self) -> Option<T> {
        match *self {
            GateKind::Rx(a) | GateKind::Ry(a) | GateKind::Rz(a) => Some(a),
            _ => None,
        }
    }

    /// Action of `later · self`, keeping a rotation when both share its axis.
    pub fn then(&self, later: &Self) -> Self {
        match (*self, *later) {
            (GateKind::Rx(a), GateKind::Rx(b)) => GateKind::Rx(a + b),
            (GateKind::Ry(a), GateKind::Ry(b)) => GateKind::Ry(a + b),
            (GateKind::Rz(a), GateKind::Rz(b)) => GateKind::Rz(a + b),
            _ => GateKind::Matrix(later.matrix() * self.matrix()),
        }
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.matrix().dist(&Unitary2::identity()) <= tol
    }
}

/// One gate of a limited-space circuit: an action on the computational qubit,
/// optionally controlled by a single input bit (0-based index).
#[derive(Clone, Debug, PartialEq)]
pub struct GateSpec<T> {
    pub control: Option<usize>,
    pub kind: GateKind<T>,
    pub label: String,
}

impl<T: Real> GateSpec<T> {
    pub fn new(control: Option<usize>, kind: GateKind<T>, label: impl Into<String>) -> Self {
        Self {
            control,
            kind,
            label: label.into(),
        }
    }

    pub fn controlled(control: usize, kind: GateKind<T>) -> Self {
        let label = default_label(&kind);
        Self::new(Some(control), kind, label)
    }

    pub fn uncontrolled(kind: GateKind<T>) -> Self {
        let label = default_label(&kind);
        Self::new(None, kind, label)
    }

    pub fn action(&self) -> Unitary2<T> {
        self.kind.matrix()
    }

    pub fn is_entangling(&self) -> bool {
        self.control.is_some()
    }

    /// `V_j(x)`: the action if the control is absent or set, else the identity.
    pub fn on_input(&self, x: usize) -> Option<Unitary2<T>> {
        match self.control {
            Some(j) if (x >> j) & 1 == 0 => None,
            _ => Some(self.action()),
        }
    }
}

pub(crate) fn default_label<T: Real>(kind: &GateKind<T>) -> String {
    match kind.angle() {
        Some(a) => format!("{}({})", kind.name(), format_angle(a.as_f64())),
        None => kind.name().to_string(),
    }
}

/// `a` as a multiple of π when it is one with a small denominator.
pub fn format_angle(a: f64) -> String {
    let r = a / std::f64::consts::PI;
    for den in [1i64, 2, 3, 4, 6, 8, 12, 16, 32, 64] {
        let num = (r * den as f64).round();
        if (r * den as f64 - num).abs() < 1e-9 {
            let num = num as i64;
            return match (num, den) {
                (0, _) => "0".into(),
                (1, 1) => "pi".into(),
                (-1, 1) => "-pi".into(),
                (n, 1) => format!("{n}*pi"),
                (1, d) => format!("pi/{d}"),
                (-1, d) => format!("-pi/{d}"),
                (n, d) => format!("{n}*pi/{d}"),
            };
        }
    }
    format!("{a}")
}
