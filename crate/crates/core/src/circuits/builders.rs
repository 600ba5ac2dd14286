use super::compile::merge_neighbours;
use super::gate::{GateKind, GateSpec};
use super::LimitedSpaceCircuit;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::unitary::Unitary2;

fn at_least_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::ArityOutOfRange { n, min: 2, max: usize::MAX });
    }
    Ok(())
}

fn labelled<T: Real>(control: usize, m: Unitary2<T>, label: &str) -> GateSpec<T> {
    GateSpec::new(Some(control), GateKind::Matrix(m), label)
}

/// Relative-phase SLSB_n with `2n − 1` controlled gates. The word applied for
/// input weight `w` is `H^w (XH)^w`, which cycles through
/// `I, Z, −iY, −X, −I, −Z, iY, X` and so reads out `00110011…`.
pub fn slsb_relative<T: Real>(n: usize) -> Result<LimitedSpaceCircuit<T>> {
    at_least_two(n)?;
    let xh = Unitary2::x() * Unitary2::h();
    let mut c = LimitedSpaceCircuit::new(n).with_convention("relative phase");
    for j in (1..n).rev() {
        c.push(labelled(j, xh, "hx"))?;
    }
    c.controlled(0, GateKind::Z)?;
    for j in 1..n {
        c.controlled(j, GateKind::H)?;
    }
    Ok(c)
}

/// The unmerged `4n`-gate true SLSB_n circuit for
/// `(iX)^{SLSB_n(x)} = H^w (HX)^w S^w (S†X)^w`.
pub fn slsb_true_unmerged<T: Real>(n: usize) -> Result<LimitedSpaceCircuit<T>> {
    at_least_two(n)?;
    let sdx = Unitary2::s().adjoint() * Unitary2::x();
    let hx = Unitary2::h() * Unitary2::x();
    let mut c = LimitedSpaceCircuit::new(n).with_convention("true implementation");
    for j in 0..n {
        c.push(labelled(j, sdx, "sdg.x"))?;
    }
    for j in (0..n).rev() {
        c.controlled(j, GateKind::S)?;
    }
    for j in (0..n).rev() {
        c.push(labelled(j, hx, "h.x"))?;
    }
    for j in 0..n {
        c.controlled(j, GateKind::H)?;
    }
    Ok(c)
}

/// True SLSB_n with `4n − 2` controlled gates: the two block boundaries that
/// share a control are fused. [`super::merge_adjacent`] finds one more merge.
pub fn slsb_true<T: Real>(n: usize) -> Result<LimitedSpaceCircuit<T>> {
    Ok(merge_neighbours(&slsb_true_unmerged(n)?))
}

/// How a two-rotation caption entry such as `R_z:−π R_x:−π/4` composes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositeOrder {
    /// The first listed rotation acts first.
    LeftFirst,
    RightFirst,
}

/// The 8-entangling-gate SLSB_3 circuit exactly as captioned.
pub fn fig1_caption<T: Real>(order: CompositeOrder) -> LimitedSpaceCircuit<T> {
    use std::f64::consts::PI;
    let rot = |axis: char, a: f64| -> GateKind<T> {
        let a = T::lit(a);
        match axis {
            'x' => GateKind::Rx(a),
            'y' => GateKind::Ry(a),
            _ => GateKind::Rz(a),
        }
    };
    let pair = |(p, a): (char, f64), (q, b): (char, f64)| {
        let (first, second) = (rot(p, a), rot(q, b));
        let m = match order {
            CompositeOrder::LeftFirst => second.matrix() * first.matrix(),
            CompositeOrder::RightFirst => first.matrix() * second.matrix(),
        };
        let label = format!("{} {}", super::gate::default_label(&first), super::gate::default_label(&second));
        GateSpec::new(None, GateKind::Matrix(m), label)
    };
    let crx = |j: usize, a: f64| GateSpec::controlled(j, rot('x', a));
    let gates = vec![
        pair(('z', -PI), ('x', -PI / 4.0)),
        crx(0, PI / 2.0),
        crx(1, PI / 2.0),
        crx(2, PI / 2.0),
        pair(('z', PI / 2.0), ('x', -PI / 2.0)),
        crx(0, PI),
        crx(1, PI),
        GateSpec::uncontrolled(rot('y', PI / 2.0)),
        crx(2, PI / 2.0),
        pair(('y', -PI / 2.0), ('z', 3.0 * PI / 4.0)),
        crx(1, PI),
        crx(0, PI),
        pair(('x', -PI / 2.0), ('z', -PI / 4.0)),
    ];
    LimitedSpaceCircuit::from_gates(3, gates)
        .expect("controls within arity")
        .with_convention("true implementation")
}

/// The captioned circuit followed by an uncontrolled `R_z(−π/4)` that removes
/// its constant output-frame rotation, giving `V(x) = (iX)^{SLSB_3(x)}`.
pub fn builtin_slsb3_fig1<T: Real>() -> LimitedSpaceCircuit<T> {
    let mut c = fig1_caption(CompositeOrder::LeftFirst);
    c.uncontrolled(GateKind::Rz(-T::FRAC_PI_4()));
    c
}

/// IP_n from `n/2` relative-phase Toffoli blocks, three `cX` each.
pub fn ip_circuit<T: Real>(n: usize) -> Result<LimitedSpaceCircuit<T>> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::ArityParity {
            what: "inner product circuit",
            parity: "even, positive",
            n,
        });
    }
    let q = T::FRAC_PI_4();
    let mut c = LimitedSpaceCircuit::new(n).with_convention("relative phase");
    for pair in 0..n / 2 {
        let (odd, even) = (2 * pair, 2 * pair + 1);
        c.uncontrolled(GateKind::Ry(q));
        c.controlled(even, GateKind::X)?;
        c.uncontrolled(GateKind::Ry(q));
        c.controlled(odd, GateKind::X)?;
        c.uncontrolled(GateKind::Ry(-q));
        c.controlled(even, GateKind::X)?;
        c.uncontrolled(GateKind::Ry(-q));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use num_complex::Complex;

    use super::*;
    use crate::boolfun::{ip, slsb};

    type C = LimitedSpaceCircuit<f64>;

    fn ix() -> Unitary2<f64> {
        Unitary2::x().scale(Complex::new(0.0, 1.0))
    }

    #[test]
    fn slsb_relative_counts() {
        assert_eq!(slsb_relative::<f64>(3).unwrap().entangling_count(), 5);
        assert_eq!(slsb_relative::<f64>(5).unwrap().entangling_count(), 9);
        assert_eq!(slsb_relative::<f64>(6).unwrap().entangling_count(), 11);
        assert!(slsb_relative::<f64>(1).is_err());
    }

    #[test]
    fn slsb_relative_word_cycle() {
        let c: C = slsb_relative(8).unwrap();
        let i = Complex::new(0.0, 1.0);
        let cycle = [
            Unitary2::identity(),
            Unitary2::z(),
            Unitary2::y().scale(-i),
            Unitary2::x().scale(Complex::new(-1.0, 0.0)),
            Unitary2::identity().scale(Complex::new(-1.0, 0.0)),
            Unitary2::z().scale(Complex::new(-1.0, 0.0)),
            Unitary2::y().scale(i),
            Unitary2::x(),
        ];
        for x in 0..256usize {
            let w = x.count_ones() as usize;
            assert!(c.unitary(x).dist(&cycle[w % 8]) < 1e-12, "x={x}");
        }
    }

    #[test]
    fn slsb_relative_pattern() {
        for n in 2..=12 {
            let c: C = slsb_relative(n).unwrap();
            for w in 0..=n {
                let x = (1usize << w) - 1;
                let expect = (w >> 1) & 1 == 1;
                assert!((c.unitary(x).p_one() - if expect { 1.0 } else { 0.0 }).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn slsb_true_is_exact() {
        for n in 2..=6 {
            let c: C = slsb_true(n).unwrap();
            assert_eq!(c.entangling_count(), 4 * n - 2);
            let raw = slsb_true_unmerged::<f64>(n).unwrap();
            assert_eq!(raw.entangling_count(), 4 * n);
            let tight = crate::circuits::merge_adjacent(&raw);
            assert_eq!(tight.entangling_count(), 4 * n - 3);
            for x in 0..1usize << n {
                assert!(tight.unitary(x).dist(&c.unitary(x)) < 1e-12);
            }
            let f = slsb(n).unwrap();
            for x in 0..1usize << n {
                let want = if f.get(x) { ix() } else { Unitary2::identity() };
                assert!(c.unitary(x).dist(&want) < 1e-12, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn fig1_orders() {
        let left: C = fig1_caption(CompositeOrder::LeftFirst);
        let right: C = fig1_caption(CompositeOrder::RightFirst);
        assert_eq!(left.entangling_count(), 8);
        let f = slsb(3).unwrap();
        let frame = Unitary2::rz(std::f64::consts::FRAC_PI_4);
        let mut right_ok = true;
        for x in 0..8 {
            let want = if f.get(x) { ix() } else { Unitary2::identity() };
            assert!(left.unitary(x).dist(&(frame * want)) < 1e-12);
            right_ok &= (right.unitary(x).p_one() - if f.get(x) { 1.0 } else { 0.0 }).abs() < 1e-9;
        }
        assert!(!right_ok);
        let fixed: C = builtin_slsb3_fig1();
        assert_eq!(fixed.entangling_count(), 8);
        for x in 0..8 {
            let want = if f.get(x) { ix() } else { Unitary2::identity() };
            assert!(fixed.unitary(x).dist(&want) < 1e-12);
        }
    }

    #[test]
    fn ip_is_correct() {
        for n in [2usize, 4, 6] {
            let c: C = ip_circuit(n).unwrap();
            assert_eq!(c.entangling_count(), 3 * n / 2);
            let f = ip(n).unwrap();
            for x in 0..1usize << n {
                let p = c.unitary(x).p_one();
                assert!((p - if f.get(x) { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
        assert!(ip_circuit::<f64>(3).is_err());
    }
}
