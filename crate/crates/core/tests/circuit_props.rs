mod common;

use std::f64::consts::FRAC_PI_2;

use limspace::boolfun::{maj, maj_spec, slsb, slsb_spec, SymmetricSpec};
use limspace::circuits::{
    compile_qsp, merge_adjacent, merge_neighbours, slsb_true, GateKind, GateSpec,
    LimitedSpaceCircuit,
};
use limspace::qsp::{synthesize, SignalParams, SolveOptions};
use limspace::simulate::{asp, linearity_certificate, CertificateError, Classification};
use limspace::unitary::Unitary2;
use limspace::Circuit;
use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn kind() -> impl Strategy<Value = GateKind<f64>> {
    let quarter = (-4i32..=4).prop_map(|k| k as f64 * FRAC_PI_2);
    prop_oneof![
        quarter.clone().prop_map(GateKind::Rx),
        quarter.clone().prop_map(GateKind::Ry),
        quarter.prop_map(GateKind::Rz),
        (-3.0..3.0f64).prop_map(GateKind::Rx),
        (-3.0..3.0f64).prop_map(GateKind::Rz),
        Just(GateKind::H),
        Just(GateKind::X),
        Just(GateKind::Z),
        Just(GateKind::S),
    ]
}

fn circuit(max_n: usize, max_len: usize) -> impl Strategy<Value = Circuit> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((proptest::option::of(0..n), kind()), 0..max_len).prop_map(
            move |gates| {
                let gates = gates
                    .into_iter()
                    .map(|(c, k)| match c {
                        Some(j) => GateSpec::controlled(j, k),
                        None => GateSpec::uncontrolled(k),
                    })
                    .collect();
                LimitedSpaceCircuit::from_gates(n, gates).unwrap()
            },
        )
    })
}

fn same_action(a: &Circuit, b: &Circuit, tol: f64) -> bool {
    (0..1usize << a.arity()).all(|x| a.unitary(x).dist(&b.unitary(x)) <= tol)
}

proptest! {
    #[test]
    fn merging_preserves_every_input(c in circuit(8, 40)) {
        let m = merge_adjacent(&c);
        prop_assert!(m.len() <= c.len());
        prop_assert!(m.entangling_count() <= c.entangling_count());
        prop_assert!(same_action(&c, &m, 1e-10));
        let s = merge_neighbours(&c);
        prop_assert!(same_action(&c, &s, 1e-10));
        prop_assert!(merge_adjacent(&m).len() == m.len());
    }

    #[test]
    fn every_v_is_unitary(c in circuit(6, 60)) {
        for x in 0..1usize << c.arity() {
            prop_assert!(c.unitary(x).unitarity_defect() < 1e-10);
        }
    }

    #[test]
    fn json_round_trip(c in circuit(6, 30)) {
        prop_assert_eq!(Circuit::from_json(&c.to_json()).unwrap(), c);
    }
}

#[test]
fn true_implementations_have_unit_determinant() {
    for n in 2..=7 {
        let c: Circuit = slsb_true(n).unwrap();
        let r = asp(&c, &slsb(n).unwrap()).unwrap();
        assert_eq!(r.classification, Classification::TrueImpl);
        for row in &r.per_input {
            assert!((row.v.det() - Complex::new(1.0, 0.0)).norm() < 1e-10);
        }
    }
}

/// Phaseless circuits (`V(x) ∈ {I, X}`) only ever compute affine functions,
/// so none of them computes MAJ3.
#[test]
fn phaseless_circuits_are_affine() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let maj3 = maj(3).unwrap();
    let (mut found, mut nonlinear_gates) = (0, 0);
    while found < 1000 {
        let n = rng.random_range(1..=4);
        let c = common::random_clifford_circuit(&mut rng, n);
        match linearity_certificate(&c) {
            Ok(cert) => {
                found += 1;
                nonlinear_gates += c.gates().iter().any(|g| matches!(g.kind, GateKind::H | GateKind::S)) as usize;
                assert_eq!(cert.witness.to_function(), cert.function);
                if n == 3 {
                    assert!(asp(&c, &maj3).unwrap().asp < 1.0 - 1e-9);
                }
            }
            Err(CertificateError::NotPhaseless { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(nonlinear_gates >= 20);
}

#[test]
fn slsb_true_is_not_phaseless() {
    for n in 2..=6 {
        assert!(matches!(
            linearity_certificate(&slsb_true::<f64>(n).unwrap()),
            Err(CertificateError::NotPhaseless { .. })
        ));
    }
}

fn check_compiled(spec: &SymmetricSpec, params: SignalParams<f64>, relax: bool) {
    let s = synthesize(spec, &params, SolveOptions { relax }).unwrap();
    let c = compile_qsp(spec, &s.angles, &s.params).unwrap();
    assert!(c.entangling_count() <= spec.arity() * s.params.length);
    let frame = if s.complemented { Unitary2::x() } else { Unitary2::identity() };
    for x in 0..1usize << spec.arity() {
        let u = s.angles.reconstruct(s.params.phi(x.count_ones() as usize));
        assert!(c.unitary(x).dist(&(frame * u)) < 1e-8);
    }
    let merged = merge_adjacent(&c);
    let r = asp(&merged, &spec.to_function()).unwrap();
    assert!((r.asp - 1.0).abs() < 1e-8, "{spec}: asp {}", r.asp);
    assert_ne!(r.classification, Classification::Approximate);
}

#[test]
fn compiled_qsp_matches_reconstruction() {
    for n in 2..=6 {
        check_compiled(&slsb_spec(n).unwrap(), SignalParams::general(n).unwrap(), false);
    }
    for n in [3, 5] {
        check_compiled(&maj_spec(n).unwrap(), SignalParams::majority(n).unwrap(), false);
        check_compiled(&maj_spec(n).unwrap(), SignalParams::majority(n).unwrap(), true);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn compiled_random_symmetric(n in 2usize..=5, bits in proptest::collection::vec(any::<bool>(), 6)) {
        let spec = SymmetricSpec::new(n, bits[..=n].to_vec()).unwrap();
        check_compiled(&spec, SignalParams::general(n).unwrap(), false);
    }
}
