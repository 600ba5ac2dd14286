use limspace::boolfun::{
    classical_lower_bound, classical_upper_bound, maj, walsh_spectrum, BooleanFunction,
};
use limspace::classical::approximation_ratio;
use proptest::prelude::*;

fn function(n: usize) -> impl Strategy<Value = BooleanFunction> {
    proptest::collection::vec(any::<bool>(), 1 << n)
        .prop_map(move |bits| BooleanFunction::from_bits(n, &bits).unwrap())
}

fn sized_function(max: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max).prop_flat_map(function)
}

proptest! {
    #[test]
    fn parseval(f in sized_function(10)) {
        let s = walsh_spectrum(&f);
        let total: i64 = s.walsh().iter().map(|&w| (w as i64) * (w as i64)).sum();
        prop_assert_eq!(total, 1i64 << (2 * f.arity()));
        prop_assert!((s.parseval_sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn permutation_keeps_spectrum_multiset(
        (f, perm) in (1usize..=8).prop_flat_map(|n| (function(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
    ) {
        let g = f.permute_inputs(&perm).unwrap();
        let mut a: Vec<u32> = walsh_spectrum(&f).walsh().iter().map(|w| w.unsigned_abs()).collect();
        let mut b: Vec<u32> = walsh_spectrum(&g).walsh().iter().map(|w| w.unsigned_abs()).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn complement_keeps_magnitudes(f in sized_function(9)) {
        let a = walsh_spectrum(&f);
        let b = walsh_spectrum(&f.complement());
        for (x, y) in a.walsh().iter().zip(b.walsh()) {
            prop_assert_eq!(*x, -*y);
        }
    }

    #[test]
    fn ratio_sits_between_the_bounds(f in sized_function(6)) {
        let r = approximation_ratio(&f).unwrap().as_real::<f64>();
        let g = walsh_spectrum(&f).spectral_max::<f64>();
        prop_assert!(classical_lower_bound(g) <= r + 1e-12);
        prop_assert!(r <= classical_upper_bound(g).unwrap() + 1e-12);
    }

    #[test]
    fn ratio_is_permutation_invariant(
        (f, perm) in (2usize..=5).prop_flat_map(|n| (function(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
    ) {
        let g = f.permute_inputs(&perm).unwrap();
        prop_assert_eq!(
            approximation_ratio(&f).unwrap().value,
            approximation_ratio(&g).unwrap().value
        );
    }

    #[test]
    fn hex_round_trip(f in sized_function(9)) {
        prop_assert_eq!(BooleanFunction::from_hex(f.arity(), &f.to_hex()).unwrap(), f);
    }
}

/// The largest coefficients sit on level 1 and equal `C(n−1, (n−1)/2) / 2^{n−1}`.
/// That value tends to `√(2/(πn))` from above and never exceeds `√(2/(π(n−1)))`.
#[test]
fn majority_coefficient_envelope() {
    for n in (3..=11).step_by(2) {
        let s = walsh_spectrum(&maj(n).unwrap());
        let m = (n - 1) / 2;
        let central = (1..=m).fold(1.0, |c, i| c * (m + i) as f64 / i as f64);
        let level1 = central / 2f64.powi(n as i32 - 1);
        assert!((s.spectral_max::<f64>() - level1).abs() < 1e-12);
        assert!((s.coeff::<f64>(1).abs() - level1).abs() < 1e-12);
        let asymptotic = (2.0 / (std::f64::consts::PI * n as f64)).sqrt();
        let envelope = (2.0 / (std::f64::consts::PI * (n - 1) as f64)).sqrt();
        assert!(level1 > asymptotic, "n={n}");
        assert!(level1 <= envelope, "n={n}");
    }
}
