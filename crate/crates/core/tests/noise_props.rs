use limspace::boolfun::{ip, slsb};
use limspace::circuits::{builtin_slsb3_fig1, ip_circuit, slsb_relative};
use limspace::simulate::{
    advantage_crossover, binomial_sigma, noise_threshold, noisy_asp_analytic, noisy_asp_mc, Family,
};
use proptest::prelude::*;

#[test]
fn monte_carlo_within_four_sigma() {
    let cases = [
        (slsb_relative::<f64>(5).unwrap(), slsb(5).unwrap()),
        (ip_circuit::<f64>(8).unwrap(), ip(8).unwrap()),
        (builtin_slsb3_fig1::<f64>(), slsb(3).unwrap()),
    ];
    let shots = 100_000;
    for (c, f) in &cases {
        for (k, eps) in [0.01, 0.1, 0.2].into_iter().enumerate() {
            let est = noisy_asp_mc(c, f, eps, shots, 11 + k as u64).unwrap();
            let want = noisy_asp_analytic(c.entangling_count(), eps).unwrap();
            let sigma = binomial_sigma(want, shots);
            assert!((est - want).abs() <= 4.0 * sigma, "eps={eps} est={est} want={want}");
        }
    }
}

#[test]
fn seeds_give_independent_streams() {
    let c = ip_circuit::<f64>(4).unwrap();
    let f = ip(4).unwrap();
    let a = noisy_asp_mc(&c, &f, 0.2, 20_000, 1).unwrap();
    let b = noisy_asp_mc(&c, &f, 0.2, 20_000, 2).unwrap();
    assert_ne!(a, b);
}

#[test]
fn threshold_separates_crossover() {
    let t = noise_threshold::<f64>();
    assert!(advantage_crossover(t - 0.02, Family::Ip).unwrap().is_some());
    assert!(advantage_crossover(t + 0.001, Family::Ip).unwrap().is_none());
    assert_eq!(advantage_crossover(0.25, Family::Ip).unwrap(), None);
    assert!(advantage_crossover(0.15, Family::Ip).unwrap().is_some());
    assert!(advantage_crossover(1.0, Family::Ip).is_err());
}

proptest! {
    #[test]
    fn analytic_is_monotone(l in 0usize..200, eps in 0.0..0.99f64, d in 0.0..0.009f64) {
        let base = noisy_asp_analytic(l, eps).unwrap();
        prop_assert!(noisy_asp_analytic(l + 1, eps).unwrap() <= base);
        prop_assert!(noisy_asp_analytic(l, eps + d).unwrap() <= base);
        prop_assert!((0.5..=1.0).contains(&base));
    }

    #[test]
    fn crossover_is_monotone_in_noise(a in 0.0..0.2f64, b in 0.0..0.2f64) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let n_lo = advantage_crossover(lo, Family::Ip).unwrap();
        let n_hi = advantage_crossover(hi, Family::Ip).unwrap();
        if let Some(h) = n_hi {
            prop_assert!(n_lo.unwrap() <= h);
        }
    }
}
