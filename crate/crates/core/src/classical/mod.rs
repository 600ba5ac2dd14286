//! The classical 1-bit limited-space model: programs, membership in `Ω_n`,
//! exact approximation ratios and the randomized variant.

mod program;
mod ratio;

pub use program::{program_function, run_program, Instruction, NormalFormProgram, Stage};
pub use ratio::{
    approximation_ratio, hardest_symmetric, omega_membership, randomized_ratio_estimate,
    RatioResult, MAX_EXACT_ARITY,
};

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::*;
    use crate::boolfun::{maj, parity, slsb, slsb_spec, BooleanFunction};

    fn r(a: u64, b: u64) -> Ratio<u64> {
        Ratio::new(a, b)
    }

    #[test]
    fn published_constants() {
        assert_eq!(approximation_ratio(&maj(3).unwrap()).unwrap().value, r(7, 8));
        assert_eq!(approximation_ratio(&slsb(4).unwrap()).unwrap().value, r(13, 16));
        assert_eq!(approximation_ratio(&slsb(5).unwrap()).unwrap().value, r(23, 32));
        assert_eq!(approximation_ratio(&maj(5).unwrap()).unwrap().value, r(25, 32));
        assert_eq!(approximation_ratio(&slsb(6).unwrap()).unwrap().value, r(43, 64));
    }

    #[test]
    fn affine_has_ratio_one() {
        for n in 1..=6 {
            let p = parity(n).unwrap();
            let res = approximation_ratio(&p).unwrap();
            assert_eq!(res.value, r(1, 1));
            assert_eq!(res.witness.k(), 0);
        }
    }

    #[test]
    fn witness_reproduces_agreements() {
        for f in [maj(3).unwrap(), slsb(5).unwrap(), maj(5).unwrap(), slsb(6).unwrap()] {
            let res = approximation_ratio(&f).unwrap();
            let g = res.witness.to_function();
            assert_eq!(g.agreements(&f).unwrap() as u64, res.agreements);
            let compiled = program_function(&res.witness.to_instructions(), f.arity()).unwrap();
            assert_eq!(compiled, g);
        }
    }

    #[test]
    fn membership_examples() {
        let and = BooleanFunction::from_fn(2, |x| x == 3).unwrap();
        let w = omega_membership(&and).unwrap();
        assert_eq!(w.to_function(), and);
        assert!(omega_membership(&maj(3).unwrap()).is_none());
        for n in 3..=6 {
            assert!(omega_membership(&slsb(n).unwrap()).is_none());
        }
    }

    #[test]
    fn membership_beyond_exact_arity() {
        // x1 ? (x2 ⊕ x9) : x3, arity 9, is in Ω.
        let f = BooleanFunction::from_fn(9, |x| {
            if x & 1 == 1 {
                ((x >> 1) ^ (x >> 8)) & 1 == 1
            } else {
                (x >> 2) & 1 == 1
            }
        })
        .unwrap();
        let w = omega_membership(&f).unwrap();
        assert_eq!(w.to_function(), f);
        assert!(omega_membership(&maj(9).unwrap()).is_none());
    }

    #[test]
    fn hardest_small() {
        let h3 = hardest_symmetric(3).unwrap();
        assert_eq!(h3[0].1, r(7, 8));
        assert!(h3.iter().any(|(s, _)| *s == slsb_spec(3).unwrap()));
        let h4 = hardest_symmetric(4).unwrap();
        assert_eq!(h4[0].1, r(13, 16));
        assert!(h4.iter().any(|(s, _)| *s == slsb_spec(4).unwrap()));
        assert!(hardest_symmetric(2).is_err());
    }

    #[test]
    fn randomized_never_beats_exact() {
        let p = parity(3).unwrap();
        assert_eq!(randomized_ratio_estimate::<f64>(&p, 2, 20, 1).unwrap(), 1.0);
        let m3 = maj(3).unwrap();
        let est = randomized_ratio_estimate::<f64>(&m3, 2, 2000, 7).unwrap();
        assert!((0.75..=0.875).contains(&est), "{est}");
        let s4 = slsb(4).unwrap();
        assert!(randomized_ratio_estimate::<f64>(&s4, 0, 2000, 3).unwrap() <= 13.0 / 16.0);
    }
}
