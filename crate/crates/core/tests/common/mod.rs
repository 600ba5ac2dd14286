//! Shared oracles and generators for the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::f64::consts::FRAC_PI_2;

use limspace::circuits::{GateKind, LimitedSpaceCircuit};
use limspace::unitary::Unitary2;
use limspace::Circuit;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn literal(n: usize, j: usize, b: bool) -> u32 {
    (0..1u32 << n)
        .filter(|x| ((x >> j) & 1 == 1) == b)
        .fold(0, |t, x| t | (1 << x))
}

pub fn affine_tables(n: usize) -> Vec<u32> {
    let full = (1u32 << (1 << n)) - 1;
    let mut out = Vec::new();
    for mask in 0..1u32 << n {
        let t = (0..1u32 << n)
            .filter(|x| (x & mask).count_ones() % 2 == 1)
            .fold(0, |t, x| t | (1 << x));
        out.push(t);
        out.push(t ^ full);
    }
    out
}

/// Truth tables of all normal-form programs on `n ≤ 3` inputs.
pub fn normal_form_tables(n: usize) -> HashSet<u32> {
    let full = (1u32 << (1 << n)) - 1;
    let aff = affine_tables(n);
    let mut seen = HashSet::new();
    fn walk(
        n: usize,
        used: u32,
        rest: u32,
        acc: u32,
        aff: &[u32],
        seen: &mut HashSet<u32>,
    ) {
        for &tail in aff {
            seen.insert(acc | (tail & rest));
        }
        for j in (0..n).filter(|j| used & (1 << j) == 0) {
            for b in [false, true] {
                let piece = literal(n, j, b) & rest;
                for &a in aff {
                    walk(n, used | (1 << j), rest & !piece, acc | (a & piece), aff, seen);
                }
            }
        }
    }
    walk(n, 0, full, 0, &aff, &mut seen);
    seen
}

/// Truth tables reachable by gate-level programs, found by breadth-first search
/// over the per-input register contents.
pub fn program_tables(n: usize) -> HashSet<u32> {
    let full = (1u32 << (1 << n)) - 1;
    let mut seen = HashSet::from([0u32]);
    let mut frontier = vec![0u32];
    while let Some(t) = frontier.pop() {
        let mut next = vec![t ^ full, 0, full];
        for j in 0..n {
            for b in [false, true] {
                let lit = literal(n, j, b);
                next.push(t ^ lit);
                next.push(t & !lit);
                next.push(t | lit);
            }
        }
        for s in next {
            if seen.insert(s) {
                frontier.push(s);
            }
        }
    }
    seen
}

pub fn best_agreement(g: u32, n: usize, tables: &HashSet<u32>) -> u64 {
    let size = 1u32 << n;
    tables
        .iter()
        .map(|&t| (size - (g ^ t).count_ones()) as u64)
        .max()
        .unwrap()
}

/// Random circuit over Clifford-like gates; a fair share of them is phaseless.
pub fn random_clifford_circuit(rng: &mut ChaCha8Rng, n: usize) -> Circuit {
    let len = rng.random_range(0..16);
    let mut c = LimitedSpaceCircuit::new(n);
    for _ in 0..len {
        let k = match rng.random_range(0..6) {
            0 => GateKind::X,
            1 => GateKind::Z,
            2 => GateKind::H,
            3 => GateKind::S,
            4 => GateKind::Matrix(Unitary2::y()),
            _ => GateKind::Rx(FRAC_PI_2 * rng.random_range(-2..=2) as f64),
        };
        if rng.random_bool(0.7) {
            c.controlled(rng.random_range(0..n), k).unwrap();
        } else {
            c.uncontrolled(k);
        }
    }
    c
}
