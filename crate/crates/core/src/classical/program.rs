use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfun::{input_bits, AffineWitness, BooleanFunction};
use crate::error::{Error, Result};

/// One gate of the classical 1-bit model. Variable indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Instruction {
    Flip,
    Reset { c: bool },
    CondFlip { j: usize, b: bool },
    CondReset { j: usize, b: bool, c: bool },
}

impl Instruction {
    pub fn variable(&self) -> Option<usize> {
        match *self {
            Instruction::CondFlip { j, .. } | Instruction::CondReset { j, .. } => Some(j),
            _ => None,
        }
    }

    #[inline]
    fn apply(&self, state: bool, x: &[bool]) -> bool {
        match *self {
            Instruction::Flip => !state,
            Instruction::Reset { c } => c,
            Instruction::CondFlip { j, b } => state ^ (x[j] == b),
            Instruction::CondReset { j, b, c } => {
                if x[j] == b {
                    c
                } else {
                    state
                }
            }
        }
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |b: bool| u8::from(b);
        match *self {
            Instruction::Flip => write!(f, "flip"),
            Instruction::Reset { c } => write!(f, "reset {}", bit(c)),
            Instruction::CondFlip { j, b } => write!(f, "if x{} == {}: flip", j + 1, bit(b)),
            Instruction::CondReset { j, b, c } => {
                write!(f, "if x{} == {}: reset {}", j + 1, bit(b), bit(c))
            }
        }
    }
}

/// Final ancilla value after running `prog` on input `x`, starting from 0.
pub fn run_program(prog: &[Instruction], x: &[bool]) -> Result<bool> {
    for ins in prog {
        if let Some(j) = ins.variable() {
            if j >= x.len() {
                return Err(Error::MalformedProgram(format!(
                    "{ins:?} reads x{} but the input has {} bits",
                    j + 1,
                    x.len()
                )));
            }
        }
    }
    Ok(prog.iter().fold(false, |s, ins| ins.apply(s, x)))
}

/// Truth table computed by `prog` on `n` inputs.
pub fn program_function(prog: &[Instruction], n: usize) -> Result<BooleanFunction> {
    let table: Vec<bool> = (0..1usize << n)
        .map(|x| run_program(prog, &input_bits(x, n)))
        .collect::<Result<_>>()?;
    BooleanFunction::from_bits(n, &table)
}

/// Piece `M_i`: inputs not claimed by an earlier stage with `x_var = bit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Stage {
    pub var: usize,
    pub bit: bool,
    pub affine: AffineWitness,
}

/// Subcube decision list: the first stage whose literal holds decides the output,
/// and `tail` covers the inputs no stage claims.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalFormProgram {
    n: usize,
    stages: Vec<Stage>,
    tail: AffineWitness,
}

impl NormalFormProgram {
    pub fn new(n: usize, stages: Vec<Stage>, tail: AffineWitness) -> Result<Self> {
        let mut used = vec![false; n];
        for s in &stages {
            if s.var >= n {
                return Err(Error::VariableOutOfRange { index: s.var, n });
            }
            if std::mem::replace(&mut used[s.var], true) {
                return Err(Error::MalformedProgram(format!(
                    "variable x{} used by two stages",
                    s.var + 1
                )));
            }
            if s.affine.n != n {
                return Err(Error::ArityMismatch { expected: n, got: s.affine.n });
            }
        }
        if tail.n != n {
            return Err(Error::ArityMismatch { expected: n, got: tail.n });
        }
        Ok(Self { n, stages, tail })
    }

    pub fn affine(w: AffineWitness) -> Self {
        Self {
            n: w.n,
            stages: Vec::new(),
            tail: w,
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of stages `k`.
    pub fn k(&self) -> usize {
        self.stages.len()
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn tail(&self) -> &AffineWitness {
        &self.tail
    }

    /// Piecewise evaluation over `M_1, …, M_{k+1}`.
    pub fn eval_index(&self, x: usize) -> bool {
        self.stages
            .iter()
            .find(|s| ((x >> s.var) & 1 == 1) == s.bit)
            .map_or(&self.tail, |s| &s.affine)
            .eval_index(x)
    }

    pub fn to_function(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.n, |x| self.eval_index(x)).expect("valid arity")
    }

    /// Gate-level program with one conditional reset per stage.
    ///
    /// Stages run last-to-first so that the reset of `M_1` is the final one to fire.
    /// The flips after the reset of stage `i` accumulate to the parity of `l_i`, so
    /// each block only flips the difference between consecutive masks.
    pub fn to_instructions(&self) -> Vec<Instruction> {
        let mut prog = Vec::new();
        let flips = |prog: &mut Vec<Instruction>, mask: u32| {
            for v in (0..self.n).filter(|v| (mask >> v) & 1 == 1) {
                prog.push(Instruction::CondFlip { j: v, b: true });
            }
        };
        let k = self.stages.len();
        let last_mask = if k == 0 { 0 } else { self.stages[k - 1].affine.mask };
        if self.tail.constant {
            prog.push(Instruction::Flip);
        }
        flips(&mut prog, self.tail.mask ^ last_mask);
        for i in (0..k).rev() {
            let s = &self.stages[i];
            prog.push(Instruction::CondReset {
                j: s.var,
                b: s.bit,
                c: s.affine.constant,
            });
            let prev = if i == 0 { 0 } else { self.stages[i - 1].affine.mask };
            flips(&mut prog, s.affine.mask ^ prev);
        }
        prog
    }
}

impl fmt::Display for NormalFormProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            writeln!(f, "if x{} == {}: output {}", s.var + 1, u8::from(s.bit), s.affine)?;
        }
        write!(f, "else: output {}", self.tail)
    }
}
