use clap::{Args, ValueEnum};
use limspace::boolfun::{ip, maj_spec, parity_spec, slsb_spec, BooleanFunction, SymmetricSpec};

use crate::CliError;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FnName {
    Slsb,
    Maj,
    Ip,
    Parity,
    Const0,
    Const1,
}

/// A named function family with `--n`, or a hex truth table with `--n`.
#[derive(Args, Debug, Default)]
pub struct FnArgs {
    #[arg(long = "fn", value_enum, conflicts_with = "table")]
    pub func: Option<FnName>,
    /// Truth table as hex, least significant bit = f(0…0).
    #[arg(long)]
    pub table: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
}

pub struct Target {
    pub name: String,
    pub f: BooleanFunction,
    pub spec: Option<SymmetricSpec>,
}

impl FnArgs {
    pub fn given(&self) -> bool {
        self.func.is_some() || self.table.is_some()
    }

    /// Resolves the function; `default_n` fills in a missing `--n`.
    pub fn resolve(&self, default_n: Option<usize>) -> Result<Target, CliError> {
        let n = self
            .n
            .or(default_n)
            .ok_or_else(|| CliError::usage("--n is required"))?;
        if let Some(hex) = &self.table {
            let f = BooleanFunction::from_hex(n, hex)?;
            return Ok(Target {
                name: format!("table {}", f.to_hex()),
                spec: SymmetricSpec::from_function(&f),
                f,
            });
        }
        let func = self
            .func
            .ok_or_else(|| CliError::usage("one of --fn or --table is required"))?;
        let (name, spec) = match func {
            FnName::Slsb => ("SLSB", Some(slsb_spec(n)?)),
            FnName::Maj => ("MAJ", Some(maj_spec(n)?)),
            FnName::Parity => ("PARITY", Some(parity_spec(n)?)),
            FnName::Const0 => ("CONST0", Some(SymmetricSpec::from_fn(n, |_| false)?)),
            FnName::Const1 => ("CONST1", Some(SymmetricSpec::from_fn(n, |_| true)?)),
            FnName::Ip => ("IP", None),
        };
        let f = match &spec {
            Some(s) => s.to_function(),
            None => ip(n)?,
        };
        Ok(Target {
            name: format!("{name}{n}"),
            f,
            spec,
        })
    }
}
