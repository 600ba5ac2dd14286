use std::fmt::Write as _;
use std::fs;

use limspace::boolfun::{
    classical_lower_bound, classical_upper_bound, maj_spec, walsh_spectrum, BooleanFunction,
};
use limspace::circuits::{
    builtin_slsb3_fig1, compile_qsp, ip_circuit, merge_adjacent, slsb_relative, slsb_true,
    GateKind,
};
use limspace::classical::{approximation_ratio, omega_membership, MAX_EXACT_ARITY};
use limspace::qsp::{synthesize, SignalParams, SolveOptions};
use limspace::simulate::{
    advantage_crossover, asp, noise_threshold, noisy_asp_analytic, noisy_asp_mc, Family,
    CROSSOVER_CAP,
};
use limspace::Circuit;
use clap::ValueEnum;
use serde_json::json;

use crate::target::{FnName, Target};
use crate::{
    BoundsArgs, Builtin, ClassicalArgs, CliError, CrossoverArgs, FamilyArg, Format, Method,
    SimulateArgs, SynthArgs,
};

type CmdResult = Result<(), CliError>;

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn unsupported(format: Format, allowed: &[Format]) -> CmdResult {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "--format {} is not available for this command",
            format!("{format:?}").to_lowercase()
        )))
    }
}

pub fn classical(a: ClassicalArgs) -> CmdResult {
    unsupported(a.format, &[Format::Text, Format::Json])?;
    let t = a.target.resolve(None)?;
    if t.f.arity() > MAX_EXACT_ARITY {
        return Err(CliError::usage(format!(
            "exact ratios need n <= {MAX_EXACT_ARITY}, got {}",
            t.f.arity()
        )));
    }
    let r = approximation_ratio(&t.f)?;
    let member = omega_membership(&t.f).is_some();
    let value: f64 = r.as_real();
    let program: Vec<String> = r.witness.to_instructions().iter().map(|i| i.to_string()).collect();
    if a.format == Format::Json {
        print_json(&json!({
            "function": t.name,
            "n": t.f.arity(),
            "hex": t.f.to_hex(),
            "ratio": r.value.to_string(),
            "value": value,
            "agreements": r.agreements,
            "member_of_omega": member,
            "witness": r.witness.to_string().lines().collect::<Vec<_>>(),
            "program": program,
        }));
        return Ok(());
    }
    println!("function: {} (hex {})", t.name, t.f.to_hex());
    if member {
        println!("R = {}, member of Omega", r.value);
    } else {
        println!("R = {} (={value})", r.value);
        println!("not a member of Omega");
    }
    println!("witness, agreeing on {} of {} inputs:", r.agreements, t.f.len());
    for line in r.witness.to_string().lines() {
        println!("  {line}");
    }
    println!("gate-level program ({} instructions):", program.len());
    for line in &program {
        println!("  {line}");
    }
    Ok(())
}

fn params_for(t: &Target) -> Result<SignalParams<f64>, CliError> {
    let spec = t.spec.as_ref().expect("checked symmetric");
    let n = spec.arity();
    if n % 2 == 1 && maj_spec(n).ok().as_ref() == Some(spec) {
        Ok(SignalParams::majority(n)?)
    } else {
        Ok(SignalParams::general(n)?)
    }
}

fn direct(t: &Target, func: Option<FnName>, method: Method) -> Result<Circuit, CliError> {
    let n = t.f.arity();
    let name = func.ok_or_else(|| {
        CliError::usage("direct constructions need a named function (--fn)")
    })?;
    let c = match (name, method) {
        (FnName::Slsb, Method::Direct) => slsb_relative(n)?,
        (FnName::Slsb, Method::True) => slsb_true(n)?,
        (FnName::Maj, _) if n == 3 => builtin_slsb3_fig1(),
        (FnName::Ip, Method::Direct) => ip_circuit(n)?,
        (FnName::Parity, _) => {
            let mut c = Circuit::new(n);
            for j in 0..n {
                c.controlled(j, GateKind::X)?;
            }
            c
        }
        (FnName::Const0, _) => Circuit::new(n),
        (FnName::Const1, _) => {
            let mut c = Circuit::new(n);
            c.uncontrolled(GateKind::X);
            c
        }
        _ => {
            return Err(CliError::usage(format!(
                "no {} construction for {}",
                format!("{method:?}").to_lowercase(),
                t.name
            )))
        }
    };
    Ok(c)
}

pub fn synth(a: SynthArgs) -> CmdResult {
    unsupported(a.format, &[Format::Text, Format::Json, Format::Qasm])?;
    let t = a.target.resolve(None)?;
    let mut notes = Vec::new();
    let circuit = match a.method {
        Method::Qsp => {
            if t.spec.is_none() {
                return Err(CliError::usage(format!("{} is not symmetric; QSP needs a symmetric function", t.name)));
            }
            let spec = t.spec.as_ref().expect("symmetric");
            let params = params_for(&t)?;
            let s = synthesize(spec, &params, SolveOptions { relax: a.relax })
                .map_err(|e| CliError::verification(format!("synthesis failed: {e}")))?;
            let raw = compile_qsp(spec, &s.angles, &s.params)?;
            notes.push(format!(
                "signal parameters: L = {}, step = {:.12}, offset = {:.12}",
                s.params.length, s.params.delta_step, s.params.delta_offset
            ));
            notes.push(format!("entangling gates before merging: {}", raw.entangling_count()));
            if a.no_merge {
                raw
            } else {
                merge_adjacent(&raw)
            }
        }
        m => direct(&t, a.target.func, m)?,
    };
    let r = asp(&circuit, &t.f)?;
    let verified = (r.asp - 1.0).abs() <= a.tol;

    if let Some(path) = &a.out {
        let body = if a.format == Format::Qasm { circuit.to_qasm() } else { circuit.to_json() };
        fs::write(path, body)?;
    }
    if a.format == Format::Json {
        print_json(&json!({
            "function": t.name,
            "method": format!("{:?}", a.method).to_lowercase(),
            "entangling_gates": circuit.entangling_count(),
            "gates": circuit.len(),
            "classification": r.classification,
            "asp": r.asp,
            "verified": verified,
        }));
    } else {
        println!("function: {} (hex {})", t.name, t.f.to_hex());
        println!("method: {}", format!("{:?}", a.method).to_lowercase());
        for n in &notes {
            println!("{n}");
        }
        println!("entangling gates: {}", circuit.entangling_count());
        println!("total gates: {}", circuit.len());
        println!("classification: {}", r.classification);
        println!("ASP = {:.12}", r.asp);
        if a.format == Format::Qasm && a.out.is_none() {
            print!("{}", circuit.to_qasm());
        }
    }
    if verified {
        Ok(())
    } else {
        Err(CliError::verification(format!("ASP {} differs from 1 by more than {}", r.asp, a.tol)))
    }
}

fn builtin_circuit(b: Builtin, n: Option<usize>) -> Result<(Circuit, BooleanFunction), CliError> {
    let need = || n.ok_or_else(|| CliError::usage("--n is required for this builtin"));
    Ok(match b {
        Builtin::Fig1 => (builtin_slsb3_fig1(), limspace::boolfun::slsb(3)?),
        Builtin::SlsbRelative => {
            let n = need()?;
            (slsb_relative(n)?, limspace::boolfun::slsb(n)?)
        }
        Builtin::SlsbTrue => {
            let n = need()?;
            (slsb_true(n)?, limspace::boolfun::slsb(n)?)
        }
        Builtin::Ip => {
            let n = need()?;
            (ip_circuit(n)?, limspace::boolfun::ip(n)?)
        }
    })
}

pub fn simulate(a: SimulateArgs) -> CmdResult {
    unsupported(a.format, &[Format::Text, Format::Json, Format::Csv])?;
    let (circuit, natural) = match (&a.circuit, a.builtin) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            (Circuit::from_json(&text)?, None)
        }
        (None, Some(b)) => {
            let (c, f) = builtin_circuit(b, a.target.n)?;
            (c, Some(f))
        }
        (None, None) => return Err(CliError::usage("one of --circuit or --builtin is required")),
    };
    let (name, f) = if a.target.given() {
        let t = a.target.resolve(Some(circuit.arity()))?;
        (t.name, t.f)
    } else if let Some(f) = natural {
        (
            a.builtin
                .and_then(|b| b.to_possible_value())
                .map(|v| v.get_name().to_string())
                .expect("builtin"),
            f,
        )
    } else {
        return Err(CliError::usage("--fn or --table is required with --circuit"));
    };
    let r = asp(&circuit, &f)?;
    let gates = circuit.entangling_count();
    let analytic = a.eps.map(|e| noisy_asp_analytic(gates, e)).transpose()?;
    let mc = match (a.eps, a.shots) {
        (Some(e), Some(s)) => Some(noisy_asp_mc(&circuit, &f, e, s, a.seed)?),
        _ => None,
    };
    let csv = r.to_csv();
    if let Some(path) = &a.out {
        fs::write(path, &csv)?;
    }
    match a.format {
        Format::Csv => {
            if a.out.is_none() {
                print!("{csv}");
            }
        }
        Format::Json => print_json(&json!({
            "function": name,
            "n": circuit.arity(),
            "entangling_gates": gates,
            "classification": r.classification,
            "asp": r.asp,
            "eps": a.eps,
            "noisy_asp_analytic": analytic,
            "shots": a.shots,
            "seed": a.seed,
            "noisy_asp_mc": mc,
        })),
        _ => {
            println!("function: {name} (hex {})", f.to_hex());
            println!("entangling gates: {gates}");
            println!("classification: {}", r.classification);
            println!("ASP = {:.12}", r.asp);
            if let (Some(e), Some(v)) = (a.eps, analytic) {
                println!("noisy ASP (analytic, eps = {e}) = {v:.6}");
            }
            if let (Some(s), Some(v)) = (a.shots, mc) {
                println!("noisy ASP (Monte Carlo, {s} shots, seed {}) = {v:.6}", a.seed);
            }
        }
    }
    Ok(())
}

pub fn bounds(a: BoundsArgs) -> CmdResult {
    unsupported(a.format, &[Format::Text, Format::Json])?;
    let t = a.target.resolve(None)?;
    let spectrum = walsh_spectrum(&t.f);
    let gmax: f64 = spectrum.spectral_max();
    let lower = classical_lower_bound(gmax);
    let upper = if gmax > 0.0 { Some(classical_upper_bound(gmax)?) } else { None };
    let exact = if t.f.arity() <= MAX_EXACT_ARITY {
        Some(approximation_ratio(&t.f)?)
    } else {
        None
    };
    if a.format == Format::Json {
        print_json(&json!({
            "function": t.name,
            "gmax": gmax,
            "lower": lower,
            "upper": upper,
            "exact": exact.as_ref().map(|r| r.value.to_string()),
            "exact_value": exact.as_ref().map(|r| r.as_real::<f64>()),
        }));
        return Ok(());
    }
    let mut s = String::new();
    let _ = writeln!(s, "function: {} (hex {})", t.name, t.f.to_hex());
    let _ = writeln!(s, "gmax={gmax}");
    let _ = writeln!(s, "lower={lower}");
    match upper {
        Some(u) => {
            let _ = writeln!(s, "upper={u}");
        }
        None => {
            let _ = writeln!(s, "upper=undefined (all coefficients vanish)");
        }
    }
    if let Some(r) = exact {
        let _ = writeln!(s, "exact={} ({})", r.as_real::<f64>(), r.value);
    }
    print!("{s}");
    Ok(())
}

pub fn crossover(a: CrossoverArgs) -> CmdResult {
    unsupported(a.format, &[Format::Text, Format::Json])?;
    let families: Vec<(&str, Family)> = match a.family {
        FamilyArg::Ip => vec![("ip", Family::Ip)],
        FamilyArg::Slsb => vec![("slsb", Family::Slsb)],
        FamilyArg::Both => vec![("ip", Family::Ip), ("slsb", Family::Slsb)],
    };
    let mut rows = Vec::new();
    for (name, fam) in families {
        rows.push((name, advantage_crossover(a.eps, fam)?));
    }
    let threshold: f64 = noise_threshold();
    if a.format == Format::Json {
        let map: serde_json::Map<String, serde_json::Value> =
            rows.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        print_json(&json!({
            "eps": a.eps,
            "cap": CROSSOVER_CAP,
            "threshold": threshold,
            "crossover": map,
        }));
        return Ok(());
    }
    for (name, n) in rows {
        match n {
            Some(n) => println!("{name}: crossover at n = {n} (eps = {})", a.eps),
            None => println!("{name}: no crossover ≤ {CROSSOVER_CAP} (eps = {})", a.eps),
        }
    }
    println!("threshold 1 - 2^(-1/3) = {threshold:.6}");
    Ok(())
}
