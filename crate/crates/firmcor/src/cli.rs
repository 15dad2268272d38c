//! The `firmcor` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (a witness is printed), 2 for input or usage errors.

use crate::check::{all_passed, Check};
use crate::comatrix::{build_comatrix, validate_data, verify_comatrix};
use crate::corings::{validate_comodule, validate_coring, DEFAULT_BUDGET};
use crate::dualring::dual_report;
use crate::galois::{canonical_maps, descent_report, flat_report, galois_check, FaithfulFlatness, GaloisVerdict};
use crate::instances::{self, InstanceBundle, Target};
use crate::{selftest, Error, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(name = "firmcor", version, about = "Exact computations with comatrix corings over F_p")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate an instance and its comatrix coring.
    Validate { instance: String },
    /// Build the comatrix coring and optionally write it out.
    Comatrix {
        instance: String,
        /// Write the instance with its comatrix coring as target.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether Σ is a Galois comodule.
    Galois { instance: String },
    /// Flatness and faithful flatness of Σ over R.
    Flat {
        instance: String,
        #[arg(long, default_value_t = crate::galois::DEFAULT_IDEAL_BUDGET)]
        ideal_budget: u64,
    },
    /// Descent verdict over comodules up to a dimension bound.
    Descent {
        instance: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The dual ring of the coring and its identities.
    Dual { instance: String },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long)]
        quick: bool,
    },
    /// List the bundled instances.
    List,
}

/// One command's outcome; both renderings are produced from this.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub command: String,
    pub instance: Option<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Verdict {
    fn new(command: &str, instance: Option<&str>, checks: Vec<Check>, details: Value) -> Verdict {
        let witnesses: Vec<String> =
            checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        Verdict {
            command: command.into(),
            instance: instance.map(str::to_string),
            passed: all_passed(&checks),
            checks,
            witnesses,
            details,
            timing_ms: None,
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = format!(
            "{}{}: {}\n",
            self.command,
            self.instance.as_ref().map(|i| format!(" {i}")).unwrap_or_default(),
            if self.passed { "PASS" } else { "FAIL" }
        );
        for c in &self.checks {
            s += &format!("  [{}] {}: {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                match v {
                    Value::String(t) => s += &format!("  {k}: {t}\n"),
                    other => s += &format!("  {k}: {other}\n"),
                }
            }
        }
        for w in &self.witnesses {
            s += &format!("  witness: {w}\n");
        }
        if let Some(t) = self.timing_ms {
            s += &format!("  time: {t:.1} ms\n");
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn validate(b: &InstanceBundle) -> Result<Verdict> {
    validate_data(&b.data)?;
    let cm = build_comatrix(&b.data)?;
    let mut checks = verify_comatrix(&cm)?;
    checks.push(Check::report("comatrix coring axioms", &validate_coring(&cm.coring)?));
    if let Some(t) = &b.target {
        checks.push(Check::report("target coring axioms", &validate_coring(&t.coring)?));
        let g = b.setting_for(&cm)?;
        checks.push(Check::report("Σ is a comodule over the target", &validate_comodule(&g.rho, &g.coring)?));
    }
    let d = &b.data;
    let details = json!({
        "p": d.p(),
        "dims": { "A": d.a.dim, "B": d.b.dim, "R": d.r.dim, "Sigma": d.s(), "SigmaPrime": d.s_prime() },
        "comatrix_dim": cm.coring.dim(),
        "target": b.target.as_ref().map(|t| t.coring.name.clone()),
    });
    Ok(Verdict::new("validate", Some(&b.name), checks, details))
}

fn comatrix(b: &InstanceBundle, out: Option<&PathBuf>) -> Result<Verdict> {
    let cm = build_comatrix(&b.data)?;
    let mut checks = verify_comatrix(&cm)?;
    checks.push(Check::report("coring axioms", &validate_coring(&cm.coring)?));
    let bundle = InstanceBundle {
        name: format!("{}-comatrix", b.name),
        notes: format!("{} with its comatrix coring as target", b.name),
        data: b.data.clone(),
        target: Some(Target { coring: cm.coring.clone(), coaction: cm.rho_sigma.coaction.clone() }),
    };
    if let Some(path) = out {
        instances::save(&bundle, path)?;
    }
    let details = json!({
        "dim": cm.coring.dim(),
        "base_dim": cm.coring.base.dim,
        "delta_shape": [cm.coring.delta.rows(), cm.coring.delta.cols()],
        "written": out.map(|p| p.display().to_string()),
    });
    Ok(Verdict::new("comatrix", Some(&b.name), checks, details))
}

fn galois(b: &InstanceBundle) -> Result<Verdict> {
    let g = b.setting()?;
    let maps = canonical_maps(&g, true)?;
    let mut checks = maps.checks.clone();
    let verdict = match galois_check(&maps) {
        GaloisVerdict::Galois { .. } => Check::new("Σ is Galois", true, "can is invertible"),
        GaloisVerdict::NotGalois { witness } => Check::new("Σ is Galois", false, witness.to_string()),
    };
    checks.push(verdict);
    let details = json!({ "coring": g.coring.name, "galois": maps.is_galois(), "can_shape": [g.can.rows(), g.can.cols()] });
    Ok(Verdict::new("galois", Some(&b.name), checks, details))
}

fn ff_check(ff: &FaithfulFlatness) -> Check {
    match ff {
        FaithfulFlatness::Certified => Check::new("Σ faithfully flat", true, "certified on every right ideal"),
        FaithfulFlatness::Refuted { ideal, reason } => {
            Check::new("Σ faithfully flat", false, format!("refuted by ideal {ideal:?}: {reason}"))
        }
        FaithfulFlatness::Inconclusive { reason } => {
            Check::new("Σ faithfully flat", false, format!("inconclusive: {reason}"))
        }
    }
}

fn flat(b: &InstanceBundle, budget: u64) -> Result<Verdict> {
    let g = b.setting()?;
    let rep = flat_report(g.sigma(), g.r(), budget)?;
    let flat_detail = match &rep.non_flat_ideal {
        None => format!("I ⊗_R Σ → Σ injective for {} right ideals", rep.checked_ideals),
        Some(i) => format!("I ⊗_R Σ → Σ not injective for ideal {i:?}"),
    };
    let checks = vec![Check::new("Σ flat", rep.flat, flat_detail), ff_check(&rep.faithfully_flat)];
    let details = serde_json::to_value(&rep).expect("serializable");
    Ok(Verdict::new("flat", Some(&b.name), checks, details))
}

fn descent(b: &InstanceBundle, max_dim: usize, budget: u64) -> Result<Verdict> {
    let g = b.setting()?;
    let rep = descent_report(&g, max_dim, budget)?;
    let mut checks = rep.checks.clone();
    checks.push(Check::new("Σ is Galois", rep.galois, format!("coring {}", g.coring.name)));
    checks.push(ff_check(&rep.flat.faithfully_flat));
    let verdict = if rep.equivalence_certified { "− ⊗_R Σ is an equivalence" } else { "no equivalence" };
    checks.push(Check::new("descent equivalence", rep.equivalence_certified, format!("{verdict}; {}", rep.label)));
    let details = json!({
        "label": rep.label,
        "statements": rep.statements,
        "generator": rep.generator,
        "left_ideal": rep.left_ideal,
        "full_faithful": rep.full_faithful,
        "units_bijective": rep.units_bijective,
        "family": rep.family,
        "units": rep.units,
    });
    Ok(Verdict::new("descent", Some(&b.name), checks, details))
}

fn dual(b: &InstanceBundle) -> Result<Verdict> {
    let g = b.setting()?;
    let rep = dual_report(&g.coring)?;
    let details = json!({ "coring": g.coring.name, "dual_dim": rep.dim });
    Ok(Verdict::new("dual", Some(&b.name), rep.checks, details))
}

fn selftest_verdict(quick: bool) -> Verdict {
    let results = selftest::run_all(quick);
    let checks = results.iter().map(|r| Check::new(&format!("criterion {}: {}", r.id, r.title), r.passed, &r.detail)).collect();
    Verdict::new("selftest", None, checks, json!({ "quick": quick }))
}

fn list() -> Verdict {
    let details: serde_json::Map<String, Value> =
        instances::bundled().into_iter().map(|b| (b.name, Value::String(b.notes))).collect();
    Verdict::new("list", None, Vec::new(), Value::Object(details))
}

fn dispatch(cmd: &Command) -> Result<Verdict> {
    match cmd {
        Command::Validate { instance } => validate(&instances::resolve(instance)?),
        Command::Comatrix { instance, out } => comatrix(&instances::resolve(instance)?, out.as_ref()),
        Command::Galois { instance } => galois(&instances::resolve(instance)?),
        Command::Flat { instance, ideal_budget } => flat(&instances::resolve(instance)?, *ideal_budget),
        Command::Descent { instance, max_dim, budget } => descent(&instances::resolve(instance)?, *max_dim, *budget),
        Command::Dual { instance } => dual(&instances::resolve(instance)?),
        Command::Selftest { quick } => Ok(selftest_verdict(*quick)),
        Command::List => Ok(list()),
    }
}

/// Runs one instance command with default parameters, outside of argument
/// parsing. `command` is one of `validate`, `comatrix`, `galois`, `flat`,
/// `descent` or `dual`.
pub fn verdict_for(command: &str, b: &InstanceBundle) -> Result<Verdict> {
    match command {
        "validate" => validate(b),
        "comatrix" => comatrix(b, None),
        "galois" => galois(b),
        "flat" => flat(b, crate::galois::DEFAULT_IDEAL_BUDGET),
        "descent" => descent(b, 2, DEFAULT_BUDGET),
        "dual" => dual(b),
        other => Err(Error::Invalid(format!("unknown command {other:?}"))),
    }
}

/// Whether `e` is a problem with the input rather than a computed failure.
pub fn is_input_error(e: &Error) -> bool {
    matches!(e, Error::Parse { .. } | Error::Validation(_) | Error::Io(_) | Error::UnknownInstance(_) | Error::Lin(crate::LinError::NotPrime(_)))
}

/// Runs the CLI on `args` (including the program name).
/// Errors in the input itself exit with 2; structural failures found while
/// computing are mathematical and exit with 1.
pub fn run<I: IntoIterator<Item = String>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok(mut v) => {
            if cli.timing {
                v.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let text = if cli.json {
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            } else {
                v.render_text()
            };
            let _ = out.write_all(text.as_bytes());
            v.exit_code()
        }
        Err(e) => {
            let code = if is_input_error(&e) { 2 } else { 1 };
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string(), "exit_code": code }));
            }
            let _ = writeln!(err, "firmcor: {e}");
            code
        }
    }
}

pub fn main_exit() -> i32 {
    run(std::env::args(), &mut std::io::stdout(), &mut std::io::stderr())
}
