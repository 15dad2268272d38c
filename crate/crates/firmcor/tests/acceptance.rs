//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 7 asks for a comodule with non-bijective `ζ_N` on
//! projection-f2xf2, but the coring there is trivial and every `ζ_N` is
//! bijective. Its line reports FAIL; the run only asserts the facts that do
//! hold there (Galois, faithful flatness refuted with a witness ideal,
//! descent statements consistent and all false).

use firmcor::galois::{descent_report, FaithfulFlatness};
use firmcor::instances;
use firmcor::selftest::{run_criterion, TITLES};
use std::process::ExitCode;
use std::time::Instant;

const KNOWN_UNATTAINABLE: [usize; 1] = [7];

fn negative_descent_facts() -> Result<(), String> {
    let g = instances::projection_f2xf2().setting().map_err(|e| e.to_string())?;
    let rep = descent_report(&g, 2, firmcor::corings::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    if !rep.galois {
        return Err("projection-f2xf2 should be Galois".into());
    }
    match &rep.flat.faithfully_flat {
        FaithfulFlatness::Refuted { ideal, .. } if !ideal.is_empty() => {}
        other => return Err(format!("faithful flatness should be refuted by a nonzero ideal, got {other:?}")),
    }
    if !rep.consistent() || !rep.family.iter().all(|e| e.conditions.consistent) {
        return Err("descent report is not internally consistent".into());
    }
    if rep.statements.galois_faithfully_flat || !rep.statements.agree() {
        return Err(format!("descent statements should all be false: {:?}", rep.statements));
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut unexpected = Vec::new();
    for id in 1..=TITLES.len() {
        let r = run_criterion(id, false);
        println!("{}", r.line());
        if !r.passed && !KNOWN_UNATTAINABLE.contains(&id) {
            unexpected.push(id);
        }
    }
    if let Err(e) = negative_descent_facts() {
        println!("criterion 7 facts: {e}");
        unexpected.push(7);
    }
    println!("acceptance suite finished in {:.2} s", start.elapsed().as_secs_f64());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
