//! Instance-level descent verdicts over an enumerated family of comodules.

use super::flat::{flat_report, quotient_module, right_ideals, FaithfulFlatness, FlatReport};
use super::kit::{adjunction_kit, condition_check, unit_checks, ConditionVector};
use super::{canonical_maps, endo_ring, GaloisSetting};
use crate::algmod::Bimodule;
use crate::check::{all_passed, Check};
use crate::corings::{enumerate_comodules, regular_comodule, Comodule, Side};
use crate::exactlin::Mat;
use crate::tensorcalc;
use crate::{Error, Result};
use serde::Serialize;

/// Surjectivity of `Hom^C(Σ, N) ⊗_R Σ → N` over a family.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorReport {
    pub generator: bool,
    pub checked: usize,
    /// First comodule where the evaluation map misses part of `N`.
    pub failing: Option<String>,
}

pub fn generator_check(g: &GaloisSetting, family: &[Comodule]) -> Result<GeneratorReport> {
    let mut failing = None;
    for n in family {
        if !adjunction_kit(g, n)?.zeta.is_surjective() {
            failing = Some(n.name.clone());
            break;
        }
    }
    Ok(GeneratorReport { generator: failing.is_none(), checked: family.len(), failing })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyEntry {
    pub comodule: String,
    pub dim: usize,
    pub conditions: ConditionVector,
    /// `ζ_N` surjective.
    pub generated: bool,
    pub kit_checks_passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitEntry {
    pub module: String,
    pub dim: usize,
    pub injective: bool,
    pub bijective: bool,
    pub triangles_hold: bool,
}

/// The five equivalent conditions for `− ⊗_R Σ` to be an equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStatements {
    /// Galois and faithfully flat.
    pub galois_faithfully_flat: bool,
    /// Counits and units bijective.
    pub equivalence: bool,
    /// Galois and an equivalence onto comodules over `Σ* ⊗_R Σ`.
    pub galois_equivalence: bool,
    /// Generator and `− ⊗_R Σ` full and faithful.
    pub generator_full_faithful: bool,
    /// Generator, `− ⊗_R Σ` faithful, and `R` a left ideal of `T`.
    pub generator_faithful_left_ideal: bool,
}

impl DescentStatements {
    pub fn agree(&self) -> bool {
        let v = [
            self.galois_faithfully_flat,
            self.equivalence,
            self.galois_equivalence,
            self.generator_full_faithful,
            self.generator_faithful_left_ideal,
        ];
        v.iter().all(|&b| b == v[0])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DescentReport {
    pub instance: String,
    pub max_dim: usize,
    /// Largest dimension actually enumerated.
    pub enumerated_dim: usize,
    pub partial: bool,
    pub label: String,
    pub galois: bool,
    pub flat: FlatReport,
    pub generator: GeneratorReport,
    pub left_ideal: bool,
    /// `Hom^C(Σ, −)` full and faithful on the family: every `ζ_N` bijective.
    pub full_faithful: bool,
    pub units_bijective: bool,
    pub units_injective: bool,
    pub family: Vec<FamilyEntry>,
    pub units: Vec<UnitEntry>,
    pub statements: DescentStatements,
    pub equivalence_certified: bool,
    pub checks: Vec<Check>,
}

impl DescentReport {
    pub fn consistent(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn faithfully_flat(&self) -> bool {
        self.flat.faithfully_flat == FaithfulFlatness::Certified
    }
}

/// Enumerated comodules up to `max_dim`, lowering the bound on budget
/// exhaustion; `Σ` and `C` are appended.
fn family(g: &GaloisSetting, max_dim: usize, budget: u64) -> Result<(Vec<Comodule>, usize)> {
    let mut dim = max_dim;
    let mut out = loop {
        match enumerate_comodules(&g.coring, dim, budget) {
            Ok(f) => break f,
            Err(Error::SearchBudgetExceeded(_) | Error::SearchSpaceTooLarge(_)) if dim > 0 => dim -= 1,
            Err(e) => return Err(e),
        }
    };
    out.push(g.rho.clone());
    let mut c = regular_comodule(&g.coring, Side::Right)?;
    c.name = "C".into();
    out.push(c);
    Ok((out, dim))
}

/// Firm test modules `R` and `(R/I) ⊗_R R`.
fn test_modules(g: &GaloisSetting, budget: u64) -> Result<Vec<Bimodule>> {
    let p = g.p();
    let r = g.r();
    let r_right = Bimodule::regular(r).without_left().renamed("R");
    let mut out = vec![r_right.clone()];
    for (k, ideal) in right_ideals(r, budget).ideals.iter().enumerate().take(16) {
        if ideal.is_empty() {
            continue;
        }
        let (q, _) = quotient_module(&r_right, &Mat::from_cols(p, r.dim, ideal), "R/I")?;
        let qr = tensorcalc::chain(&[&q, &Bimodule::regular(r)])?;
        out.push(qr.as_bimodule().renamed(&format!("(R/I{k})⊗R")));
    }
    Ok(out)
}

fn implies(name: &str, lhs: bool, rhs: bool) -> Check {
    Check::new(name, !lhs || rhs, format!("premise {lhs}, conclusion {rhs}"))
}

pub fn descent_report(g: &GaloisSetting, max_dim: usize, budget: u64) -> Result<DescentReport> {
    let maps = canonical_maps(g, false)?;
    let galois = maps.is_galois();
    let mut checks = maps.checks.clone();
    let (comodules, enumerated_dim) = family(g, max_dim, budget)?;
    let mut entries = Vec::new();
    let mut failing = None;
    for n in &comodules {
        let kit = adjunction_kit(g, n)?;
        let conditions = condition_check(&kit, galois);
        let generated = kit.zeta.is_surjective();
        if !generated && failing.is_none() {
            failing = Some(n.name.clone());
        }
        if !conditions.consistent {
            checks.push(Check::new("equivalent conditions agree", false, format!("on {}: {conditions:?}", n.name)));
        }
        entries.push(FamilyEntry {
            comodule: n.name.clone(),
            dim: n.dim(),
            conditions,
            generated,
            kit_checks_passed: all_passed(&kit.checks),
        });
    }
    checks.push(Check::new(
        "equivalent conditions agree on every comodule",
        entries.iter().all(|e| e.conditions.consistent),
        format!("{} comodules", entries.len()),
    ));
    checks.push(Check::new(
        "kit identities hold on every comodule",
        entries.iter().all(|e| e.kit_checks_passed),
        format!("{} comodules", entries.len()),
    ));
    let generator = GeneratorReport { generator: failing.is_none(), checked: comodules.len(), failing };
    let full_faithful = entries.iter().all(|e| e.conditions.zeta);
    let flat = flat_report(g.sigma(), g.r(), budget.min(super::DEFAULT_IDEAL_BUDGET))?;
    let endo = endo_ring(g)?;
    checks.extend(endo.checks.iter().cloned());
    let left_ideal = endo.is_left_ideal();

    let mut units = Vec::new();
    for m in test_modules(g, budget)? {
        let rep = unit_checks(g, &m)?;
        units.push(UnitEntry {
            module: rep.module.clone(),
            dim: m.dim,
            injective: rep.injective,
            bijective: rep.bijective,
            triangles_hold: all_passed(&rep.checks),
        });
    }
    checks.push(Check::new(
        "triangle identities hold on every test module",
        units.iter().all(|u| u.triangles_hold),
        format!("{} modules", units.len()),
    ));
    let units_bijective = units.iter().all(|u| u.bijective);
    let units_injective = units.iter().all(|u| u.injective);
    let counits = entries.iter().all(|e| e.conditions.pi);
    let ff = flat.faithfully_flat == FaithfulFlatness::Certified;
    let statements = DescentStatements {
        galois_faithfully_flat: galois && ff,
        equivalence: counits && units_bijective,
        galois_equivalence: galois && counits && units_bijective,
        generator_full_faithful: generator.generator && units_bijective,
        generator_faithful_left_ideal: generator.generator && units_injective && left_ideal,
    };
    checks.push(Check::new("the five descent statements agree", statements.agree(), format!("{statements:?}")));
    let all_psi = entries.iter().all(|e| e.conditions.psi);
    let all_eq = entries.iter().all(|e| e.conditions.equalizer);
    checks.push(Check::new(
        "full and faithful agrees with Galois and Ψ bijective",
        full_faithful == (galois && all_psi) || !galois,
        format!("full and faithful {full_faithful}, Galois {galois}, all Ψ {all_psi}"),
    ));
    checks.push(Check::new(
        "full and faithful agrees with Galois and equalizers preserved",
        full_faithful == (galois && all_eq) || !galois,
        format!("full and faithful {full_faithful}, Galois {galois}, all equalizers {all_eq}"),
    ));
    checks.push(implies("Galois and flat imply full and faithful", galois && flat.flat, full_faithful));
    checks.push(implies("full and faithful implies generator", full_faithful, generator.generator));
    checks.push(implies(
        "left ideal and generator imply Galois and flat",
        left_ideal && generator.generator,
        galois && flat.flat,
    ));
    let partial = enumerated_dim < max_dim || flat.approximate;
    let equivalence_certified = statements.galois_faithfully_flat && statements.agree() && all_passed(&checks);
    let label = if partial {
        format!("partial: certified up to dimension {enumerated_dim} of {max_dim}")
    } else {
        format!("certified up to dimension {max_dim}")
    };
    Ok(DescentReport {
        instance: g.name.clone(),
        max_dim,
        enumerated_dim,
        partial,
        label,
        galois,
        flat,
        generator,
        left_ideal,
        full_faithful,
        units_bijective,
        units_injective,
        family: entries,
        units,
        statements,
        equivalence_certified,
        checks,
    })
}
