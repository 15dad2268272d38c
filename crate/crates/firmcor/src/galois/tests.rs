use super::*;
use crate::check::all_passed;
use crate::instances::{self, bundled};

fn failed(checks: &[Check]) -> Vec<&Check> {
    checks.iter().filter(|c| !c.passed).collect()
}

#[test]
fn canonical_maps_hold_on_bundled() {
    for b in bundled() {
        let g = b.setting().unwrap_or_else(|e| panic!("{}: {e}", b.name));
        let maps = canonical_maps(&g, true).unwrap();
        assert!(all_passed(&maps.checks), "{}: {:?}", b.name, failed(&maps.checks));
    }
}

#[test]
fn self_comatrix_can_is_identity() {
    for b in bundled() {
        let cm = b.comatrix().unwrap();
        let g = GaloisSetting::self_comatrix(&cm).unwrap();
        assert!(g.can.is_identity(), "{}", b.name);
        assert!(matches!(galois_check(&canonical_maps(&g, false).unwrap()), GaloisVerdict::Galois { .. }));
    }
}

#[test]
fn sweedler_is_galois_with_base_endomorphisms() {
    let g = instances::sweedler_f4_f2().setting().unwrap();
    assert_eq!(g.can.rows(), 4);
    assert!(canonical_maps(&g, false).unwrap().is_galois());
    let e = endo_ring(&g).unwrap();
    assert_eq!(e.t.dim, 1);
    assert!(e.is_left_ideal());
    assert!(all_passed(&e.checks));
}

#[test]
fn projection_is_galois_but_not_faithfully_flat() {
    let g = instances::projection_f2xf2().setting().unwrap();
    assert!(canonical_maps(&g, false).unwrap().is_galois());
    let rep = flat_report(g.sigma(), g.r(), DEFAULT_IDEAL_BUDGET).unwrap();
    assert!(rep.flat);
    assert_eq!(rep.checked_ideals, 4);
    match rep.faithfully_flat {
        FaithfulFlatness::Refuted { ideal, .. } => assert_eq!(ideal, vec![vec![1, 0]]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn zero_comodule_satisfies_everything() {
    let g = instances::sweedler_f4_f2().setting().unwrap();
    let p = g.p();
    let zero = Bimodule::new("0", p, 0).with_right(g.a(), Mat::zeros(p, 0, 0));
    let n = Comodule::right("0", &g.coring, zero, Mat::zeros(p, 0, 0)).unwrap();
    let kit = adjunction_kit(&g, &n).unwrap();
    let v = condition_check(&kit, true);
    assert!(v.all_true() && v.consistent, "{v:?}");
}

#[test]
fn corner_ring_is_left_ideal() {
    let g = instances::corner_idempotents().setting().unwrap();
    let e = endo_ring(&g).unwrap();
    assert_eq!(e.t.dim, 9);
    assert!(e.is_left_ideal(), "{:?}", e.checks);
    let checks = left_ideal_checks(&g, &e).unwrap();
    assert!(!checks.is_empty() && all_passed(&checks), "{checks:?}");
}

#[test]
fn trivial_descent_is_certified() {
    let g = instances::trivial().setting().unwrap();
    let rep = descent_report(&g, 2, crate::corings::DEFAULT_BUDGET).unwrap();
    assert!(rep.consistent(), "{:?}", failed(&rep.checks));
    assert!(rep.equivalence_certified);
}

#[test]
fn projection_descent_fails_consistently() {
    let g = instances::projection_f2xf2().setting().unwrap();
    let rep = descent_report(&g, 2, crate::corings::DEFAULT_BUDGET).unwrap();
    assert!(rep.consistent(), "{:?}", failed(&rep.checks));
    assert!(rep.galois);
    assert!(!rep.faithfully_flat());
    assert!(!rep.statements.galois_faithfully_flat && rep.statements.agree());
    assert!(!rep.units_bijective);
}

#[test]
fn unit_triangles_on_bundled() {
    for b in bundled() {
        let g = b.setting().unwrap();
        let r = Bimodule::regular(g.r()).without_left().renamed("R");
        let rep = unit_checks(&g, &r).unwrap_or_else(|e| panic!("{}: {e}", b.name));
        assert!(all_passed(&rep.checks), "{}: {:?}", b.name, failed(&rep.checks));
    }
}

#[test]
fn sweedler_descent_is_certified() {
    let g = instances::sweedler_f4_f2().setting().unwrap();
    let rep = descent_report(&g, 3, crate::corings::DEFAULT_BUDGET).unwrap();
    assert!(rep.consistent(), "{:?}", failed(&rep.checks));
    assert!(!rep.partial, "{}", rep.label);
    assert!(rep.equivalence_certified);
    assert!(rep.family.iter().all(|e| e.conditions.all_true()));
}
