use firmcor::algmod::{basis_vector, firmness, firmness_right, Algebra, Bimodule};
use firmcor::comatrix::verify_comatrix;
use firmcor::corings::{coring_hom_check, enumerate_comodules, validate_comodule, Coring, DEFAULT_BUDGET};
use firmcor::exactlin::{quotient, Mat};
use firmcor::galois::canonical_maps;
use firmcor::instances;
use firmcor::tensorcalc;
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Mat> {
    (prime(), 1..=max_rows, 1..=max_cols).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |data| Mat::from_entries(p, r, c, data))
    })
}

fn vector(p: u32, n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..p, n)
}

/// Small algebras with and without unit, all of them firm.
fn firm_ring() -> impl Strategy<Value = Algebra> {
    (prime(), 1usize..=3, any::<bool>()).prop_map(|(p, n, corner)| {
        if corner {
            instances::first_column_ring(p, n)
        } else {
            Algebra::matrices(p, n.min(2))
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in matrix(6, 6)) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(|&x| x == 0));
        }
        prop_assert_eq!(m.image_basis().len(), m.rank());
    }

    #[test]
    fn quotient_section_is_split(rel in matrix(5, 5)) {
        let q = quotient(rel.p(), rel.rows(), &rel);
        prop_assert!(q.proj.mul(&q.sec).is_identity());
        prop_assert!(q.proj.mul(&rel).is_zero());
        prop_assert_eq!(q.dim() + rel.rank(), rel.rows());
    }

    #[test]
    fn invert_round_trips(m in matrix(4, 4)) {
        if let Ok(inv) = m.invert() {
            prop_assert!(m.mul(&inv).is_identity() && inv.mul(&m).is_identity());
        } else {
            prop_assert!(m.bijectivity_witness().is_some());
        }
    }

    #[test]
    fn firm_rings_are_idempotent(r in firm_ring()) {
        let fs = firmness(&r).unwrap();
        prop_assert!(fs.verify());
        prop_assert_eq!(fs.varpi.mul(&fs.d), Mat::identity(r.p, r.dim));
        // R R = R
        prop_assert_eq!(r.product_span().len(), r.dim);
    }

    #[test]
    fn tensoring_with_a_unital_ring_is_trivial(p in prime(), n in 1usize..=2, extra in 0usize..=2) {
        let a = Algebra::matrices(p, n);
        // M = A^(1+extra) as a right A-module
        let copies = 1 + extra;
        let dim = copies * a.dim;
        let mut act = Mat::zeros(p, dim, dim * a.dim);
        for c in 0..copies {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    for (k, v) in a.mult.col(i * a.dim + j).into_iter().enumerate() {
                        act.set(c * a.dim + k, (c * a.dim + i) * a.dim + j, v);
                    }
                }
            }
        }
        let m = Bimodule::new("M", p, dim).with_right(&a, act);
        let fs = firmness_right(&m).unwrap();
        prop_assert_eq!(fs.space.dim(), dim);
        prop_assert!(fs.verify());
    }

    #[test]
    fn pure_tensors_are_balanced(
        (p, x, r, y) in prime().prop_flat_map(|p| (Just(p), vector(p, 4), vector(p, 4), vector(p, 4)))
    ) {
        let a = Algebra::matrices(p, 2);
        let reg = Bimodule::regular(&a);
        let t = tensorcalc::chain(&[&reg, &reg]).unwrap();
        let xr = a.product(&x, &r);
        let ry = a.product(&r, &y);
        prop_assert_eq!(t.pure(&[&xr, &y]), t.pure(&[&x, &ry]));
        // and the multiplication map sees the same product
        let m = tensorcalc::multiplication_map(&reg).unwrap();
        prop_assert_eq!(m.apply(&t.pure(&[&x, &y])), a.product(&x, &y));
    }
}

#[test]
fn enumerated_comodules_validate() {
    for c in [Coring::trivial(&Algebra::ground(3)).unwrap(), Coring::matrix(2, 2).unwrap()] {
        let all = enumerate_comodules(&c, 2, DEFAULT_BUDGET).unwrap();
        assert!(!all.is_empty());
        for n in &all {
            assert!(validate_comodule(n, &c).unwrap().ok(), "{} over {}", n.name, c.name);
        }
    }
}

#[test]
fn identity_is_a_coring_map() {
    for b in instances::bundled() {
        let cm = b.comatrix().unwrap();
        let id = Mat::identity(cm.p(), cm.coring.dim());
        assert!(coring_hom_check(&cm.coring, &cm.coring, &id).unwrap().ok(), "{}", b.name);
        let checks = verify_comatrix(&cm).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{}: {checks:?}", b.name);
    }
}

#[test]
fn can_and_can_dagger_are_invertible_together() {
    for b in instances::bundled() {
        let g = b.setting().unwrap();
        let maps = canonical_maps(&g, false).unwrap();
        assert_eq!(maps.is_galois(), maps.can_dagger.invert().is_ok(), "{}", b.name);
        assert!(maps.checks.iter().all(|c| c.passed), "{}: {:?}", b.name, maps.checks);
    }
}

#[test]
fn canonical_text_is_a_fixed_point() {
    for b in instances::bundled() {
        let text = instances::save_string(&b);
        assert_eq!(instances::canonicalize(&text).unwrap(), text, "{}", b.name);
        let reparsed = instances::parse(&text).unwrap();
        assert_eq!(instances::save_string(&reparsed), text, "{}", b.name);
    }
}

#[test]
fn non_associative_ring_is_rejected_with_the_failing_triple() {
    let mut v = instances::to_json(&instances::corner_idempotents());
    // e_1 e_1 = e_2 in place of 0
    v["algebras"]["R"]["mult"][1][1] = serde_json::json!([0, 0, 1]);
    let err = instances::parse(&v.to_string()).unwrap_err();
    let msg = err.to_string();
    assert!(matches!(err, firmcor::Error::Validation(_)), "{msg}");
    let at = msg.split("associativity at [").nth(1).unwrap_or_else(|| panic!("no triple in {msg}"));
    let triple: Vec<usize> = at.split(']').next().unwrap().split(", ").map(|s| s.parse().unwrap()).collect();
    assert_eq!(triple.len(), 3);
    let t: Vec<Vec<Vec<u32>>> = serde_json::from_value(v["algebras"]["R"]["mult"].clone()).unwrap();
    let r = Algebra::from_tensor("R", 2, &t, None).unwrap();
    let e = |i: usize| basis_vector(3, i);
    let (i, j, k) = (triple[0], triple[1], triple[2]);
    assert_ne!(r.product(&r.product(&e(i), &e(j)), &e(k)), r.product(&e(i), &r.product(&e(j), &e(k))));
}
