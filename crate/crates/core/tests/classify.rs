mod common;

use std::sync::Arc;

use common::{catalog, prime_powers, ring};
use zdg_core::classify::{
    associated_graph, check_lemmas, check_local_annihilator, check_pir_product, check_pirloc, classify_ring,
    recognize_staircase, staircase, staircase_index_tuples, LemmaStatus,
};
use zdg_core::graph::DEFAULT_ISO_BUDGET;
use zdg_core::{Budgets, Error, FiniteRing};

fn local_catalog() -> Vec<(String, Arc<FiniteRing>)> {
    catalog()
        .into_iter()
        .filter(|e| e.ring.order() > 1 && e.ring.local_data(4096).unwrap().is_local)
        .map(|e| (e.name, e.ring))
        .collect()
}

#[test]
fn prime_power_grid_is_staircase() {
    let grid = prime_powers();
    assert_eq!(grid.len(), 15);
    for e in grid {
        let k: usize = e.name.rsplit('_').next().unwrap().parse().unwrap();
        let (_, g) = associated_graph(&e.ring).unwrap();
        assert_eq!(recognize_staircase(&g).index, Some(k), "{}", e.name);
        let r = check_pirloc(&e.ring, &Budgets::default()).unwrap();
        assert!(r.consistent && r.is_pir, "{}", e.name);
        assert_eq!(r.nilpotency_index, Some(k));
    }
}

#[test]
fn staircases_are_distinct() {
    for k in 0..=12 {
        assert_eq!(recognize_staircase(&staircase(k)).index, Some(k));
        for j in 0..k {
            assert!(staircase(k)
                .isomorphism(&staircase(j), DEFAULT_ISO_BUDGET)
                .unwrap()
                .is_none());
        }
    }
}

#[test]
fn pirloc_on_catalog() {
    let budgets = Budgets::default();
    for e in catalog() {
        match check_pirloc(&e.ring, &budgets) {
            Ok(r) => assert!(r.consistent, "{}: {r:?}", e.name),
            Err(Error::NotLocal) => assert!(!e.ring.local_data(4096).unwrap().is_local),
            Err(err) => panic!("{}: {err}", e.name),
        }
    }
    let r = check_pirloc(&ring("z4x_b"), &budgets).unwrap();
    assert_eq!((r.is_pir, r.staircase_index), (true, Some(3)));
    let r = check_pirloc(&ring("f2xy3"), &budgets).unwrap();
    assert!(!r.is_pir && r.staircase_index.is_none() && r.consistent);
    let (_, g) = associated_graph(&ring("f2xy3")).unwrap();
    assert_eq!(recognize_staircase(&g).looped_vertices, 4);
}

#[test]
fn local_annihilator_matches_locality() {
    for e in catalog() {
        let c = check_local_annihilator(&e.ring, &Budgets::default()).unwrap();
        assert!(c.consistent, "{}", e.name);
    }
}

#[test]
fn pir_products_of_two_local_rings() {
    let local = local_catalog();
    let budgets = Budgets::default();
    for (i, (na, a)) in local.iter().enumerate() {
        for (nb, b) in &local[i..] {
            let p = FiniteRing::product(&[a.clone(), b.clone()]).unwrap();
            let r = check_pir_product(&p, &budgets).unwrap();
            assert!(r.consistent, "{na} x {nb}: {r:?}");
        }
    }
}

#[test]
fn index_tuples() {
    assert_eq!(
        staircase_index_tuples(12),
        vec![vec![11], vec![5, 1], vec![3, 2], vec![2, 1, 1]]
    );
    assert!(staircase_index_tuples(1).is_empty());
}

#[test]
fn lemmas_pass_on_catalog() {
    let budgets = Budgets::default();
    let partner = ring("z3");
    for e in catalog() {
        let report = check_lemmas(&e.ring, &partner, &budgets).unwrap();
        assert!(report.passed(), "{}: {report:?}", e.name);
    }
    let report = check_lemmas(&ring("z12"), &partner, &budgets).unwrap();
    assert_eq!(
        report.get("annihilator_growth").unwrap().status,
        LemmaStatus::NotApplicable
    );
    let report = check_lemmas(&ring("z8"), &partner, &budgets).unwrap();
    for name in ["annihilator_growth", "staircase_neighbourhoods", "staircase_powers"] {
        assert_eq!(report.get(name).unwrap().status, LemmaStatus::Pass, "{name}");
    }
}

#[test]
fn final_remark_pair() {
    let (a, b) = (ring("f2xy_sq"), ring("f2xy_b"));
    assert!(a.ideal_poset_iso(&b, 4096).unwrap().is_some());
    let (_, ga) = associated_graph(&a).unwrap();
    let (_, gb) = associated_graph(&b).unwrap();
    assert_eq!((ga.order(), gb.order()), (6, 6));
    assert!(ga.isomorphism(&gb, DEFAULT_ISO_BUDGET).unwrap().is_none());
    let x = ga.vertex_labelled("(x)").unwrap();
    assert!(ga.has_loop(x));
    assert!(!gb.has_loop(gb.vertex_labelled("(x)").unwrap()));
}

#[test]
fn classification_report_fields() {
    let r = classify_ring("z12", &ring("z12"), &ring("z2"), &Budgets::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["ring", "is_local", "is_pir", "staircase", "lemmas"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!((r.is_local, r.is_pir, r.staircase), (false, true, None));
}

#[test]
fn pir_products_of_three_local_rings() {
    let local = local_catalog();
    let budgets = Budgets::default();
    for i in 0..local.len() {
        for j in i..local.len() {
            for k in j..local.len() {
                let rings = [local[i].1.clone(), local[j].1.clone(), local[k].1.clone()];
                let p = FiniteRing::product(&rings).unwrap();
                let r = check_pir_product(&p, &budgets).unwrap();
                assert!(r.consistent, "{} x {} x {}: {r:?}", local[i].0, local[j].0, local[k].0);
            }
        }
    }
}
