mod common;

use std::sync::Arc;

use common::{catalog, ring};
use zdg_core::classify::{associated_graph, check_side_subgraphs, LemmaStatus};
use zdg_core::functor::{
    decompose, find_graph_split, invert_product, localization_comparison, product_comparison,
    search_equalizer_counterexample,
};
use zdg_core::graph::DEFAULT_ISO_BUDGET;
use zdg_core::{FiniteRing, RelationKind};

#[test]
fn products_of_catalog_pairs() {
    let entries = catalog();
    let mut pairs = 0;
    for a in &entries {
        for b in &entries {
            if a.ring.order() * b.ring.order() > 256 {
                continue;
            }
            pairs += 1;
            let report = product_comparison(&a.ring, &b.ring, &RelationKind::Associated).unwrap();
            assert!(report.holds(), "{} x {}: {:?}", a.name, b.name, report.violations());
            assert!(report.flags.is_iso, "{} x {}", a.name, b.name);
        }
    }
    assert!(pairs > 100);
}

#[test]
fn unit_blend_product_is_not_iso() {
    let report = product_comparison(&ring("z2"), &ring("z4"), &RelationKind::unit_blend()).unwrap();
    assert_eq!(report.counters["source_vertices"], 7);
    assert_eq!(report.counters["target_vertices"], 6);
    assert!(!report.flags.is_iso && report.flags.is_epi && report.flags.is_strong);
    assert!(report.holds());
}

#[test]
fn side_subgraphs_over_catalog_pairs() {
    let entries = catalog();
    for a in &entries {
        for b in &entries {
            if a.ring.order() * b.ring.order() > 256 {
                continue;
            }
            let r = check_side_subgraphs(&a.ring, &b.ring, DEFAULT_ISO_BUDGET).unwrap();
            assert_ne!(r.status, LemmaStatus::Fail, "{} x {}", a.name, b.name);
        }
    }
}

#[test]
fn equalizer_search_finds_a_failure() {
    let rings: Vec<(String, Arc<FiniteRing>)> = catalog().into_iter().map(|e| (e.name, e.ring)).collect();
    let search = search_equalizer_counterexample(&rings, &RelationKind::Associated, 16, 1 << 20).unwrap();
    let found = search.counterexample.expect("counterexample");
    assert!(!found.flags.is_iso);
    assert!(found.flags.is_strong);
}

#[test]
fn localization_at_units_is_iso() {
    for e in catalog() {
        let units = e.ring.units();
        let report = localization_comparison(&e.ring, &units, &RelationKind::Associated).unwrap();
        assert!(report.holds(), "{}", e.name);
        assert!(report.flags.is_iso, "{}", e.name);
    }
}

#[test]
fn splitting_recovers_factors() {
    for (name, expected) in [("z6", vec![2, 3]), ("z12", vec![3, 4]), ("z30", vec![2, 3, 5])] {
        let d = decompose(&ring(name), DEFAULT_ISO_BUDGET).unwrap();
        let mut orders = d.leaf_orders();
        orders.sort_unstable();
        assert_eq!(orders, expected, "{name}");
    }
    for name in ["z2", "z8", "z4x_a", "z4x_b", "f2xy3", "f2xy_sq"] {
        let (_, g) = associated_graph(&ring(name)).unwrap();
        assert!(find_graph_split(&g, DEFAULT_ISO_BUDGET).unwrap().is_none(), "{name}");
        assert_eq!(decompose(&ring(name), DEFAULT_ISO_BUDGET).unwrap().leaves.len(), 1);
    }
}

#[test]
fn inversion_over_catalog_products() {
    let local: Vec<_> = catalog()
        .into_iter()
        .filter(|e| e.ring.order() > 1 && e.ring.local_data(4096).unwrap().is_local)
        .collect();
    for a in &local {
        for b in &local {
            if a.ring.order() * b.ring.order() > 64 {
                continue;
            }
            let p = FiniteRing::product(&[a.ring.clone(), b.ring.clone()]).unwrap();
            let (rel, _) = associated_graph(&p).unwrap();
            let (_, ga) = associated_graph(&a.ring).unwrap();
            let (_, gb) = associated_graph(&b.ring).unwrap();
            let f = invert_product(&rel, &ga, &gb, DEFAULT_ISO_BUDGET).unwrap();
            assert!(f.iso.is_bijective());
            assert!(f.side_isos.0.flags().is_bijective && f.side_isos.1.flags().is_bijective);
            let mut orders = [f.quotients.0.order(), f.quotients.1.order()];
            orders.sort_unstable();
            let mut want = [a.ring.order(), b.ring.order()];
            want.sort_unstable();
            assert_eq!(orders, want, "{} x {}", a.name, b.name);
        }
    }
}
