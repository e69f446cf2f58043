mod common;

use common::catalog;
use zdg_core::relations::{classical_views, random_partitions};
use zdg_core::{EqRelation, FiniteRing, RelationKind};

const BASIC: [RelationKind; 4] = [
    RelationKind::Equality,
    RelationKind::StronglyAssociated,
    RelationKind::Associated,
    RelationKind::Equiannihilated,
];

fn brute_is_zdr(rel: &EqRelation) -> bool {
    let r = rel.ring();
    let z = r.zero();
    for a in r.elements() {
        for a2 in r.elements().filter(|&x| rel.related(a, x)) {
            for b in r.elements() {
                if r.mul(a, b) != z {
                    continue;
                }
                if r.elements().any(|b2| rel.related(b, b2) && r.mul(a2, b2) != z) {
                    return false;
                }
            }
        }
    }
    true
}

fn brute_is_finer(fine: &EqRelation, coarse: &EqRelation) -> bool {
    let r = fine.ring();
    r.elements()
        .all(|a| r.elements().all(|b| !fine.related(a, b) || coarse.related(a, b)))
}

#[test]
fn zero_divisor_relations_are_exactly_refinements_of_equiannihilation() {
    for e in catalog() {
        let ann = EqRelation::compute(&e.ring, &RelationKind::Equiannihilated).unwrap();
        let parts = random_partitions(&e.ring, 60, 7);
        assert_eq!(parts.len(), 60);
        let mut zdr = 0;
        for p in &parts {
            let finer = p.is_finer(&ann).unwrap();
            assert_eq!(p.is_zero_divisor_relation(), finer, "{} {:?}", e.name, p.blocks());
            assert_eq!(finer, brute_is_finer(p, &ann));
            if e.ring.order() <= 16 {
                assert_eq!(
                    p.is_zero_divisor_relation(),
                    brute_is_zdr(p),
                    "{} {:?}",
                    e.name,
                    p.blocks()
                );
            }
            zdr += finer as usize;
        }
        // the sample must exercise both outcomes on rings with room to split
        if ann.len() < e.ring.order() {
            assert!(zdr > 0 && zdr < parts.len(), "{}: {zdr} of {}", e.name, parts.len());
        }
    }
}

#[test]
fn witness_really_breaks_the_relation() {
    for e in catalog() {
        for p in random_partitions(&e.ring, 50, 11) {
            if let Some([a, a2, b, b2]) = p.zero_divisor_witness() {
                let r = &e.ring;
                assert!(p.related(a, a2) && p.related(b, b2));
                assert_eq!(r.mul(a, b), r.zero());
                assert_ne!(r.mul(a2, b2), r.zero());
            }
        }
    }
}

#[test]
fn standard_relations_form_a_chain() {
    for e in catalog() {
        let rels: Vec<EqRelation> = BASIC.iter().map(|k| EqRelation::compute(&e.ring, k).unwrap()).collect();
        for w in rels.windows(2) {
            assert!(w[0].is_finer(&w[1]).unwrap(), "{}", e.name);
            assert!(brute_is_finer(&w[0], &w[1]));
        }
        for rel in &rels {
            assert!(rel.is_zero_divisor_relation(), "{} {}", e.name, rel.kind());
            assert_eq!(rel.blocks()[rel.block_of(e.ring.zero())], vec![e.ring.zero()]);
        }
        for k in [RelationKind::nilpotent_blend(), RelationKind::unit_blend()] {
            let rel = EqRelation::compute(&e.ring, &k).unwrap();
            assert!(rel.is_zero_divisor_relation(), "{} {k}", e.name);
        }
    }
}

#[test]
fn associated_blocks_match_principal_ideals() {
    for e in catalog() {
        let rel = EqRelation::compute(&e.ring, &RelationKind::Associated).unwrap();
        assert_eq!(rel.len(), e.ring.principal_ideals().len(), "{}", e.name);
        for a in e.ring.elements() {
            for b in e.ring.elements() {
                let same = e.ring.principal_ideal(a).members() == e.ring.principal_ideal(b).members();
                assert_eq!(rel.related(a, b), same);
            }
        }
    }
}

#[test]
fn classical_graphs_of_zn() {
    for n in 2..=30u64 {
        let r = FiniteRing::zn(n).unwrap();
        let v = classical_views(&r);
        let zd: Vec<u64> = (1..n).filter(|a| (1..n).any(|b| a * b % n == 0)).collect();
        let edges = zd
            .iter()
            .flat_map(|a| zd.iter().map(move |b| (a, b)))
            .filter(|(a, b)| a < b && *a * *b % n == 0)
            .count();
        assert_eq!(v.anderson_livingston.order(), zd.len(), "Z/{n}");
        assert_eq!(v.anderson_livingston.edge_count(), edges, "Z/{n}");
        assert_eq!(v.beck.order(), n as usize);
        assert_eq!(v.beck.loop_count(), 0);
    }
}

#[test]
fn custom_partition_round_trip() {
    let r = FiniteRing::zn(6).unwrap();
    let kind = RelationKind::custom_from_json("[[0],[1,5],[2,4],[3]]").unwrap();
    let rel = EqRelation::compute(&r, &kind).unwrap();
    assert_eq!(rel.len(), 4);
    assert!(rel.is_zero_divisor_relation());
    let bad = RelationKind::custom_from_json("[[0,1],[2,3,4,5]]").unwrap();
    assert!(!EqRelation::compute(&r, &bad).unwrap().is_zero_divisor_relation());
    assert!(RelationKind::custom_from_json("[[0,1],[1,2,3,4,5]]")
        .and_then(|k| EqRelation::compute(&r, &k))
        .is_err());
}
