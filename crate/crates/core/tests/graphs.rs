mod common;

use std::sync::Arc;

use common::{catalog, ring};
use proptest::prelude::*;
use zdg_core::graph::{are_isomorphic, restrict_to_zero_divisors, zeta, DEFAULT_ISO_BUDGET};
use zdg_core::{EqRelation, FiniteRing, Graph, RelationKind};

const BASIC: [RelationKind; 4] = [
    RelationKind::Equality,
    RelationKind::StronglyAssociated,
    RelationKind::Associated,
    RelationKind::Equiannihilated,
];

fn iso(g: &Graph, h: &Graph) -> bool {
    g.isomorphism(h, DEFAULT_ISO_BUDGET).unwrap().is_some()
}

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::with_order(n);
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            if bits[k % bits.len()] {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn brute_diameter(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut frontier = vec![s];
        while let Some(v) = frontier.pop() {
            for u in g.neighbors(v) {
                if dist[u] > dist[v] + 1 {
                    dist[u] = dist[v] + 1;
                    frontier.push(u);
                }
            }
        }
        best = best.max(*dist.iter().max().unwrap());
    }
    (best != usize::MAX).then_some(best)
}

#[test]
fn zero_divisor_part_is_connected_with_small_diameter() {
    for e in catalog() {
        for kind in &BASIC {
            let rel = EqRelation::compute(&e.ring, kind).unwrap();
            let d = restrict_to_zero_divisors(&zeta(&rel).unwrap(), &rel);
            let c = d.connectivity();
            assert!(c.connected, "{} {kind}", e.name);
            assert!(c.diameter.unwrap() <= 3, "{} {kind}", e.name);
            if !d.is_empty() {
                assert_eq!(c.diameter, brute_diameter(&d), "{} {kind}", e.name);
            }
        }
    }
    let rel = EqRelation::compute(&ring("z12"), &RelationKind::Associated).unwrap();
    let d = restrict_to_zero_divisors(&zeta(&rel).unwrap(), &rel);
    assert_eq!(d.connectivity().diameter, Some(3));
}

#[test]
fn zero_is_the_only_universal_vertex() {
    for e in catalog() {
        for kind in &BASIC {
            let rel = EqRelation::compute(&e.ring, kind).unwrap();
            let g = zeta(&rel).unwrap();
            assert_eq!(
                g.universal_vertices(),
                vec![rel.block_of(e.ring.zero())],
                "{} {kind}",
                e.name
            );
        }
    }
}

#[test]
fn vertices_correspond_to_principal_ideals() {
    for e in catalog() {
        let g = zeta(&EqRelation::compute(&e.ring, &RelationKind::Associated).unwrap()).unwrap();
        assert_eq!(g.order(), e.ring.principal_ideals().len(), "{}", e.name);
    }
}

#[test]
fn quotient_of_the_element_graph_is_strong() {
    for e in catalog() {
        let eq = zeta(&EqRelation::compute(&e.ring, &RelationKind::Equality).unwrap()).unwrap();
        for kind in &BASIC[1..] {
            let rel = EqRelation::compute(&e.ring, kind).unwrap();
            let q = eq.quotient(rel.blocks()).unwrap();
            assert!(q.is_strong, "{} {kind}", e.name);
            assert!(iso(&q.graph, &zeta(&rel).unwrap()));
        }
    }
}

#[test]
fn kronecker_product_matches_ring_product_for_elements() {
    let (a, b) = (FiniteRing::zn(4).unwrap(), FiniteRing::zn(6).unwrap());
    let p = FiniteRing::product(&[a.clone(), b.clone()]).unwrap();
    let g = |r: &Arc<FiniteRing>| zeta(&EqRelation::compute(r, &RelationKind::Equality).unwrap()).unwrap();
    let prod = g(&a).kronecker_product(&g(&b));
    assert_eq!(prod.edges(), g(&p).edges());
}

#[test]
fn isomorphism_respects_budget() {
    let g = Arc::new(Graph::complete(8, false));
    let err = are_isomorphic(&g, &g, 3).unwrap_err();
    assert!(err.is_budget());
    assert!(
        are_isomorphic(&g, &g, DEFAULT_ISO_BUDGET)
            .unwrap()
            .unwrap()
            .flags()
            .is_bijective
    );
}

#[test]
fn exports_are_stable() {
    let g = zeta(&EqRelation::compute(&ring("z4"), &RelationKind::Associated).unwrap()).unwrap();
    assert_eq!(
        g.to_json(),
        r#"{"vertices":[{"id":0,"label":"(0)"},{"id":1,"label":"(1)"},{"id":2,"label":"(2)"}],"edges":[[0,0],[0,1],[0,2],[2,2]]}"#
    );
    let dot = g.to_dot();
    assert!(dot.starts_with("graph {\n") && dot.contains("v2 -- v2;") && dot.ends_with("}\n"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kronecker_laws(
        n1 in 1usize..4, n2 in 1usize..4, n3 in 1usize..4,
        b1 in proptest::collection::vec(any::<bool>(), 10),
        b2 in proptest::collection::vec(any::<bool>(), 10),
        b3 in proptest::collection::vec(any::<bool>(), 10),
    ) {
        let (g, h, k) = (random_graph(n1, &b1), random_graph(n2, &b2), random_graph(n3, &b3));
        prop_assert!(iso(&g.kronecker_product(&h), &h.kronecker_product(&g)));
        prop_assert!(iso(&g.kronecker_product(&h).kronecker_product(&k), &g.kronecker_product(&h.kronecker_product(&k))));
        prop_assert!(iso(&g.kronecker_product(&Graph::terminal()), &g));
        let p = g.kronecker_product(&h);
        for (x, y) in p.edges() {
            prop_assert!(g.has_edge(x / n2, y / n2) && h.has_edge(x % n2, y % n2));
        }
        prop_assert_eq!(p.edge_count() * 2 - p.loop_count(), (2 * g.edge_count() - g.loop_count()) * (2 * h.edge_count() - h.loop_count()));
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(n in 1usize..8, bits in proptest::collection::vec(any::<bool>(), 36), seed in any::<u64>()) {
        let g = random_graph(n, &bits);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut h = Graph::with_order(n);
        for (i, j) in g.edges() {
            h.add_edge(perm[i], perm[j]).unwrap();
        }
        let m = g.isomorphism(&h, DEFAULT_ISO_BUDGET).unwrap().unwrap();
        for (i, j) in g.edges() {
            prop_assert!(h.has_edge(m[i], m[j]));
        }
        prop_assert_eq!(g.edge_count(), h.edge_count());
    }
}
