//! The zero-divisor graph as a functor: induced graph maps, comparison maps for
//! products, equalizers and localizations, and recovery of a ring splitting from
//! a splitting of its graph.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, equalizer_graph, zeta, Graph, GraphMap};
use crate::relations::{functorial_witness, EqRelation, RelationKind};
use crate::ring::{FiniteRing, IdealSet, RingHom};

/// Graph map `[a] -> [f(a)]` between precomputed zero-divisor graphs.
fn class_map(f: &RingHom, ra: &EqRelation, rb: &EqRelation, za: &Arc<Graph>, zb: &Arc<Graph>) -> Result<GraphMap> {
    if let Some(w) = functorial_witness(f, ra, rb)? {
        return Err(Error::NotFunctorial(w));
    }
    let map = (0..ra.len())
        .map(|i| rb.block_of(f.apply(ra.representative(i))))
        .collect();
    GraphMap::new(Arc::clone(za), Arc::clone(zb), map)
}

/// `ζ(f)`, after checking that `f` carries `kind_a` into `kind_b`.
pub fn zeta_hom(f: &RingHom, kind_a: &RelationKind, kind_b: &RelationKind) -> Result<GraphMap> {
    let ra = EqRelation::compute(f.source(), kind_a)?;
    let rb = EqRelation::compute(f.target(), kind_b)?;
    let za = Arc::new(zeta(&ra)?);
    let zb = Arc::new(zeta(&rb)?);
    let map = class_map(f, &ra, &rb, &za, &zb)?;
    if !map.flags().is_morphism {
        return Err(Error::Verification("induced map is not a graph morphism".into()));
    }
    Ok(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ComparisonFlags {
    pub is_morphism: bool,
    pub is_comorphism: bool,
    pub is_strong: bool,
    /// Surjective on vertices.
    pub is_epi: bool,
    /// Injective on vertices.
    pub is_mono: bool,
    pub is_iso: bool,
}

impl ComparisonFlags {
    fn of(map: &GraphMap) -> Self {
        let f = map.flags();
        let (is_epi, is_mono) = (map.is_surjective(), map.is_injective());
        ComparisonFlags {
            is_morphism: f.is_morphism,
            is_comorphism: f.is_comorphism,
            is_strong: f.is_strong,
            is_epi,
            is_mono,
            is_iso: f.is_strong && is_epi && is_mono,
        }
    }
}

/// A comparison map together with what the hypotheses at hand guarantee.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub theorem: &'static str,
    pub canonical_map: GraphMap,
    pub flags: ComparisonFlags,
    /// Flags that must hold given the checked hypotheses.
    pub expected: Vec<&'static str>,
    pub witnesses: BTreeMap<String, Value>,
    /// Deterministic work counters.
    pub counters: BTreeMap<String, u64>,
}

impl ComparisonReport {
    fn new(theorem: &'static str, canonical_map: GraphMap) -> Self {
        let flags = ComparisonFlags::of(&canonical_map);
        let mut counters = BTreeMap::new();
        counters.insert("source_vertices".into(), canonical_map.source().order() as u64);
        counters.insert("target_vertices".into(), canonical_map.target().order() as u64);
        ComparisonReport {
            theorem,
            canonical_map,
            flags,
            expected: Vec::new(),
            witnesses: BTreeMap::new(),
            counters,
        }
    }

    fn flag(&self, name: &str) -> bool {
        match name {
            "is_morphism" => self.flags.is_morphism,
            "is_comorphism" => self.flags.is_comorphism,
            "is_strong" => self.flags.is_strong,
            "is_epi" => self.flags.is_epi,
            "is_mono" => self.flags.is_mono,
            "is_iso" => self.flags.is_iso,
            _ => false,
        }
    }

    /// Expected flags that fail.
    pub fn violations(&self) -> Vec<&'static str> {
        self.expected.iter().copied().filter(|e| !self.flag(e)).collect()
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn to_value(&self) -> Value {
        json!({
            "theorem": self.theorem,
            "flags": self.flags,
            "expected": self.expected,
            "holds": self.holds(),
            "map": self.canonical_map.map(),
            "witnesses": self.witnesses,
            "timings": self.counters,
        })
    }
}

/// The projections of `A x B`, in mixed-radix ids.
fn projections(p: &Arc<FiniteRing>, a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> Result<(RingHom, RingHom)> {
    let m = b.order();
    let pa = RingHom::new(p, a, p.elements().map(|x| x / m).collect())?;
    let pb = RingHom::new(p, b, p.elements().map(|x| x % m).collect())?;
    Ok((pa, pb))
}

/// Two product elements whose coordinates are related but which are not
/// related themselves, or `None` when the relation on `A x B` is the product of
/// the relations on the factors.
pub fn product_condition_witness(rp: &EqRelation, ra: &EqRelation, rb: &EqRelation) -> Option<(usize, usize)> {
    let m = rb.ring().order();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..rp.len() {
        let x = rp.representative(i);
        let key = (ra.block_of(x / m), rb.block_of(x % m));
        if let Some(&y) = seen.get(&key) {
            return Some((y, x));
        }
        seen.insert(key, x);
    }
    None
}

/// `φ: ζ(A x B) -> ζ(A) x ζ(B)`, `[(a, b)] -> ([a], [b])`.
pub fn product_comparison(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>, kind: &RelationKind) -> Result<ComparisonReport> {
    let p = FiniteRing::product(&[Arc::clone(a), Arc::clone(b)])?;
    let (pa, pb) = projections(&p, a, b)?;
    let (rp, ra, rb) = (
        EqRelation::compute(&p, kind)?,
        EqRelation::compute(a, kind)?,
        EqRelation::compute(b, kind)?,
    );
    for (proj, r) in [(&pa, &ra), (&pb, &rb)] {
        if let Some(w) = functorial_witness(proj, &rp, r)? {
            return Err(Error::NotFunctorial(w));
        }
    }
    let (zp, za, zb) = (zeta(&rp)?, zeta(&ra)?, zeta(&rb)?);
    let target = Arc::new(za.kronecker_product(&zb));
    let width = zb.order();
    let map = (0..rp.len())
        .map(|i| {
            let x = rp.representative(i);
            ra.block_of(pa.apply(x)) * width + rb.block_of(pb.apply(x))
        })
        .collect();
    let phi = GraphMap::new(Arc::new(zp), target, map)?;
    let mut report = ComparisonReport::new("product", phi);
    report.expected = vec!["is_strong", "is_epi"];
    match product_condition_witness(&rp, &ra, &rb) {
        None => report.expected.push("is_iso"),
        Some((x, y)) => {
            report.witnesses.insert(
                "product_condition".into(),
                json!({ "elements": [x, y], "labels": [p.label(x), p.label(y)] }),
            );
        }
    }
    Ok(report)
}

/// `ψ: ζ(Eq(f, g)) -> Eq(ζ(f), ζ(g))`, `[a] -> [a]`.
pub fn equalizer_comparison(f: &RingHom, g: &RingHom, kind: &RelationKind) -> Result<ComparisonReport> {
    if !(crate::ring::same_ring(f.source(), g.source()) && crate::ring::same_ring(f.target(), g.target())) {
        return Err(Error::MismatchedRings);
    }
    let a = f.source();
    let fixed: Vec<usize> = a.elements().filter(|&x| f.apply(x) == g.apply(x)).collect();
    let (eq_ring, incl) = a.subring(&fixed)?;
    let (re, ra, rb) = (
        EqRelation::compute(&eq_ring, kind)?,
        EqRelation::compute(a, kind)?,
        EqRelation::compute(f.target(), kind)?,
    );
    let (ze, za, zb) = (Arc::new(zeta(&re)?), Arc::new(zeta(&ra)?), Arc::new(zeta(&rb)?));
    let zf = class_map(f, &ra, &rb, &za, &zb)?;
    let zg = class_map(g, &ra, &rb, &za, &zb)?;
    class_map(&incl, &re, &ra, &ze, &za)?;
    let kept: Vec<usize> = (0..za.order()).filter(|&v| zf.apply(v) == zg.apply(v)).collect();
    let eq_graph = Arc::new(equalizer_graph(&zf, &zg)?);
    let map = (0..re.len())
        .map(|i| {
            let v = ra.block_of(incl.apply(re.representative(i)));
            kept.binary_search(&v)
                .map_err(|_| Error::Verification("equalizer class outside Eq(ζf, ζg)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi = GraphMap::new(ze, Arc::clone(&eq_graph), map)?;
    let mut report = ComparisonReport::new("equalizer", psi);
    report.expected = vec!["is_strong"];
    // relatedness in A restricted to Eq(f, g) agrees with relatedness in Eq(f, g)
    let mono_witness = fixed.iter().enumerate().find_map(|(i, &x)| {
        fixed[i + 1..]
            .iter()
            .find(|&&y| ra.related(x, y) && !re.related(i, fixed.binary_search(&y).unwrap()))
            .map(|&y| (x, y))
    });
    match mono_witness {
        None => report.expected.push("is_mono"),
        Some((x, y)) => {
            report
                .witnesses
                .insert("mono_condition".into(), json!({ "elements": [x, y] }));
        }
    }
    // every class on which ζf and ζg agree meets Eq(f, g)
    let epi_witness = a
        .elements()
        .find(|&x| rb.related(f.apply(x), g.apply(x)) && !fixed.iter().any(|&y| ra.related(x, y)));
    match epi_witness {
        None => report.expected.push("is_epi"),
        Some(x) => {
            report
                .witnesses
                .insert("epi_condition".into(), json!({ "element": x, "label": a.label(x) }));
        }
    }
    report.counters.insert("equalizer_order".into(), eq_ring.order() as u64);
    Ok(report)
}

/// A pair of homomorphisms whose equalizer comparison is not an isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct EqualizerCounterexample {
    pub source: String,
    pub target: String,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub flags: ComparisonFlags,
    pub equalizer_order: u64,
    pub source_vertices: u64,
    pub target_vertices: u64,
}

/// Outcome of [`search_equalizer_counterexample`].
#[derive(Debug, Clone, Serialize)]
pub struct EqualizerSearch {
    pub relation: String,
    pub order_cap: usize,
    pub ring_pairs: u64,
    pub hom_pairs: u64,
    /// Ring pairs whose hom sets exceeded the candidate cap.
    pub skipped_pairs: Vec<(String, String)>,
    pub counterexample: Option<EqualizerCounterexample>,
}

/// Runs [`equalizer_comparison`] on every pair of distinct homomorphisms
/// between the given rings of order at most `order_cap`, in input order, and
/// stops at the first comparison map that fails to be injective or surjective.
pub fn search_equalizer_counterexample(
    rings: &[(String, Arc<FiniteRing>)],
    kind: &RelationKind,
    order_cap: usize,
    candidate_cap: usize,
) -> Result<EqualizerSearch> {
    let mut search = EqualizerSearch {
        relation: kind.name(),
        order_cap,
        ring_pairs: 0,
        hom_pairs: 0,
        skipped_pairs: Vec::new(),
        counterexample: None,
    };
    let small: Vec<&(String, Arc<FiniteRing>)> = rings.iter().filter(|(_, r)| r.order() <= order_cap).collect();
    for (na, a) in &small {
        for (nb, b) in &small {
            search.ring_pairs += 1;
            let homs = match a.homomorphisms_to(b, candidate_cap) {
                Ok(h) => h,
                Err(e) if e.is_budget() => {
                    search.skipped_pairs.push((na.clone(), nb.clone()));
                    continue;
                }
                Err(e) => return Err(e),
            };
            for (i, f) in homs.iter().enumerate() {
                for g in &homs[i + 1..] {
                    search.hom_pairs += 1;
                    let report = match equalizer_comparison(f, g, kind) {
                        Ok(r) => r,
                        Err(Error::NotFunctorial(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    if !report.flags.is_iso {
                        search.counterexample = Some(EqualizerCounterexample {
                            source: na.clone(),
                            target: nb.clone(),
                            f: f.map().to_vec(),
                            g: g.map().to_vec(),
                            flags: report.flags,
                            equalizer_order: report.counters["equalizer_order"],
                            source_vertices: report.counters["source_vertices"],
                            target_vertices: report.counters["target_vertices"],
                        });
                        return Ok(search);
                    }
                }
            }
        }
    }
    Ok(search)
}

/// `ζ(A) -> ζ(S^{-1}A)` induced by `a -> a/1`.
pub fn localization_comparison(ring: &Arc<FiniteRing>, s: &[usize], kind: &RelationKind) -> Result<ComparisonReport> {
    let loc = ring.localize(s)?;
    let target = &loc.ring;
    let (ra, rs) = (EqRelation::compute(ring, kind)?, EqRelation::compute(target, kind)?);
    let (za, zs) = (Arc::new(zeta(&ra)?), Arc::new(zeta(&rs)?));
    let map = class_map(&loc.canonical, &ra, &rs, &za, &zs)?;
    let mut report = ComparisonReport::new("localization", map);
    report.expected.push("is_morphism");
    let phi = &loc.canonical;
    // a/s as an element of the localization: the fraction (b, t) with a t - b s killed
    let fraction = |a: usize, d: usize| {
        loc.fractions
            .iter()
            .position(|&(b, t)| phi.apply(ring.sub(ring.mul(a, t), ring.mul(b, d))) == target.zero())
            .expect("every fraction has a class")
    };
    let mut dens: Vec<usize> = s.to_vec();
    dens.sort_unstable();
    dens.dedup();
    let epi_witness = ring
        .elements()
        .flat_map(|a| dens.iter().map(move |&d| (a, d)))
        .find(|&(a, d)| !rs.related(fraction(a, d), phi.apply(a)));
    match epi_witness {
        None => report.expected.push("is_epi"),
        Some((a, d)) => {
            report
                .witnesses
                .insert("epi_condition".into(), json!({ "numerator": a, "denominator": d }));
        }
    }
    match dens.iter().find(|&&d| !ring.is_unit(d)) {
        None => report.expected.push("is_comorphism"),
        Some(&d) => {
            report.witnesses.insert("non_regular_denominator".into(), json!(d));
        }
    }
    report
        .counters
        .insert("localization_order".into(), target.order() as u64);
    Ok(report)
}

/// `a ⊥ b`: `ab = 0` and `Ann(a) ∩ Ann(b) = 0`.
pub fn is_orthogonal(ring: &Arc<FiniteRing>, a: usize, b: usize) -> bool {
    ring.mul(a, b) == ring.zero()
        && ring
            .elements()
            .all(|x| x == ring.zero() || ring.mul(a, x) != ring.zero() || ring.mul(b, x) != ring.zero())
}

/// The universal vertex and the smallest vertex whose only neighbour is it,
/// playing the roles of `[0]` and `[1]`.
fn zero_and_one(g: &Graph) -> Option<(usize, usize)> {
    let universal = g.universal_vertices();
    let [zero] = universal[..] else { return None };
    let one = (0..g.order()).find(|&v| v != zero && g.degree(v) == 1 && g.has_edge(v, zero))?;
    Some((zero, one))
}

fn check_factor(g: &Graph) -> Result<()> {
    if g.order() == 1 && g.has_loop(0) {
        Err(Error::TerminalFactor)
    } else {
        Ok(())
    }
}

/// Representatives of `[a1] = φ⁻¹([1],[0])` and `[a2] = φ⁻¹([0],[1])` for an
/// isomorphism `φ: ζ(A, R) -> G1 x G2` found by search, or `None` when there is
/// no such isomorphism.
pub fn find_orthogonal_pair(
    rel: &EqRelation,
    g1: &Graph,
    g2: &Graph,
    iso_budget: usize,
) -> Result<Option<(usize, usize)>> {
    check_factor(g1)?;
    check_factor(g2)?;
    let z = zeta(rel)?;
    let product = g1.kronecker_product(g2);
    let Some(phi) = z.isomorphism(&product, iso_budget)? else {
        return Ok(None);
    };
    let (Some((zero1, one1)), Some((zero2, one2))) = (zero_and_one(g1), zero_and_one(g2)) else {
        return Ok(None);
    };
    let w = g2.order();
    let preimage = |target: usize| phi.iter().position(|&t| t == target).expect("phi is bijective");
    let a1 = rel.representative(preimage(one1 * w + zero2));
    let a2 = rel.representative(preimage(zero1 * w + one2));
    let ring = rel.ring();
    let in_d_star = |x: usize| x != ring.zero() && ring.is_zero_divisor(x);
    if !(in_d_star(a1) && in_d_star(a2) && is_orthogonal(ring, a1, a2)) {
        return Err(Error::Verification(format!(
            "recovered pair ({a1}, {a2}) is not an orthogonal pair in D*(A)"
        )));
    }
    Ok(Some((a1, a2)))
}

/// A ring splitting recovered from a graph splitting.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub a1: usize,
    pub a2: usize,
    pub ann1: IdealSet,
    pub ann2: IdealSet,
    /// `A/Ann(a1)` and `A/Ann(a2)`.
    pub quotients: (Arc<FiniteRing>, Arc<FiniteRing>),
    /// `A -> A/Ann(a1) x A/Ann(a2)`.
    pub iso: RingHom,
    /// `ζ(A/Ann(ai)) ≅ Gi`.
    pub side_isos: (GraphMap, GraphMap),
    /// `ζ(Ann(a2)) -> ζ(A/Ann(a1))` and `ζ(Ann(a1)) -> ζ(A/Ann(a2))`.
    pub psi: (GraphMap, GraphMap),
}

impl Factorization {
    pub fn to_value(&self) -> Value {
        let ring = self.iso.source();
        let side = |m: &GraphMap| json!({ "map": m.map(), "flags": m.flags() });
        json!({
            "theorem": "inversion-of-product",
            "flags": {
                "orthogonal": true,
                "ring_iso": self.iso.is_bijective(),
                "side_isos": self.side_isos.0.flags().is_bijective && self.side_isos.1.flags().is_bijective,
                "psi_strong": self.psi.0.flags().is_strong && self.psi.1.flags().is_strong,
                "psi_bijective": self.psi.0.flags().is_bijective && self.psi.1.flags().is_bijective,
            },
            "witnesses": {
                "a1": { "id": self.a1, "label": ring.label(self.a1) },
                "a2": { "id": self.a2, "label": ring.label(self.a2) },
                "ann1": self.ann1.members(),
                "ann2": self.ann2.members(),
                "quotient_orders": [self.quotients.0.order(), self.quotients.1.order()],
                "iso": self.iso.map(),
                "side_isos": [side(&self.side_isos.0), side(&self.side_isos.1)],
                "psi": [side(&self.psi.0), side(&self.psi.1)],
            },
            "timings": {
                "ring_order": ring.order(),
                "graph_order": self.psi.0.target().order() * self.psi.1.target().order(),
            },
        })
    }
}

/// `[x] -> [x mod Ann(ai)]` from the classes meeting `Ann(aj)`.
fn psi_map(rel: &EqRelation, z: &Graph, ann_j: &IdealSet, quotient: &crate::ring::Quotient) -> Result<GraphMap> {
    let keep: Vec<usize> = (0..rel.len())
        .filter(|&v| ann_j.contains(rel.representative(v)))
        .collect();
    let source = z.induced_subgraph(&keep)?;
    let rq = EqRelation::compute(&quotient.ring, &RelationKind::Associated)?;
    let target = zeta(&rq)?;
    let map = keep
        .iter()
        .map(|&v| rq.block_of(quotient.projection.apply(rel.representative(v))))
        .collect();
    GraphMap::new(source, target, map)
}

/// Recovers `A ≅ A1 x A2` from `ζ(A, ∼) ≅ G1 x G2`, verifying every step:
/// orthogonality of the pair, comaximality of the annihilators, the ring
/// isomorphism, `ζ(Ai) ≅ Gi`, and that the comparison maps `ψi` are strong
/// bijections.
pub fn invert_product(rel: &EqRelation, g1: &Graph, g2: &Graph, iso_budget: usize) -> Result<Factorization> {
    if *rel.kind() != RelationKind::Associated {
        return Err(Error::InvalidRelation(
            "product inversion requires the associated relation".into(),
        ));
    }
    let Some((a1, a2)) = find_orthogonal_pair(rel, g1, g2, iso_budget)? else {
        return Err(Error::Verification("ζ(A) is not isomorphic to G1 x G2".into()));
    };
    let ring = rel.ring();
    let (ann1, ann2) = (ring.annihilator(a1), ring.annihilator(a2));
    if !ann1.sum(&ann2)?.is_whole() {
        return Err(Error::Verification("Ann(a1) + Ann(a2) != (1)".into()));
    }
    let crt = ring.crt_factor(&ann1, &ann2)?;
    let z = zeta(rel)?;
    let mut sides = Vec::with_capacity(2);
    for (q, g) in [(&crt.left, g1), (&crt.right, g2)] {
        let zq = Arc::new(zeta(&EqRelation::compute(&q.ring, &RelationKind::Associated)?)?);
        let iso = are_isomorphic(&zq, &Arc::new(g.clone()), iso_budget)?.ok_or_else(|| {
            Error::Verification(format!(
                "ζ of the order-{} quotient is not isomorphic to its factor",
                q.ring.order()
            ))
        })?;
        sides.push(iso);
    }
    let psi1 = psi_map(rel, &z, &ann2, &crt.left)?;
    let psi2 = psi_map(rel, &z, &ann1, &crt.right)?;
    for (name, psi) in [("psi1", &psi1), ("psi2", &psi2)] {
        let f = psi.flags();
        if !f.is_strong {
            return Err(Error::Verification(format!("{name} is not strong")));
        }
        if !f.is_bijective {
            return Err(Error::Verification(format!("{name} is not bijective")));
        }
    }
    let side2 = sides.pop().expect("two sides");
    let side1 = sides.pop().expect("two sides");
    Ok(Factorization {
        a1,
        a2,
        ann1,
        ann2,
        quotients: (Arc::clone(&crt.left.ring), Arc::clone(&crt.right.ring)),
        iso: crt.iso,
        side_isos: (side1, side2),
        psi: (psi1, psi2),
    })
}

/// A splitting `ζ(A, ∼) ≅ G1 x G2` into non-terminal factors found from the
/// graph alone: for adjacent nonzero vertices `u`, `v`, the candidates are the
/// subgraphs induced on `N(v)` and `N(u)`.
pub fn find_graph_split(z: &Graph, iso_budget: usize) -> Result<Option<(Graph, Graph)>> {
    let Some((zero, _)) = zero_and_one(z) else {
        return Ok(None);
    };
    let n = z.order();
    for u in 0..n {
        for v in z.neighbors(u).filter(|&v| v > u) {
            if u == zero || v == zero {
                continue;
            }
            let g1 = z.induced_subgraph(&z.neighbors(v).collect::<Vec<_>>())?;
            let g2 = z.induced_subgraph(&z.neighbors(u).collect::<Vec<_>>())?;
            if g1.order() < 2 || g2.order() < 2 || g1.order() * g2.order() != n {
                continue;
            }
            if z.isomorphism(&g1.kronecker_product(&g2), iso_budget)?.is_some() {
                return Ok(Some((g1, g2)));
            }
        }
    }
    Ok(None)
}

/// A full decomposition into factors whose graphs admit no further split.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub steps: Vec<Factorization>,
    /// Indecomposable factors, in discovery order.
    pub leaves: Vec<Arc<FiniteRing>>,
}

impl Decomposition {
    pub fn leaf_orders(&self) -> Vec<usize> {
        self.leaves.iter().map(|r| r.order()).collect()
    }
}

/// Repeatedly splits `ring` with [`find_graph_split`] and [`invert_product`].
pub fn decompose(ring: &Arc<FiniteRing>, iso_budget: usize) -> Result<Decomposition> {
    let mut out = Decomposition {
        steps: Vec::new(),
        leaves: Vec::new(),
    };
    let mut stack = vec![Arc::clone(ring)];
    while let Some(r) = stack.pop() {
        let rel = EqRelation::compute(&r, &RelationKind::Associated)?;
        let z = zeta(&rel)?;
        match find_graph_split(&z, iso_budget)? {
            None => out.leaves.push(r),
            Some((g1, g2)) => {
                let f = invert_product(&rel, &g1, &g2, iso_budget)?;
                // push right first so the left factor is expanded first
                stack.push(Arc::clone(&f.quotients.1));
                stack.push(Arc::clone(&f.quotients.0));
                out.steps.push(f);
            }
        }
    }
    Ok(out)
}

/// The subgraph of `G1 x G2` induced on the neighbours of `([0], [1])`, which
/// must be isomorphic to `G1`; `None` if the factors lack `[0]`/`[1]` vertices.
pub fn side_subgraph(g1: &Graph, g2: &Graph) -> Option<Graph> {
    let (zero1, _) = zero_and_one(g1)?;
    let (_, one2) = zero_and_one(g2)?;
    let p = g1.kronecker_product(g2);
    let v = zero1 * g2.order() + one2;
    Some(
        p.induced_subgraph(&p.neighbors(v).collect::<Vec<_>>())
            .expect("ids are in range"),
    )
}
