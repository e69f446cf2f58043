//! Staircase graphs and the local / principal-ideal-ring recognisers built on
//! the zero-divisor graph under the associated relation.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use serde_json::{json, Value};

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::functor::{decompose, is_orthogonal, side_subgraph};
use crate::graph::{zeta, Graph, GraphMap, Vertex};
use crate::relations::{EqRelation, RelationKind};
use crate::ring::FiniteRing;

/// `SG_k`: vertices `0..=k`, `i ~ j` iff `i + j >= k`.
pub fn staircase(k: usize) -> Graph {
    let vertices = (0..=k)
        .map(|i| Vertex {
            label: i.to_string(),
            payload: None,
        })
        .collect();
    let mut g = Graph::new(vertices);
    for i in 0..=k {
        for j in i..=k {
            if i + j >= k {
                g.add_edge(i, j).expect("vertices exist");
            }
        }
    }
    g
}

#[derive(Debug, Clone)]
pub struct StaircaseReport {
    pub index: Option<usize>,
    /// Verified strong bijection onto `SG_index`, sending a vertex of degree `d`
    /// to `d - 1`.
    pub witness_map: Option<GraphMap>,
    pub failure_reason: Option<String>,
    pub looped_vertices: usize,
}

impl StaircaseReport {
    fn fail(g: &Graph, reason: String) -> Self {
        StaircaseReport {
            index: None,
            witness_map: None,
            failure_reason: Some(reason),
            looped_vertices: g.loop_count(),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "index": self.index,
            "map": self.witness_map.as_ref().map(|m| m.map().to_vec()),
            "failure_reason": self.failure_reason,
            "looped_vertices": self.looped_vertices,
        })
    }
}

/// Recognises `SG_k` by its degree sequence `1, 2, ..., k+1`, then verifies the
/// degree-sorted map is a strong bijection.
pub fn recognize_staircase(g: &Graph) -> StaircaseReport {
    let n = g.order();
    if n == 0 {
        return StaircaseReport::fail(g, "empty graph".into());
    }
    let k = n - 1;
    let expected_loops = k / 2 + 1;
    if g.loop_count() != expected_loops {
        return StaircaseReport::fail(
            g,
            format!(
                "loop mismatch: {} looped vertices, SG_{k} has {expected_loops}",
                g.loop_count()
            ),
        );
    }
    let mut owner: Vec<Option<usize>> = vec![None; n + 1];
    for v in 0..n {
        let d = g.degree(v);
        if d == 0 || d > n {
            return StaircaseReport::fail(g, format!("degree out of range: vertex {v} has degree {d}"));
        }
        if let Some(u) = owner[d] {
            return StaircaseReport::fail(g, format!("degree clash: vertices {u} and {v} both have degree {d}"));
        }
        owner[d] = Some(v);
    }
    let map = (0..n).map(|v| g.degree(v) - 1).collect();
    let m = GraphMap::new(g.clone(), staircase(k), map).expect("degrees are in range");
    if !(m.flags().is_strong && m.flags().is_bijective) {
        return StaircaseReport::fail(g, "degree-sorted map is not an isomorphism".into());
    }
    StaircaseReport {
        index: Some(k),
        witness_map: Some(m),
        failure_reason: None,
        looped_vertices: g.loop_count(),
    }
}

/// `ζ(A, ∼)`.
pub fn associated_graph(ring: &Arc<FiniteRing>) -> Result<(EqRelation, Graph)> {
    let rel = EqRelation::compute(ring, &RelationKind::Associated)?;
    let g = zeta(&rel)?;
    Ok((rel, g))
}

/// First `(a, b)` in `D*(A)²` with `Ann(a) ∪ Ann(b) = Ann(ab)`, scanning
/// lexicographically with `a <= b`.
pub fn annihilator_growth_witness(ring: &FiniteRing) -> Option<(usize, usize)> {
    let d = ring.nonzero_zero_divisors();
    let ann: Vec<FixedBitSet> = ring.elements().map(|a| ring.annihilator_mask(a)).collect();
    for (i, &a) in d.iter().enumerate() {
        for &b in &d[i..] {
            let mut union = ann[a].clone();
            union.union_with(&ann[b]);
            if union == ann[ring.mul(a, b)] {
                return Some((a, b));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalAnnihilatorCheck {
    /// The annihilator-growth condition over `D*(A)²`.
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
    pub is_local: bool,
    pub consistent: bool,
}

/// Evaluates the annihilator-growth condition and compares it with locality
/// computed from the ideal lattice.
pub fn check_local_annihilator(ring: &Arc<FiniteRing>, budgets: &Budgets) -> Result<LocalAnnihilatorCheck> {
    let witness = annihilator_growth_witness(ring);
    let is_local = ring.local_data(budgets.ideal_cap)?.is_local;
    let holds = witness.is_none();
    Ok(LocalAnnihilatorCheck {
        holds,
        witness,
        is_local,
        consistent: holds == is_local,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PirLocReport {
    pub is_pir: bool,
    pub is_local_pir: bool,
    pub staircase_index: Option<usize>,
    pub nilpotency_index: Option<usize>,
    pub failure_reason: Option<String>,
    /// Both directions agree, and the indices match when both hold.
    pub consistent: bool,
}

/// For a local ring: PIR iff `ζ(A, ∼)` is a staircase, of index equal to the
/// nilpotency index of the maximal ideal.
pub fn check_pirloc(ring: &Arc<FiniteRing>, budgets: &Budgets) -> Result<PirLocReport> {
    let local = ring.local_data(budgets.ideal_cap)?;
    if !local.is_local {
        return Err(Error::NotLocal);
    }
    let is_pir = ring.is_pir(budgets.ideal_cap)?;
    let (_, g) = associated_graph(ring)?;
    let report = recognize_staircase(&g);
    let recognized = report.index.is_some();
    let consistent = is_pir == recognized && (!is_pir || report.index == local.nilpotency_index);
    Ok(PirLocReport {
        is_pir,
        is_local_pir: is_pir,
        staircase_index: report.index,
        nilpotency_index: local.nilpotency_index,
        failure_reason: report.failure_reason,
        consistent,
    })
}

/// Non-increasing tuples `k_1 >= k_2 >= ... >= 1` with `∏(k_i + 1) = n`.
pub fn staircase_index_tuples(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_factor: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for f in (2..=max_factor.min(rest)).rev() {
            if rest.is_multiple_of(f) {
                prefix.push(f - 1);
                go(rest / f, f, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Kronecker product of `SG_{k_i}`.
pub fn staircase_product(indices: &[usize]) -> Graph {
    indices
        .iter()
        .fold(Graph::terminal(), |acc, &k| acc.kronecker_product(&staircase(k)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PirProductReport {
    pub is_pir: bool,
    /// Indices of the staircase factors found by recursive splitting (PIR case).
    pub staircase_indices: Option<Vec<usize>>,
    /// Index tuple whose staircase product is isomorphic to `ζ(A, ∼)`, if any.
    pub product_match: Option<Vec<usize>>,
    pub tuples_tried: usize,
    pub consistent: bool,
}

/// PIR iff `ζ(A, ∼)` is a product of staircases, checked both ways: a PIR is
/// split into factors that must all be staircases, and a matching staircase
/// product (searched over index tuples with the right vertex count) forces PIR.
pub fn check_pir_product(ring: &Arc<FiniteRing>, budgets: &Budgets) -> Result<PirProductReport> {
    let is_pir = ring.is_pir(budgets.ideal_cap)?;
    let (_, g) = associated_graph(ring)?;
    let mut forward_ok = true;
    let staircase_indices = if is_pir {
        let d = decompose(ring, budgets.iso_nodes)?;
        let mut indices = Vec::new();
        for leaf in &d.leaves {
            let (_, lg) = associated_graph(leaf)?;
            match recognize_staircase(&lg).index {
                Some(k) => indices.push(k),
                None => forward_ok = false,
            }
        }
        indices.sort_unstable_by(|a, b| b.cmp(a));
        Some(indices)
    } else {
        None
    };
    let tuples = staircase_index_tuples(g.order());
    let mut product_match = None;
    let mut tuples_tried = 0;
    for t in &tuples {
        tuples_tried += 1;
        if g.isomorphism(&staircase_product(t), budgets.iso_nodes)?.is_some() {
            product_match = Some(t.clone());
            break;
        }
    }
    let consistent = forward_ok
        && is_pir == product_match.is_some()
        && (!is_pir || staircase_indices.as_ref() == product_match.as_ref());
    Ok(PirProductReport {
        is_pir,
        staircase_indices,
        product_match,
        tuples_tried,
        consistent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaResult {
    pub name: &'static str,
    pub status: LemmaStatus,
    /// Instances examined.
    pub checked: u64,
    pub witness: Option<Value>,
}

impl LemmaResult {
    fn new(name: &'static str, checked: u64, witness: Option<Value>) -> Self {
        let status = if witness.is_some() {
            LemmaStatus::Fail
        } else {
            LemmaStatus::Pass
        };
        LemmaResult {
            name,
            status,
            checked,
            witness,
        }
    }

    fn skipped(name: &'static str) -> Self {
        LemmaResult {
            name,
            status: LemmaStatus::NotApplicable,
            checked: 0,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub lemmas: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.lemmas.iter().all(|l| l.status != LemmaStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&LemmaResult> {
        self.lemmas.iter().find(|l| l.name == name)
    }
}

/// With `SG_k -> ζ(A, ∼)` surjective and strong, `Ann(x a_i) ⊆ Ann(x a_j)`
/// for all `x` and `i <= j`, where `a_i` represents the image of `i`.
fn neighbourhood_chain(ring: &FiniteRing, reps: &[usize]) -> LemmaResult {
    let ann: Vec<FixedBitSet> = ring.elements().map(|a| ring.annihilator_mask(a)).collect();
    let mut checked = 0;
    for x in ring.elements() {
        for i in 0..reps.len() {
            for j in i..reps.len() {
                checked += 1;
                let (xi, xj) = (ring.mul(x, reps[i]), ring.mul(x, reps[j]));
                if !ann[xi].is_subset(&ann[xj]) {
                    return LemmaResult::new(
                        "staircase_neighbourhoods",
                        checked,
                        Some(json!({ "x": x, "i": i, "j": j })),
                    );
                }
            }
        }
    }
    LemmaResult::new("staircase_neighbourhoods", checked, None)
}

/// For an isomorphism `SG_k -> ζ(A, ∼)` on a local ring: equal annihilators of
/// `x a_i`, `x a_j` (`i < j`) force both products to vanish, and vertex `i` is
/// the class of `a_1^i`.
fn staircase_powers(ring: &FiniteRing, rel: &EqRelation, reps: &[usize]) -> LemmaResult {
    let ann: Vec<FixedBitSet> = ring.elements().map(|a| ring.annihilator_mask(a)).collect();
    let mut checked = 0;
    for x in ring.elements() {
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                checked += 1;
                let (xi, xj) = (ring.mul(x, reps[i]), ring.mul(x, reps[j]));
                if ann[xi] == ann[xj] && (xi != ring.zero() || xj != ring.zero()) {
                    return LemmaResult::new("staircase_powers", checked, Some(json!({ "x": x, "i": i, "j": j })));
                }
            }
        }
    }
    let generator = reps.get(1).copied().unwrap_or(ring.one());
    for (i, &r) in reps.iter().enumerate() {
        checked += 1;
        if !rel.related(ring.pow(generator, i), r) {
            return LemmaResult::new(
                "staircase_powers",
                checked,
                Some(json!({ "vertex": i, "power_of": generator })),
            );
        }
    }
    LemmaResult::new("staircase_powers", checked, None)
}

/// If `a ⊥ b` and `a ⊥ c` then `Ann(b) = Ann(c)`.
fn orthogonal_annihilators(ring: &Arc<FiniteRing>) -> LemmaResult {
    let ann: Vec<FixedBitSet> = ring.elements().map(|a| ring.annihilator_mask(a)).collect();
    let mut checked = 0;
    for a in ring.elements() {
        let partners: Vec<usize> = ring
            .elements()
            .filter(|&b| ring.mul(a, b) == ring.zero() && ann[a].intersection_count(&ann[b]) == 1)
            .collect();
        debug_assert!(partners.iter().all(|&b| is_orthogonal(ring, a, b)));
        for (i, &b) in partners.iter().enumerate() {
            for &c in &partners[i + 1..] {
                checked += 1;
                if ann[b] != ann[c] {
                    return LemmaResult::new(
                        "orthogonal_annihilators",
                        checked,
                        Some(json!({ "a": a, "b": b, "c": c })),
                    );
                }
            }
        }
    }
    LemmaResult::new("orthogonal_annihilators", checked, None)
}

/// In `ζ(A) x ζ(B)` the neighbourhood of `([0], [1])` is a copy of `ζ(A)`, and
/// symmetrically for `B`.
pub fn check_side_subgraphs(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>, iso_budget: usize) -> Result<LemmaResult> {
    let (_, ga) = associated_graph(a)?;
    let (_, gb) = associated_graph(b)?;
    let mut checked = 0;
    for (first, second) in [(&ga, &gb), (&gb, &ga)] {
        checked += 1;
        let Some(side) = side_subgraph(first, second) else {
            return Ok(LemmaResult::skipped("side_subgraphs"));
        };
        if side.isomorphism(first, iso_budget)?.is_none() {
            return Ok(LemmaResult::new(
                "side_subgraphs",
                checked,
                Some(json!({ "side": checked })),
            ));
        }
    }
    Ok(LemmaResult::new("side_subgraphs", checked, None))
}

/// Runs every lemma check applicable to `ring`; `partner` is used for the
/// side-subgraph check.
pub fn check_lemmas(ring: &Arc<FiniteRing>, partner: &Arc<FiniteRing>, budgets: &Budgets) -> Result<LemmaReport> {
    let mut lemmas = Vec::new();
    if ring.is_zero_ring() {
        return Ok(LemmaReport { lemmas });
    }
    let classes = ring.classify_elements();
    // annihilator growth needs every zero-divisor to be nilpotent
    if classes.zero_divisors == classes.nilpotents {
        let d = ring.nonzero_zero_divisors().len() as u64;
        let witness = annihilator_growth_witness(ring).map(|(a, b)| json!({ "a": a, "b": b }));
        lemmas.push(LemmaResult::new("annihilator_growth", d * (d + 1) / 2, witness));
    } else {
        lemmas.push(LemmaResult::skipped("annihilator_growth"));
    }
    let (rel, g) = associated_graph(ring)?;
    let local = ring.local_data(budgets.ideal_cap)?;
    match recognize_staircase(&g).witness_map {
        Some(m) => {
            // inverse of the recognition map: staircase vertex -> representative
            let mut reps = vec![0; g.order()];
            for v in 0..g.order() {
                reps[m.apply(v)] = rel.representative(v);
            }
            lemmas.push(neighbourhood_chain(ring, &reps));
            if local.is_local && g.order() > 1 {
                lemmas.push(staircase_powers(ring, &rel, &reps));
            } else {
                lemmas.push(LemmaResult::skipped("staircase_powers"));
            }
        }
        None => {
            lemmas.push(LemmaResult::skipped("staircase_neighbourhoods"));
            lemmas.push(LemmaResult::skipped("staircase_powers"));
        }
    }
    let cla = check_local_annihilator(ring, budgets)?;
    let d = ring.nonzero_zero_divisors().len() as u64;
    let witness =
        (!cla.consistent).then(|| json!({ "condition": cla.holds, "is_local": cla.is_local, "pair": cla.witness }));
    lemmas.push(LemmaResult::new("local_annihilator", d * (d + 1) / 2, witness));
    lemmas.push(check_side_subgraphs(ring, partner, budgets.iso_nodes)?);
    lemmas.push(orthogonal_annihilators(ring));
    Ok(LemmaReport { lemmas })
}

/// Summary used by the command-line `check` and `census` commands.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub is_local: bool,
    pub is_pir: bool,
    pub staircase: Option<usize>,
    pub lemmas: LemmaReport,
}

pub fn classify_ring(
    name: &str,
    ring: &Arc<FiniteRing>,
    partner: &Arc<FiniteRing>,
    budgets: &Budgets,
) -> Result<ClassificationReport> {
    let (_, g) = associated_graph(ring)?;
    Ok(ClassificationReport {
        ring: name.to_string(),
        is_local: ring.local_data(budgets.ideal_cap)?.is_local,
        is_pir: ring.is_pir(budgets.ideal_cap)?,
        staircase: recognize_staircase(&g).index,
        lemmas: check_lemmas(ring, partner, budgets)?,
    })
}
