use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use zdg_core::catalog::read_specs;
use zdg_core::classify::{
    associated_graph, check_lemmas, check_local_annihilator, check_pir_product, check_pirloc, check_side_subgraphs,
    LemmaStatus,
};
use zdg_core::functor::{localization_comparison, product_comparison};
use zdg_core::graph::{restrict_to_zero_divisors, zeta};
use zdg_core::relations::random_partitions;
use zdg_core::{EqRelation, Error, FiniteRing, RelationKind};

use crate::config::RunConfig;
use crate::{CliError, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Pass,
    Fail,
    NotApplicable,
    Budget,
    Error,
}

type Outcome = zdg_core::Result<(Status, Value)>;

fn cell(outcome: Outcome) -> (Status, Value) {
    match outcome {
        Ok(v) => v,
        Err(e) => (
            if e.is_budget() { Status::Budget } else { Status::Error },
            json!(e.to_string()),
        ),
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

const BASIC: [RelationKind; 4] = [
    RelationKind::Equality,
    RelationKind::StronglyAssociated,
    RelationKind::Associated,
    RelationKind::Equiannihilated,
];

struct Suite<'a> {
    config: &'a RunConfig,
    samples: usize,
    z2: Arc<FiniteRing>,
}

impl Suite<'_> {
    fn ring_checks(&self, ring: &Arc<FiniteRing>) -> Vec<(&'static str, Outcome)> {
        vec![
            ("zero_divisor_relations", self.zdr_characterization(ring)),
            ("relation_chain", relation_chain(ring)),
            ("connectivity", connectivity(ring)),
            ("universal_zero", universal_zero(ring)),
            ("principal_vertices", principal_vertices(ring)),
            ("strong_quotients", strong_quotients(ring)),
            ("local_annihilator", self.local_annihilator(ring)),
            ("local_pir", self.local_pir(ring)),
            ("pir_product", self.pir_product(ring)),
            ("lemmas", self.lemmas(ring)),
            ("localization_at_units", localization_at_units(ring)),
        ]
    }

    fn zdr_characterization(&self, ring: &Arc<FiniteRing>) -> Outcome {
        let ann = EqRelation::compute(ring, &RelationKind::Equiannihilated)?;
        let parts = random_partitions(ring, self.samples, self.config.seed);
        let mut mismatches = Vec::new();
        for p in &parts {
            if p.is_zero_divisor_relation() != p.is_finer(&ann)? {
                mismatches.push(p.blocks().to_vec());
            }
        }
        Ok((
            verdict(mismatches.is_empty()),
            json!({ "samples": parts.len(), "mismatches": mismatches }),
        ))
    }

    fn local_annihilator(&self, ring: &Arc<FiniteRing>) -> Outcome {
        let c = check_local_annihilator(ring, &self.config.budgets)?;
        Ok((
            verdict(c.consistent),
            json!({ "condition_holds": c.holds, "is_local": c.is_local }),
        ))
    }

    fn local_pir(&self, ring: &Arc<FiniteRing>) -> Outcome {
        match check_pirloc(ring, &self.config.budgets) {
            Ok(r) => Ok((
                verdict(r.consistent),
                json!({ "is_pir": r.is_pir, "staircase_index": r.staircase_index, "nilpotency_index": r.nilpotency_index }),
            )),
            Err(Error::NotLocal) => Ok((Status::NotApplicable, Value::Null)),
            Err(e) => Err(e),
        }
    }

    fn pir_product(&self, ring: &Arc<FiniteRing>) -> Outcome {
        let r = check_pir_product(ring, &self.config.budgets)?;
        Ok((
            verdict(r.consistent),
            json!({ "is_pir": r.is_pir, "staircase_indices": r.staircase_indices }),
        ))
    }

    fn lemmas(&self, ring: &Arc<FiniteRing>) -> Outcome {
        let r = check_lemmas(ring, &self.z2, &self.config.budgets)?;
        let failed: Vec<_> = r.lemmas.iter().filter(|l| l.status == LemmaStatus::Fail).collect();
        Ok((verdict(failed.is_empty()), json!({ "failed": failed })))
    }

    fn pair_checks(&self, a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> Vec<(&'static str, Outcome)> {
        let product = (|| {
            let r = product_comparison(a, b, &RelationKind::Associated)?;
            Ok((verdict(r.flags.is_iso && r.holds()), json!({ "flags": r.flags })))
        })();
        let side = (|| {
            let r = check_side_subgraphs(a, b, self.config.budgets.iso_nodes)?;
            let status = match r.status {
                LemmaStatus::Pass => Status::Pass,
                LemmaStatus::Fail => Status::Fail,
                LemmaStatus::NotApplicable => Status::NotApplicable,
            };
            Ok((status, r.witness.unwrap_or(Value::Null)))
        })();
        vec![("product_preserved", product), ("side_subgraphs", side)]
    }
}

fn relation_chain(ring: &Arc<FiniteRing>) -> Outcome {
    let rels = BASIC
        .iter()
        .map(|k| EqRelation::compute(ring, k))
        .collect::<zdg_core::Result<Vec<_>>>()?;
    let mut ok = true;
    for w in rels.windows(2) {
        ok &= w[0].is_finer(&w[1])?;
    }
    ok &= rels
        .iter()
        .all(|r| r.is_zero_divisor_relation() && r.blocks()[r.block_of(ring.zero())].len() == 1);
    Ok((verdict(ok), json!(rels.iter().map(|r| r.len()).collect::<Vec<_>>())))
}

fn connectivity(ring: &Arc<FiniteRing>) -> Outcome {
    let mut ok = true;
    let mut diameters = Vec::new();
    for kind in &BASIC {
        let rel = EqRelation::compute(ring, kind)?;
        let c = restrict_to_zero_divisors(&zeta(&rel)?, &rel).connectivity();
        ok &= c.connected && c.diameter.is_some_and(|d| d <= 3);
        diameters.push(c.diameter);
    }
    Ok((verdict(ok), json!({ "diameters": diameters })))
}

fn universal_zero(ring: &Arc<FiniteRing>) -> Outcome {
    if ring.is_zero_ring() {
        return Ok((Status::NotApplicable, Value::Null));
    }
    let mut ok = true;
    for kind in &BASIC {
        let rel = EqRelation::compute(ring, kind)?;
        ok &= zeta(&rel)?.universal_vertices() == [rel.block_of(ring.zero())];
    }
    Ok((verdict(ok), Value::Null))
}

fn principal_vertices(ring: &Arc<FiniteRing>) -> Outcome {
    let (_, g) = associated_graph(ring)?;
    let pi = ring.principal_ideals().len();
    Ok((
        verdict(g.order() == pi),
        json!({ "vertices": g.order(), "principal_ideals": pi }),
    ))
}

fn strong_quotients(ring: &Arc<FiniteRing>) -> Outcome {
    let eq = zeta(&EqRelation::compute(ring, &RelationKind::Equality)?)?;
    let mut ok = true;
    for kind in &BASIC[1..] {
        ok &= eq.quotient(EqRelation::compute(ring, kind)?.blocks())?.is_strong;
    }
    Ok((verdict(ok), Value::Null))
}

fn localization_at_units(ring: &Arc<FiniteRing>) -> Outcome {
    let r = localization_comparison(ring, &ring.units(), &RelationKind::Associated)?;
    Ok((verdict(r.holds() && r.flags.is_iso), json!({ "flags": r.flags })))
}

fn row(name: Value, order: Option<usize>, checks: Vec<(&'static str, Outcome)>) -> (bool, Value) {
    let mut cells = BTreeMap::new();
    let mut ok = true;
    for (key, outcome) in checks {
        let (status, detail) = cell(outcome);
        ok &= matches!(status, Status::Pass | Status::NotApplicable);
        cells.insert(key, json!({ "status": status, "detail": detail }));
    }
    (
        ok,
        json!({ "ring": name, "order": order, "passed": ok, "checks": cells }),
    )
}

pub fn run(config: &RunConfig, catalog: &Path, pair_order_cap: usize, samples: usize) -> Result<Output, CliError> {
    let specs = read_specs(catalog).map_err(|e| CliError::input(e.to_string()))?;
    let suite = Suite {
        config,
        samples,
        z2: FiniteRing::zn(2)?,
    };
    let built: Vec<(String, zdg_core::Result<Arc<FiniteRing>>)> = specs
        .into_iter()
        .map(|(name, spec)| (name, spec.and_then(|s| s.build())))
        .collect();

    let ring_rows: Vec<(bool, Value)> = built
        .par_iter()
        .map(|(name, ring)| match ring {
            Ok(ring) => {
                let mut checks = vec![("validation", Ok((Status::Pass, Value::Null)))];
                checks.extend(suite.ring_checks(ring));
                row(json!(name), Some(ring.order()), checks)
            }
            Err(e) => row(
                json!(name),
                None,
                vec![("validation", Ok((Status::Fail, json!(e.to_string()))))],
            ),
        })
        .collect();

    let valid: Vec<(&String, &Arc<FiniteRing>)> = built
        .iter()
        .filter_map(|(n, r)| r.as_ref().ok().map(|r| (n, r)))
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in valid.iter().enumerate() {
        for b in &valid[i..] {
            if a.1.order() * b.1.order() <= pair_order_cap {
                pairs.push((a, b));
            }
        }
    }
    let pair_rows: Vec<(bool, Value)> = pairs
        .par_iter()
        .map(|((na, a), (nb, b))| row(json!([na, nb]), Some(a.order() * b.order()), suite.pair_checks(a, b)))
        .collect();

    let failures = ring_rows.iter().chain(&pair_rows).filter(|(ok, _)| !ok).count();
    let passed = failures == 0;
    let report = json!({
        "command": "census",
        "catalog": catalog.display().to_string(),
        "seed": config.seed,
        "budgets": config.budgets,
        "samples": samples,
        "pair_order_cap": pair_order_cap,
        "passed": passed,
        "summary": { "rings": ring_rows.len(), "pairs": pair_rows.len(), "failed_rows": failures },
        "rings": ring_rows.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
        "pairs": pair_rows.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
    });
    Ok(Output::report(&report, passed))
}
