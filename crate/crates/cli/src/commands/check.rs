use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use serde_json::{json, Value};
use zdg_core::classify::{check_lemmas, check_local_annihilator, check_pir_product, check_pirloc, recognize_staircase};
use zdg_core::functor::{equalizer_comparison, localization_comparison, product_comparison};
use zdg_core::graph::{restrict_to_zero_divisors, zeta};
use zdg_core::relations::{check_functorial, random_partitions};
use zdg_core::{EqRelation, Error, FiniteRing, RelationKind, RingHom};

use crate::args::Property;
use crate::config::{load_ring, parse_relation, spec_name, RunConfig};
use crate::{CliError, Output};

/// Maps beyond this many are summarised by count only.
const LISTED_WITNESSES: usize = 8;

struct Ctx<'a> {
    config: &'a RunConfig,
    kind: RelationKind,
    rings: Vec<(String, Arc<FiniteRing>)>,
    samples: usize,
    subset: Option<&'a str>,
}

pub fn run(
    config: &RunConfig,
    property: Property,
    specs: &[PathBuf],
    relation: &str,
    samples: usize,
    subset: Option<&str>,
) -> Result<Output, CliError> {
    let kind = parse_relation(relation)?;
    let rings = specs
        .iter()
        .map(|p| Ok((spec_name(p), load_ring(p)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let ctx = Ctx {
        config,
        kind,
        rings,
        samples,
        subset,
    };
    let (passed, results) = match property {
        Property::Zdrel => per_ring(&ctx, zdrel)?,
        Property::Connectivity => per_ring(&ctx, connectivity)?,
        Property::Cla => per_ring(&ctx, cla)?,
        Property::Staircase => per_ring(&ctx, staircase)?,
        Property::Pir => per_ring(&ctx, pir)?,
        Property::Localization => per_ring(&ctx, localization)?,
        Property::Lemmas => lemmas(&ctx)?,
        Property::Product => product(&ctx)?,
        Property::Equalizer => hom_pairs(&ctx, equalizer)?,
        Property::Functorial => hom_pairs(&ctx, functorial)?,
    };
    let report = json!({
        "command": "check",
        "property": property.name(),
        "relation": ctx.kind.name(),
        "seed": config.seed,
        "budgets": config.budgets,
        "passed": passed,
        "results": results,
    });
    Ok(Output::report(&report, passed))
}

type Check = fn(&Ctx, &str, &Arc<FiniteRing>) -> Result<(bool, Value), CliError>;

fn per_ring(ctx: &Ctx, check: Check) -> Result<(bool, Vec<Value>), CliError> {
    let mut all = true;
    let mut out = Vec::new();
    for (name, ring) in &ctx.rings {
        let (ok, mut v) = check(ctx, name, ring)?;
        v["ring"] = json!(name);
        v["passed"] = json!(ok);
        all &= ok;
        out.push(v);
    }
    Ok((all, out))
}

fn zdrel(ctx: &Ctx, _: &str, ring: &Arc<FiniteRing>) -> Result<(bool, Value), CliError> {
    let rel = EqRelation::compute(ring, &ctx.kind)?;
    let ann = EqRelation::compute(ring, &RelationKind::Equiannihilated)?;
    let witness = rel.zero_divisor_witness();
    let finer = rel.is_finer(&ann)?;
    let mut mismatches = Vec::new();
    let parts = random_partitions(ring, ctx.samples, ctx.config.seed);
    for p in &parts {
        if p.is_zero_divisor_relation() != p.is_finer(&ann)? {
            mismatches.push(p.blocks().to_vec());
        }
    }
    let ok = witness.is_none() && finer && mismatches.is_empty();
    Ok((
        ok,
        json!({
            "is_zero_divisor_relation": witness.is_none(),
            "finer_than_equiannihilation": finer,
            "witness": witness,
            "blocks": rel.len(),
            "samples": parts.len(),
            "sample_mismatches": mismatches,
        }),
    ))
}

fn connectivity(ctx: &Ctx, _: &str, ring: &Arc<FiniteRing>) -> Result<(bool, Value), CliError> {
    let rel = EqRelation::compute(ring, &ctx.kind)?;
    let d = restrict_to_zero_divisors(&zeta(&rel)?, &rel);
    let c = d.connectivity();
    let ok = c.connected && c.diameter.is_some_and(|k| k <= 3);
    Ok((
        ok,
        json!({ "vertices": d.order(), "connected": c.connected, "diameter": c.diameter }),
    ))
}

fn cla(ctx: &Ctx, _: &str, ring: &Arc<FiniteRing>) -> Result<(bool, Value), CliError> {
    let c = check_local_annihilator(ring, &ctx.config.budgets)?;
    let witness = c
        .witness
        .map(|(a, b)| json!({ "a": ring.label(a), "b": ring.label(b) }));
    Ok((
        c.consistent,
        json!({ "condition_holds": c.holds, "is_local": c.is_local, "witness": witness }),
    ))
}

fn staircase(ctx: &Ctx, _: &str, ring: &Arc<FiniteRing>) -> Result<(bool, Value), CliError> {
    let g = zeta(&EqRelation::compute(ring, &ctx.kind)?)?;
    let report = recognize_staircase(&g);
    Ok((report.index.is_some(), report.to_value()))
}

fn pir(ctx: &Ctx, _: &str, ring: &Arc<FiniteRing>) -> Result<(bool, Value), CliError> {
    let product = check_pir_product(ring, &ctx.config.budgets)?;
    let (local_ok, local) = match check_pirloc(ring, &ctx.config.budgets) {
        Ok(r) => (r.consistent, serde_json::to_value(&r).expect("serializable")),
        Err(Error::NotLocal) => (true, Value::Null),
        Err(e) => return Err(e.into()),
    };
    Ok((
        product.consistent && local_ok,
        json!({
            "is_pir": product.is_pir,
            "staircase_indices": product.staircase_indices,
            "product": product,
            "local": local,
        }),
    ))
}

/// Closure under multiplication of the given elements together with 1.
fn multiplicative_closure(ring: &FiniteRing, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([ring.one()]);
    let mut frontier = vec![ring.one()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = ring.mul(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

fn localization(ctx: &Ctx, _: &str, ring: &Arc<FiniteRing>) -> Result<(bool, Value), CliError> {
    let sets: BTreeSet<Vec<usize>> = match ctx.subset {
        Some(text) => {
            let gens = text
                .split(',')
                .map(|l| {
                    ring.element(l.trim())
                        .ok_or_else(|| CliError::input(format!("unknown element `{}`", l.trim())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            BTreeSet::from([multiplicative_closure(ring, &gens)])
        }
        None => ring
            .elements()
            .filter(|&s| !ring.is_nilpotent(s))
            .map(|s| multiplicative_closure(ring, &[s]))
            .collect(),
    };
    let mut ok = true;
    let mut out = Vec::new();
    for s in &sets {
        let report = localization_comparison(ring, s, &ctx.kind)?;
        ok &= report.holds();
        let labels: Vec<&str> = s.iter().map(|&x| ring.label(x)).collect();
        out.push(json!({ "set": labels, "report": report.to_value() }));
    }
    Ok((ok, json!({ "sets": out })))
}

/// Each ring is paired with the next one given (cyclically), or with Z/2 alone.
fn lemmas(ctx: &Ctx) -> Result<(bool, Vec<Value>), CliError> {
    let z2 = FiniteRing::zn(2)?;
    let mut all = true;
    let mut out = Vec::new();
    for (i, (name, ring)) in ctx.rings.iter().enumerate() {
        let (pname, partner) = if ctx.rings.len() > 1 {
            let (n, r) = &ctx.rings[(i + 1) % ctx.rings.len()];
            (n.clone(), r.clone())
        } else {
            ("Z/2".to_string(), z2.clone())
        };
        let report = check_lemmas(ring, &partner, &ctx.config.budgets)?;
        all &= report.passed();
        out.push(json!({ "ring": name, "partner": pname, "passed": report.passed(), "lemmas": report.lemmas }));
    }
    Ok((all, out))
}

/// Passes when the canonical map `ζ(A x B) -> ζ(A) x ζ(B)` is an isomorphism.
fn product(ctx: &Ctx) -> Result<(bool, Vec<Value>), CliError> {
    let [(na, a), (nb, b)] = ctx.rings.as_slice() else {
        return Err(CliError::input("product needs exactly two --spec arguments"));
    };
    let report = product_comparison(a, b, &ctx.kind)?;
    let ok = report.flags.is_iso;
    let mut v = report.to_value();
    v["rings"] = json!([na, nb]);
    v["passed"] = json!(ok);
    v["source_vertices"] = json!(report.counters["source_vertices"]);
    v["target_vertices"] = json!(report.counters["target_vertices"]);
    Ok((ok, vec![v]))
}

type PairCheck = fn(&Ctx, &[RingHom]) -> Result<(bool, Value), CliError>;

/// Runs `check` over all homomorphisms between the first ring and the second
/// (or itself when only one is given).
fn hom_pairs(ctx: &Ctx, check: PairCheck) -> Result<(bool, Vec<Value>), CliError> {
    let (na, a) = &ctx.rings[0];
    let (nb, b) = ctx.rings.get(1).unwrap_or(&ctx.rings[0]);
    if ctx.rings.len() > 2 {
        return Err(CliError::input("at most two --spec arguments"));
    }
    let cap = ctx.config.budgets.hom_order_cap;
    if a.order().max(b.order()) > cap {
        return Err(Error::BudgetExceeded {
            what: "homomorphism ring order",
            cap,
        }
        .into());
    }
    let homs = a.homomorphisms_to(b, ctx.config.budgets.hom_candidates)?;
    let (ok, mut v) = check(ctx, &homs)?;
    v["source"] = json!(na);
    v["target"] = json!(nb);
    v["homomorphisms"] = json!(homs.len());
    v["passed"] = json!(ok);
    Ok((ok, vec![v]))
}

/// Passes when every equalizer comparison map is an isomorphism.
fn equalizer(ctx: &Ctx, homs: &[RingHom]) -> Result<(bool, Value), CliError> {
    let (mut pairs, mut skipped, mut consistent) = (0u64, 0u64, true);
    let mut failures = Vec::new();
    let mut failure_count = 0usize;
    for (i, f) in homs.iter().enumerate() {
        for g in &homs[i + 1..] {
            pairs += 1;
            let report = match equalizer_comparison(f, g, &ctx.kind) {
                Ok(r) => r,
                Err(Error::NotFunctorial(_)) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            consistent &= report.holds();
            if !report.flags.is_iso {
                failure_count += 1;
                if failures.len() < LISTED_WITNESSES {
                    let mut v = report.to_value();
                    v["f"] = json!(f.map());
                    v["g"] = json!(g.map());
                    failures.push(v);
                }
            }
        }
    }
    let ok = failure_count == 0 && consistent;
    Ok((
        ok,
        json!({
            "pairs": pairs,
            "skipped_non_functorial": skipped,
            "predictions_hold": consistent,
            "non_iso": failure_count,
            "witnesses": failures,
        }),
    ))
}

/// Passes when every homomorphism maps related elements to related elements.
fn functorial(ctx: &Ctx, homs: &[RingHom]) -> Result<(bool, Value), CliError> {
    let mut failures = Vec::new();
    let mut failure_count = 0usize;
    for f in homs {
        if let Some(w) = check_functorial(f, &ctx.kind, &ctx.kind)? {
            failure_count += 1;
            if failures.len() < LISTED_WITNESSES {
                failures.push(json!({ "map": f.map(), "witness": w }));
            }
        }
    }
    Ok((
        failure_count == 0,
        json!({ "non_functorial": failure_count, "witnesses": failures }),
    ))
}
