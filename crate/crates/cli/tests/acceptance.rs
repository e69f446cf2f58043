//! One line per acceptance criterion; the test fails if any criterion does.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{json, root, spec, zdg};
use zdg_core::catalog::{load_dir, CatalogEntry};
use zdg_core::classify::{
    associated_graph, check_lemmas, check_pir_product, check_pirloc, check_side_subgraphs, recognize_staircase,
    LemmaStatus,
};
use zdg_core::functor::product_comparison;
use zdg_core::graph::{restrict_to_zero_divisors, zeta, DEFAULT_ISO_BUDGET};
use zdg_core::relations::random_partitions;
use zdg_core::{Budgets, EqRelation, Error, FiniteRing, RelationKind};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn catalog() -> Vec<CatalogEntry> {
    load_dir(root().join("catalog")).expect("catalog loads")
}

fn find(entries: &[CatalogEntry], name: &str) -> Arc<FiniteRing> {
    entries
        .iter()
        .find(|e| e.name == name)
        .expect("catalog ring")
        .ring
        .clone()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const BASIC: [RelationKind; 4] = [
    RelationKind::Equality,
    RelationKind::StronglyAssociated,
    RelationKind::Associated,
    RelationKind::Equiannihilated,
];

fn relation_characterization(cat: &[CatalogEntry]) -> Verdict {
    ensure(cat.len() == 13, || format!("catalog has {} rings", cat.len()))?;
    let mut checked = 0;
    for e in cat {
        let ann = EqRelation::compute(&e.ring, &RelationKind::Equiannihilated).map_err(|x| x.to_string())?;
        let parts = random_partitions(&e.ring, 50, 2024);
        ensure(parts.len() >= 50, || {
            format!("{}: only {} partitions", e.name, parts.len())
        })?;
        for p in parts {
            let finer = p.is_finer(&ann).map_err(|x| x.to_string())?;
            ensure(p.is_zero_divisor_relation() == finer, || {
                format!("{}: {:?}", e.name, p.blocks())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{} rings, {checked} partitions, 0 mismatches", cat.len()))
}

fn connectivity(cat: &[CatalogEntry]) -> Verdict {
    let mut worst = 0;
    for e in cat {
        for kind in &BASIC {
            let rel = EqRelation::compute(&e.ring, kind).map_err(|x| x.to_string())?;
            let g = restrict_to_zero_divisors(&zeta(&rel).map_err(|x| x.to_string())?, &rel);
            let c = g.connectivity();
            let d = c.diameter.unwrap_or(usize::MAX);
            ensure(c.connected && d <= 3, || {
                format!("{} {kind}: diameter {:?}", e.name, c.diameter)
            })?;
            worst = worst.max(d);
        }
    }
    let rel = EqRelation::compute(&find(cat, "z12"), &RelationKind::Associated).map_err(|x| x.to_string())?;
    let d = restrict_to_zero_divisors(&zeta(&rel).map_err(|x| x.to_string())?, &rel)
        .connectivity()
        .diameter;
    ensure(d == Some(3), || format!("Z/12 diameter {d:?}"))?;
    Ok(format!(
        "{} rings x 4 relations connected, max diameter {worst}, Z/12 attains 3",
        cat.len()
    ))
}

fn product_preservation(cat: &[CatalogEntry]) -> Verdict {
    let mut pairs = 0;
    for a in cat {
        for b in cat {
            if a.ring.order() * b.ring.order() > 256 {
                continue;
            }
            let r = product_comparison(&a.ring, &b.ring, &RelationKind::Associated).map_err(|x| x.to_string())?;
            ensure(r.flags.is_iso, || format!("{} x {}: {:?}", a.name, b.name, r.flags))?;
            pairs += 1;
        }
    }
    let r = product_comparison(&find(cat, "z2"), &find(cat, "z4"), &RelationKind::unit_blend())
        .map_err(|x| x.to_string())?;
    let (s, t) = (r.counters["source_vertices"], r.counters["target_vertices"]);
    ensure((s, t) == (7, 6) && !r.flags.is_iso, || {
        format!("blend gives {s} vs {t}")
    })?;
    Ok(format!(
        "{pairs} pairs isomorphic, unit blend on Z/2 x Z/4 gives {s} vs {t} vertices"
    ))
}

fn vertex_counts(cat: &[CatalogEntry]) -> Verdict {
    let (_, ga) = associated_graph(&find(cat, "z4x_a")).map_err(|x| x.to_string())?;
    let (_, gb) = associated_graph(&find(cat, "z4x_b")).map_err(|x| x.to_string())?;
    ensure((ga.order(), gb.order()) == (5, 4), || {
        format!("{} and {} vertices", ga.order(), gb.order())
    })?;
    let iso = ga.isomorphism(&gb, DEFAULT_ISO_BUDGET).map_err(|x| x.to_string())?;
    ensure(iso.is_none(), || "graphs isomorphic".into())?;
    Ok("5 and 4 vertices, not isomorphic".into())
}

fn inversion_of_product() -> Verdict {
    let mut parts = Vec::new();
    for (name, want) in [("z6", vec![2, 3]), ("z12", vec![3, 4]), ("z30", vec![2, 3, 5])] {
        let out = zdg(&["factor", "--spec", &spec(name)]);
        ensure(out.status.code() == Some(0), || {
            format!("{name}: exit {:?}", out.status.code())
        })?;
        let v = json(&out);
        let orders: Vec<u64> = v["factor_orders"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap())
            .collect();
        ensure(orders == want, || format!("{name}: orders {orders:?}"))?;
        for step in v["steps"].as_array().unwrap() {
            let f = &step["flags"];
            ensure(
                f["ring_iso"] == true && f["side_isos"] == true && f["psi_bijective"] == true,
                || format!("{name}: unverified step {f}"),
            )?;
        }
        parts.push(format!("{name}->{orders:?}"));
    }
    for name in ["z8", "z3_3"] {
        let out = zdg(&["factor", "--spec", &spec(name)]);
        ensure(out.status.code() == Some(1), || {
            format!("{name}: exit {:?}", out.status.code())
        })?;
        parts.push(format!("{name}->exit 1"));
    }
    Ok(parts.join(", "))
}

/// Non-decreasing index tuples of length 1 to `max_len` over `0..n`.
fn multisets(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut last = out.clone();
    for _ in 1..max_len {
        last = last
            .iter()
            .flat_map(|t| (t[t.len() - 1]..n).map(move |i| [t.clone(), vec![i]].concat()))
            .collect();
        out.extend(last.iter().cloned());
    }
    out
}

fn staircase_and_pir(cat: &[CatalogEntry]) -> Verdict {
    let budgets = Budgets::default();
    let grid = load_dir(root().join("catalog/prime-powers")).map_err(|x| x.to_string())?;
    ensure(grid.len() == 15, || format!("{} prime powers", grid.len()))?;
    for e in &grid {
        let k: usize = e.name.rsplit('_').next().unwrap().parse().unwrap();
        let (_, g) = associated_graph(&e.ring).map_err(|x| x.to_string())?;
        let found = recognize_staircase(&g).index;
        ensure(found == Some(k), || format!("{}: staircase {found:?}", e.name))?;
    }
    let mut local = Vec::new();
    for e in cat.iter().chain(&grid) {
        match check_pirloc(&e.ring, &budgets) {
            Ok(r) => {
                ensure(r.consistent, || format!("{}: {r:?}", e.name))?;
                if cat.iter().any(|c| c.name == e.name) && e.ring.order() > 1 {
                    local.push(e);
                }
            }
            Err(Error::NotLocal) => {}
            Err(x) => return Err(format!("{}: {x}", e.name)),
        }
    }
    let mut products = 0;
    for picks in multisets(local.len(), 3) {
        let factors: Vec<Arc<FiniteRing>> = picks.iter().map(|&i| local[i].ring.clone()).collect();
        let p = FiniteRing::product(&factors).map_err(|x| x.to_string())?;
        let r = check_pir_product(&p, &budgets).map_err(|x| x.to_string())?;
        let names: Vec<&str> = picks.iter().map(|&i| local[i].name.as_str()).collect();
        ensure(r.consistent, || format!("{names:?}: {r:?}"))?;
        products += 1;
    }
    let (_, g) = associated_graph(&find(cat, "f2xy3")).map_err(|x| x.to_string())?;
    let r = recognize_staircase(&g);
    ensure(r.index.is_none() && r.looped_vertices == 4, || {
        format!("f2xy3: {:?} loops {}", r.index, r.looped_vertices)
    })?;
    Ok(format!(
        "15 prime powers recognised, {products} products of <= 3 local rings consistent, f2xy3 rejected with 4 loops"
    ))
}

fn final_remark(cat: &[CatalogEntry]) -> Verdict {
    let (a, b) = (find(cat, "f2xy_sq"), find(cat, "f2xy_b"));
    let poset = a.ideal_poset_iso(&b, 4096).map_err(|x| x.to_string())?;
    ensure(poset.is_some(), || "ideal posets differ".into())?;
    let (_, ga) = associated_graph(&a).map_err(|x| x.to_string())?;
    let (_, gb) = associated_graph(&b).map_err(|x| x.to_string())?;
    let iso = ga.isomorphism(&gb, DEFAULT_ISO_BUDGET).map_err(|x| x.to_string())?;
    ensure(iso.is_none(), || "graphs isomorphic".into())?;
    let (rel, _) = associated_graph(&a).map_err(|x| x.to_string())?;
    let da = restrict_to_zero_divisors(&ga, &rel);
    ensure(da.loop_count() == da.order(), || {
        "unlooped zero-divisor vertex in f2xy_sq".into()
    })?;
    let (va, vb) = (ga.vertex_labelled("(x)").unwrap(), gb.vertex_labelled("(x)").unwrap());
    ensure(ga.has_loop(va) != gb.has_loop(vb), || {
        "no loop discrepancy at (x)".into()
    })?;
    Ok(format!(
        "ideal posets isomorphic, graphs not; all {} zero-divisor vertices looped, (x) looped {} vs {}",
        da.order(),
        ga.has_loop(va),
        gb.has_loop(vb)
    ))
}

fn lemma_suite(cat: &[CatalogEntry]) -> Verdict {
    let budgets = Budgets::default();
    let z2 = FiniteRing::zn(2).unwrap();
    let (mut passes, mut skipped) = (0, 0);
    for e in cat {
        let report = check_lemmas(&e.ring, &z2, &budgets).map_err(|x| x.to_string())?;
        for l in &report.lemmas {
            match l.status {
                LemmaStatus::Pass => passes += 1,
                LemmaStatus::NotApplicable => skipped += 1,
                LemmaStatus::Fail => return Err(format!("{} {}: {:?}", e.name, l.name, l.witness)),
            }
        }
    }
    for a in cat {
        for b in cat {
            if a.ring.order() * b.ring.order() > 256 {
                continue;
            }
            let r = check_side_subgraphs(&a.ring, &b.ring, DEFAULT_ISO_BUDGET).map_err(|x| x.to_string())?;
            ensure(r.status != LemmaStatus::Fail, || {
                format!("side subgraphs {} x {}", a.name, b.name)
            })?;
            passes += (r.status == LemmaStatus::Pass) as usize;
        }
    }
    Ok(format!(
        "{passes} checks passed, {skipped} not applicable, 0 counterexamples"
    ))
}

fn determinism() -> Verdict {
    let run = |threads: &str| {
        std::process::Command::new(env!("CARGO_BIN_EXE_zdg"))
            .args(["census", "--seed", "17"])
            .current_dir(root())
            .env_remove("ZDG_BUDGETS")
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .expect("binary runs")
    };
    let (a, b, c) = (run("4"), run("4"), run("1"));
    ensure(a.status.code() == Some(0), || {
        format!("census exit {:?}", a.status.code())
    })?;
    ensure(a.stdout == b.stdout && a.stdout == c.stdout, || {
        "census reports differ".into()
    })?;
    Ok(format!("{} identical bytes across 3 runs", a.stdout.len()))
}

fn main() {
    let start = Instant::now();
    let cat = catalog();
    let criteria: Vec<Criterion> = vec![
        (
            "relation characterization",
            Box::new(|| relation_characterization(&cat)),
        ),
        ("connectivity", Box::new(|| connectivity(&cat))),
        ("product preservation", Box::new(|| product_preservation(&cat))),
        ("vertex counts", Box::new(|| vertex_counts(&cat))),
        ("inversion of product", Box::new(inversion_of_product)),
        ("staircase and PIR", Box::new(|| staircase_and_pir(&cat))),
        ("final remark", Box::new(|| final_remark(&cat))),
        ("lemma suite", Box::new(|| lemma_suite(&cat))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = check();
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {}. {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                println!("FAIL {}. {name}: {why} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    let total = start.elapsed();
    let in_time = total < Duration::from_secs(300);
    println!(
        "total {:.1}s ({})",
        total.as_secs_f64(),
        if in_time { "within 300s" } else { "over 300s" }
    );
    if !failed.is_empty() || !in_time {
        eprintln!("acceptance failed: criteria {failed:?}");
        std::process::exit(1);
    }
}
