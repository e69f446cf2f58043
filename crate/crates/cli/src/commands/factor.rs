use std::path::Path;

use serde_json::json;
use zdg_core::functor::decompose;
use zdg_core::RelationKind;

use crate::config::{load_ring, parse_relation, spec_name, RunConfig};
use crate::{CliError, Output};

pub fn run(config: &RunConfig, spec: &Path, relation: &str) -> Result<Output, CliError> {
    if parse_relation(relation)? != RelationKind::Associated {
        return Err(CliError::input(
            "factor works on the associated-class graph; use --relation assoc",
        ));
    }
    let ring = load_ring(spec)?;
    let d = decompose(&ring, config.budgets.iso_nodes)?;
    let split = d.leaves.len() > 1;
    let message = (!split).then(|| {
        let local = ring
            .local_data(config.budgets.ideal_cap)
            .map(|l| l.is_local)
            .unwrap_or(false);
        if local {
            "no orthogonal pair (local ring)".to_string()
        } else {
            "no orthogonal pair".to_string()
        }
    });
    let mut orders = d.leaf_orders();
    orders.sort_unstable();
    let factors: Vec<_> = d
        .leaves
        .iter()
        .map(|leaf| json!({ "order": leaf.order(), "spec": serde_json::to_value(leaf.to_table_spec()).expect("serializable") }))
        .collect();
    let report = json!({
        "command": "factor",
        "ring": spec_name(spec),
        "order": ring.order(),
        "seed": config.seed,
        "budgets": config.budgets,
        "passed": split,
        "message": message,
        "factor_orders": orders,
        "steps": d.steps.iter().map(|s| s.to_value()).collect::<Vec<_>>(),
        "factors": factors,
    });
    let mut out = Output::report(&report, split);
    out.message = message;
    Ok(out)
}
