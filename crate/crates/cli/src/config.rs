use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;
use zdg_core::{Budgets, FiniteRing, RelationKind, RingSpec};

use crate::args::CommonArgs;
use crate::error::CliError;

/// Environment variable holding default budgets, e.g.
/// `ZDG_BUDGETS="iso_nodes=100000,ideal_cap=512"`. Command-line flags win.
pub const BUDGET_ENV: &str = "ZDG_BUDGETS";

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub budgets: Budgets,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(common: &CommonArgs, env: Option<&str>) -> Result<Self, CliError> {
        let mut budgets = Budgets::default();
        if let Some(text) = env {
            apply_budget_overrides(&mut budgets, text)?;
        }
        let set = |slot: &mut usize, v: Option<u64>| {
            if let Some(v) = v {
                *slot = v as usize;
            }
        };
        set(&mut budgets.iso_nodes, common.iso_budget);
        set(&mut budgets.ideal_cap, common.ideal_cap);
        set(&mut budgets.hom_order_cap, common.hom_order_cap);
        set(&mut budgets.hom_candidates, common.hom_candidates);
        Ok(RunConfig {
            seed: common.seed,
            budgets,
            output: common.output.clone(),
        })
    }
}

fn apply_budget_overrides(budgets: &mut Budgets, text: &str) -> Result<(), CliError> {
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::input(format!("{BUDGET_ENV}: expected key=value, got `{item}`")))?;
        let value: usize = value
            .trim()
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| CliError::input(format!("{BUDGET_ENV}: `{key}` needs a positive integer")))?;
        match key.trim() {
            "iso_nodes" => budgets.iso_nodes = value,
            "ideal_cap" => budgets.ideal_cap = value,
            "hom_order_cap" => budgets.hom_order_cap = value,
            "hom_candidates" => budgets.hom_candidates = value,
            other => return Err(CliError::input(format!("{BUDGET_ENV}: unknown budget `{other}`"))),
        }
    }
    Ok(())
}

/// `eq`, `sassoc`, `assoc`, `equiann`, `blend-nilp`, `blend-units` or
/// `custom:<path>` naming a JSON list of blocks.
pub fn parse_relation(selector: &str) -> Result<RelationKind, CliError> {
    match selector.strip_prefix("custom:") {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))?;
            Ok(RelationKind::custom_from_json(&text)?)
        }
        None => Ok(RelationKind::parse(selector)?),
    }
}

/// Display name of a spec file: its stem.
pub fn spec_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_ring(path: &Path) -> Result<Arc<FiniteRing>, CliError> {
    let spec = RingSpec::load(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    spec.build()
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}
