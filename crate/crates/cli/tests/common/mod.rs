#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn spec(name: &str) -> String {
    let direct = root().join("catalog").join(format!("{name}.spec"));
    let path = if direct.exists() {
        direct
    } else {
        root().join("catalog/prime-powers").join(format!("{name}.spec"))
    };
    path.display().to_string()
}

pub fn zdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdg"))
        .args(args)
        .current_dir(root())
        .env_remove("ZDG_BUDGETS")
        .output()
        .expect("binary runs")
}

pub fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}
