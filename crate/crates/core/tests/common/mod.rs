#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use zdg_core::catalog::{load_dir, CatalogEntry};
use zdg_core::FiniteRing;

pub fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

pub fn catalog() -> Vec<CatalogEntry> {
    load_dir(catalog_dir()).expect("catalog loads")
}

pub fn prime_powers() -> Vec<CatalogEntry> {
    load_dir(catalog_dir().join("prime-powers")).expect("prime-power catalog loads")
}

pub fn ring(name: &str) -> Arc<FiniteRing> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("no catalog ring {name}"))
        .ring
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
