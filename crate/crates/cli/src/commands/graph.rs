use std::path::Path;

use zdg_core::graph::{restrict_to_zero_divisors, zeta};
use zdg_core::EqRelation;

use crate::args::{Format, Restrict};
use crate::config::{load_ring, parse_relation};
use crate::{CliError, Output};

pub fn run(
    spec: &Path,
    relation: &str,
    restrict: Restrict,
    strip_loops: bool,
    format: Format,
) -> Result<Output, CliError> {
    let kind = parse_relation(relation)?;
    let ring = load_ring(spec)?;
    let rel = EqRelation::compute(&ring, &kind)?;
    let mut g = zeta(&rel)?;
    if restrict == Restrict::ZeroDivisors {
        g = restrict_to_zero_divisors(&g, &rel);
    }
    if strip_loops {
        g = g.strip_loops();
    }
    let document = match format {
        Format::Dot => g.to_dot(),
        Format::Json => g.to_json() + "\n",
    };
    Ok(Output {
        document,
        passed: true,
        message: None,
    })
}
