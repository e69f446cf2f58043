//! The zero-divisor graph of a ring under a zero-divisor relation.

use super::{Graph, Vertex};
use crate::error::{Error, Result};
use crate::relations::{EqRelation, RelationKind};

fn vertex_label(rel: &EqRelation, rep: usize) -> String {
    let label = rel.ring().label(rep);
    match rel.kind() {
        RelationKind::Associated => format!("({label})"),
        _ => format!("[{label}]"),
    }
}

/// Vertices are the blocks of `rel` (id = block index, payload = minimal
/// element); `[a] ~ [b]` iff `ab = 0`, loops included.
pub fn zeta(rel: &EqRelation) -> Result<Graph> {
    if let Some(w) = rel.zero_divisor_witness() {
        return Err(Error::NotZeroDivisorRelation(w));
    }
    let ring = rel.ring();
    let reps: Vec<usize> = (0..rel.len()).map(|i| rel.representative(i)).collect();
    let vertices = reps
        .iter()
        .map(|&r| Vertex {
            label: vertex_label(rel, r),
            payload: Some(r),
        })
        .collect();
    let mut g = Graph::new(vertices);
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate().skip(i) {
            if ring.mul(a, b) == ring.zero() {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// `ζ(X, R)`: the subgraph of `ζ(A, R)` induced on the blocks meeting `subset`.
pub fn zeta_on(rel: &EqRelation, subset: &[usize]) -> Result<Graph> {
    let full = zeta(rel)?;
    let mut keep = Vec::with_capacity(subset.len());
    for &a in subset {
        if a >= rel.ring().order() {
            return Err(Error::UnknownVertex(a));
        }
        keep.push(rel.block_of(a));
    }
    full.induced_subgraph(&keep)
}

/// Restricts `ζ(A, R)` to the blocks of nonzero zero-divisors.
pub fn restrict_to_zero_divisors(graph: &Graph, rel: &EqRelation) -> Graph {
    let ring = rel.ring();
    graph.induced_by(|v| {
        let a = rel.representative(v);
        a != ring.zero() && ring.is_zero_divisor(a)
    })
}
