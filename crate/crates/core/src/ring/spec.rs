use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FiniteRing;
use crate::error::{Error, Result};

/// Serializable description of a finite commutative ring.
///
/// The JSON form is a single object whose `"kind"` field selects the variant:
///
/// ```json
/// {"kind": "Zn", "n": 12}
/// {"kind": "Product", "factors": [{"kind": "Zn", "n": 2}, {"kind": "Zn", "n": 4}]}
/// {"kind": "Presented", "orders": [4, 2], "one": [1, 0],
///  "mul": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "labels": ["1", "x"]}
/// {"kind": "Table", "add_table": [[0, 1], [1, 0]], "mul_table": [[0, 0], [0, 1]],
///  "zero": 0, "one_id": 1}
/// ```
///
/// For `Presented` rings `orders[i]` is the additive order of the i-th generator,
/// `mul[i][j]` holds the coordinates of the product of generators i and j, and the
/// optional `labels` name the generators. For `Table` rings `labels` names elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum RingSpec {
    Zn {
        n: u64,
    },
    Product {
        factors: Vec<RingSpec>,
    },
    Presented {
        orders: Vec<u32>,
        one: Vec<u32>,
        mul: Vec<Vec<Vec<u32>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Table {
        add_table: Vec<Vec<u32>>,
        mul_table: Vec<Vec<u32>>,
        zero: u32,
        one_id: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl RingSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring spec serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    /// Builds the ring and runs the full axiom validation; any failure is an error
    /// carrying the witnessing elements.
    pub fn build(&self) -> Result<Arc<FiniteRing>> {
        let ring = self.build_unchecked()?;
        ring.validate().into_result()?;
        Ok(ring)
    }

    /// Builds the ring checking only table shapes and the well-definedness of
    /// presented multiplication. Useful for feeding deliberately broken tables to
    /// [`FiniteRing::validate`].
    pub fn build_unchecked(&self) -> Result<Arc<FiniteRing>> {
        match self {
            RingSpec::Zn { n } => FiniteRing::zn(*n),
            RingSpec::Product { factors } => {
                let rings = factors
                    .iter()
                    .map(|f| f.build_unchecked())
                    .collect::<Result<Vec<_>>>()?;
                FiniteRing::product(&rings)
            }
            RingSpec::Presented {
                orders,
                one,
                mul,
                labels,
            } => FiniteRing::presented_unchecked(orders, one, mul, labels.as_deref()),
            RingSpec::Table {
                add_table,
                mul_table,
                zero,
                one_id,
                labels,
            } => {
                let n = add_table.len();
                if mul_table.len() != n {
                    return Err(Error::InvalidSpec("add and mul tables differ in size".into()));
                }
                let mut add = Vec::with_capacity(n * n);
                let mut mul = Vec::with_capacity(n * n);
                for (name, table, out) in [("add", add_table, &mut add), ("mul", mul_table, &mut mul)] {
                    for row in table {
                        if row.len() != n {
                            return Err(Error::InvalidSpec(format!("{name} table is not square")));
                        }
                        out.extend_from_slice(row);
                    }
                }
                FiniteRing::from_tables(add, mul, *zero as usize, *one_id as usize, labels.clone(), self.clone())
                    .map(Arc::new)
            }
        }
    }
}
