//! Finite commutative rings, zero-divisor relations and the compressed
//! zero-divisor graphs they induce.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: table-driven rings, ideals, homomorphisms and derived rings;
//! * [`relations`]: equivalence relations on a ring as partitions;
//! * [`graph`]: graphs with loops, graph maps, products, isomorphism and the
//!   zero-divisor graph construction;
//! * [`functor`]: the zero-divisor graph on homomorphisms, product/equalizer
//!   comparison maps and recovery of product decompositions;
//! * [`classify`]: staircase graphs and the local/principal-ideal-ring
//!   recognisers built on them.

pub mod budget;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod functor;
pub mod graph;
pub mod relations;
pub mod ring;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use graph::{Graph, GraphMap};
pub use relations::{EqRelation, RelationKind};
pub use ring::{FiniteRing, IdealSet, RingHom, RingSpec};
