//! Equivalence relations on a ring's elements, stored as partitions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{restrict_to_zero_divisors, zeta, Graph};
use crate::ring::{FiniteRing, RingHom};

/// Subset of a ring on which a blended relation uses its inside kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Selector {
    Nilpotents,
    Units,
}

impl Selector {
    pub fn members(self, ring: &FiniteRing) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(ring.order());
        for a in ring.elements() {
            let inside = match self {
                Selector::Nilpotents => ring.is_nilpotent(a),
                Selector::Units => ring.is_unit(a),
            };
            mask.set(a, inside);
        }
        mask
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `a = b`.
    Equality,
    /// `a = ub` for a unit `u`.
    StronglyAssociated,
    /// `(a) = (b)`.
    Associated,
    /// `Ann(a) = Ann(b)`.
    Equiannihilated,
    /// `inside` on the selected subset, `outside` on its complement, and no
    /// element of the subset related to one outside it.
    Blend {
        selector: Selector,
        inside: Box<RelationKind>,
        outside: Box<RelationKind>,
    },
    /// An explicit partition of the element ids.
    CustomPartition(Vec<Vec<usize>>),
}

impl RelationKind {
    pub fn blend(selector: Selector, inside: RelationKind, outside: RelationKind) -> Result<Self> {
        if matches!(inside, RelationKind::Blend { .. }) || matches!(outside, RelationKind::Blend { .. }) {
            return Err(Error::InvalidRelation("blend components must not be blends".into()));
        }
        Ok(RelationKind::Blend {
            selector,
            inside: Box::new(inside),
            outside: Box::new(outside),
        })
    }

    /// Associated on nilpotents, strongly associated elsewhere.
    pub fn nilpotent_blend() -> Self {
        Self::blend(
            Selector::Nilpotents,
            RelationKind::Associated,
            RelationKind::StronglyAssociated,
        )
        .expect("components are not blends")
    }

    /// Associated on units, equality elsewhere.
    pub fn unit_blend() -> Self {
        Self::blend(Selector::Units, RelationKind::Associated, RelationKind::Equality)
            .expect("components are not blends")
    }

    /// Parses a selector string: `eq`, `sassoc`, `assoc`, `equiann`, `blend-nilp`,
    /// `blend-units`. Custom partitions are loaded separately.
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "eq" => RelationKind::Equality,
            "sassoc" => RelationKind::StronglyAssociated,
            "assoc" => RelationKind::Associated,
            "equiann" => RelationKind::Equiannihilated,
            "blend-nilp" => Self::nilpotent_blend(),
            "blend-units" => Self::unit_blend(),
            other => return Err(Error::InvalidRelation(format!("unknown relation `{other}`"))),
        })
    }

    /// Parses the JSON list-of-blocks format used for custom partitions.
    pub fn custom_from_json(text: &str) -> Result<Self> {
        let blocks: Vec<Vec<usize>> =
            serde_json::from_str(text).map_err(|e| Error::MalformedPartition(e.to_string()))?;
        Ok(RelationKind::CustomPartition(blocks))
    }

    pub fn name(&self) -> String {
        match self {
            RelationKind::Equality => "eq".into(),
            RelationKind::StronglyAssociated => "sassoc".into(),
            RelationKind::Associated => "assoc".into(),
            RelationKind::Equiannihilated => "equiann".into(),
            RelationKind::Blend { .. } if *self == Self::nilpotent_blend() => "blend-nilp".into(),
            RelationKind::Blend { .. } if *self == Self::unit_blend() => "blend-units".into(),
            RelationKind::Blend {
                selector,
                inside,
                outside,
            } => {
                format!("blend({selector:?};{};{})", inside.name(), outside.name())
            }
            RelationKind::CustomPartition(_) => "custom".into(),
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A partition of a ring's elements. Blocks are sorted, and ordered by their
/// minimal element, which serves as the block representative.
#[derive(Clone)]
pub struct EqRelation {
    ring: Arc<FiniteRing>,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    kind: RelationKind,
}

impl fmt::Debug for EqRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EqRelation")
            .field("kind", &self.kind)
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl PartialEq for EqRelation {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks && crate::ring::same_ring(&self.ring, &other.ring)
    }
}

/// Groups elements by a key; first-seen order is irrelevant since blocks are
/// re-sorted by their minima.
fn group_by<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Vec<Vec<usize>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        let slot = *index.entry(key(a)).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[slot].push(a);
    }
    blocks
}

impl EqRelation {
    /// Wraps a list of blocks after checking that it partitions `0..N`.
    pub fn from_blocks(ring: &Arc<FiniteRing>, mut blocks: Vec<Vec<usize>>, kind: RelationKind) -> Result<Self> {
        let n = ring.order();
        let mut block_of = vec![usize::MAX; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        for (i, block) in blocks.iter().enumerate() {
            for &a in block {
                if a >= n {
                    return Err(Error::MalformedPartition(format!("element {a} out of range 0..{n}")));
                }
                if block_of[a] != usize::MAX {
                    return Err(Error::MalformedPartition(format!("element {a} appears twice")));
                }
                block_of[a] = i;
            }
        }
        if let Some(missing) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::MalformedPartition(format!("element {missing} is not covered")));
        }
        Ok(EqRelation {
            ring: Arc::clone(ring),
            blocks,
            block_of,
            kind,
        })
    }

    /// The partition induced by `kind` on `ring`.
    pub fn compute(ring: &Arc<FiniteRing>, kind: &RelationKind) -> Result<Self> {
        let n = ring.order();
        let blocks = match kind {
            RelationKind::Equality => (0..n).map(|a| vec![a]).collect(),
            RelationKind::StronglyAssociated => {
                let units = ring.units();
                let mut seen = vec![false; n];
                let mut blocks = Vec::new();
                for a in ring.elements() {
                    if seen[a] {
                        continue;
                    }
                    let mut orbit: Vec<usize> = units.iter().map(|&u| ring.mul(u, a)).collect();
                    orbit.sort_unstable();
                    orbit.dedup();
                    for &b in &orbit {
                        seen[b] = true;
                    }
                    blocks.push(orbit);
                }
                blocks
            }
            RelationKind::Associated => group_by(n, |a| ring.principal_mask(a)),
            RelationKind::Equiannihilated => group_by(n, |a| ring.annihilator_mask(a)),
            RelationKind::Blend {
                selector,
                inside,
                outside,
            } => {
                let chosen = selector.members(ring);
                let inner = Self::compute(ring, inside)?;
                let outer = Self::compute(ring, outside)?;
                let restrict = |rel: &EqRelation, keep: bool| -> Vec<Vec<usize>> {
                    rel.blocks
                        .iter()
                        .map(|b| {
                            b.iter()
                                .copied()
                                .filter(|&a| chosen.contains(a) == keep)
                                .collect::<Vec<_>>()
                        })
                        .filter(|b| !b.is_empty())
                        .collect()
                };
                let mut blocks = restrict(&inner, true);
                blocks.extend(restrict(&outer, false));
                blocks
            }
            RelationKind::CustomPartition(blocks) => blocks.clone(),
        };
        Self::from_blocks(ring, blocks, kind.clone())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn kind(&self) -> &RelationKind {
        &self.kind
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `a`.
    #[inline]
    pub fn block_of(&self, a: usize) -> usize {
        self.block_of[a]
    }

    /// Minimal element of block `i`.
    #[inline]
    pub fn representative(&self, i: usize) -> usize {
        self.blocks[i][0]
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// The same partition relabelled as a custom one.
    pub fn as_custom(&self) -> EqRelation {
        EqRelation {
            kind: RelationKind::CustomPartition(self.blocks.clone()),
            ..self.clone()
        }
    }

    /// A witness `[a, a', b, b']` with `a R a'`, `b R b'`, `ab = 0` and
    /// `a'b' != 0`, or `None` when this is a zero-divisor relation.
    ///
    /// It suffices to test `a' = a`: if `ab = 0` forces `ab' = 0` for every
    /// `b' R b`, applying the same fact with the roles swapped gives `a'b' = 0`.
    pub fn zero_divisor_witness(&self) -> Option<[usize; 4]> {
        let r = &self.ring;
        for a in r.elements() {
            for block in &self.blocks {
                let killed = block.iter().find(|&&b| r.mul(a, b) == r.zero());
                let survives = block.iter().find(|&&b| r.mul(a, b) != r.zero());
                if let (Some(&b), Some(&b2)) = (killed, survives) {
                    return Some([a, a, b, b2]);
                }
            }
        }
        None
    }

    pub fn is_zero_divisor_relation(&self) -> bool {
        self.zero_divisor_witness().is_none()
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn is_finer(&self, other: &EqRelation) -> Result<bool> {
        if !crate::ring::same_ring(&self.ring, &other.ring) {
            return Err(Error::MismatchedRings);
        }
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&a| other.block_of[a] == other.block_of[b[0]])))
    }

    /// One random split-or-merge move.
    fn perturb(&self, rng: &mut impl Rng, allow_merge: bool) -> EqRelation {
        let mut blocks = self.blocks.clone();
        let splittable: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i].len() > 1).collect();
        let merge = allow_merge && blocks.len() > 1 && (splittable.is_empty() || rng.gen_bool(0.5));
        if merge {
            let i = rng.gen_range(0..blocks.len());
            let mut j = rng.gen_range(0..blocks.len() - 1);
            if j >= i {
                j += 1;
            }
            let moved = std::mem::take(&mut blocks[j]);
            blocks[i].extend(moved);
            blocks.remove(j);
        } else if let Some(&i) = splittable.choose(rng) {
            let mut block = std::mem::take(&mut blocks[i]);
            block.shuffle(rng);
            let cut = rng.gen_range(1..block.len());
            let tail = block.split_off(cut);
            blocks[i] = block;
            blocks.push(tail);
        }
        EqRelation::from_blocks(&self.ring, blocks.clone(), RelationKind::CustomPartition(blocks))
            .expect("moves preserve the partition property")
    }
}

/// `count` seeded partitions obtained from the equiannihilator partition by
/// one to three split/merge moves. Even-indexed entries use splits only (so they
/// refine it); odd-indexed entries may merge blocks.
pub fn random_partitions(ring: &Arc<FiniteRing>, count: usize, seed: u64) -> Vec<EqRelation> {
    let base = EqRelation::compute(ring, &RelationKind::Equiannihilated).expect("built-in kind");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let moves = rng.gen_range(1..=3);
            (0..moves).fold(base.clone(), |rel, _| rel.perturb(&mut rng, i % 2 == 1))
        })
        .collect()
}

/// Checks that `f` maps `kind_a`-related pairs to `kind_b`-related pairs. Returns
/// a witness `[a, a', f(a), f(a')]` on failure.
pub fn check_functorial(f: &RingHom, kind_a: &RelationKind, kind_b: &RelationKind) -> Result<Option<[usize; 4]>> {
    let ra = EqRelation::compute(f.source(), kind_a)?;
    let rb = EqRelation::compute(f.target(), kind_b)?;
    functorial_witness(f, &ra, &rb)
}

/// [`check_functorial`] on precomputed relations.
pub fn functorial_witness(f: &RingHom, ra: &EqRelation, rb: &EqRelation) -> Result<Option<[usize; 4]>> {
    if !crate::ring::same_ring(f.source(), ra.ring()) || !crate::ring::same_ring(f.target(), rb.ring()) {
        return Err(Error::MismatchedRings);
    }
    for block in ra.blocks() {
        let a = block[0];
        if let Some(&a2) = block.iter().find(|&&a2| !rb.related(f.apply(a), f.apply(a2))) {
            return Ok(Some([a, a2, f.apply(a), f.apply(a2)]));
        }
    }
    Ok(None)
}

/// Beck's graph, the Anderson–Livingston graph and Mulay's compressed graph,
/// recovered from the zero-divisor graph construction.
#[derive(Debug, Clone)]
pub struct ClassicalViews {
    /// All elements, `ab = 0` adjacency, loops removed.
    pub beck: Graph,
    /// Nonzero zero-divisors, loops removed.
    pub anderson_livingston: Graph,
    /// Equiannihilator classes of nonzero zero-divisors, loops removed.
    pub mulay: Graph,
}

pub fn classical_views(ring: &Arc<FiniteRing>) -> ClassicalViews {
    let eq = EqRelation::compute(ring, &RelationKind::Equality).expect("built-in kind");
    let ann = EqRelation::compute(ring, &RelationKind::Equiannihilated).expect("built-in kind");
    let beck = zeta(&eq).expect("equality is a zero-divisor relation");
    let anderson_livingston = restrict_to_zero_divisors(&beck, &eq).strip_loops();
    let compressed = zeta(&ann).expect("equiannihilation is a zero-divisor relation");
    let mulay = restrict_to_zero_divisors(&compressed, &ann).strip_loops();
    ClassicalViews {
        beck: beck.strip_loops(),
        anderson_livingston,
        mulay,
    }
}
