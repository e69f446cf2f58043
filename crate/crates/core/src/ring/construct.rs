//! Rings derived from a given one: quotients, localizations, subrings and the
//! Chinese-remainder splitting.

use std::sync::Arc;

use super::ideal::same_ring;
use super::{FiniteRing, IdealSet, RingHom};
use crate::error::{Error, Result};

/// `A/I` with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: Arc<FiniteRing>,
    pub projection: RingHom,
    /// Minimal coset representative of each quotient element.
    pub representatives: Vec<usize>,
}

/// `S^{-1}A` with the canonical map `a -> a/1`.
#[derive(Debug, Clone)]
pub struct Localization {
    pub ring: Arc<FiniteRing>,
    pub canonical: RingHom,
    /// A representative fraction `(numerator, denominator)` per element.
    pub fractions: Vec<(usize, usize)>,
}

/// `A -> A/I x A/J` for comaximal `I`, `J` with zero intersection.
#[derive(Debug, Clone)]
pub struct CrtFactorization {
    pub left: Quotient,
    pub right: Quotient,
    pub product: Arc<FiniteRing>,
    pub iso: RingHom,
}

/// Builds a ring on `0..len` from closures over representatives and runs
/// validation; derived rings are small, so this is always exhaustive or sampled
/// exactly like any other ring.
fn ring_on_classes(
    reps: &[usize],
    class_of: impl Fn(usize) -> usize,
    parent: &FiniteRing,
    zero: usize,
    one: usize,
    labels: Vec<String>,
) -> Result<Arc<FiniteRing>> {
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &x in reps {
        for &y in reps {
            add.push(class_of(parent.add(x, y)) as u32);
            mul.push(class_of(parent.mul(x, y)) as u32);
        }
    }
    let placeholder = super::RingSpec::Zn { n: 1 };
    let mut ring = FiniteRing::from_tables(add, mul, zero, one, Some(labels), placeholder)?;
    ring.origin = ring.to_table_spec();
    ring.validate().into_result()?;
    Ok(Arc::new(ring))
}

impl FiniteRing {
    /// `A/I`; cosets are numbered in increasing order of their minimal element.
    pub fn quotient(self: &Arc<Self>, ideal: &IdealSet) -> Result<Quotient> {
        if !same_ring(self, ideal.ring()) {
            return Err(Error::MismatchedRings);
        }
        // re-check: an IdealSet may have been built for a structurally equal ring
        IdealSet::new(self, ideal.members().iter().copied())?;
        let n = self.order();
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in self.elements() {
            if class[a] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(a);
            for &i in ideal.members() {
                class[self.add(a, i)] = c;
            }
        }
        let labels = reps.iter().map(|&r| self.label(r).to_string()).collect();
        let ring = ring_on_classes(&reps, |a| class[a], self, class[self.zero()], class[self.one()], labels)?;
        let projection = RingHom::new(self, &ring, class)?;
        Ok(Quotient {
            ring,
            projection,
            representatives: reps,
        })
    }

    /// `S^{-1}A` built from formal fractions `a/s`, with `a/s = b/t` iff
    /// `u(at - bs) = 0` for some `u` in `S`.
    pub fn localize(self: &Arc<Self>, s: &[usize]) -> Result<Localization> {
        let mut denominators: Vec<usize> = s.to_vec();
        denominators.sort_unstable();
        denominators.dedup();
        if let Some(&bad) = denominators.iter().find(|&&x| x >= self.order()) {
            return Err(Error::NotMultiplicativelyClosed(format!("element {bad} out of range")));
        }
        if denominators.binary_search(&self.one()).is_err() {
            return Err(Error::NotMultiplicativelyClosed("1 is missing".into()));
        }
        for &x in &denominators {
            for &y in &denominators {
                if denominators.binary_search(&self.mul(x, y)).is_err() {
                    return Err(Error::NotMultiplicativelyClosed(format!("{x} * {y} is missing")));
                }
            }
        }
        // x is killed by some denominator
        let killed: Vec<bool> = self
            .elements()
            .map(|x| denominators.iter().any(|&u| self.mul(u, x) == self.zero()))
            .collect();
        let equivalent =
            |(a, s1): (usize, usize), (b, t): (usize, usize)| killed[self.sub(self.mul(a, t), self.mul(b, s1))];
        // fractions enumerated with numerator-major order; denominator 1 first
        let mut ordered = denominators.clone();
        ordered.retain(|&d| d != self.one());
        ordered.insert(0, self.one());
        let mut fractions: Vec<(usize, usize)> = Vec::new();
        for a in self.elements() {
            for &d in &ordered {
                if !fractions.iter().any(|&f| equivalent(f, (a, d))) {
                    fractions.push((a, d));
                }
            }
        }
        let class_of = |f: (usize, usize)| {
            fractions
                .iter()
                .position(|&g| equivalent(g, f))
                .expect("every fraction has a class")
        };
        let m = fractions.len();
        let mut add = Vec::with_capacity(m * m);
        let mut mul = Vec::with_capacity(m * m);
        for &(a, s1) in &fractions {
            for &(b, t) in &fractions {
                let st = self.mul(s1, t);
                add.push(class_of((self.add(self.mul(a, t), self.mul(b, s1)), st)) as u32);
                mul.push(class_of((self.mul(a, b), st)) as u32);
            }
        }
        let labels = fractions
            .iter()
            .map(|&(a, d)| {
                if d == self.one() {
                    self.label(a).to_string()
                } else {
                    format!("{}/{}", self.label(a), self.label(d))
                }
            })
            .collect();
        let zero = class_of((self.zero(), self.one()));
        let one = class_of((self.one(), self.one()));
        let placeholder = super::RingSpec::Zn { n: 1 };
        let mut ring = FiniteRing::from_tables(add, mul, zero, one, Some(labels), placeholder)?;
        ring.origin = ring.to_table_spec();
        ring.validate().into_result()?;
        let ring = Arc::new(ring);
        let map = self.elements().map(|a| class_of((a, self.one()))).collect();
        let canonical = RingHom::new(self, &ring, map)?;
        Ok(Localization {
            ring,
            canonical,
            fractions,
        })
    }

    /// Subring on a set closed under the operations and containing 1, with its
    /// inclusion. Elements keep their relative order.
    pub fn subring(self: &Arc<Self>, members: &[usize]) -> Result<(Arc<FiniteRing>, RingHom)> {
        let mut reps = members.to_vec();
        reps.sort_unstable();
        reps.dedup();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &r) in reps.iter().enumerate() {
            index[r] = i;
        }
        let closed = reps.iter().all(|&x| {
            reps.iter()
                .all(|&y| index[self.add(x, y)] != usize::MAX && index[self.mul(x, y)] != usize::MAX)
        }) && reps.iter().all(|&x| index[self.neg(x)] != usize::MAX);
        if !closed || index[self.one()] == usize::MAX || index[self.zero()] == usize::MAX {
            return Err(Error::InvalidSpec("subset is not a subring".into()));
        }
        let labels = reps.iter().map(|&r| self.label(r).to_string()).collect();
        let ring = ring_on_classes(&reps, |a| index[a], self, index[self.zero()], index[self.one()], labels)?;
        let inclusion = RingHom::new(&ring, self, reps)?;
        Ok((ring, inclusion))
    }

    /// The map `a -> (a mod I, a mod J)`, verified to be a ring isomorphism.
    pub fn crt_factor(self: &Arc<Self>, i: &IdealSet, j: &IdealSet) -> Result<CrtFactorization> {
        if !i.sum(j)?.is_whole() {
            return Err(Error::CrtPrecondition("I + J != (1)"));
        }
        if !i.intersection(j)?.is_zero() {
            return Err(Error::CrtPrecondition("I ∩ J != 0"));
        }
        let left = self.quotient(i)?;
        let right = self.quotient(j)?;
        let product = FiniteRing::product(&[Arc::clone(&left.ring), Arc::clone(&right.ring)])?;
        let width = right.ring.order();
        let map = self
            .elements()
            .map(|a| left.projection.apply(a) * width + right.projection.apply(a))
            .collect();
        let iso = RingHom::new(self, &product, map)?;
        if !iso.is_bijective() {
            return Err(Error::Verification("CRT map is not bijective".into()));
        }
        Ok(CrtFactorization {
            left,
            right,
            product,
            iso,
        })
    }
}
