use std::fmt;
use std::sync::Arc;

use super::ideal::same_ring;
use super::FiniteRing;
use crate::error::{Error, Result};

/// Default cap on candidate generator-image tuples tried by hom enumeration.
pub const DEFAULT_HOM_CANDIDATE_CAP: usize = 1 << 20;

/// A unital ring homomorphism, verified exhaustively at construction.
#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<usize>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingHom").field("map", &self.map).finish()
    }
}

impl PartialEq for RingHom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && same_ring(&self.source, &other.source) && same_ring(&self.target, &other.target)
    }
}

impl RingHom {
    /// Checks `f(1) = 1`, additivity and multiplicativity over all pairs.
    pub fn new(source: &Arc<FiniteRing>, target: &Arc<FiniteRing>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::NotHomomorphism(format!(
                "map has {} entries for {} elements",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&b| b >= target.order()) {
            return Err(Error::NotHomomorphism(format!("image {bad} out of range")));
        }
        if let Some(why) = hom_violation(source, target, &map) {
            return Err(Error::NotHomomorphism(why));
        }
        Ok(RingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        })
    }

    pub(crate) fn new_unchecked(source: &Arc<FiniteRing>, target: &Arc<FiniteRing>, map: Vec<usize>) -> Self {
        debug_assert!(hom_violation(source, target, &map).is_none());
        RingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        }
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        Self::new_unchecked(ring, ring, ring.elements().collect())
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom) -> Result<RingHom> {
        if !same_ring(&self.target, &other.source) {
            return Err(Error::MismatchedRings);
        }
        let map = self.map.iter().map(|&b| other.map[b]).collect();
        Ok(Self::new_unchecked(&self.source, &other.target, map))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&b| !std::mem::replace(&mut seen[b], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &b in &self.map {
            seen[b] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `ker f`, as a sorted element list.
    pub fn kernel(&self) -> Vec<usize> {
        let z = self.target.zero();
        (0..self.map.len()).filter(|&a| self.map[a] == z).collect()
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Option<RingHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Some(Self::new_unchecked(&self.target, &self.source, inv))
    }
}

fn hom_violation(source: &FiniteRing, target: &FiniteRing, map: &[usize]) -> Option<String> {
    if map[source.one()] != target.one() {
        return Some("1 is not mapped to 1".into());
    }
    for a in source.elements() {
        for b in a..source.order() {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Some(format!("f({a} + {b}) != f({a}) + f({b})"));
            }
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Some(format!("f({a} * {b}) != f({a}) * f({b})"));
            }
        }
    }
    None
}

/// A greedy additive generating set of a ring, with every element written as an
/// integer combination of the generators.
struct AdditiveBasis {
    generators: Vec<usize>,
    /// Smallest positive multiple of each generator lying in the span of the
    /// earlier generators.
    relative_orders: Vec<usize>,
    coefficients: Vec<Vec<usize>>,
}

impl AdditiveBasis {
    fn of(ring: &FiniteRing) -> Self {
        let n = ring.order();
        let mut coefficients: Vec<Option<Vec<usize>>> = vec![None; n];
        coefficients[ring.zero()] = Some(Vec::new());
        let mut generators = Vec::new();
        let mut relative_orders = Vec::new();
        for g in ring.elements() {
            if coefficients[g].is_some() {
                continue;
            }
            let span: Vec<usize> = (0..n).filter(|&e| coefficients[e].is_some()).collect();
            for &s in &span {
                coefficients[s].as_mut().unwrap().push(0);
            }
            let mut multiple = g;
            let mut k = 1;
            while coefficients[multiple].is_none() {
                for &s in &span {
                    let mut c = coefficients[s].clone().unwrap();
                    *c.last_mut().unwrap() = k;
                    coefficients[ring.add(s, multiple)] = Some(c);
                }
                multiple = ring.add(multiple, g);
                k += 1;
            }
            generators.push(g);
            relative_orders.push(k);
        }
        AdditiveBasis {
            generators,
            relative_orders,
            coefficients: coefficients.into_iter().map(Option::unwrap).collect(),
        }
    }
}

impl FiniteRing {
    /// Every unital ring homomorphism `self -> target`, found by choosing images
    /// of a greedy additive generating set and verifying each candidate.
    /// Candidates are pruned by additive order; exceeding `candidate_cap` tuples
    /// is a budget error.
    pub fn homomorphisms_to(self: &Arc<Self>, target: &Arc<FiniteRing>, candidate_cap: usize) -> Result<Vec<RingHom>> {
        let basis = AdditiveBasis::of(self);
        let target_orders: Vec<usize> = target.elements().map(|b| target.additive_order(b)).collect();
        let choices: Vec<Vec<usize>> = basis
            .generators
            .iter()
            .map(|&g| {
                let ord = self.additive_order(g);
                target
                    .elements()
                    .filter(|&b| ord.is_multiple_of(target_orders[b]))
                    .collect()
            })
            .collect();
        let total = choices
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
            .unwrap_or(usize::MAX);
        if total > candidate_cap {
            return Err(Error::BudgetExceeded {
                what: "hom candidate",
                cap: candidate_cap,
            });
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; choices.len()];
        if choices.iter().any(|c| c.is_empty()) {
            return Ok(out);
        }
        loop {
            let images: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            let map: Vec<usize> = basis
                .coefficients
                .iter()
                .map(|coef| {
                    coef.iter()
                        .zip(&images)
                        .fold(target.zero(), |acc, (&k, &b)| target.add(acc, target.scale(k, b)))
                })
                .collect();
            let consistent = basis
                .generators
                .iter()
                .zip(&basis.relative_orders)
                .zip(&images)
                .all(|((&g, &m), &b)| map[self.scale(m, g)] == target.scale(m, b));
            if consistent && map[self.one()] == target.one() && hom_violation(self, target, &map).is_none() {
                out.push(RingHom::new_unchecked(self, target, map));
            }
            // odometer over the candidate tuples, last generator fastest
            let mut i = pick.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
            }
        }
    }

    /// A ring isomorphism `self -> other`, if any.
    pub fn find_isomorphism(
        self: &Arc<Self>,
        other: &Arc<FiniteRing>,
        candidate_cap: usize,
    ) -> Result<Option<RingHom>> {
        if self.order() != other.order() {
            return Ok(None);
        }
        let count = |r: &FiniteRing| {
            let c = r.classify_elements();
            (c.units.len(), c.zero_divisors.len(), c.nilpotents.len())
        };
        if count(self) != count(other) {
            return Ok(None);
        }
        Ok(self
            .homomorphisms_to(other, candidate_cap)?
            .into_iter()
            .find(|h| h.is_bijective()))
    }
}
