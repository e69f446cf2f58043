use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::FiniteRing;
use crate::error::{Error, Result};

/// Default cap on the number of ideals [`FiniteRing::all_ideals`] will produce.
pub const DEFAULT_IDEAL_CAP: usize = 4096;

/// An ideal of a finite ring, stored as a sorted member list plus a bit mask.
#[derive(Clone)]
pub struct IdealSet {
    ring: Arc<FiniteRing>,
    members: Vec<usize>,
    mask: FixedBitSet,
}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for IdealSet {}

pub(crate) fn same_ring(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Result of [`IdealSet::ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealOps {
    pub sum: IdealSet,
    pub intersection: IdealSet,
    pub product_is_zero: bool,
}

/// Maximal ideals, locality and (for local rings) the nilpotency index of the
/// maximal ideal.
#[derive(Debug, Clone)]
pub struct LocalData {
    pub is_local: bool,
    pub maximal_ideals: Vec<IdealSet>,
    pub nilpotency_index: Option<usize>,
}

impl IdealSet {
    fn from_mask(ring: &Arc<FiniteRing>, mask: FixedBitSet) -> Self {
        let members = mask.ones().collect();
        IdealSet {
            ring: Arc::clone(ring),
            members,
            mask,
        }
    }

    /// Wraps a member set after checking the ideal axioms.
    pub fn new(ring: &Arc<FiniteRing>, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = FixedBitSet::with_capacity(ring.order());
        for m in members {
            if m >= ring.order() {
                return Err(Error::NotIdeal(format!("element {m} out of range")));
            }
            mask.insert(m);
        }
        let ideal = Self::from_mask(ring, mask);
        ideal.check()?;
        Ok(ideal)
    }

    fn check(&self) -> Result<()> {
        let r = &self.ring;
        if !self.contains(r.zero()) {
            return Err(Error::NotIdeal("missing zero".into()));
        }
        for &a in &self.members {
            for &b in &self.members {
                if !self.contains(r.add(a, b)) {
                    return Err(Error::NotIdeal(format!("{a} + {b} escapes")));
                }
            }
            for x in r.elements() {
                if !self.contains(r.mul(a, x)) {
                    return Err(Error::NotIdeal(format!("{x} * {a} escapes")));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.ring.order()
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    fn same_ring_as(&self, other: &IdealSet) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::MismatchedRings)
        }
    }

    /// `I + J`, the smallest ideal containing both.
    pub fn sum(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring_as(other)?;
        Ok(Self::from_mask(
            &self.ring,
            self.ring.sum_masks(&self.mask, &other.mask),
        ))
    }

    pub fn intersection(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring_as(other)?;
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Ok(Self::from_mask(&self.ring, mask))
    }

    /// Ideal product `IJ`, generated by all `xy` with `x` in `I`, `y` in `J`.
    pub fn product(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring_as(other)?;
        let r = &self.ring;
        let mut gens = FixedBitSet::with_capacity(r.order());
        for &a in &self.members {
            for &b in &other.members {
                gens.insert(r.mul(a, b));
            }
        }
        Ok(r.ideal_generated(gens.ones()))
    }

    pub fn product_is_zero(&self, other: &IdealSet) -> Result<bool> {
        self.same_ring_as(other)?;
        let r = &self.ring;
        Ok(self
            .members
            .iter()
            .all(|&a| other.members.iter().all(|&b| r.mul(a, b) == r.zero())))
    }

    pub fn ops(&self, other: &IdealSet) -> Result<IdealOps> {
        Ok(IdealOps {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
            product_is_zero: self.product_is_zero(other)?,
        })
    }

    /// Some generator of the ideal when it is principal (least such id).
    pub fn principal_generator(&self) -> Option<usize> {
        self.members
            .iter()
            .copied()
            .find(|&a| self.ring.principal_ideal(a).mask == self.mask)
    }
}

impl FiniteRing {
    pub(crate) fn principal_mask(&self, a: usize) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.order());
        let row = &self.raw_mul()[a * self.order()..(a + 1) * self.order()];
        for &v in row {
            mask.insert(v as usize);
        }
        mask
    }

    pub(crate) fn annihilator_mask(&self, a: usize) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.order());
        let row = &self.raw_mul()[a * self.order()..(a + 1) * self.order()];
        for (x, &v) in row.iter().enumerate() {
            if v as usize == self.zero() {
                mask.insert(x);
            }
        }
        mask
    }

    /// `Ann(a) = {x : xa = 0}`.
    pub fn annihilator(self: &Arc<Self>, a: usize) -> IdealSet {
        IdealSet::from_mask(self, self.annihilator_mask(a))
    }

    /// `(a) = {xa : x in A}`.
    pub fn principal_ideal(self: &Arc<Self>, a: usize) -> IdealSet {
        IdealSet::from_mask(self, self.principal_mask(a))
    }

    pub fn zero_ideal(self: &Arc<Self>) -> IdealSet {
        self.principal_ideal(self.zero())
    }

    pub fn unit_ideal(self: &Arc<Self>) -> IdealSet {
        self.principal_ideal(self.one())
    }

    /// Ideal generated by a set of elements, as the sum of their principal ideals.
    pub fn ideal_generated(self: &Arc<Self>, gens: impl IntoIterator<Item = usize>) -> IdealSet {
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert(self.zero());
        for g in gens {
            if mask.contains(g) {
                continue;
            }
            mask = self.sum_masks(&mask, &self.principal_mask(g));
        }
        IdealSet::from_mask(self, mask)
    }

    fn sum_masks(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        // grow the subgroup `a` by the cyclic group of each y in `b` not yet covered
        let mut out = a.clone();
        for y in b.ones() {
            if out.contains(y) {
                continue;
            }
            let group = out.clone();
            let members: Vec<usize> = group.ones().collect();
            let mut t = y;
            while !group.contains(t) {
                for &x in &members {
                    out.insert(self.add(x, t));
                }
                t = self.add(t, y);
            }
        }
        out
    }

    /// Distinct principal ideals, sorted by `(size, members)`.
    pub fn principal_ideals(self: &Arc<Self>) -> Vec<IdealSet> {
        let mut seen = HashSet::new();
        let mut out: Vec<IdealSet> = self
            .elements()
            .filter_map(|a| {
                let m = self.principal_mask(a);
                seen.insert(m.clone()).then(|| IdealSet::from_mask(self, m))
            })
            .collect();
        sort_ideals(&mut out);
        out
    }

    /// Every ideal, obtained by closing the principal ideals under sums. Sorted by
    /// `(size, members)`. Fails instead of truncating when more than `cap` ideals
    /// exist.
    pub fn all_ideals(self: &Arc<Self>, cap: usize) -> Result<Vec<IdealSet>> {
        let principal: Vec<FixedBitSet> = self.principal_ideals().into_iter().map(|i| i.mask).collect();
        let mut seen: HashSet<FixedBitSet> = principal.iter().cloned().collect();
        if seen.len() > cap {
            return Err(Error::BudgetExceeded { what: "ideal", cap });
        }
        let mut found: Vec<FixedBitSet> = principal.clone();
        let mut frontier = principal.clone();
        while let Some(current) = frontier.pop() {
            for p in &principal {
                if p.is_subset(&current) {
                    continue;
                }
                let s = self.sum_masks(&current, p);
                if seen.insert(s.clone()) {
                    if seen.len() > cap {
                        return Err(Error::BudgetExceeded { what: "ideal", cap });
                    }
                    found.push(s.clone());
                    frontier.push(s);
                }
            }
        }
        let mut out: Vec<IdealSet> = found.into_iter().map(|m| IdealSet::from_mask(self, m)).collect();
        sort_ideals(&mut out);
        Ok(out)
    }

    /// True when every ideal is principal.
    pub fn is_pir(self: &Arc<Self>, cap: usize) -> Result<bool> {
        let principal: HashSet<FixedBitSet> = self.principal_ideals().into_iter().map(|i| i.mask).collect();
        Ok(self.all_ideals(cap)?.iter().all(|i| principal.contains(&i.mask)))
    }

    pub fn local_data(self: &Arc<Self>, cap: usize) -> Result<LocalData> {
        let ideals = self.all_ideals(cap)?;
        let proper: Vec<&IdealSet> = ideals.iter().filter(|i| !i.is_whole()).collect();
        let maximal_ideals: Vec<IdealSet> = proper
            .iter()
            .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
            .map(|i| (*i).clone())
            .collect();
        let is_local = maximal_ideals.len() == 1;
        let nilpotency_index = if is_local {
            let m = &maximal_ideals[0];
            let mut power = m.clone();
            let mut k = 1;
            loop {
                if power.is_zero() {
                    break Some(k);
                }
                let next = power.product(m)?;
                if next == power {
                    // m is not nilpotent; impossible in a finite local ring
                    break None;
                }
                power = next;
                k += 1;
            }
        } else {
            None
        };
        Ok(LocalData {
            is_local,
            maximal_ideals,
            nilpotency_index,
        })
    }

    /// Searches for an inclusion-preserving bijection between the ideal lattices of
    /// two rings. Returns the map as `ideal index in self -> ideal index in other`,
    /// indices referring to [`FiniteRing::all_ideals`] order.
    pub fn ideal_poset_iso(self: &Arc<Self>, other: &Arc<FiniteRing>, cap: usize) -> Result<Option<Vec<usize>>> {
        let a = self.all_ideals(cap)?;
        let b = other.all_ideals(cap)?;
        if a.len() != b.len() {
            return Ok(None);
        }
        let below = |v: &[IdealSet]| -> Vec<Vec<bool>> {
            v.iter().map(|x| v.iter().map(|y| y.is_subset(x)).collect()).collect()
        };
        let (la, lb) = (below(&a), below(&b));
        let signature = |l: &[Vec<bool>], i: usize| {
            let down = l[i].iter().filter(|&&x| x).count();
            let up = l.iter().filter(|row| row[i]).count();
            (down, up)
        };
        let sa: Vec<_> = (0..a.len()).map(|i| signature(&la, i)).collect();
        let sb: Vec<_> = (0..b.len()).map(|i| signature(&lb, i)).collect();
        let mut ms_a = sa.clone();
        let mut ms_b = sb.clone();
        ms_a.sort_unstable();
        ms_b.sort_unstable();
        if ms_a != ms_b {
            return Ok(None);
        }
        let mut map = vec![usize::MAX; a.len()];
        let mut used = vec![false; b.len()];
        fn extend(
            i: usize,
            la: &[Vec<bool>],
            lb: &[Vec<bool>],
            sa: &[(usize, usize)],
            sb: &[(usize, usize)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if i == map.len() {
                return true;
            }
            for j in 0..used.len() {
                if used[j] || sa[i] != sb[j] {
                    continue;
                }
                if (0..i).any(|p| la[i][p] != lb[j][map[p]] || la[p][i] != lb[map[p]][j]) {
                    continue;
                }
                map[i] = j;
                used[j] = true;
                if extend(i + 1, la, lb, sa, sb, map, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        Ok(extend(0, &la, &lb, &sa, &sb, &mut map, &mut used).then_some(map))
    }
}

fn sort_ideals(v: &mut [IdealSet]) {
    v.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.members.cmp(&y.members)));
}
