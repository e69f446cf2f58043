//! Finite commutative rings stored as explicit operation tables.
//!
//! Every ring is built once into `N x N` addition and multiplication tables over
//! the element ids `0..N`; all later queries are table lookups. Element ids are
//! canonical: residues for `Z/n`, mixed radix (first factor most significant) for
//! products, lexicographic coordinate order for presented rings.

mod construct;
mod hom;
mod ideal;
mod spec;
mod validate;

use std::sync::Arc;

pub use construct::{CrtFactorization, Localization, Quotient};
pub use hom::{RingHom, DEFAULT_HOM_CANDIDATE_CAP};
pub(crate) use ideal::same_ring;
pub use ideal::{IdealOps, IdealSet, LocalData, DEFAULT_IDEAL_CAP};
pub use spec::RingSpec;
pub use validate::{ValidationMode, ValidationReport, EXHAUSTIVE_THRESHOLD, SAMPLE_COUNT};

use crate::error::{Error, Result};

/// Largest ring order the builders accept.
pub const MAX_ORDER: usize = 1 << 16;

/// A finite commutative ring with identity, stored as operation tables.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    origin: RingSpec,
    labels: Vec<String>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

/// Units, zero-divisors (including 0) and nilpotents of a ring, each sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClasses {
    pub units: Vec<usize>,
    pub zero_divisors: Vec<usize>,
    pub nilpotents: Vec<usize>,
}

impl FiniteRing {
    /// Assembles a ring from flat row-major tables. Checks shapes, ranges and the
    /// existence of additive inverses; the remaining axioms are checked by
    /// [`FiniteRing::validate`].
    pub fn from_tables(
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
        origin: RingSpec,
    ) -> Result<Self> {
        let n = (add.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != add.len() || mul.len() != add.len() {
            return Err(Error::InvalidSpec("tables must be square and nonempty".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidSpec(format!("order {n} exceeds {MAX_ORDER}")));
        }
        if zero >= n || one >= n {
            return Err(Error::InvalidSpec("zero/one id out of range".into()));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&v| v as usize >= n) {
            return Err(Error::InvalidSpec(format!("table entry {bad} out of range 0..{n}")));
        }
        let labels = match labels {
            Some(l) if l.len() != n => return Err(Error::InvalidSpec(format!("{} labels for {n} elements", l.len()))),
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let mut neg = vec![u32::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| add[a * n + b] as usize == zero) {
                neg[a] = b as u32;
            } else {
                return Err(Error::AxiomViolation {
                    law: "additive inverse".into(),
                    witness: vec![a],
                });
            }
        }
        Ok(FiniteRing {
            order: n,
            add,
            mul,
            neg,
            zero,
            one,
            origin,
            labels,
        })
    }

    /// `Z/n` with residues as element ids.
    pub fn zn(n: u64) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidSpec("modulus must be positive".into()));
        }
        let n = n as usize;
        if n > MAX_ORDER {
            return Err(Error::InvalidSpec(format!("order {n} exceeds {MAX_ORDER}")));
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u32);
                mul.push(((a * b) % n) as u32);
            }
        }
        let labels = (0..n).map(|k| k.to_string()).collect();
        let one = if n == 1 { 0 } else { 1 };
        Self::from_tables(add, mul, 0, one, Some(labels), RingSpec::Zn { n: n as u64 }).map(Arc::new)
    }

    /// Direct product with componentwise operations.
    pub fn product(factors: &[Arc<FiniteRing>]) -> Result<Arc<Self>> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("product needs at least one factor".into()));
        }
        let sizes: Vec<usize> = factors.iter().map(|f| f.order).collect();
        let n = sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&p| p <= MAX_ORDER))
            .ok_or_else(|| Error::InvalidSpec(format!("product order exceeds {MAX_ORDER}")))?;
        let coords: Vec<Vec<usize>> = (0..n).map(|id| mixed_radix_digits(id, &sizes)).collect();
        let encode = |digits: &mut dyn Iterator<Item = usize>| -> u32 {
            digits.zip(&sizes).fold(0usize, |acc, (d, &s)| acc * s + d) as u32
        };
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in &coords {
            for y in &coords {
                add.push(encode(&mut factors.iter().enumerate().map(|(i, f)| f.add(x[i], y[i]))));
                mul.push(encode(&mut factors.iter().enumerate().map(|(i, f)| f.mul(x[i], y[i]))));
            }
        }
        let labels = coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().enumerate().map(|(i, &d)| factors[i].label(d)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let zero = encode(&mut factors.iter().map(|f| f.zero)) as usize;
        let one = encode(&mut factors.iter().map(|f| f.one)) as usize;
        let origin = RingSpec::Product {
            factors: factors.iter().map(|f| f.origin.clone()).collect(),
        };
        Self::from_tables(add, mul, zero, one, Some(labels), origin).map(Arc::new)
    }

    /// Ring whose additive group is `Z/d_1 + ... + Z/d_m` with multiplication
    /// extended bilinearly from generator products. Runs full validation.
    pub fn presented(
        orders: &[u32],
        one: &[u32],
        mul: &[Vec<Vec<u32>>],
        labels: Option<&[String]>,
    ) -> Result<Arc<Self>> {
        let ring = Self::presented_unchecked(orders, one, mul, labels)?;
        ring.validate().into_result()?;
        Ok(ring)
    }

    #[allow(clippy::needless_range_loop)]
    pub(crate) fn presented_unchecked(
        orders: &[u32],
        one: &[u32],
        structure: &[Vec<Vec<u32>>],
        labels: Option<&[String]>,
    ) -> Result<Arc<Self>> {
        let m = orders.len();
        if m == 0 || orders.contains(&0) {
            return Err(Error::InvalidSpec("generator orders must be nonempty and >= 1".into()));
        }
        let in_range = |v: &[u32]| v.len() == m && v.iter().zip(orders).all(|(c, d)| c < d);
        if !in_range(one) {
            return Err(Error::InvalidSpec("one-vector out of range".into()));
        }
        if structure.len() != m || structure.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidSpec("structure constants must be m x m".into()));
        }
        for i in 0..m {
            for j in 0..m {
                let c = &structure[i][j];
                if !in_range(c) {
                    return Err(Error::InvalidSpec(format!(
                        "structure constant c[{i}][{j}] out of range"
                    )));
                }
                if structure[j][i] != *c {
                    return Err(Error::InvalidSpec(format!(
                        "structure constants not symmetric at ({i},{j})"
                    )));
                }
                for k in 0..m {
                    if !(orders[i] as u64 * c[k] as u64).is_multiple_of(orders[k] as u64) {
                        return Err(Error::InvalidSpec(format!(
                            "c[{i}][{j}] is incompatible with generator order {}",
                            orders[i]
                        )));
                    }
                }
            }
        }
        if let Some(l) = labels {
            if l.len() != m {
                return Err(Error::InvalidSpec("one label per generator expected".into()));
            }
        }
        let sizes: Vec<usize> = orders.iter().map(|&d| d as usize).collect();
        let n = sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&p| p <= MAX_ORDER))
            .ok_or_else(|| Error::InvalidSpec(format!("ring order exceeds {MAX_ORDER}")))?;
        let coords: Vec<Vec<usize>> = (0..n).map(|id| mixed_radix_digits(id, &sizes)).collect();
        let encode = |digits: &[usize]| digits.iter().zip(&sizes).fold(0usize, |acc, (&d, &s)| acc * s + d);

        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut buf = vec![0usize; m];
        for x in &coords {
            for y in &coords {
                for k in 0..m {
                    buf[k] = (x[k] + y[k]) % sizes[k];
                }
                add.push(encode(&buf) as u32);
                for k in 0..m {
                    let mut acc = 0u64;
                    for i in 0..m {
                        if x[i] == 0 {
                            continue;
                        }
                        for j in 0..m {
                            acc += (x[i] * y[j]) as u64 * structure[i][j][k] as u64;
                        }
                    }
                    buf[k] = (acc % sizes[k] as u64) as usize;
                }
                mul.push(encode(&buf) as u32);
            }
        }
        let names: Vec<String> = match labels {
            Some(l) => l.to_vec(),
            None => (0..m).map(|i| format!("e{i}")).collect(),
        };
        let element_labels = coords.iter().map(|c| presented_label(c, &names)).collect();
        let one_digits: Vec<usize> = one.iter().map(|&c| c as usize).collect();
        let origin = RingSpec::Presented {
            orders: orders.to_vec(),
            one: one.to_vec(),
            mul: structure.to_vec(),
            labels: labels.map(|l| l.to_vec()),
        };
        Self::from_tables(add, mul, 0, encode(&one_digits), Some(element_labels), origin).map(Arc::new)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn origin(&self) -> &RingSpec {
        &self.origin
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its display label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `a^k` by repeated multiplication; `a^0 = 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// Integer multiple `k * a`.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn is_unit(&self, a: usize) -> bool {
        let row = &self.mul[a * self.order..(a + 1) * self.order];
        row.iter().any(|&v| v as usize == self.one)
    }

    pub fn is_zero_divisor(&self, a: usize) -> bool {
        a == self.zero || self.elements().any(|b| b != self.zero && self.mul(a, b) == self.zero)
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut p = a;
        for _ in 0..self.order {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, a);
        }
        p == self.zero
    }

    /// Units, zero-divisors and nilpotents by direct enumeration.
    pub fn classify_elements(&self) -> ElementClasses {
        let units = self.elements().filter(|&a| self.is_unit(a)).collect();
        let zero_divisors = self.elements().filter(|&a| self.is_zero_divisor(a)).collect();
        let nilpotents = self.elements().filter(|&a| self.is_nilpotent(a)).collect();
        ElementClasses {
            units,
            zero_divisors,
            nilpotents,
        }
    }

    /// The nonzero zero-divisors `D*(A)`, sorted.
    pub fn nonzero_zero_divisors(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| a != self.zero && self.is_zero_divisor(a))
            .collect()
    }

    pub fn units(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut s = a;
        while s != self.zero {
            s = self.add(s, a);
            k += 1;
        }
        k
    }

    pub(crate) fn raw_mul(&self) -> &[u32] {
        &self.mul
    }

    /// The operation tables as nested rows, for serialization.
    pub fn to_table_spec(&self) -> RingSpec {
        let n = self.order;
        let rows = |t: &[u32]| t.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>();
        RingSpec::Table {
            add_table: rows(&self.add),
            mul_table: rows(&self.mul),
            zero: self.zero as u32,
            one_id: self.one as u32,
            labels: Some(self.labels.clone()),
        }
    }
}

/// Digits of `id` in the mixed radix `sizes`, most significant first.
pub(crate) fn mixed_radix_digits(mut id: usize, sizes: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; sizes.len()];
    for (slot, &s) in digits.iter_mut().zip(sizes).rev() {
        *slot = id % s;
        id /= s;
    }
    digits
}

fn presented_label(coords: &[usize], names: &[String]) -> String {
    let terms: Vec<String> = coords
        .iter()
        .zip(names)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, name)| match (c, name.as_str()) {
            (c, "1") => c.to_string(),
            (1, name) => name.to_string(),
            (c, name) => format!("{c}{name}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}
