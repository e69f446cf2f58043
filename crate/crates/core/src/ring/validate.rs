use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::FiniteRing;
use crate::error::{Error, Result};

/// Rings up to this order get the exhaustive `O(N^3)` check.
pub const EXHAUSTIVE_THRESHOLD: usize = 256;
/// Random triples drawn above the threshold.
pub const SAMPLE_COUNT: usize = 1_000_000;
const SAMPLE_SEED: u64 = 0x2d_5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ValidationMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

/// Outcome of [`FiniteRing::validate`]; lists the first witness for each failing law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub order: usize,
    pub mode: ValidationMode,
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.failures.into_iter().next() {
            None => Ok(()),
            Some(f) => Err(Error::AxiomViolation {
                law: f.law.to_string(),
                witness: f.witness,
            }),
        }
    }
}

struct Checker<'a> {
    ring: &'a FiniteRing,
    failures: Vec<AxiomFailure>,
}

impl Checker<'_> {
    fn record(&mut self, law: &'static str, witness: &[usize]) {
        if !self.failures.iter().any(|f| f.law == law) {
            self.failures.push(AxiomFailure {
                law,
                witness: witness.to_vec(),
            });
        }
    }

    fn pairs(&mut self) {
        let r = self.ring;
        if r.order() > 1 && r.zero() == r.one() {
            self.record("zero != one", &[r.zero()]);
        }
        for a in r.elements() {
            if r.add(a, r.zero()) != a {
                self.record("additive identity", &[a]);
            }
            if r.mul(a, r.one()) != a {
                self.record("multiplicative identity", &[a]);
            }
            if r.add(a, r.neg(a)) != r.zero() {
                self.record("additive inverse", &[a]);
            }
            for b in a + 1..r.order() {
                if r.add(a, b) != r.add(b, a) {
                    self.record("additive commutativity", &[a, b]);
                }
                if r.mul(a, b) != r.mul(b, a) {
                    self.record("multiplicative commutativity", &[a, b]);
                }
            }
        }
    }

    fn triple(&mut self, a: usize, b: usize, c: usize) {
        let r = self.ring;
        if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) {
            self.record("additive associativity", &[a, b, c]);
        }
        if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) {
            self.record("multiplicative associativity", &[a, b, c]);
        }
        if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) {
            self.record("distributivity", &[a, b, c]);
        }
    }
}

impl FiniteRing {
    /// Checks the commutative-ring axioms. Pair laws are always exhaustive;
    /// triple laws are exhaustive up to [`EXHAUSTIVE_THRESHOLD`] and sampled with a
    /// fixed seed above it.
    pub fn validate(&self) -> ValidationReport {
        let mut checker = Checker {
            ring: self,
            failures: Vec::new(),
        };
        checker.pairs();
        let n = self.order();
        let mode = if n <= EXHAUSTIVE_THRESHOLD {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        checker.triple(a, b, c);
                    }
                }
            }
            ValidationMode::Exhaustive
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            for _ in 0..SAMPLE_COUNT {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                checker.triple(a, b, c);
            }
            ValidationMode::Sampled {
                samples: SAMPLE_COUNT,
                seed: SAMPLE_SEED,
            }
        };
        ValidationReport {
            order: n,
            mode,
            failures: checker.failures,
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::RingSpec;

    #[test]
    fn z12_passes_exhaustively() {
        let report = FiniteRing::zn(12).unwrap().validate();
        assert!(report.passed());
        assert_eq!(report.mode, ValidationMode::Exhaustive);
    }

    #[test]
    fn product_passes() {
        let a = FiniteRing::zn(4).unwrap();
        let b = FiniteRing::zn(6).unwrap();
        assert!(FiniteRing::product(&[a, b]).unwrap().validate().passed());
    }

    #[test]
    fn large_ring_is_sampled() {
        let report = FiniteRing::zn(289).unwrap().validate();
        assert!(report.passed());
        assert_eq!(
            report.mode,
            ValidationMode::Sampled {
                samples: SAMPLE_COUNT,
                seed: SAMPLE_SEED
            }
        );
    }

    #[test]
    fn corrupted_mul_entry_yields_witness_triple() {
        let RingSpec::Table {
            add_table,
            mut mul_table,
            zero,
            one_id,
            labels,
        } = FiniteRing::zn(6).unwrap().to_table_spec()
        else {
            unreachable!()
        };
        // 2*3 should be 0; keep commutativity so the failure surfaces in a triple law
        mul_table[2][3] = 1;
        mul_table[3][2] = 1;
        let spec = RingSpec::Table {
            add_table,
            mul_table,
            zero,
            one_id,
            labels,
        };
        let ring: Arc<FiniteRing> = spec.build_unchecked().unwrap();
        let report = ring.validate();
        assert!(!report.passed());
        let assoc = report
            .failures
            .iter()
            .find(|f| f.law == "multiplicative associativity")
            .unwrap();
        let [a, b, c] = assoc.witness[..] else {
            panic!("triple expected")
        };
        assert_ne!(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
        assert!(matches!(spec.build(), Err(Error::AxiomViolation { .. })));
    }
}
