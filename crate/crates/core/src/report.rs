//! Outcome records for bounded exhaustive sweeps.

use std::time::Duration;

/// Result of a bounded sweep. A non-empty `counterexamples` list means the
/// claim under test was falsified inside the range; sweeps never abort on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<W> {
    pub target: &'static str,
    /// Inclusive upper bound the sweep covered.
    pub bound: String,
    /// Number of objects examined.
    pub checked: u64,
    pub counterexamples: Vec<W>,
    pub elapsed: Duration,
}

impl<W> VerificationReport<W> {
    pub fn new(target: &'static str, bound: impl ToString) -> Self {
        VerificationReport {
            target,
            bound: bound.to_string(),
            checked: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Partial result of one shard of a sweep. Merging is associative and
/// commutative once counterexamples are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally<W> {
    pub checked: u64,
    pub counterexamples: Vec<W>,
}

impl<W> Default for Tally<W> {
    fn default() -> Self {
        Tally {
            checked: 0,
            counterexamples: Vec::new(),
        }
    }
}

impl<W: Ord> Tally<W> {
    pub fn merge(mut self, other: Tally<W>) -> Tally<W> {
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self
    }

    pub fn merge_all(parts: impl IntoIterator<Item = Tally<W>>) -> Tally<W> {
        let mut total = parts.into_iter().fold(Tally::default(), Tally::merge);
        total.counterexamples.sort();
        total.counterexamples.dedup();
        total
    }

    pub fn into_report(
        self,
        target: &'static str,
        bound: impl ToString,
        elapsed: Duration,
    ) -> VerificationReport<W> {
        VerificationReport {
            target,
            bound: bound.to_string(),
            checked: self.checked,
            counterexamples: self.counterexamples,
            elapsed,
        }
    }
}
