//! Verification reports and the exhaustive law checker.
//!
//! A [`Law`] is an identity `lhs(idx) = rhs(idx)` quantified over a box of
//! basis indices. [`check_laws`] evaluates every law over its whole domain
//! (never short-circuiting) and records the lexicographically first failing
//! index tuple as a witness.

use std::sync::Arc;

use rayon::prelude::*;

use crate::exactla::{BasisKey, LinComb, Scalar};

/// One evaluated side of a law, as sparse `(multi-index, coefficient)` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub terms: Vec<(Vec<usize>, Scalar)>,
}

impl<K: BasisKey> From<&LinComb<K>> for Side {
    fn from(v: &LinComb<K>) -> Self {
        Side { terms: v.to_terms() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: Side,
    pub rhs: Side,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportEntry {
    pub law_id: String,
    pub pass: bool,
    /// Informational entries are reported but do not affect the verdict.
    pub informational: bool,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: ReportEntry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[ReportEntry] {
        &self.entries
    }

    pub fn entry(&self, law_id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.law_id == law_id)
    }

    /// Whether the named law was evaluated and held everywhere.
    pub fn passed(&self, law_id: &str) -> bool {
        self.entry(law_id).is_some_and(|e| e.pass)
    }

    /// All non-informational laws hold.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass || e.informational)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| !e.pass && !e.informational)
            .map(|e| e.law_id.clone())
            .collect()
    }

    pub fn law_ids(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.law_id.as_str()).collect()
    }

    /// Marks every entry informational, for sub-checks reported alongside a verdict.
    pub fn into_informational(mut self) -> Self {
        for e in &mut self.entries {
            e.informational = true;
        }
        self
    }
}

type Compare<'a> = dyn Fn(&[usize]) -> Option<(Side, Side)> + Send + Sync + 'a;
type Evaluate<'a> = dyn Fn(&[usize]) -> (Side, Side) + Send + Sync + 'a;

/// An identity quantified over all index tuples in `0..domain[0] × 0..domain[1] × …`.
pub struct Law<'a> {
    id: String,
    domain: Vec<usize>,
    informational: bool,
    compare: Box<Compare<'a>>,
    evaluate: Box<Evaluate<'a>>,
}

impl<'a> Law<'a> {
    pub fn new<K, F>(id: impl Into<String>, domain: Vec<usize>, f: F) -> Self
    where
        K: BasisKey + 'a,
        F: Fn(&[usize]) -> (LinComb<K>, LinComb<K>) + Send + Sync + 'a,
    {
        let f = Arc::new(f);
        let g = Arc::clone(&f);
        Law {
            id: id.into(),
            domain,
            informational: false,
            compare: Box::new(move |idx| {
                let (l, r) = f(idx);
                (l != r).then(|| (Side::from(&l), Side::from(&r)))
            }),
            evaluate: Box::new(move |idx| {
                let (l, r) = g(idx);
                (Side::from(&l), Side::from(&r))
            }),
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    /// Re-evaluates both sides at one index tuple.
    pub fn evaluate(&self, idx: &[usize]) -> (Side, Side) {
        (self.evaluate)(idx)
    }

    pub fn check(&self) -> ReportEntry {
        let total: usize = self.domain.iter().product();
        let (failures, witness) = match self.domain.split_first() {
            None => match (self.compare)(&[]) {
                Some((lhs, rhs)) => (1, Some(Witness { index: vec![], lhs, rhs })),
                None => (0, None),
            },
            Some((&first, rest)) => {
                let per_first: Vec<(usize, Option<Witness>)> = (0..first)
                    .into_par_iter()
                    .map(|i0| self.scan_block(i0, rest))
                    .collect();
                let failures = per_first.iter().map(|(n, _)| n).sum();
                let witness = per_first.into_iter().find_map(|(_, w)| w);
                (failures, witness)
            }
        };
        ReportEntry {
            law_id: self.id.clone(),
            pass: failures == 0,
            informational: self.informational,
            checked: total,
            failures,
            witness,
        }
    }

    fn scan_block(&self, i0: usize, rest: &[usize]) -> (usize, Option<Witness>) {
        if rest.contains(&0) {
            return (0, None);
        }
        let mut idx = vec![0usize; rest.len() + 1];
        idx[0] = i0;
        let mut failures = 0;
        let mut witness = None;
        loop {
            if let Some((lhs, rhs)) = (self.compare)(&idx) {
                failures += 1;
                if witness.is_none() {
                    witness = Some(Witness { index: idx.clone(), lhs, rhs });
                }
            }
            // odometer increment over the trailing indices
            let mut pos = rest.len();
            loop {
                if pos == 0 {
                    return (failures, witness);
                }
                idx[pos] += 1;
                if idx[pos] < rest[pos - 1] {
                    break;
                }
                idx[pos] = 0;
                pos -= 1;
            }
        }
    }
}

/// Evaluates every law and collects the results in order.
pub fn check_laws(laws: &[Law<'_>]) -> VerificationReport {
    VerificationReport {
        entries: laws.iter().map(Law::check).collect(),
    }
}

/// A recorded pass/fail fact that is not an algebraic identity (e.g. a
/// Latin-square property), with an optional witness.
pub fn fact(law_id: impl Into<String>, checked: usize, witness: Option<Witness>) -> ReportEntry {
    ReportEntry {
        law_id: law_id.into(),
        pass: witness.is_none(),
        informational: false,
        checked,
        failures: usize::from(witness.is_some()),
        witness,
    }
}
