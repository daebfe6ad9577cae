//! Sparse linear combinations keyed by basis indices or index tuples.

use std::collections::BTreeMap;

use super::scalar::Scalar;

/// Basis keys that can be reported as a flat multi-index.
pub trait BasisKey: Ord + Clone + Send + Sync {
    fn indices(&self) -> Vec<usize>;
}

impl BasisKey for usize {
    fn indices(&self) -> Vec<usize> {
        vec![*self]
    }
}

impl BasisKey for (usize, usize) {
    fn indices(&self) -> Vec<usize> {
        vec![self.0, self.1]
    }
}

impl BasisKey for (usize, usize, usize) {
    fn indices(&self) -> Vec<usize> {
        vec![self.0, self.1, self.2]
    }
}

impl BasisKey for (usize, usize, usize, usize) {
    fn indices(&self) -> Vec<usize> {
        vec![self.0, self.1, self.2, self.3]
    }
}

/// `Σ c_k e_k` with no zero coefficients stored, so structural equality is
/// equality of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: BasisKey> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), c * x);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> Option<&Scalar> {
        self.terms.get(k)
    }

    /// Linear extension of a basis-to-combination map.
    pub fn flat_map<K2: BasisKey>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels basis keys; colliding keys are summed.
    pub fn map_keys<K2: BasisKey>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Terms as `(multi-index, coefficient)` for reports.
    pub fn to_terms(&self) -> Vec<(Vec<usize>, Scalar)> {
        self.terms.iter().map(|(k, c)| (k.indices(), c.clone())).collect()
    }
}
