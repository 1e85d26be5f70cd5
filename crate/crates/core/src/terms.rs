//! Sparse linear combinations kept in strictly descending order.
//!
//! [`Polynomial`] and [`crate::ModuleElement`] are both instances of
//! [`Terms`]; the comparison closure passed to each operation is the active
//! monomial ordering and the caller is responsible for using one ordering
//! consistently for a given value.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

use crate::monomial::Monomial;
use crate::scalar::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Terms<K> {
    terms: Vec<(K, Rational)>,
}

pub type Polynomial = Terms<Monomial>;

impl<K> Default for Terms<K> {
    fn default() -> Self {
        Terms { terms: Vec::new() }
    }
}

impl<K: Clone + Eq + Hash> Terms<K> {
    pub fn zero() -> Self {
        Terms { terms: Vec::new() }
    }

    pub fn monomial(key: K, coeff: Rational) -> Self {
        if coeff.is_zero() {
            Terms::zero()
        } else {
            Terms {
                terms: vec![(key, coeff)],
            }
        }
    }

    /// Wraps terms that are already strictly descending with nonzero coefficients.
    pub fn from_sorted(terms: Vec<(K, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Terms { terms }
    }

    pub fn from_unsorted(
        terms: impl IntoIterator<Item = (K, Rational)>,
        cmp: impl Fn(&K, &K) -> Ordering,
    ) -> Self {
        let mut acc = Accumulator::new();
        for (k, c) in terms {
            acc.add(k, &c);
        }
        acc.finish(cmp)
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

    pub fn terms(&self) -> &[(K, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(K, Rational)> {
        self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (K, Rational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<&(K, Rational)> {
        self.terms.first()
    }

    pub fn leading_key(&self) -> Option<&K> {
        self.terms.first().map(|(k, _)| k)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn tail(&self) -> Self {
        Terms {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Terms::zero();
        }
        Terms {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Terms {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Scales so that the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
            None => Terms::zero(),
        }
    }

    pub fn map_keys<L>(&self, f: impl Fn(&K) -> L) -> Terms<L> {
        Terms {
            terms: self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect(),
        }
    }

    /// `self + c * other` by merging the two sorted sequences.
    pub fn add_scaled(&self, other: &Self, c: &Rational, cmp: impl Fn(&K, &K) -> Ordering) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match cmp(ka, kb) {
                Ordering::Greater => {
                    out.push((ka.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((kb.clone(), cb * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + &(cb * c);
                    if !s.is_zero() {
                        out.push((ka.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(k, v)| (k.clone(), v * c)));
        Terms { terms: out }
    }

    pub fn add(&self, other: &Self, cmp: impl Fn(&K, &K) -> Ordering) -> Self {
        self.add_scaled(other, &Rational::one(), cmp)
    }

    pub fn sub(&self, other: &Self, cmp: impl Fn(&K, &K) -> Ordering) -> Self {
        self.add_scaled(other, &Rational::from_integer(-1), cmp)
    }
}

impl Polynomial {
    pub fn constant(n: usize, c: Rational) -> Self {
        Terms::monomial(Monomial::one(n), c)
    }

    /// The constant value when the polynomial lies in K, zero included.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }
}

/// Unordered accumulation of terms; sorted once at the end.
pub struct Accumulator<K> {
    map: HashMap<K, Rational>,
}

impl<K: Clone + Eq + Hash> Accumulator<K> {
    pub fn new() -> Self {
        Accumulator {
            map: HashMap::new(),
        }
    }

    pub fn add(&mut self, key: K, c: &Rational) {
        if c.is_zero() {
            return;
        }
        *self.map.entry(key).or_default() += c;
    }

    pub fn add_terms(&mut self, t: &Terms<K>, c: &Rational) {
        for (k, v) in t.iter() {
            self.add(k.clone(), &(v * c));
        }
    }

    pub fn finish(self, cmp: impl Fn(&K, &K) -> Ordering) -> Terms<K> {
        let mut terms: Vec<_> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp(&b.0, &a.0));
        Terms { terms }
    }
}

impl<K: Clone + Eq + Hash> Default for Accumulator<K> {
    fn default() -> Self {
        Self::new()
    }
}
