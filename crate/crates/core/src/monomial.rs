//! PBW exponent vectors and the built-in monomial orderings.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `α` of a PBW monomial `a_1^α_1 ⋯ a_n^α_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other` divides `self` componentwise.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Index of the first generator with a nonzero exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Index of the last generator with a nonzero exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn with(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[i] = e;
        Monomial(v)
    }

    /// Appends one exponent (used for the homogenizing generator).
    pub fn extended(&self, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v.push(e);
        Monomial(v)
    }

    pub fn truncated(&self, n: usize) -> Monomial {
        Monomial(self.0[..n].to_vec())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl OrderKind {
    pub fn keyword(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        }
    }
}

/// A monomial ordering on PBW exponent vectors.
///
/// `priority` lists generator indices from the largest variable to the
/// smallest. When `homogenizer` is set, that generator is left out of the
/// degree and priority comparisons and only breaks the remaining ties
/// (smaller exponent first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrdering {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
    pub weighted: bool,
    pub homogenizer: Option<usize>,
}

impl MonomialOrdering {
    /// Default priority `a_n < ⋯ < a_1`.
    pub fn new(kind: OrderKind, n: usize) -> Self {
        MonomialOrdering {
            kind,
            priority: (0..n).collect(),
            weighted: true,
            homogenizer: None,
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        !matches!(self.kind, OrderKind::Lex)
    }

    /// True when `α ≺ β` implies `d(α) ≤ d(β)` for the given weights.
    pub fn is_graded_for(&self, weights: &[u32]) -> bool {
        if self.homogenizer.is_some() || !self.is_degree_compatible() {
            return false;
        }
        self.weighted || weights.iter().all(|&w| w == weights[0])
    }

    fn degree(&self, weights: &[u32], m: &Monomial) -> u64 {
        m.0.iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != self.homogenizer)
            .map(|(i, &e)| e as u64 * if self.weighted { weights[i] as u64 } else { 1 })
            .sum()
    }

    pub fn compare(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        if self.is_degree_compatible() {
            let c = self.degree(weights, a).cmp(&self.degree(weights, b));
            if c != Ordering::Equal {
                return c;
            }
        }
        let c = match self.kind {
            OrderKind::Lex | OrderKind::Grlex => self
                .priority
                .iter()
                .map(|&i| a.0[i].cmp(&b.0[i]))
                .find(|c| *c != Ordering::Equal)
                .unwrap_or(Ordering::Equal),
            OrderKind::Grevlex => self
                .priority
                .iter()
                .rev()
                .map(|&i| b.0[i].cmp(&a.0[i]))
                .find(|c| *c != Ordering::Equal)
                .unwrap_or(Ordering::Equal),
        };
        if c != Ordering::Equal {
            return c;
        }
        match self.homogenizer {
            Some(h) => a.0[h].cmp(&b.0[h]),
            None => Ordering::Equal,
        }
    }
}
