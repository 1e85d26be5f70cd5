//! Solvable polynomial algebras given by a commutation table.
//!
//! An algebra `K[a_1, …, a_n]` is described by its generators, positive
//! weights `d(a_i) = m_i`, a monomial ordering and, for each pair `j > i`,
//! a relation `a_j a_i = λ_ji a_i a_j + f_ji`. Pairs without an entry
//! commute. Products of PBW monomials are brought to normal form by
//! peeling off the innermost inversion `a_j^s a_i^t` and recursing; the
//! power products are memoized per algebra.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrdering};
use crate::scalar::Rational;
use crate::terms::{Accumulator, Polynomial};

/// Rewriting steps allowed for a single top-level product.
const REWRITE_CAP: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lambda: Rational,
    /// The lower part `f_ji`, sorted under the algebra's ordering.
    pub lower: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub generators: Vec<String>,
    pub weights: Vec<u32>,
    pub ordering: MonomialOrdering,
    /// Keyed by `(j, i)` with `j > i` (zero-based).
    pub relations: BTreeMap<(usize, usize), Relation>,
}

impl AlgebraSpec {
    /// Commutative polynomial ring with the given generators and weights.
    pub fn commutative(
        name: &str,
        generators: &[&str],
        weights: &[u32],
        ordering: MonomialOrdering,
    ) -> Self {
        AlgebraSpec {
            name: name.to_string(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
            ordering,
            relations: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.generators.len()
    }

    /// Sets `a_j a_i = λ a_i a_j + Σ terms`; the terms are sorted here.
    pub fn set_relation(
        &mut self,
        j: usize,
        i: usize,
        lambda: Rational,
        lower: Vec<(Monomial, Rational)>,
    ) {
        let (ord, w) = (self.ordering.clone(), self.weights.clone());
        let lower = Polynomial::from_unsorted(lower, |a, b| ord.compare(&w, a, b));
        self.relations.insert((j, i), Relation { lambda, lower });
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WeightCount {
        expected: usize,
        found: usize,
    },
    NonPositiveWeight {
        generator: String,
    },
    BadPriority,
    BadRelationPair {
        j: usize,
        i: usize,
    },
    MonomialSize {
        pair: (String, String),
    },
    ZeroLambda {
        pair: (String, String),
    },
    LeadingNotLower {
        pair: (String, String),
    },
    DegreeTooHigh {
        pair: (String, String),
        degree: u32,
        bound: u32,
    },
    NotAssociative {
        triple: (String, String, String),
    },
    RewriteCap {
        triple: (String, String, String),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WeightCount { expected, found } => {
                write!(f, "expected {expected} weights, found {found}")
            }
            Violation::NonPositiveWeight { generator } => {
                write!(f, "weight of {generator} must be positive")
            }
            Violation::BadPriority => write!(f, "priority is not a permutation of the generators"),
            Violation::BadRelationPair { j, i } => {
                write!(f, "relation index pair ({j}, {i}) is not j > i in range")
            }
            Violation::MonomialSize { pair } => {
                write!(
                    f,
                    "relation {}*{}: monomial of wrong length",
                    pair.0, pair.1
                )
            }
            Violation::ZeroLambda { pair } => {
                write!(f, "relation {}*{}: lambda is zero", pair.0, pair.1)
            }
            Violation::LeadingNotLower { pair } => write!(
                f,
                "relation {}*{}: leading monomial of the lower part is not below {}*{}",
                pair.0, pair.1, pair.1, pair.0
            ),
            Violation::DegreeTooHigh {
                pair,
                degree,
                bound,
            } => write!(
                f,
                "relation {}*{}: lower part has degree {degree} > {bound}",
                pair.0, pair.1
            ),
            Violation::NotAssociative { triple } => write!(
                f,
                "associativity fails for ({}*{})*{}",
                triple.0, triple.1, triple.2
            ),
            Violation::RewriteCap { triple } => write!(
                f,
                "rewriting did not terminate for {}*{}*{}",
                triple.0, triple.1, triple.2
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(|v| v.to_string()).collect()
    }
}

/// Which adjacent inversion the word rewriter resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

struct Budget {
    left: u64,
}

impl Budget {
    fn new() -> Self {
        Budget { left: REWRITE_CAP }
    }

    fn tick(&mut self, alg: &Algebra, j: usize, i: usize) -> Result<()> {
        if self.left == 0 {
            return Err(Error::RewriteCap {
                hi: alg.spec.generators[j].clone(),
                lo: alg.spec.generators[i].clone(),
            });
        }
        self.left -= 1;
        Ok(())
    }
}

/// A validated solvable polynomial algebra with its multiplication caches.
///
/// The caches sit behind mutexes, so an `Algebra` can be shared across
/// threads; results do not depend on which thread filled a cache entry.
pub struct Algebra {
    spec: AlgebraSpec,
    commutative: bool,
    power_cache: Mutex<HashMap<(usize, u32, usize, u32), Polynomial>>,
    product_cache: Mutex<HashMap<(Monomial, Monomial), Polynomial>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("spec", &self.spec).finish()
    }
}

impl Algebra {
    /// Validates `spec` and wraps it.
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        let report = validate_algebra(&spec);
        if !report.accepted() {
            return Err(Error::InvalidAlgebra(report.messages()));
        }
        Ok(Algebra::unchecked(spec))
    }

    fn unchecked(spec: AlgebraSpec) -> Self {
        let commutative = spec
            .relations
            .values()
            .all(|r| r.lambda.is_one() && r.lower.is_zero());
        Algebra {
            spec,
            commutative,
            power_cache: Mutex::new(HashMap::new()),
            product_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn weights(&self) -> &[u32] {
        &self.spec.weights
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.spec.ordering
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// True when the ordering is graded with respect to the weights.
    pub fn is_graded_ordering(&self) -> bool {
        self.spec.ordering.is_graded_for(&self.spec.weights)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.spec.ordering.compare(&self.spec.weights, a, b)
    }

    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.len() != self.n() {
                return Err(Error::SizeMismatch {
                    expected: self.n(),
                    found: m.len(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.spec.weights)
    }

    /// `d(f)`: the largest weighted degree among the terms of `f`.
    pub fn weighted_degree(&self, f: &Polynomial) -> Result<u32> {
        f.iter()
            .map(|(m, _)| self.degree(m))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_data(&self, f: &Polynomial) -> Result<(Rational, Monomial)> {
        f.leading()
            .map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.n(), Rational::one())
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::constant(self.n(), c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(self.n(), i), Rational::one())
    }

    pub fn poly(&self, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Polynomial {
        Polynomial::from_unsorted(terms, |a, b| self.cmp(a, b))
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.add(g, |a, b| self.cmp(a, b))
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.sub(g, |a, b| self.cmp(a, b))
    }

    pub fn add_scaled(&self, f: &Polynomial, g: &Polynomial, c: &Rational) -> Polynomial {
        f.add_scaled(g, c, |a, b| self.cmp(a, b))
    }

    /// Normal form of `a^α · a^β`.
    pub fn try_mul_mono(&self, a: &Monomial, b: &Monomial) -> Result<Polynomial> {
        for m in [a, b] {
            if m.len() != self.n() {
                return Err(Error::SizeMismatch {
                    expected: self.n(),
                    found: m.len(),
                });
            }
        }
        self.product(a, b, &mut Budget::new())
    }

    /// Infallible on validated algebras.
    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Polynomial {
        self.try_mul_mono(a, b)
            .expect("monomial product on a validated algebra")
    }

    pub fn try_mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() || g.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut budget = Budget::new();
        let mut acc = Accumulator::new();
        for (a, ca) in f.iter() {
            for (b, cb) in g.iter() {
                let p = self.product(a, b, &mut budget)?;
                acc.add_terms(&p, &(ca * cb));
            }
        }
        Ok(acc.finish(|x, y| self.cmp(x, y)))
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.try_mul(f, g)
            .expect("polynomial product on a validated algebra")
    }

    /// `c · a^α · f`.
    pub fn mul_term(&self, c: &Rational, alpha: &Monomial, f: &Polynomial) -> Polynomial {
        if c.is_zero() || f.is_zero() {
            return Polynomial::zero();
        }
        if alpha.is_one() {
            return f.scale(c);
        }
        let mut acc = Accumulator::new();
        for (b, cb) in f.iter() {
            acc.add_terms(&self.mul_mono(alpha, b), &(c * cb));
        }
        acc.finish(|x, y| self.cmp(x, y))
    }

    fn relation(&self, j: usize, i: usize) -> Polynomial {
        let n = self.n();
        let base = Monomial::var(n, i).mul(&Monomial::var(n, j));
        match self.spec.relations.get(&(j, i)) {
            Some(r) => {
                Polynomial::monomial(base, r.lambda.clone()).add(&r.lower, |a, b| self.cmp(a, b))
            }
            None => Polynomial::monomial(base, Rational::one()),
        }
    }

    fn product(&self, a: &Monomial, b: &Monomial, budget: &mut Budget) -> Result<Polynomial> {
        let (j, i) = match (a.last_var(), b.first_var()) {
            (Some(j), Some(i)) if j > i && !self.commutative => (j, i),
            _ => return Ok(Polynomial::monomial(a.mul(b), Rational::one())),
        };
        let key = (a.clone(), b.clone());
        if let Some(p) = self.product_cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        budget.tick(self, j, i)?;
        let a_rest = a.with(j, 0);
        let b_rest = b.with(i, 0);
        let core = self.power_product(j, a.get(j), i, b.get(i), budget)?;
        let mut acc = Accumulator::new();
        for (g, c) in core.iter() {
            let right = self.product(g, &b_rest, budget)?;
            for (h, c2) in right.iter() {
                let full = self.product(&a_rest, h, budget)?;
                acc.add_terms(&full, &(c * c2));
            }
        }
        let out = acc.finish(|x, y| self.cmp(x, y));
        self.product_cache.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `a_j^s · a_i^t` for `j > i`.
    fn power_product(
        &self,
        j: usize,
        s: u32,
        i: usize,
        t: u32,
        budget: &mut Budget,
    ) -> Result<Polynomial> {
        let key = (j, s, i, t);
        if let Some(p) = self.power_cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        budget.tick(self, j, i)?;
        let n = self.n();
        let out = if s == 1 && t == 1 {
            self.relation(j, i)
        } else {
            let (prev, left, right) = if t > 1 {
                (
                    self.power_product(j, s, i, t - 1, budget)?,
                    None,
                    Some(Monomial::var(n, i)),
                )
            } else {
                (
                    self.power_product(j, s - 1, i, 1, budget)?,
                    Some(Monomial::var(n, j)),
                    None,
                )
            };
            let mut acc = Accumulator::new();
            for (g, c) in prev.iter() {
                let p = match (&left, &right) {
                    (Some(l), _) => self.product(l, g, budget)?,
                    (_, Some(r)) => self.product(g, r, budget)?,
                    _ => unreachable!(),
                };
                acc.add_terms(&p, c);
            }
            acc.finish(|x, y| self.cmp(x, y))
        };
        self.power_cache.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Normal form of a generator word by repeated adjacent-inversion
    /// rewriting. Independent of the recursive product; used to cross-check it.
    pub fn rewrite_word(&self, word: &[usize], strategy: RewriteStrategy) -> Result<Polynomial> {
        let n = self.n();
        let mut pending: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        pending.insert(word.to_vec(), Rational::one());
        let mut done = Accumulator::new();
        let mut budget = Budget::new();
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            let mut inversions = (0..w.len().saturating_sub(1)).filter(|&k| w[k] > w[k + 1]);
            let pos = match strategy {
                RewriteStrategy::Leftmost => inversions.next(),
                RewriteStrategy::Rightmost => inversions.next_back(),
            };
            let Some(k) = pos else {
                let mut e = vec![0u32; n];
                for &g in &w {
                    e[g] += 1;
                }
                done.add(Monomial::new(e), &c);
                continue;
            };
            let (j, i) = (w[k], w[k + 1]);
            budget.tick(self, j, i)?;
            for (m, mu) in self.relation(j, i).iter() {
                let mut nw = w[..k].to_vec();
                for (g, &e) in m.exponents().iter().enumerate() {
                    nw.extend(std::iter::repeat_n(g, e as usize));
                }
                nw.extend_from_slice(&w[k + 2..]);
                *pending.entry(nw).or_default() += &(mu * &c);
            }
        }
        Ok(done.finish(|x, y| self.cmp(x, y)))
    }
}

/// Checks the relation table conditions and probes associativity on all
/// generator triples `k ≥ j ≥ i`.
pub fn validate_algebra(spec: &AlgebraSpec) -> ValidationReport {
    let n = spec.n();
    let mut v = Vec::new();
    if spec.weights.len() != n {
        v.push(Violation::WeightCount {
            expected: n,
            found: spec.weights.len(),
        });
        return ValidationReport { violations: v };
    }
    for (g, &w) in spec.generators.iter().zip(&spec.weights) {
        if w == 0 {
            v.push(Violation::NonPositiveWeight {
                generator: g.clone(),
            });
        }
    }
    let ord = &spec.ordering;
    let mut expected: Vec<usize> = (0..n).filter(|&i| Some(i) != ord.homogenizer).collect();
    let mut got = ord.priority.clone();
    got.sort_unstable();
    expected.sort_unstable();
    if got != expected || ord.homogenizer.is_some_and(|h| h >= n) {
        v.push(Violation::BadPriority);
    }
    if !v.is_empty() {
        return ValidationReport { violations: v };
    }
    let name = |k: usize| spec.generators[k].clone();
    for (&(j, i), rel) in &spec.relations {
        if !(j > i && j < n) {
            v.push(Violation::BadRelationPair { j, i });
            continue;
        }
        let pair = (name(j), name(i));
        if rel.lower.iter().any(|(m, _)| m.len() != n) {
            v.push(Violation::MonomialSize { pair });
            continue;
        }
        if rel.lambda.is_zero() {
            v.push(Violation::ZeroLambda { pair: pair.clone() });
        }
        let target = Monomial::var(n, i).mul(&Monomial::var(n, j));
        if let Some(lm) = rel.lower.leading_key() {
            if ord.compare(&spec.weights, lm, &target) != Ordering::Less {
                v.push(Violation::LeadingNotLower { pair: pair.clone() });
            }
        }
        let bound = spec.weights[i] + spec.weights[j];
        if let Some(degree) = rel
            .lower
            .iter()
            .map(|(m, _)| m.weighted_degree(&spec.weights))
            .max()
        {
            if degree > bound {
                v.push(Violation::DegreeTooHigh {
                    pair,
                    degree,
                    bound,
                });
            }
        }
    }
    if !v.is_empty() {
        return ValidationReport { violations: v };
    }
    let alg = Algebra::unchecked(spec.clone());
    for k in 0..n {
        for j in 0..=k {
            for i in 0..=j {
                let triple = (name(k), name(j), name(i));
                let (ek, ej, ei) = (alg.var(k), alg.var(j), alg.var(i));
                let lhs = alg.try_mul(&ek, &ej).and_then(|p| alg.try_mul(&p, &ei));
                let rhs = alg.try_mul(&ej, &ei).and_then(|p| alg.try_mul(&ek, &p));
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l == r => {}
                    (Ok(_), Ok(_)) => v.push(Violation::NotAssociative { triple }),
                    _ => v.push(Violation::RewriteCap { triple }),
                }
            }
        }
    }
    ValidationReport { violations: v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::OrderKind;

    pub(crate) fn weyl1() -> Algebra {
        let mut s = AlgebraSpec::commutative(
            "weyl1",
            &["x", "d"],
            &[1, 1],
            MonomialOrdering::new(OrderKind::Grlex, 2),
        );
        s.set_relation(
            1,
            0,
            Rational::one(),
            vec![(Monomial::one(2), Rational::one())],
        );
        Algebra::new(s).unwrap()
    }

    fn twisted3_spec() -> AlgebraSpec {
        let mut s = AlgebraSpec::commutative(
            "ex3",
            &["a1", "a2", "a3"],
            &[2, 1, 4],
            MonomialOrdering::new(OrderKind::Grlex, 3),
        );
        let m = |v: &[u32]| Monomial::new(v.to_vec());
        s.set_relation(
            2,
            0,
            Rational::one(),
            vec![
                (m(&[0, 2, 1]), Rational::one()),
                (m(&[0, 1, 0]), Rational::one()),
            ],
        );
        s
    }

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn weyl_products() {
        let a = weyl1();
        assert_eq!(
            a.mul_mono(&m(&[1, 0]), &m(&[0, 1])),
            a.poly([(m(&[1, 1]), Rational::one())])
        );
        assert_eq!(
            a.mul_mono(&m(&[0, 1]), &m(&[1, 0])),
            a.poly([(m(&[1, 1]), Rational::one()), (m(&[0, 0]), Rational::one())])
        );
        assert_eq!(
            a.mul_mono(&m(&[0, 2]), &m(&[1, 0])),
            a.poly([
                (m(&[1, 2]), Rational::one()),
                (m(&[0, 1]), Rational::from_integer(2))
            ])
        );
        let comm = a.sub(&a.mul(&a.var(1), &a.var(0)), &a.mul(&a.var(0), &a.var(1)));
        assert_eq!(comm, a.one());
        assert!(a.mul(&Polynomial::zero(), &a.var(0)).is_zero());
    }

    #[test]
    fn twisted_relation_and_validation() {
        let spec = twisted3_spec();
        assert!(validate_algebra(&spec).accepted());
        let a = Algebra::new(spec).unwrap();
        let p = a.mul(&a.var(2), &a.var(0));
        let expected = a.poly([
            (m(&[1, 0, 1]), Rational::one()),
            (m(&[0, 2, 1]), Rational::one()),
            (m(&[0, 1, 0]), Rational::one()),
        ]);
        assert_eq!(p, expected);
        assert_eq!(
            a.weighted_degree(&a.poly([(m(&[1, 0, 1]), Rational::one())]))
                .unwrap(),
            6
        );
    }

    #[test]
    fn rejects_bad_relation_with_both_violations() {
        let mut s = AlgebraSpec::commutative(
            "bad",
            &["a1", "a2"],
            &[1, 1],
            MonomialOrdering::new(OrderKind::Grlex, 2),
        );
        // a2 a1 = a1 a2 + a1^2 a2
        s.set_relation(1, 0, Rational::one(), vec![(m(&[2, 1]), Rational::one())]);
        let r = validate_algebra(&s);
        assert!(!r.accepted());
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::LeadingNotLower { .. })));
        assert!(r.violations.iter().any(|v| matches!(
            v,
            Violation::DegreeTooHigh {
                degree: 3,
                bound: 2,
                ..
            }
        )));
        assert!(Algebra::new(s).is_err());
    }

    #[test]
    fn detects_non_associative_table() {
        // y x = x y + x, z x = x z, z y = y z + x: fails the Jacobi-style probe
        let mut s = AlgebraSpec::commutative(
            "na",
            &["x", "y", "z"],
            &[1, 1, 1],
            MonomialOrdering::new(OrderKind::Grlex, 3),
        );
        s.set_relation(
            1,
            0,
            Rational::one(),
            vec![(m(&[1, 0, 0]), Rational::one())],
        );
        s.set_relation(
            2,
            1,
            Rational::one(),
            vec![(m(&[1, 0, 0]), Rational::one())],
        );
        s.set_relation(2, 0, Rational::from_integer(2), vec![]);
        let r = validate_algebra(&s);
        assert!(
            r.violations
                .iter()
                .any(|v| matches!(v, Violation::NotAssociative { .. })),
            "{:?}",
            r
        );
    }

    #[test]
    fn zero_has_no_degree() {
        let a = weyl1();
        assert_eq!(
            a.weighted_degree(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            a.leading_data(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(a.weighted_degree(&a.one()).unwrap(), 0);
    }

    #[test]
    fn size_mismatch_is_reported() {
        let a = weyl1();
        assert!(matches!(
            a.compare_monomials(&m(&[1]), &m(&[0, 1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn word_rewriting_agrees_on_weyl() {
        let a = weyl1();
        for strategy in [RewriteStrategy::Leftmost, RewriteStrategy::Rightmost] {
            let p = a.rewrite_word(&[1, 1, 0], strategy).unwrap();
            assert_eq!(p, a.mul_mono(&m(&[0, 2]), &m(&[1, 0])));
        }
    }
}
