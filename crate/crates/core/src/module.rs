//! Free left modules `L = ⊕ A e_i` with filtration shifts, module monomial
//! orderings and the left division algorithm.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::Rational;
use crate::terms::{Accumulator, Polynomial, Terms};

/// `a^α e_i`, with `component` zero-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMonomial {
    pub monomial: Monomial,
    pub component: usize,
}

impl ModuleMonomial {
    pub fn new(monomial: Monomial, component: usize) -> Self {
        ModuleMonomial {
            monomial,
            component,
        }
    }
}

impl fmt::Debug for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}e{}", self.monomial, self.component + 1)
    }
}

pub type ModuleElement = Terms<ModuleMonomial>;

/// Quotient `β − α` when `a^α e_i` divides `a^β e_j`.
pub fn monomial_divides(a: &ModuleMonomial, b: &ModuleMonomial) -> Option<Monomial> {
    if a.component != b.component {
        return None;
    }
    b.monomial.checked_div(&a.monomial)
}

#[derive(Clone, Debug)]
pub enum ModuleOrderKind {
    Top,
    Pot,
    /// Induced by images `ξ_i` in `base`: compare `LM(a^α ξ_i)`, then the index.
    Schreyer {
        base: Arc<FreeModule>,
        images: Vec<ModuleElement>,
        leads: Vec<ModuleMonomial>,
    },
    /// On the Rees module of `base`: compare the `Z`-free part under `base`,
    /// then the `Z` exponent.
    Homogenized {
        base: Arc<FreeModule>,
    },
}

#[derive(Clone, Debug)]
pub struct ModuleOrdering {
    pub kind: ModuleOrderKind,
    pub graded: bool,
    /// Component indices from largest to smallest.
    pub priority: Vec<usize>,
}

impl ModuleOrdering {
    pub fn keyword(&self) -> &'static str {
        match self.kind {
            ModuleOrderKind::Top => "top",
            ModuleOrderKind::Pot => "pot",
            ModuleOrderKind::Schreyer { .. } => "schreyer",
            ModuleOrderKind::Homogenized { .. } => "homogenized",
        }
    }
}

/// Default component priority `e_1 < e_2 < ⋯ < e_s`.
pub fn default_priority(rank: usize) -> Vec<usize> {
    (0..rank).rev().collect()
}

#[derive(Clone, Debug)]
pub struct FreeModule {
    algebra: Arc<Algebra>,
    shifts: Vec<u32>,
    ordering: ModuleOrdering,
    position: Vec<usize>,
}

/// Result of dividing `ξ` by a list of divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: ModuleElement,
}

/// The graded flag needs `α ≺ β ⇒ d(α) ≤ d(β)` on `A` itself.
fn check_graded(algebra: &Algebra, graded: bool) -> Result<()> {
    if graded && !algebra.is_graded_ordering() {
        return Err(Error::Input(format!(
            "the ordering of {} is not graded; use an ungraded module ordering",
            algebra.name()
        )));
    }
    Ok(())
}

impl FreeModule {
    /// TOP or POT module; `priority` defaults to `e_1 < ⋯ < e_s`.
    pub fn new(
        algebra: Arc<Algebra>,
        shifts: Vec<u32>,
        kind: ModuleOrderKind,
        graded: bool,
        priority: Option<Vec<usize>>,
    ) -> Result<Self> {
        let rank = shifts.len();
        let priority = priority.unwrap_or_else(|| default_priority(rank));
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        if sorted != (0..rank).collect::<Vec<_>>() {
            return Err(Error::Input(
                "component priority is not a permutation".into(),
            ));
        }
        check_graded(&algebra, graded)?;
        if let ModuleOrderKind::Schreyer { images, .. } = &kind {
            if images.len() != rank {
                return Err(Error::SizeMismatch {
                    expected: rank,
                    found: images.len(),
                });
            }
        }
        Ok(Self::assemble(
            algebra,
            shifts,
            ModuleOrdering {
                kind,
                graded,
                priority,
            },
        ))
    }

    fn assemble(algebra: Arc<Algebra>, shifts: Vec<u32>, ordering: ModuleOrdering) -> Self {
        let mut position = vec![0; shifts.len()];
        for (p, &c) in ordering.priority.iter().rev().enumerate() {
            position[c] = p;
        }
        FreeModule {
            algebra,
            shifts,
            ordering,
            position,
        }
    }

    /// Graded TOP over the algebra's ordering; plain TOP when that ordering
    /// is not graded.
    pub fn graded_top(algebra: Arc<Algebra>, shifts: Vec<u32>) -> Self {
        let rank = shifts.len();
        let graded = algebra.is_graded_ordering();
        let ordering = ModuleOrdering {
            kind: ModuleOrderKind::Top,
            graded,
            priority: default_priority(rank),
        };
        Self::assemble(algebra, shifts, ordering)
    }

    /// Schreyer ordering induced by nonzero `images` in `base`, with shifts
    /// `d_fil(images)`.
    pub fn schreyer(
        base: Arc<FreeModule>,
        images: Vec<ModuleElement>,
        graded: bool,
    ) -> Result<Self> {
        check_graded(&base.algebra, graded)?;
        let mut leads = Vec::with_capacity(images.len());
        let mut shifts = Vec::with_capacity(images.len());
        for (k, im) in images.iter().enumerate() {
            let lead = im.leading_key().ok_or(Error::SchreyerImage(k))?;
            leads.push(lead.clone());
            shifts.push(base.filtered_degree(im)?);
        }
        let rank = images.len();
        let algebra = base.algebra.clone();
        let ordering = ModuleOrdering {
            kind: ModuleOrderKind::Schreyer {
                base,
                images,
                leads,
            },
            graded,
            priority: default_priority(rank),
        };
        Ok(Self::assemble(algebra, shifts, ordering))
    }

    /// Rees module of `base` over the Rees algebra `rees`.
    pub fn homogenized(base: Arc<FreeModule>, rees: Arc<Algebra>) -> Self {
        let shifts = base.shifts.clone();
        let priority = base.ordering.priority.clone();
        let ordering = ModuleOrdering {
            kind: ModuleOrderKind::Homogenized { base },
            graded: false,
            priority,
        };
        Self::assemble(rees, shifts, ordering)
    }

    /// TOP/POT recipe over another algebra with the same generators (used
    /// for the associated graded module).
    pub fn with_algebra(&self, algebra: Arc<Algebra>) -> Result<Self> {
        match self.ordering.kind {
            ModuleOrderKind::Top | ModuleOrderKind::Pot => Ok(Self::assemble(
                algebra,
                self.shifts.clone(),
                self.ordering.clone(),
            )),
            _ => Err(Error::Input(
                "only TOP and POT orderings transfer directly".into(),
            )),
        }
    }

    /// Submodule spanned by the listed components, renumbered in order.
    pub fn restrict(&self, retained: &[usize]) -> Result<Self> {
        let mut new_index = vec![None; self.rank()];
        for (k, &c) in retained.iter().enumerate() {
            if c >= self.rank() {
                return Err(Error::ComponentOutOfRange {
                    index: c,
                    rank: self.rank(),
                });
            }
            new_index[c] = Some(k);
        }
        let shifts = retained.iter().map(|&c| self.shifts[c]).collect();
        let priority: Vec<usize> = self
            .ordering
            .priority
            .iter()
            .filter_map(|&c| new_index[c])
            .collect();
        let kind = match &self.ordering.kind {
            ModuleOrderKind::Schreyer { base, images, .. } => {
                let images = retained.iter().map(|&c| images[c].clone()).collect();
                return Self::schreyer(base.clone(), images, self.ordering.graded);
            }
            ModuleOrderKind::Homogenized { .. } => {
                return Err(Error::Input("cannot restrict a homogenized module".into()));
            }
            k => k.clone(),
        };
        let ordering = ModuleOrdering {
            kind,
            graded: self.ordering.graded,
            priority,
        };
        Ok(Self::assemble(self.algebra.clone(), shifts, ordering))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn ordering(&self) -> &ModuleOrdering {
        &self.ordering
    }

    /// True when `a^α e_i ≺ a^β e_j` forces `d(a^α)+b_i ≤ d(a^β)+b_j`.
    pub fn is_graded(&self) -> bool {
        self.ordering.graded && !matches!(self.ordering.kind, ModuleOrderKind::Homogenized { .. })
    }

    /// `d(a^α) + b_i`.
    pub fn degree(&self, m: &ModuleMonomial) -> u32 {
        self.algebra.degree(&m.monomial) + self.shifts[m.component]
    }

    pub fn cmp(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        if self.is_graded() {
            let c = self.degree(a).cmp(&self.degree(b));
            if c != Ordering::Equal {
                return c;
            }
        }
        let alg = &self.algebra;
        match &self.ordering.kind {
            ModuleOrderKind::Top => alg
                .cmp(&a.monomial, &b.monomial)
                .then_with(|| self.position[a.component].cmp(&self.position[b.component])),
            ModuleOrderKind::Pot => self.position[a.component]
                .cmp(&self.position[b.component])
                .then_with(|| alg.cmp(&a.monomial, &b.monomial)),
            ModuleOrderKind::Schreyer { base, leads, .. } => {
                let lift = |m: &ModuleMonomial| {
                    let l = &leads[m.component];
                    ModuleMonomial::new(m.monomial.mul(&l.monomial), l.component)
                };
                base.cmp(&lift(a), &lift(b))
                    .then_with(|| a.component.cmp(&b.component))
                    .then_with(|| alg.cmp(&a.monomial, &b.monomial))
            }
            ModuleOrderKind::Homogenized { base } => {
                let n = base.algebra.n();
                let cut =
                    |m: &ModuleMonomial| ModuleMonomial::new(m.monomial.truncated(n), m.component);
                base.cmp(&cut(a), &cut(b))
                    .then_with(|| a.monomial.get(n).cmp(&b.monomial.get(n)))
            }
        }
    }

    pub fn check_monomial(&self, m: &ModuleMonomial) -> Result<()> {
        if m.component >= self.rank() {
            return Err(Error::ComponentOutOfRange {
                index: m.component,
                rank: self.rank(),
            });
        }
        if m.monomial.len() != self.algebra.n() {
            return Err(Error::SizeMismatch {
                expected: self.algebra.n(),
                found: m.monomial.len(),
            });
        }
        Ok(())
    }

    pub fn compare(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Result<Ordering> {
        self.check_monomial(a)?;
        self.check_monomial(b)?;
        Ok(self.cmp(a, b))
    }

    /// `d_fil(ξ)`: the largest `d(a^α)+b_i` over the terms of `ξ`.
    pub fn filtered_degree(&self, xi: &ModuleElement) -> Result<u32> {
        xi.iter()
            .map(|(m, _)| self.degree(m))
            .max()
            .ok_or(Error::ZeroElement)
    }

    pub fn element(
        &self,
        terms: impl IntoIterator<Item = (ModuleMonomial, Rational)>,
    ) -> ModuleElement {
        ModuleElement::from_unsorted(terms, |a, b| self.cmp(a, b))
    }

    /// Checks components and exponent lengths, then sorts.
    pub fn try_element(
        &self,
        terms: impl IntoIterator<Item = (ModuleMonomial, Rational)>,
    ) -> Result<ModuleElement> {
        let terms: Vec<_> = terms.into_iter().collect();
        for (m, _) in &terms {
            self.check_monomial(m)?;
        }
        Ok(self.element(terms))
    }

    pub fn unit(&self, i: usize) -> ModuleElement {
        ModuleElement::monomial(
            ModuleMonomial::new(Monomial::one(self.algebra.n()), i),
            Rational::one(),
        )
    }

    /// `Σ_i f_i e_i`.
    pub fn from_components(&self, polys: &[Polynomial]) -> ModuleElement {
        let terms = polys.iter().enumerate().flat_map(|(i, p)| {
            p.iter()
                .map(move |(m, c)| (ModuleMonomial::new(m.clone(), i), c.clone()))
        });
        self.element(terms)
    }

    pub fn component_poly(&self, xi: &ModuleElement, i: usize) -> Polynomial {
        self.algebra.poly(
            xi.iter()
                .filter(|(m, _)| m.component == i)
                .map(|(m, c)| (m.monomial.clone(), c.clone())),
        )
    }

    /// The coordinate vector of `ξ`, one polynomial per component.
    pub fn components(&self, xi: &ModuleElement) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.rank()];
        for (m, c) in xi.iter() {
            parts[m.component].push((m.monomial.clone(), c.clone()));
        }
        parts.into_iter().map(|p| self.algebra.poly(p)).collect()
    }

    /// Moves each term to component `map[i]` (or drops it when `None`).
    pub fn reindex(&self, xi: &ModuleElement, map: &[Option<usize>]) -> ModuleElement {
        self.element(xi.iter().filter_map(|(m, c)| {
            map[m.component].map(|k| (ModuleMonomial::new(m.monomial.clone(), k), c.clone()))
        }))
    }

    pub fn add(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        a.add(b, |x, y| self.cmp(x, y))
    }

    pub fn sub(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        a.sub(b, |x, y| self.cmp(x, y))
    }

    pub fn add_scaled(&self, a: &ModuleElement, b: &ModuleElement, c: &Rational) -> ModuleElement {
        a.add_scaled(b, c, |x, y| self.cmp(x, y))
    }

    /// `c · a^α · ξ`.
    pub fn mul_term(&self, c: &Rational, alpha: &Monomial, xi: &ModuleElement) -> ModuleElement {
        if c.is_zero() || xi.is_zero() {
            return ModuleElement::zero();
        }
        if alpha.is_one() {
            return xi.scale(c);
        }
        let mut acc = Accumulator::new();
        for (m, d) in xi.iter() {
            let p = self.algebra.mul_mono(alpha, &m.monomial);
            let cd = c * d;
            for (g, e) in p.iter() {
                acc.add(ModuleMonomial::new(g.clone(), m.component), &(&cd * e));
            }
        }
        acc.finish(|x, y| self.cmp(x, y))
    }

    /// `f · ξ`.
    pub fn left_mul(&self, f: &Polynomial, xi: &ModuleElement) -> ModuleElement {
        let mut acc = Accumulator::new();
        for (alpha, c) in f.iter() {
            for (m, d) in xi.iter() {
                let p = self.algebra.mul_mono(alpha, &m.monomial);
                let cd = c * d;
                for (g, e) in p.iter() {
                    acc.add(ModuleMonomial::new(g.clone(), m.component), &(&cd * e));
                }
            }
        }
        acc.finish(|x, y| self.cmp(x, y))
    }

    /// `Σ_k f_k ξ_k`.
    pub fn combine(&self, coeffs: &[Polynomial], elems: &[ModuleElement]) -> ModuleElement {
        let mut acc = Accumulator::new();
        for (f, xi) in coeffs.iter().zip(elems) {
            if !f.is_zero() && !xi.is_zero() {
                acc.add_terms(&self.left_mul(f, xi), &Rational::one());
            }
        }
        acc.finish(|x, y| self.cmp(x, y))
    }

    /// Left division; at each step the least-index divisor whose leading
    /// monomial divides the current leading monomial is used.
    pub fn divide(&self, xi: &ModuleElement, divisors: &[ModuleElement]) -> Division {
        let leads: Vec<Option<&(ModuleMonomial, Rational)>> =
            divisors.iter().map(|d| d.leading()).collect();
        let mut quotients: Vec<Accumulator<Monomial>> =
            divisors.iter().map(|_| Accumulator::new()).collect();
        let mut remainder = Vec::new();
        let mut p = xi.clone();
        while let Some((lm, lc)) = p.leading().cloned() {
            let hit = leads.iter().enumerate().find_map(|(k, l)| {
                l.and_then(|(dm, _)| monomial_divides(dm, &lm))
                    .map(|q| (k, q))
            });
            match hit {
                Some((k, delta)) => {
                    let t = self.mul_term(&Rational::one(), &delta, &divisors[k]);
                    let c = &lc / t.leading_coeff().expect("product of nonzero elements");
                    quotients[k].add(delta, &c);
                    p = self.add_scaled(&p, &t, &-&c);
                }
                None => {
                    remainder.push((lm, lc));
                    p = p.tail();
                }
            }
        }
        let alg = &self.algebra;
        Division {
            quotients: quotients
                .into_iter()
                .map(|q| q.finish(|a, b| alg.cmp(a, b)))
                .collect(),
            remainder: ModuleElement::from_sorted(remainder),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::monomial::{MonomialOrdering, OrderKind};

    pub(crate) fn kxy() -> Arc<Algebra> {
        let s = AlgebraSpec::commutative(
            "kxy",
            &["x", "y"],
            &[1, 1],
            MonomialOrdering::new(OrderKind::Grlex, 2),
        );
        Arc::new(Algebra::new(s).unwrap())
    }

    pub(crate) fn weyl1() -> Arc<Algebra> {
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
        Arc::new(Algebra::new(s).unwrap())
    }

    fn mm(v: &[u32], c: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::new(v.to_vec()), c)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn top_pot_and_graded_examples() {
        let a = kxy();
        let top =
            FreeModule::new(a.clone(), vec![0, 0], ModuleOrderKind::Top, false, None).unwrap();
        assert_eq!(top.cmp(&mm(&[1, 0], 0), &mm(&[0, 1], 1)), Ordering::Greater);
        let pot =
            FreeModule::new(a.clone(), vec![0, 0], ModuleOrderKind::Pot, false, None).unwrap();
        assert_eq!(pot.cmp(&mm(&[5, 0], 0), &mm(&[0, 0], 1)), Ordering::Less);
        let gtop = FreeModule::graded_top(a, vec![0, 2]);
        assert_eq!(gtop.cmp(&mm(&[1, 0], 0), &mm(&[0, 0], 1)), Ordering::Less);
        assert!(gtop.compare(&mm(&[1, 0], 2), &mm(&[0, 0], 1)).is_err());
    }

    #[test]
    fn filtered_degree_examples() {
        let l = FreeModule::graded_top(weyl1(), vec![0, 1]);
        let xi = l.element([(mm(&[2, 0], 0), q(1)), (mm(&[0, 1], 1), q(1))]);
        assert_eq!(l.filtered_degree(&xi).unwrap(), 2);
        assert_eq!(l.filtered_degree(&l.unit(1)).unwrap(), 1);
        assert_eq!(
            l.filtered_degree(&ModuleElement::zero()),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn divisibility() {
        assert_eq!(
            monomial_divides(&mm(&[1, 0], 0), &mm(&[2, 1], 0)),
            Some(Monomial::new(vec![1, 1]))
        );
        assert_eq!(monomial_divides(&mm(&[1, 0], 0), &mm(&[2, 0], 1)), None);
        assert_eq!(
            monomial_divides(&mm(&[0, 0], 0), &mm(&[3, 2], 0)),
            Some(Monomial::new(vec![3, 2]))
        );
    }

    #[test]
    fn division_examples() {
        let l = FreeModule::graded_top(kxy(), vec![0]);
        let d = l.divide(
            &l.element([(mm(&[2, 0], 0), q(1))]),
            &[l.element([(mm(&[1, 0], 0), q(1))])],
        );
        assert_eq!(d.quotients[0], l.algebra().var(0));
        assert!(d.remainder.is_zero());
        let y = l.element([(mm(&[0, 1], 0), q(1))]);
        let d = l.divide(&y, &[l.element([(mm(&[1, 0], 0), q(1))])]);
        assert!(d.quotients[0].is_zero());
        assert_eq!(d.remainder, y);

        let w = FreeModule::graded_top(weyl1(), vec![0]);
        let xi = w.element([(mm(&[1, 1], 0), q(1)), (mm(&[0, 0], 0), q(1))]);
        let dd = w.element([(mm(&[0, 1], 0), q(1))]);
        let d = w.divide(&xi, std::slice::from_ref(&dd));
        assert_eq!(d.quotients[0], w.algebra().var(0));
        assert_eq!(d.remainder, w.unit(0));
        let back = w.add(&w.left_mul(&d.quotients[0], &dd), &d.remainder);
        assert_eq!(back, xi);
    }

    #[test]
    fn schreyer_ordering_follows_images() {
        let a = kxy();
        let base = Arc::new(FreeModule::graded_top(a.clone(), vec![0]));
        // images y e1 and x e1
        let ims = vec![
            base.element([(mm(&[0, 1], 0), q(1))]),
            base.element([(mm(&[1, 0], 0), q(1))]),
        ];
        let s = FreeModule::schreyer(base.clone(), ims, true).unwrap();
        assert_eq!(s.shifts(), &[1, 1]);
        // x ε1 -> xy, y ε2 -> xy: tie broken by index
        assert_eq!(s.cmp(&mm(&[1, 0], 0), &mm(&[0, 1], 1)), Ordering::Less);
        // y ε1 -> y^2 is below x ε2 -> x^2
        assert_eq!(s.cmp(&mm(&[0, 1], 0), &mm(&[1, 0], 1)), Ordering::Less);
        assert!(matches!(
            FreeModule::schreyer(base, vec![ModuleElement::zero()], true),
            Err(Error::SchreyerImage(0))
        ));
    }

    #[test]
    fn graded_flag_needs_graded_algebra() {
        let lex = AlgebraSpec::commutative(
            "lex",
            &["x", "y"],
            &[1, 1],
            MonomialOrdering::new(OrderKind::Lex, 2),
        );
        let a = Arc::new(Algebra::new(lex).unwrap());
        assert!(FreeModule::new(a.clone(), vec![0], ModuleOrderKind::Top, true, None).is_err());
        assert!(FreeModule::new(a.clone(), vec![0], ModuleOrderKind::Top, false, None).is_ok());
        assert!(!FreeModule::graded_top(a.clone(), vec![0]).is_graded());
        let base = Arc::new(FreeModule::graded_top(a, vec![0]));
        let x = base.element([(mm(&[1, 0], 0), q(1))]);
        assert!(FreeModule::schreyer(base, vec![x], true).is_err());
    }
}
