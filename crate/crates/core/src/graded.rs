//! The associated graded algebra `G(A)`, the Rees algebra `Ã`, principal
//! symbols, homogenization and the transfer checks between them.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraSpec, Relation};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, check_groebner, DEFAULT_STEP_CAP};
use crate::module::{FreeModule, ModuleElement, ModuleMonomial, ModuleOrderKind};
use crate::terms::Polynomial;

/// Keeps only the top-degree part `d = m_i + m_j` of every lower part.
pub fn assoc_graded_algebra(spec: &AlgebraSpec) -> AlgebraSpec {
    let mut out = spec.clone();
    out.name = format!("{}_graded", spec.name);
    for (&(j, i), rel) in out.relations.iter_mut() {
        let target = spec.weights[i] + spec.weights[j];
        let kept: Vec<_> = rel
            .lower
            .iter()
            .filter(|(m, _)| m.weighted_degree(&spec.weights) == target)
            .cloned()
            .collect();
        rel.lower = Polynomial::from_sorted(kept);
    }
    out
}

fn fresh_name(taken: &[String]) -> String {
    if !taken.iter().any(|g| g == "Z") {
        return "Z".into();
    }
    (1..)
        .map(|k| format!("Z{k}"))
        .find(|z| !taken.contains(z))
        .unwrap()
}

/// Appends a central generator `Z` of weight 1 and pads each lower-part term
/// to degree `m_i + m_j` with powers of `Z`.
pub fn rees_algebra(spec: &AlgebraSpec) -> AlgebraSpec {
    let n = spec.n();
    let mut generators = spec.generators.clone();
    generators.push(fresh_name(&spec.generators));
    let mut weights = spec.weights.clone();
    weights.push(1);
    let mut ordering = spec.ordering.clone();
    ordering.homogenizer = Some(n);
    let mut out = AlgebraSpec {
        name: format!("{}_rees", spec.name),
        generators,
        weights,
        ordering,
        relations: Default::default(),
    };
    for (&(j, i), rel) in &spec.relations {
        let target = spec.weights[i] + spec.weights[j];
        let lower = rel
            .lower
            .iter()
            .map(|(m, c)| {
                (
                    m.extended(target - m.weighted_degree(&spec.weights)),
                    c.clone(),
                )
            })
            .collect();
        out.set_relation(j, i, rel.lambda.clone(), lower);
    }
    out
}

/// Sets `Z = 0` in the relations of a Rees algebra and drops `Z`; this
/// reproduces the relations of `G(A)`.
pub fn rees_mod_z(rees: &AlgebraSpec) -> Vec<((usize, usize), Relation)> {
    let n = rees.n() - 1;
    rees.relations
        .iter()
        .map(|(&k, rel)| {
            let kept = rel
                .lower
                .iter()
                .filter(|(m, _)| m.get(n) == 0)
                .map(|(m, c)| (m.truncated(n), c.clone()))
                .collect();
            (
                k,
                Relation {
                    lambda: rel.lambda.clone(),
                    lower: Polynomial::from_sorted(kept),
                },
            )
        })
        .collect()
}

/// A validated algebra together with `G(A)` and `Ã`.
#[derive(Clone, Debug)]
pub struct GradedContext {
    pub source: Arc<Algebra>,
    pub graded: Arc<Algebra>,
    pub rees: Arc<Algebra>,
}

impl GradedContext {
    pub fn new(source: Arc<Algebra>) -> Result<Self> {
        let graded = Arc::new(Algebra::new(assoc_graded_algebra(source.spec()))?);
        let rees = Arc::new(Algebra::new(rees_algebra(source.spec()))?);
        Ok(GradedContext {
            source,
            graded,
            rees,
        })
    }

    /// `σ(f)`: the terms of top weighted degree, as an element of `G(A)`.
    pub fn sigma_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        let d = self.source.weighted_degree(f)?;
        Ok(self.graded.poly(
            f.iter()
                .filter(|(m, _)| self.source.degree(m) == d)
                .cloned(),
        ))
    }

    /// `f` homogenized to degree `q` in `Ã`.
    pub fn rees_poly(&self, f: &Polynomial, q: u32) -> Result<Polynomial> {
        let d = self.source.weighted_degree(f)?;
        if q < d {
            return Err(Error::DegreeTooLow {
                requested: q,
                degree: d,
            });
        }
        Ok(self.rees.poly(
            f.iter()
                .map(|(m, c)| (m.extended(q - self.source.degree(m)), c.clone())),
        ))
    }

    pub fn tilde_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        self.rees_poly(f, self.source.weighted_degree(f)?)
    }

    pub fn dehomogenize_poly(&self, h: &Polynomial) -> Polynomial {
        let n = self.source.n();
        self.source
            .poly(h.iter().map(|(m, c)| (m.truncated(n), c.clone())))
    }

    /// `G(L)` and `L̃` for a free module over the source algebra.
    pub fn modules(&self, base: &Arc<FreeModule>) -> Result<TransferModules> {
        let graded = Arc::new(self.graded_module(base)?);
        let rees = Arc::new(FreeModule::homogenized(base.clone(), self.rees.clone()));
        Ok(TransferModules {
            base: base.clone(),
            graded,
            rees,
        })
    }

    fn graded_module(&self, l: &FreeModule) -> Result<FreeModule> {
        match &l.ordering().kind {
            ModuleOrderKind::Schreyer { base, images, .. } => {
                let gb = Arc::new(self.graded_module(base)?);
                let ims = images
                    .iter()
                    .map(|im| Ok(gb.element(sigma_terms(base, im)?)))
                    .collect::<Result<Vec<_>>>()?;
                FreeModule::schreyer(gb, ims, l.ordering().graded)
            }
            _ => l.with_algebra(self.graded.clone()),
        }
    }
}

fn sigma_terms(
    l: &FreeModule,
    xi: &ModuleElement,
) -> Result<Vec<(ModuleMonomial, crate::Rational)>> {
    let q = l.filtered_degree(xi)?;
    Ok(xi
        .iter()
        .filter(|(m, _)| l.degree(m) == q)
        .cloned()
        .collect())
}

/// A free module `L` with its associated graded module `G(L)` and Rees
/// module `L̃`.
#[derive(Clone, Debug)]
pub struct TransferModules {
    pub base: Arc<FreeModule>,
    pub graded: Arc<FreeModule>,
    pub rees: Arc<FreeModule>,
}

impl TransferModules {
    /// `σ(ξ)`: the terms with `d(a^α)+b_i = d_fil(ξ)`.
    pub fn sigma(&self, xi: &ModuleElement) -> Result<ModuleElement> {
        Ok(self.graded.element(sigma_terms(&self.base, xi)?))
    }

    /// Each term `λ a^α e_i` becomes `λ Z^{q−d(a^α)−b_i} ã^α ẽ_i`.
    pub fn rees_element(&self, xi: &ModuleElement, q: u32) -> Result<ModuleElement> {
        let d = self.base.filtered_degree(xi)?;
        if q < d {
            return Err(Error::DegreeTooLow {
                requested: q,
                degree: d,
            });
        }
        Ok(self.rees.element(xi.iter().map(|(m, c)| {
            let z = q - self.base.degree(m);
            (
                ModuleMonomial::new(m.monomial.extended(z), m.component),
                c.clone(),
            )
        })))
    }

    /// `ξ̃`, the homogenization at `d_fil(ξ)`.
    pub fn tilde(&self, xi: &ModuleElement) -> Result<ModuleElement> {
        self.rees_element(xi, self.base.filtered_degree(xi)?)
    }

    /// Substitutes `Z = 1`.
    pub fn dehomogenize(&self, h: &ModuleElement) -> ModuleElement {
        let n = self.base.algebra().n();
        self.base.element(h.iter().map(|(m, c)| {
            (
                ModuleMonomial::new(m.monomial.truncated(n), m.component),
                c.clone(),
            )
        }))
    }
}

fn is_homogeneous(module: &FreeModule, xi: &ModuleElement) -> bool {
    let mut degrees = xi.iter().map(|(m, _)| module.degree(m));
    match degrees.next() {
        Some(d) => degrees.all(|e| e == d),
        None => false,
    }
}

/// Indices of a minimal homogeneous generating subset. Generators are visited
/// in ascending degree (stable on ties); one is kept iff it is not in the
/// submodule generated by those kept so far.
pub fn minimal_homogeneous_generators(
    module: &Arc<FreeModule>,
    gens: &[ModuleElement],
) -> Result<Vec<usize>> {
    if !module.is_graded() {
        return Err(Error::NotGraded);
    }
    for (k, g) in gens.iter().enumerate() {
        if !is_homogeneous(module, g) {
            return Err(Error::NotHomogeneous(k));
        }
    }
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&k| module.filtered_degree(&gens[k]).unwrap());
    let mut kept: Vec<usize> = Vec::new();
    let mut basis: Vec<ModuleElement> = Vec::new();
    for k in order {
        if basis.is_empty() || !module.divide(&gens[k], &basis).remainder.is_zero() {
            kept.push(k);
            let current: Vec<ModuleElement> = kept.iter().map(|&j| gens[j].clone()).collect();
            basis = buchberger(module, &current, DEFAULT_STEP_CAP)?.basis;
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Outcome of a transfer check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferReport {
    /// The transferred set passes the S-polynomial criterion.
    pub groebner: bool,
    /// Leading monomials commute with the transfer map.
    pub leading: bool,
    /// The transferred set generates the transferred submodule.
    pub generation: bool,
}

impl TransferReport {
    pub fn passed(&self) -> bool {
        self.groebner && self.leading && self.generation
    }
}

/// Mutual membership through Gröbner bases of both sides.
pub fn same_submodule(
    module: &Arc<FreeModule>,
    a: &[ModuleElement],
    b: &[ModuleElement],
) -> Result<bool> {
    let a: Vec<ModuleElement> = a.iter().filter(|x| !x.is_zero()).cloned().collect();
    let b: Vec<ModuleElement> = b.iter().filter(|x| !x.is_zero()).cloned().collect();
    if a.is_empty() || b.is_empty() {
        return Ok(a.is_empty() && b.is_empty());
    }
    let ga = buchberger(module, &a, DEFAULT_STEP_CAP)?;
    let gb = buchberger(module, &b, DEFAULT_STEP_CAP)?;
    Ok(b.iter().all(|x| ga.contains(x)) && a.iter().all(|x| gb.contains(x)))
}

/// Checks that `σ(G)` is a Gröbner basis of `G(N)` in `G(L)`, where `N` is
/// generated by `gens` and `G` is a Gröbner basis of `N` under a graded ordering.
pub fn check_transfer_sigma(
    t: &TransferModules,
    g: &[ModuleElement],
    gens: &[ModuleElement],
) -> Result<TransferReport> {
    let sg = g.iter().map(|x| t.sigma(x)).collect::<Result<Vec<_>>>()?;
    let groebner = check_groebner(&t.graded, &sg);
    let leading = g
        .iter()
        .zip(&sg)
        .all(|(x, s)| x.leading_key() == s.leading_key());
    let reference = buchberger(&t.base, gens, DEFAULT_STEP_CAP)?;
    let sref = reference
        .basis
        .iter()
        .map(|x| t.sigma(x))
        .collect::<Result<Vec<_>>>()?;
    let generation = same_submodule(&t.graded, &sg, &sref)?;
    Ok(TransferReport {
        groebner,
        leading,
        generation,
    })
}

/// Checks that `τ(G) = {g̃}` is a Gröbner basis of the Rees module `Ñ`.
pub fn check_transfer_rees(
    t: &TransferModules,
    g: &[ModuleElement],
    gens: &[ModuleElement],
) -> Result<TransferReport> {
    let tg = g.iter().map(|x| t.tilde(x)).collect::<Result<Vec<_>>>()?;
    let groebner = check_groebner(&t.rees, &tg);
    let leading = g.iter().zip(&tg).all(|(x, h)| {
        let lm = x.leading_key().unwrap();
        h.leading_key() == Some(&ModuleMonomial::new(lm.monomial.extended(0), lm.component))
    });
    let reference = buchberger(&t.base, gens, DEFAULT_STEP_CAP)?;
    let tref = reference
        .basis
        .iter()
        .map(|x| t.tilde(x))
        .collect::<Result<Vec<_>>>()?;
    let generation = same_submodule(&t.rees, &tg, &tref)?;
    Ok(TransferReport {
        groebner,
        leading,
        generation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{kxy, weyl1};
    use crate::monomial::{Monomial, MonomialOrdering, OrderKind};
    use crate::scalar::Rational;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    fn mm(v: &[u32], c: usize) -> ModuleMonomial {
        ModuleMonomial::new(m(v), c)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn twisted3() -> Arc<Algebra> {
        let mut s = AlgebraSpec::commutative(
            "ex3",
            &["a1", "a2", "a3"],
            &[2, 1, 4],
            MonomialOrdering::new(OrderKind::Grlex, 3),
        );
        s.set_relation(
            2,
            0,
            q(1),
            vec![(m(&[0, 2, 1]), q(1)), (m(&[0, 1, 0]), q(1))],
        );
        Arc::new(Algebra::new(s).unwrap())
    }

    #[test]
    fn graded_algebra_examples() {
        let g = assoc_graded_algebra(weyl1().spec());
        assert!(g.relations[&(1, 0)].lower.is_zero());
        assert!(Algebra::new(g).unwrap().is_commutative());
        let e = assoc_graded_algebra(twisted3().spec());
        assert_eq!(e.relations[&(2, 0)].lower.terms(), &[(m(&[0, 2, 1]), q(1))]);
        let kg = assoc_graded_algebra(kxy().spec());
        assert_eq!(kg.relations, kxy().spec().relations);
    }

    #[test]
    fn rees_algebra_examples() {
        let r = rees_algebra(weyl1().spec());
        assert_eq!(r.generators, ["x", "d", "Z"]);
        assert_eq!(r.relations[&(1, 0)].lower.terms(), &[(m(&[0, 0, 2]), q(1))]);
        let e = rees_algebra(twisted3().spec());
        let lower = &e.relations[&(2, 0)].lower;
        assert_eq!(
            lower.terms(),
            &[(m(&[0, 2, 1, 0]), q(1)), (m(&[0, 1, 0, 5]), q(1))]
        );
        assert!(Algebra::new(e.clone()).is_ok());
        let g = assoc_graded_algebra(twisted3().spec());
        for (k, rel) in rees_mod_z(&e) {
            assert_eq!(g.relations[&k], rel);
        }
        assert!(Algebra::new(rees_algebra(kxy().spec()))
            .unwrap()
            .is_commutative());
    }

    #[test]
    fn element_maps() {
        let ctx = GradedContext::new(weyl1()).unwrap();
        let l = Arc::new(FreeModule::graded_top(weyl1(), vec![0]));
        let t = ctx.modules(&l).unwrap();
        let f = l.element([(mm(&[1, 1], 0), q(1)), (mm(&[0, 0], 0), q(1))]);
        assert_eq!(
            t.sigma(&f).unwrap(),
            t.graded.element([(mm(&[1, 1], 0), q(1))])
        );
        let h2 = t.rees_element(&f, 2).unwrap();
        assert_eq!(
            h2,
            t.rees
                .element([(mm(&[1, 1, 0], 0), q(1)), (mm(&[0, 0, 2], 0), q(1))])
        );
        let h3 = t.rees_element(&f, 3).unwrap();
        let z = Polynomial::monomial(m(&[0, 0, 1]), q(1));
        assert_eq!(h3, t.rees.left_mul(&z, &h2));
        assert_eq!(t.dehomogenize(&h3), f);
        assert!(matches!(
            t.rees_element(&f, 1),
            Err(Error::DegreeTooLow {
                requested: 1,
                degree: 2
            })
        ));
        let c = t
            .rees
            .element([(mm(&[0, 0, 3], 0), q(1)), (mm(&[0, 0, 1], 0), q(-1))]);
        assert!(t.dehomogenize(&c).is_zero());
        assert!(t.dehomogenize(&ModuleElement::zero()).is_zero());

        let l2 = Arc::new(FreeModule::graded_top(weyl1(), vec![0, 1]));
        let t2 = ctx.modules(&l2).unwrap();
        let xi = l2.element([(mm(&[2, 0], 0), q(1)), (mm(&[1, 0], 1), q(1))]);
        assert_eq!(t2.sigma(&xi).unwrap().len(), 2);
    }

    #[test]
    fn minimal_generators_examples() {
        let l = Arc::new(FreeModule::graded_top(kxy(), vec![0]));
        let x = l.element([(mm(&[1, 0], 0), q(1))]);
        let x2 = l.element([(mm(&[2, 0], 0), q(1))]);
        let y = l.element([(mm(&[0, 1], 0), q(1))]);
        assert_eq!(
            minimal_homogeneous_generators(&l, &[x.clone(), x2, y.clone()]).unwrap(),
            vec![0, 2]
        );
        assert_eq!(
            minimal_homogeneous_generators(&l, &[x.clone(), y.clone()]).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            minimal_homogeneous_generators(&l, &[x.clone(), x.clone()]).unwrap(),
            vec![0]
        );
        let mixed = l.element([(mm(&[2, 0], 0), q(1)), (mm(&[0, 1], 0), q(1))]);
        assert_eq!(
            minimal_homogeneous_generators(&l, &[mixed]),
            Err(Error::NotHomogeneous(0))
        );
    }

    #[test]
    fn transfer_checks_pass_and_catch_mutation() {
        let ctx = GradedContext::new(weyl1()).unwrap();
        let l = Arc::new(FreeModule::graded_top(weyl1(), vec![0]));
        let t = ctx.modules(&l).unwrap();
        // x^2 e and x d e + 1 e
        let gens = vec![
            l.element([(mm(&[2, 0], 0), q(1))]),
            l.element([(mm(&[1, 1], 0), q(1)), (mm(&[0, 0], 0), q(1))]),
        ];
        let g = buchberger(&l, &gens, DEFAULT_STEP_CAP)
            .unwrap()
            .reduced_basis();
        assert!(check_transfer_sigma(&t, &g, &gens).unwrap().passed());
        assert!(check_transfer_rees(&t, &g, &gens).unwrap().passed());
        if g.len() > 1 {
            let cut = &g[1..];
            assert!(!check_transfer_sigma(&t, cut, &gens).unwrap().passed());
            assert!(!check_transfer_rees(&t, cut, &gens).unwrap().passed());
        }
    }
}
