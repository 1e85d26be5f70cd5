//! Left S-polynomials, Buchberger completion with representation tracking,
//! normal forms and Gröbner-basis checks.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{monomial_divides, FreeModule, ModuleElement, ModuleMonomial};
use crate::monomial::Monomial;
use crate::scalar::Rational;
use crate::terms::{Accumulator, Polynomial};

pub const DEFAULT_STEP_CAP: usize = 100_000;

/// One treated S-pair: `ci a^mi g_i − cj a^mj g_j = Σ_k quotients[k] g_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygySeed {
    pub i: usize,
    pub j: usize,
    pub gamma: ModuleMonomial,
    pub ci: Rational,
    pub mi: Monomial,
    pub cj: Rational,
    pub mj: Monomial,
    /// Indexed by the raw basis, padded to its final length.
    pub quotients: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct GroebnerRecord {
    pub module: Arc<FreeModule>,
    pub inputs: Vec<ModuleElement>,
    /// The raw, monic basis in the order elements were created.
    pub basis: Vec<ModuleElement>,
    /// `inputs[l] = Σ_k u[l][k] basis[k]`.
    pub u: Vec<Vec<Polynomial>>,
    /// `basis[k] = Σ_l v[k][l] inputs[l]`.
    pub v: Vec<Vec<Polynomial>>,
    pub seeds: Vec<SyzygySeed>,
}

impl GroebnerRecord {
    /// Interreduced view: redundant leading monomials dropped, tails reduced,
    /// monic. The raw basis stays the reference for syzygy indices.
    pub fn reduced_basis(&self) -> Vec<ModuleElement> {
        reduce_basis(&self.module, &self.basis)
    }

    pub fn normal_form(&self, xi: &ModuleElement) -> ModuleElement {
        self.module.divide(xi, &self.basis).remainder
    }

    pub fn contains(&self, xi: &ModuleElement) -> bool {
        self.normal_form(xi).is_zero()
    }
}

struct Lifted {
    gamma: ModuleMonomial,
    mi: Monomial,
    mj: Monomial,
}

fn lift(a: &ModuleMonomial, b: &ModuleMonomial) -> Option<Lifted> {
    if a.component != b.component {
        return None;
    }
    let gamma = ModuleMonomial::new(a.monomial.lcm(&b.monomial), a.component);
    let mi = gamma.monomial.checked_div(&a.monomial)?;
    let mj = gamma.monomial.checked_div(&b.monomial)?;
    Some(Lifted { gamma, mi, mj })
}

/// Pieces of an S-polynomial: `(ci, a^mi ξ_i, cj, a^mj ξ_j)`.
fn s_parts(
    module: &FreeModule,
    xi: &ModuleElement,
    xj: &ModuleElement,
    l: &Lifted,
) -> (Rational, ModuleElement, Rational, ModuleElement) {
    let ti = module.mul_term(&Rational::one(), &l.mi, xi);
    let tj = module.mul_term(&Rational::one(), &l.mj, xj);
    let ci = ti
        .leading_coeff()
        .expect("nonzero")
        .inverse()
        .expect("nonzero");
    let cj = tj
        .leading_coeff()
        .expect("nonzero")
        .inverse()
        .expect("nonzero");
    (ci, ti, cj, tj)
}

/// The left S-polynomial; zero when the leading components differ.
pub fn s_poly(
    module: &FreeModule,
    xi: &ModuleElement,
    xj: &ModuleElement,
) -> Result<ModuleElement> {
    let (a, b) = match (xi.leading_key(), xj.leading_key()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroElement),
    };
    let Some(l) = lift(a, b) else {
        return Ok(ModuleElement::zero());
    };
    let (ci, ti, cj, tj) = s_parts(module, xi, xj, &l);
    Ok(module.add_scaled(&ti.scale(&ci), &tj, &-&cj))
}

pub fn normal_form(
    module: &FreeModule,
    xi: &ModuleElement,
    basis: &[ModuleElement],
) -> ModuleElement {
    module.divide(xi, basis).remainder
}

/// True iff every S-polynomial of `g` reduces to zero by `g`.
pub fn check_groebner(module: &FreeModule, g: &[ModuleElement]) -> bool {
    let g: Vec<ModuleElement> = g.iter().filter(|x| !x.is_zero()).cloned().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = s_poly(module, &g[i], &g[j]).expect("nonzero inputs");
            if !s.is_zero() && !normal_form(module, &s, &g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// `Σ c · a^m · row` over `parts`, one accumulator per column.
fn combine_rows(
    module: &FreeModule,
    width: usize,
    parts: &[(Rational, &Monomial, &[Polynomial])],
) -> Vec<Polynomial> {
    let alg = module.algebra();
    (0..width)
        .map(|col| {
            let mut acc = Accumulator::new();
            for (c, m, row) in parts {
                for (b, cb) in row[col].iter() {
                    acc.add_terms(&alg.mul_mono(m, b), &(c * cb));
                }
            }
            acc.finish(|x, y| alg.cmp(x, y))
        })
        .collect()
}

/// Buchberger completion with tracking. Pairs are treated smallest lcm first (ties by
/// index pair); only pairs with equal leading components are formed.
pub fn buchberger(
    module: &Arc<FreeModule>,
    inputs: &[ModuleElement],
    step_cap: usize,
) -> Result<GroebnerRecord> {
    if inputs.is_empty() {
        return Err(Error::Input(
            "buchberger needs at least one generator".into(),
        ));
    }
    let alg = module.algebra().clone();
    let m = inputs.len();
    let mut basis = Vec::with_capacity(m);
    let mut v: Vec<Vec<Polynomial>> = Vec::with_capacity(m);
    for (l, xi) in inputs.iter().enumerate() {
        for (mm, _) in xi.iter() {
            module.check_monomial(mm)?;
        }
        let lc = xi.leading_coeff().ok_or(Error::ZeroElement)?.inverse()?;
        basis.push(xi.scale(&lc));
        let mut row = vec![Polynomial::zero(); m];
        row[l] = alg.constant(lc);
        v.push(row);
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let add_pairs = |pending: &mut Vec<(usize, usize)>, basis: &[ModuleElement], k: usize| {
        let ck = basis[k].leading_key().unwrap().component;
        for (i, b) in basis[..k].iter().enumerate() {
            if b.leading_key().unwrap().component == ck {
                pending.push((i, k));
            }
        }
    };
    for k in 0..basis.len() {
        add_pairs(&mut pending, &basis, k);
    }
    let mut raw_seeds: Vec<SyzygySeed> = Vec::new();
    let mut steps = 0usize;
    while !pending.is_empty() {
        if steps >= step_cap {
            return Err(Error::StepCapExceeded(step_cap));
        }
        steps += 1;
        let pick = (0..pending.len())
            .min_by(|&x, &y| {
                let (a, b) = pending[x];
                let (c, d) = pending[y];
                let ga = lift(
                    basis[a].leading_key().unwrap(),
                    basis[b].leading_key().unwrap(),
                )
                .unwrap()
                .gamma;
                let gc = lift(
                    basis[c].leading_key().unwrap(),
                    basis[d].leading_key().unwrap(),
                )
                .unwrap()
                .gamma;
                module.cmp(&ga, &gc).then((a, b).cmp(&(c, d)))
            })
            .unwrap();
        let (i, j) = pending.remove(pick);
        let l = lift(
            basis[i].leading_key().unwrap(),
            basis[j].leading_key().unwrap(),
        )
        .unwrap();
        let (ci, ti, cj, tj) = s_parts(module, &basis[i], &basis[j], &l);
        let s = module.add_scaled(&ti.scale(&ci), &tj, &-&cj);
        let div = module.divide(&s, &basis);
        let mut quotients = div.quotients;
        if !div.remainder.is_zero() {
            let lc = div.remainder.leading_coeff().unwrap().clone();
            let inv = lc.inverse()?;
            let mut parts = vec![
                (&ci * &inv, &l.mi, v[i].as_slice()),
                (-&(&cj * &inv), &l.mj, v[j].as_slice()),
            ];
            for (k, qk) in quotients.iter().enumerate() {
                for (mono, c) in qk.iter() {
                    parts.push((-&(c * &inv), mono, v[k].as_slice()));
                }
            }
            let row = combine_rows(module, m, &parts);
            basis.push(div.remainder.scale(&inv));
            v.push(row);
            quotients.push(alg.constant(lc));
            add_pairs(&mut pending, &basis, basis.len() - 1);
        }
        raw_seeds.push(SyzygySeed {
            i,
            j,
            gamma: l.gamma,
            ci,
            mi: l.mi,
            cj,
            mj: l.mj,
            quotients,
        });
    }
    let t = basis.len();
    for seed in &mut raw_seeds {
        seed.quotients.resize(t, Polynomial::zero());
    }
    let mut u = Vec::with_capacity(m);
    for xi in inputs {
        let d = module.divide(xi, &basis);
        debug_assert!(d.remainder.is_zero());
        u.push(d.quotients);
    }
    Ok(GroebnerRecord {
        module: module.clone(),
        inputs: inputs.to_vec(),
        basis,
        u,
        v,
        seeds: raw_seeds,
    })
}

/// Drops elements whose leading monomial is divisible by another's (the
/// earlier one wins on equality), reduces tails and makes monic.
pub fn reduce_basis(module: &FreeModule, g: &[ModuleElement]) -> Vec<ModuleElement> {
    let g: Vec<&ModuleElement> = g.iter().filter(|x| !x.is_zero()).collect();
    let mut keep: Vec<ModuleElement> = Vec::new();
    for (k, x) in g.iter().enumerate() {
        let lm = x.leading_key().unwrap();
        let redundant = g.iter().enumerate().any(|(j, y)| {
            let ly = y.leading_key().unwrap();
            j != k && monomial_divides(ly, lm).is_some() && (ly != lm || j < k)
        });
        if !redundant {
            keep.push((*x).clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<ModuleElement> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, x)| x.clone())
            .collect();
        let lead = ModuleElement::from_sorted(vec![keep[k].leading().unwrap().clone()]);
        let tail = normal_form(module, &keep[k].tail(), &others);
        out.push(module.add(&lead, &tail).monic());
    }
    out.sort_by(|a, b| module.cmp(a.leading_key().unwrap(), b.leading_key().unwrap()));
    out
}
