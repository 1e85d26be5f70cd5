//! Minimal F-bases of quotient modules and minimal standard bases of
//! submodules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{minimal_homogeneous_generators, GradedContext};
use crate::groebner::buchberger;
use crate::module::{FreeModule, ModuleElement};
use crate::scalar::Rational;

/// `M = L₀/N` after eliminating redundant basis vectors.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub ambient: Arc<FreeModule>,
    pub relations: Vec<ModuleElement>,
    /// Surviving components of `L₀`, ascending.
    pub retained: Vec<usize>,
    /// Relations after elimination, still indexed by `L₀` components.
    pub reduced: Vec<ModuleElement>,
}

impl QuotientPresentation {
    /// `L₀'`: the free module on the retained components.
    pub fn restricted_module(&self) -> Result<FreeModule> {
        self.ambient.restrict(&self.retained)
    }

    /// The reduced relations rewritten in `module` (as returned by
    /// [`Self::restricted_module`]).
    pub fn restricted_relations(&self, module: &FreeModule) -> Vec<ModuleElement> {
        let mut map = vec![None; self.ambient.rank()];
        for (k, &c) in self.retained.iter().enumerate() {
            map[c] = Some(k);
        }
        self.reduced
            .iter()
            .map(|v| module.reindex(v, &map))
            .collect()
    }
}

/// Position `(i, j, c)` where relation `j` has the nonzero constant `c` in
/// component `i` with `b_i = d_fil(v_j)`; least `i`, then least `j`.
pub fn find_pivot(
    module: &FreeModule,
    retained: &[usize],
    v: &[ModuleElement],
) -> Option<(usize, usize, Rational)> {
    for &i in retained {
        for (j, vj) in v.iter().enumerate() {
            let Ok(d) = module.filtered_degree(vj) else {
                continue;
            };
            if module.shifts()[i] != d {
                continue;
            }
            if let Some(c) = module.component_poly(vj, i).as_constant() {
                if !c.is_zero() {
                    return Some((i, j, c));
                }
            }
        }
    }
    None
}

/// Eliminates components of `L₀` using unit pivots of a standard basis `w` of
/// `N ⊆ L₀`.
pub fn minimize_presentation(
    l0: &Arc<FreeModule>,
    w: &[ModuleElement],
) -> Result<QuotientPresentation> {
    if w.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroElement);
    }
    let mut retained: Vec<usize> = (0..l0.rank()).collect();
    let mut v: Vec<ModuleElement> = w.to_vec();
    while let Some((i, j, c)) = find_pivot(l0, &retained, &v) {
        let pivot = v.remove(j);
        let inv = c.inverse()?;
        v = v
            .into_iter()
            .map(|vl| {
                let f = l0.component_poly(&vl, i);
                if f.is_zero() {
                    vl
                } else {
                    l0.sub(&vl, &l0.left_mul(&f.scale(&inv), &pivot))
                }
            })
            .filter(|vl| !vl.is_zero())
            .collect();
        retained.retain(|&k| k != i);
    }
    Ok(QuotientPresentation {
        ambient: l0.clone(),
        relations: w.to_vec(),
        retained,
        reduced: v,
    })
}

/// A Gröbner basis of `⟨Θ⟩`, a minimal homogeneous
/// generating subset of its principal symbols, and the matching elements.
pub fn minimal_standard_basis(
    l: &Arc<FreeModule>,
    theta: &[ModuleElement],
    step_cap: usize,
) -> Result<Vec<ModuleElement>> {
    if !l.is_graded() {
        return Err(Error::NotGraded);
    }
    let u = buchberger(l, theta, step_cap)?.reduced_basis();
    let ctx = GradedContext::new(l.algebra().clone())?;
    let t = ctx.modules(l)?;
    let sig = u.iter().map(|x| t.sigma(x)).collect::<Result<Vec<_>>>()?;
    let keep = minimal_homogeneous_generators(&t.graded, &sig)?;
    Ok(keep.into_iter().map(|k| u[k].clone()).collect())
}

/// Sorted filtered degrees of a basis.
pub fn degree_multiset(l: &FreeModule, basis: &[ModuleElement]) -> Result<Vec<u32>> {
    let mut d = basis
        .iter()
        .map(|x| l.filtered_degree(x))
        .collect::<Result<Vec<_>>>()?;
    d.sort_unstable();
    Ok(d)
}

/// True iff all runs share cardinality and the multiset of filtered degrees.
pub fn check_basis_multiset_invariance(
    l: &FreeModule,
    runs: &[Vec<ModuleElement>],
) -> Result<bool> {
    let mut sets = runs.iter().map(|r| degree_multiset(l, r));
    let Some(first) = sets.next() else {
        return Ok(true);
    };
    let first = first?;
    for s in sets {
        if s? != first {
            return Ok(false);
        }
    }
    Ok(true)
}
