//! Syzygies and minimal filtered free resolutions.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::graded::{minimal_homogeneous_generators, same_submodule, GradedContext};
use crate::groebner::{buchberger, GroebnerRecord, DEFAULT_STEP_CAP};
use crate::minimal::{minimal_standard_basis, minimize_presentation, QuotientPresentation};
use crate::module::{FreeModule, ModuleElement};
use crate::terms::Polynomial;

/// Syzygy elements together with the Schreyer module they live in.
#[derive(Clone, Debug)]
pub struct Syzygies {
    pub module: Arc<FreeModule>,
    pub elements: Vec<ModuleElement>,
}

fn check_tracking(rec: &GroebnerRecord) -> Result<()> {
    let (m, t) = (rec.inputs.len(), rec.basis.len());
    let ok = rec.u.len() == m
        && rec.u.iter().all(|r| r.len() == t)
        && rec.v.len() == t
        && rec.v.iter().all(|r| r.len() == m)
        && rec
            .seeds
            .iter()
            .all(|s| s.quotients.len() == t && s.i < t && s.j < t);
    if ok {
        Ok(())
    } else {
        Err(Error::MissingTracking)
    }
}

/// Coordinate rows `s_ij = Σ q_k ε_k − c_i a^{m_i} ε_i + c_j a^{m_j} ε_j`
/// over the raw basis.
fn schreyer_rows(rec: &GroebnerRecord) -> Vec<Vec<Polynomial>> {
    let alg = rec.module.algebra();
    rec.seeds
        .iter()
        .map(|s| {
            let mut row = s.quotients.clone();
            let ti = Polynomial::monomial(s.mi.clone(), s.ci.clone());
            let tj = Polynomial::monomial(s.mj.clone(), s.cj.clone());
            row[s.i] = alg.sub(&row[s.i], &ti);
            row[s.j] = alg.add(&row[s.j], &tj);
            row
        })
        .collect()
}

/// The Schreyer syzygies of the raw basis of `rec`, a Gröbner basis of its
/// syzygy module under the induced Schreyer ordering.
pub fn schreyer_syzygies(rec: &GroebnerRecord) -> Result<Syzygies> {
    check_tracking(rec)?;
    let module = Arc::new(FreeModule::schreyer(
        rec.module.clone(),
        rec.basis.clone(),
        rec.module.is_graded(),
    )?);
    let elements = schreyer_rows(rec)
        .iter()
        .map(|r| module.from_components(r))
        .filter(|x| !x.is_zero())
        .collect();
    Ok(Syzygies { module, elements })
}

fn row_times_matrix(
    alg: &Algebra,
    row: &[Polynomial],
    mat: &[Vec<Polynomial>],
    cols: usize,
) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(); cols];
    for (a, mrow) in row.iter().zip(mat) {
        if a.is_zero() {
            continue;
        }
        for (o, b) in out.iter_mut().zip(mrow) {
            if !b.is_zero() {
                *o = alg.add(o, &alg.mul(a, b));
            }
        }
    }
    out
}

/// Generators of the syzygy module of the inputs of `rec`: the rows `S_k V`
/// and the rows of `UV − E`, zero rows dropped.
pub fn syzygy_generators(rec: &GroebnerRecord) -> Result<Syzygies> {
    check_tracking(rec)?;
    let alg = rec.module.algebra().clone();
    let m = rec.inputs.len();
    let module = Arc::new(FreeModule::schreyer(
        rec.module.clone(),
        rec.inputs.clone(),
        rec.module.is_graded(),
    )?);
    let mut elements = Vec::new();
    for s in schreyer_rows(rec) {
        elements.push(module.from_components(&row_times_matrix(&alg, &s, &rec.v, m)));
    }
    for (l, urow) in rec.u.iter().enumerate() {
        let mut d = row_times_matrix(&alg, urow, &rec.v, m);
        d[l] = alg.sub(&d[l], &alg.one());
        elements.push(module.from_components(&d));
    }
    elements.retain(|x| !x.is_zero());
    Ok(Syzygies { module, elements })
}

/// A chain `L_d → ⋯ → L_1 → L_0` presenting `M = coker φ_1`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub algebra: Arc<Algebra>,
    pub module_name: String,
    pub presentation: Option<QuotientPresentation>,
    /// Shifts of `L_0, …, L_d`.
    pub shifts: Vec<Vec<u32>>,
    /// `maps[k]` is the matrix of `φ_{k+1}`: one row per basis vector of
    /// `L_{k+1}`, one column per basis vector of `L_k`.
    pub maps: Vec<Vec<Vec<Polynomial>>>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }
}

/// Gröbner basis, minimal presentation, then alternately a
/// minimal standard basis and its syzygies until the syzygies vanish.
pub fn minimal_filtered_resolution(
    l0: &Arc<FreeModule>,
    theta: &[ModuleElement],
    max_length: usize,
    step_cap: usize,
    module_name: &str,
) -> Result<Resolution> {
    if !l0.is_graded() {
        return Err(Error::NotGraded);
    }
    let rec = buchberger(l0, theta, step_cap)?;
    let pres = minimize_presentation(l0, &rec.reduced_basis())?;
    let mut current = Arc::new(pres.restricted_module()?);
    let mut gens = pres.restricted_relations(&current);
    let mut shifts = vec![current.shifts().to_vec()];
    let mut maps = Vec::new();
    while !gens.is_empty() {
        if maps.len() >= max_length {
            return Err(Error::MaxLengthExceeded(max_length));
        }
        let w = minimal_standard_basis(&current, &gens, step_cap)?;
        maps.push(w.iter().map(|x| current.components(x)).collect());
        let rec = buchberger(&current, &w, step_cap)?;
        let syz = syzygy_generators(&rec)?;
        shifts.push(syz.module.shifts().to_vec());
        gens = syz.elements;
        current = syz.module;
    }
    Ok(Resolution {
        algebra: l0.algebra().clone(),
        module_name: module_name.to_string(),
        presentation: Some(pres),
        shifts,
        maps,
    })
}

/// Outcome of [`verify_resolution`]; `failures` names each failed check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub composition: bool,
    pub exactness: bool,
    pub minimality: bool,
    pub shifts: bool,
    pub length: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.composition && self.exactness && self.minimality && self.shifts && self.length
    }
}

fn check_shape(res: &Resolution) -> Result<()> {
    if res.shifts.len() != res.maps.len() + 1 {
        return Err(Error::Input(format!(
            "{} levels of shifts for {} maps",
            res.shifts.len(),
            res.maps.len()
        )));
    }
    for (k, map) in res.maps.iter().enumerate() {
        let (rows, cols) = (res.shifts[k + 1].len(), res.shifts[k].len());
        if map.len() != rows || map.iter().any(|r| r.len() != cols) {
            return Err(Error::Input(format!(
                "map {} is not {rows} x {cols}",
                k + 1
            )));
        }
        for p in map.iter().flatten() {
            if p.iter().any(|(m, _)| m.len() != res.algebra.n()) {
                return Err(Error::Input(format!(
                    "map {} has an entry of the wrong arity",
                    k + 1
                )));
            }
        }
    }
    Ok(())
}

/// Syzygy coordinates (over all rows, zero rows included) of the rows of `map`.
fn row_syzygies(level: &Arc<FreeModule>, rows: &[ModuleElement]) -> Result<Vec<Vec<Polynomial>>> {
    let alg = level.algebra();
    let nonzero: Vec<usize> = (0..rows.len()).filter(|&k| !rows[k].is_zero()).collect();
    let mut out = Vec::new();
    for k in 0..rows.len() {
        if rows[k].is_zero() {
            let mut v = vec![Polynomial::zero(); rows.len()];
            v[k] = alg.one();
            out.push(v);
        }
    }
    if nonzero.is_empty() {
        return Ok(out);
    }
    let gens: Vec<ModuleElement> = nonzero.iter().map(|&k| rows[k].clone()).collect();
    let syz = syzygy_generators(&buchberger(level, &gens, DEFAULT_STEP_CAP)?)?;
    for e in &syz.elements {
        let comps = syz.module.components(e);
        let mut v = vec![Polynomial::zero(); rows.len()];
        for (p, &k) in comps.into_iter().zip(&nonzero) {
            v[k] = p;
        }
        out.push(v);
    }
    Ok(out)
}

/// Checks composition, exactness, minimality, shift consistency and the
/// length bound. Every level uses graded TOP with the recorded shifts. When
/// the presentation is known, exactness also covers `L₁ → L₀ → M → 0`.
pub fn verify_resolution(res: &Resolution) -> Result<VerificationReport> {
    check_shape(res)?;
    let alg = res.algebra.clone();
    let levels: Vec<Arc<FreeModule>> = res
        .shifts
        .iter()
        .map(|s| Arc::new(FreeModule::graded_top(alg.clone(), s.clone())))
        .collect();
    let rows: Vec<Vec<ModuleElement>> = res
        .maps
        .iter()
        .enumerate()
        .map(|(k, map)| map.iter().map(|r| levels[k].from_components(r)).collect())
        .collect();
    let mut report = VerificationReport {
        composition: true,
        exactness: true,
        minimality: true,
        shifts: true,
        length: true,
        failures: Vec::new(),
    };

    for k in 0..res.maps.len().saturating_sub(1) {
        for (r, row) in res.maps[k + 1].iter().enumerate() {
            if !levels[k].combine(row, &rows[k]).is_zero() {
                report.composition = false;
                report.failures.push(format!(
                    "composition: row {} of map {} does not vanish",
                    r + 1,
                    k + 2
                ));
            }
        }
    }

    for k in 0..res.maps.len() {
        let syz = row_syzygies(&levels[k], &rows[k])?;
        let next: Vec<ModuleElement> = match rows.get(k + 1) {
            Some(r) => r.iter().filter(|x| !x.is_zero()).cloned().collect(),
            None => Vec::new(),
        };
        let source = &levels[k + 1];
        let syz: Vec<ModuleElement> = syz
            .iter()
            .map(|v| source.from_components(v))
            .filter(|x| !x.is_zero())
            .collect();
        let exact = if syz.is_empty() {
            true
        } else if next.is_empty() {
            false
        } else {
            let rec = buchberger(source, &next, DEFAULT_STEP_CAP)?;
            syz.iter().all(|x| rec.contains(x))
        };
        if !exact {
            report.exactness = false;
            report.failures.push(format!(
                "exactness: kernel of map {} is not the image of the next map",
                k + 1
            ));
        }
    }

    if let Some(p) = &res.presentation {
        let l0 = p.restricted_module()?;
        let rel: Vec<ModuleElement> = p
            .restricted_relations(&l0)
            .iter()
            .map(|x| levels[0].from_components(&l0.components(x)))
            .collect();
        let first = rows.first().map_or(&[][..], Vec::as_slice);
        if l0.shifts() != res.shifts[0].as_slice() || !same_submodule(&levels[0], first, &rel)? {
            report.exactness = false;
            report
                .failures
                .push("exactness: the first map does not present the module".to_string());
        }
    }

    let ctx = GradedContext::new(alg.clone())?;
    for (k, map) in res.maps.iter().enumerate() {
        for (r, row) in map.iter().enumerate() {
            let source_shift = res.shifts[k + 1][r];
            for (j, entry) in row.iter().enumerate() {
                let unit = entry.as_constant().is_some_and(|c| !c.is_zero());
                if unit && res.shifts[k][j] == source_shift {
                    report.minimality = false;
                    report.failures.push(format!(
                        "minimality: map {} row {} has a unit entry in column {} of equal shift",
                        k + 1,
                        r + 1,
                        j + 1
                    ));
                }
            }
            match levels[k].filtered_degree(&rows[k][r]) {
                Ok(d) if d == source_shift => {}
                Ok(d) => {
                    report.shifts = false;
                    report.failures.push(format!(
                        "shifts: map {} row {} has filtered degree {d}, shift {source_shift}",
                        k + 1,
                        r + 1
                    ));
                }
                Err(_) => {
                    report.shifts = false;
                    report
                        .failures
                        .push(format!("shifts: map {} row {} is zero", k + 1, r + 1));
                }
            }
        }
        if rows[k].iter().any(|x| x.is_zero()) {
            report.minimality = false;
            report
                .failures
                .push(format!("minimality: map {} has a zero row", k + 1));
            continue;
        }
        let t = ctx.modules(&levels[k])?;
        let sig = rows[k]
            .iter()
            .map(|x| t.sigma(x))
            .collect::<Result<Vec<_>>>()?;
        if minimal_homogeneous_generators(&t.graded, &sig)?.len() != sig.len() {
            report.minimality = false;
            report.failures.push(format!(
                "minimality: the rows of map {} are not a minimal generating set",
                k + 1
            ));
        }
    }

    if res.maps.len() > alg.n() {
        report.length = false;
        report.failures.push(format!(
            "length: {} exceeds the generator count {}",
            res.maps.len(),
            alg.n()
        ));
    }
    Ok(report)
}
