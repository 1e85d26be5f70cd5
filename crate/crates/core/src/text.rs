//! Line-oriented text formats for algebras, modules, polynomials and
//! resolutions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraSpec};
use crate::error::{Error, Result};
use crate::module::{default_priority, FreeModule, ModuleElement, ModuleMonomial, ModuleOrderKind};
use crate::monomial::{Monomial, MonomialOrdering, OrderKind};
use crate::resolution::Resolution;
use crate::scalar::Rational;
use crate::terms::Polynomial;

const RESERVED: &[&str] = &["priority", "unweighted", "homog", "over", "graded"];

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap().trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

fn is_identifier(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

fn is_basis_name(s: &str) -> bool {
    s.len() > 1 && s.starts_with('e') && s[1..].chars().all(|c| c.is_ascii_digit())
}

/// Splits at `+`/`-` outside parentheses; each piece keeps its sign.
fn split_signed(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut neg = false;
    let mut cur = String::new();
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.ends_with('^') => {
                if !cur.is_empty() {
                    out.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                }
                if ch == '-' {
                    neg = !neg;
                }
            }
            _ => cur.push(ch),
        }
    }
    out.push((neg, cur));
    out
}

fn parse_term(gens: &[String], body: &str) -> std::result::Result<(Monomial, Rational), String> {
    if body.is_empty() {
        return Err("empty term".into());
    }
    let mut exps = vec![0u32; gens.len()];
    let mut coeff = Rational::one();
    let mut last: Option<usize> = None;
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(format!("empty factor in `{body}`"));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            let r: Rational = factor
                .parse()
                .map_err(|_| format!("bad coefficient `{factor}`"))?;
            coeff = &coeff * &r;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u32>()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?,
            ),
            None => (factor, 1),
        };
        let g = gens
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| format!("unknown generator `{name}`"))?;
        if last.is_some_and(|l| l >= g) {
            return Err(format!("generators out of PBW order in `{body}`"));
        }
        last = Some(g);
        exps[g] = e;
    }
    Ok((Monomial::new(exps), coeff))
}

fn parse_terms(gens: &[String], s: &str) -> std::result::Result<Vec<(Monomial, Rational)>, String> {
    if s.contains('(') || s.contains(')') {
        return Err(format!("unexpected parenthesis in `{s}`"));
    }
    let mut out = Vec::new();
    for (neg, body) in split_signed(s) {
        let (m, c) = parse_term(gens, &body)?;
        out.push((m, if neg { -c } else { c }));
    }
    Ok(out)
}

fn spec_cmp<'a>(spec: &'a AlgebraSpec) -> impl Fn(&Monomial, &Monomial) -> Ordering + 'a {
    move |a, b| spec.ordering.compare(&spec.weights, a, b)
}

/// Parses the polynomial syntax `±c*g1^e1*…*gn^en + …` over `spec`.
pub fn parse_polynomial(spec: &AlgebraSpec, s: &str) -> Result<Polynomial> {
    let terms = parse_terms(&spec.generators, s).map_err(Error::Input)?;
    Ok(Polynomial::from_unsorted(terms, spec_cmp(spec)))
}

fn format_monomial(gens: &[String], m: &Monomial) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                gens[i].clone()
            } else {
                format!("{}^{e}", gens[i])
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn format_term(gens: &[String], m: &Monomial, c: &Rational) -> String {
    let a = c.abs();
    if m.is_one() {
        a.to_string()
    } else if a.is_one() {
        format_monomial(gens, m)
    } else {
        format!("{a}*{}", format_monomial(gens, m))
    }
}

/// Descending terms with canonical coefficients, e.g. `x*d + 1`.
pub fn format_polynomial(spec: &AlgebraSpec, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.iter().enumerate() {
        let t = format_term(&spec.generators, m, c);
        match (k, c.is_negative()) {
            (0, true) => out.push_str(&format!("-{t}")),
            (0, false) => out.push_str(&t),
            (_, true) => out.push_str(&format!(" - {t}")),
            (_, false) => out.push_str(&format!(" + {t}")),
        }
    }
    out
}

fn parse_order(spec_gens: &[String], tokens: &[&str], line: usize) -> Result<MonomialOrdering> {
    let n = spec_gens.len();
    let kind = match tokens.first() {
        Some(&"lex") => OrderKind::Lex,
        Some(&"grlex") => OrderKind::Grlex,
        Some(&"grevlex") => OrderKind::Grevlex,
        _ => return Err(Error::parse(line, "order must be lex, grlex or grevlex")),
    };
    let gen = |name: &str| {
        spec_gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::parse(line, format!("unknown generator `{name}`")))
    };
    let mut ordering = MonomialOrdering::new(kind, n);
    let mut priority = None;
    let mut k = 1;
    while k < tokens.len() {
        match tokens[k] {
            "priority" => {
                let mut p = Vec::new();
                k += 1;
                while k < tokens.len() && !RESERVED.contains(&tokens[k]) {
                    p.push(gen(tokens[k])?);
                    k += 1;
                }
                priority = Some(p);
                continue;
            }
            "unweighted" => ordering.weighted = false,
            "homog" => {
                k += 1;
                let z = tokens
                    .get(k)
                    .ok_or_else(|| Error::parse(line, "homog needs a generator"))?;
                ordering.homogenizer = Some(gen(z)?);
            }
            t => {
                return Err(Error::parse(
                    line,
                    format!("unexpected `{t}` in order line"),
                ))
            }
        }
        k += 1;
    }
    ordering.priority = match priority {
        Some(p) => p,
        None => (0..n)
            .filter(|&i| Some(i) != ordering.homogenizer)
            .collect(),
    };
    let mut sorted = ordering.priority.clone();
    sorted.sort_unstable();
    let expected: Vec<usize> = (0..n)
        .filter(|&i| Some(i) != ordering.homogenizer)
        .collect();
    if sorted != expected {
        return Err(Error::parse(
            line,
            "priority must list every generator once",
        ));
    }
    Ok(ordering)
}

/// Parses an algebra file without validating the relation table.
pub fn parse_algebra_spec(text: &str) -> Result<AlgebraSpec> {
    let mut name = None;
    let mut gens: Option<(usize, Vec<String>)> = None;
    let mut weights: Option<(usize, Vec<u32>)> = None;
    let mut order: Option<(usize, Vec<String>)> = None;
    let mut rels: Vec<(usize, String)> = Vec::new();
    for (ln, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let toks = || {
            rest.split_whitespace()
                .map(String::from)
                .collect::<Vec<_>>()
        };
        let dup = || Error::parse(ln, format!("duplicate `{kw}` line"));
        match kw {
            "algebra" => {
                if name.is_some() {
                    return Err(dup());
                }
                if !is_identifier(rest) {
                    return Err(Error::parse(ln, "algebra needs an identifier name"));
                }
                name = Some(rest.to_string());
            }
            "gens" => {
                if gens.replace((ln, toks())).is_some() {
                    return Err(dup());
                }
            }
            "weights" => {
                let w = rest
                    .split_whitespace()
                    .map(|t| t.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::parse(ln, "weights must be nonnegative integers"))?;
                if weights.replace((ln, w)).is_some() {
                    return Err(dup());
                }
            }
            "order" => {
                if order.replace((ln, toks())).is_some() {
                    return Err(dup());
                }
            }
            "rel" => rels.push((ln, rest.to_string())),
            _ => return Err(Error::parse(ln, format!("unknown directive `{kw}`"))),
        }
    }
    let name = name.ok_or_else(|| Error::parse(0, "missing `algebra` line"))?;
    let (gl, generators) = gens.ok_or_else(|| Error::parse(0, "missing `gens` line"))?;
    if generators.is_empty() {
        return Err(Error::parse(gl, "at least one generator is required"));
    }
    for (k, g) in generators.iter().enumerate() {
        if !is_identifier(g) || is_basis_name(g) || RESERVED.contains(&g.as_str()) {
            return Err(Error::parse(
                gl,
                format!("`{g}` cannot be a generator name"),
            ));
        }
        if generators[..k].contains(g) {
            return Err(Error::parse(gl, format!("generator `{g}` repeated")));
        }
    }
    let n = generators.len();
    let weights = match weights {
        Some((wl, w)) if w.len() != n => {
            return Err(Error::parse(
                wl,
                format!("expected {n} weights, found {}", w.len()),
            ))
        }
        Some((_, w)) => w,
        None => vec![1; n],
    };
    let ordering = match order {
        Some((ol, t)) => parse_order(
            &generators,
            &t.iter().map(String::as_str).collect::<Vec<_>>(),
            ol,
        )?,
        None => MonomialOrdering::new(OrderKind::Grlex, n),
    };
    let mut spec = AlgebraSpec {
        name,
        generators,
        weights,
        ordering,
        relations: BTreeMap::new(),
    };
    for (ln, r) in rels {
        let (lhs, rhs) = r
            .split_once('=')
            .ok_or_else(|| Error::parse(ln, "relation needs `=`"))?;
        let lhs: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        let (a, b) = lhs
            .split_once('*')
            .ok_or_else(|| Error::parse(ln, "relation must read `gj*gi = ...`"))?;
        let idx = |g: &str| {
            spec.generator_index(g)
                .ok_or_else(|| Error::parse(ln, format!("unknown generator `{g}`")))
        };
        let (j, i) = (idx(a)?, idx(b)?);
        if j <= i {
            return Err(Error::parse(
                ln,
                format!("relation {a}*{b} must put the later generator first"),
            ));
        }
        if spec.relations.contains_key(&(j, i)) {
            return Err(Error::parse(ln, format!("duplicate relation {a}*{b}")));
        }
        let terms = parse_terms(&spec.generators, rhs).map_err(|m| Error::parse(ln, m))?;
        let target = Monomial::var(n, i).mul(&Monomial::var(n, j));
        let mut lambda = Rational::zero();
        let mut lower = Vec::new();
        for (m, c) in terms {
            if m == target {
                lambda += &c;
            } else {
                lower.push((m, c));
            }
        }
        spec.set_relation(j, i, lambda, lower);
    }
    Ok(spec)
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    Algebra::new(parse_algebra_spec(text)?)
}

pub fn format_algebra(spec: &AlgebraSpec) -> String {
    let mut out = format!(
        "algebra {}\ngens {}\n",
        spec.name,
        spec.generators.join(" ")
    );
    let w: Vec<String> = spec.weights.iter().map(|w| w.to_string()).collect();
    out.push_str(&format!("weights {}\n", w.join(" ")));
    let o = &spec.ordering;
    out.push_str(&format!("order {}", o.kind.keyword()));
    let default: Vec<usize> = (0..spec.n())
        .filter(|&i| Some(i) != o.homogenizer)
        .collect();
    if o.priority != default {
        let p: Vec<&str> = o
            .priority
            .iter()
            .map(|&i| spec.generators[i].as_str())
            .collect();
        out.push_str(&format!(" priority {}", p.join(" ")));
    }
    if !o.weighted {
        out.push_str(" unweighted");
    }
    if let Some(z) = o.homogenizer {
        out.push_str(&format!(" homog {}", spec.generators[z]));
    }
    out.push('\n');
    let n = spec.n();
    for (&(j, i), rel) in &spec.relations {
        let lead = Polynomial::monomial(
            Monomial::var(n, i).mul(&Monomial::var(n, j)),
            rel.lambda.clone(),
        );
        let rhs = lead.add(&rel.lower, spec_cmp(spec));
        out.push_str(&format!(
            "rel {}*{} = {}\n",
            spec.generators[j],
            spec.generators[i],
            format_polynomial(spec, &rhs)
        ));
    }
    out
}

/// Parses `(x^2 - d)*e1 + x*e2` style elements of `module`.
pub fn parse_module_element(module: &FreeModule, s: &str) -> Result<ModuleElement> {
    let spec = module.algebra().spec();
    let mut terms = Vec::new();
    for (neg, chunk) in split_signed(s) {
        if chunk == "0" && !neg {
            continue;
        }
        let (coeff, basis) = match chunk.rsplit_once('*') {
            Some((c, b)) if is_basis_name(b) => (c.to_string(), b),
            _ if is_basis_name(&chunk) => ("1".to_string(), chunk.as_str()),
            _ => {
                return Err(Error::Input(format!(
                    "term `{chunk}` must end in a basis vector e<i>"
                )))
            }
        };
        let k: usize = basis[1..]
            .parse()
            .map_err(|_| Error::Input(format!("bad basis vector `{basis}`")))?;
        if k == 0 || k > module.rank() {
            return Err(Error::ComponentOutOfRange {
                index: k,
                rank: module.rank(),
            });
        }
        let inner = match coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => coeff,
        };
        let p = parse_terms(&spec.generators, &inner).map_err(Error::Input)?;
        for (m, c) in p {
            terms.push((ModuleMonomial::new(m, k - 1), if neg { -c } else { c }));
        }
    }
    Ok(module.element(terms))
}

pub fn format_module_element(module: &FreeModule, xi: &ModuleElement) -> String {
    if xi.is_zero() {
        return "0".into();
    }
    let spec = module.algebra().spec();
    let mut parts = Vec::new();
    for (k, p) in module.components(xi).iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let body = format_polynomial(spec, p);
        let s = if p.len() > 1 {
            format!("({body})*e{}", k + 1)
        } else if body == "1" || body == "-1" {
            format!("{}e{}", if body == "-1" { "-" } else { "" }, k + 1)
        } else {
            format!("{body}*e{}", k + 1)
        };
        parts.push(s);
    }
    let mut out = String::new();
    for (k, s) in parts.iter().enumerate() {
        match (k, s.strip_prefix('-')) {
            (0, _) => out.push_str(s),
            (_, Some(rest)) => out.push_str(&format!(" - {rest}")),
            (_, None) => out.push_str(&format!(" + {s}")),
        }
    }
    out
}

/// A parsed module file: a free module and named generators of a submodule.
#[derive(Clone, Debug)]
pub struct ModuleFile {
    pub name: String,
    pub algebra_name: String,
    pub module: Arc<FreeModule>,
    /// Schreyer images in `A` when the ordering is Schreyer.
    pub images: Vec<Polynomial>,
    pub generators: Vec<(String, ModuleElement)>,
}

impl ModuleFile {
    pub fn elements(&self) -> Vec<ModuleElement> {
        self.generators.iter().map(|(_, g)| g.clone()).collect()
    }
}

pub fn parse_module(algebra: &Arc<Algebra>, text: &str) -> Result<ModuleFile> {
    let mut header = None;
    let mut rank = None;
    let mut shifts: Option<(usize, Vec<u32>)> = None;
    let mut modorder: Option<(usize, Vec<String>)> = None;
    let mut images: Vec<(usize, String)> = Vec::new();
    let mut gens: Vec<(usize, String, String)> = Vec::new();
    for (ln, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        let dup = || Error::parse(ln, format!("duplicate `{kw}` line"));
        match kw {
            "module" => {
                let t: Vec<&str> = rest.split_whitespace().collect();
                match t.as_slice() {
                    [name, "over", alg] if is_identifier(name) => {
                        if header
                            .replace((name.to_string(), alg.to_string()))
                            .is_some()
                        {
                            return Err(dup());
                        }
                    }
                    _ => return Err(Error::parse(ln, "expected `module <name> over <algebra>`")),
                }
            }
            "rank" => {
                let r: usize = rest
                    .parse()
                    .map_err(|_| Error::parse(ln, "rank must be a positive integer"))?;
                if r == 0 {
                    return Err(Error::parse(ln, "rank must be a positive integer"));
                }
                if rank.replace((ln, r)).is_some() {
                    return Err(dup());
                }
            }
            "shifts" => {
                let s = rest
                    .split_whitespace()
                    .map(|t| t.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::parse(ln, "shifts must be nonnegative integers"))?;
                if shifts.replace((ln, s)).is_some() {
                    return Err(dup());
                }
            }
            "modorder" => {
                if modorder
                    .replace((ln, rest.split_whitespace().map(String::from).collect()))
                    .is_some()
                {
                    return Err(dup());
                }
            }
            "image" => images.push((ln, rest.to_string())),
            "gen" => {
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::parse(ln, "gen needs `=`"))?;
                let name = name.trim();
                if !is_identifier(name) {
                    return Err(Error::parse(ln, format!("bad generator name `{name}`")));
                }
                if gens.iter().any(|(_, g, _)| g == name) {
                    return Err(Error::parse(ln, format!("duplicate generator `{name}`")));
                }
                gens.push((ln, name.to_string(), body.trim().to_string()));
            }
            _ => return Err(Error::parse(ln, format!("unknown directive `{kw}`"))),
        }
    }
    let (name, algebra_name) = header.ok_or_else(|| Error::parse(0, "missing `module` line"))?;
    if algebra_name != algebra.name() {
        return Err(Error::Input(format!(
            "module is declared over `{algebra_name}` but the algebra is `{}`",
            algebra.name()
        )));
    }
    let (rl, rank) = rank.ok_or_else(|| Error::parse(0, "missing `rank` line"))?;
    let declared = match shifts {
        Some((sl, s)) if s.len() != rank => {
            return Err(Error::parse(
                sl,
                format!("expected {rank} shifts, found {}", s.len()),
            ))
        }
        other => other.map(|(_, s)| s),
    };
    let (ol, otoks) = modorder.unwrap_or_else(|| {
        let mut t = vec!["top".to_string()];
        if algebra.is_graded_ordering() {
            t.push("graded".into());
        }
        (rl, t)
    });
    let mut graded = false;
    let mut priority = None;
    let mut k = 1;
    while k < otoks.len() {
        match otoks[k].as_str() {
            "graded" => graded = true,
            "priority" => {
                let mut p = Vec::new();
                k += 1;
                while k < otoks.len() && is_basis_name(&otoks[k]) {
                    let c: usize = otoks[k][1..]
                        .parse()
                        .map_err(|_| Error::parse(ol, "bad component"))?;
                    if c == 0 || c > rank {
                        return Err(Error::parse(ol, format!("component e{c} out of range")));
                    }
                    p.push(c - 1);
                    k += 1;
                }
                priority = Some(p);
                continue;
            }
            t => {
                return Err(Error::parse(
                    ol,
                    format!("unexpected `{t}` in modorder line"),
                ))
            }
        }
        k += 1;
    }
    let mut image_polys = Vec::new();
    let module = match otoks.first().map(String::as_str) {
        Some("top") | Some("pot") => {
            if let Some((il, _)) = images.first() {
                return Err(Error::parse(*il, "image lines need a schreyer ordering"));
            }
            let kind = if otoks[0] == "top" {
                ModuleOrderKind::Top
            } else {
                ModuleOrderKind::Pot
            };
            let shifts = declared.unwrap_or_else(|| vec![0; rank]);
            FreeModule::new(algebra.clone(), shifts, kind, graded, priority)
                .map_err(|e| Error::parse(ol, e.to_string()))?
        }
        Some("schreyer") => {
            if images.len() != rank {
                return Err(Error::parse(
                    ol,
                    format!("schreyer ordering needs {rank} image lines"),
                ));
            }
            if priority.is_some_and(|p| p != default_priority(rank)) {
                return Err(Error::parse(
                    ol,
                    "schreyer orderings use the index tiebreak",
                ));
            }
            let base = Arc::new(FreeModule::graded_top(algebra.clone(), vec![0]));
            let mut ims = Vec::new();
            for (il, s) in &images {
                let p = parse_polynomial(algebra.spec(), s)
                    .map_err(|e| Error::parse(*il, e.to_string()))?;
                ims.push(base.from_components(std::slice::from_ref(&p)));
                image_polys.push(p);
            }
            let m = FreeModule::schreyer(base, ims, graded)
                .map_err(|e| Error::parse(ol, e.to_string()))?;
            if declared.as_ref().is_some_and(|s| s != m.shifts()) {
                return Err(Error::parse(
                    ol,
                    "declared shifts differ from the filtered degrees of the images",
                ));
            }
            m
        }
        _ => return Err(Error::parse(ol, "modorder must be top, pot or schreyer")),
    };
    let module = Arc::new(module);
    let mut generators = Vec::new();
    for (ln, name, body) in gens {
        let e =
            parse_module_element(&module, &body).map_err(|e| Error::parse(ln, e.to_string()))?;
        generators.push((name, e));
    }
    Ok(ModuleFile {
        name,
        algebra_name,
        module,
        images: image_polys,
        generators,
    })
}

pub fn format_module(file: &ModuleFile) -> String {
    let m = &file.module;
    let shifts: Vec<String> = m.shifts().iter().map(|b| b.to_string()).collect();
    let mut out = format!(
        "module {} over {}\nrank {}\nshifts {}\nmodorder {}",
        file.name,
        file.algebra_name,
        m.rank(),
        shifts.join(" "),
        m.ordering().keyword()
    );
    if m.ordering().graded {
        out.push_str(" graded");
    }
    if m.ordering().priority != default_priority(m.rank()) {
        let p: Vec<String> = m
            .ordering()
            .priority
            .iter()
            .map(|c| format!("e{}", c + 1))
            .collect();
        out.push_str(&format!(" priority {}", p.join(" ")));
    }
    out.push('\n');
    for p in &file.images {
        out.push_str(&format!(
            "image {}\n",
            format_polynomial(m.algebra().spec(), p)
        ));
    }
    for (name, g) in &file.generators {
        out.push_str(&format!("gen {name} = {}\n", format_module_element(m, g)));
    }
    out
}

pub fn format_matrix_row(spec: &AlgebraSpec, row: &[Polynomial]) -> String {
    row.iter()
        .map(|p| format_polynomial(spec, p))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn format_shifts(s: &[u32]) -> String {
    s.iter().map(|b| format!(" {b}")).collect()
}

pub fn format_resolution(res: &Resolution) -> String {
    let spec = res.algebra.spec();
    let mut out = format!("resolution over {} of {}\n", spec.name, res.module_name);
    out.push_str(&format!(
        "step 0: rank {} shifts{}\n",
        res.shifts[0].len(),
        format_shifts(&res.shifts[0])
    ));
    for (k, map) in res.maps.iter().enumerate() {
        out.push_str(&format!(
            "map {}: {} x {} matrix\n",
            k + 1,
            map.len(),
            res.shifts[k].len()
        ));
        for (r, row) in map.iter().enumerate() {
            out.push_str(&format!(
                "  row {}: {}\n",
                r + 1,
                format_matrix_row(spec, row)
            ));
        }
        let s = &res.shifts[k + 1];
        out.push_str(&format!(
            "step {}: rank {} shifts{}\n",
            k + 1,
            s.len(),
            format_shifts(s)
        ));
    }
    out
}

fn expect_index(tok: Option<&str>, want: usize, what: &str, ln: usize) -> Result<()> {
    let got = tok.and_then(|t| t.trim_end_matches(':').parse::<usize>().ok());
    if got != Some(want) {
        return Err(Error::parse(ln, format!("expected {what} {want}")));
    }
    Ok(())
}

/// Parses the resolution format emitted by [`format_resolution`].
pub fn parse_resolution(algebra: &Arc<Algebra>, text: &str) -> Result<Resolution> {
    let spec = algebra.spec();
    let mut it = lines(text).peekable();
    let (ln, head) = it
        .next()
        .ok_or_else(|| Error::parse(0, "empty resolution file"))?;
    let h: Vec<&str> = head.split_whitespace().collect();
    let module_name = match h.as_slice() {
        ["resolution", "over", alg, "of", m] => {
            if *alg != spec.name {
                return Err(Error::parse(
                    ln,
                    format!("resolution is over `{alg}`, not `{}`", spec.name),
                ));
            }
            m.to_string()
        }
        _ => {
            return Err(Error::parse(
                ln,
                "expected `resolution over <algebra> of <module>`",
            ))
        }
    };
    let mut shifts: Vec<Vec<u32>> = Vec::new();
    let mut maps: Vec<Vec<Vec<Polynomial>>> = Vec::new();
    while let Some((ln, l)) = it.next() {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.first() {
            Some(&"step") => {
                expect_index(t.get(1).copied(), shifts.len(), "step", ln)?;
                if t.get(2) != Some(&"rank") || t.get(4) != Some(&"shifts") {
                    return Err(Error::parse(
                        ln,
                        "expected `step <k>: rank <r> shifts <b...>`",
                    ));
                }
                let r: usize = t[3].parse().map_err(|_| Error::parse(ln, "bad rank"))?;
                let s = t[5..]
                    .iter()
                    .map(|x| x.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::parse(ln, "bad shift"))?;
                if s.len() != r {
                    return Err(Error::parse(
                        ln,
                        format!("rank {r} with {} shifts", s.len()),
                    ));
                }
                if shifts.len() != maps.len() {
                    return Err(Error::parse(ln, "step without a preceding map"));
                }
                shifts.push(s);
            }
            Some(&"map") => {
                expect_index(t.get(1).copied(), maps.len() + 1, "map", ln)?;
                let (rows, cols) = match t.as_slice() {
                    [_, _, r, "x", c, "matrix"] => (
                        r.parse::<usize>()
                            .map_err(|_| Error::parse(ln, "bad row count"))?,
                        c.parse::<usize>()
                            .map_err(|_| Error::parse(ln, "bad column count"))?,
                    ),
                    _ => return Err(Error::parse(ln, "expected `map <k>: <t> x <m> matrix`")),
                };
                if shifts.len() != maps.len() + 1 || shifts.last().map(Vec::len) != Some(cols) {
                    return Err(Error::parse(ln, "map does not match the previous step"));
                }
                let mut mat = Vec::with_capacity(rows);
                for r in 0..rows {
                    let (rl, row) = it
                        .next()
                        .ok_or_else(|| Error::parse(ln, "missing matrix row"))?;
                    let (lhs, body) = row
                        .split_once(':')
                        .ok_or_else(|| Error::parse(rl, "expected `row <k>: ...`"))?;
                    let lt: Vec<&str> = lhs.split_whitespace().collect();
                    if lt.first() != Some(&"row") {
                        return Err(Error::parse(rl, "expected `row <k>: ...`"));
                    }
                    expect_index(lt.get(1).copied(), r + 1, "row", rl)?;
                    let entries = body
                        .split('|')
                        .map(|e| {
                            parse_polynomial(spec, e.trim())
                                .map_err(|er| Error::parse(rl, er.to_string()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if entries.len() != cols {
                        return Err(Error::parse(
                            rl,
                            format!("expected {cols} entries, found {}", entries.len()),
                        ));
                    }
                    mat.push(entries);
                }
                maps.push(mat);
            }
            _ => return Err(Error::parse(ln, format!("unexpected line `{l}`"))),
        }
    }
    if shifts.len() != maps.len() + 1 {
        return Err(Error::parse(0, "resolution must end with a step line"));
    }
    for (k, map) in maps.iter().enumerate() {
        if map.len() != shifts[k + 1].len() {
            return Err(Error::parse(
                0,
                format!("map {} rows do not match step {}", k + 1, k + 1),
            ));
        }
    }
    Ok(Resolution {
        algebra: algebra.clone(),
        module_name,
        presentation: None,
        shifts,
        maps,
    })
}
