//! Shared corpus and random generators for the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use pbwres::text::{parse_algebra, parse_module};
use pbwres::{Algebra, FreeModule, ModuleElement, ModuleMonomial, Monomial, Polynomial, Rational};
use rand::Rng;

pub const KXY: &str = "algebra kxy\ngens x y\n";
pub const KXYZ: &str = "algebra kxyz\ngens x y z\n";
pub const KXY_WEIGHTED: &str = "algebra kxyw\ngens x y\nweights 2 1\n";
pub const KXY_LEX: &str = "algebra kxylex\ngens x y\norder lex\n";
pub const WEYL1: &str = "algebra weyl1\ngens x d\nrel d*x = x*d + 1\n";
pub const WEYL2: &str =
    "algebra weyl2\ngens x1 x2 d1 d2\nrel d1*x1 = x1*d1 + 1\nrel d2*x2 = x2*d2 + 1\n";
pub const TWISTED3: &str =
    "algebra ex3\ngens a1 a2 a3\nweights 2 1 4\nrel a3*a1 = a1*a3 + a2^2*a3 + a2\n";

pub fn algebra(text: &str) -> Arc<Algebra> {
    Arc::new(parse_algebra(text).unwrap())
}

pub fn corpus_algebras() -> Vec<Arc<Algebra>> {
    [KXY, KXYZ, KXY_WEIGHTED, KXY_LEX, WEYL1, WEYL2, TWISTED3]
        .iter()
        .map(|t| algebra(t))
        .collect()
}

/// A named submodule `⟨gens⟩ ⊆ module`.
#[derive(Clone)]
pub struct Case {
    pub name: String,
    pub module: Arc<FreeModule>,
    pub gens: Vec<ModuleElement>,
}

pub fn case(alg: &Arc<Algebra>, name: &str, body: &str) -> Case {
    let text = format!("module {name} over {}\n{body}", alg.name());
    let file = parse_module(alg, &text).unwrap();
    Case {
        name: format!("{}/{name}", alg.name()),
        gens: file.elements(),
        module: file.module,
    }
}

fn ideal(alg: &Arc<Algebra>, name: &str, gens: &[&str]) -> Case {
    let mut body = "rank 1\n".to_string();
    for (k, g) in gens.iter().enumerate() {
        body.push_str(&format!("gen f{} = ({g})*e1\n", k + 1));
    }
    case(alg, name, &body)
}

/// Every corpus submodule, graded or not.
pub fn corpus() -> Vec<Case> {
    let kxy = algebra(KXY);
    let kxyz = algebra(KXYZ);
    let kxyw = algebra(KXY_WEIGHTED);
    let lex = algebra(KXY_LEX);
    let w1 = algebra(WEYL1);
    let w2 = algebra(WEYL2);
    let ex3 = algebra(TWISTED3);
    vec![
        ideal(&kxy, "max", &["x", "y"]),
        ideal(&kxy, "curves", &["x^2*y - y^2", "x*y^2 + x"]),
        ideal(&kxy, "powers", &["x^2", "x*y", "y^3"]),
        case(
            &kxy,
            "rank2",
            "rank 2\nshifts 0 1\ngen f1 = x*e1 + e2\ngen f2 = y^2*e1 - x*e2\n",
        ),
        case(
            &kxy,
            "rank2pot",
            "rank 2\nmodorder pot graded\ngen f1 = x*e1 + y*e2\ngen f2 = y*e1\n",
        ),
        ideal(&kxyz, "max", &["x", "y", "z"]),
        ideal(&kxyz, "quadrics", &["x^2 - y*z", "y^2 - x*z"]),
        ideal(&kxyw, "weighted", &["x - y^2", "x*y"]),
        case(
            &lex,
            "lex",
            "rank 1\nmodorder top\ngen f1 = (x^2 - y)*e1\ngen f2 = (x*y - 1)*e1\n",
        ),
        ideal(&w1, "d", &["d"]),
        ideal(&w1, "xd", &["x", "d"]),
        ideal(&w1, "euler", &["x*d + 1", "d^2"]),
        ideal(&w2, "dd", &["d1", "d2"]),
        ideal(&w2, "mixed", &["x1*d1", "d2"]),
        ideal(&ex3, "a1a3", &["a1", "a3"]),
        ideal(&ex3, "quad", &["a1*a3", "a2^2"]),
    ]
}

pub fn graded_corpus() -> Vec<Case> {
    corpus()
        .into_iter()
        .filter(|c| c.module.is_graded())
        .collect()
}

/// Small rational with numerator in `[-5, 5] \ {0}` and denominator in `[1, 3]`.
pub fn coefficient<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-5..=5);
        if n != 0 {
            return Rational::new(n, rng.gen_range(1i64..=3)).unwrap();
        }
    }
}

pub fn monomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Monomial {
    let total = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..total {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// A random polynomial with up to `max_terms` terms; may be zero.
pub fn polynomial<R: Rng>(
    rng: &mut R,
    alg: &Algebra,
    max_terms: usize,
    max_deg: u32,
) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    alg.poly((0..k).map(|_| (monomial(rng, alg.n(), max_deg), coefficient(rng))))
}

pub fn nonzero_polynomial<R: Rng>(
    rng: &mut R,
    alg: &Algebra,
    max_terms: usize,
    max_deg: u32,
) -> Polynomial {
    loop {
        let f = polynomial(rng, alg, max_terms, max_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn nonzero_element<R: Rng>(
    rng: &mut R,
    module: &FreeModule,
    max_terms: usize,
    max_deg: u32,
) -> ModuleElement {
    let n = module.algebra().n();
    loop {
        let k = rng.gen_range(1..=max_terms);
        let xi = module.element((0..k).map(|_| {
            let c = rng.gen_range(0..module.rank());
            (
                ModuleMonomial::new(monomial(rng, n, max_deg), c),
                coefficient(rng),
            )
        }));
        if !xi.is_zero() {
            return xi;
        }
    }
}
