mod common;

use std::sync::Arc;

use pbwres::text::{
    format_algebra, format_module, format_module_element, format_polynomial, format_resolution,
    parse_algebra_spec, parse_module, parse_module_element, parse_polynomial, parse_resolution,
};
use pbwres::{
    assoc_graded_algebra, minimal_filtered_resolution, rees_algebra, Algebra, FreeModule,
    ModuleMonomial, ModuleOrderKind, Monomial, Rational, DEFAULT_STEP_CAP,
};
use proptest::prelude::*;

use common::*;

fn raw_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64, usize)>> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..=3, 4),
            -30i64..=30,
            1i64..=7,
            0usize..3,
        ),
        0..6,
    )
}

proptest! {
    #[test]
    fn polynomials(a in 0..7usize, raw in raw_poly()) {
        let alg = &corpus_algebras()[a];
        let n = alg.n();
        let f = alg.poly(raw.iter().map(|(e, p, q, _)| (Monomial::new(e[..n].to_vec()), Rational::new(*p, *q).unwrap())));
        let text = format_polynomial(alg.spec(), &f);
        prop_assert_eq!(parse_polynomial(alg.spec(), &text).unwrap(), f);
    }

    #[test]
    fn module_elements(a in 0..7usize, raw in raw_poly(), pot in any::<bool>()) {
        let alg = corpus_algebras()[a].clone();
        let n = alg.n();
        let kind = if pot { ModuleOrderKind::Pot } else { ModuleOrderKind::Top };
        let l = FreeModule::new(alg, vec![0, 1, 0], kind, false, None).unwrap();
        let xi = l.element(raw.iter().map(|(e, p, q, c)| {
            (ModuleMonomial::new(Monomial::new(e[..n].to_vec()), *c), Rational::new(*p, *q).unwrap())
        }));
        let text = format_module_element(&l, &xi);
        prop_assert_eq!(parse_module_element(&l, &text).unwrap(), xi);
    }
}

#[test]
fn algebras_and_derived_algebras() {
    for alg in corpus_algebras() {
        let mut specs = vec![alg.spec().clone()];
        if alg.is_graded_ordering() {
            specs.push(assoc_graded_algebra(alg.spec()));
            specs.push(rees_algebra(alg.spec()));
        }
        for spec in specs {
            let text = format_algebra(&spec);
            let back = parse_algebra_spec(&text).unwrap();
            assert_eq!(back, spec, "{text}");
            assert_eq!(format_algebra(&back), text);
            Algebra::new(back).unwrap();
        }
    }
    let priority =
        parse_algebra_spec("algebra p\ngens x y z\norder grevlex priority z x y unweighted\n")
            .unwrap();
    assert_eq!(
        parse_algebra_spec(&format_algebra(&priority)).unwrap(),
        priority
    );
}

fn module_file_roundtrip(alg: &Arc<Algebra>, text: &str) {
    let file = parse_module(alg, text).unwrap();
    let out = format_module(&file);
    let back = parse_module(alg, &out).unwrap();
    assert_eq!(back.name, file.name);
    assert_eq!(back.module.shifts(), file.module.shifts());
    assert_eq!(
        back.module.ordering().keyword(),
        file.module.ordering().keyword()
    );
    assert_eq!(
        back.module.ordering().priority,
        file.module.ordering().priority
    );
    assert_eq!(back.module.is_graded(), file.module.is_graded());
    assert_eq!(back.images, file.images);
    assert_eq!(back.generators, file.generators);
    assert_eq!(format_module(&back), out);
}

#[test]
fn module_files() {
    for c in corpus() {
        let alg = c.module.algebra().clone();
        let mut body = format!(
            "module m over {}\nrank {}\nshifts {}\n",
            alg.name(),
            c.module.rank(),
            c.module
                .shifts()
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        for (k, g) in c.gens.iter().enumerate() {
            body.push_str(&format!(
                "gen g{} = {}\n",
                k + 1,
                format_module_element(&c.module, g)
            ));
        }
        module_file_roundtrip(&alg, &body);
    }
    let w = algebra(WEYL1);
    module_file_roundtrip(&w, "module s over weyl1\nrank 2\nmodorder schreyer graded\nimage x*d + 1\nimage d^2\ngen g = d*e1 - x*e2\n");
    module_file_roundtrip(
        &w,
        "module p over weyl1\nrank 3\nmodorder pot graded priority e2 e3 e1\ngen g = e1 + d*e3\n",
    );
}

#[test]
fn resolutions() {
    for c in graded_corpus() {
        let n = c.module.algebra().n();
        let res =
            minimal_filtered_resolution(&c.module, &c.gens, n, DEFAULT_STEP_CAP, "m").unwrap();
        let text = format_resolution(&res);
        let back = parse_resolution(c.module.algebra(), &text).unwrap();
        assert_eq!(back.module_name, res.module_name);
        assert_eq!(back.shifts, res.shifts, "{}", c.name);
        assert_eq!(back.maps, res.maps, "{}", c.name);
        assert_eq!(format_resolution(&back), text);
    }
}
