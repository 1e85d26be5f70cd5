mod common;

use pbwres::{
    buchberger, check_groebner, minimal_filtered_resolution, schreyer_syzygies, syzygy_generators,
    FreeModule, ModuleElement, DEFAULT_STEP_CAP,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn expand(
    l: &FreeModule,
    syz: &FreeModule,
    row: &ModuleElement,
    gens: &[ModuleElement],
) -> ModuleElement {
    syz.components(row)
        .iter()
        .zip(gens)
        .fold(ModuleElement::zero(), |acc, (f, g)| {
            l.add(&acc, &l.left_mul(f, g))
        })
}

#[test]
fn schreyer_syzygies_form_a_groebner_basis_and_annihilate() {
    for c in corpus() {
        let rec = buchberger(&c.module, &c.gens, DEFAULT_STEP_CAP).unwrap();
        let s = schreyer_syzygies(&rec).unwrap();
        for row in &s.elements {
            assert!(
                expand(&c.module, &s.module, row, &rec.basis).is_zero(),
                "{}",
                c.name
            );
        }
        assert!(check_groebner(&s.module, &s.elements), "{}", c.name);

        let z = syzygy_generators(&rec).unwrap();
        for row in &z.elements {
            assert!(!row.is_zero());
            assert!(
                expand(&c.module, &z.module, row, &c.gens).is_zero(),
                "{}",
                c.name
            );
        }
    }
}

#[test]
fn ranks_and_shift_multisets_do_not_depend_on_input_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for c in graded_corpus() {
        let n = c.module.algebra().n();
        let base =
            minimal_filtered_resolution(&c.module, &c.gens, n, DEFAULT_STEP_CAP, "m").unwrap();
        let sorted = |s: &[Vec<u32>]| -> Vec<Vec<u32>> {
            s.iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.sort();
                    v
                })
                .collect()
        };
        let mut inputs = c.gens.clone();
        inputs.push(c.module.add(&c.gens[0], &c.gens[c.gens.len() - 1]));
        for _ in 0..4 {
            inputs.shuffle(&mut rng);
            let r =
                minimal_filtered_resolution(&c.module, &inputs, n, DEFAULT_STEP_CAP, "m").unwrap();
            assert_eq!(r.ranks(), base.ranks(), "{}", c.name);
            assert_eq!(sorted(&r.shifts), sorted(&base.shifts), "{}", c.name);
        }
    }
}
