mod common;

use common::{el, naive_product, naive_var_times_coeff, presets, rng, small_shape};
use skewpbw::random::{random_coeff, random_element};
use skewpbw::Element;

#[test]
fn oracle_agrees_on_hand_examples() {
    let q = skewpbw::dsl::preset("q-weyl").unwrap();
    assert_eq!(naive_product(&el(&q, "x"), &el(&q, "y")).to_string(), "2*y*x + 1");
    assert_eq!(naive_product(&el(&q, "x^2"), &el(&q, "y")).to_string(), "4*y*x^2 + 3*x");
}

#[test]
fn classical_pair_checked_by_oracle() {
    let r = skewpbw::dsl::preset("weyl-rational").unwrap();
    let l = el(&r, "x^2 - 2*y^-2");
    let a = el(&r, "x^3 - 3*y^-2*x + 3*y^-3");
    assert_eq!(naive_product(&l, &a), naive_product(&a, &l));
    let a2 = naive_product(&a, &a);
    let l3 = naive_product(&naive_product(&l, &l), &l);
    assert_eq!(a2, l3);
    assert_eq!(a2, a.mul(&a));
}

#[test]
fn products_match_oracle() {
    for (name, alg) in presets() {
        let mut r = rng(0xa11ce);
        for _ in 0..40 {
            let f = random_element(&alg, &mut r, small_shape(name, 2));
            let g = random_element(&alg, &mut r, small_shape(name, 2));
            assert_eq!(f.mul(&g), naive_product(&f, &g), "{name}: ({f}) * ({g})");
        }
    }
}

#[test]
fn rewrite_rule_fidelity() {
    for (name, alg) in presets() {
        let mut r = rng(7);
        for _ in 0..30 {
            let c = random_coeff(alg.ring(), &mut r, 2);
            for i in 0..alg.num_vars() {
                let lhs = Element::var(&alg, i).mul(&Element::constant(&alg, c.clone()));
                let spec = alg.spec();
                let rhs = Element::constant(&alg, spec.sigma[i].apply(&c))
                    .mul(&Element::var(&alg, i))
                    .add(&Element::constant(&alg, spec.delta[i].apply(&c)));
                assert_eq!(lhs, rhs, "{name}");
                assert_eq!(lhs, naive_var_times_coeff(&alg, i, &c), "{name}");
            }
        }
    }
}
