mod common;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use common::{presets, rng, small_shape, solver_degree};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;
use skewpbw::burchnall::{
    annihilating_polynomial, apply_dependence, evaluate_bivariate, fp_module_dependence, BivariatePoly,
    BoundsConfig,
};
use skewpbw::centralizer::{centralizer_bounded, commutes, lc_identity_check, residue_class_profile};
use skewpbw::coeff::{CoeffRing, MultiPoly, RatFunc};
use skewpbw::dsl::{parse_element, print_expr};
use skewpbw::pbw::{Degree, Element, Exponent, MonomialOrder, OrderKind};
use skewpbw::random::{random_coeff, random_element, random_element_of_degree, random_nonzero_coeff, random_rational};
use skewpbw::{Algebra, Coeff};

fn rational_poly_in(alg: &Algebra, base: &Element, r: &mut impl Rng, max_deg: u32) -> Element {
    let deg = r.random_range(1..=max_deg);
    let mut out = Element::zero(alg);
    let mut pow = Element::one(alg);
    for k in 0..=deg {
        let mut c = random_rational(r, 5, 3);
        if k == deg && c.is_zero() {
            c = BigRational::one();
        }
        out = out.add(&pow.scalar_mul(&alg.ring().from_rational(c)));
        if k < deg {
            pow = pow.mul(base);
        }
    }
    out
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Rank over Q of elements whose coefficients are polynomials.
fn rank(elems: &[Element]) -> usize {
    let mut rows: Vec<BTreeMap<(Exponent, Vec<u32>), BigRational>> = elems
        .iter()
        .map(|f| {
            let mut v = BTreeMap::new();
            for (e, c) in f.terms() {
                for (m, q) in c.coordinates().expect("polynomial coefficients") {
                    v.insert((e.clone(), m), q);
                }
            }
            v
        })
        .collect();
    let mut r = 0;
    for k in 0..rows.len() {
        let Some((key, pv)) = rows[k].iter().next().map(|(a, b)| (a.clone(), b.clone())) else {
            continue;
        };
        r += 1;
        let pivot = rows[k].clone();
        for row in rows.iter_mut().skip(k + 1) {
            if let Some(x) = row.get(&key).cloned() {
                let f = x / &pv;
                for (kk, v) in &pivot {
                    let e = row.entry(kk.clone()).or_insert_with(BigRational::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        row.remove(kk);
                    }
                }
            }
        }
    }
    r
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn sigma_is_an_endomorphism(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let spec = alg.spec();
            let a = random_coeff(alg.ring(), &mut r, 2);
            let b = random_coeff(alg.ring(), &mut r, 2);
            for s in &spec.sigma {
                prop_assert_eq!(s.apply(&a.mul(&b)), s.apply(&a).mul(&s.apply(&b)), "{}", name);
                prop_assert_eq!(s.apply(&a.add(&b)), s.apply(&a).add(&s.apply(&b)), "{}", name);
            }
            let q = alg.ring().from_rational(random_rational(&mut r, 9, 9));
            for (s, d) in spec.sigma.iter().zip(&spec.delta) {
                prop_assert_eq!(s.apply(&q), q.clone());
                prop_assert!(d.apply(&q).is_zero());
            }
        }
    }

    #[test]
    fn delta_is_a_sigma_derivation(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let spec = alg.spec();
            let a = random_coeff(alg.ring(), &mut r, 2);
            let b = random_coeff(alg.ring(), &mut r, 2);
            for (s, d) in spec.sigma.iter().zip(&spec.delta) {
                let lhs = d.apply(&a.mul(&b));
                let rhs = s.apply(&a).mul(&d.apply(&b)).add(&d.apply(&a).mul(&b));
                prop_assert_eq!(lhs, rhs, "{}", name);
                prop_assert_eq!(d.apply(&a.add(&b)), d.apply(&a).add(&d.apply(&b)));
            }
        }
    }

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let sh = small_shape(name, 2);
            let f = random_element(&alg, &mut r, sh);
            let g = random_element(&alg, &mut r, sh);
            let h = random_element(&alg, &mut r, sh);
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)), "{}", name);
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)), "{}", name);
            prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)), "{}", name);
        }
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn canonical_forms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = CoeffRing::rational_function("y");
        let a = random_nonzero_coeff(&ring, &mut r, 3);
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        // scaling numerator and denominator by a common factor changes nothing
        let vars: std::sync::Arc<[String]> = vec!["y".to_string()].into();
        let num = MultiPoly::from_terms(vars.clone(), [(vec![2], BigRational::from_integer(3.into())), (vec![0], random_rational(&mut r, 4, 1))]);
        let den = MultiPoly::from_terms(vars.clone(), [(vec![1], BigRational::one()), (vec![0], random_rational(&mut r, 4, 1))]);
        let k = MultiPoly::from_terms(vars.clone(), [(vec![1], random_rational(&mut r, 4, 3) + BigRational::new(BigInt::from(1), BigInt::from(7))), (vec![0], BigRational::one())]);
        let plain = RatFunc::new(&num, &den).unwrap();
        let scaled = RatFunc::new(&num.mul(&k), &den.mul(&k)).unwrap();
        prop_assert_eq!(&plain, &scaled);
        prop_assert!(plain.denominator().leading().unwrap().1.is_one());
    }

    #[test]
    fn domain_and_leading_terms(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let sh = small_shape(name, 2);
            let f = random_element(&alg, &mut r, sh);
            let g = random_element(&alg, &mut r, sh);
            let fg = f.mul(&g);
            prop_assert!(!fg.is_zero());
            let (a, b) = (f.exp().unwrap(), g.exp().unwrap());
            prop_assert_eq!(fg.exp().unwrap(), &a + &b);
            prop_assert_eq!(fg.deg(), f.deg() + g.deg());
            let lc = f.lc().mul(&alg.sigma_pow(&a, &g.lc())).mul(&alg.commutation_constant(&a, &b));
            prop_assert_eq!(fg.lc(), lc, "{}", name);
        }
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let f = random_element(&alg, &mut r, small_shape(name, 3));
            let text = print_expr(&f);
            prop_assert_eq!(parse_element(&alg, &text).unwrap(), f, "{}: {}", name, text);
        }
    }

    #[test]
    fn lc_identity_for_polynomials_in_one_element(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let h = random_element(&alg, &mut r, small_shape(name, solver_degree(name)));
            let f = rational_poly_in(&alg, &h, &mut r, 2);
            let g = rational_poly_in(&alg, &h, &mut r, 2);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            prop_assert!(commutes(&f, &g));
            prop_assert_eq!(lc_identity_check(&f, &g), Ok(true), "{}", name);
        }
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn annihilators_verify(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let deg = r.random_range(1..=solver_degree(name));
            let p = random_element_of_degree(&alg, &mut r, deg, small_shape(name, 1));
            let q = rational_poly_in(&alg, &p, &mut r, 2);
            let ann = annihilating_polynomial(&p, &q, BoundsConfig::default()).unwrap();
            prop_assert!(ann.verified);
            prop_assert!(ann.residual.is_zero());
            prop_assert!(evaluate_bivariate(&ann.poly, &p, &q).unwrap().is_zero());
            prop_assert_eq!(ann.t_bound, p.exp().unwrap().total());
            prop_assert!(ann.poly.degree_t().unwrap() <= ann.t_bound);

            let lambda = random_rational(&mut r, 5, 4);
            if !lambda.is_zero() {
                let lq = q.scalar_mul(&alg.ring().from_rational(lambda.clone()));
                let scaled = annihilating_polynomial(&p, &lq, BoundsConfig::default()).unwrap();
                prop_assert!(scaled.verified);
                let moved = ann.poly.rescale_t(&lambda);
                prop_assert!(evaluate_bivariate(&moved, &p, &lq).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn powers_give_the_minimal_relation(seed in any::<u64>(), k in 1u32..=3) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let p = random_element_of_degree(&alg, &mut r, 1, small_shape(name, 1));
            let ann = annihilating_polynomial(&p, &p.pow(k), BoundsConfig::default()).unwrap();
            let expect = BivariatePoly::s().pow(k).sub(&BivariatePoly::t());
            prop_assert_eq!(ann.poly, expect, "{}", name);
        }
    }

    #[test]
    fn module_dependences_vanish(seed in any::<u64>()) {
        for (name, alg) in presets() {
            let mut r = rng(seed);
            let p = random_element_of_degree(&alg, &mut r, 1, small_shape(name, 1));
            let q = rational_poly_in(&alg, &p, &mut r, 2);
            let elems = [Element::one(&alg), q.clone(), q.mul(&q)];
            let rows = fp_module_dependence(&p, &elems, 2).unwrap();
            let rows = rows.expect("Q is a polynomial of degree <= 2 in P");
            prop_assert!(apply_dependence(&p, &elems, &rows).unwrap().is_zero(), "{}", name);
        }
    }

    #[test]
    fn centralizer_soundness_and_completeness(seed in any::<u64>()) {
        for name in ["weyl", "q-weyl", "higher-endo"] {
            let alg = skewpbw::dsl::preset(name).unwrap();
            let mut r = rng(seed);
            let deg = r.random_range(1..=2);
            let f = random_element_of_degree(&alg, &mut r, deg, small_shape(name, 1));
            let f2 = f.mul(&f);
            let d = f2.deg().finite().unwrap();
            let c = f2.coeff_degree();
            let basis = centralizer_bounded(&f, d, c).unwrap();
            for g in &basis.elements {
                prop_assert!(commutes(&f, g));
            }
            let base_rank = rank(&basis.elements);
            prop_assert_eq!(base_rank, basis.elements.len());
            for h in [Element::one(&alg), f.clone(), f2.clone()] {
                let mut ext = basis.elements.clone();
                ext.push(h);
                prop_assert_eq!(rank(&ext), base_rank, "{}", name);
            }
            let modulus = f.exp().unwrap().total();
            let profile = residue_class_profile(&f, d, c).unwrap();
            prop_assert!(profile.iter().all(|&i| i < modulus));
        }
    }
}

#[test]
fn order_laws() {
    let mut r = rng(99);
    for kind in [OrderKind::DegLex, OrderKind::Lex] {
        for prec in [vec![2, 1, 0], vec![0, 1, 2], vec![1, 2, 0]] {
            let ord = MonomialOrder::new(kind, prec).unwrap();
            let mut sample = || Exponent::from((0..3).map(|_| r.random_range(0..4u32)).collect::<Vec<_>>());
            for _ in 0..1000 {
                let (a, b, c) = (sample(), sample(), sample());
                prop_assert_total(&ord, &a, &b, &c);
                if kind == OrderKind::DegLex && a.total() > b.total() {
                    assert_eq!(ord.cmp(&a, &b), Ordering::Greater);
                }
            }
        }
    }
    let ord = MonomialOrder::deglex(2);
    assert_eq!(ord.cmp(&Exponent::from(vec![2, 0]), &Exponent::from(vec![0, 1])), Ordering::Greater);
    assert_eq!(ord.cmp(&Exponent::from(vec![0, 2]), &Exponent::from(vec![2, 0])), Ordering::Greater);
    assert!(ord.compare(&Exponent::from(vec![1]), &Exponent::from(vec![1, 0])).is_err());
}

fn prop_assert_total(ord: &MonomialOrder, a: &Exponent, b: &Exponent, c: &Exponent) {
    assert_eq!(ord.cmp(a, b), ord.cmp(b, a).reverse());
    assert_eq!(ord.cmp(a, b) == Ordering::Equal, a == b);
    if ord.cmp(a, b) != Ordering::Greater && ord.cmp(b, c) != Ordering::Greater {
        assert_ne!(ord.cmp(a, c), Ordering::Greater);
    }
}

#[test]
fn degree_sentinel() {
    assert!(Degree::NegInfinity < Degree::Finite(0));
    let w = skewpbw::dsl::preset("weyl").unwrap();
    let f = parse_element(&w, "y^5*x^2").unwrap();
    assert_eq!(f.deg(), Degree::Finite(2));
    let _: Coeff = f.lc();
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn arbitrary_text_never_panics(src in "\\PC{0,40}") {
        for (_, alg) in presets() {
            let _ = parse_element(&alg, &src);
        }
        let _ = skewpbw::dsl::parse_spec(&src);
        let _ = skewpbw::dsl::parse_bivariate(&src);
    }

    #[test]
    fn expression_shaped_text_never_panics(src in "[xy12()^*/+ -]{0,30}") {
        for (_, alg) in presets() {
            let _ = parse_element(&alg, &src);
        }
    }
}
