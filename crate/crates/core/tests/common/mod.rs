//! Shared helpers for the integration tests: a naive word rewriter used as
//! an independent oracle for multiplication, and seeded generators.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewpbw::dsl::{parse_element, preset, PRESETS};
use skewpbw::pbw::{Algebra, AlgebraSpec, Element, Exponent};
use skewpbw::random::Shape;
use skewpbw::Coeff;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn presets() -> Vec<(&'static str, Algebra)> {
    static CACHE: OnceLock<Vec<(&'static str, Algebra)>> = OnceLock::new();
    CACHE
        .get_or_init(|| PRESETS.iter().map(|&n| (n, preset(n).unwrap())).collect())
        .clone()
}

/// `P` and the scalar-coefficient polynomial sizes used by solver tests.
pub fn solver_degree(name: &str) -> u32 {
    if name == "higher-endo" {
        1
    } else {
        2
    }
}

pub fn el(alg: &Algebra, s: &str) -> Element {
    parse_element(alg, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Element sizes that keep every preset at desk scale. Coefficients in
/// `higher-endo` double their degree each time a variable passes them.
pub fn small_shape(name: &str, max_degree: u32) -> Shape {
    Shape {
        max_degree,
        max_coeff_degree: if name == "higher-endo" { 1 } else { 2 },
        max_terms: 3,
    }
}

#[derive(Clone, Debug)]
pub enum Letter {
    Coef(Coeff),
    Var(usize),
}

pub type Word = Vec<Letter>;

/// Rewrites one word step by step until it is a standard monomial with a
/// single leading coefficient. Uses only the defining data of the algebra:
///
/// * `r s -> (rs)` for coefficients,
/// * `x_i r -> sigma_i(r) x_i + delta_i(r)`,
/// * `x_j x_i -> c_ij x_i x_j + r_0 + sum r_k x_k` for `i < j`.
pub fn naive_normal_form(spec: &AlgebraSpec, words: Vec<Word>) -> BTreeMap<Vec<u32>, Coeff> {
    let n = spec.num_vars();
    let ring = &spec.ring;
    let mut out: BTreeMap<Vec<u32>, Coeff> = BTreeMap::new();
    let mut work = words;
    while let Some(w) = work.pop() {
        if w.iter().any(|l| matches!(l, Letter::Coef(c) if c.is_zero())) {
            continue;
        }
        let mut rewrote = false;
        for k in 0..w.len().saturating_sub(1) {
            let (head, tail) = (&w[..k], &w[k + 2..]);
            let splice = |mid: Vec<Letter>| -> Word {
                head.iter().cloned().chain(mid).chain(tail.iter().cloned()).collect()
            };
            match (&w[k], &w[k + 1]) {
                (Letter::Coef(a), Letter::Coef(b)) => {
                    work.push(splice(vec![Letter::Coef(a.mul(b))]));
                }
                (Letter::Var(i), Letter::Coef(r)) => {
                    work.push(splice(vec![Letter::Coef(spec.sigma[*i].apply(r)), Letter::Var(*i)]));
                    work.push(splice(vec![Letter::Coef(spec.delta[*i].apply(r))]));
                }
                (Letter::Var(j), Letter::Var(i)) if j > i => {
                    let rel = spec.relation(*i, *j);
                    work.push(splice(vec![
                        Letter::Coef(rel.constant.clone()),
                        Letter::Var(*i),
                        Letter::Var(*j),
                    ]));
                    work.push(splice(vec![Letter::Coef(rel.tail_constant.clone())]));
                    for (m, t) in rel.tail_linear.iter().enumerate() {
                        work.push(splice(vec![Letter::Coef(t.clone()), Letter::Var(m)]));
                    }
                }
                _ => continue,
            }
            rewrote = true;
            break;
        }
        if rewrote {
            continue;
        }
        let mut coeff = ring.one();
        let mut exp = vec![0u32; n];
        for l in &w {
            match l {
                Letter::Coef(c) => coeff = coeff.mul(c),
                Letter::Var(i) => exp[*i] += 1,
            }
        }
        let sum = match out.remove(&exp) {
            Some(d) => d.add(&coeff),
            None => coeff,
        };
        if !sum.is_zero() {
            out.insert(exp, sum);
        }
    }
    out
}

fn words_of(f: &Element) -> Vec<Word> {
    f.terms()
        .map(|(e, c)| {
            let mut w = vec![Letter::Coef(c.clone())];
            for (i, &k) in e.as_slice().iter().enumerate() {
                w.extend((0..k).map(|_| Letter::Var(i)));
            }
            w
        })
        .collect()
}

/// The product `fg` computed by the naive rewriter.
pub fn naive_product(f: &Element, g: &Element) -> Element {
    let spec = f.algebra().spec();
    let mut words = Vec::new();
    for a in words_of(f) {
        for b in words_of(g) {
            words.push(a.iter().cloned().chain(b.iter().cloned()).collect());
        }
    }
    let nf = naive_normal_form(spec, words);
    Element::from_terms(f.algebra(), nf.into_iter().map(|(e, c)| (Exponent::from(e), c)))
}

/// `x_i r` as a two-letter word, rewritten naively.
pub fn naive_var_times_coeff(alg: &Algebra, i: usize, r: &Coeff) -> Element {
    let nf = naive_normal_form(alg.spec(), vec![vec![Letter::Var(i), Letter::Coef(r.clone())]]);
    Element::from_terms(alg, nf.into_iter().map(|(e, c)| (Exponent::from(e), c)))
}
