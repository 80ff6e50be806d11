//! Annihilating polynomials `f(s, t)` with `f(P, Q) = 0` for commuting
//! `P`, `Q`, found as Q[P]-linear dependences among powers of `Q`.

mod bivariate;

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use crate::centralizer::{commutes, poly_monomials_up_to};
use crate::coeff::{common_denominator, Coeff, CoeffRing, MultiPoly, PolyMonomial};
use crate::error::SolveError;
use crate::linalg::{coeff_coordinates, element_coordinates, nullspace, ColumnEchelon, Vector};
use crate::pbw::{AlgebraSpec, Element};

pub use bivariate::{cmp_bideglex, BiExponent, BivariatePoly};

/// Search limits for [`annihilating_polynomial`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoundsConfig {
    /// Largest s-degree tried; `None` means `|exp P| * |exp Q| + 2`.
    pub max_s: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct Annihilator {
    pub poly: BivariatePoly,
    pub s_bound: u32,
    pub t_bound: u32,
    pub verified: bool,
    pub residual: Element,
}

/// Cached powers of one element.
struct Powers {
    pows: Vec<Element>,
}

impl Powers {
    fn new(base: &Element) -> Self {
        Powers {
            pows: vec![Element::one(base.algebra()), base.clone()],
        }
    }

    fn get(&mut self, k: u32) -> &Element {
        while self.pows.len() <= k as usize {
            let next = Element::mul(self.pows.last().unwrap(), &self.pows[1]);
            self.pows.push(next);
        }
        &self.pows[k as usize]
    }
}

fn check_commuting(p: &Element, q: &Element) -> Result<(), SolveError> {
    if !p.algebra().same(q.algebra()) {
        return Err(SolveError::DifferentAlgebras);
    }
    if !commutes(p, q) {
        return Err(SolveError::NotCommuting);
    }
    Ok(())
}

/// `sum a_ij P^i Q^j`.
pub fn evaluate_bivariate(f: &BivariatePoly, p: &Element, q: &Element) -> Result<Element, SolveError> {
    check_commuting(p, q)?;
    let ring = p.algebra().ring();
    let mut pp = Powers::new(p);
    let mut qp = Powers::new(q);
    let mut out = Element::zero(p.algebra());
    for (&(i, j), a) in f.terms() {
        let term = Element::mul(pp.get(i), qp.get(j));
        out = out.add(&term.scalar_mul(&ring.from_rational(a.clone())));
    }
    Ok(out)
}

fn is_constant_element(p: &Element) -> bool {
    p.is_scalar() && p.algebra().spec().is_constant(&p.coeff(&crate::pbw::Exponent::zero(p.algebra().num_vars())))
}

/// Finds `f(s, t)` over Q with `f(P, Q) = 0`, `deg_t f <= max(|exp P|, 1)`,
/// and the smallest leading term among such `f` with the first s-degree
/// bound that admits one. The s-degree bound starts at `|exp Q|`.
pub fn annihilating_polynomial(
    p: &Element,
    q: &Element,
    caps: BoundsConfig,
) -> Result<Annihilator, SolveError> {
    if !p.algebra().same(q.algebra()) {
        return Err(SolveError::DifferentAlgebras);
    }
    if is_constant_element(p) {
        return Err(SolveError::ConstantInput);
    }
    check_commuting(p, q)?;
    let alg = p.algebra();
    let alpha = p.exp().map_or(0, |e| e.total());
    let beta = q.exp().map_or(0, |e| e.total());
    let t_bound = alpha.max(1);
    let max_s = caps.max_s.unwrap_or(alpha * beta + 2);

    let mut pp = Powers::new(p);
    let mut qp = Powers::new(q);
    let mut products: HashMap<BiExponent, Element> = HashMap::new();
    for s_bound in beta.min(max_s)..=max_s {
        let mut cols: Vec<BiExponent> = (0..=s_bound)
            .flat_map(|i| (0..=t_bound).map(move |j| (i, j)))
            .collect();
        cols.sort_by(cmp_bideglex);
        for &(i, j) in &cols {
            if let std::collections::hash_map::Entry::Vacant(slot) = products.entry((i, j)) {
                slot.insert(Element::mul(pp.get(i), qp.get(j)));
            }
        }
        let scale = common_denominator(
            alg.ring(),
            cols.iter().flat_map(|e| products[e].terms().map(|(_, c)| c)),
        );
        let mut ech = ColumnEchelon::new();
        for e in &cols {
            let Some(rel) = ech.push(element_coordinates(&products[e], &scale)) else {
                continue;
            };
            let poly = BivariatePoly::from_terms(rel.into_iter().map(|(k, a)| (cols[k], a))).normalized();
            let residual = evaluate_bivariate(&poly, p, q)?;
            return Ok(Annihilator {
                verified: residual.is_zero(),
                poly,
                s_bound,
                t_bound,
                residual,
            });
        }
    }
    Err(SolveError::CapExhausted { max_s, t_bound })
}

/// Looks for `g_0(P) e_0 + ... + g_k(P) e_k = 0` with `deg g_i <= s_cap`.
/// Each `g_i` is returned as a polynomial in `s`. The dependence found has
/// the smallest leading term when `P^a e_i` is ranked like `s^a t^i`.
pub fn fp_module_dependence(
    p: &Element,
    elems: &[Element],
    s_cap: u32,
) -> Result<Option<Vec<BivariatePoly>>, SolveError> {
    for e in elems {
        check_commuting(p, e)?;
    }
    if elems.is_empty() {
        return Ok(None);
    }
    let alg = p.algebra();
    let mut pp = Powers::new(p);
    let mut cols: Vec<BiExponent> = (0..=s_cap)
        .flat_map(|a| (0..elems.len() as u32).map(move |i| (a, i)))
        .collect();
    cols.sort_by(cmp_bideglex);
    let products: Vec<Element> = cols
        .iter()
        .map(|&(a, i)| Element::mul(pp.get(a), &elems[i as usize]))
        .collect();
    let scale = common_denominator(alg.ring(), products.iter().flat_map(|e| e.terms().map(|(_, c)| c)));
    let mut ech = ColumnEchelon::new();
    for prod in &products {
        if let Some(rel) = ech.push(element_coordinates(prod, &scale)) {
            let mut rows = vec![BivariatePoly::zero(); elems.len()];
            for (k, a) in rel {
                let (pow, i) = cols[k];
                rows[i as usize] = rows[i as usize].add(&BivariatePoly::monomial(pow, 0, a));
            }
            return Ok(Some(rows));
        }
    }
    Ok(None)
}

/// `sum g_i(P) e_i` for the rows of a dependence.
pub fn apply_dependence(p: &Element, elems: &[Element], rows: &[BivariatePoly]) -> Result<Element, SolveError> {
    let mut out = Element::zero(p.algebra());
    for (e, g) in elems.iter().zip(rows) {
        let gp = evaluate_bivariate(g, p, &Element::one(p.algebra()))?;
        out = out.add(&gp.mul(e));
    }
    Ok(out)
}

/// Constants of bounded degree found by [`constants_field_probe`].
#[derive(Clone, Debug)]
pub struct ConstantsReport {
    pub sample_deg: u32,
    /// Q-basis in reduced echelon form.
    pub basis: Vec<Coeff>,
}

impl ConstantsReport {
    /// True when only the rational constants were found.
    pub fn only_rationals(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].constant_value().is_some()
    }
}

/// Solves `sigma_i(r) = r`, `delta_i(r) = 0` for polynomial `r` of degree at
/// most `sample_deg` in the ring generators.
pub fn constants_field_probe(spec: &AlgebraSpec, sample_deg: u32) -> ConstantsReport {
    let ring = &spec.ring;
    let candidates: Vec<Coeff> = match ring {
        CoeffRing::Rational => vec![ring.one()],
        CoeffRing::Polynomial(vars) => poly_monomials_up_to(vars.len(), sample_deg)
            .into_iter()
            .map(|m| Coeff::Poly(MultiPoly::from_terms(vars.clone(), [(m, BigRational::one())])))
            .collect(),
        CoeffRing::RationalFunction(_) => (0..=sample_deg).map(|k| ring.generator(0).pow(k)).collect(),
    };
    // one block of equations per map: sigma_i(r) - r and delta_i(r)
    let mut blocks: Vec<Vec<Coeff>> = Vec::new();
    for (s, d) in spec.sigma.iter().zip(&spec.delta) {
        blocks.push(candidates.iter().map(|m| s.apply(m).sub(m)).collect());
        blocks.push(candidates.iter().map(|m| d.apply(m)).collect());
    }
    let scales: Vec<Coeff> = blocks.iter().map(|b| common_denominator(ring, b.iter())).collect();
    let columns = (0..candidates.len()).map(|c| {
        let mut v: Vector<(usize, PolyMonomial)> = Vector::new();
        for (k, block) in blocks.iter().enumerate() {
            for (m, a) in coeff_coordinates(&block[c], &scales[k]) {
                v.insert((k, m), a);
            }
        }
        v
    });
    let basis = nullspace(columns)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .fold(ring.zero(), |acc, (c, a)| acc.add(&candidates[c].scale(&a)))
        })
        .collect();
    ConstantsReport { sample_deg, basis }
}
