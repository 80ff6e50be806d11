//! Commutation tests, degree-bounded centralizers and the leading
//! coefficient identity for commuting pairs.

use std::collections::BTreeSet;

use crate::coeff::{cmp_deglex, common_denominator, Coeff, CoeffRing, MultiPoly, PolyMonomial};
use crate::error::SolveError;
use crate::linalg::{element_coordinates, nullspace};
use crate::pbw::{Algebra, Element, Exponent};

/// A Q-basis of the centralizer of `center_of` truncated to the given
/// degree bounds, in reduced echelon form.
#[derive(Clone, Debug)]
pub struct CentralizerBasis {
    pub center_of: Element,
    pub degree_bound: u32,
    pub coeff_degree_bound: u32,
    pub elements: Vec<Element>,
}

fn check_pair(f: &Element, g: &Element) -> Result<(), SolveError> {
    if !f.algebra().same(g.algebra()) {
        return Err(SolveError::DifferentAlgebras);
    }
    Ok(())
}

/// `fg = gf`. Panics if the elements belong to different algebras.
pub fn commutes(f: &Element, g: &Element) -> bool {
    f.commutator(g).is_zero()
}

/// All exponent vectors of total degree at most `d`, ascending in the
/// algebra's order.
pub(crate) fn monomials_up_to(alg: &Algebra, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if cur.len() == n {
            out.push(Exponent::from(cur.clone()));
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(alg.num_vars(), d, &mut Vec::new(), &mut out);
    let ord = alg.order();
    out.sort_by(|a, b| ord.cmp(a, b));
    out
}

/// y-monomials of total degree at most `d` in `m` generators, ascending.
pub(crate) fn poly_monomials_up_to(m: usize, d: u32) -> Vec<PolyMonomial> {
    fn rec(m: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<PolyMonomial>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(m, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| cmp_deglex(a, b));
    out
}

/// Coefficient candidates for the unknowns of a centralizer solve.
fn coefficient_basis(ring: &CoeffRing, c: u32, f: &Element) -> Vec<Coeff> {
    match ring {
        CoeffRing::Rational => vec![ring.one()],
        CoeffRing::Polynomial(vars) => poly_monomials_up_to(vars.len(), c)
            .into_iter()
            .map(|m| Coeff::Poly(MultiPoly::from_terms(vars.clone(), [(m, num_traits::One::one())])))
            .collect(),
        CoeffRing::RationalFunction(_) => {
            let y = ring.generator(0);
            let mut out: Vec<Coeff> = (0..=c).map(|k| y.pow(k)).collect();
            let d = common_denominator(ring, f.terms().map(|(_, c)| c));
            let dd = d.degree();
            if dd > 0 && c > 0 {
                let inv = d.pow(c).inv().expect("nonzero denominator");
                out.extend((0..c * dd).map(|k| y.pow(k).mul(&inv)));
            }
            out
        }
    }
}

/// Solves `fg = gf` for `g` with `deg g <= deg_bound` and coefficients of
/// degree at most `coeff_deg_bound` in the ring generators. Over Q(y) the
/// coefficients may also carry powers of the denominator of `f`, up to
/// the same bound.
pub fn centralizer_bounded(
    f: &Element,
    deg_bound: u32,
    coeff_deg_bound: u32,
) -> Result<CentralizerBasis, SolveError> {
    if f.is_zero() {
        return Err(SolveError::ZeroInput);
    }
    let alg = f.algebra();
    let basis = coefficient_basis(alg.ring(), coeff_deg_bound, f);
    let mut unknowns = Vec::new();
    for gamma in monomials_up_to(alg, deg_bound) {
        for b in &basis {
            unknowns.push(Element::monomial(alg, gamma.clone(), b.clone()));
        }
    }
    let columns: Vec<Element> = unknowns.iter().map(|u| f.commutator(u)).collect();
    let scale = common_denominator(
        alg.ring(),
        columns.iter().flat_map(|c| c.terms().map(|(_, c)| c)),
    );
    let relations = nullspace(columns.iter().map(|c| element_coordinates(c, &scale)));
    let elements = relations
        .into_iter()
        .map(|r| {
            let mut g = Element::zero(alg);
            for (i, a) in r {
                g = g.add(&unknowns[i].scalar_mul(&alg.ring().from_rational(a)));
            }
            g
        })
        .collect();
    Ok(CentralizerBasis {
        center_of: f.clone(),
        degree_bound: deg_bound,
        coeff_degree_bound: coeff_deg_bound,
        elements,
    })
}

/// Degrees mod `|exp(f)|` realized by the bounded centralizer.
pub fn residue_class_profile(
    f: &Element,
    deg_bound: u32,
    coeff_deg_bound: u32,
) -> Result<BTreeSet<u32>, SolveError> {
    let modulus = f.exp().ok_or(SolveError::ZeroInput)?.total();
    if modulus == 0 {
        return Err(SolveError::ConstantInput);
    }
    let basis = centralizer_bounded(f, deg_bound, coeff_deg_bound)?;
    Ok(basis
        .elements
        .iter()
        .filter_map(|g| g.deg().finite())
        .map(|d| d % modulus)
        .collect())
}

/// Both sides of `lc(f) sigma^a(lc g) c_{a,b} = lc(g) sigma^b(lc f) c_{b,a}`
/// with `a = exp(f)`, `b = exp(g)`, for a commuting pair.
pub fn lc_identity(f: &Element, g: &Element) -> Result<(Coeff, Coeff), SolveError> {
    check_pair(f, g)?;
    let (Some(lf), Some(lg)) = (f.leading(), g.leading()) else {
        return Err(SolveError::ZeroInput);
    };
    if !commutes(f, g) {
        return Err(SolveError::NotCommuting);
    }
    let alg = f.algebra();
    let (a, b) = (&lf.exponent, &lg.exponent);
    let lhs = lf
        .coeff
        .mul(&alg.sigma_pow(a, &lg.coeff))
        .mul(&alg.commutation_constant(a, b));
    let rhs = lg
        .coeff
        .mul(&alg.sigma_pow(b, &lf.coeff))
        .mul(&alg.commutation_constant(b, a));
    Ok((lhs, rhs))
}

pub fn lc_identity_check(f: &Element, g: &Element) -> Result<bool, SolveError> {
    let (l, r) = lc_identity(f, g)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse_element, preset};

    fn el(alg: &Algebra, s: &str) -> Element {
        parse_element(alg, s).unwrap()
    }

    #[test]
    fn commutes_examples() {
        let w = preset("weyl").unwrap();
        assert!(!commutes(&el(&w, "x"), &el(&w, "y")));
        let f = el(&w, "x*y + x^2");
        assert!(commutes(&f, &(f.pow(3) + f.scalar_mul(&w.ring().from_int(2)))));
        let r = preset("weyl-rational").unwrap();
        assert!(commutes(
            &el(&r, "x^2 - 2*y^-2"),
            &el(&r, "x^3 - 3*y^-2*x + 3*y^-3")
        ));
    }

    #[test]
    fn centralizer_of_x_in_weyl() {
        let w = preset("weyl").unwrap();
        let b = centralizer_bounded(&el(&w, "x"), 2, 0).unwrap();
        let got: Vec<String> = b.elements.iter().map(ToString::to_string).collect();
        assert_eq!(got, ["1", "x", "x^2"]);
    }

    #[test]
    fn centralizer_of_one_is_everything() {
        let w = preset("weyl").unwrap();
        let b = centralizer_bounded(&el(&w, "1"), 1, 1).unwrap();
        let got: Vec<String> = b.elements.iter().map(ToString::to_string).collect();
        assert_eq!(got, ["1", "y", "x", "y*x"]);
    }

    #[test]
    fn centralizer_of_x_in_q_weyl() {
        let a = preset("q-weyl").unwrap();
        let b = centralizer_bounded(&el(&a, "x"), 1, 1).unwrap();
        let got: Vec<String> = b.elements.iter().map(ToString::to_string).collect();
        assert_eq!(got, ["1", "x"]);
        for g in &b.elements {
            assert!(commutes(&b.center_of, g));
        }
    }

    #[test]
    fn centralizer_over_rational_functions() {
        let r = preset("weyl-rational").unwrap();
        let l = el(&r, "x^2 - 2*y^-2");
        let b = centralizer_bounded(&l, 3, 3).unwrap();
        let a = el(&r, "x^3 - 3*y^-2*x + 3*y^-3");
        for g in &b.elements {
            assert!(commutes(&l, g));
        }
        // the span contains 1, L and A
        let degrees: BTreeSet<_> = b.elements.iter().filter_map(|g| g.deg().finite()).collect();
        assert_eq!(degrees, [0, 2, 3].into_iter().collect());
        assert!(commutes(&l, &a));
    }

    #[test]
    fn residue_profiles() {
        let w = preset("weyl").unwrap();
        let p = residue_class_profile(&el(&w, "x^2"), 4, 0).unwrap();
        assert_eq!(p, [0, 1].into_iter().collect());
        assert_eq!(residue_class_profile(&el(&w, "x"), 3, 1).unwrap(), [0].into_iter().collect());
        let q = preset("q-weyl").unwrap();
        let p = residue_class_profile(&el(&q, "x^2"), 4, 2).unwrap();
        assert!(p.iter().all(|&r| r < 2));
        assert_eq!(residue_class_profile(&el(&w, "y"), 2, 0), Err(SolveError::ConstantInput));
        assert_eq!(residue_class_profile(&el(&w, "0"), 2, 0), Err(SolveError::ZeroInput));
    }

    #[test]
    fn lc_identity_examples() {
        let w = preset("q-weyl").unwrap();
        let f = el(&w, "y*x^2 + x");
        assert_eq!(lc_identity_check(&f, &f.pow(2)), Ok(true));
        let r = preset("weyl-rational").unwrap();
        assert_eq!(
            lc_identity_check(&el(&r, "x^2 - 2*y^-2"), &el(&r, "x^3 - 3*y^-2*x + 3*y^-3")),
            Ok(true)
        );
        let a = preset("weyl").unwrap();
        assert_eq!(
            lc_identity_check(&el(&a, "x"), &el(&a, "x + y")),
            Err(SolveError::NotCommuting)
        );
    }

    #[test]
    fn deterministic_output() {
        let q = preset("q-weyl").unwrap();
        let f = el(&q, "x^2");
        let a = centralizer_bounded(&f, 3, 2).unwrap().elements;
        let b = centralizer_bounded(&f, 3, 2).unwrap().elements;
        assert_eq!(a, b);
    }
}
