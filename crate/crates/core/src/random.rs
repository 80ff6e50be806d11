//! Random coefficients and elements for probes and property tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::coeff::{Coeff, CoeffRing, MultiPoly, PolyMonomial, RatFunc};
use crate::pbw::{Algebra, Element, Exponent};

/// Size limits for [`random_element`].
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    /// Maximum total degree in the algebra variables.
    pub max_degree: u32,
    /// Maximum degree of coefficients in the ring generators.
    pub max_coeff_degree: u32,
    /// Maximum number of standard monomials.
    pub max_terms: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_degree: 2,
            max_coeff_degree: 1,
            max_terms: 3,
        }
    }
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max_abs: i64, max_den: i64) -> BigRational {
    let n = rng.random_range(-max_abs..=max_abs);
    let d = rng.random_range(1..=max_den.max(1));
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    loop {
        let q = random_rational(rng, 4, 3);
        if q != BigRational::from_integer(0.into()) {
            return q;
        }
    }
}

fn random_poly_monomial<R: Rng + ?Sized>(rng: &mut R, m: usize, max_deg: u32) -> PolyMonomial {
    let total = rng.random_range(0..=max_deg);
    let mut e = vec![0u32; m];
    for _ in 0..total {
        e[rng.random_range(0..m)] += 1;
    }
    e
}

fn random_multipoly<R: Rng + ?Sized>(
    rng: &mut R,
    vars: &std::sync::Arc<[String]>,
    max_deg: u32,
) -> MultiPoly {
    let n_terms = rng.random_range(1..=3);
    MultiPoly::from_terms(
        vars.clone(),
        (0..n_terms).map(|_| {
            (
                random_poly_monomial(rng, vars.len(), max_deg),
                random_rational(rng, 4, 3),
            )
        }),
    )
}

/// A random coefficient (possibly zero).
pub fn random_coeff<R: Rng + ?Sized>(ring: &CoeffRing, rng: &mut R, max_deg: u32) -> Coeff {
    match ring {
        CoeffRing::Rational => Coeff::Rational(random_rational(rng, 4, 3)),
        CoeffRing::Polynomial(vars) => Coeff::Poly(random_multipoly(rng, vars, max_deg)),
        CoeffRing::RationalFunction(var) => {
            let num = random_multipoly(rng, var, max_deg);
            let den = if max_deg == 0 || rng.random_bool(0.5) {
                MultiPoly::one(var.clone())
            } else if rng.random_bool(0.5) {
                MultiPoly::generator(var.clone(), 0).pow(rng.random_range(1..=max_deg))
            } else {
                let shift = BigRational::from_integer(rng.random_range(-2i64..=2).into());
                MultiPoly::generator(var.clone(), 0).add(&MultiPoly::constant(var.clone(), shift))
            };
            Coeff::Frac(RatFunc::new(&num, &den).expect("nonzero denominator"))
        }
    }
}

pub fn random_nonzero_coeff<R: Rng + ?Sized>(ring: &CoeffRing, rng: &mut R, max_deg: u32) -> Coeff {
    loop {
        let c = random_coeff(ring, rng, max_deg);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random nonzero coefficient whose value is a rational constant.
pub fn random_rational_coeff<R: Rng + ?Sized>(ring: &CoeffRing, rng: &mut R) -> Coeff {
    ring.from_rational(random_nonzero_rational(rng))
}

/// A random nonzero element.
pub fn random_element<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R, shape: Shape) -> Element {
    let n = alg.num_vars();
    loop {
        let n_terms = rng.random_range(1..=shape.max_terms.max(1));
        let terms = (0..n_terms).map(|_| {
            let deg = rng.random_range(0..=shape.max_degree);
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.random_range(0..n)] += 1;
            }
            (
                Exponent::from(e),
                random_coeff(alg.ring(), rng, shape.max_coeff_degree),
            )
        });
        let f = Element::from_terms(alg, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random element whose leading monomial has degree exactly `degree`.
pub fn random_element_of_degree<R: Rng + ?Sized>(
    alg: &Algebra,
    rng: &mut R,
    degree: u32,
    shape: Shape,
) -> Element {
    let n = alg.num_vars();
    loop {
        let mut e = vec![0u32; n];
        for _ in 0..degree {
            e[rng.random_range(0..n)] += 1;
        }
        let lead = Element::monomial(
            alg,
            Exponent::from(e),
            random_nonzero_coeff(alg.ring(), rng, shape.max_coeff_degree),
        );
        let tail = if degree == 0 {
            Element::zero(alg)
        } else {
            random_element(
                alg,
                rng,
                Shape {
                    max_degree: degree - 1,
                    ..shape
                },
            )
        };
        let f = lead.add(&tail);
        if f.deg().finite() == Some(degree) {
            return f;
        }
    }
}
