//! Exact coefficient rings: Q, Q[y1..ym] and Q(y), together with the
//! twisting endomorphisms and sigma-derivations that act on them.

mod maps;
mod multipoly;
mod ratfunc;
pub(crate) mod unipoly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use maps::{RingMap, SigmaDerivation};
pub use multipoly::{cmp_deglex, MultiPoly, PolyMonomial};
pub use ratfunc::RatFunc;

pub(crate) use multipoly::fmt_monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("coefficient ring mismatch")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division in a polynomial ring")]
    NotDivisible,
    #[error("negative powers need rational-function coefficients")]
    NegativePower,
}

/// Which coefficient ring an algebra is built over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Rational,
    /// Q[y1..ym]
    Polynomial(Arc<[String]>),
    /// Q(y), one generator.
    RationalFunction(Arc<[String]>),
}

impl CoeffRing {
    pub fn polynomial<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        CoeffRing::Polynomial(Arc::from(names))
    }

    pub fn rational_function(name: impl Into<String>) -> Self {
        CoeffRing::RationalFunction(Arc::from(vec![name.into()]))
    }

    pub fn generators(&self) -> &[String] {
        match self {
            CoeffRing::Rational => &[],
            CoeffRing::Polynomial(v) | CoeffRing::RationalFunction(v) => v,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffRing::Polynomial(_))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            CoeffRing::Rational => "rational",
            CoeffRing::Polynomial(_) => "polynomial",
            CoeffRing::RationalFunction(_) => "rational-function",
        }
    }

    pub fn from_rational(&self, q: BigRational) -> Coeff {
        match self {
            CoeffRing::Rational => Coeff::Rational(q),
            CoeffRing::Polynomial(v) => Coeff::Poly(MultiPoly::constant(v.clone(), q)),
            CoeffRing::RationalFunction(v) => Coeff::Frac(RatFunc::constant(v.clone(), q)),
        }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(&self) -> Coeff {
        self.from_rational(BigRational::zero())
    }

    pub fn one(&self) -> Coeff {
        self.from_rational(BigRational::one())
    }

    /// The `k`-th ring generator; panics when out of range.
    pub fn generator(&self, k: usize) -> Coeff {
        match self {
            CoeffRing::Rational => panic!("Q has no generators"),
            CoeffRing::Polynomial(v) => Coeff::Poly(MultiPoly::generator(v.clone(), k)),
            CoeffRing::RationalFunction(v) => {
                assert_eq!(k, 0);
                Coeff::Frac(RatFunc::generator(v.clone()))
            }
        }
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (CoeffRing::Rational, Coeff::Rational(_)) => true,
            (CoeffRing::Polynomial(v), Coeff::Poly(p)) => **v == **p.vars(),
            (CoeffRing::RationalFunction(v), Coeff::Frac(r)) => **v == **r.var(),
            _ => false,
        }
    }

    /// Ring element from coordinates `(y-monomial, rational)`.
    pub fn from_coordinates(
        &self,
        coords: impl IntoIterator<Item = (PolyMonomial, BigRational)>,
    ) -> Coeff {
        match self {
            CoeffRing::Rational => {
                Coeff::Rational(coords.into_iter().map(|(_, c)| c).sum::<BigRational>())
            }
            CoeffRing::Polynomial(v) => Coeff::Poly(MultiPoly::from_terms(v.clone(), coords)),
            CoeffRing::RationalFunction(v) => {
                let p = MultiPoly::from_terms(v.clone(), coords);
                Coeff::Frac(RatFunc::from_parts(v.clone(), p.to_dense(), unipoly::UniPoly::one()))
            }
        }
    }
}

/// An element of one of the supported coefficient rings, always in
/// canonical form so that structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Poly(MultiPoly),
    Frac(RatFunc),
}

fn mismatch() -> ! {
    panic!("coefficient ring mismatch")
}

impl Coeff {
    pub fn same_ring(&self, other: &Coeff) -> bool {
        match (self, other) {
            (Coeff::Rational(_), Coeff::Rational(_)) => true,
            (Coeff::Poly(a), Coeff::Poly(b)) => a.same_ring(b),
            (Coeff::Frac(a), Coeff::Frac(b)) => a.same_ring(b),
            _ => false,
        }
    }

    pub fn ring(&self) -> CoeffRing {
        match self {
            Coeff::Rational(_) => CoeffRing::Rational,
            Coeff::Poly(p) => CoeffRing::Polynomial(p.vars().clone()),
            Coeff::Frac(r) => CoeffRing::RationalFunction(r.var().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Poly(p) => p.is_zero(),
            Coeff::Frac(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Poly(p) => p.is_one(),
            Coeff::Frac(r) => r.is_one(),
        }
    }

    /// `Some(q)` when the element is the rational constant `q`.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self {
            Coeff::Rational(q) => Some(q.clone()),
            Coeff::Poly(p) => p.constant_value(),
            Coeff::Frac(r) => r.constant_value(),
        }
    }

    /// Degree in the ring generators (numerator/denominator maximum for Q(y)).
    pub fn degree(&self) -> u32 {
        match self {
            Coeff::Rational(_) => 0,
            Coeff::Poly(p) => p.total_degree().unwrap_or(0),
            Coeff::Frac(r) => r.degree(),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(q) => Coeff::Rational(-q),
            Coeff::Poly(p) => Coeff::Poly(p.neg()),
            Coeff::Frac(r) => Coeff::Frac(r.neg()),
        }
    }

    /// Sum; panics on a ring mismatch (see [`ring_add`] for the checked form).
    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::Poly(a.add(b)),
            (Coeff::Frac(a), Coeff::Frac(b)) => Coeff::Frac(a.add(b)),
            _ => mismatch(),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a - b),
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::Poly(a.sub(b)),
            (Coeff::Frac(a), Coeff::Frac(b)) => Coeff::Frac(a.sub(b)),
            _ => mismatch(),
        }
    }

    /// Product; panics on a ring mismatch (see [`ring_mul`]).
    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::Poly(a.mul(b)),
            (Coeff::Frac(a), Coeff::Frac(b)) => Coeff::Frac(a.mul(b)),
            _ => mismatch(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(a * q),
            Coeff::Poly(p) => Coeff::Poly(p.scale(q)),
            Coeff::Frac(r) => Coeff::Frac(r.scale(q)),
        }
    }

    pub fn pow(&self, e: u32) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(num_traits::pow(a.clone(), e as usize)),
            Coeff::Poly(p) => Coeff::Poly(p.pow(e)),
            Coeff::Frac(r) => Coeff::Frac(r.pow(e)),
        }
    }

    /// Integer power; negative exponents need an invertible element.
    pub fn pow_signed(&self, e: i64) -> Result<Coeff, CoeffError> {
        let mag = u32::try_from(e.unsigned_abs()).map_err(|_| CoeffError::NegativePower)?;
        if e >= 0 {
            return Ok(self.pow(mag));
        }
        match self {
            Coeff::Poly(_) => match self.constant_value() {
                Some(q) if !q.is_zero() => Ok(self.ring().from_rational(q.recip()).pow(mag)),
                Some(_) => Err(CoeffError::DivisionByZero),
                None => Err(CoeffError::NegativePower),
            },
            _ => Ok(self.inv()?.pow(mag)),
        }
    }

    pub fn inv(&self) -> Result<Coeff, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        match self {
            Coeff::Rational(a) => Ok(Coeff::Rational(a.recip())),
            Coeff::Frac(r) => Ok(Coeff::Frac(r.inv()?)),
            Coeff::Poly(p) => match p.constant_value() {
                Some(q) => Ok(self.ring().from_rational(q.recip())),
                None => Err(CoeffError::NotDivisible),
            },
        }
    }

    /// Denominator as a ring element (one outside Q(y)).
    pub fn denominator(&self) -> Coeff {
        match self {
            Coeff::Frac(r) => Coeff::Frac(RatFunc::from_parts(
                r.var().clone(),
                r.den_dense().clone(),
                unipoly::UniPoly::one(),
            )),
            _ => self.ring().one(),
        }
    }

    /// Coordinates over the y-monomial basis. Only defined for polynomial
    /// values; a rational function with nontrivial denominator returns `None`.
    pub fn coordinates(&self) -> Option<Vec<(PolyMonomial, BigRational)>> {
        match self {
            Coeff::Rational(q) => Some(if q.is_zero() {
                vec![]
            } else {
                vec![(vec![], q.clone())]
            }),
            Coeff::Poly(p) => Some(p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()),
            Coeff::Frac(r) if r.is_polynomial() => Some(
                r.num_dense()
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (vec![k as u32], c.clone()))
                    .collect(),
            ),
            Coeff::Frac(_) => None,
        }
    }

    /// Sign and magnitude text for printing `coefficient * monomial`.
    /// A magnitude of `None` means the coefficient is plus or minus one.
    pub(crate) fn factor_repr(&self) -> (bool, Option<String>) {
        if let Some(q) = self.constant_value() {
            let mag = q.abs();
            return (q.is_negative(), (!mag.is_one()).then(|| fmt_rational_factor(&mag)));
        }
        let poly_repr = |p: &MultiPoly| -> (bool, Option<String>) {
            if p.terms().len() == 1 {
                let (m, c) = p.terms().iter().next().unwrap();
                let mono = fmt_monomial(p.vars(), m);
                let mag = c.abs();
                let s = if mag.is_one() {
                    mono
                } else {
                    format!("{}*{}", fmt_rational_factor(&mag), mono)
                };
                (c.is_negative(), Some(s))
            } else if p.leading().unwrap().1.is_negative() {
                (true, Some(format!("({})", p.neg())))
            } else {
                (false, Some(format!("({p})")))
            }
        };
        match self {
            Coeff::Rational(_) => unreachable!(),
            Coeff::Poly(p) => poly_repr(p),
            Coeff::Frac(r) if r.is_polynomial() => poly_repr(&r.numerator()),
            Coeff::Frac(r) => {
                let num = r.numerator();
                let neg = num.leading().unwrap().1.is_negative();
                let num = if neg { num.neg() } else { num };
                (neg, Some(format!("({})/({})", num, r.denominator())))
            }
        }
    }
}

/// `3`, `1/2` for a positive rational.
pub(crate) fn fmt_rational_factor(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) if q.is_negative() => write!(f, "-{}", fmt_rational_factor(&-q)),
            Coeff::Rational(q) => f.write_str(&fmt_rational_factor(q)),
            Coeff::Poly(p) => write!(f, "{p}"),
            Coeff::Frac(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coeff({self})")
    }
}

pub fn ring_add(a: &Coeff, b: &Coeff) -> Result<Coeff, CoeffError> {
    if !a.same_ring(b) {
        return Err(CoeffError::RingMismatch);
    }
    Ok(a.add(b))
}

pub fn ring_sub(a: &Coeff, b: &Coeff) -> Result<Coeff, CoeffError> {
    if !a.same_ring(b) {
        return Err(CoeffError::RingMismatch);
    }
    Ok(a.sub(b))
}

pub fn ring_mul(a: &Coeff, b: &Coeff) -> Result<Coeff, CoeffError> {
    if !a.same_ring(b) {
        return Err(CoeffError::RingMismatch);
    }
    Ok(a.mul(b))
}

/// Exact quotient. Fields divide by any nonzero element; in Q[y] the
/// divisor must divide exactly.
pub fn ring_div(a: &Coeff, b: &Coeff) -> Result<Coeff, CoeffError> {
    if !a.same_ring(b) {
        return Err(CoeffError::RingMismatch);
    }
    if b.is_zero() {
        return Err(CoeffError::DivisionByZero);
    }
    match (a, b) {
        (Coeff::Poly(p), Coeff::Poly(d)) => Ok(Coeff::Poly(p.exact_div(d)?)),
        _ => Ok(a.mul(&b.inv()?)),
    }
}

/// Least common multiple of the denominators of `coeffs`, monic, as an
/// element of the same ring (one outside Q(y)).
pub(crate) fn common_denominator<'a>(
    ring: &CoeffRing,
    coeffs: impl IntoIterator<Item = &'a Coeff>,
) -> Coeff {
    let CoeffRing::RationalFunction(var) = ring else {
        return ring.one();
    };
    let mut acc = unipoly::UniPoly::one();
    for c in coeffs {
        if let Coeff::Frac(r) = c {
            let d = r.den_dense();
            if d.is_one() {
                continue;
            }
            let g = unipoly::UniPoly::gcd(&acc, d);
            acc = acc.mul(&d.div_rem(&g).0);
        }
    }
    Coeff::Frac(RatFunc::from_parts(var.clone(), acc, unipoly::UniPoly::one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_sum() {
        let s = ring_add(&Coeff::Rational(q(1, 2)), &Coeff::Rational(q(1, 3))).unwrap();
        assert_eq!(s, Coeff::Rational(q(5, 6)));
    }

    #[test]
    fn additive_identity() {
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        assert_eq!(ring_add(&y, &r.zero()).unwrap(), y);
    }

    #[test]
    fn frac_sum_of_inverses() {
        let r = CoeffRing::rational_function("y");
        let y = r.generator(0);
        let s = ring_add(&y.inv().unwrap(), &y.pow(2).inv().unwrap()).unwrap();
        let expect = ring_div(&y.add(&r.one()), &y.pow(2)).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn products() {
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        let one = r.one();
        assert_eq!(
            ring_mul(&y.add(&one), &y.sub(&one)).unwrap(),
            y.pow(2).sub(&one)
        );
        let f = CoeffRing::rational_function("y");
        let fy = f.generator(0);
        assert!(ring_mul(&fy.inv().unwrap(), &fy).unwrap().is_one());
        let a = y.scale(&q(2, 1));
        let b = y.pow(2).scale(&q(3, 1));
        assert_eq!(ring_mul(&a, &b).unwrap(), y.pow(3).scale(&q(6, 1)));
    }

    #[test]
    fn division() {
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        let one = r.one();
        assert_eq!(ring_div(&y.pow(2).sub(&one), &y.sub(&one)).unwrap(), y.add(&one));
        assert_eq!(ring_div(&y, &y.add(&one)), Err(CoeffError::NotDivisible));
        assert_eq!(ring_div(&y, &r.zero()), Err(CoeffError::DivisionByZero));

        let f = CoeffRing::rational_function("y");
        let inv = ring_div(&f.one(), &f.generator(0)).unwrap();
        match &inv {
            Coeff::Frac(rf) => {
                assert!(rf.numerator().is_one());
                assert_eq!(rf.denominator(), MultiPoly::generator(rf.var().clone(), 0));
            }
            _ => panic!("expected a rational function"),
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = CoeffRing::polynomial(["y"]).generator(0);
        let b = CoeffRing::polynomial(["z"]).generator(0);
        assert_eq!(ring_add(&a, &b), Err(CoeffError::RingMismatch));
        assert_eq!(
            ring_mul(&a, &Coeff::Rational(q(1, 1))),
            Err(CoeffError::RingMismatch)
        );
    }

    #[test]
    fn negative_powers_only_in_fields() {
        let r = CoeffRing::polynomial(["y"]);
        assert_eq!(r.generator(0).pow_signed(-2), Err(CoeffError::NegativePower));
        let f = CoeffRing::rational_function("y");
        let y = f.generator(0);
        assert_eq!(y.pow_signed(-2).unwrap().mul(&y.pow(2)), f.one());
    }

    #[test]
    fn factor_repr_signs() {
        let r = CoeffRing::polynomial(["y"]);
        let y = r.generator(0);
        assert_eq!(y.scale(&q(-4, 1)).factor_repr(), (true, Some("4*y".into())));
        assert_eq!(r.from_int(-1).factor_repr(), (true, None));
        assert_eq!(
            y.neg().add(&r.one()).factor_repr(),
            (true, Some("(y - 1)".into()))
        );
    }
}
