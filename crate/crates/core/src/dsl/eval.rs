use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::error::{ParseError, ParseErrorKind};
use super::parser::{Ast, Node};
use crate::burchnall::BivariatePoly;
use crate::coeff::{ring_div, Coeff, CoeffError, CoeffRing};
use crate::pbw::{Algebra, Element};

/// Largest degree in the ring generators an evaluation may produce.
const MAX_COEFF_DEGREE: u64 = 2048;
/// Largest total degree in the algebra variables.
const MAX_DEGREE: u64 = 64;
/// Largest exponent applied to a rational number.
const MAX_RATIONAL_EXPONENT: i64 = 4096;

/// Values an expression can be evaluated into.
pub(crate) trait Domain {
    type V: Clone;
    fn number(&self, n: &BigInt) -> Self::V;
    fn ident(&self, name: &str) -> Option<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V, ParseErrorKind>;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V, ParseErrorKind>;
    fn pow(&self, a: &Self::V, e: i64) -> Result<Self::V, ParseErrorKind>;
}

pub(crate) fn eval<D: Domain>(d: &D, node: &Node) -> Result<D::V, ParseError> {
    let at = |kind| ParseError::new(node.pos, kind);
    Ok(match &node.ast {
        Ast::Num(n) => d.number(n),
        Ast::Ident(s) => d
            .ident(s)
            .ok_or_else(|| at(ParseErrorKind::UnknownIdentifier(s.clone())))?,
        Ast::Neg(a) => d.neg(&eval(d, a)?),
        Ast::Add(a, b) => d.add(&eval(d, a)?, &eval(d, b)?),
        Ast::Sub(a, b) => d.add(&eval(d, a)?, &d.neg(&eval(d, b)?)),
        Ast::Mul(a, b) => d.mul(&eval(d, a)?, &eval(d, b)?).map_err(at)?,
        Ast::Div(a, b) => d.div(&eval(d, a)?, &eval(d, b)?).map_err(at)?,
        Ast::Pow(a, e) => d.pow(&eval(d, a)?, *e).map_err(at)?,
    })
}

fn coeff_error(e: CoeffError) -> ParseErrorKind {
    match e {
        CoeffError::DivisionByZero => ParseErrorKind::DivisionByZero,
        CoeffError::NotDivisible => ParseErrorKind::NotDivisible,
        CoeffError::NegativePower => ParseErrorKind::NegativePower,
        CoeffError::RingMismatch => ParseErrorKind::Syntax("coefficient ring mismatch".into()),
    }
}

fn rational(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn check_exponent(base_degree: u64, e: i64, cap: u64) -> Result<(), ParseErrorKind> {
    if e.unsigned_abs() > MAX_RATIONAL_EXPONENT as u64 || base_degree.saturating_mul(e.unsigned_abs()) > cap {
        return Err(ParseErrorKind::TooLarge);
    }
    Ok(())
}

/// Coefficients of a ring, with optional named rational parameters.
pub(crate) struct CoeffDomain<'a> {
    pub ring: &'a CoeffRing,
    pub params: &'a BTreeMap<String, BigRational>,
}

impl Domain for CoeffDomain<'_> {
    type V = Coeff;

    fn number(&self, n: &BigInt) -> Coeff {
        self.ring.from_rational(rational(n))
    }

    fn ident(&self, name: &str) -> Option<Coeff> {
        if let Some(k) = self.ring.generators().iter().position(|g| g == name) {
            return Some(self.ring.generator(k));
        }
        self.params.get(name).map(|q| self.ring.from_rational(q.clone()))
    }

    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        a.add(b)
    }

    fn neg(&self, a: &Coeff) -> Coeff {
        a.neg()
    }

    fn mul(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, ParseErrorKind> {
        if a.degree() as u64 + b.degree() as u64 > MAX_COEFF_DEGREE {
            return Err(ParseErrorKind::TooLarge);
        }
        Ok(a.mul(b))
    }

    fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, ParseErrorKind> {
        ring_div(a, b).map_err(coeff_error)
    }

    fn pow(&self, a: &Coeff, e: i64) -> Result<Coeff, ParseErrorKind> {
        check_exponent(a.degree().into(), e, MAX_COEFF_DEGREE)?;
        a.pow_signed(e).map_err(coeff_error)
    }
}

/// Elements of an algebra. Identifiers are variables, ring generators and
/// rational parameters, in that order of precedence.
pub(crate) struct ElementDomain<'a> {
    alg: &'a Algebra,
    coeffs: CoeffDomain<'a>,
    /// Degree growth of coefficients per variable moved past them.
    growth: u64,
    /// Degree added by derivations and relation coefficients.
    shift: u64,
}

impl<'a> ElementDomain<'a> {
    pub(crate) fn new(alg: &'a Algebra) -> Self {
        let spec = alg.spec();
        let growth = spec
            .sigma
            .iter()
            .flat_map(|s| s.images().iter().map(Coeff::degree))
            .max()
            .unwrap_or(1)
            .max(1) as u64;
        let rel_deg = spec.relations.values().flat_map(|r| {
            std::iter::once(&r.constant)
                .chain(std::iter::once(&r.tail_constant))
                .chain(r.tail_linear.iter())
                .map(Coeff::degree)
        });
        let shift = spec
            .delta
            .iter()
            .flat_map(|d| d.images().iter().map(Coeff::degree))
            .chain(rel_deg)
            .max()
            .unwrap_or(0) as u64
            + growth;
        ElementDomain {
            alg,
            coeffs: CoeffDomain {
                ring: &spec.ring,
                params: &spec.params,
            },
            growth,
            shift,
        }
    }

    fn size(f: &Element) -> (u64, u64) {
        (f.deg().finite().unwrap_or(0).into(), f.coeff_degree().into())
    }

    /// Rough upper bound on the degrees of a product.
    fn product_size(&self, a: (u64, u64), b: (u64, u64)) -> Option<(u64, u64)> {
        let x = a.0 + b.0;
        let spread = u32::try_from(a.0).ok().and_then(|k| self.growth.checked_pow(k))?;
        let c = b
            .1
            .checked_add(self.shift.checked_mul(a.0.checked_mul(b.0 + 1)?)?)?
            .checked_mul(spread)?
            .checked_add(a.1)?;
        (x <= MAX_DEGREE && c <= MAX_COEFF_DEGREE).then_some((x, c))
    }

    fn scalar(&self, f: &Element) -> Option<Coeff> {
        f.is_scalar()
            .then(|| f.coeff(&crate::pbw::Exponent::zero(self.alg.num_vars())))
    }
}

impl Domain for ElementDomain<'_> {
    type V = Element;

    fn number(&self, n: &BigInt) -> Element {
        Element::constant(self.alg, self.coeffs.number(n))
    }

    fn ident(&self, name: &str) -> Option<Element> {
        if let Some(i) = self.alg.spec().var_index(name) {
            return Some(Element::var(self.alg, i));
        }
        self.coeffs.ident(name).map(|c| Element::constant(self.alg, c))
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        Element::add(a, b)
    }

    fn neg(&self, a: &Element) -> Element {
        Element::neg(a)
    }

    fn mul(&self, a: &Element, b: &Element) -> Result<Element, ParseErrorKind> {
        self.product_size(Self::size(a), Self::size(b))
            .ok_or(ParseErrorKind::TooLarge)?;
        Ok(Element::mul(a, b))
    }

    fn div(&self, a: &Element, b: &Element) -> Result<Element, ParseErrorKind> {
        let Some(c) = self.scalar(b) else {
            return Err(ParseErrorKind::Syntax("can only divide by a coefficient".into()));
        };
        match c.inv() {
            Ok(inv) => self.mul(a, &Element::constant(self.alg, inv)),
            Err(CoeffError::NotDivisible) => match self.scalar(a) {
                Some(ac) => Ok(Element::constant(self.alg, ring_div(&ac, &c).map_err(coeff_error)?)),
                None => Err(ParseErrorKind::NotDivisible),
            },
            Err(e) => Err(coeff_error(e)),
        }
    }

    fn pow(&self, a: &Element, e: i64) -> Result<Element, ParseErrorKind> {
        if let Some(c) = self.scalar(a) {
            return Ok(Element::constant(self.alg, self.coeffs.pow(&c, e)?));
        }
        if e < 0 {
            return Err(ParseErrorKind::NegativePower);
        }
        if e as u64 > MAX_DEGREE {
            return Err(ParseErrorKind::TooLarge);
        }
        let unit = Self::size(a);
        let mut size = (0, 0);
        for _ in 0..e {
            size = self.product_size(size, unit).ok_or(ParseErrorKind::TooLarge)?;
        }
        Ok(a.pow(e as u32))
    }
}

/// Commutative polynomials in `s` and `t` over Q.
pub(crate) struct BivariateDomain;

impl Domain for BivariateDomain {
    type V = BivariatePoly;

    fn number(&self, n: &BigInt) -> BivariatePoly {
        BivariatePoly::constant(rational(n))
    }

    fn ident(&self, name: &str) -> Option<BivariatePoly> {
        match name {
            "s" => Some(BivariatePoly::s()),
            "t" => Some(BivariatePoly::t()),
            _ => None,
        }
    }

    fn add(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        a.add(b)
    }

    fn neg(&self, a: &BivariatePoly) -> BivariatePoly {
        a.neg()
    }

    fn mul(&self, a: &BivariatePoly, b: &BivariatePoly) -> Result<BivariatePoly, ParseErrorKind> {
        let deg = |p: &BivariatePoly| p.terms().keys().map(|e| (e.0 + e.1) as u64).max().unwrap_or(0);
        if deg(a) + deg(b) > MAX_COEFF_DEGREE {
            return Err(ParseErrorKind::TooLarge);
        }
        Ok(a.mul(b))
    }

    fn div(&self, a: &BivariatePoly, b: &BivariatePoly) -> Result<BivariatePoly, ParseErrorKind> {
        match constant_of(b) {
            Some(c) if c == BigRational::from_integer(0.into()) => Err(ParseErrorKind::DivisionByZero),
            Some(c) => Ok(a.scale(&c.recip())),
            None => Err(ParseErrorKind::NotDivisible),
        }
    }

    fn pow(&self, a: &BivariatePoly, e: i64) -> Result<BivariatePoly, ParseErrorKind> {
        let deg = a.terms().keys().map(|e| (e.0 + e.1) as u64).max().unwrap_or(0);
        check_exponent(deg, e, MAX_COEFF_DEGREE)?;
        if e >= 0 {
            return Ok(a.pow(e as u32));
        }
        match constant_of(a) {
            Some(c) if c == BigRational::from_integer(0.into()) => Err(ParseErrorKind::DivisionByZero),
            Some(c) => Ok(BivariatePoly::constant(num_traits::pow(c.recip(), e.unsigned_abs() as usize))),
            None => Err(ParseErrorKind::NegativePower),
        }
    }
}

fn constant_of(p: &BivariatePoly) -> Option<BigRational> {
    match p.terms().len() {
        0 => Some(BigRational::from_integer(0.into())),
        1 => p.terms().get(&(0, 0)).cloned(),
        _ => None,
    }
}

/// Words in the algebra variables with coefficients written on the left,
/// used for relation right-hand sides before the algebra exists.
pub(crate) type WordPoly = BTreeMap<Vec<usize>, Coeff>;

pub(crate) struct WordDomain<'a> {
    pub coeffs: CoeffDomain<'a>,
    pub var_names: &'a [String],
}

fn word_add(out: &mut WordPoly, w: Vec<usize>, c: Coeff) {
    let sum = match out.get(&w) {
        Some(d) => d.add(&c),
        None => c,
    };
    if sum.is_zero() {
        out.remove(&w);
    } else {
        out.insert(w, sum);
    }
}

impl WordDomain<'_> {
    fn scalar(&self, p: &WordPoly) -> Option<Coeff> {
        match p.len() {
            0 => Some(self.coeffs.ring.zero()),
            1 => p.get(&Vec::new()).cloned(),
            _ => None,
        }
    }
}

impl Domain for WordDomain<'_> {
    type V = WordPoly;

    fn number(&self, n: &BigInt) -> WordPoly {
        let mut out = WordPoly::new();
        word_add(&mut out, vec![], self.coeffs.number(n));
        out
    }

    fn ident(&self, name: &str) -> Option<WordPoly> {
        let mut out = WordPoly::new();
        if let Some(i) = self.var_names.iter().position(|v| v == name) {
            out.insert(vec![i], self.coeffs.ring.one());
            return Some(out);
        }
        word_add(&mut out, vec![], self.coeffs.ident(name)?);
        Some(out)
    }

    fn add(&self, a: &WordPoly, b: &WordPoly) -> WordPoly {
        let mut out = a.clone();
        for (w, c) in b {
            word_add(&mut out, w.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &WordPoly) -> WordPoly {
        a.iter().map(|(w, c)| (w.clone(), c.neg())).collect()
    }

    fn mul(&self, a: &WordPoly, b: &WordPoly) -> Result<WordPoly, ParseErrorKind> {
        let mut out = WordPoly::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                if !wa.is_empty() && cb.constant_value().is_none() {
                    return Err(ParseErrorKind::TailDegree(
                        "coefficients must be written to the left of the variables".into(),
                    ));
                }
                if wa.len() + wb.len() > 2 {
                    return Err(ParseErrorKind::TailDegree("terms of degree above 2".into()));
                }
                let w = wa.iter().chain(wb).copied().collect();
                word_add(&mut out, w, self.coeffs.mul(ca, cb)?);
            }
        }
        Ok(out)
    }

    fn div(&self, a: &WordPoly, b: &WordPoly) -> Result<WordPoly, ParseErrorKind> {
        let Some(c) = self.scalar(b) else {
            return Err(ParseErrorKind::Syntax("can only divide by a coefficient".into()));
        };
        let mut out = WordPoly::new();
        for (w, d) in a {
            if !w.is_empty() && c.constant_value().is_none() {
                return Err(ParseErrorKind::TailDegree(
                    "coefficients must be written to the left of the variables".into(),
                ));
            }
            word_add(&mut out, w.clone(), self.coeffs.div(d, &c)?);
        }
        Ok(out)
    }

    fn pow(&self, a: &WordPoly, e: i64) -> Result<WordPoly, ParseErrorKind> {
        if let Some(c) = self.scalar(a) {
            let mut out = WordPoly::new();
            word_add(&mut out, vec![], self.coeffs.pow(&c, e)?);
            return Ok(out);
        }
        if e < 0 {
            return Err(ParseErrorKind::NegativePower);
        }
        if e > 2 {
            return Err(ParseErrorKind::TailDegree("terms of degree above 2".into()));
        }
        let mut out = self.number(&BigInt::from(1));
        for _ in 0..e {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }
}
