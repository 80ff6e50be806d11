use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::algebra::{add_scaled, add_term, Algebra, Terms};
use super::{Degree, Exponent, MonomialOrder};
use crate::coeff::Coeff;

/// An element in PBW normal form: a finite sum of `c_alpha * x^alpha` with
/// coefficients on the left and no zero coefficients.
#[derive(Clone)]
pub struct Element {
    alg: Algebra,
    terms: Terms,
}

/// Leading monomial exponent and coefficient. The zero element has none;
/// `Element::leading` returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub exponent: Exponent,
    pub coeff: Coeff,
}

impl Element {
    pub fn zero(alg: &Algebra) -> Self {
        Element {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg, alg.ring().one())
    }

    /// `c * 1`; panics if `c` is not in the algebra's coefficient ring.
    pub fn constant(alg: &Algebra, c: Coeff) -> Self {
        Self::monomial(alg, Exponent::zero(alg.num_vars()), c)
    }

    /// The variable `x_i`.
    pub fn var(alg: &Algebra, i: usize) -> Self {
        Self::monomial(alg, Exponent::unit(alg.num_vars(), i), alg.ring().one())
    }

    /// `c * x^alpha`
    pub fn monomial(alg: &Algebra, alpha: Exponent, c: Coeff) -> Self {
        Self::from_terms(alg, [(alpha, c)])
    }

    /// Sums the given terms; panics on a foreign coefficient ring or an
    /// exponent of the wrong length.
    pub fn from_terms(alg: &Algebra, terms: impl IntoIterator<Item = (Exponent, Coeff)>) -> Self {
        let mut out = Terms::new();
        for (e, c) in terms {
            assert_eq!(e.len(), alg.num_vars(), "exponent length mismatch");
            assert!(alg.ring().contains(&c), "coefficient outside the algebra's ring");
            add_term(&mut out, e, c);
        }
        Element {
            alg: alg.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_raw(alg: &Algebra, terms: Terms) -> Self {
        Element {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// Support `E(f)` with coefficients, ordered by exponent vector.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Exponent, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &Exponent) -> Coeff {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| self.alg.ring().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the element lies in the coefficient ring.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Exponent::is_zero)
    }

    /// The rational value when the element is `q * 1` with `q` in Q.
    pub fn rational_value(&self) -> Option<num_rational::BigRational> {
        if !self.is_scalar() {
            return None;
        }
        match self.terms.values().next() {
            None => Some(num_traits::Zero::zero()),
            Some(c) => c.constant_value(),
        }
    }

    fn check_same(&self, other: &Element) {
        assert!(self.alg.same(&other.alg), "elements of different algebras");
    }

    pub fn add(&self, other: &Element) -> Element {
        self.check_same(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        Element::from_raw(&self.alg, terms)
    }

    pub fn neg(&self) -> Element {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect();
        Element::from_raw(&self.alg, terms)
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    /// Left module action `r * f`.
    pub fn scalar_mul(&self, r: &Coeff) -> Element {
        assert!(self.alg.ring().contains(r), "coefficient outside the algebra's ring");
        let mut terms = Terms::new();
        add_scaled(&mut terms, r, &self.terms);
        Element::from_raw(&self.alg, terms)
    }

    /// Ring product, normalized to the PBW basis.
    pub fn mul(&self, other: &Element) -> Element {
        self.check_same(other);
        Element::from_raw(&self.alg, self.alg.mul_terms(&self.terms, &other.terms))
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(&self.alg);
        for _ in 0..e {
            acc = Element::mul(&acc, self);
        }
        acc
    }

    /// `fg - gf`
    pub fn commutator(&self, other: &Element) -> Element {
        Element::sub(&self.mul(other), &other.mul(self))
    }

    pub fn leading_with(&self, ord: &MonomialOrder) -> Option<LeadingTerm> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(e, c)| LeadingTerm {
                exponent: e.clone(),
                coeff: c.clone(),
            })
    }

    /// Leading term under the algebra's monomial order.
    pub fn leading(&self) -> Option<LeadingTerm> {
        self.leading_with(self.alg.order())
    }

    /// `exp(f)` under the algebra's order; `None` for zero.
    pub fn exp(&self) -> Option<Exponent> {
        self.leading().map(|t| t.exponent)
    }

    pub fn lc(&self) -> Coeff {
        self.leading()
            .map(|t| t.coeff)
            .unwrap_or_else(|| self.alg.ring().zero())
    }

    /// Maximum total degree over the support, independent of the order.
    pub fn deg(&self) -> Degree {
        self.terms
            .keys()
            .map(Exponent::total)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Terms in decreasing order under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Exponent, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    /// Largest coefficient degree in the ring generators.
    pub fn coeff_degree(&self) -> u32 {
        self.terms.values().map(Coeff::degree).max().unwrap_or(0)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same(&other.alg) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::print_expr(self))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                Element::$method(self, rhs)
            }
        }
        impl $trait<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                Element::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(&self)
    }
}
