use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use super::{CoeffError, MultiPoly};

/// Univariate rational function over Q.
///
/// Invariants: denominator nonzero and monic, numerator and denominator
/// coprime. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    var: Arc<[String]>,
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn zero(var: Arc<[String]>) -> Self {
        assert_eq!(var.len(), 1, "rational functions are univariate");
        RatFunc {
            var,
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn constant(var: Arc<[String]>, c: BigRational) -> Self {
        let mut r = Self::zero(var);
        r.num = UniPoly::constant(c);
        r
    }

    pub fn generator(var: Arc<[String]>) -> Self {
        let mut r = Self::zero(var);
        r.num = UniPoly::monomial(1, BigRational::one());
        r
    }

    pub(crate) fn from_parts(var: Arc<[String]>, num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero(var);
        }
        let g = UniPoly::gcd(&num, &den);
        if g.is_one() {
            Self::from_coprime(var, num, den)
        } else {
            Self::from_coprime(var, num.div_rem(&g).0, den.div_rem(&g).0)
        }
    }

    /// Normalizes `num / den` for coprime `num` and `den`.
    fn from_coprime(var: Arc<[String]>, mut num: UniPoly, mut den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero(var);
        }
        let lead = den.lead().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { var, num, den }
    }

    /// Builds `num / den` from univariate polynomials.
    pub fn new(num: &MultiPoly, den: &MultiPoly) -> Result<Self, CoeffError> {
        if !num.same_ring(den) || num.vars().len() != 1 {
            return Err(CoeffError::RingMismatch);
        }
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::from_parts(num.vars().clone(), num.to_dense(), den.to_dense()))
    }

    pub fn var(&self) -> &Arc<[String]> {
        &self.var
    }

    pub fn numerator(&self) -> MultiPoly {
        MultiPoly::from_dense(self.var.clone(), &self.num)
    }

    pub fn denominator(&self) -> MultiPoly {
        MultiPoly::from_dense(self.var.clone(), &self.den)
    }

    pub(crate) fn num_dense(&self) -> &UniPoly {
        &self.num
    }

    pub(crate) fn den_dense(&self) -> &UniPoly {
        &self.den
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.var, &other.var) || self.var == other.var
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// max(deg num, deg den)
    pub fn degree(&self) -> u32 {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0)) as u32
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            var: self.var.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::from_parts(self.var.clone(), self.num.add(&other.num), self.den.clone());
        }
        let g = UniPoly::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::from_coprime(self.var.clone(), num, self.den.mul(&other.den));
        }
        let a_co = self.den.div_rem(&g).0;
        let b_co = other.den.div_rem(&g).0;
        let num = self.num.mul(&b_co).add(&other.num.mul(&a_co));
        // only factors of g can cancel
        let h = UniPoly::gcd(&num, &g);
        let den = a_co.mul(&other.den);
        if h.is_one() {
            Self::from_coprime(self.var.clone(), num, den)
        } else {
            Self::from_coprime(self.var.clone(), num.div_rem(&h).0, den.div_rem(&h).0)
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var.clone());
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc {
                var: self.var.clone(),
                num: self.num.mul(&other.num),
                den: UniPoly::one(),
            };
        }
        // cross-cancel before multiplying
        let g1 = UniPoly::gcd(&self.num, &other.den);
        let g2 = UniPoly::gcd(&other.num, &self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = other.den.div_rem(&g1).0;
        let n2 = other.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        Self::from_coprime(self.var.clone(), n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var.clone());
        }
        RatFunc {
            var: self.var.clone(),
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::from_coprime(self.var.clone(), self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            var: self.var.clone(),
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Multiplies by a polynomial `p` given densely.
    pub(crate) fn mul_poly(&self, p: &UniPoly) -> Self {
        Self::from_parts(self.var.clone(), self.num.mul(p), self.den.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var() -> Arc<[String]> {
        Arc::from(vec!["y".to_string()])
    }

    fn y() -> RatFunc {
        RatFunc::generator(var())
    }

    #[test]
    fn sum_of_inverse_powers() {
        // 1/y + 1/y^2 = (y + 1)/y^2, cross-multiplied and reduced by hand
        let a = y().inv().unwrap();
        let b = y().pow(2).inv().unwrap();
        let s = a.add(&b);
        let one = RatFunc::constant(var(), BigRational::one());
        let expect = RatFunc::new(&y().add(&one).numerator(), &y().pow(2).numerator()).unwrap();
        assert_eq!(s, expect);
        assert_eq!(s.to_string(), "(y + 1)/(y^2)");
    }

    #[test]
    fn inverse_times_self_is_one() {
        let y1 = y().add(&RatFunc::constant(var(), BigRational::from_integer(3.into())));
        assert!(y1.mul(&y1.inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let two = BigRational::from_integer(2.into());
        let num = MultiPoly::constant(var(), BigRational::one());
        let den = MultiPoly::generator(var(), 0).scale(&two);
        let r = RatFunc::new(&num, &den).unwrap();
        assert!(r.denominator().leading().unwrap().1.is_one());
        assert_eq!(r.to_string(), "(1/2)/(y)");
    }
}
