use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::fmt_rational_factor;

/// `(s-exponent, t-exponent)`
pub type BiExponent = (u32, u32);

/// Graded order on `(i, j)`: total degree first, then `s` above `t`.
pub fn cmp_bideglex(a: &BiExponent, b: &BiExponent) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

/// A commutative polynomial in `s` and `t` over Q.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<BiExponent, BigRational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigRational::one())
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: BigRational) -> Self {
        Self::from_terms([((i, j), c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BiExponent, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: BiExponent, c: BigRational) {
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<BiExponent, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_s(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// Leading exponent and coefficient in the graded order.
    pub fn leading(&self) -> Option<(BiExponent, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| cmp_bideglex(a.0, b.0))
            .map(|(e, c)| (*e, c))
    }

    /// Scaled so the leading coefficient is one.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term((a.0 + b.0, a.1 + b.1), c * d);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `f(s, t / lambda)`, which annihilates `(P, lambda Q)` whenever `f`
    /// annihilates `(P, Q)`.
    pub fn rescale_t(&self, lambda: &BigRational) -> Self {
        let inv = lambda.recip();
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut k = c.clone();
            for _ in 0..e.1 {
                k *= &inv;
            }
            (*e, k)
        }))
    }

    pub fn sorted_terms(&self) -> Vec<(BiExponent, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|a, b| cmp_bideglex(&b.0, &a.0));
        v
    }
}

fn fmt_bimonomial(e: BiExponent) -> String {
    let mut parts = Vec::new();
    for (name, k) in [("s", e.0), ("t", e.1)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mono = fmt_bimonomial(e);
            match (mag.is_one(), mono.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&mono)?,
                (false, true) => f.write_str(&fmt_rational_factor(&mag))?,
                (false, false) => write!(f, "{}*{}", fmt_rational_factor(&mag), mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({self})")
    }
}

impl std::str::FromStr for BivariatePoly {
    type Err = crate::dsl::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::dsl::parse_bivariate(s)
    }
}
