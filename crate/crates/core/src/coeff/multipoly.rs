use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational_factor, CoeffError};

/// Exponent vector of a commutative monomial in the ring generators.
pub type PolyMonomial = Vec<u32>;

/// Sparse polynomial over Q in a fixed, ordered list of generators.
///
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<PolyMonomial, BigRational>,
}

/// Degree first, then lexicographic with the first generator most significant.
pub fn cmp_deglex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The `k`-th generator.
    pub fn generator(vars: Arc<[String]>, k: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        Self::from_terms(vars, [(e, BigRational::one())])
    }

    pub fn from_terms(
        vars: Arc<[String]>,
        terms: impl IntoIterator<Item = (PolyMonomial, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), p.vars.len(), "monomial length mismatch");
            add_term(&mut p.terms, m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<PolyMonomial, BigRational> {
        &self.terms
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Leading monomial and coefficient under [`cmp_deglex`].
    pub fn leading(&self) -> Option<(&PolyMonomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| cmp_deglex(a.0, b.0))
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.same_ring(other));
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_ring(other));
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                add_term(&mut terms, m, ca * cb);
            }
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.vars.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` in Q[y].
    pub fn exact_div(&self, d: &Self) -> Result<Self, CoeffError> {
        let (dm, dc) = d.leading().ok_or(CoeffError::DivisionByZero)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars.clone());
        while let Some((rm, rc)) = rem.leading() {
            if rm.iter().zip(&dm).any(|(a, b)| a < b) {
                return Err(CoeffError::NotDivisible);
            }
            let qm: PolyMonomial = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let qc = rc / &dc;
            let step = Self::from_terms(self.vars.clone(), [(qm, qc)]);
            rem = rem.sub(&step.mul(d));
            quot = quot.add(&step);
        }
        Ok(quot)
    }

    /// Dense coefficient vector when there is exactly one generator.
    pub(crate) fn to_dense(&self) -> super::unipoly::UniPoly {
        assert_eq!(self.vars.len(), 1, "dense conversion needs one generator");
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut v = vec![BigRational::zero(); deg + 1];
        for (m, c) in &self.terms {
            v[m[0] as usize] = c.clone();
        }
        super::unipoly::UniPoly::from_coeffs(v)
    }

    pub(crate) fn from_dense(vars: Arc<[String]>, p: &super::unipoly::UniPoly) -> Self {
        Self::from_terms(
            vars,
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (vec![k as u32], c.clone())),
        )
    }

    /// Terms in decreasing deglex order.
    pub fn sorted_terms(&self) -> Vec<(&PolyMonomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| cmp_deglex(b.0, a.0));
        v
    }
}

fn add_term(terms: &mut BTreeMap<PolyMonomial, BigRational>, m: PolyMonomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `y1^2*y2`; empty for the unit monomial.
pub(crate) fn fmt_monomial(names: &[String], exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = fmt_monomial(&self.vars, m);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", fmt_rational_factor(&mag))?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{}*{}", fmt_rational_factor(&mag), mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
