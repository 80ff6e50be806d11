//! Dense univariate polynomials over Q, used as the numerator/denominator
//! storage of [`RatFunc`](super::RatFunc).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficients stored low degree first; no trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct UniPoly(Vec<BigRational>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * y^k`
    pub fn monomial(k: usize, c: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        UniPoly(v)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += b;
        }
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::from_coeffs(v)
    }

    /// Euclidean division; panics when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.0[dd].recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn make_monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Number of trailing zero coefficients.
    fn order(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    fn shift_down(&self, k: usize) -> Self {
        Self(self.0[k..].to_vec())
    }

    /// Monic gcd by the remainder sequence; gcd(0, 0) = 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.make_monic();
        }
        if b.is_zero() {
            return a.make_monic();
        }
        // split off the power of the variable first
        let (oa, ob) = (a.order(), b.order());
        let mut a = a.shift_down(oa).make_monic();
        let mut b = b.shift_down(ob).make_monic();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree().is_some_and(|d| d > 0) && coprime_mod_p(&a, &b) {
            b = Self::one();
        }
        while b.degree().is_some_and(|d| d > 0) {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.make_monic();
        }
        let g = if b.is_zero() { a } else { Self::one() };
        Self::monomial(oa.min(ob), BigRational::one()).mul(&g)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// `self(g)` by Horner's rule.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }
}

/// The Mersenne prime 2^61 - 1.
const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

fn reduce(q: &BigRational) -> Option<u64> {
    let p = BigInt::from(P);
    let n = q.numer().mod_floor(&p).to_u64()?;
    let d = q.denom().mod_floor(&p).to_u64()?;
    (d != 0).then(|| mul_mod(n, inv_mod(d)))
}

/// True when the images of `a` and `b` mod p are coprime with both
/// leading coefficients surviving, which forces coprimality over Q.
fn coprime_mod_p(a: &UniPoly, b: &UniPoly) -> bool {
    let image = |f: &UniPoly| -> Option<Vec<u64>> {
        let v: Option<Vec<u64>> = f.0.iter().map(reduce).collect();
        v.filter(|v| v.last().is_some_and(|&l| l != 0))
    };
    let (Some(mut x), Some(mut y)) = (image(a), image(b)) else {
        return false;
    };
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return true;
        }
        let inv = inv_mod(*y.last().unwrap());
        while x.len() >= y.len() {
            let c = mul_mod(*x.last().unwrap(), inv);
            let shift = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[shift + j] = (x[shift + j] + P - mul_mod(c, yj)) % P;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    false
}
