use std::fmt;
use std::ops::Add;

use serde::Serialize;
use smallvec::SmallVec;

/// Exponent vector `alpha` of the standard monomial `x1^a1 * ... * xn^an`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(SmallVec<[u32; 4]>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(SmallVec::from_elem(0, n))
    }

    /// The exponent of the single variable `x_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[i] = 1;
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|alpha|`
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Index of the first variable occurring with positive exponent.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub(crate) fn incremented(&self, i: usize) -> Self {
        let mut e = self.clone();
        e.0[i] += 1;
        e
    }

    pub(crate) fn decremented(&self, i: usize) -> Self {
        let mut e = self.clone();
        e.0[i] -= 1;
        e
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(SmallVec::from_vec(v))
    }
}

impl From<&[u32]> for Exponent {
    fn from(v: &[u32]) -> Self {
        Exponent(SmallVec::from_slice(v))
    }
}

impl Add for &Exponent {
    type Output = Exponent;

    fn add(self, rhs: &Exponent) -> Exponent {
        assert_eq!(self.len(), rhs.len(), "exponent length mismatch");
        Exponent(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

/// Degree of an element; the zero element has degree `NegInfinity`, which
/// sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}
