use std::cmp::Ordering;

use super::{Exponent, PbwError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Total degree first, ties broken lexicographically.
    DegLex,
    Lex,
}

/// A total order on standard monomials. `precedence` lists variable
/// indices from most to least significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Deglex with `x_n > ... > x_1`.
    pub fn deglex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::DegLex,
            precedence: (0..n).rev().collect(),
        }
    }

    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: (0..n).rev().collect(),
        }
    }

    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, PbwError> {
        let mut seen = vec![false; precedence.len()];
        for &p in &precedence {
            if p >= seen.len() || std::mem::replace(&mut seen[p], true) {
                return Err(PbwError::BadPrecedence);
            }
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn len(&self) -> usize {
        self.precedence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.precedence.is_empty()
    }

    /// Checked comparison; fails on length mismatch.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering, PbwError> {
        if a.len() != self.len() || b.len() != self.len() {
            return Err(PbwError::LengthMismatch);
        }
        Ok(self.cmp(a, b))
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let by_degree = match self.kind {
            OrderKind::DegLex => a.total().cmp(&b.total()),
            OrderKind::Lex => Ordering::Equal,
        };
        by_degree.then_with(|| {
            self.precedence
                .iter()
                .map(|&i| a.get(i).cmp(&b.get(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}
