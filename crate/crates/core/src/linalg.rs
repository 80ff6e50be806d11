//! Exact Gaussian elimination over Q, column by column.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{Coeff, PolyMonomial};
use crate::pbw::{Element, Exponent};

pub(crate) type Vector<K> = BTreeMap<K, BigRational>;

/// Coordinate of an element: PBW monomial and coefficient monomial.
pub(crate) type ElementKey = (Exponent, PolyMonomial);

struct Reduced<K> {
    pivot: K,
    vec: Vector<K>,
    /// Expresses `vec` through the original columns.
    combo: Vector<usize>,
}

/// Columns are pushed in a fixed order; each new column is either
/// independent of the earlier ones or yields the unique relation in which
/// it appears with coefficient one and every other column is a pivot.
pub(crate) struct ColumnEchelon<K> {
    basis: Vec<Reduced<K>>,
    ncols: usize,
}

impl<K: Ord + Clone> ColumnEchelon<K> {
    pub(crate) fn new() -> Self {
        ColumnEchelon {
            basis: Vec::new(),
            ncols: 0,
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn push(&mut self, col: Vector<K>) -> Option<Vector<usize>> {
        let idx = self.ncols;
        self.ncols += 1;
        let mut vec = col;
        let mut combo = Vector::new();
        combo.insert(idx, BigRational::one());
        for b in &self.basis {
            let Some(lambda) = vec.get(&b.pivot).cloned() else {
                continue;
            };
            axpy(&mut vec, &-lambda.clone(), &b.vec);
            axpy(&mut combo, &-lambda, &b.combo);
        }
        let Some((pivot, pv)) = vec.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
            return Some(combo);
        };
        let inv = pv.recip();
        for v in vec.values_mut() {
            *v *= &inv;
        }
        for v in combo.values_mut() {
            *v *= &inv;
        }
        self.basis.push(Reduced { pivot, vec, combo });
        None
    }
}

fn axpy<K: Ord + Clone>(y: &mut Vector<K>, a: &BigRational, x: &Vector<K>) {
    for (k, v) in x {
        let entry = y.entry(k.clone()).or_insert_with(BigRational::zero);
        *entry += a * v;
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

/// Null space basis in reduced form: one relation per free column, with
/// that column's entry equal to one and the others on pivot columns.
pub(crate) fn nullspace<K: Ord + Clone>(columns: impl IntoIterator<Item = Vector<K>>) -> Vec<Vector<usize>> {
    let mut ech = ColumnEchelon::new();
    columns.into_iter().filter_map(|c| ech.push(c)).collect()
}

/// Q-coordinates of `scale * f`; every scaled coefficient must be a
/// polynomial.
pub(crate) fn element_coordinates(f: &Element, scale: &Coeff) -> Vector<ElementKey> {
    let mut out = Vector::new();
    for (e, c) in f.terms() {
        let c = if scale.is_one() { c.clone() } else { scale.mul(c) };
        let coords = c
            .coordinates()
            .expect("common denominator clears every coefficient");
        for (m, q) in coords {
            out.insert((e.clone(), m), q);
        }
    }
    out
}

/// Q-coordinates of a coefficient that is a polynomial after scaling.
pub(crate) fn coeff_coordinates(c: &Coeff, scale: &Coeff) -> Vector<PolyMonomial> {
    let c = if scale.is_one() { c.clone() } else { scale.mul(c) };
    c.coordinates()
        .expect("common denominator clears every coefficient")
        .into_iter()
        .collect()
}
