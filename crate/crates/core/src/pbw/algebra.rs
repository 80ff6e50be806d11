use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::{Arc, RwLock};

use super::spec::{validate_spec, AlgebraSpec};
use super::{Element, Exponent, PbwError};
use crate::coeff::{Coeff, CoeffRing};

/// Sparse coefficient map of an element in the standard monomial basis.
pub(crate) type Terms = BTreeMap<Exponent, Coeff>;

/// A validated skew PBW extension. Cheap to clone; clones share the
/// multiplication cache.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<Inner>,
}

struct Inner {
    spec: AlgebraSpec,
    /// Normal forms of `x_i * x^beta`.
    var_monomial: RwLock<HashMap<(usize, Exponent), Arc<Terms>>>,
}

impl Algebra {
    /// Validates `spec` and builds the algebra.
    pub fn new(spec: AlgebraSpec) -> Result<Self, PbwError> {
        let report = validate_spec(&spec);
        if !report.passed() {
            return Err(PbwError::Invalid(report));
        }
        Ok(Self::unchecked(spec))
    }

    pub(crate) fn unchecked(spec: AlgebraSpec) -> Self {
        Algebra {
            inner: Arc::new(Inner {
                spec,
                var_monomial: RwLock::new(HashMap::new()),
            }),
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.inner.spec
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.inner.spec.ring
    }

    pub fn num_vars(&self) -> usize {
        self.inner.spec.num_vars()
    }

    pub fn order(&self) -> &super::MonomialOrder {
        &self.inner.spec.order
    }

    pub fn same(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }

    /// `sigma^alpha = sigma_1^a1 o ... o sigma_n^an` applied to `r`.
    pub fn sigma_pow(&self, alpha: &Exponent, r: &Coeff) -> Coeff {
        let mut out = r.clone();
        for i in (0..self.num_vars()).rev() {
            out = self.inner.spec.sigma[i].apply_pow(&out, alpha.get(i));
        }
        out
    }

    /// Coefficient of `x^(alpha+beta)` in the normal form of `x^alpha x^beta`.
    pub fn commutation_constant(&self, alpha: &Exponent, beta: &Exponent) -> Coeff {
        let a = Element::monomial(self, alpha.clone(), self.ring().one());
        let b = Element::monomial(self, beta.clone(), self.ring().one());
        let prod = a.mul(&b);
        prod.coeff(&(alpha + beta))
    }

    pub(crate) fn mul_terms(&self, f: &Terms, g: &Terms) -> Terms {
        let mut out = Terms::new();
        if f.is_empty() || g.is_empty() {
            return out;
        }
        let n = self.num_vars();
        let mut cache: HashMap<Exponent, Rc<Terms>> = HashMap::new();
        cache.insert(Exponent::zero(n), Rc::new(g.clone()));
        for (alpha, c) in f {
            let prod = self.monomial_times(alpha, &mut cache);
            add_scaled(&mut out, c, &prod);
        }
        out
    }

    /// `x^alpha * g`, where `g` is stored at the zero exponent of `cache`.
    fn monomial_times(&self, alpha: &Exponent, cache: &mut HashMap<Exponent, Rc<Terms>>) -> Rc<Terms> {
        if let Some(t) = cache.get(alpha) {
            return t.clone();
        }
        // x^alpha = x_j * x^(alpha - e_j) for the first variable x_j present
        let j = alpha.first_nonzero().expect("zero exponent is seeded");
        let rest = self.monomial_times(&alpha.decremented(j), cache);
        let t = Rc::new(self.left_mul_var(j, &rest));
        cache.insert(alpha.clone(), t.clone());
        t
    }

    /// `x_i * g` using `x_i r = sigma_i(r) x_i + delta_i(r)`.
    pub(crate) fn left_mul_var(&self, i: usize, g: &Terms) -> Terms {
        let spec = &self.inner.spec;
        let sigma = &spec.sigma[i];
        let delta = &spec.delta[i];
        let mut out = Terms::new();
        for (beta, c) in g {
            let shifted = self.var_times_monomial(i, beta);
            add_scaled(&mut out, &sigma.apply(c), &shifted);
            if !delta.is_zero() {
                add_term(&mut out, beta.clone(), delta.apply(c));
            }
        }
        out
    }

    /// Normal form of `x_i * x^beta`, memoized.
    fn var_times_monomial(&self, i: usize, beta: &Exponent) -> Arc<Terms> {
        let key = (i, beta.clone());
        if let Some(t) = self.inner.var_monomial.read().unwrap().get(&key) {
            return t.clone();
        }
        let t = Arc::new(self.compute_var_times_monomial(i, beta));
        self.inner
            .var_monomial
            .write()
            .unwrap()
            .entry(key)
            .or_insert(t)
            .clone()
    }

    fn compute_var_times_monomial(&self, i: usize, beta: &Exponent) -> Terms {
        let spec = &self.inner.spec;
        let ring = &spec.ring;
        let mut out = Terms::new();
        let j = match beta.first_nonzero() {
            Some(j) if j < i => j,
            _ => {
                out.insert(beta.incremented(i), ring.one());
                return out;
            }
        };
        // x_i x_j = c x_j x_i + t0 + sum_k t_k x_k, with j < i
        let rel = spec.relation(j, i);
        let rest = beta.decremented(j);
        let swapped = self.var_times_monomial(i, &rest);
        let moved = self.left_mul_var(j, &swapped);
        add_scaled(&mut out, &rel.constant, &moved);
        if !rel.tail_constant.is_zero() {
            add_term(&mut out, rest.clone(), rel.tail_constant.clone());
        }
        for (k, t) in rel.tail_linear.iter().enumerate() {
            if !t.is_zero() {
                let part = self.var_times_monomial(k, &rest);
                add_scaled(&mut out, t, &part);
            }
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn cache_len(&self) -> usize {
        self.inner.var_monomial.read().unwrap().len()
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("ring", &self.inner.spec.ring)
            .field("vars", &self.inner.spec.var_names)
            .finish()
    }
}

pub(crate) fn add_term(out: &mut Terms, e: Exponent, c: Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match out.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// `out += c * g` with `c` acting on the left.
pub(crate) fn add_scaled(out: &mut Terms, c: &Coeff, g: &Terms) {
    if c.is_zero() {
        return;
    }
    let unit = c.is_one();
    for (e, d) in g {
        let v = if unit { d.clone() } else { c.mul(d) };
        add_term(out, e.clone(), v);
    }
}
