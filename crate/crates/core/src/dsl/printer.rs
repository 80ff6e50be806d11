use crate::coeff::Coeff;
use crate::pbw::{Element, Exponent};

/// Monomial part `x1^2*x2` in PBW order; empty for the unit monomial.
pub(crate) fn fmt_pbw_monomial(names: &[String], e: &Exponent) -> String {
    let mut parts = Vec::new();
    for (name, &k) in names.iter().zip(e.as_slice()) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

/// Writes a signed sum of `coefficient * monomial` terms.
pub(crate) fn fmt_signed_terms<'a>(terms: impl IntoIterator<Item = (&'a Coeff, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let (neg, factor) = c.factor_repr();
        let body = match (factor, mono.is_empty()) {
            (None, true) => "1".to_string(),
            (None, false) => mono,
            (Some(f), true) => f,
            (Some(f), false) => format!("{f}*{mono}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text of an element: terms in decreasing monomial order,
/// coefficients written on the left.
pub fn print_expr(f: &Element) -> String {
    let alg = f.algebra();
    if f.is_scalar() && !f.is_zero() {
        return f.lc().to_string();
    }
    let names = &alg.spec().var_names;
    fmt_signed_terms(
        f.sorted_terms(alg.order())
            .into_iter()
            .map(|(e, c)| (c, fmt_pbw_monomial(names, e))),
    )
}
