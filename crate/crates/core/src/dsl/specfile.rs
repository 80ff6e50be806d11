use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;

use super::error::{ParseError, ParseErrorKind, Pos};
use super::eval::{eval, CoeffDomain, WordDomain};
use super::parser::parse;
use super::printer::fmt_signed_terms;
use crate::coeff::{Coeff, CoeffRing};
use crate::pbw::{
    validate_spec, Algebra, AlgebraSpec, Condition, MonomialOrder, OrderKind, PairRelation,
};

const SECTIONS: [&str; 4] = ["ring", "vars", "relations", "order"];

struct Entry {
    key: String,
    key_pos: Pos,
    value: String,
    value_pos: Pos,
}

#[derive(Default)]
struct Section {
    header: Option<Pos>,
    entries: Vec<Entry>,
}

fn doc_err(pos: Pos, msg: impl Into<String>) -> ParseError {
    ParseError::new(pos, ParseErrorKind::Document(msg.into()))
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `a, b, c` with positions.
fn parse_name_list(value: &str, pos: Pos) -> Result<Vec<String>, ParseError> {
    let mut out: Vec<String> = Vec::new();
    let mut col = pos.column;
    for raw in value.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        let name = raw.trim();
        let at = Pos {
            line: pos.line,
            column: col + lead,
        };
        if !is_ident(name) {
            return Err(doc_err(at, format!("expected a name, found `{name}`")));
        }
        if out.iter().any(|n| n == name) {
            return Err(doc_err(at, format!("duplicate name `{name}`")));
        }
        out.push(name.to_string());
        col += raw.chars().count() + 1;
    }
    Ok(out)
}

fn split_document(doc: &str) -> Result<(Vec<Entry>, BTreeMap<&'static str, Section>), ParseError> {
    let mut top = Vec::new();
    let mut sections: BTreeMap<&'static str, Section> = BTreeMap::new();
    let mut current: Option<&'static str> = None;
    for (k, raw) in doc.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.chars().count() - content.trim_start().chars().count();
        let text = content.trim();
        if text.is_empty() {
            continue;
        }
        let start = Pos {
            line,
            column: indent + 1,
        };
        if let Some(rest) = text.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return Err(doc_err(start, "unterminated section header"));
            };
            let name = name.trim();
            let Some(&known) = SECTIONS.iter().find(|s| **s == name) else {
                return Err(doc_err(start, format!("unknown section [{name}]")));
            };
            let rank = SECTIONS.iter().position(|s| *s == known).unwrap();
            if sections.contains_key(known) {
                return Err(doc_err(start, format!("duplicate section [{known}]")));
            }
            if let Some(prev) = current {
                let prev_rank = SECTIONS.iter().position(|s| *s == prev).unwrap();
                if prev_rank > rank {
                    return Err(doc_err(start, format!("section [{known}] must come before [{prev}]")));
                }
            }
            sections.insert(
                known,
                Section {
                    header: Some(start),
                    entries: Vec::new(),
                },
            );
            current = Some(known);
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(doc_err(start, "expected `key = value`"));
        };
        let key = content[..eq].trim().to_string();
        let after = &content[eq + 1..];
        let value_col = content[..eq].chars().count() + 2 + (after.chars().count() - after.trim_start().chars().count());
        let entry = Entry {
            key,
            key_pos: start,
            value: after.trim().to_string(),
            value_pos: Pos {
                line,
                column: value_col,
            },
        };
        if entry.value.is_empty() {
            return Err(doc_err(entry.value_pos, format!("missing value for `{}`", entry.key)));
        }
        match current {
            None => top.push(entry),
            Some(s) => sections.get_mut(s).unwrap().entries.push(entry),
        }
    }
    Ok((top, sections))
}

fn check_duplicates(entries: &[Entry]) -> Result<(), ParseError> {
    let mut seen = HashSet::new();
    for e in entries {
        if !seen.insert(e.key.as_str()) {
            return Err(doc_err(e.key_pos, format!("duplicate key `{}`", e.key)));
        }
    }
    Ok(())
}

fn find<'a>(entries: &'a [Entry], key: &str) -> Option<&'a Entry> {
    entries.iter().find(|e| e.key == key)
}

fn eval_coeff(
    ring: &CoeffRing,
    params: &BTreeMap<String, BigRational>,
    e: &Entry,
) -> Result<Coeff, ParseError> {
    let ast = parse(&e.value, e.value_pos)?;
    eval(&CoeffDomain { ring, params }, &ast)
}

/// Parses an algebra document without running the validation probes.
fn parse_unvalidated(doc: &str) -> Result<(AlgebraSpec, BTreeMap<&'static str, Section>), ParseError> {
    let (top, mut sections) = split_document(doc)?;
    let Some(first) = top.first().map(|e| e.key_pos).or_else(|| sections.values().filter_map(|s| s.header).min_by_key(|p| p.line)) else {
        return Err(ParseError::new(Pos::START, ParseErrorKind::Syntax("empty document".into())));
    };
    check_duplicates(&top)?;
    for e in &top {
        if e.key != "format" {
            return Err(doc_err(e.key_pos, format!("unexpected key `{}` before the first section", e.key)));
        }
    }
    match find(&top, "format") {
        None => return Err(doc_err(first, "missing `format = 1` header")),
        Some(e) if e.value != "1" => {
            return Err(doc_err(e.value_pos, format!("unsupported format `{}`", e.value)))
        }
        Some(_) => {}
    }

    // [ring]
    let ring_sec = sections
        .remove("ring")
        .ok_or_else(|| doc_err(first, "missing [ring] section"))?;
    let ring_pos = ring_sec.header.unwrap();
    check_duplicates(&ring_sec.entries)?;
    let kind = find(&ring_sec.entries, "kind").ok_or_else(|| doc_err(ring_pos, "[ring] needs `kind`"))?;
    let gens = match find(&ring_sec.entries, "generators") {
        Some(e) => parse_name_list(&e.value, e.value_pos)?,
        None => Vec::new(),
    };
    let ring = match kind.value.as_str() {
        "rational" => {
            if let Some(e) = find(&ring_sec.entries, "generators") {
                return Err(doc_err(e.key_pos, "the rational ring has no generators"));
            }
            CoeffRing::Rational
        }
        "polynomial" => {
            if gens.is_empty() {
                return Err(doc_err(ring_pos, "polynomial ring needs `generators`"));
            }
            CoeffRing::polynomial(gens.clone())
        }
        "rational-function" => {
            if gens.len() != 1 {
                return Err(doc_err(ring_pos, "rational function field needs exactly one generator"));
            }
            CoeffRing::rational_function(gens[0].clone())
        }
        other => return Err(doc_err(kind.value_pos, format!("unknown ring kind `{other}`"))),
    };
    let mut params = BTreeMap::new();
    for e in &ring_sec.entries {
        if e.key == "kind" || e.key == "generators" {
            continue;
        }
        if !is_ident(&e.key) || gens.contains(&e.key) {
            return Err(doc_err(e.key_pos, format!("invalid parameter name `{}`", e.key)));
        }
        let v = eval_coeff(&CoeffRing::Rational, &params, e)?;
        let q = v.constant_value().expect("rational ring");
        params.insert(e.key.clone(), q);
    }

    // [vars]
    let vars_sec = sections
        .get("vars")
        .ok_or_else(|| doc_err(ring_pos, "missing [vars] section"))?;
    let vars_pos = vars_sec.header.unwrap();
    check_duplicates(&vars_sec.entries)?;
    let names_entry = find(&vars_sec.entries, "names").ok_or_else(|| doc_err(vars_pos, "[vars] needs `names`"))?;
    let names = parse_name_list(&names_entry.value, names_entry.value_pos)?;
    for n in &names {
        if gens.contains(n) || params.contains_key(n) {
            return Err(doc_err(names_entry.value_pos, format!("name `{n}` is already used by the ring")));
        }
    }
    let n = names.len();
    let m = ring.generators().len();
    let mut sigma_imgs: Vec<Vec<Coeff>> = (0..n).map(|_| (0..m).map(|k| ring.generator(k)).collect()).collect();
    let mut delta_imgs: Vec<Vec<Coeff>> = (0..n).map(|_| vec![ring.zero(); m]).collect();
    for e in &vars_sec.entries {
        if e.key == "names" {
            continue;
        }
        let parts: Vec<&str> = e.key.split('.').map(str::trim).collect();
        let [var, which, gen] = parts[..] else {
            return Err(doc_err(e.key_pos, format!("unknown key `{}`", e.key)));
        };
        let i = names
            .iter()
            .position(|x| x == var)
            .ok_or_else(|| doc_err(e.key_pos, format!("unknown variable `{var}`")))?;
        let k = gens
            .iter()
            .position(|g| g == gen)
            .ok_or_else(|| doc_err(e.key_pos, format!("unknown ring generator `{gen}`")))?;
        let value = eval_coeff(&ring, &params, e)?;
        match which {
            "sigma" => sigma_imgs[i][k] = value,
            "delta" => delta_imgs[i][k] = value,
            _ => return Err(doc_err(e.key_pos, format!("expected `sigma` or `delta`, found `{which}`"))),
        }
    }
    let mut spec = AlgebraSpec::new(ring.clone(), names.clone());
    spec.params = params.clone();
    for i in 0..n {
        spec = spec
            .with_twist(i, sigma_imgs[i].clone(), delta_imgs[i].clone())
            .map_err(|e| doc_err(vars_pos, e.to_string()))?;
    }

    // [relations]
    if let Some(sec) = sections.get("relations") {
        let mut seen = HashSet::new();
        for e in &sec.entries {
            let lhs: Vec<&str> = e.key.split('*').map(str::trim).collect();
            let pair = match lhs[..] {
                [a, b] => names
                    .iter()
                    .position(|x| x == a)
                    .zip(names.iter().position(|x| x == b)),
                _ => None,
            };
            let Some((j, i)) = pair.filter(|(j, i)| j > i) else {
                return Err(doc_err(
                    e.key_pos,
                    format!("left side `{}` must be `xj*xi` with xj listed after xi", e.key),
                ));
            };
            if !seen.insert((i, j)) {
                return Err(doc_err(e.key_pos, format!("duplicate relation for `{}`", e.key)));
            }
            let ast = parse(&e.value, e.value_pos)?;
            let words = eval(
                &WordDomain {
                    coeffs: CoeffDomain {
                        ring: &ring,
                        params: &params,
                    },
                    var_names: &names,
                },
                &ast,
            )?;
            let mut rel = PairRelation::commuting(&ring, n);
            rel.constant = ring.zero();
            for (w, c) in words {
                match w[..] {
                    [] => rel.tail_constant = c,
                    [k] => rel.tail_linear[k] = c,
                    [a, b] if a == i && b == j => rel.constant = c,
                    _ => {
                        let word: Vec<&str> = w.iter().map(|&k| names[k].as_str()).collect();
                        return Err(ParseError::new(
                            e.value_pos,
                            ParseErrorKind::TailDegree(format!(
                                "term {} is not allowed; only {}*{} may have degree 2",
                                word.join("*"),
                                names[i],
                                names[j]
                            )),
                        ));
                    }
                }
            }
            spec = spec.with_relation(i, j, rel);
        }
    }

    // [order]
    if let Some(sec) = sections.get("order") {
        let pos = sec.header.unwrap();
        check_duplicates(&sec.entries)?;
        for e in &sec.entries {
            if e.key != "kind" && e.key != "precedence" {
                return Err(doc_err(e.key_pos, format!("unknown key `{}`", e.key)));
            }
        }
        let kind = match find(&sec.entries, "kind").map(|e| (e.value.as_str(), e.value_pos)) {
            None | Some(("deglex", _)) => OrderKind::DegLex,
            Some(("lex", _)) => OrderKind::Lex,
            Some((other, p)) => return Err(doc_err(p, format!("unknown order `{other}`"))),
        };
        let prec = match find(&sec.entries, "precedence") {
            None => (0..n).rev().collect(),
            Some(e) => {
                let list = parse_name_list(&e.value, e.value_pos)?;
                let idx: Option<Vec<usize>> = list.iter().map(|x| names.iter().position(|y| y == x)).collect();
                match idx {
                    Some(v) if v.len() == n => v,
                    _ => return Err(doc_err(e.value_pos, "precedence must list every variable once")),
                }
            }
        };
        let order = MonomialOrder::new(kind, prec).map_err(|e| doc_err(pos, e.to_string()))?;
        spec = spec.with_order(order);
    }
    Ok((spec, sections))
}

fn validation_error(report: crate::pbw::ValidationReport, sections: &BTreeMap<&'static str, Section>) -> ParseError {
    let section = match report.failures.first().map(|f| f.condition) {
        Some(Condition::NonzeroPairConstant | Condition::TailDegree | Condition::Associativity)
            if sections.contains_key("relations") =>
        {
            "relations"
        }
        _ => "vars",
    };
    let pos = sections
        .get(section)
        .and_then(|s| s.header)
        .unwrap_or(Pos::START);
    ParseError::new(pos, ParseErrorKind::Validation(report))
}

/// Parses and validates an algebra document.
pub fn parse_spec(doc: &str) -> Result<AlgebraSpec, ParseError> {
    let (spec, sections) = parse_unvalidated(doc)?;
    let report = validate_spec(&spec);
    if !report.passed() {
        return Err(validation_error(report, &sections));
    }
    Ok(spec)
}

/// Parses and validates a document into an algebra.
pub fn parse_algebra(doc: &str) -> Result<Algebra, ParseError> {
    Ok(Algebra::unchecked(parse_spec(doc)?))
}

/// Parses a document and returns the validation report instead of failing
/// on it. Syntax errors are still errors.
pub fn check_spec(doc: &str) -> Result<(AlgebraSpec, crate::pbw::ValidationReport), ParseError> {
    let (spec, _) = parse_unvalidated(doc)?;
    let report = validate_spec(&spec);
    Ok((spec, report))
}

/// Writes `spec` as a document that parses back to an equal spec. Twisting
/// images are written as evaluated values.
pub fn unparse_spec(spec: &AlgebraSpec) -> String {
    let ring = &spec.ring;
    let gens = ring.generators();
    let mut out = String::from("format = 1\n\n[ring]\n");
    out += &format!("kind = {}\n", ring.kind_name());
    if !gens.is_empty() {
        out += &format!("generators = {}\n", gens.join(", "));
    }
    for (k, q) in &spec.params {
        out += &format!("{k} = {}\n", ring_free_rational(q));
    }
    out += &format!("\n[vars]\nnames = {}\n", spec.var_names.join(", "));
    for (i, name) in spec.var_names.iter().enumerate() {
        for (k, g) in gens.iter().enumerate() {
            let s = &spec.sigma[i].images()[k];
            if *s != ring.generator(k) {
                out += &format!("{name}.sigma.{g} = {s}\n");
            }
        }
        for (k, g) in gens.iter().enumerate() {
            let d = &spec.delta[i].images()[k];
            if !d.is_zero() {
                out += &format!("{name}.delta.{g} = {d}\n");
            }
        }
    }
    let n = spec.num_vars();
    let default = PairRelation::commuting(ring, n);
    let rels: Vec<_> = spec.relations.iter().filter(|(_, r)| **r != default).collect();
    if !rels.is_empty() {
        out += "\n[relations]\n";
        for (&(i, j), rel) in rels {
            let names = &spec.var_names;
            let mut terms: Vec<(&Coeff, String)> = vec![(&rel.constant, format!("{}*{}", names[i], names[j]))];
            for k in (0..n).rev() {
                terms.push((&rel.tail_linear[k], names[k].clone()));
            }
            terms.push((&rel.tail_constant, String::new()));
            terms.retain(|(c, _)| !c.is_zero());
            out += &format!("{}*{} = {}\n", names[j], names[i], fmt_signed_terms(terms));
        }
    }
    if spec.order != MonomialOrder::deglex(n) {
        let kind = match spec.order.kind() {
            OrderKind::DegLex => "deglex",
            OrderKind::Lex => "lex",
        };
        let prec: Vec<&str> = spec.order.precedence().iter().map(|&i| spec.var_names[i].as_str()).collect();
        out += &format!("\n[order]\nkind = {kind}\nprecedence = {}\n", prec.join(", "));
    }
    out
}

fn ring_free_rational(q: &BigRational) -> String {
    Coeff::Rational(q.clone()).to_string()
}
