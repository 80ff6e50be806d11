use std::collections::BTreeMap;

use super::error::{ParseError, ParseErrorKind, Pos};
use super::specfile::{parse_algebra, parse_spec};
use crate::pbw::{Algebra, AlgebraSpec};

/// Names accepted by [`preset`]. Parameters are given as
/// `name:key=value,key=value`, e.g. `q-weyl:q=3`.
pub const PRESETS: [&str; 6] = [
    "weyl",
    "weyl-rational",
    "q-weyl",
    "quantum-plane",
    "higher-endo",
    "heisenberg",
];

fn unknown(name: &str) -> ParseError {
    ParseError::new(Pos::START, ParseErrorKind::UnknownPreset(name.to_string()))
}

/// The algebra document behind a preset name.
pub fn preset_document(name: &str) -> Result<String, ParseError> {
    let (base, args) = match name.split_once(':') {
        Some((b, a)) => (b.trim(), a),
        None => (name.trim(), ""),
    };
    let mut params: BTreeMap<&str, &str> = BTreeMap::new();
    for kv in args.split(',').filter(|s| !s.trim().is_empty()) {
        let Some((k, v)) = kv.split_once('=') else {
            return Err(unknown(name));
        };
        params.insert(k.trim(), v.trim());
    }
    let mut take = |key: &str, default: &'static str| -> String {
        params.remove(key).unwrap_or(default).to_string()
    };
    let doc = match base {
        "weyl" => "format = 1\n\n[ring]\nkind = polynomial\ngenerators = y\n\n[vars]\nnames = x\nx.delta.y = 1\n".to_string(),
        "weyl-rational" => {
            "format = 1\n\n[ring]\nkind = rational-function\ngenerators = y\n\n[vars]\nnames = x\nx.delta.y = 1\n"
                .to_string()
        }
        "q-weyl" => format!(
            "format = 1\n\n[ring]\nkind = polynomial\ngenerators = y\nq = {}\n\n[vars]\nnames = x\nx.sigma.y = q*y\nx.delta.y = 1\n",
            take("q", "2")
        ),
        "quantum-plane" => format!(
            "format = 1\n\n[ring]\nkind = rational\nq = {}\n\n[vars]\nnames = x1, x2\n\n[relations]\nx2*x1 = q*x1*x2\n",
            take("q", "3")
        ),
        "higher-endo" => format!(
            "format = 1\n\n[ring]\nkind = polynomial\ngenerators = y\n\n[vars]\nnames = x\nx.sigma.y = {}\n",
            take("p", "y^2 + 1")
        ),
        "heisenberg" => "format = 1\n\n[ring]\nkind = rational\n\n[vars]\nnames = x1, x2, x3\n\n[relations]\nx2*x1 = x1*x2 - x3\n"
            .to_string(),
        _ => return Err(unknown(name)),
    };
    if !params.is_empty() {
        return Err(unknown(name));
    }
    Ok(doc)
}

pub fn preset_spec(name: &str) -> Result<AlgebraSpec, ParseError> {
    parse_spec(&preset_document(name)?)
}

pub fn preset(name: &str) -> Result<Algebra, ParseError> {
    parse_algebra(&preset_document(name)?)
}
