//! Command layer behind the `skewpbw` binary: runs one command and
//! renders text or JSON output with an exit code.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::{parse_algebra, parse_bivariate, parse_element, preset_document, check_spec, ParseError, ParseErrorKind};
use crate::burchnall::{annihilating_polynomial, evaluate_bivariate, BoundsConfig};
use crate::centralizer::{centralizer_bounded, commutes, residue_class_profile};
use crate::error::SolveError;
use crate::pbw::Algebra;

pub const EXIT_OK: i32 = 0;
/// The command ran and the answer is negative (e.g. not commuting).
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
/// A solver search bound was exhausted.
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate { spec: String },
    Eval { spec: String, expr: String },
    Commutes { spec: String, p: String, q: String },
    Centralizer { spec: String, expr: String, deg: u32, coeff_deg: u32 },
    Annihilate { spec: String, p: String, q: String, max_s: Option<u32> },
    Verify { spec: String, p: String, q: String, poly: String },
    Preset { name: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Eval { .. } => "eval",
            Command::Commutes { .. } => "commutes",
            Command::Centralizer { .. } => "centralizer",
            Command::Annihilate { .. } => "annihilate",
            Command::Verify { .. } => "verify",
            Command::Preset { .. } => "preset",
        }
    }

    fn inputs(&self) -> Value {
        match self {
            Command::Validate { spec } => json!({ "spec": spec }),
            Command::Eval { spec, expr } => json!({ "spec": spec, "expr": expr }),
            Command::Commutes { spec, p, q } => json!({ "spec": spec, "p": p, "q": q }),
            Command::Centralizer { spec, expr, deg, coeff_deg } => {
                json!({ "spec": spec, "expr": expr, "deg": deg, "coeff_deg": coeff_deg })
            }
            Command::Annihilate { spec, p, q, max_s } => {
                json!({ "spec": spec, "p": p, "q": q, "max_s": max_s })
            }
            Command::Verify { spec, p, q, poly } => {
                json!({ "spec": spec, "p": p, "q": q, "poly": poly })
            }
            Command::Preset { name } => json!({ "name": name }),
        }
    }
}

/// Process result of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Report {
    format: u32,
    command: &'static str,
    inputs: Value,
    result: Value,
    residual: Option<String>,
    bounds: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
    timing_ms: f64,
}

struct Done {
    code: i32,
    text: String,
    result: Value,
    residual: Option<String>,
    bounds: Option<Value>,
}

struct Failure {
    code: i32,
    message: String,
    position: Option<(usize, usize)>,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.kind.to_string(),
            position: Some((e.line, e.column)),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::NotCommuting => EXIT_NEGATIVE,
            SolveError::CapExhausted { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
            position: None,
        }
    }
}

/// Reads a document from a file, or falls back to a preset name.
pub fn load_document(arg: &str) -> Result<String, String> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"));
    }
    match preset_document(arg) {
        Ok(doc) => Ok(doc),
        Err(ParseError {
            kind: ParseErrorKind::UnknownPreset(_),
            ..
        }) => Err(format!("`{arg}` is neither a file nor a preset name")),
        Err(e) => Err(e.to_string()),
    }
}

fn load_algebra(arg: &str) -> Result<Algebra, Failure> {
    let doc = load_document(arg).map_err(|message| Failure {
        code: EXIT_USAGE,
        message,
        position: None,
    })?;
    parse_algebra(&doc).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{arg}: {}", f.message);
        f
    })
}

fn element_arg(alg: &Algebra, label: &str, src: &str) -> Result<crate::pbw::Element, Failure> {
    parse_element(alg, src).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{label}: {}", f.message);
        f
    })
}

fn run(cmd: &Command) -> Result<Done, Failure> {
    match cmd {
        Command::Validate { spec } => {
            let doc = load_document(spec).map_err(|message| Failure {
                code: EXIT_USAGE,
                message,
                position: None,
            })?;
            let (_, report) = check_spec(&doc)?;
            let valid = report.passed();
            let text = if valid {
                "valid".to_string()
            } else {
                let lines: Vec<String> = report.failures.iter().map(|f| format!("  {f}")).collect();
                format!("invalid\n{}", lines.join("\n"))
            };
            Ok(Done {
                code: if valid { EXIT_OK } else { EXIT_NEGATIVE },
                text,
                result: json!({ "valid": valid, "failures": report.failures }),
                residual: None,
                bounds: None,
            })
        }
        Command::Eval { spec, expr } => {
            let alg = load_algebra(spec)?;
            let f = element_arg(&alg, "expr", expr)?;
            Ok(Done {
                code: EXIT_OK,
                text: f.to_string(),
                result: json!(f.to_string()),
                residual: None,
                bounds: None,
            })
        }
        Command::Commutes { spec, p, q } => {
            let alg = load_algebra(spec)?;
            let f = element_arg(&alg, "p", p)?;
            let g = element_arg(&alg, "q", q)?;
            let c = commutes(&f, &g);
            Ok(Done {
                code: if c { EXIT_OK } else { EXIT_NEGATIVE },
                text: c.to_string(),
                result: json!(c),
                residual: Some(f.commutator(&g).to_string()),
                bounds: None,
            })
        }
        Command::Centralizer {
            spec,
            expr,
            deg,
            coeff_deg,
        } => {
            let alg = load_algebra(spec)?;
            let f = element_arg(&alg, "expr", expr)?;
            let basis = centralizer_bounded(&f, *deg, *coeff_deg)?;
            let elems: Vec<String> = basis.elements.iter().map(ToString::to_string).collect();
            let profile = match residue_class_profile(&f, *deg, *coeff_deg) {
                Ok(p) => Some(p.into_iter().collect::<Vec<_>>()),
                Err(SolveError::ConstantInput) => None,
                Err(e) => return Err(e.into()),
            };
            let mut text = elems.join("\n");
            if let Some(p) = &profile {
                let classes: Vec<String> = p.iter().map(ToString::to_string).collect();
                text += &format!("\nresidue classes: {{{}}}", classes.join(", "));
            }
            Ok(Done {
                code: EXIT_OK,
                text,
                result: json!({ "elements": elems, "residue_classes": profile }),
                residual: None,
                bounds: Some(json!({ "deg": deg, "coeff_deg": coeff_deg })),
            })
        }
        Command::Annihilate { spec, p, q, max_s } => {
            let alg = load_algebra(spec)?;
            let f = element_arg(&alg, "p", p)?;
            let g = element_arg(&alg, "q", q)?;
            let ann = annihilating_polynomial(&f, &g, BoundsConfig { max_s: *max_s })?;
            let text = format!(
                "{}\nverified: {}\ns_bound: {}, t_bound: {}",
                ann.poly, ann.verified, ann.s_bound, ann.t_bound
            );
            Ok(Done {
                code: if ann.verified { EXIT_OK } else { EXIT_NEGATIVE },
                text,
                result: json!({ "poly": ann.poly.to_string(), "verified": ann.verified }),
                residual: Some(ann.residual.to_string()),
                bounds: Some(json!({ "s_bound": ann.s_bound, "t_bound": ann.t_bound, "max_s": max_s })),
            })
        }
        Command::Verify { spec, p, q, poly } => {
            let alg = load_algebra(spec)?;
            let f = element_arg(&alg, "p", p)?;
            let g = element_arg(&alg, "q", q)?;
            let h = parse_bivariate(poly).map_err(|e| {
                let mut fl = Failure::from(e);
                fl.message = format!("poly: {}", fl.message);
                fl
            })?;
            let r = evaluate_bivariate(&h, &f, &g)?;
            let holds = r.is_zero();
            let mut text = holds.to_string();
            if !holds {
                text += &format!("\nresidual: {r}");
            }
            Ok(Done {
                code: if holds { EXIT_OK } else { EXIT_NEGATIVE },
                text,
                result: json!({ "holds": holds }),
                residual: Some(r.to_string()),
                bounds: None,
            })
        }
        Command::Preset { name } => {
            let doc = preset_document(name)?;
            Ok(Done {
                code: EXIT_OK,
                text: doc.trim_end().to_string(),
                result: json!(doc),
                residual: None,
                bounds: None,
            })
        }
    }
}

/// Runs `cmd` and renders its output.
pub fn execute(cmd: &Command, as_json: bool) -> Outcome {
    let start = Instant::now();
    let res = run(cmd);
    let timing_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    match (res, as_json) {
        (Ok(d), false) => Outcome {
            code: d.code,
            stdout: d.text + "\n",
            stderr: String::new(),
        },
        (Err(f), false) => {
            let loc = f
                .position
                .map(|(l, c)| format!(" (line {l}, column {c})"))
                .unwrap_or_default();
            Outcome {
                code: f.code,
                stdout: String::new(),
                stderr: format!("error: {}{loc}\n", f.message),
            }
        }
        (res, true) => {
            let (code, report) = match res {
                Ok(d) => (
                    d.code,
                    Report {
                        format: 1,
                        command: cmd.name(),
                        inputs: cmd.inputs(),
                        result: d.result,
                        residual: d.residual,
                        bounds: d.bounds,
                        error: None,
                        timing_ms,
                    },
                ),
                Err(f) => (
                    f.code,
                    Report {
                        format: 1,
                        command: cmd.name(),
                        inputs: cmd.inputs(),
                        result: Value::Null,
                        residual: None,
                        bounds: None,
                        error: Some(json!({
                            "message": f.message,
                            "line": f.position.map(|p| p.0),
                            "column": f.position.map(|p| p.1),
                        })),
                        timing_ms,
                    },
                ),
            };
            Outcome {
                code,
                stdout: serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                stderr: String::new(),
            }
        }
    }
}
