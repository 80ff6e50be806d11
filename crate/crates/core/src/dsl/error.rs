use std::fmt;

use crate::pbw::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnexpectedEnd,
    MalformedLiteral(String),
    UnknownIdentifier(String),
    /// Negative power of a non-invertible value.
    NegativePower,
    DivisionByZero,
    NotDivisible,
    /// The value would exceed the evaluator's size limits.
    TooLarge,
    /// A relation right-hand side outside `c x_i x_j + r_0 + sum r_k x_k`.
    TailDegree(String),
    /// Structural problem in an algebra document.
    Document(String),
    Validation(ValidationReport),
    UnknownPreset(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("syntax error: unexpected end of input"),
            ParseErrorKind::MalformedLiteral(s) => write!(f, "malformed literal `{s}`"),
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier `{s}`"),
            ParseErrorKind::NegativePower => {
                f.write_str("negative power of an element that is not invertible")
            }
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
            ParseErrorKind::NotDivisible => f.write_str("division is not exact in this ring"),
            ParseErrorKind::TooLarge => f.write_str("expression exceeds size limits"),
            ParseErrorKind::TailDegree(m) => write!(f, "relation tail: {m}"),
            ParseErrorKind::Document(m) => f.write_str(m),
            ParseErrorKind::Validation(r) => write!(f, "invalid algebra: {r}"),
            ParseErrorKind::UnknownPreset(s) => write!(f, "unknown preset `{s}`"),
        }
    }
}

/// A diagnostic with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError {
            line: pos.line,
            column: pos.column,
            kind,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.kind)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub const START: Pos = Pos { line: 1, column: 1 };
}
