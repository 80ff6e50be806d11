use num_bigint::BigInt;

use super::error::{ParseError, ParseErrorKind, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `src` into tokens; positions are offset from `start`.
pub(crate) fn tokenize(src: &str, start: Pos) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut pos = start;
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let here = pos;
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            pos.column += 1;
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, here));
            pos.column += 1;
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let begin = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let mut end = k;
            while end < chars.len() && (is_ident_char(chars[end]) || chars[end] == '.') {
                end += 1;
            }
            let text: String = chars[begin..end].iter().collect();
            if end > k {
                return Err(ParseError::new(here, ParseErrorKind::MalformedLiteral(text)));
            }
            let n: BigInt = text.parse().expect("ascii digits");
            out.push((Tok::Num(n), here));
            pos.column += end - begin;
            k = end;
            continue;
        }
        if is_ident_start(c) {
            let begin = k;
            while k < chars.len() && is_ident_char(chars[k]) {
                k += 1;
            }
            let text: String = chars[begin..k].iter().collect();
            pos.column += k - begin;
            out.push((Tok::Ident(text), here));
            continue;
        }
        return Err(ParseError::new(
            here,
            ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
        ));
    }
    out.push((Tok::End, pos));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_track_columns() {
        let toks = tokenize("x1 * 12", Pos::START).unwrap();
        assert_eq!(toks[0], (Tok::Ident("x1".into()), Pos { line: 1, column: 1 }));
        assert_eq!(toks[1].1.column, 4);
        assert_eq!(toks[2], (Tok::Num(12.into()), Pos { line: 1, column: 6 }));
        assert_eq!(toks[3].0, Tok::End);
    }

    #[test]
    fn malformed_numbers() {
        let e = tokenize("3 + 2x", Pos::START).unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(matches!(e.kind, ParseErrorKind::MalformedLiteral(_)));
        assert!(tokenize("1.5", Pos::START).is_err());
    }

    #[test]
    fn stray_character() {
        let e = tokenize("x\n  $", Pos::START).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }
}
