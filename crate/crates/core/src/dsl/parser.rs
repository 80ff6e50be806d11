use num_bigint::BigInt;

use super::error::{ParseError, ParseErrorKind, Pos};
use super::lexer::{tokenize, Tok};

const MAX_DEPTH: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Ast {
    Num(BigInt),
    Ident(String),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Node {
    pub ast: Ast,
    pub pos: Pos,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    depth: usize,
}

/// expr := term (('+'|'-') term)*
/// term := unary (('*'|'/') unary)*
/// unary := '-' unary | factor
/// factor := base ('^' '-'? uint)?
/// base := uint | ident | '(' expr ')'
pub(crate) fn parse(src: &str, start: Pos) -> Result<Node, ParseError> {
    let mut p = Parser {
        toks: tokenize(src, start)?,
        at: 0,
        depth: 0,
    };
    if p.peek() == &Tok::End {
        return Err(ParseError::new(p.pos(), ParseErrorKind::UnexpectedEnd));
    }
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(p.unexpected(t.clone(), "an operator")),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, t: Tok, expected: &str) -> ParseError {
        if t == Tok::End {
            return ParseError::new(self.pos(), ParseErrorKind::UnexpectedEnd);
        }
        ParseError::new(
            self.pos(),
            ParseErrorKind::Syntax(format!("expected {expected}, found {}", t.describe())),
        )
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.pos(), ParseErrorKind::TooLarge));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let ctor: fn(Box<Node>, Box<Node>) -> Ast = match self.peek() {
                Tok::Plus => Ast::Add,
                Tok::Minus => Ast::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Node {
                ast: ctor(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let ctor: fn(Box<Node>, Box<Node>) -> Ast = match self.peek() {
                Tok::Star => Ast::Mul,
                Tok::Slash => Ast::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Node {
                ast: ctor(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if self.peek() == &Tok::Minus {
            let (_, pos) = self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Node {
                ast: Ast::Neg(Box::new(inner)),
                pos,
            });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Node, ParseError> {
        let base = self.base()?;
        if self.peek() != &Tok::Caret {
            return Ok(base);
        }
        let (_, pos) = self.bump();
        let negative = if self.peek() == &Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let epos = self.pos();
        let (t, _) = self.bump();
        let Tok::Num(n) = t else {
            self.at -= usize::from(t != Tok::End);
            return Err(self.unexpected(t, "an integer exponent"));
        };
        let e = i64::try_from(n).map_err(|_| ParseError::new(epos, ParseErrorKind::TooLarge))?;
        Ok(Node {
            ast: Ast::Pow(Box::new(base), if negative { -e } else { e }),
            pos,
        })
    }

    fn base(&mut self) -> Result<Node, ParseError> {
        let (t, pos) = self.bump();
        let ast = match t {
            Tok::Num(n) => Ast::Num(n),
            Tok::Ident(s) => Ast::Ident(s),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Tok::RParen => {
                        self.bump();
                    }
                    t => return Err(self.unexpected(t.clone(), "`)`")),
                }
                return Ok(inner);
            }
            t => {
                self.at -= usize::from(t != Tok::End);
                return Err(self.unexpected(t, "a number, identifier or `(`"));
            }
        };
        Ok(Node { ast, pos })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(n: &Node) -> String {
        match &n.ast {
            Ast::Num(k) => k.to_string(),
            Ast::Ident(s) => s.clone(),
            Ast::Neg(a) => format!("(-{})", shape(a)),
            Ast::Add(a, b) => format!("({} + {})", shape(a), shape(b)),
            Ast::Sub(a, b) => format!("({} - {})", shape(a), shape(b)),
            Ast::Mul(a, b) => format!("({} * {})", shape(a), shape(b)),
            Ast::Div(a, b) => format!("({} / {})", shape(a), shape(b)),
            Ast::Pow(a, e) => format!("{}^{}", shape(a), e),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        let n = parse("x^3 - 3*y^-2*x + 3*y^-3", Pos::START).unwrap();
        assert_eq!(shape(&n), "((x^3 - ((3 * y^-2) * x)) + (3 * y^-3))");
        let n = parse("-x*y/2", Pos::START).unwrap();
        assert_eq!(shape(&n), "(((-x) * y) / 2)");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("x*(", Pos::START).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!((e.line, e.column), (1, 4));
        let e = parse("x + * y", Pos::START).unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse("(x y)", Pos::START).unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        let e = parse("x^y", Pos::START).unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert_eq!(parse("", Pos::START).unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
    }

    #[test]
    fn deep_nesting_is_rejected() {
        let src = "(".repeat(5000) + "x" + &")".repeat(5000);
        assert_eq!(parse(&src, Pos::START).unwrap_err().kind, ParseErrorKind::TooLarge);
        let src = "-".repeat(5000) + "x";
        assert_eq!(parse(&src, Pos::START).unwrap_err().kind, ParseErrorKind::TooLarge);
    }
}
