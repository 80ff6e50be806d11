//! Text formats: an expression language for elements and coefficients,
//! the algebra description file, presets, and the command layer used by
//! the CLI.
//!
//! Expressions follow
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' '-'? uint)?
//! base   := uint | ident | '(' expr ')'
//! ```
//!
//! Products keep operand order. `/` divides on the right by a coefficient.
//! Negative powers are only defined for invertible coefficients.

pub mod cli;
mod error;
mod eval;
mod lexer;
mod parser;
mod presets;
mod printer;
mod specfile;

pub use error::{ParseError, ParseErrorKind, Pos};
pub use presets::{preset, preset_document, preset_spec, PRESETS};
pub use printer::print_expr;
pub use specfile::{check_spec, parse_algebra, parse_spec, unparse_spec};

use crate::burchnall::BivariatePoly;
use crate::coeff::Coeff;
use crate::pbw::{Algebra, Element};

/// Parses an element of `alg`. Identifiers resolve to variables, then ring
/// generators, then the algebra's named parameters.
pub fn parse_element(alg: &Algebra, src: &str) -> Result<Element, ParseError> {
    let ast = parser::parse(src, Pos::START)?;
    eval::eval(&eval::ElementDomain::new(alg), &ast)
}

/// Parses a coefficient of `alg`'s ring.
pub fn parse_coeff(alg: &Algebra, src: &str) -> Result<Coeff, ParseError> {
    let ast = parser::parse(src, Pos::START)?;
    let spec = alg.spec();
    eval::eval(
        &eval::CoeffDomain {
            ring: &spec.ring,
            params: &spec.params,
        },
        &ast,
    )
}

/// Parses a polynomial in `s` and `t` with rational coefficients.
pub fn parse_bivariate(src: &str) -> Result<BivariatePoly, ParseError> {
    let ast = parser::parse(src, Pos::START)?;
    eval::eval(&eval::BivariateDomain, &ast)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{Condition, Exponent};

    #[test]
    fn weyl_rewrite_prints() {
        let a = preset("weyl").unwrap();
        assert_eq!(parse_element(&a, "x*y").unwrap().to_string(), "y*x + 1");
        let c = parse_element(&a, "x*y - y*x").unwrap();
        assert_eq!(c.to_string(), "1");
        assert_eq!(Element::zero(&a).to_string(), "0");
    }

    #[test]
    fn q_weyl_values() {
        let a = preset("q-weyl").unwrap();
        assert_eq!(parse_element(&a, "x*y").unwrap().to_string(), "2*y*x + 1");
        assert_eq!(parse_element(&a, "x^2*y").unwrap().to_string(), "4*y*x^2 + 3*x");
        let a3 = preset("q-weyl:q=3").unwrap();
        assert_eq!(parse_element(&a3, "x*y").unwrap().to_string(), "3*y*x + 1");
        assert_eq!(parse_element(&a3, "q*y").unwrap().to_string(), "3*y");
    }

    #[test]
    fn rational_function_operator() {
        let a = preset("weyl-rational").unwrap();
        let f = parse_element(&a, "x^3 - 3*y^-2*x + 3*y^-3").unwrap();
        let ring = a.ring();
        let y = ring.generator(0);
        let expect = Element::from_terms(
            &a,
            [
                (Exponent::from(vec![3]), ring.one()),
                (Exponent::from(vec![1]), y.pow_signed(-2).unwrap().mul(&ring.from_int(-3))),
                (Exponent::from(vec![0]), y.pow_signed(-3).unwrap().mul(&ring.from_int(3))),
            ],
        );
        assert_eq!(f, expect);
        assert_eq!(f.to_string(), "x^3 - (3)/(y^2)*x + (3)/(y^3)");
        assert_eq!(parse_element(&a, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn negative_powers_need_a_field() {
        let a = preset("weyl").unwrap();
        let e = parse_element(&a, "y^-2*x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NegativePower);
        assert_eq!((e.line, e.column), (1, 2));
        assert_eq!(parse_element(&a, "2^-1*x").unwrap().to_string(), "1/2*x");
        assert_eq!(parse_element(&a, "x^-1").unwrap_err().kind, ParseErrorKind::NegativePower);
    }

    #[test]
    fn division_is_by_coefficients() {
        let a = preset("weyl").unwrap();
        assert_eq!(parse_element(&a, "x/2").unwrap().to_string(), "1/2*x");
        assert_eq!(parse_element(&a, "(y^2 - 1)/(y - 1)").unwrap().to_string(), "y + 1");
        assert_eq!(parse_element(&a, "y/(y + 1)").unwrap_err().kind, ParseErrorKind::NotDivisible);
        assert_eq!(parse_element(&a, "x/0").unwrap_err().kind, ParseErrorKind::DivisionByZero);
        assert!(parse_element(&a, "y/x").is_err());
        let r = preset("weyl-rational").unwrap();
        // x * (1/y) = (1/y) x - 1/y^2
        assert_eq!(parse_element(&r, "x/y").unwrap().to_string(), "(1)/(y)*x - (1)/(y^2)");
    }

    #[test]
    fn identifier_errors() {
        let a = preset("weyl").unwrap();
        let e = parse_element(&a, "x + z").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("z".into()));
        assert_eq!(e.column, 5);
        let e = parse_element(&a, "x*(").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
    }

    #[test]
    fn size_limits() {
        let a = preset("higher-endo").unwrap();
        assert_eq!(parse_element(&a, "x^40*y").unwrap_err().kind, ParseErrorKind::TooLarge);
        assert!(parse_element(&a, "x^3*y").is_ok());
        let w = preset("weyl").unwrap();
        assert_eq!(parse_element(&w, "x^100000").unwrap_err().kind, ParseErrorKind::TooLarge);
        assert_eq!(
            parse_element(&w, "x^99999999999999999999999").unwrap_err().kind,
            ParseErrorKind::TooLarge
        );
    }

    #[test]
    fn bivariate_parsing() {
        let f = parse_bivariate("s^3 - t^2").unwrap();
        assert_eq!(f.to_string(), "s^3 - t^2");
        assert_eq!(parse_bivariate("(s + t)^2 - 2*s*t").unwrap().to_string(), "s^2 + t^2");
        assert_eq!(parse_bivariate("t/2").unwrap().to_string(), "1/2*t");
        assert!(parse_bivariate("s/t").is_err());
        assert!(parse_bivariate("x").is_err());
    }

    #[test]
    fn presets_validate() {
        for name in PRESETS {
            preset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(matches!(preset("nope").unwrap_err().kind, ParseErrorKind::UnknownPreset(_)));
        assert!(matches!(preset("weyl:q=2").unwrap_err().kind, ParseErrorKind::UnknownPreset(_)));
        let h = preset("higher-endo:p=y^3 + y").unwrap();
        assert_eq!(parse_element(&h, "x*y").unwrap().to_string(), "(y^3 + y)*x");
    }

    #[test]
    fn quantum_plane_and_heisenberg() {
        let qp = preset("quantum-plane").unwrap();
        assert_eq!(parse_element(&qp, "x2*x1").unwrap().to_string(), "3*x1*x2");
        let e01 = Exponent::from(vec![0, 1]);
        let e10 = Exponent::from(vec![1, 0]);
        assert_eq!(qp.commutation_constant(&e01, &e10), qp.ring().from_int(3));
        let h = preset("heisenberg").unwrap();
        assert_eq!(parse_element(&h, "x2*x1").unwrap().to_string(), "x1*x2 - x3");
        assert_eq!(parse_element(&h, "x3*x1 - x1*x3").unwrap().to_string(), "0");
    }

    #[test]
    fn spec_round_trip() {
        for name in PRESETS {
            let spec = preset_spec(name).unwrap();
            let doc = unparse_spec(&spec);
            let again = parse_spec(&doc).unwrap_or_else(|e| panic!("{name}: {e}\n{doc}"));
            assert_eq!(spec, again, "{doc}");
            assert_eq!(unparse_spec(&again), doc);
        }
    }

    #[test]
    fn document_with_order_and_tail() {
        let doc = "format = 1\n[ring]\nkind = polynomial\ngenerators = y\n[vars]\nnames = x1, x2, x3\n\
                   [relations]\nx2*x1 = x1*x2 + 2*x3 + y\n[order]\nkind = lex\nprecedence = x1, x3, x2\n";
        let spec = parse_spec(doc).unwrap();
        let rel = spec.relation(0, 1);
        assert!(rel.constant.is_one());
        assert_eq!(rel.tail_linear[2], spec.ring.from_int(2));
        assert_eq!(rel.tail_constant, spec.ring.generator(0));
        assert_eq!(spec.order.precedence(), &[0, 2, 1]);
        assert_eq!(parse_spec(&unparse_spec(&spec)).unwrap(), spec);
    }

    #[test]
    fn document_errors() {
        let e = parse_spec("").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_spec("  # only a comment\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));

        let e = parse_spec("[ring]\nkind = rational\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Document(_)));

        let bad_expr = "format = 1\n[ring]\nkind = polynomial\ngenerators = y\n[vars]\nnames = x\nx.sigma.y = 2*(y\n";
        let e = parse_spec(bad_expr).unwrap_err();
        assert_eq!((e.line, e.column), (7, 17));

        let tail = "format = 1\n[ring]\nkind = rational\n[vars]\nnames = a, b\n[relations]\nb*a = a*b + a*a\n";
        let e = parse_spec(tail).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::TailDegree(_)), "{e}");

        let zero = "format = 1\n[ring]\nkind = rational\n[vars]\nnames = a, b\n[relations]\nb*a = a + 1\n";
        let e = parse_spec(zero).unwrap_err();
        match e.kind {
            ParseErrorKind::Validation(r) => assert!(r.violates(Condition::NonzeroPairConstant)),
            k => panic!("{k}"),
        }
        assert_eq!(e.line, 6);

        let leibniz = "format = 1\n[ring]\nkind = polynomial\ngenerators = y, z\n[vars]\nnames = x\n\
                       x.sigma.y = 2*y\nx.delta.z = 1\n";
        match parse_spec(leibniz).unwrap_err().kind {
            ParseErrorKind::Validation(r) => assert!(r.violates(Condition::SigmaLeibniz)),
            k => panic!("{k}"),
        }

        let order = "format = 1\n[vars]\nnames = x\n[ring]\nkind = rational\n";
        assert!(parse_spec(order).is_err());
        let fmt = "format = 2\n[ring]\nkind = rational\n[vars]\nnames = x\n";
        assert_eq!(parse_spec(fmt).unwrap_err().column, 10);
    }
}
