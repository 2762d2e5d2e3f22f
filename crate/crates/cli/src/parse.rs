//! The expression language.
//!
//! Grammar (all composition explicit, no juxtaposition):
//!
//! ```text
//! expr   := ("+" | "-")? term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" uint)?
//! atom   := "D"uint | "x"uint | "mu"uint | "lambda" | "gamma"
//!         | uint | name | "(" expr ")"
//! ```
//!
//! `*` is operator composition (noncommutative), `/` divides by a scalar
//! (order-zero) operator, `^` is a nonnegative integer power by repeated
//! composition, and integer literals combine with `/` to form rationals.
//! `name` refers to a script binding and is rejected outside scripts.

use std::collections::HashMap;
use std::fmt;

use pdo_core::{DiffOp, MultiPoly, RatFun, VarId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DimensionExceeded(String),
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at byte {}: {}", self.pos, msg),
            ParseErrorKind::DimensionExceeded(name) => {
                write!(f, "index out of dimension at byte {}: {}", self.pos, name)
            }
            ParseErrorKind::UnknownName(name) => {
                write!(f, "unknown name at byte {}: {}", self.pos, name)
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        pos,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(src[start..i].to_string()), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
            }
            other => return Err(syntax(i, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

pub struct ExprParser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    dim: usize,
    env: &'a HashMap<String, DiffOp>,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<DiffOp, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).expect("parser uses a single dimension");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).expect("parser uses a single dimension");
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DiffOp, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.compose(&rhs).expect("parser uses a single dimension");
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.bump();
                    let rhs = self.factor()?;
                    let scalar = as_scalar(&rhs)
                        .ok_or_else(|| syntax(at, "divisor must be an order-zero operator"))?;
                    if scalar.is_zero() {
                        return Err(syntax(at, "division by zero"));
                    }
                    let inv = scalar.recip().expect("nonzero scalar");
                    acc = acc
                        .compose(&DiffOp::scalar(self.dim, inv))
                        .expect("parser uses a single dimension");
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DiffOp, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let at = self.here();
            self.bump();
            match self.bump() {
                Some(Tok::Int(digits)) => {
                    let e: u32 = digits
                        .parse()
                        .map_err(|_| syntax(at, "exponent too large"))?;
                    return Ok(base.pow(e).expect("parser uses a single dimension"));
                }
                _ => return Err(syntax(at, "'^' must be followed by a nonnegative integer")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<DiffOp, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let n: num_bigint::BigInt = digits.parse().expect("lexed digits");
                Ok(DiffOp::scalar(
                    self.dim,
                    RatFun::constant(pdo_core::Rational::from_integer(n)),
                ))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(self.here(), "expected ')'")),
                }
            }
            Some(Tok::Ident(name)) => self.resolve(&name, at),
            Some(tok) => Err(syntax(at, format!("unexpected token {tok:?}"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }

    fn resolve(&mut self, name: &str, at: usize) -> Result<DiffOp, ParseError> {
        if name == "lambda" {
            return Ok(DiffOp::scalar(self.dim, RatFun::var(VarId::lambda())));
        }
        if name == "gamma" {
            return Ok(DiffOp::scalar(self.dim, RatFun::var(VarId::gamma())));
        }
        for (prefix, kind) in [("D", 'D'), ("x", 'x'), ("mu", 'm')] {
            if let Some(rest) = name.strip_prefix(prefix) {
                if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                    let index: u32 = rest.parse().map_err(|_| {
                        syntax(at, format!("index in '{name}' is too large"))
                    })?;
                    let bound = if kind == 'm' { self.dim + 1 } else { self.dim };
                    if index == 0 || index as usize > bound {
                        return Err(ParseError {
                            pos: at,
                            kind: ParseErrorKind::DimensionExceeded(name.to_string()),
                        });
                    }
                    return Ok(match kind {
                        'D' => DiffOp::partial(self.dim, index as usize),
                        'x' => DiffOp::scalar(self.dim, RatFun::var(VarId::x(index))),
                        _ => DiffOp::scalar(self.dim, RatFun::var(VarId::mu(index))),
                    });
                }
            }
        }
        match self.env.get(name) {
            Some(bound) => Ok(bound.clone()),
            None => Err(ParseError {
                pos: at,
                kind: ParseErrorKind::UnknownName(name.to_string()),
            }),
        }
    }
}

/// Parse an expression over `dim` variables with script bindings in `env`.
pub fn parse_expression(
    src: &str,
    dim: usize,
    env: &HashMap<String, DiffOp>,
) -> Result<DiffOp, ParseError> {
    let tokens = lex(src)?;
    let mut p = ExprParser {
        tokens,
        pos: 0,
        end: src.len(),
        dim,
        env,
    };
    let out = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(syntax(p.here(), "trailing input"));
    }
    Ok(out)
}

/// The rational function of a scalar (order-zero) operator.
pub fn as_scalar(op: &DiffOp) -> Option<RatFun> {
    if op.is_zero() {
        return Some(RatFun::zero());
    }
    if op.order() == Some(0) {
        Some(op.coeff(&pdo_core::DMono::constant(op.dim())))
    } else {
        None
    }
}

/// Parse an expression that must denote a polynomial (an order-zero
/// operator with polynomial coefficient).
pub fn parse_polynomial(
    src: &str,
    dim: usize,
    env: &HashMap<String, DiffOp>,
) -> Result<MultiPoly, ParseError> {
    let op = parse_expression(src, dim, env)?;
    let scalar = as_scalar(&op)
        .ok_or_else(|| syntax(0, "expected a scalar expression, found derivative terms"))?;
    if !scalar.is_polynomial() {
        return Err(syntax(0, "expected a polynomial, found a denominator"));
    }
    Ok(scalar.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse2(src: &str) -> Result<DiffOp, ParseError> {
        parse_expression(src, 2, &HashMap::new())
    }

    #[test]
    fn leibniz_example() {
        let got = parse2("D1*x1").unwrap();
        assert_eq!(got.to_string(), "(x1) D1 + 1");
    }

    #[test]
    fn five_term_example() {
        let got = parse2("(D1^2+D2^2)*(x1*D2+x2*D1)").unwrap();
        assert_eq!(
            got.to_string(),
            "(x2) D1^3 + (x1) D1^2 D2 + (x2) D1 D2^2 + (x1) D2^3 + (4) D1 D2"
        );
    }

    #[test]
    fn trailing_operator_is_a_syntax_error() {
        let err = parse2("D1 + ").unwrap_err();
        assert_eq!(err.pos, 5, "error position is the end of input");
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn dimension_exceeded() {
        let err = parse2("D3").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::DimensionExceeded(_)));
        assert!(parse2("mu3").is_ok());
        assert!(matches!(
            parse2("mu4").unwrap_err().kind,
            ParseErrorKind::DimensionExceeded(_)
        ));
    }

    #[test]
    fn rationals_and_division() {
        let half = parse2("1/2").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let k = parse2("x1*x2*(D1*D2 - lambda)*(1/(x1*x2))").unwrap();
        let ex = pdo_core::build_example_k();
        assert_eq!(k, ex.k);
        let err = parse2("1/D1").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        let err = parse2("1/0").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn unary_signs_and_precedence() {
        let a = parse2("-D1 + D1").unwrap();
        assert!(a.is_zero());
        // '*' binds tighter than '+', '^' tighter than '*'.
        let b = parse2("D1 + D2*D1^2").unwrap();
        let want = DiffOp::partial(2, 1)
            .add(
                &DiffOp::partial(2, 2)
                    .compose(&DiffOp::partial(2, 1).pow(2).unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(b, want);
    }

    #[test]
    fn juxtaposition_is_rejected() {
        assert!(parse2("D1 D2").is_err());
        assert!(parse2("(x1) D1").is_err());
    }

    #[test]
    fn bindings_resolve_in_scripts_only() {
        let err = parse2("L").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::UnknownName(_)));
        let mut env = HashMap::new();
        env.insert("L".to_string(), DiffOp::partial(2, 1));
        let got = parse_expression("L^2", 2, &env).unwrap();
        assert_eq!(got, DiffOp::partial(2, 1).pow(2).unwrap());
    }

    #[test]
    fn input_string_roundtrip() {
        let ex = pdo_core::build_example_k();
        for op in [&ex.k, &ex.l, &ex.p] {
            let printed = op.to_input_string();
            let reparsed = parse2(&printed).unwrap();
            assert_eq!(&reparsed, op, "roundtrip of {printed}");
        }
    }

    #[test]
    fn polynomial_extraction() {
        let p = parse_polynomial("x1^2*(x1*x2 - lambda)", 2, &HashMap::new()).unwrap();
        assert_eq!(p.degree_in(VarId::x(1)), 3);
        assert!(parse_polynomial("D1", 2, &HashMap::new()).is_err());
        assert!(parse_polynomial("1/(x1)", 2, &HashMap::new()).is_err());
    }
}
