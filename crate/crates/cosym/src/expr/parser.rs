//! Recursive-descent parser for the expression grammar.
//!
//! Grammar (EBNF):
//! ```text
//! expr    := term { ("+" | "-") term }
//! term    := unary { ("*" | "/") unary }
//! unary   := "-" unary | power
//! power   := atom [ "^" [ "-" ] integer ]
//! atom    := number | ident | ident "(" expr ")" | "(" expr ")"
//! ```
//!
//! Identifiers resolve, in order, to: the literal `i`, a function name
//! (`sin cos sinh cosh exp conj`), a chart coordinate, a complex alias
//! (`z1`/`zbar1` rewrite to `x1 + i*y1` / `x1 - i*y1`), or a declared
//! parameter.  Anything else is an error with a byte position.

use super::Expr;
use crate::fields::ChartDecl;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                toks.push((Tok::Plus, k));
                k += 1;
            }
            '-' => {
                toks.push((Tok::Minus, k));
                k += 1;
            }
            '*' => {
                toks.push((Tok::Star, k));
                k += 1;
            }
            '/' => {
                toks.push((Tok::Slash, k));
                k += 1;
            }
            '^' => {
                toks.push((Tok::Caret, k));
                k += 1;
            }
            '(' => {
                toks.push((Tok::LParen, k));
                k += 1;
            }
            ')' => {
                toks.push((Tok::RParen, k));
                k += 1;
            }
            '0'..='9' | '.' => {
                let start = k;
                while k < bytes.len() && matches!(bytes[k] as char, '0'..='9' | '.') {
                    k += 1;
                }
                // exponent part: e or E, optional sign
                if k < bytes.len() && matches!(bytes[k] as char, 'e' | 'E') {
                    let mut j = k + 1;
                    if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        k = j;
                        while k < bytes.len() && (bytes[k] as char).is_ascii_digit() {
                            k += 1;
                        }
                    }
                }
                let text = &src[start..k];
                match text.parse::<f64>() {
                    Ok(v) => toks.push((Tok::Num(v), start)),
                    Err(_) => return err(start, format!("malformed number `{text}`")),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = k;
                while k < bytes.len()
                    && ((bytes[k] as char).is_ascii_alphanumeric() || bytes[k] as char == '_')
                {
                    k += 1;
                }
                toks.push((Tok::Ident(src[start..k].to_string()), start));
            }
            other => return err(k, format!("unexpected character `{other}`")),
        }
    }
    Ok(toks)
}

const FUNCTIONS: [&str; 6] = ["sin", "cos", "sinh", "cosh", "exp", "conj"];

pub struct Parser<'c> {
    chart: &'c ChartDecl,
    params: Vec<String>,
}

impl<'c> Parser<'c> {
    pub fn new(chart: &'c ChartDecl) -> Self {
        Parser {
            chart,
            params: Vec::new(),
        }
    }

    /// Declare parameter names the expressions may reference.
    pub fn with_params(mut self, params: &[&str]) -> Self {
        self.params = params.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_param_names(mut self, params: &[String]) -> Self {
        self.params = params.to_vec();
        self
    }

    pub fn parse(&self, source: &str) -> Result<Expr, ParseError> {
        let toks = tokenize(source)?;
        let mut cur = Cursor {
            toks: &toks,
            pos: 0,
            end: source.len(),
        };
        let e = self.expr(&mut cur)?;
        if let Some((t, at)) = cur.peek() {
            return err(at, format!("unexpected trailing token {t:?}"));
        }
        Ok(e)
    }

    fn expr(&self, cur: &mut Cursor) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term(cur)?];
        loop {
            match cur.peek() {
                Some((Tok::Plus, _)) => {
                    cur.bump();
                    terms.push(self.term(cur)?);
                }
                Some((Tok::Minus, _)) => {
                    cur.bump();
                    terms.push(Expr::neg(self.term(cur)?));
                }
                _ => break,
            }
        }
        Ok(Expr::sum(terms))
    }

    fn term(&self, cur: &mut Cursor) -> Result<Expr, ParseError> {
        let mut acc = self.unary(cur)?;
        loop {
            match cur.peek() {
                Some((Tok::Star, _)) => {
                    cur.bump();
                    acc = acc * self.unary(cur)?;
                }
                Some((Tok::Slash, _)) => {
                    cur.bump();
                    acc = Expr::quot(acc, self.unary(cur)?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&self, cur: &mut Cursor) -> Result<Expr, ParseError> {
        if let Some((Tok::Minus, _)) = cur.peek() {
            cur.bump();
            return Ok(Expr::neg(self.unary(cur)?));
        }
        self.power(cur)
    }

    fn power(&self, cur: &mut Cursor) -> Result<Expr, ParseError> {
        let base = self.atom(cur)?;
        if let Some((Tok::Caret, _)) = cur.peek() {
            cur.bump();
            let mut sign = 1i32;
            if let Some((Tok::Minus, _)) = cur.peek() {
                cur.bump();
                sign = -1;
            }
            match cur.peek() {
                Some((Tok::Num(v), at)) => {
                    cur.bump();
                    if v.fract() != 0.0 {
                        return err(at, "exponent must be an integer");
                    }
                    Ok(Expr::int_pow(base, sign * v as i32))
                }
                other => err(
                    other.map(|(_, at)| at).unwrap_or(cur.end),
                    "expected integer exponent after `^`",
                ),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&self, cur: &mut Cursor) -> Result<Expr, ParseError> {
        match cur.peek() {
            Some((Tok::Num(v), _)) => {
                cur.bump();
                Ok(Expr::num(v))
            }
            Some((Tok::LParen, at)) => {
                cur.bump();
                let e = self.expr(cur)?;
                match cur.peek() {
                    Some((Tok::RParen, _)) => {
                        cur.bump();
                        Ok(e)
                    }
                    _ => err(at, "unclosed parenthesis"),
                }
            }
            Some((Tok::Ident(name), at)) => {
                cur.bump();
                if FUNCTIONS.contains(&name.as_str()) {
                    match cur.peek() {
                        Some((Tok::LParen, _)) => {
                            cur.bump();
                            let arg = self.expr(cur)?;
                            match cur.peek() {
                                Some((Tok::RParen, _)) => {
                                    cur.bump();
                                }
                                _ => return err(at, format!("unclosed call to `{name}`")),
                            }
                            Ok(apply_fn(&name, arg))
                        }
                        _ => err(at, format!("function `{name}` requires one argument")),
                    }
                } else {
                    self.resolve(&name, at)
                }
            }
            other => err(
                other.map(|(_, at)| at).unwrap_or(cur.end),
                "expected expression",
            ),
        }
    }

    fn resolve(&self, name: &str, at: usize) -> Result<Expr, ParseError> {
        if name == "i" {
            return Ok(Expr::i());
        }
        if let Some(k) = self.chart.coordinate_index(name) {
            return Ok(Expr::var(k));
        }
        // complex aliases z<i>, zbar<i> expand over the real chart
        for (prefix, sign) in [("z", 1.0), ("zbar", -1.0)] {
            if let Some(rest) = name.strip_prefix(prefix) {
                if let Ok(idx) = rest.parse::<usize>() {
                    if idx >= 1 && idx <= self.chart.n() {
                        let x = Expr::var(idx); // x^idx lives at slot idx
                        let y = Expr::var(self.chart.n() + idx);
                        return Ok(x + Expr::num(sign) * Expr::i() * y);
                    }
                }
            }
        }
        if self.params.iter().any(|p| p == name) {
            return Ok(Expr::param(name));
        }
        err(at, format!("unknown identifier `{name}`"))
    }
}

fn apply_fn(name: &str, arg: Expr) -> Expr {
    match name {
        "sin" => Expr::sin(arg),
        "cos" => Expr::cos(arg),
        "sinh" => Expr::sinh(arg),
        "cosh" => Expr::cosh(arg),
        "exp" => Expr::exp(arg),
        "conj" => Expr::conj(arg),
        _ => unreachable!("checked against FUNCTIONS"),
    }
}

struct Cursor<'t> {
    toks: &'t [(Tok, usize)],
    pos: usize,
    end: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<(Tok, usize)> {
        self.toks.get(self.pos).cloned()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }
}

/// Parse `source` over the coordinates of `chart` (no free parameters).
pub fn parse_expression(source: &str, chart: &ChartDecl) -> Result<Expr, ParseError> {
    Parser::new(chart).parse(source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn chart() -> ChartDecl {
        ChartDecl::standard(1, (-1.0, 1.0))
    }

    #[test]
    fn model_coefficient_parses() {
        let c = chart();
        let e = Parser::new(&c)
            .with_params(&["w"])
            .parse("cosh(w*t) + sinh(w*t)/w")
            .unwrap();
        assert!(e.depth() >= 4);
        let mut params = HashMap::new();
        params.insert("w".to_string(), 0.5);
        let v = e.eval(&[0.3, 0.0, 0.0], &params).unwrap();
        let expect = f64::cosh(0.15) + f64::sinh(0.15) / 0.5;
        assert!((v.re - expect).abs() < 1e-15);
    }

    #[test]
    fn complex_literal() {
        let c = chart();
        let e = parse_expression("x1 + i*y1", &c).unwrap();
        let v = e.eval(&[0.0, 2.0, 3.0], &HashMap::new()).unwrap();
        assert_eq!(v, super::super::Complex::new(2.0, 3.0));
    }

    #[test]
    fn conj_of_alias_matches_manual_ast() {
        let c = chart();
        let parsed = parse_expression("conj(z1)", &c).unwrap();
        // manual construction: conj(x1 + i*y1)
        let manual = Expr::conj(Expr::var(1) + Expr::i() * Expr::var(2));
        for p in [[0.0, 1.5, -0.5], [0.2, -0.3, 0.9]] {
            assert_eq!(
                parsed.eval(&p, &HashMap::new()).unwrap(),
                manual.eval(&p, &HashMap::new()).unwrap()
            );
        }
    }

    #[test]
    fn zbar_alias() {
        let c = chart();
        let e = parse_expression("zbar1", &c).unwrap();
        let v = e.eval(&[0.0, 2.0, 3.0], &HashMap::new()).unwrap();
        assert_eq!(v, super::super::Complex::new(2.0, -3.0));
    }

    #[test]
    fn unknown_identifier_has_position() {
        let c = chart();
        let e = parse_expression("t + bogus", &c).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.message.contains("bogus"));
    }

    #[test]
    fn syntax_error_has_position() {
        let c = chart();
        assert!(parse_expression("t + ", &c).is_err());
        assert!(parse_expression("(t", &c).is_err());
        assert!(parse_expression("sin", &c).is_err());
        assert!(parse_expression("t^x1", &c).is_err());
        assert!(parse_expression("t^1.5", &c).is_err());
    }

    #[test]
    fn precedence_and_unary_minus() {
        let c = chart();
        let e = parse_expression("-t^2 + 2*t - 1", &c).unwrap();
        let v = e.eval(&[3.0, 0.0, 0.0], &HashMap::new()).unwrap();
        assert_eq!(v.re, -9.0 + 6.0 - 1.0);
    }
}
