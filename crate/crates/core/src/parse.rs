//! Text formats: polynomial expressions and model files.
//!
//! Expressions use rationals (`-3/2`), names, `+ - * ^` and parentheses.
//! `^` binds tighter than `*`, which binds tighter than `+` and `-`.
//! Model files are line-oriented:
//!
//! ```text
//! # comment
//! generator x1 2
//! generator y1 3
//! d y1 = x1^2
//! ```
//!
//! Generators without a `d` line are closed.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, GeneratorTable};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::sullivan::SullivanModel;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Debug, Clone)]
enum Expr {
    Num(Rational),
    Var(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Tokens with their 1-based columns.
fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits")), col));
        } else if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(Error::Parse { line, column: col, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn err<T>(&self, message: String) -> Result<T> {
        let column = self.toks.get(self.pos).map_or(self.end_col, |t| t.1);
        Err(Error::Parse { line: self.line, column, message })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Num(n)) => format!("`{n}`"),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Op(c)) => format!("`{c}`"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e = u32::try_from(&n).or_else(|_| self.err(format!("exponent `{n}` too large")))?;
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return self.err(format!("expected exponent, found {}", self.describe())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(Expr::Num(Rational::new(n, d)))
                        }
                        _ => self.err(format!("expected nonzero denominator, found {}", self.describe())),
                    }
                } else {
                    Ok(Expr::Num(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(s)) => {
                let col = self.toks[self.pos].1;
                self.pos += 1;
                Ok(Expr::Var(s, col))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err(format!("expected `)`, found {}", self.describe()));
                }
                Ok(e)
            }
            _ => self.err(format!("expected a number, name or `(`, found {}", self.describe())),
        }
    }
}

fn parse_expr(text: &str, line: usize, col0: usize) -> Result<Expr> {
    let toks = lex(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut p = Parser { toks, pos: 0, line, end_col };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err(format!("unexpected {}", p.describe()));
    }
    Ok(e)
}

/// Evaluation target of a parsed expression.
trait Target: Sized + Clone {
    fn constant(&self, c: Rational) -> Self;
    fn var(&self, name: &str, line: usize, column: usize) -> Result<Self>;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

fn eval<T: Target>(e: &Expr, proto: &T, line: usize) -> Result<T> {
    Ok(match e {
        Expr::Num(c) => proto.constant(c.clone()),
        Expr::Var(name, col) => proto.var(name, line, *col)?,
        Expr::Add(a, b) => eval(a, proto, line)?.add(&eval(b, proto, line)?),
        Expr::Sub(a, b) => eval(a, proto, line)?.add(&eval(b, proto, line)?.neg()),
        Expr::Mul(a, b) => eval(a, proto, line)?.mul(&eval(b, proto, line)?),
        Expr::Neg(a) => eval(a, proto, line)?.neg(),
        Expr::Pow(a, k) => {
            let base = eval(a, proto, line)?;
            let mut acc = proto.constant(Rational::one());
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

impl Target for Poly<Rational> {
    fn constant(&self, c: Rational) -> Self {
        Poly::constant(self.ring(), c)
    }
    fn var(&self, name: &str, line: usize, column: usize) -> Result<Self> {
        match self.ring().index_of(name) {
            Some(i) => Ok(Poly::var(self.ring(), i)),
            None => Err(Error::Parse { line, column, message: format!("unknown variable `{name}`") }),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Target for AlgebraElement<Rational> {
    fn constant(&self, c: Rational) -> Self {
        AlgebraElement::constant(self.table(), c)
    }
    fn var(&self, name: &str, line: usize, column: usize) -> Result<Self> {
        AlgebraElement::generator_named(self.table(), name)
            .map_err(|_| Error::Parse { line, column, message: format!("unknown generator `{name}`") })
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Parses a polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Poly<Rational>> {
    eval(&parse_expr(text, 1, 1)?, &Poly::zero(ring), 1)
}

/// Names appearing in an expression, sorted and deduplicated.
pub fn expression_names(text: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = lex(text, 1, 1)?
        .into_iter()
        .filter_map(|(t, _)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    Ok(names)
}

/// Parses a polynomial in the ring of its own variables (sorted), or of
/// `vars` when given.
pub fn parse_poly_auto(text: &str, vars: Option<&[String]>) -> Result<Poly<Rational>> {
    let names = match vars {
        Some(v) => v.to_vec(),
        None => expression_names(text)?,
    };
    let ring = PolyRing::new(names)?;
    parse_poly(text, &ring)
}

/// Parses an element of the free algebra on `table`.
pub fn parse_element(text: &str, table: &Arc<GeneratorTable>) -> Result<AlgebraElement<Rational>> {
    eval(&parse_expr(text, 1, 1)?, &AlgebraElement::zero(table), 1)
}

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<SullivanModel<Rational>> {
    let mut gens: Vec<(String, u32)> = Vec::new();
    let mut diffs: Vec<(usize, usize, String, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - trimmed.len();
        let err = |column: usize, message: String| Error::Parse { line, column, message };
        if let Some(rest) = trimmed.strip_prefix("generator ") {
            let words: Vec<&str> = rest.split_whitespace().collect();
            if words.len() != 2 {
                return Err(err(indent + 1, "expected `generator <name> <degree>`".into()));
            }
            let name = words[0];
            if !name.starts_with(is_ident_start) || !name.chars().all(is_ident_char) {
                return Err(err(indent + 11, format!("invalid generator name `{name}`")));
            }
            let degree: u32 = words[1]
                .parse()
                .map_err(|_| err(indent + 1 + body[indent..].find(words[1]).unwrap_or(0), format!("invalid degree `{}`", words[1])))?;
            if gens.iter().any(|(g, _)| g == name) {
                return Err(err(indent + 11, format!("duplicate generator `{name}`")));
            }
            if degree == 0 {
                return Err(err(indent + 11, format!("generator `{name}` has degree 0")));
            }
            gens.push((name.to_string(), degree));
        } else if let Some(rest) = trimmed.strip_prefix("d ") {
            let Some(eq) = rest.find('=') else {
                return Err(err(indent + 1, "expected `d <name> = <expression>`".into()));
            };
            let name = rest[..eq].trim();
            let Some(pos) = gens.iter().position(|(g, _)| g == name) else {
                return Err(err(indent + 3, format!("unknown generator `{name}`")));
            };
            if diffs.iter().any(|d| d.0 == pos) {
                return Err(err(indent + 3, format!("second differential for `{name}`")));
            }
            let expr_col = indent + 2 + eq + 2;
            diffs.push((pos, line, rest[eq + 1..].to_string(), expr_col));
        } else {
            return Err(err(indent + 1, format!("unrecognized line `{}`", trimmed.trim_end())));
        }
    }
    let table = GeneratorTable::new(gens.iter().map(|(n, d)| (n.clone(), *d)))?;
    let mut images: Vec<AlgebraElement<Rational>> = (0..table.len()).map(|_| AlgebraElement::zero(&table)).collect();
    for (pos, line, expr, col) in diffs {
        let e = eval(&parse_expr(&expr, line, col)?, &AlgebraElement::zero(&table), line)?;
        images[pos] = e;
    }
    let model = SullivanModel::new(&table, images)?;
    model.validate()?;
    Ok(model)
}

/// Model file text; `parse_model(render_model(m)) == m`.
pub fn render_model(m: &SullivanModel<Rational>) -> String {
    let t = m.table();
    let mut out = String::new();
    for (name, degree) in t.iter() {
        out.push_str(&format!("generator {name} {degree}\n"));
    }
    for (i, d) in m.differentials().iter().enumerate() {
        if !d.is_zero() {
            out.push_str(&format!("d {} = {d}\n", t.name(i)));
        }
    }
    out
}
