//! Text format for differential operators.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" uint)?
//! atom   := "(" expr ")" | var | lit
//! var    := "x" | "d"            (one variable only)
//!         | "x" uint | "d" uint  (1-based index)
//! lit    := uint | uint "/" uint
//! ```
//!
//! Products are evaluated in the written order; `d*x` is `x*d + 1`.
//! Multiplication must be explicit. Printing emits the same grammar with
//! monomials in descending graded-lex order, so `parse(print(a)) == a`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::domain::CoeffDomain;
use crate::weyl::{MonomialKey, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: found {found}, expected {}", expected.join(" or "))]
    Syntax { position: usize, found: String, expected: Vec<&'static str> },

    #[error("unknown variable '{name}' at position {position} (algebra has {nvars} variable(s))")]
    UnknownVariable { name: String, position: usize, nvars: usize },

    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },

    #[error("bad literal '{literal}': {reason}")]
    BadLiteral { literal: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    D,
}

/// Parsed operator expression. Products keep their written order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpExpr {
    /// Signed summands; `true` means subtracted.
    Sum(Vec<(bool, OpExpr)>),
    Product(Vec<OpExpr>),
    Power(Box<OpExpr>, u32),
    Var {
        generator: Generator,
        /// 1-based index; `None` for the bare `x` / `d` spelling.
        index: Option<u32>,
        position: usize,
    },
    Literal {
        num: BigInt,
        den: Option<BigInt>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(Generator, Option<String>),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) => write!(f, "number '{s}'"),
            Tok::Ident(g, idx) => {
                let c = if *g == Generator::X { 'x' } else { 'd' };
                write!(f, "variable '{c}{}'", idx.as_deref().unwrap_or(""))
            }
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |mut j: usize| {
        let start = j;
        while j < chars.len() && chars[j].1.is_ascii_digit() {
            j += 1;
        }
        (start, j)
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let (s, e) = digits_from(i);
                out.push((pos, Tok::Num(chars[s..e].iter().map(|c| c.1).collect())));
                i = e;
                continue;
            }
            'x' | 'd' => {
                let g = if c == 'x' { Generator::X } else { Generator::D };
                let (s, e) = digits_from(i + 1);
                let idx = (e > s).then(|| chars[s..e].iter().map(|c| c.1).collect());
                out.push((pos, Tok::Ident(g, idx)));
                i = e;
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    position: pos,
                    found: format!("character '{other}'"),
                    expected: vec!["variable", "number", "operator"],
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Syntax { position: self.pos(), found: self.peek().to_string(), expected }
    }

    fn expr(&mut self) -> Result<OpExpr, ParseError> {
        let mut summands = Vec::new();
        let leading_minus = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        summands.push((leading_minus, self.term()?));
        loop {
            let negated = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            summands.push((negated, self.term()?));
        }
        if summands.len() == 1 && !summands[0].0 {
            return Ok(summands.pop().unwrap().1);
        }
        Ok(OpExpr::Sum(summands))
    }

    fn term(&mut self) -> Result<OpExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        Ok(OpExpr::Product(factors))
    }

    fn factor(&mut self) -> Result<OpExpr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (_, Tok::Num(s)) => {
                let e: u32 = s
                    .parse()
                    .map_err(|_| ParseError::BadLiteral { literal: s.clone(), reason: "exponent too large".into() })?;
                Ok(OpExpr::Power(Box::new(base), e))
            }
            (position, Tok::Minus) => Err(ParseError::NegativeExponent { position }),
            _ => {
                self.at -= 1;
                Err(self.unexpected(vec!["exponent"]))
            }
        }
    }

    fn atom(&mut self) -> Result<OpExpr, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected(vec!["')'", "'+'", "'-'", "'*'"]));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Ident(generator, idx) => {
                let (position, _) = self.bump();
                let index = match idx {
                    None => None,
                    Some(s) => Some(s.parse::<u32>().map_err(|_| ParseError::UnknownVariable {
                        name: format!("{}{s}", if generator == Generator::X { 'x' } else { 'd' }),
                        position,
                        nvars: 0,
                    })?),
                };
                Ok(OpExpr::Var { generator, index, position })
            }
            Tok::Num(n) => {
                self.bump();
                let num: BigInt = n.parse().expect("digits");
                if *self.peek() != Tok::Slash {
                    return Ok(OpExpr::Literal { num, den: None });
                }
                self.bump();
                match self.bump() {
                    (_, Tok::Num(d)) => Ok(OpExpr::Literal { num, den: Some(d.parse().expect("digits")) }),
                    _ => {
                        self.at -= 1;
                        Err(self.unexpected(vec!["denominator"]))
                    }
                }
            }
            _ => Err(self.unexpected(vec!["'('", "variable", "number"])),
        }
    }
}

/// Parses text into an expression tree without evaluating it.
pub fn parse_expr(text: &str) -> Result<OpExpr, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(vec!["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(e)
}

impl OpExpr {
    /// Evaluates the tree in `A_n` over `domain`.
    pub fn evaluate<D: CoeffDomain>(&self, nvars: usize, domain: &D) -> Result<WeylElement<D>, ParseError> {
        Ok(match self {
            OpExpr::Sum(parts) => {
                let mut acc = WeylElement::zero(domain.clone(), nvars);
                for (negated, e) in parts {
                    let v = e.evaluate(nvars, domain)?;
                    acc = if *negated { &acc - &v } else { &acc + &v };
                }
                acc
            }
            OpExpr::Product(factors) => {
                let mut acc = WeylElement::one(domain.clone(), nvars);
                for f in factors {
                    acc = &acc * &f.evaluate(nvars, domain)?;
                }
                acc
            }
            OpExpr::Power(base, e) => base.evaluate(nvars, domain)?.pow(*e),
            OpExpr::Var { generator, index, position } => {
                let slot = match index {
                    None if nvars == 1 => 0,
                    Some(i) if *i >= 1 && (*i as usize) <= nvars => *i as usize - 1,
                    _ => {
                        let c = if *generator == Generator::X { 'x' } else { 'd' };
                        let suffix = index.map(|i| i.to_string()).unwrap_or_default();
                        return Err(ParseError::UnknownVariable {
                            name: format!("{c}{suffix}"),
                            position: *position,
                            nvars,
                        });
                    }
                };
                match generator {
                    Generator::X => WeylElement::x(domain.clone(), nvars, slot),
                    Generator::D => WeylElement::d(domain.clone(), nvars, slot),
                }
            }
            OpExpr::Literal { num, den } => {
                let c = domain.from_literal(num, den.as_ref())?;
                WeylElement::constant(domain.clone(), nvars, c)
            }
        })
    }
}

/// Parses and evaluates `text` in `A_nvars(domain)`.
pub fn parse<D: CoeffDomain>(text: &str, nvars: usize, domain: &D) -> Result<WeylElement<D>, ParseError> {
    parse_expr(text)?.evaluate(nvars, domain)
}

fn push_power(out: &mut Vec<String>, name: String, e: u32) {
    match e {
        0 => {}
        1 => out.push(name),
        _ => out.push(format!("{name}^{e}")),
    }
}

/// Monomial without coefficient, e.g. `x^2*d`, `x1*d2^3`; `1` for the unit.
pub fn format_monomial(key: &MonomialKey, nvars: usize) -> String {
    let name = |g: char, i: usize| {
        if nvars == 1 {
            g.to_string()
        } else {
            format!("{g}{}", i + 1)
        }
    };
    let mut factors = Vec::new();
    for (i, &e) in key.xexp().iter().enumerate() {
        push_power(&mut factors, name('x', i), e);
    }
    for (i, &e) in key.dexp().iter().enumerate() {
        push_power(&mut factors, name('d', i), e);
    }
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

impl<D: CoeffDomain> fmt::Display for WeylElement<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let dom = self.domain();
        for (n, (key, c)) in self.terms().rev().enumerate() {
            let negative = dom.is_negative(c);
            let magnitude = if negative { dom.neg(c) } else { c.clone() };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if key.is_unit() {
                write!(f, "{magnitude}")?;
            } else if dom.is_one(&magnitude) {
                f.write_str(&format_monomial(key, self.nvars()))?;
            } else {
                write!(f, "{magnitude}*{}", format_monomial(key, self.nvars()))?;
            }
        }
        Ok(())
    }
}

/// Canonical text of `a`.
pub fn print<D: CoeffDomain>(a: &WeylElement<D>) -> String {
    a.to_string()
}
