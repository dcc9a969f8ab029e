//! Surface syntax for elements of U_{g,h}.
//!
//! ```text
//! expr    := unary (('+' | '-') unary)*
//! unary   := '-' unary | product
//! product := power (('*' | '/' | juxtaposition) power)*
//! power   := primary ('^' '-'? integer)?
//! primary := integer | 'q' | 'E' | 'F' | 'K' | 'g' | 'h' | '(' expr ')'
//! ```
//!
//! Products keep their written order. Division is only allowed by scalars,
//! and only `K`, `g`, `h` (or scalars) may carry negative exponents.

use num_bigint::BigInt;

use crate::error::{Error, ParseError};
use crate::field::{RatFunc, Rational};
use crate::pbw::{AlgebraElement, Generator};

/// A generator symbol as written: inverses are spelled with exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    E,
    F,
    K,
    G,
    H,
}

impl Symbol {
    fn from_char(c: char) -> Option<Symbol> {
        match c {
            'E' => Some(Symbol::E),
            'F' => Some(Symbol::F),
            'K' => Some(Symbol::K),
            'g' => Some(Symbol::G),
            'h' => Some(Symbol::H),
            _ => None,
        }
    }

    fn generator(self) -> Generator {
        match self {
            Symbol::E => Generator::E,
            Symbol::F => Generator::F,
            Symbol::K => Generator::K,
            Symbol::G => Generator::G,
            Symbol::H => Generator::H,
        }
    }

    fn invertible(self) -> bool {
        !matches!(self, Symbol::E | Symbol::F)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// Integer literal or `q`.
    Scalar(RatFunc),
    Generator(Symbol),
    Sum(Vec<Expression>),
    Neg(Box<Expression>),
    Product(Vec<Expression>),
    Quotient(Box<Expression>, Box<Expression>),
    Power(Box<Expression>, i64),
}

/// Parsed expression with the byte offset where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub kind: ExprKind,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().unwrap();
        let start = i;
        i += c.len_utf8();
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(src[start..i].parse().expect("digits"))
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_alphabetic() => Tok::Ident(c),
            c => return Err(ParseError::new(start, format!("unexpected character `{c}`"))),
        };
        out.push((tok, start));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.src.len())
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expression, ParseError> {
        let offset = self.offset();
        let mut terms = vec![self.unary()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.unary()?);
                }
                Some(Tok::Minus) => {
                    let o = self.offset();
                    self.bump();
                    let t = self.unary()?;
                    terms.push(Expression { kind: ExprKind::Neg(Box::new(t)), offset: o });
                }
                _ => break,
            }
        }
        if terms.len() == 1 {
            Ok(terms.pop().unwrap())
        } else {
            Ok(Expression { kind: ExprKind::Sum(terms), offset })
        }
    }

    fn unary(&mut self) -> Result<Expression, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            let o = self.offset();
            self.bump();
            let inner = self.unary()?;
            return Ok(Expression { kind: ExprKind::Neg(Box::new(inner)), offset: o });
        }
        self.product()
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn product(&mut self) -> Result<Expression, ParseError> {
        let offset = self.offset();
        let mut acc = self.power()?;
        let mut factors: Vec<Expression> = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    factors.push(std::mem::replace(&mut acc, self.power()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.power()?;
                    factors.push(acc);
                    let lhs = collapse(std::mem::take(&mut factors), offset);
                    acc = Expression { kind: ExprKind::Quotient(Box::new(lhs), Box::new(rhs)), offset };
                }
                _ if self.starts_primary() => {
                    factors.push(std::mem::replace(&mut acc, self.power()?));
                }
                _ => break,
            }
        }
        factors.push(acc);
        Ok(collapse(factors, offset))
    }

    fn power(&mut self) -> Result<Expression, ParseError> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let exp_offset = self.offset();
            let negative = if let Some(Tok::Minus) = self.peek() {
                self.bump();
                true
            } else {
                false
            };
            let n = match self.bump() {
                Some((Tok::Int(n), o)) => {
                    i64::try_from(&n).map_err(|_| ParseError::new(o, "exponent out of range"))?
                }
                _ => return Err(ParseError::new(exp_offset, "expected an integer exponent")),
            };
            let n = if negative { -n } else { n };
            if n < 0 {
                if let ExprKind::Generator(s) = base.kind {
                    if !s.invertible() {
                        return Err(ParseError::new(exp_offset, "E, F are not invertible"));
                    }
                }
            }
            let offset = base.offset;
            return Ok(Expression { kind: ExprKind::Power(Box::new(base), n), offset });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expression, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some((Tok::Int(n), _)) => {
                Ok(Expression { kind: ExprKind::Scalar(RatFunc::from_rational(Rational::from_integer(n))), offset })
            }
            Some((Tok::Ident('q'), _)) => Ok(Expression { kind: ExprKind::Scalar(RatFunc::q()), offset }),
            Some((Tok::Ident(c), _)) => match Symbol::from_char(c) {
                Some(s) => Ok(Expression { kind: ExprKind::Generator(s), offset }),
                None => Err(ParseError::new(offset, format!("unknown symbol `{c}`"))),
            },
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    Some((_, o)) => Err(ParseError::new(o, "expected `)`")),
                    None => Err(ParseError::new(self.src.len(), "unclosed `(`")),
                }
            }
            Some((t, o)) => Err(ParseError::new(o, format!("unexpected token {}", describe(&t)))),
            None => Err(ParseError::new(self.src.len(), "unexpected end of input")),
        }
    }
}

fn collapse(mut factors: Vec<Expression>, offset: usize) -> Expression {
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        Expression { kind: ExprKind::Product(factors), offset }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "integer",
        Tok::Ident(_) => "symbol",
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
    }
}

/// Parse an expression.
pub fn parse(text: &str) -> Result<Expression, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, src: text };
    if p.toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        let (t, o) = &p.toks[p.pos];
        return Err(ParseError::new(*o, format!("unexpected token {}", describe(t))));
    }
    Ok(e)
}

impl Expression {
    /// Evaluate to PBW normal form.
    pub fn to_element(&self) -> Result<AlgebraElement, Error> {
        Ok(match &self.kind {
            ExprKind::Scalar(c) => AlgebraElement::scalar(c.clone()),
            ExprKind::Generator(s) => AlgebraElement::generator(s.generator()),
            ExprKind::Sum(ts) => {
                let mut acc = AlgebraElement::zero();
                for t in ts {
                    acc = &acc + &t.to_element()?;
                }
                acc
            }
            ExprKind::Neg(t) => -&t.to_element()?,
            ExprKind::Product(fs) => {
                let mut acc = AlgebraElement::one();
                for f in fs {
                    acc = acc.multiply(&f.to_element()?);
                }
                acc
            }
            ExprKind::Quotient(a, b) => {
                let den = b.to_element()?;
                let Some(d) = den.as_scalar() else {
                    return Err(ParseError::new(b.offset, "division by a non-scalar").into());
                };
                if d.is_zero() {
                    return Err(ParseError::new(b.offset, "division by zero").into());
                }
                a.to_element()?.scale(&d.inv())
            }
            ExprKind::Power(base, n) => {
                let b = base.to_element()?;
                if *n >= 0 {
                    let n = u32::try_from(*n).map_err(|_| ParseError::new(self.offset, "exponent out of range"))?;
                    if let Some(c) = b.as_scalar() {
                        AlgebraElement::scalar(c.pow(n as i64))
                    } else {
                        b.pow(n)
                    }
                } else {
                    invert(&b, base.offset)?.pow(n.unsigned_abs() as u32)
                }
            }
        })
    }
}

/// Inverse of a nonzero scalar or of a single torus monomial.
fn invert(b: &AlgebraElement, offset: usize) -> Result<AlgebraElement, Error> {
    if let Some(c) = b.as_scalar() {
        if c.is_zero() {
            return Err(ParseError::new(offset, "division by zero").into());
        }
        return Ok(AlgebraElement::scalar(c.inv()));
    }
    if b.len() == 1 {
        let (m, c) = b.terms().next().unwrap();
        if m.is_torus() {
            let inv = crate::pbw::PbwMonomial::torus(-m.k, -m.g, -m.h);
            return Ok(AlgebraElement::term(inv, c.inv()));
        }
    }
    Err(ParseError::new(offset, "only scalars and monomials in K, g, h can be inverted").into())
}

/// Parse and evaluate an element.
pub fn parse_element(text: &str) -> Result<AlgebraElement, Error> {
    parse(text)?.to_element()
}

/// Parse a scalar in ℚ(q).
pub fn parse_scalar(text: &str) -> Result<RatFunc, Error> {
    let e = parse(text)?;
    let a = e.to_element()?;
    a.as_scalar().ok_or_else(|| ParseError::new(0, "expected a scalar in q").into())
}
