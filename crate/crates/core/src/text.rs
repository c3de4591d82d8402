//! Text grammar for polynomials and operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'D' | '(' expr ')'
//! ```
//!
//! `D` is the operator `∂`. Coefficients must stand to the left of `D`: a
//! product whose left factor contains `D` and whose right factor has a
//! non-constant coefficient (such as `D*x`) is rejected rather than
//! silently commuted. Division is only by `D`-free expressions.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::orealg::{OreOperator, OreRing};
use crate::polyring::{Poly, RatFun, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    D,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, column);
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            let n: BigInt = digits.parse().expect("ascii digits");
            out.push(Token {
                tok: Tok::Int(n),
                line: l,
                column: c,
            });
            continue;
        }
        let tok = match ch {
            'x' => Tok::X,
            'D' => Tok::D,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(l, c, format!("unknown symbol `{other}`"))),
        };
        chars.next();
        column += 1;
        out.push(Token {
            tok,
            line: l,
            column: c,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ring: OreRing,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<OreOperator> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OreOperator> {
        let mut acc = self.unary()?;
        loop {
            let t = self.peek().clone();
            match t.tok {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.multiply(&acc, &rhs, &t)?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.order0() > 0 {
                        return Err(err(t.line, t.column, "division by an expression containing D"));
                    }
                    if rhs.is_zero() {
                        return Err(err(t.line, t.column, "division by zero"));
                    }
                    let divisor = rhs.coeff(0);
                    if acc.order0() > 0 && !divisor.is_constant() {
                        return Err(err(
                            t.line,
                            t.column,
                            "ambiguous division of an expression containing D; write the coefficient as a fraction",
                        ));
                    }
                    acc = acc.scale_left(&divisor.recip()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn multiply(&self, a: &OreOperator, b: &OreOperator, at: &Token) -> Result<OreOperator> {
        if a.order0() > 0 && !b.coeffs().iter().all(RatFun::is_constant) {
            return Err(err(
                at.line,
                at.column,
                "coefficient to the right of D; expand the product with coefficients on the left",
            ));
        }
        a.op_mul(b)
    }

    fn unary(&mut self) -> Result<OreOperator> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<OreOperator> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let t = self.bump();
        let Tok::Int(n) = t.tok else {
            return Err(err(t.line, t.column, "expected a non-negative integer exponent"));
        };
        let n: u32 = n
            .try_into()
            .map_err(|_| err(t.line, t.column, "exponent too large"))?;
        let mut acc = OreOperator::one(self.ring);
        for _ in 0..n {
            acc = self.multiply(&acc, &base, &caret)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<OreOperator> {
        let t = self.bump();
        let ring = self.ring;
        match t.tok {
            Tok::Int(n) => Ok(OreOperator::constant(
                ring,
                RatFun::constant(Rational::from_integer(n)),
            )),
            Tok::X => Ok(OreOperator::from_polys(ring, vec![Poly::x()])),
            Tok::D => Ok(OreOperator::d(ring)),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(err(close.line, close.column, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(err(t.line, t.column, "unexpected end of input")),
            other => Err(err(t.line, t.column, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "number",
        Tok::X => "`x`",
        Tok::D => "`D`",
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        Tok::End => "end of input",
    }
}

/// Parses an operator over `ring`.
pub fn parse_operator(src: &str, ring: OreRing) -> Result<OreOperator> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        ring,
    };
    let op = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(err(t.line, t.column, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(op)
}

/// Parses a polynomial in `x`; `D` and non-polynomial results are rejected.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let op = parse_operator(src, OreRing::Shift)?;
    if op.order0() > 0 {
        return Err(err(1, 1, "expected a polynomial, found `D`"));
    }
    op.coeff(0)
        .as_poly()
        .cloned()
        .ok_or_else(|| err(1, 1, "expected a polynomial, found a fraction"))
}

/// Canonical operator text; [`parse_operator`] reads it back unchanged.
pub fn format_operator(op: &OreOperator) -> String {
    op.to_string()
}
