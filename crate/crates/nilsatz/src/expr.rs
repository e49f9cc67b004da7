//! The shared expression grammar and canonical printing.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' uint)?
//! atom    := 'i' | rational | generator | '(' expr ')'
//! rational:= uint ('/' uint)?
//! ```
//!
//! Generators are `B<n>`/`C<n>` in an enveloping algebra, `P<n>`/`Q<n>` in a
//! Weyl algebra, and `X`/`Y` for bivariate commutative polynomials; indices
//! are 1-based in text. Products are taken in written order (they do not
//! commute). Printing emits normal order, leading monomial first, and
//! `parse(print(x)) == x` holds for every element.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enveloping::{CenterPoly, EnvElement};
use crate::error::Error;
use crate::heisenberg::CommPoly2;
use crate::lie::AlgebraRef;
use crate::scalar::{format_gauss, gauss_re, GaussRational};
use crate::weyl::WeylElement;
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(char, Option<usize>),
    Imag,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
            }
            b'+' => {
                out.push((pos, Token::Plus));
                pos += 1;
            }
            b'-' => {
                out.push((pos, Token::Minus));
                pos += 1;
            }
            b'*' => {
                out.push((pos, Token::Star));
                pos += 1;
            }
            b'^' => {
                out.push((pos, Token::Caret));
                pos += 1;
            }
            b'/' => {
                out.push((pos, Token::Slash));
                pos += 1;
            }
            b'(' => {
                out.push((pos, Token::LParen));
                pos += 1;
            }
            b')' => {
                out.push((pos, Token::RParen));
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let text = &input[start..pos];
                let value = text.parse::<BigInt>().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "invalid integer".to_string(),
                })?;
                out.push((start, Token::Number(value)));
            }
            b'i' => {
                out.push((pos, Token::Imag));
                pos += 1;
            }
            b'A'..=b'Z' => {
                let start = pos;
                let kind = b as char;
                pos += 1;
                let digits_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let index = if pos > digits_start {
                    let idx: usize = input[digits_start..pos].parse().map_err(|_| Error::Parse {
                        pos: digits_start,
                        msg: "invalid generator index".to_string(),
                    })?;
                    Some(idx)
                } else {
                    None
                };
                out.push((start, Token::Ident(kind, index)));
            }
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: alloc::format!("unexpected character '{}'", b as char),
                });
            }
        }
    }
    Ok(out)
}

/// What a generator token may evaluate to.
pub trait ExprContext {
    type Elem: Clone;

    fn scalar(&self, z: GaussRational) -> Self::Elem;
    /// `kind` is the generator letter, `index` the 0-based index (or `None`
    /// for index-free symbols like `X`/`Y`); `pos` is for error reporting.
    fn generator(&self, kind: char, index: Option<usize>, pos: usize) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

struct Parser<'a, C: ExprContext> {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
    ctx: &'a C,
}

impl<'a, C: ExprContext> Parser<'a, C> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.cursor)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        let pos = self.peek().map(|(p, _)| *p).unwrap_or(self.end);
        Err(Error::Parse { pos, msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<C::Elem> {
        let neg_first = matches!(self.peek(), Some((_, Token::Minus)));
        if neg_first {
            self.bump();
        }
        let mut acc = self.term()?;
        if neg_first {
            acc = self.ctx.neg(&acc);
        }
        loop {
            match self.peek() {
                Some((_, Token::Plus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &t);
                }
                Some((_, Token::Minus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &self.ctx.neg(&t));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<C::Elem> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Token::Star))) {
            self.bump();
            let f = self.factor()?;
            acc = self.ctx.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<C::Elem> {
        let base = self.atom()?;
        if matches!(self.peek(), Some((_, Token::Caret))) {
            self.bump();
            let Some((pos, Token::Number(n))) = self.bump() else {
                return self.err("expected exponent after '^'");
            };
            let exp: u32 = n.to_string().parse().map_err(|_| Error::Parse {
                pos,
                msg: "exponent out of range".to_string(),
            })?;
            let mut acc = self.ctx.scalar(GaussRational::one());
            for _ in 0..exp {
                acc = self.ctx.mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<C::Elem> {
        match self.bump() {
            Some((_, Token::Number(n))) => {
                // optional '/ denominator'
                if matches!(self.peek(), Some((_, Token::Slash))) {
                    self.bump();
                    let Some((pos, Token::Number(d))) = self.bump() else {
                        return self.err("expected denominator");
                    };
                    if d.is_zero() {
                        return Err(Error::Parse { pos, msg: "zero denominator".to_string() });
                    }
                    Ok(self.ctx.scalar(gauss_re(BigRational::new(n, d))))
                } else {
                    Ok(self.ctx.scalar(gauss_re(BigRational::from_integer(n))))
                }
            }
            Some((_, Token::Imag)) => Ok(self.ctx.scalar(crate::scalar::gauss_i())),
            Some((pos, Token::Ident(kind, index))) => self.ctx.generator(kind, index.map(|i| i.wrapping_sub(1)), pos),
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Token::RParen)) => Ok(inner),
                    _ => self.err("expected ')'"),
                }
            }
            _ => self.err("expected a factor"),
        }
    }
}

fn run_parser<C: ExprContext>(ctx: &C, input: &str) -> Result<C::Elem> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, cursor: 0, end: input.len(), ctx };
    let value = p.expr()?;
    if p.cursor != p.tokens.len() {
        return p.err("trailing input");
    }
    Ok(value)
}

struct EnvContext<'a>(&'a AlgebraRef);

impl ExprContext for EnvContext<'_> {
    type Elem = EnvElement;

    fn scalar(&self, z: GaussRational) -> EnvElement {
        EnvElement::scalar(self.0, z)
    }
    fn generator(&self, kind: char, index: Option<usize>, pos: usize) -> Result<EnvElement> {
        let bad = |name: String| Error::Parse { pos, msg: alloc::format!("unknown generator {name}") };
        let Some(idx) = index else {
            return Err(bad(kind.to_string()));
        };
        if idx == usize::MAX {
            // wrapped from index 0: generators are 1-based in text
            return Err(bad(alloc::format!("{kind}0")));
        }
        match kind {
            'B' => EnvElement::b_gen(self.0, idx).map_err(|_| bad(alloc::format!("B{}", idx + 1))),
            'C' => EnvElement::c_gen(self.0, idx).map_err(|_| bad(alloc::format!("C{}", idx + 1))),
            _ => Err(bad(alloc::format!("{kind}{}", idx + 1))),
        }
    }
    fn add(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        a + b
    }
    fn mul(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        a * b
    }
    fn neg(&self, a: &EnvElement) -> EnvElement {
        a.neg()
    }
}

/// Parses an expression in the generators `B<n>`, `C<n>` over `alg`.
pub fn parse_env(alg: &AlgebraRef, input: &str) -> Result<EnvElement> {
    run_parser(&EnvContext(alg), input)
}

struct WeylContext(usize);

impl ExprContext for WeylContext {
    type Elem = WeylElement;

    fn scalar(&self, z: GaussRational) -> WeylElement {
        WeylElement::scalar(self.0, z)
    }
    fn generator(&self, kind: char, index: Option<usize>, pos: usize) -> Result<WeylElement> {
        let bad = |name: String| Error::Parse { pos, msg: alloc::format!("unknown generator {name}") };
        let Some(idx) = index else {
            return Err(bad(kind.to_string()));
        };
        if idx == usize::MAX {
            return Err(bad(alloc::format!("{kind}0")));
        }
        match kind {
            'P' => WeylElement::p_gen(self.0, idx).map_err(|_| bad(alloc::format!("P{}", idx + 1))),
            'Q' => WeylElement::q_gen(self.0, idx).map_err(|_| bad(alloc::format!("Q{}", idx + 1))),
            _ => Err(bad(alloc::format!("{kind}{}", idx + 1))),
        }
    }
    fn add(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a + b
    }
    fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a * b
    }
    fn neg(&self, a: &WeylElement) -> WeylElement {
        a.neg()
    }
}

/// Parses an expression in the generators `P<n>`, `Q<n>` of `W_d`.
pub fn parse_weyl(d: usize, input: &str) -> Result<WeylElement> {
    run_parser(&WeylContext(d), input)
}

struct XyContext;

impl ExprContext for XyContext {
    type Elem = CommPoly2;

    fn scalar(&self, z: GaussRational) -> CommPoly2 {
        CommPoly2::scalar(z)
    }
    fn generator(&self, kind: char, index: Option<usize>, pos: usize) -> Result<CommPoly2> {
        if index.is_some() {
            return Err(Error::Parse {
                pos,
                msg: alloc::format!("unknown generator {kind}<n>"),
            });
        }
        match kind {
            'X' => Ok(CommPoly2::x()),
            'Y' => Ok(CommPoly2::y()),
            _ => Err(Error::Parse { pos, msg: alloc::format!("unknown generator {kind}") }),
        }
    }
    fn add(&self, a: &CommPoly2, b: &CommPoly2) -> CommPoly2 {
        a.add(b)
    }
    fn mul(&self, a: &CommPoly2, b: &CommPoly2) -> CommPoly2 {
        a.mul(b)
    }
    fn neg(&self, a: &CommPoly2) -> CommPoly2 {
        a.neg()
    }
}

/// Parses a commutative polynomial in the hermitian symbols `X`, `Y`.
pub fn parse_xy(input: &str) -> Result<CommPoly2> {
    run_parser(&XyContext, input)
}

/// Appends `<kind><idx+1>[^exp]` (times separator handled by caller).
pub(crate) fn push_power(body: &mut String, kind: char, idx0: usize, exp: u32) {
    use core::fmt::Write;
    if exp == 0 {
        return;
    }
    if !body.is_empty() {
        body.push('*');
    }
    let _ = write!(body, "{kind}{}", idx0 + 1);
    if exp > 1 {
        let _ = write!(body, "^{exp}");
    }
}

/// Joins `(monomial, coefficient)` pairs into a canonical sum. Empty
/// monomial bodies stand for the unit.
pub(crate) fn format_terms(parts: &[(String, GaussRational)]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (body, coeff) in parts {
        // Split a leading sign off pure-real/pure-imaginary coefficients.
        let negatable = (coeff.im.is_zero() && coeff.re < BigRational::zero())
            || (coeff.re.is_zero() && coeff.im < BigRational::zero());
        let (neg, mag) = if negatable { (true, -coeff.clone()) } else { (false, coeff.clone()) };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_str = format_gauss(&mag);
        if body.is_empty() {
            out.push_str(&coeff_str);
        } else if coeff_str == "1" {
            out.push_str(body);
        } else {
            out.push_str(&coeff_str);
            out.push('*');
            out.push_str(body);
        }
    }
    out
}

impl core::fmt::Display for EnvElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let alg = self.algebra();
        let mut parts = Vec::new();
        for (mono, coeff) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mut body = String::new();
            for j in 0..alg.beta() {
                push_power(&mut body, 'B', j, mono.b.get(j));
            }
            for m in 0..alg.gamma() {
                push_power(&mut body, 'C', m, mono.c.get(m));
            }
            parts.push((body, coeff.clone()));
        }
        f.write_str(&format_terms(&parts))
    }
}

impl core::fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.as_env().fmt(f)
    }
}

impl core::fmt::Display for WeylElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut parts = Vec::new();
        for (mono, coeff) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mut body = String::new();
            for j in 0..self.dim() {
                push_power(&mut body, 'Q', j, mono.q.get(j));
            }
            for j in 0..self.dim() {
                push_power(&mut body, 'P', j, mono.p.get(j));
            }
            parts.push((body, coeff.clone()));
        }
        f.write_str(&format_terms(&parts))
    }
}

impl core::fmt::Display for CommPoly2 {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut parts = Vec::new();
        for ((ex, ey), coeff) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mut body = String::new();
            if ex > 0 {
                use core::fmt::Write;
                let _ = write!(body, "X");
                if ex > 1 {
                    let _ = write!(body, "^{ex}");
                }
            }
            if ey > 0 {
                use core::fmt::Write;
                if !body.is_empty() {
                    body.push('*');
                }
                let _ = write!(body, "Y");
                if ey > 1 {
                    let _ = write!(body, "^{ey}");
                }
            }
            parts.push((body, coeff.clone()));
        }
        f.write_str(&format_terms(&parts))
    }
}
