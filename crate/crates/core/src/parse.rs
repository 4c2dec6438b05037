//! Surface syntax for exact elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*          juxtaposition is a product
//! factor := '-' factor | atom '\''*         postfix ' is the adjoint
//! atom   := 's'<k> | 'I' | 'i' | <int> ['/' <int>] | '(' expr ')'
//! ```
//!
//! Scalars are ordinary factors, so `3/2*I`, `3/2 I` and `I 3/2` agree.
//! Rendering an element with `Display` produces text this parser accepts.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::{imaginary_unit, Coefficient};
use crate::word::{AlgebraTag, Monomial};

pub fn parse(tag: AlgebraTag, text: &str) -> Result<Element<Coefficient>> {
    let mut p = Parser { tag, src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err(&format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    tag: AlgebraTag,
    src: &'a [u8],
    pos: usize,
}

type E = Element<Coefficient>;

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<E> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<E> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.multiply(&self.factor()?)?;
                }
                Some(c) if starts_atom(c) => {
                    acc = acc.multiply(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<E> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let mut a = self.atom()?;
        while self.peek() == Some(b'\'') {
            self.pos += 1;
            a = a.adjoint();
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<E> {
        let start = self.pos;
        match self.peek() {
            Some(b's') => {
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() {
                    return Err(self.err("expected generator index after `s`"));
                }
                let k: u32 = digits.parse().map_err(|_| Error::Syntax { pos: start, msg: "generator index too large".into() })?;
                if !self.tag.contains_index(k) {
                    return Err(Error::IndexOutOfRange { index: k, tag: self.tag });
                }
                Ok(E::monomial(self.tag, Monomial::new(vec![k], vec![]), Coefficient::one())?)
            }
            Some(b'I') => {
                self.pos += 1;
                Ok(E::one(self.tag))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(E::one(self.tag).scale(&imaginary_unit()))
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                    let den: BigInt = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    q /= BigRational::from_integer(den);
                }
                Ok(E::one(self.tag).scale(&Complex::new(q, BigRational::zero())))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => Err(self.err(&format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

fn starts_atom(c: u8) -> bool {
    matches!(c, b's' | b'I' | b'i' | b'(') || c.is_ascii_digit()
}
