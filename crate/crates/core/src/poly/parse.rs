//! Text grammar for polynomials.
//!
//! ```text
//! expr  := ['+' | '-'] term (('+' | '-') term)*
//! term  := power (('*' | '/') power)*        divisor must be a nonzero constant
//! power := atom ['^' integer]
//! atom  := integer | 'x' index | '(' expr ')'
//! ```
//! Juxtaposition (`2x0`, `x0 x1`) is rejected.

use num_bigint::BigInt;

use super::{Poly, Ring};
use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Var(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{}`", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.checked_mul(&self.power()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.here();
                    let d = self.power()?;
                    if !d.is_constant() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "divisor must be a constant".into(),
                        });
                    }
                    let inv = self.ring.field().inv(&d.constant_term())?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    return Err(Error::Parse {
                        pos: self.here(),
                        msg: "implicit multiplication is not allowed; use `*`".into(),
                    })
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let e: u32 = n.try_into().map_err(|_| Error::ExponentOverflow)?;
                if self.peek() == Some(&Tok::Caret) {
                    return Err(Error::Parse {
                        pos: self.here(),
                        msg: "chained exponents are ambiguous; use parentheses".into(),
                    });
                }
                base.pow(e)
            }
            Some(Tok::Minus) => Err(Error::NegativeExponent { pos: at }),
            _ => Err(Error::Parse {
                pos: at,
                msg: "expected a nonnegative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(self.ring.constant(self.ring.field().from_bigint(&n))),
            Some(Tok::Var(name)) => {
                let idx = name
                    .strip_prefix('x')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .filter(|d| d.len() == 1 || !d.starts_with('0'))
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i < self.ring.nvars());
                match idx {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::UnknownVariable { name, pos: at }),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse {
                        pos: self.toks.get(self.pos - 1).map(|(_, p)| *p).unwrap_or(self.end),
                        msg: "expected `)`".into(),
                    }),
                }
            }
            Some(_) => Err(Error::Parse {
                pos: at,
                msg: "expected a number, variable or `(`".into(),
            }),
            None => Err(Error::Parse {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

pub(super) fn parse(ring: &Ring, text: &str) -> Result<Poly> {
    let toks = lex(text)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::Parse {
            pos: p.here(),
            msg: "unexpected token".into(),
        });
    }
    Ok(out)
}

fn coeff_text(c: &Scalar) -> String {
    match c {
        Scalar::Ext(_) => format!("({c})"),
        _ => c.to_string(),
    }
}

pub(super) fn format_poly(f: &Poly) -> String {
    format_poly_named(f, &|i| format!("x{i}"))
}

pub(super) fn format_poly_named(f: &Poly, name: &dyn Fn(usize) -> String) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let field = f.field();
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let negative = c.is_negative_rational();
        let abs = if negative { field.neg(c) } else { c.clone() };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&coeff_text(&abs));
        } else if field.is_one(&abs) {
            out.push_str(&m.text_with(name));
        } else {
            out.push_str(&coeff_text(&abs));
            out.push('*');
            out.push_str(&m.text_with(name));
        }
    }
    out
}
