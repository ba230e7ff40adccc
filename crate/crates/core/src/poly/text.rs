//! Text syntax: a `+`-separated sum of terms `[coeff][*][x[^exp]]`.
//! Whitespace is ignored. `0` is the zero polynomial.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Coeff, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `pos` is a 0-based byte offset into the input.
    #[error("syntax error at column {}: {msg}", pos + 1)]
    Syntax { pos: usize, msg: String },
    #[error("negative value at column {}", pos + 1)]
    NegativeValue { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::NegativeValue { pos } => *pos,
        }
    }

    /// The message without its position.
    pub fn reason(&self) -> &str {
        match self {
            ParseError::Syntax { msg, .. } => msg,
            ParseError::NegativeValue { .. } => "negative value",
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn syntax<T>(&self, at: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: at, msg: msg.into() })
    }

    /// Digits, possibly interleaved with whitespace.
    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let mut out = String::new();
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b.is_ascii_digit() {
                out.push(b as char);
            } else if !b.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        if out.is_empty() {
            self.pos = start;
            None
        } else {
            Some((start, out))
        }
    }
}

fn parse_number<T: FromStr>(cur: &Cursor<'_>, at: usize, digits: &str, what: &str) -> Result<T, ParseError> {
    digits
        .parse()
        .or_else(|_| cur.syntax(at, format!("{what} `{digits}` out of range")))
}

pub(super) fn parse<C: Coeff>(text: &str) -> Result<Poly<C>, ParseError> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let mut poly = Poly::zero();
    if cur.peek().is_none() {
        return cur.syntax(cur.pos, "empty polynomial");
    }
    loop {
        let term_start = cur.pos;
        match cur.peek() {
            Some(b'-') => return Err(ParseError::NegativeValue { pos: cur.pos }),
            None => return cur.syntax(cur.pos, "expected a term"),
            _ => {}
        }
        let coeff = match cur.digits() {
            Some((at, d)) => Some(parse_number::<C>(&cur, at, &d, "coefficient")?),
            None => None,
        };
        if cur.peek() == Some(b'*') {
            if coeff.is_none() {
                return cur.syntax(cur.pos, "`*` without a coefficient");
            }
            cur.pos += 1;
            if cur.peek() != Some(b'x') {
                return cur.syntax(cur.pos, "expected `x` after `*`");
            }
        }
        let exp = if cur.peek() == Some(b'x') {
            cur.pos += 1;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                if cur.peek() == Some(b'-') {
                    return Err(ParseError::NegativeValue { pos: cur.pos });
                }
                match cur.digits() {
                    Some((at, d)) => parse_number::<u64>(&cur, at, &d, "exponent")?,
                    None => return cur.syntax(cur.pos, "expected an exponent after `^`"),
                }
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            cur.skip_ws();
            return cur.syntax(cur.pos.max(term_start), "expected a coefficient or `x`");
        };
        poly.add_term(exp, coeff.unwrap_or_else(C::one));
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(b'-') => return Err(ParseError::NegativeValue { pos: cur.pos }),
            Some(_) => return cur.syntax(cur.pos, "expected `+` or end of input"),
        }
    }
    Ok(poly)
}

impl<C: Coeff> FromStr for Poly<C> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms_desc().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            let unit = c.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}
