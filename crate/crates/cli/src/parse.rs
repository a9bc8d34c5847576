//! Parser for virtual representation expressions such as
//! `2*sigma(1) - sigma(3) + delta`.
//!
//! ```text
//! expr := ['-'] term (('+' | '-') term)* | '0'
//! term := [uint '*'] irr
//! irr  := 'z(' n ')' | 'sigma(' n ')' | 'delta' | 'W(' odd ')' | 'V(' even ')' | 'h(' odd ')'
//! ```
//!
//! `W` and `V` take dimensions (real for `W`, complex for `V`); `z`, `sigma`
//! and `h` take weights. Whitespace is ignored.

use rank1_stems::{GroupId, Irreducible, StemsError, VirtualRep};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at position {pos}: {source}")]
    Rep { pos: usize, source: StemsError },
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax { pos, msg: msg.into() })
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return syntax(start, "expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().or_else(|_| syntax(start, "number too large"))
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}

fn irreducible(cur: &mut Cursor) -> Result<Irreducible, ParseError> {
    let start = cur.pos;
    let name = cur.word();
    if name == "delta" {
        return Ok(Irreducible::Delta);
    }
    let make: fn(u64) -> Irreducible = match name {
        "z" => Irreducible::Z,
        "sigma" => Irreducible::Sigma,
        "W" => Irreducible::W,
        "V" => Irreducible::V,
        "h" => Irreducible::H,
        "" => return syntax(start, "expected an irreducible"),
        other => return syntax(start, format!("unknown irreducible '{other}'")),
    };
    cur.expect(b'(')?;
    let arg_pos = cur.pos;
    let n = cur.uint()?;
    cur.expect(b')')?;
    let trivial = match name {
        "z" | "sigma" => n == 0,
        "W" => n == 1,
        _ => false,
    };
    if trivial {
        return Err(ParseError::Rep { pos: start, source: StemsError::TrivialRequested });
    }
    let parity_ok = match name {
        "W" | "h" => n % 2 == 1,
        "V" => n % 2 == 0 && n > 0,
        _ => true,
    };
    if !parity_ok {
        let want = if name == "V" { "a positive even" } else { "an odd" };
        return syntax(arg_pos, format!("{name} takes {want} dimension"));
    }
    Ok(make(n))
}

pub fn parse_rep(text: &str, group: GroupId) -> Result<VirtualRep, ParseError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    if text.trim() == "0" {
        return Ok(VirtualRep::zero(group));
    }
    let mut rep = VirtualRep::zero(group);
    let mut sign = if cur.eat(b'-') { -1 } else { 1 };
    loop {
        let coeff = if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let n = cur.uint()?;
            cur.expect(b'*')?;
            i64::try_from(n).or_else(|_| syntax(cur.pos, "coefficient too large"))?
        } else {
            1
        };
        cur.skip_ws();
        let pos = cur.pos;
        let irr = irreducible(&mut cur)?;
        rep.add_term(sign * coeff, irr).map_err(|source| ParseError::Rep { pos, source })?;
        sign = match cur.peek() {
            None => break,
            Some(b'+') => 1,
            Some(b'-') => -1,
            Some(_) => return syntax(cur.pos, "expected '+' or '-'"),
        };
        cur.pos += 1;
    }
    Ok(rep)
}
