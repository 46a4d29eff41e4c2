//! Textual module expressions.
//!
//! Grammar: `I(k)`, `S(k)`, `C(k)`, `P(k)`, `J(k)` take one integer label,
//! `B(k,l)` and `T(k,l)` take a label and a length; sums are written with `+`
//! and multiplicities as `3*P(2)`. Whitespace is free. Errors carry the byte
//! offset of the offending character.

use crate::catalog::AliasSpec;
use crate::error::{Error, Result};

/// A parsed sum of aliases with multiplicities, before normalisation.
pub type AliasSum = Vec<(AliasSpec, u64)>;

pub fn parse_module_spec(text: &str) -> Result<AliasSum> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let sum = parser.sum()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(sum)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn sum(&mut self) -> Result<AliasSum> {
        let mut out = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
                out.push(self.term()?);
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<(AliasSpec, u64)> {
        self.skip_ws();
        let mut mult = 1u64;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let save = self.pos;
            let value = self.integer()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if value <= 0 {
                    self.pos = save;
                    return Err(self.error("multiplicity must be positive"));
                }
                mult = value as u64;
            } else {
                self.pos = save;
                return Err(self.error("expected '*' after a multiplicity"));
            }
        }
        Ok((self.atom()?, mult))
    }

    fn atom(&mut self) -> Result<AliasSpec> {
        self.skip_ws();
        let letter = self.peek().ok_or_else(|| self.error("expected a module"))?;
        self.pos += 1;
        let two_arg = matches!(letter, b'B' | b'T');
        self.skip_ws();
        self.expect(b'(')?;
        let k = self.integer()?;
        let alias = if two_arg {
            self.skip_ws();
            self.expect(b',')?;
            let l = self.integer()?;
            match letter {
                b'B' => AliasSpec::B(k, l),
                _ => AliasSpec::T(k, l),
            }
        } else {
            match letter {
                b'I' => AliasSpec::Irr(k),
                b'S' => AliasSpec::Stan(k),
                b'C' => AliasSpec::Cost(k),
                b'P' => AliasSpec::Proj(k),
                b'J' => AliasSpec::Inj(k),
                _ => {
                    self.pos -= 1;
                    return Err(self.error("expected one of I, S, C, P, J, B, T"));
                }
            }
        };
        self.skip_ws();
        self.expect(b')')?;
        Ok(alias)
    }
}
