//! Text syntax for words.
//!
//! ```text
//! word    := factor ( ('*' | whitespace) factor )*
//! factor  := atom postfix*
//! atom    := symbol | '1' | '(' word ')'
//! postfix := '^' integer | '\''
//! symbol  := a1 a2 ... | b | y | e | f | u | c | b0 b1 ... | B0 B1 ... | r | R
//!            optionally followed by a coset tag `_y` or `_c<k>`
//! ```
//!
//! `u` is the atomic generator `y^2`, `B<i>` is `bbar_i`, `r` and `R` are
//! `rho` and `rhobar`. A trailing `'` inverts, `^n` raises to the integer
//! power `n` (negative allowed); powers are expanded while parsing. `1`
//! denotes the identity.

use crate::error::Error;
use crate::symbol::GeneratorSymbol;
use crate::word::{invert_letters, Letter, Word};

/// Parse and freely reduce.
pub fn parse_word(input: &str) -> Result<Word, Error> {
    let letters = parse_letters(input)?;
    Ok(Word::reduce(letters))
}

/// Parse without free reduction.
pub fn parse_letters(input: &str) -> Result<Vec<Letter>, Error> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let out = p.word()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace() || c == b'*') {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<Vec<Letter>, Error> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') => return Ok(out),
                _ => out.extend(self.factor()?),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<Letter>, Error> {
        let mut base = self.atom()?;
        loop {
            match self.peek() {
                Some(b'\'') => {
                    self.pos += 1;
                    base = invert_letters(&base);
                }
                Some(b'^') => {
                    self.pos += 1;
                    let n = self.integer()?;
                    let unit = if n < 0 { invert_letters(&base) } else { base };
                    let mut v = Vec::with_capacity(unit.len() * n.unsigned_abs() as usize);
                    for _ in 0..n.unsigned_abs() {
                        v.extend_from_slice(&unit);
                    }
                    base = v;
                }
                _ => return Ok(base),
            }
        }
    }

    fn integer(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let n: i64 = text.parse().map_err(|_| Error::Parse {
            offset: start,
            message: "expected integer exponent".into(),
        })?;
        if n.unsigned_abs() > 100_000 {
            return Err(Error::Parse {
                offset: start,
                message: "exponent too large".into(),
            });
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<Vec<Letter>, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                let sym: GeneratorSymbol = text.parse().map_err(|_| Error::Parse {
                    offset: start,
                    message: format!("unknown generator {text:?}"),
                })?;
                Ok(vec![Letter::pos(sym)])
            }
            Some(_) => Err(self.err("expected generator, '1' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Convenience for tests and builders: parse, panicking on malformed input.
pub fn w(input: &str) -> Word {
    match parse_word(input) {
        Ok(w) => w,
        Err(e) => panic!("bad word {input:?}: {e}"),
    }
}

/// Raw letters, panicking on malformed input.
pub fn raw(input: &str) -> Vec<Letter> {
    match parse_letters(input) {
        Ok(v) => v,
        Err(e) => panic!("bad word {input:?}: {e}"),
    }
}
