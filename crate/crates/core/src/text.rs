//! Small character cursor shared by the literal parsers (compositions,
//! matrices, morphism words, algebra elements).

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn offset(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    /// Consumes `token` (after whitespace) if it is next.
    pub(crate) fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(c) => format!("'{c}'"),
                None => "end of input".to_string(),
            };
            Err(self.error(format!("expected '{token}', found {found}")))
        }
    }

    pub(crate) fn unsigned(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits: usize = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .map(|c| c.len_utf8())
            .sum();
        if digits == 0 {
            return Err(self.error("expected a non-negative integer".to_string()));
        }
        let text = &self.rest()[..digits];
        let value = text
            .parse::<u64>()
            .map_err(|_| self.error(format!("integer '{text}' is too large")))?;
        self.pos += digits;
        Ok(value)
    }

    pub(crate) fn u32(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.unsigned()?;
        u32::try_from(v).map_err(|_| error_at(self.src, start, format!("integer {v} is too large")))
    }

    /// Comma-separated list of `u32` between `open` and `close`.
    pub(crate) fn u32_list(&mut self, open: &str, close: &str) -> Result<Vec<u32>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.u32()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    pub(crate) fn error(&self, message: String) -> Error {
        error_at(self.src, self.pos, message)
    }

    pub(crate) fn error_at_offset(&self, offset: usize, message: String) -> Error {
        error_at(self.src, offset, message)
    }
}

/// Builds a syntax error carrying the 1-based line and column of `offset`.
pub(crate) fn error_at(src: &str, offset: usize, message: String) -> Error {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Syntax {
        line,
        column,
        message,
    }
}
