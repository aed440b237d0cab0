//! Parser for mixed product expressions such as `I2*J1 + I3`.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := 'I' uint | 'J' uint
//! ```
//!
//! Whitespace between tokens is ignored. A term holds at most one `I` and
//! one `J` factor; a missing factor stands for degree 0.

use std::fmt;

use mixprod::{GroundSet, MixedSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Syntax {
        offset: usize,
        expected: &'static str,
    },
    DegreeOutOfRange {
        offset: usize,
        block: char,
        degree: String,
        max: u32,
    },
    RepeatedBlock {
        offset: usize,
        block: char,
    },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { offset, expected } => {
                write!(f, "syntax error at byte {offset}: expected {expected}")
            }
            ExprError::DegreeOutOfRange {
                offset,
                block,
                degree,
                max,
            } => write!(
                f,
                "degree out of range at byte {offset}: {block}{degree} needs a degree <= {max}"
            ),
            ExprError::RepeatedBlock { offset, block } => {
                write!(
                    f,
                    "repeated block at byte {offset}: a term has at most one {block} factor"
                )
            }
        }
    }
}

impl std::error::Error for ExprError {}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    ground: GroundSet,
    /// First out-of-range degree; reported only if the text parses.
    range_error: Option<ExprError>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn term(&mut self) -> Result<(u32, u32), ExprError> {
        let (mut q, mut r) = (None, None);
        loop {
            let start = {
                self.skip_ws();
                self.pos
            };
            let (block, max) = match self.peek() {
                Some('I') => ('I', self.ground.n()),
                Some('J') => ('J', self.ground.m()),
                _ => {
                    return Err(ExprError::Syntax {
                        offset: start,
                        expected: "I or J",
                    })
                }
            };
            self.pos += 1;
            let slot = if block == 'I' { &mut q } else { &mut r };
            if slot.is_some() {
                return Err(ExprError::RepeatedBlock {
                    offset: start,
                    block,
                });
            }
            self.skip_ws();
            let digits_start = self.pos;
            let digits = self.text[self.pos..]
                .bytes()
                .take_while(u8::is_ascii_digit)
                .count();
            if digits == 0 {
                return Err(ExprError::Syntax {
                    offset: digits_start,
                    expected: "a degree",
                });
            }
            self.pos += digits;
            let literal = &self.text[digits_start..self.pos];
            let out_of_range = || ExprError::DegreeOutOfRange {
                offset: start,
                block,
                degree: literal.to_string(),
                max,
            };
            let degree = match literal.parse::<u32>() {
                Ok(d) if d <= max => d,
                _ => {
                    self.range_error.get_or_insert_with(out_of_range);
                    0
                }
            };
            *slot = Some(degree);
            if !self.eat('*') {
                return Ok((q.unwrap_or(0), r.unwrap_or(0)));
            }
        }
    }

    fn expr(&mut self) -> Result<Vec<(u32, u32)>, ExprError> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        self.skip_ws();
        if self.pos < self.text.len() {
            return Err(ExprError::Syntax {
                offset: self.pos,
                expected: "'+', '*' or end of input",
            });
        }
        match self.range_error.take() {
            Some(e) => Err(e),
            None => Ok(terms),
        }
    }
}

/// Parses `text` into a normalized [`MixedSpec`] on `ground`.
pub fn parse_ideal_expr(text: &str, ground: GroundSet) -> Result<MixedSpec, ExprError> {
    let mut parser = Parser {
        text,
        pos: 0,
        ground,
        range_error: None,
    };
    let terms = parser.expr()?;
    Ok(MixedSpec::new(ground, terms))
}
