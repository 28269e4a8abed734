//! Text form of multivectors: a signed sum of terms, each a real
//! coefficient, a blade, or `real*blade`. Blades are `e` followed by strictly
//! ascending generator digits, hex past 9 (`e0`, `e13`, `e0123`, `e0d`).
//! Whitespace is insignificant everywhere between tokens.
//!
//! Numbers use full f64 syntax including exponents, scanned greedily: `2.5e3`
//! is the scalar 2500, so a coefficient on a blade always needs the explicit
//! star, as in `2.5*e3`. The formatter only ever emits the starred form and
//! plain decimal coefficients, and `parse(format(x)) == x` bit for bit.

use std::fmt;

use thiserror::Error;

use super::blade::{char_index, index_char};
use super::{Algebra, Blade, Multivector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {found:?} at byte {pos}")]
    UnexpectedChar { pos: usize, found: char },
    #[error("malformed number at byte {pos}")]
    MalformedNumber { pos: usize },
    #[error("blade index {index} out of range for an algebra of dimension {dim}")]
    UnknownIndex { index: usize, dim: u32 },
    #[error("blade repeats index {index}")]
    DuplicateIndex { index: usize },
    #[error("blade indices must be ascending, found {index} after {prev}")]
    NonAscending { prev: usize, index: usize },
    #[error("blade token `e` needs at least one index digit at byte {pos}")]
    EmptyBlade { pos: usize },
}

/// Parses the text form into a multivector of the given algebra.
pub fn parse_multivector(text: &str, algebra: Algebra) -> Result<Multivector, ParseError> {
    Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        algebra,
    }
    .parse()
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    algebra: Algebra,
}

impl Parser {
    fn parse(mut self) -> Result<Multivector, ParseError> {
        let mut out = Multivector::zero(self.algebra);
        self.skip_ws();
        let mut sign = match self.peek() {
            Some('+') => {
                self.bump();
                1.0
            }
            Some('-') => {
                self.bump();
                -1.0
            }
            Some(_) => 1.0,
            None => return Err(ParseError::UnexpectedEnd),
        };
        loop {
            self.skip_ws();
            let (blade, coeff) = self.term()?;
            out = out.add(&Multivector::from_terms(
                self.algebra,
                [(blade, sign * coeff)],
            ));
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => {
                    self.bump();
                    sign = 1.0;
                }
                Some('-') => {
                    self.bump();
                    sign = -1.0;
                }
                Some(found) => {
                    return Err(ParseError::UnexpectedChar {
                        pos: self.byte_pos(),
                        found,
                    })
                }
            }
        }
    }

    fn term(&mut self) -> Result<(Blade, f64), ParseError> {
        match self.peek() {
            Some('e') => {
                let blade = self.blade()?;
                Ok((blade, 1.0))
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let coeff = self.number()?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.bump();
                    self.skip_ws();
                    let blade = self.blade()?;
                    Ok((blade, coeff))
                } else {
                    Ok((Blade::SCALAR, coeff))
                }
            }
            Some(found) => Err(ParseError::UnexpectedChar {
                pos: self.byte_pos(),
                found,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.byte_pos();
        let begin = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some('.') {
            self.bump();
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
        }
        // exponent only when an `e` is actually followed by digits, so a
        // trailing blade token like `2*e1` is left alone
        if matches!(self.peek(), Some('e') | Some('E')) {
            let mut ahead = self.pos + 1;
            if matches!(self.chars.get(ahead), Some((_, '+')) | Some((_, '-'))) {
                ahead += 1;
            }
            if matches!(self.chars.get(ahead), Some((_, c)) if c.is_ascii_digit()) {
                self.bump();
                if matches!(self.peek(), Some('+') | Some('-')) {
                    self.bump();
                }
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.bump();
                }
            }
        }
        let text: String = self.chars[begin..self.pos].iter().map(|&(_, c)| c).collect();
        let value: f64 = text
            .parse()
            .map_err(|_| ParseError::MalformedNumber { pos: start })?;
        if !value.is_finite() {
            return Err(ParseError::MalformedNumber { pos: start });
        }
        Ok(value)
    }

    fn blade(&mut self) -> Result<Blade, ParseError> {
        let e_pos = self.byte_pos();
        match self.peek() {
            Some('e') => self.bump(),
            Some(found) => return Err(ParseError::UnexpectedChar { pos: e_pos, found }),
            None => return Err(ParseError::UnexpectedEnd),
        }
        let mut indices: Vec<usize> = Vec::new();
        while let Some(c) = self.peek() {
            let Some(index) = char_index(c) else { break };
            self.bump();
            if index >= self.algebra.dim() as usize {
                return Err(ParseError::UnknownIndex {
                    index,
                    dim: self.algebra.dim(),
                });
            }
            if let Some(&prev) = indices.last() {
                if index == prev {
                    return Err(ParseError::DuplicateIndex { index });
                }
                if index < prev {
                    return Err(ParseError::NonAscending { prev, index });
                }
            }
            indices.push(index);
        }
        if indices.is_empty() {
            return Err(ParseError::EmptyBlade { pos: e_pos });
        }
        Ok(Blade::from_indices(&indices).expect("validated ascending"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i).unwrap_or_else(|| {
            self.chars.last().map(|&(i, c)| i + c.len_utf8()).unwrap_or(0)
        })
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }
}

/// Canonical text form: terms ordered by grade then index set, every blade
/// coefficient spelled out with a star. `Display` uses this.
pub(crate) fn format_multivector(mv: &Multivector) -> String {
    if mv.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(Blade, f64)> = mv.terms().collect();
    terms.sort_by_key(|(b, _)| (b.grade(), b.mask()));
    let mut out = String::new();
    for (n, (blade, coeff)) in terms.into_iter().enumerate() {
        let negative = coeff < 0.0;
        if n == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = coeff.abs();
        if blade == Blade::SCALAR {
            out.push_str(&magnitude.to_string());
        } else {
            out.push_str(&magnitude.to_string());
            out.push('*');
            out.push('e');
            for i in blade.indices() {
                out.push(index_char(i));
            }
        }
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_multivector(self))
    }
}
