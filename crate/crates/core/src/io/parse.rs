//! Text format for ideals.
//!
//! ```text
//! # comment
//! ring 3 32003 x y z
//! height 2
//! unmixed_radical
//! x*y - z^2
//! 3*x^2 + y*z
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, PrimeField, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub ideal: Ideal,
    pub names: Vec<String>,
    pub height: Option<u32>,
    pub unmixed_radical: bool,
    /// Generator lines, counting repeats and zero polynomials.
    pub raw_generators: usize,
}

pub fn parse_ideal(text: &str) -> Result<IdealFile> {
    parse_ideal_with_prime(text, None)
}

pub fn read_ideal_file(path: &Path) -> Result<IdealFile> {
    parse_ideal(&std::fs::read_to_string(path)?)
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses, optionally replacing the header prime by `prime`.
pub fn parse_ideal_with_prime(text: &str, prime: Option<u64>) -> Result<IdealFile> {
    let mut ring: Option<(Ring, Vec<String>)> = None;
    let mut height = None;
    let mut unmixed_radical = false;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let first = words.next().unwrap_or("");
        match first {
            "ring" => {
                if ring.is_some() {
                    return Err(err(lineno, column_of(raw, first), "second ring header"));
                }
                let n: usize = parse_word(words.next(), lineno, raw, "number of variables")?;
                let p: u64 = parse_word(words.next(), lineno, raw, "characteristic")?;
                let field = PrimeField::new(prime.unwrap_or(p))?;
                let r = Ring::new(n, field)?;
                let mut names: Vec<String> = words.map(str::to_string).collect();
                if names.is_empty() {
                    names = (1..=n).map(|i| format!("x{i}")).collect();
                }
                if names.len() != n {
                    return Err(err(lineno, 1, format!("{} variable names for {n} variables", names.len())));
                }
                for (i, name) in names.iter().enumerate() {
                    if !is_identifier(name) || names[..i].contains(name) {
                        return Err(err(lineno, column_of(raw, name), format!("bad variable name {name:?}")));
                    }
                }
                ring = Some((r, names));
            }
            "height" => {
                height = Some(parse_word(words.next(), lineno, raw, "height")?);
            }
            "unmixed_radical" => match words.next() {
                None | Some("true") => unmixed_radical = true,
                Some("false") => unmixed_radical = false,
                Some(w) => return Err(err(lineno, column_of(raw, w), "expected true or false")),
            },
            _ => {
                let (r, names) = ring.as_ref().ok_or_else(|| err(lineno, 1, "generator before ring header"))?;
                let f = Parser { text: line, pos: 0, line: lineno, ring: *r, names }.polynomial()?;
                if !f.is_homogeneous() {
                    return Err(Error::ParseInhomogeneous { line: lineno });
                }
                gens.push(f);
            }
        }
    }
    let (r, names) = ring.ok_or_else(|| err(1, 1, "missing ring header"))?;
    let raw_generators = gens.len();
    Ok(IdealFile { ideal: Ideal::new(r, gens)?, names, height, unmixed_radical, raw_generators })
}

fn column_of(line: &str, word: &str) -> usize {
    let base = line.as_ptr() as usize;
    let at = word.as_ptr() as usize;
    if at >= base && at <= base + line.len() {
        at - base + 1
    } else {
        line.find(word).map_or(1, |c| c + 1)
    }
}

fn parse_word<T: std::str::FromStr>(w: Option<&str>, line: usize, raw: &str, what: &str) -> Result<T> {
    match w {
        None => Err(err(line, raw.len() + 1, format!("missing {what}"))),
        Some(w) => w.parse().map_err(|_| err(line, column_of(raw, w), format!("bad {what} {w:?}"))),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut c = s.chars();
    c.next().is_some_and(|f| f.is_ascii_alphabetic() || f == '_') && c.all(|x| x.is_ascii_alphanumeric() || x == '_')
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    ring: Ring,
    names: &'a [String],
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c == ' ' || c == '\t' || c == '\r') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn polynomial(mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut terms: Vec<(Monomial, u32)> = Vec::new();
        self.skip_ws();
        let mut sign_next = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((m, if sign_next { field.neg(c) } else { c }));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => sign_next = false,
                Some('-') => sign_next = true,
                Some(ch) => return Err(self.error(format!("unexpected {ch:?}"))),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, MonomialOrder::Grevlex, terms))
    }

    fn term(&mut self) -> Result<(u32, Monomial)> {
        let field = self.ring.field();
        let n = self.ring.nvars();
        let mut coeff = 1u32;
        let mut mono = Monomial::one(n);
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff = field.mul(coeff, self.integer_mod(field)?),
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                        self.pos += 1;
                    }
                    let name = &self.text[start..self.pos];
                    let Some(v) = self.names.iter().position(|x| x == name) else {
                        self.pos = start;
                        return Err(self.error(format!("unknown variable {name:?}")));
                    };
                    self.skip_ws();
                    let mut e = 1u64;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self.integer()?;
                    }
                    let total = mono.exp(v) as u64 + e;
                    if total > u16::MAX as u64 {
                        return Err(self.error("exponent too large"));
                    }
                    mono.set_exp(v, total as u16);
                }
                Some(c) => return Err(self.error(format!("expected a coefficient or variable, found {c:?}"))),
                None => return Err(self.error("unexpected end of line")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((coeff, mono));
            }
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }

    fn integer_mod(&mut self, field: PrimeField) -> Result<u32> {
        let p = field.characteristic() as u64;
        let mut v = 0u64;
        let start = self.pos;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = (v * 10 + d as u64) % p;
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(v as u32)
    }
}
