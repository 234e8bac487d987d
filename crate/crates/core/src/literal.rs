//! Text literals for normal forms.
//!
//! ```text
//! S(r,s,t,rho)+        Schubert form, sign + or -
//! C[(a,b,a,b),...]:1   Conway form, optional :0/:1 suffix for delta
//! T(p,q)               torus knot
//! B(alpha,beta)+       2-bridge knot
//! K(alpha,beta;p,q)+   satellite form
//! CF[2a1,...,2am]      2-bridge knot by even continued fraction
//! ```
//! Whitespace is ignored everywhere. Error positions are 1-based character columns.

use std::fmt;

use crate::mcg::{two_bridge_to_conway, ConwayForm};
use crate::schubert::{SchubertForm, Sign};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    Schubert(SchubertForm),
    Conway(ConwayForm),
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Schubert(s) => s.fmt(f),
            Form::Conway(c) => c.fmt(f),
        }
    }
}

/// A named construction that evaluates to a normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Torus { p: i64, q: i64 },
    TwoBridge { alpha: i64, beta: i64, eps: Sign },
    Satellite { alpha: i64, beta: i64, p: i64, q: i64, eps: Sign },
    ContinuedFraction(Vec<i64>),
}

impl Construction {
    pub fn evaluate(&self) -> Result<Form> {
        Ok(match *self {
            Construction::Torus { p, q } => Form::Schubert(SchubertForm::from_torus_knot(p, q)?),
            Construction::TwoBridge { alpha, beta, eps } => {
                Form::Schubert(SchubertForm::from_two_bridge(alpha, beta, eps)?)
            }
            Construction::Satellite { alpha, beta, p, q, eps } => {
                Form::Schubert(SchubertForm::from_satellite(alpha, beta, eps, p, q)?)
            }
            Construction::ContinuedFraction(ref c) => Form::Conway(two_bridge_to_conway(c)?),
        })
    }
}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Self { chars, pos: 0 }
    }

    fn column(&self) -> usize {
        match self.chars.get(self.pos) {
            Some(&(i, _)) => i,
            None => self.chars.last().map_or(1, |&(i, _)| i + 1),
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.column(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek_str(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(k, c)| self.chars.get(self.pos + k).map(|&(_, d)| d) == Some(c))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected '{c}', found '{d}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn int(&mut self) -> Result<(i64, usize)> {
        let col = self.column();
        let mut s = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            s.push(c);
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() || s == "-" || s == "+" {
            return match self.peek() {
                Some(d) => self.err(format!("expected an integer, found '{d}'")),
                None => self.err("expected an integer, found end of input"),
            };
        }
        s.parse()
            .map(|v| (v, col)).map_err(|_| Error::Parse { position: col, message: format!("integer out of range: {s}") })
    }

    /// Comma-separated integers up to (not including) `close`.
    fn int_list(&mut self, close: char) -> Result<Vec<(i64, usize)>> {
        let mut v = vec![self.int()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            v.push(self.int()?);
        }
        self.expect(close)?;
        Ok(v)
    }

    fn sign(&mut self) -> Result<Sign> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Ok(Sign::Plus)
            }
            Some('-') => {
                self.pos += 1;
                Ok(Sign::Minus)
            }
            Some(d) => self.err(format!("expected sign '+' or '-', found '{d}'")),
            None => self.err("expected sign '+' or '-', found end of input"),
        }
    }

    fn end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(d) => self.err(format!("unexpected trailing '{d}'")),
        }
    }
}

fn arity<T>(v: &[T], n: usize, what: &str, col: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Parse {
            position: col,
            message: format!("{what} needs {n} integers, got {}", v.len()),
        });
    }
    Ok(())
}

fn nonneg((v, col): (i64, usize), name: &str) -> Result<u64> {
    if v < 0 {
        return Err(Error::Parse { position: col, message: format!("{name} must be non-negative, got {v}") });
    }
    Ok(v as u64)
}

fn parse_schubert(cur: &mut Cursor) -> Result<SchubertForm> {
    cur.expect('S')?;
    let col = cur.column();
    cur.expect('(')?;
    let v = cur.int_list(')')?;
    arity(&v, 4, "Schubert form", col)?;
    let eps = cur.sign()?;
    Ok(SchubertForm::new(nonneg(v[0], "r")?, nonneg(v[1], "s")?, nonneg(v[2], "t")?, v[3].0, eps))
}

fn parse_conway(cur: &mut Cursor) -> Result<ConwayForm> {
    cur.expect('C')?;
    cur.expect('[')?;
    let mut tuples = Vec::new();
    loop {
        let col = cur.column();
        cur.expect('(')?;
        let v = cur.int_list(')')?;
        arity(&v, 4, "Conway block", col)?;
        tuples.push([v[0].0, v[1].0, v[2].0, v[3].0]);
        match cur.peek() {
            Some(',') => cur.pos += 1,
            _ => break,
        }
    }
    cur.expect(']')?;
    let mut delta = 0;
    if cur.peek() == Some(':') {
        cur.pos += 1;
        let (d, col) = cur.int()?;
        if !(0..=1).contains(&d) {
            return Err(Error::Parse { position: col, message: format!("delta must be 0 or 1, got {d}") });
        }
        delta = d as u8;
    }
    ConwayForm::from_display(&tuples, delta)
}

/// Parse a Schubert or Conway literal.
pub fn parse_form(text: &str) -> Result<Form> {
    let mut cur = Cursor::new(text);
    let form = match cur.peek() {
        Some('S') => Form::Schubert(parse_schubert(&mut cur)?),
        Some('C') => Form::Conway(parse_conway(&mut cur)?),
        Some(d) => return cur.err(format!("expected 'S(' or 'C[', found '{d}'")),
        None => return cur.err("empty input"),
    };
    cur.end()?;
    Ok(form)
}

/// Parse a construction literal (T, B, K or CF).
pub fn parse_construction(text: &str) -> Result<Construction> {
    let mut cur = Cursor::new(text);
    let c = if cur.peek_str("CF") {
        cur.pos += 2;
        cur.expect('[')?;
        Construction::ContinuedFraction(cur.int_list(']')?.into_iter().map(|(v, _)| v).collect())
    } else {
        match cur.peek() {
            Some('T') => {
                cur.pos += 1;
                let col = cur.column();
                cur.expect('(')?;
                let v = cur.int_list(')')?;
                arity(&v, 2, "torus knot", col)?;
                Construction::Torus { p: v[0].0, q: v[1].0 }
            }
            Some('B') => {
                cur.pos += 1;
                let col = cur.column();
                cur.expect('(')?;
                let v = cur.int_list(')')?;
                arity(&v, 2, "2-bridge knot", col)?;
                Construction::TwoBridge { alpha: v[0].0, beta: v[1].0, eps: cur.sign()? }
            }
            Some('K') => {
                cur.pos += 1;
                cur.expect('(')?;
                let (alpha, _) = cur.int()?;
                cur.expect(',')?;
                let (beta, _) = cur.int()?;
                cur.expect(';')?;
                let (p, _) = cur.int()?;
                cur.expect(',')?;
                let (q, _) = cur.int()?;
                cur.expect(')')?;
                Construction::Satellite { alpha, beta, p, q, eps: cur.sign()? }
            }
            Some(d) => return cur.err(format!("expected 'T(', 'B(', 'K(' or 'CF[', found '{d}'")),
            None => return cur.err("empty input"),
        }
    };
    cur.end()?;
    Ok(c)
}

/// Parse either a normal form or a construction, evaluating the latter.
pub fn parse_any(text: &str) -> Result<Form> {
    let first = text.trim_start().chars().next();
    match first {
        Some('S') => parse_form(text),
        Some('C') if !text.trim_start().starts_with("CF") => parse_form(text),
        _ => parse_construction(text)?.evaluate(),
    }
}

/// Parse `p/q` into a canonical lens space.
pub fn parse_lens(text: &str) -> Result<crate::LensSpace> {
    let mut cur = Cursor::new(text);
    let (p, _) = cur.int()?;
    cur.expect('/')?;
    let (q, _) = cur.int()?;
    cur.end()?;
    crate::LensSpace::new(p, q)
}
