//! Text form of coefficients and forms.
//!
//! ```text
//! form    := "0" | ["-"] term ((" + " | " - ") term)*
//! term    := coef " " mono | coef | mono
//! coef    := scalar | [scalar] symbol | [scalar] "(" lincomb ")"
//! lincomb := item ((" + " | " - ") item)*
//! item    := scalar | [scalar] symbol
//! scalar  := digits ["/" digits]
//! symbol  := "x1" .. "x6" | "v1" | "v2" | "v3"
//! mono    := "e" digit+ ("^h" digit)* | "h" digit ("^h" digit)*
//! ```
//!
//! Horizontal generators are written together (`e136`), vertical ones are
//! joined with `^` (`e2^h1`). The printer re-introduces `v3` where it gives
//! fewer `v` terms, so the `(1,1)` generator prints as `v3 e12 - v2 e34 +
//! v1 e56`. Terms come in degree-then-lexicographic order. The parser
//! accepts everything the printer emits.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coefficient::{Coefficient, Symbol};
use super::form::{Form, Mono};
use super::DgaError;
use crate::rational::Q;

/// `(scalar, symbol)` pairs of a coefficient with `v3` restored where useful.
fn display_terms(c: &Coefficient) -> Vec<(Q, Symbol)> {
    let r = c.raw();
    let mut out: Vec<(Q, Symbol)> = Vec::new();
    if !r[0].is_zero() {
        out.push((r[0], Symbol::One));
    }
    for i in 1..=6u8 {
        if !r[usize::from(i)].is_zero() {
            out.push((r[usize::from(i)], Symbol::X(i)));
        }
    }
    let (b1, b2) = c.v_parts();
    // the three ways of writing b1 v1 + b2 v2 using two of v1, v2, v3
    let options = [
        [(b1, Symbol::V(1)), (b2, Symbol::V(2))],
        [(b1 - b2, Symbol::V(1)), (-b2, Symbol::V(3))],
        [(b2 - b1, Symbol::V(2)), (-b1, Symbol::V(3))],
    ];
    let cost = |o: &[(Q, Symbol); 2]| {
        let n = o.iter().filter(|(x, _)| !x.is_zero()).count();
        let s: Q = o.iter().map(|(x, _)| x.abs()).sum();
        (n, s)
    };
    let best = options
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| cost(a).cmp(&cost(b)).then(i.cmp(j)))
        .map(|(_, o)| o)
        .expect("three options");
    out.extend(best.iter().filter(|(x, _)| !x.is_zero()).copied());
    out
}

fn symbol_name(s: Symbol) -> String {
    match s {
        Symbol::One => String::new(),
        Symbol::X(i) => format!("x{i}"),
        Symbol::V(j) => format!("v{j}"),
    }
}

/// `mag` and `name` as one item, e.g. `2x1`, `x1`, `3/2`.
fn item(mag: Q, s: Symbol, show_unit: bool) -> String {
    let name = symbol_name(s);
    if mag.is_one() && (!name.is_empty() || !show_unit) {
        name
    } else {
        format!("{mag}{name}")
    }
}

/// Sign and unsigned text of a coefficient; the text is empty for `1`
/// when `show_unit` is false.
fn coefficient_parts(c: &Coefficient, show_unit: bool) -> (bool, String) {
    let terms = display_terms(c);
    match terms.as_slice() {
        [] => (false, "0".to_string()),
        [(k, s)] => (k.is_negative(), item(k.abs(), *s, show_unit)),
        _ => {
            let num = terms.iter().fold(0i64, |g, (k, _)| g.gcd(k.numer()));
            let den = terms.iter().fold(1i64, |l, (k, _)| l.lcm(k.denom()));
            let negative = terms[0].0.is_negative();
            let g = Q::new(num, den);
            let factor = if negative { -g } else { g };
            let mut inner = String::new();
            for (i, (k, s)) in terms.iter().enumerate() {
                let k = k / factor;
                if i == 0 {
                    inner.push_str(&item(k, *s, true));
                } else {
                    inner.push_str(if k.is_negative() { " - " } else { " + " });
                    inner.push_str(&item(k.abs(), *s, true));
                }
            }
            let prefix = if g.is_one() {
                String::new()
            } else {
                g.to_string()
            };
            (negative, format!("{prefix}({inner})"))
        }
    }
}

pub fn coefficient_to_string(c: &Coefficient) -> String {
    let (neg, s) = coefficient_parts(c, true);
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

pub fn mono_to_string(m: Mono) -> String {
    let mut parts = Vec::new();
    let horizontal: String = m
        .indices()
        .filter(|&i| i < 6)
        .map(|i| char::from(b'1' + i as u8))
        .collect();
    if !horizontal.is_empty() {
        parts.push(format!("e{horizontal}"));
    }
    for i in m.indices().filter(|&i| i >= 6) {
        parts.push(format!("h{}", i - 5));
    }
    parts.join("^")
}

pub fn form_to_string(f: &Form) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (m, c)) in f.terms().enumerate() {
        let mono = mono_to_string(m);
        let (neg, coef) = coefficient_parts(c, mono.is_empty());
        let body = match (coef.is_empty(), mono.is_empty()) {
            (true, _) => mono,
            (false, true) => coef,
            (false, false) => format!("{coef} {mono}"),
        };
        match (n, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: &str) -> DgaError {
        DgaError::Parse {
            input: self.src.to_string(),
            reason: format!("{reason} at byte {}", self.pos),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn scalar(&mut self) -> Result<Option<Q>, DgaError> {
        let Some(n) = self.digits() else {
            return Ok(None);
        };
        let n: i64 = n.parse().map_err(|_| self.err("integer overflow"))?;
        if self.eat(b'/') {
            let d = self
                .digits()
                .ok_or_else(|| self.err("expected denominator"))?;
            let d: i64 = d.parse().map_err(|_| self.err("integer overflow"))?;
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(Q::new(n, d)));
        }
        Ok(Some(Q::from_integer(n)))
    }

    fn index(&mut self, lo: u8, hi: u8) -> Result<u8, DgaError> {
        match self.peek() {
            Some(b) if (b'0' + lo..=b'0' + hi).contains(&b) => {
                self.pos += 1;
                Ok(b - b'0')
            }
            _ => Err(self.err("expected index")),
        }
    }

    fn symbol(&mut self) -> Result<Option<Coefficient>, DgaError> {
        if self.eat(b'x') {
            Ok(Some(Coefficient::x(self.index(1, 6)?)))
        } else if self.eat(b'v') {
            Ok(Some(Coefficient::v(self.index(1, 3)?)))
        } else {
            Ok(None)
        }
    }

    /// `[scalar] [symbol]`, at least one present.
    fn item(&mut self) -> Result<Coefficient, DgaError> {
        let k = self.scalar()?;
        match (k, self.symbol()?) {
            (None, None) => Err(self.err("expected scalar or symbol")),
            (k, Some(s)) => Ok(s.scale(k.unwrap_or_else(Q::one))),
            (Some(k), None) => Ok(Coefficient::constant(k)),
        }
    }

    fn signed_sequence<T>(
        &mut self,
        mut one: impl FnMut(&mut Self) -> Result<T, DgaError>,
        stop: impl Fn(Option<u8>) -> bool,
    ) -> Result<Vec<(bool, T)>, DgaError> {
        let mut out = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            out.push((neg, one(self)?));
            self.skip_ws();
            if stop(self.peek()) {
                return Ok(out);
            }
            neg = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Err(self.err("expected + or -")),
            };
            self.pos += 1;
            self.skip_ws();
        }
    }

    fn coefficient(&mut self) -> Result<Option<Coefficient>, DgaError> {
        let k = self.scalar()?;
        if self.eat(b'(') {
            let items = self.signed_sequence(Self::item, |b| b == Some(b')'))?;
            self.pos += 1;
            let sum =
                items.into_iter().fold(
                    Coefficient::zero(),
                    |acc, (n, c)| if n { acc - c } else { acc + c },
                );
            return Ok(Some(sum.scale(k.unwrap_or_else(Q::one))));
        }
        match (k, self.symbol()?) {
            (k, Some(s)) => Ok(Some(s.scale(k.unwrap_or_else(Q::one)))),
            (Some(k), None) => Ok(Some(Coefficient::constant(k))),
            (None, None) => Ok(None),
        }
    }

    fn mono(&mut self) -> Result<Option<Form>, DgaError> {
        let mut gens = Vec::new();
        match self.peek() {
            Some(b'e') => {
                self.pos += 1;
                let start = gens.len();
                while let Ok(i) = self.index(1, 6) {
                    gens.push(usize::from(i) - 1);
                }
                if gens.len() == start {
                    return Err(self.err("expected e index"));
                }
            }
            Some(b'h') => {
                self.pos += 1;
                gens.push(usize::from(self.index(1, 3)?) + 5);
            }
            _ => return Ok(None),
        }
        while self.eat(b'^') {
            if !self.eat(b'h') {
                return Err(self.err("expected h after ^"));
            }
            gens.push(usize::from(self.index(1, 3)?) + 5);
        }
        Ok(Some(Form::generators(&gens)))
    }

    fn term(&mut self) -> Result<Form, DgaError> {
        let c = self.coefficient()?;
        self.skip_ws();
        let m = self.mono()?;
        match (c, m) {
            (None, None) => Err(self.err("empty term")),
            (c, m) => {
                let m = m.unwrap_or_else(|| Form::constant(Q::one()));
                m.mul_coefficient(&c.unwrap_or_else(Coefficient::one))
            }
        }
    }
}

pub fn parse_coefficient(s: &str) -> Result<Coefficient, DgaError> {
    let f = parse_form(s)?;
    if !f.has_degree(0) {
        return Err(DgaError::Parse {
            input: s.to_string(),
            reason: "not a 0-form".into(),
        });
    }
    Ok(f.coefficient(Mono::ONE))
}

pub fn parse_form(s: &str) -> Result<Form, DgaError> {
    let t = s.trim();
    if t == "0" {
        return Ok(Form::zero());
    }
    let mut p = Parser { src: t, pos: 0 };
    let terms = p.signed_sequence(Parser::term, |b| b.is_none())?;
    Ok(terms.into_iter().fold(
        Form::zero(),
        |acc, (n, f)| if n { acc - f } else { acc + f },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn prints_compact_style() {
        let f = Form::e(&[1, 2])
            .mul_coefficient(&(Coefficient::v(1) - Coefficient::v(2)).scale(qi(4)))
            .unwrap();
        assert_eq!(f.to_string(), "4(v1 - v2) e12");
        let g = Form::e(&[1, 2])
            .mul_coefficient(&(Coefficient::v(1) - Coefficient::v(3)))
            .unwrap();
        assert_eq!(g.to_string(), "(v1 - v3) e12");
        assert_eq!(Form::zero().to_string(), "0");
        assert_eq!(Form::constant(q(-3, 2)).to_string(), "-3/2");
        assert_eq!(
            Form::e(&[2]).wedge(&Form::h(1)).unwrap().to_string(),
            "e2^h1"
        );
        assert_eq!((-Form::e(&[1, 3, 6])).to_string(), "-e136");
    }

    #[test]
    fn parses_printer_output() {
        for s in [
            "4(v1 - v2) e12",
            "x2 e1 - x1 e2",
            "2 e2^h1 - e136",
            "v3 e12 - v2 e34 + v1 e56",
            "-3/2",
            "h1^h2",
            "(1 + x1) e5",
        ] {
            let f = parse_form(s).unwrap();
            assert_eq!(f.to_string(), s, "{s}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_form("e7").is_err());
        assert!(parse_form("x1 e1 +").is_err());
        assert!(parse_form("").is_err());
        assert!(parse_form("1/0 e1").is_err());
    }

    #[test]
    fn unsorted_input_is_normalized() {
        assert_eq!(parse_form("e21").unwrap(), -Form::e(&[1, 2]));
    }
}
