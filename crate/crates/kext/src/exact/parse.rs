//! Canonical scalar strings: printing and parsing of tower elements.
//!
//! Printing always produces strings the parser reads back to the identical
//! canonical element, e.g. "3/2", "w+1", "(t^2+1)/(t)".

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{KextError, Result};
use crate::exact::tower::{Base, Elem, FieldTower};

pub fn print_scalar(tower: &FieldTower, e: &Elem) -> String {
    print_elem(tower, tower.levels(), e)
}

/// Prints an element living at an intermediate tower level.
pub fn print_scalar_at(tower: &FieldTower, lv: usize, e: &Elem) -> String {
    print_elem(tower, lv, e)
}

fn print_elem(tower: &FieldTower, lv: usize, e: &Elem) -> String {
    match e {
        Elem::Rat(r) => {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        Elem::Fp(n) => format!("{n}"),
        Elem::Ext(coeffs) => {
            let var = tower.steps()[lv - 1].var();
            print_level_poly(tower, lv - 1, var, coeffs)
        }
        Elem::Frac(num, den) => {
            let var = tower.steps()[lv - 1].var();
            let ns = print_level_poly(tower, lv - 1, var, num);
            if den.len() == 1 && *den.last().unwrap() == tower.one(lv - 1) {
                ns
            } else {
                let ds = print_level_poly(tower, lv - 1, var, den);
                format!("({ns})/({ds})")
            }
        }
    }
}

/// True when the string needs parentheses as a coefficient of a monomial.
fn needs_parens(s: &str) -> bool {
    s.chars()
        .enumerate()
        .any(|(i, c)| matches!(c, '+' | '/') || (c == '-' && i > 0))
}

fn print_level_poly(tower: &FieldTower, lv: usize, var: &str, coeffs: &[Elem]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let one = tower.one(lv);
    let mut terms: Vec<String> = Vec::new();
    for (d, c) in coeffs.iter().enumerate().rev() {
        if tower.is_zero_elem(c) {
            continue;
        }
        let cs = print_elem(tower, lv, c);
        let cs = if needs_parens(&cs) {
            format!("({cs})")
        } else {
            cs
        };
        let term = if d == 0 {
            cs
        } else {
            let mono = if d == 1 {
                var.to_string()
            } else {
                format!("{var}^{d}")
            };
            if *c == one {
                mono
            } else {
                format!("{cs}*{mono}")
            }
        };
        terms.push(term);
    }
    terms.join("+")
}

pub fn print_poly(tower: &FieldTower, var: &str, coeffs: &[Elem]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let lv = tower.levels();
    let one = tower.one(lv);
    let mut terms: Vec<String> = Vec::new();
    for (d, c) in coeffs.iter().enumerate().rev() {
        if tower.is_zero_elem(c) {
            continue;
        }
        let cs = print_elem(tower, lv, c);
        let cs = if needs_parens(&cs) {
            format!("({cs})")
        } else {
            cs
        };
        let term = if d == 0 {
            cs
        } else {
            let mono = if d == 1 {
                var.to_string()
            } else {
                format!("{var}^{d}")
            };
            if *c == one {
                mono
            } else {
                format!("{cs}*{mono}")
            }
        };
        terms.push(term);
    }
    terms.join("+")
}

// ---- parser ----

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let num: String = chars[i..j].iter().collect();
                out.push(Tok::Int(num.parse().map_err(|_| {
                    KextError::Parse(format!("bad integer '{num}'"))
                })?));
                i = j;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                out.push(Tok::Ident(chars[i..j].iter().collect()));
                i = j;
            }
            _ => return Err(KextError::Parse(format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    tower: &'a FieldTower,
    lv: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.tower.add(self.lv, &acc, &rhs);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.tower.sub(self.lv, &acc, &rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Star => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self.tower.mul(self.lv, &acc, &rhs);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self
                        .tower
                        .div(self.lv, &acc, &rhs)
                        .map_err(|_| KextError::Parse("division by zero".into()))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Elem> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            return Ok(self.tower.neg(self.lv, &f));
        }
        let mut base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(n)) => {
                    let exp: u64 = n
                        .try_into()
                        .map_err(|_| KextError::Parse("exponent out of range".into()))?;
                    base = self.tower.pow(self.lv, &base, exp);
                }
                _ => return Err(KextError::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Elem> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(self.tower.from_bigint(self.lv, &n)),
            Some(Tok::Ident(name)) => {
                let lv = self
                    .tower
                    .var_level(&name)
                    .ok_or_else(|| KextError::Parse(format!("unknown variable '{name}'")))?;
                Ok(self.tower.generator(lv, self.lv))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(KextError::Parse("missing ')'".into())),
                }
            }
            t => Err(KextError::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a canonical scalar string at the full level of the tower.
pub fn parse_scalar(tower: &FieldTower, s: &str) -> Result<Elem> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        tower,
        lv: tower.levels(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(KextError::Parse(format!("trailing input in '{s}'")));
    }
    Ok(e)
}

/// Parses a scalar string at a given level (used for minimal-polynomial
/// coefficients while a tower is being built).
pub fn parse_scalar_at(tower: &FieldTower, lv: usize, s: &str) -> Result<Elem> {
    let toks = tokenize(s)?;
    // only variables from levels <= lv are visible
    for t in &toks {
        if let Tok::Ident(name) = t {
            match tower.var_level(name) {
                Some(l) if l <= lv => {}
                _ => {
                    return Err(KextError::Parse(format!(
                        "variable '{name}' not available at this level"
                    )))
                }
            }
        }
    }
    let mut p = Parser {
        toks,
        pos: 0,
        tower,
        lv,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(KextError::Parse(format!("trailing input in '{s}'")));
    }
    Ok(e)
}

pub fn describe_base(b: &Base) -> String {
    match b {
        Base::Rationals => "Q".into(),
        Base::Prime(p) => format!("GF({p})"),
    }
}

/// Human-readable tower description, e.g. "GF(2)(t)(s)".
pub fn describe_tower(t: &FieldTower) -> String {
    let mut s = describe_base(t.base());
    for step in t.steps() {
        s.push_str(&format!("({})", step.var()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::tower::{FieldTower, Step};

    #[test]
    fn rational_roundtrip() {
        let q = FieldTower::rationals();
        for s in ["0", "1", "-5", "3/2", "-7/3"] {
            let e = parse_scalar(&q, s).unwrap();
            assert_eq!(print_scalar(&q, &e), s);
        }
    }

    #[test]
    fn gf4_roundtrip() {
        let gf2 = FieldTower::prime_field(2).unwrap();
        let mp = vec![gf2.one(0), gf2.one(0), gf2.one(0)];
        let t = FieldTower::new_unchecked(
            crate::exact::tower::Base::Prime(2),
            vec![Step::Algebraic {
                var: "w".into(),
                min_poly: mp,
                separable: true,
                verified: true,
            }],
        )
        .unwrap();
        for s in ["0", "1", "w", "w+1"] {
            let e = parse_scalar(&t, s).unwrap();
            assert_eq!(print_scalar(&t, &e), s);
        }
        // w^2 normalizes to w+1
        let e = parse_scalar(&t, "w^2").unwrap();
        assert_eq!(print_scalar(&t, &e), "w+1");
    }

    #[test]
    fn function_field_roundtrip() {
        let t = FieldTower::new_unchecked(
            crate::exact::tower::Base::Prime(2),
            vec![Step::Transcendental { var: "t".into() }],
        )
        .unwrap();
        let e = parse_scalar(&t, "(t^2+1)/(t)").unwrap();
        let s = print_scalar(&t, &e);
        let e2 = parse_scalar(&t, &s).unwrap();
        assert_eq!(e, e2);
        // char 2: t^2+1 = (t+1)^2, no reduction against t
        assert_eq!(s, "(t^2+1)/(t)");
    }
}
