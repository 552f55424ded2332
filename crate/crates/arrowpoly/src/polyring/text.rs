//! Canonical text form for Laurent polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly     = "0" | term (("+"|"-") term)*
//! term     = ["-"|"+"] coeff? factor ("*" factor)*  |  ["-"|"+"] coeff
//! factor   = var ("^" exponent)?
//! exponent = integer | integer "/2" | integer "/4"
//! var      = "a"|"c"|"A"|"B"|"d"|"t"|"q"|"X"|"Y"|"Z"
//!          | "b[" id "]" | "x[" id "]" | "y[" id "]" | "alpha[" id "]"
//!          | "K[" n "]" | "K[" n "/2]" | identifier
//! ```
//!
//! Terms are printed in ascending graded-lexicographic order and factors in
//! the global variable order, so formatting is a bijection with the value.

use super::{LaurentPoly, Monomial, PolyError, Var};
use num_bigint::BigInt;
use num_traits::{One, Signed};

pub fn format(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, coeff)) in p.terms().enumerate() {
        let neg = coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || mono.is_one() {
            factors.push(abs.to_string());
        }
        for v in mono.vars() {
            let q = mono.exponent(v);
            if q == 4 {
                factors.push(v.to_string());
            } else if q % 4 == 0 {
                factors.push(format!("{v}^{}", q / 4));
            } else if q % 2 == 0 {
                factors.push(format!("{v}^{}/2", q / 2));
            } else {
                factors.push(format!("{v}^{q}/4"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), PolyError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn digits(&mut self) -> Result<String, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn signed_int(&mut self) -> Result<i64, PolyError> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Result<String, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected identifier"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn bracket_id(&mut self) -> Result<String, PolyError> {
        self.expect(b'[')?;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos] != b']' {
            self.pos += 1;
        }
        if self.pos >= self.bytes.len() {
            return Err(self.err("unterminated '['"));
        }
        let id = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .trim()
            .to_string();
        self.pos += 1; // ']'
        if id.is_empty() {
            return Err(self.err("empty bracket index"));
        }
        Ok(id)
    }

    /// Parses a variable; `K[0]` is accepted and returned as `None`
    /// (the constant 1).
    fn var(&mut self) -> Result<Option<Var>, PolyError> {
        let name = self.ident()?;
        let next_is_bracket = self.peek() == Some(b'[');
        let v = match (name.as_str(), next_is_bracket) {
            ("b", true) => Var::BEdge(self.bracket_id()?),
            ("x", true) => Var::XEdge(self.bracket_id()?),
            ("y", true) => Var::YEdge(self.bracket_id()?),
            ("alpha", true) => Var::AlphaEdge(self.bracket_id()?),
            ("K", true) => {
                let id = self.bracket_id()?;
                let doubled = parse_k_index(&id)
                    .ok_or_else(|| self.err(format!("bad K index '{id}'")))?;
                if doubled == 0 {
                    return Ok(None);
                }
                Var::K(doubled)
            }
            ("a", _) => Var::SmallA,
            ("c", _) => Var::SmallC,
            ("A", _) => Var::CapA,
            ("B", _) => Var::CapB,
            ("d", _) => Var::SmallD,
            ("t", _) => Var::SmallT,
            ("q", _) => Var::SmallQ,
            ("X", _) => Var::CapX,
            ("Y", _) => Var::CapY,
            ("Z", _) => Var::CapZ,
            _ => Var::Named(name),
        };
        Ok(Some(v))
    }

    /// Exponent in quarter units.
    fn exponent(&mut self) -> Result<i64, PolyError> {
        let n = self.signed_int()?;
        if self.eat(b'/') {
            let d = self.digits()?;
            match d.as_str() {
                "2" => Ok(n * 2),
                "4" => Ok(n),
                _ => Err(self.err("exponent denominator must be 2 or 4")),
            }
        } else {
            Ok(n * 4)
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), PolyError> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one();
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let d = self.digits()?;
            coeff = d.parse().unwrap();
            if !self.eat(b'*') {
                return Ok((mono, coeff));
            }
        }
        loop {
            let v = self.var()?;
            let q = if self.eat(b'^') { self.exponent()? } else { 4 };
            if let Some(v) = v {
                mono = mono.mul(&Monomial::var_pow(v, q));
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut out = LaurentPoly::zero();
        let mut neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        loop {
            if self.peek().is_none() {
                return Err(self.err("expected term"));
            }
            let (m, c) = self.term()?;
            out.add_term(m, if neg { -c } else { c });
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    neg = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    neg = true;
                }
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
        }
        Ok(out)
    }
}

fn parse_k_index(id: &str) -> Option<u64> {
    if let Some(num) = id.strip_suffix("/2") {
        num.trim().parse::<u64>().ok()
    } else {
        id.trim().parse::<u64>().ok().map(|n| n * 2)
    }
}

pub fn parse(input: &str) -> Result<LaurentPoly, PolyError> {
    let mut p = Parser::new(input);
    if p.peek().is_none() {
        return Err(p.err("empty input"));
    }
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}
