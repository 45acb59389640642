//! Text parser for polynomials such as `p_{41523}p_{51423}-p_{14523}p_{54123}`
//! or `p123(p321+p231) − p213(p132+p312)`.
//!
//! Variable names are compared after dropping `_`, `{` and `}`, so `p_{123}`
//! and `p123` name the same variable.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

pub fn normalize_name(name: &str) -> String {
    name.chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect()
}

/// Longest accepted input, in characters.
pub const MAX_INPUT: usize = 1 << 16;
const MAX_DEPTH: usize = 64;
const MAX_EXPONENT: u32 = 64;

/// Parses a rational `a`, `-a` or `a/b`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Format(format!("bad rational {text:?}"));
    if t.is_empty() || t.len() > 4096 {
        return Err(bad());
    }
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Format(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(n, d))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a HashMap<String, usize>,
    nvars: usize,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Format(format!("{what} at position {}", self.pos))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign = BigRational::one();
        match self.peek() {
            Some('-' | '−') => {
                self.pos += 1;
                sign = -sign;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign));
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = BigRational::one();
                }
                Some('-' | '−') => {
                    self.pos += 1;
                    sign = -BigRational::one();
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.nvars);
        let mut any = false;
        loop {
            match self.peek() {
                Some('*' | '·' | '⋅') if any => {
                    self.pos += 1;
                    continue;
                }
                Some(c) if c.is_ascii_digit() => {
                    let c = self.number()?;
                    acc = acc.scale(&c);
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.err("expected ')'"));
                    }
                    self.pos += 1;
                    let e = self.exponent()?;
                    acc = acc.mul(&inner.pow(e));
                }
                Some(c) if c.is_alphabetic() => {
                    let i = self.variable()?;
                    let e = self.exponent()?;
                    acc = acc.mul(&Polynomial::var(self.nvars, i).pow(e));
                }
                _ => break,
            }
            any = true;
        }
        if !any {
            return Err(self.err("expected a term"));
        }
        Ok(acc)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<BigRational> {
        let n = self.digits();
        let mut text = n;
        if self.pos < self.chars.len() && self.chars[self.pos] == '/' {
            self.pos += 1;
            let d = self.digits();
            if d.is_empty() {
                return Err(self.err("expected denominator"));
            }
            text = format!("{text}/{d}");
        }
        parse_rational(&text)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let d = self.digits();
        let e: u32 = d.parse().map_err(|_| self.err("bad exponent"))?;
        if e > MAX_EXPONENT {
            return Err(self.err("exponent too large"));
        }
        Ok(e)
    }

    fn variable(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_alphabetic() {
            self.pos += 1;
        }
        if self.pos < self.chars.len() && self.chars[self.pos] == '_' {
            self.pos += 1;
            if self.pos < self.chars.len() && self.chars[self.pos] == '{' {
                while self.pos < self.chars.len() && self.chars[self.pos] != '}' {
                    self.pos += 1;
                }
                if self.pos == self.chars.len() {
                    return Err(self.err("unclosed '{'"));
                }
                self.pos += 1;
            } else if self.digits().is_empty() {
                return Err(self.err("expected subscript"));
            }
        } else {
            self.digits();
        }
        let raw: String = self.chars[start..self.pos].iter().collect();
        let name = normalize_name(&raw);
        self.vars
            .get(&name)
            .copied()
            .ok_or(Error::UnknownLabel(raw))
    }
}

/// Parses `text` as a polynomial in the variables `names`.
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial> {
    if text.chars().count() > MAX_INPUT {
        return Err(Error::Format("input too long".into()));
    }
    let vars: HashMap<String, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (normalize_name(n), i))
        .collect();
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars: &vars,
        nvars: names.len(),
        depth: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses an equation `lhs = rhs` as `lhs − rhs`, or a plain polynomial.
pub fn parse_relation(text: &str, names: &[String]) -> Result<Polynomial> {
    match text.split_once('=') {
        Some((l, r)) => Ok(parse_polynomial(l, names)?.sub(&parse_polynomial(r, names)?)),
        None => parse_polynomial(text, names),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomial::Monomial;
    use crate::poly::polynomial::rat;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn binomial_with_braces() {
        let n = names(&["p_{14523}", "p_{41523}", "p_{51423}", "p_{54123}"]);
        let p = parse_polynomial("p_{41523}p_{51423}-p_{14523}p_{54123}", &n).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&Monomial::new(vec![0, 1, 1, 0])), rat(1, 1));
        assert_eq!(p.coeff(&Monomial::new(vec![1, 0, 0, 1])), rat(-1, 1));
    }

    #[test]
    fn products_parentheses_and_unicode_minus() {
        let n = names(&["p123", "p132", "p213", "p231", "p312", "p321"]);
        let p = parse_polynomial("p123(p321+p231) − p213(p132+p312)", &n).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.is_homogeneous());
        let q = parse_polynomial("3/2*p123^2 - p132·p213", &n).unwrap();
        assert_eq!(q.coeff(&Monomial::new(vec![2, 0, 0, 0, 0, 0])), rat(3, 2));
    }

    #[test]
    fn subscripted_single_digits() {
        let n = names(&["t_1", "t_3", "t_{12}"]);
        let p = parse_polynomial("t_1t_3 + t_3 t_{12}", &n).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn errors() {
        let n = names(&["x"]);
        assert!(matches!(parse_polynomial("y", &n), Err(Error::UnknownLabel(_))));
        assert!(parse_polynomial("x +", &n).is_err());
        assert!(parse_polynomial("(x", &n).is_err());
        assert!(parse_polynomial("x^99", &n).is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
    }

    #[test]
    fn equations() {
        let n = names(&["q12", "q23", "q31", "q21", "q32", "q13"]);
        let p = parse_relation("q12q23q31 = q21q32q13", &n).unwrap();
        assert_eq!(p.len(), 2);
    }
}
